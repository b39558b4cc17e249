#pragma once

#include "vfpe/core.hpp"
#include "vfpe/rng.hpp"

namespace vfpe {

/// Random Waypoint parameters for one node class.
struct RwpParams {
  double v_min = 5.0;   // m/s
  double v_max = 10.0;  // m/s
  Rect zone{1000.0, 1000.0};
  double pause = 0.0;  // s, kept at zero (continuous motion)

  bool valid() const { return 0.0 < v_min && v_min <= v_max && pause >= 0.0; }
};

struct RwpLeg {
  Vec2 waypoint;
  double speed = 0.0;
};

/// Draws the next leg: waypoint uniform over the zone, speed uniform in
/// [v_min, v_max].
RwpLeg rwp_next_leg(Substream& rng, const RwpParams& params);

/// Advances the node toward its waypoint at its leg speed. Arrival within
/// one step's travel lands exactly on the waypoint (never overshoots) and
/// draws a fresh leg for the following step.
NodeState rwp_step(const NodeState& node, double dt, Substream& rng,
                   const RwpParams& params);

}  // namespace vfpe
