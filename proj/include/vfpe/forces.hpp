#pragma once

#include <optional>

#include "vfpe/core.hpp"
#include "vfpe/geometry.hpp"

namespace vfpe {

/// Virtual-force constants. Zones around a node P are nested discs:
/// repulsion inside d_r, friction in [d_r, d_f], attraction in (d_f, d_a],
/// nothing beyond d_a.
struct ForceParams {
  double d_r = 50.0;       // m, repulsive radius
  double d_f = 75.0;       // m, friction outer radius
  double d_a = 100.0;      // m, attractive outer radius
  double interaction = 1.0;  // N, attraction/repulsion magnitude (I)
  double cx = 2.0;         // N*s/m, viscous friction coefficient
  double f_a_near = 2.0;   // N, alignment force while closing on the target
  double f_a_far = 4.0;    // N, alignment force while receding
  double th_dmin = 40.0;   // m, redundancy-removal threshold
  double th_dmax = 75.0;   // m, chain-extension trigger
  double align_deadband = 1.0;  // m, no alignment force inside this radius

  bool valid() const {
    return 0.0 < d_r && d_r < d_f && d_f < d_a && interaction > 0.0 &&
           cx > 0.0 && 0.0 < f_a_near && f_a_near <= f_a_far &&
           th_dmin < th_dmax && th_dmax <= d_a && align_deadband >= 0.0;
  }
};

/// A force vector in newtons.
struct Force {
  Vec2 vector;
  Force operator+(Force o) const { return {vector + o.vector}; }
  Force& operator+=(Force o) {
    vector += o.vector;
    return *this;
  }
};

/// Attraction/repulsion exerted on the node at n_pos by the peer at p_pos:
/// magnitude I away from the peer inside the repulsive disc, I toward the
/// peer in the attractive annulus, zero in the friction annulus and beyond
/// d_a. Coincident positions take a deterministic direction from the id
/// ordering so that a pair starting on top of each other separates.
Force interaction_force(Vec2 n_pos, Vec2 p_pos, const ForceParams& params,
                        NodeId n_id = kNoNode, NodeId p_id = kNoNode);

/// Viscous friction: -cx * v while inside a peer's friction annulus,
/// zero otherwise.
Force friction_force(Vec2 n_vel, bool in_friction_zone,
                     const ForceParams& params);

/// Realignment position for a chain node at n_pos whose predecessor is at
/// pred_pos, for the endpoint line (s_pos, d_pos). Normally the node's own
/// projection onto the line; when that projection is not strictly closer
/// to the destination than the predecessor's, the symmetric point about
/// the predecessor's projection, pulled back to the midpoint between the
/// predecessor's projection and the destination whenever the mirrored
/// point would itself fail to get closer. The result always lies on the
/// line and (except in the collapsed pred-at-destination case) is strictly
/// closer to the destination than the predecessor's projection.
/// Throws DegenerateLineError when s_pos == d_pos.
Vec2 alignment_target(Vec2 n_pos, Vec2 pred_pos, Vec2 s_pos, Vec2 d_pos);

/// Steering force toward the realignment target: f_a_near when the radial
/// velocity closes on the target, f_a_far otherwise, zero inside the
/// dead-band.
Force alignment_force(Vec2 n_pos, Vec2 n_vel, Vec2 target,
                      const ForceParams& params);

/// Everything a chain node knows about one of its chain neighbors, as
/// taken from its neighbor database (or the ideal view).
struct NeighborSnapshot {
  NodeId id = kNoNode;
  Vec2 pos;
};

/// Sum of the virtual forces on a chain node: interaction with the chain
/// predecessor/successor, friction against the nearest chain neighbor's
/// zone, and alignment toward the endpoint line. Endpoint positions may be
/// absent (unknown yet) in which case alignment is skipped; a degenerate
/// endpoint line also skips alignment for this step.
Force total_force(const NodeState& node,
                  const std::optional<NeighborSnapshot>& predecessor,
                  const std::optional<NeighborSnapshot>& successor,
                  const std::optional<Vec2>& s_pos,
                  const std::optional<Vec2>& d_pos, const ForceParams& params);

/// Explicit Euler step: vel += (F/m) dt clamped to v_max, pos += vel dt
/// clamped to the zone (outward velocity component zeroed at the wall).
NodeState integrate_step(const NodeState& node, Force force, double dt,
                         double v_max, const Rect& zone);

}  // namespace vfpe
