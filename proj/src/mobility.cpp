#include "vfpe/mobility.hpp"

namespace vfpe {

RwpLeg rwp_next_leg(Substream& rng, const RwpParams& params) {
  RwpLeg leg;
  leg.waypoint.x = rng.uniform(0.0, params.zone.width);
  leg.waypoint.y = rng.uniform(0.0, params.zone.height);
  leg.speed = rng.uniform(params.v_min, params.v_max);
  return leg;
}

NodeState rwp_step(const NodeState& node, double dt, Substream& rng,
                   const RwpParams& params) {
  NodeState next = node;
  if (!next.waypoint) {
    RwpLeg leg = rwp_next_leg(rng, params);
    next.waypoint = leg.waypoint;
    next.waypoint_speed = leg.speed;
  }
  Vec2 offset = *next.waypoint - next.pos;
  double remaining = offset.norm();
  double travel = next.waypoint_speed * dt;
  if (remaining <= travel) {
    next.pos = *next.waypoint;
    next.vel = offset / dt;  // effective velocity of the arrival step
    next.waypoint.reset();
    next.waypoint_speed = 0.0;
  } else {
    Vec2 dir = offset / remaining;
    next.vel = dir * next.waypoint_speed;
    next.pos += next.vel * dt;
  }
  return next;
}

}  // namespace vfpe
