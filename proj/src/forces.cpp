#include "vfpe/forces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace vfpe {

Force interaction_force(Vec2 n_pos, Vec2 p_pos, const ForceParams& params,
                        NodeId n_id, NodeId p_id) {
  Vec2 offset = n_pos - p_pos;
  double d = offset.norm();
  if (d <= 0.0) {
    // Coincident nodes: repel along +x/-x by id order so the pair splits.
    double sign = (n_id != kNoNode && p_id != kNoNode && n_id < p_id) ? -1.0 : 1.0;
    return {Vec2{sign * params.interaction, 0.0}};
  }
  Vec2 away = offset / d;
  if (d < params.d_r) return {away * params.interaction};
  if (d >= params.d_f && d <= params.d_a) return {away * -params.interaction};
  return {};
}

Force friction_force(Vec2 n_vel, bool in_friction_zone,
                     const ForceParams& params) {
  if (!in_friction_zone) return {};
  return {n_vel * -params.cx};
}

Vec2 alignment_target(Vec2 n_pos, Vec2 pred_pos, Vec2 s_pos, Vec2 d_pos) {
  Vec2 np = project_onto_segment_line(n_pos, s_pos, d_pos);
  Vec2 pp = project_onto_segment_line(pred_pos, s_pos, d_pos);
  double pred_to_dest = distance(pp, d_pos);
  if (distance(np, d_pos) < pred_to_dest) return np;
  if (pred_to_dest <= 0.0) return d_pos;  // predecessor collapsed onto D
  Vec2 mirrored = pp * 2.0 - np;
  if (distance(mirrored, d_pos) < pred_to_dest) return mirrored;
  // Mirroring would overshoot past D (or point away from it); fall back to
  // the midpoint of the predecessor's projection and the destination.
  return (pp + d_pos) * 0.5;
}

Force alignment_force(Vec2 n_pos, Vec2 n_vel, Vec2 target,
                      const ForceParams& params) {
  Vec2 offset = target - n_pos;
  double d = offset.norm();
  if (d < params.align_deadband) return {};
  Vec2 toward = offset / d;
  bool closing = n_vel.dot(toward) > 0.0;
  double magnitude = closing ? params.f_a_near : params.f_a_far;
  return {toward * magnitude};
}

Force total_force(const NodeState& node,
                  const std::optional<NeighborSnapshot>& predecessor,
                  const std::optional<NeighborSnapshot>& successor,
                  const std::optional<Vec2>& s_pos,
                  const std::optional<Vec2>& d_pos, const ForceParams& params) {
  Force sum;
  double nearest = std::numeric_limits<double>::infinity();
  for (const auto& neighbor : {predecessor, successor}) {
    if (!neighbor) continue;
    sum += interaction_force(node.pos, neighbor->pos, params, node.id,
                             neighbor->id);
    nearest = std::min(nearest, distance(node.pos, neighbor->pos));
  }
  bool in_friction_zone = nearest >= params.d_r && nearest <= params.d_f;
  sum += friction_force(node.vel, in_friction_zone, params);

  if (predecessor && s_pos && d_pos) {
    try {
      Vec2 target = alignment_target(node.pos, predecessor->pos, *s_pos, *d_pos);
      sum += alignment_force(node.pos, node.vel, target, params);
    } catch (const DegenerateLineError&) {
      // Endpoints coincide in current knowledge: skip alignment this step.
    }
  }
  return sum;
}

NodeState integrate_step(const NodeState& node, Force force, double dt,
                         double v_max, const Rect& zone) {
  NodeState next = node;
  next.vel += force.vector * (dt / node.mass);
  double speed = next.vel.norm();
  if (speed > v_max) next.vel = next.vel * (v_max / speed);
  next.pos += next.vel * dt;
  if (!zone.contains(next.pos)) {
    Vec2 clamped = zone.clamp(next.pos);
    if (clamped.x != next.pos.x) next.vel.x = 0.0;
    if (clamped.y != next.pos.y) next.vel.y = 0.0;
    next.pos = clamped;
  }
  return next;
}

}  // namespace vfpe
