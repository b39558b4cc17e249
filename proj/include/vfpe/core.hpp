#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "vfpe/geometry.hpp"

namespace vfpe {

/// Node identifier, unique and stable for the lifetime of a run.
using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = 0xFFFFFFFFu;

enum class NodeRole : std::uint8_t {
  Traffic = 0,      // T: traffic endpoint, pedestrian RWP
  Surveillance = 1, // S: explorer, fast RWP
  Relay = 2,        // R: chain member, force-driven
  Prospection = 3,  // P: chain apex, force-driven, recruits the next relay
};

inline std::string_view role_name(NodeRole r) {
  switch (r) {
    case NodeRole::Traffic: return "T";
    case NodeRole::Surveillance: return "S";
    case NodeRole::Relay: return "R";
    case NodeRole::Prospection: return "P";
  }
  return "?";
}

/// Legal role transitions: S->R, S->P, P->R, P->S, R->S. Traffic nodes
/// never change role.
inline bool role_transition_legal(NodeRole from, NodeRole to) {
  using R = NodeRole;
  if (from == to) return false;
  switch (from) {
    case R::Surveillance: return to == R::Relay || to == R::Prospection;
    case R::Prospection: return to == R::Relay || to == R::Surveillance;
    case R::Relay: return to == R::Surveillance;
    case R::Traffic: return false;
  }
  return false;
}

/// Chain membership links of one node. Following successor links from the
/// source reaches either the destination (complete chain) or the unique
/// prospection node (forming chain).
struct ChainLinks {
  std::optional<NodeId> predecessor;
  std::optional<NodeId> successor;
  NodeId source = kNoNode;
  NodeId destination = kNoNode;

  bool operator==(const ChainLinks&) const = default;
};

/// Full state of one simulated node.
struct NodeState {
  NodeId id = kNoNode;
  NodeRole role = NodeRole::Surveillance;
  Vec2 pos;
  Vec2 vel;
  double mass = 1.0;  // kg
  std::optional<ChainLinks> chain;
  std::optional<Vec2> waypoint;  // current RWP target
  double waypoint_speed = 0.0;   // m/s for the current leg
};

/// Applies a role transition, rejecting anything outside the lifecycle
/// graph. Returns false (and leaves the node untouched) on an illegal
/// transition.
inline bool apply_role_transition(NodeState& node, NodeRole to) {
  if (!role_transition_legal(node.role, to)) return false;
  node.role = to;
  return true;
}

}  // namespace vfpe
