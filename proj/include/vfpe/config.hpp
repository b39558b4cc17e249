#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vfpe/forces.hpp"
#include "vfpe/geometry.hpp"
#include "vfpe/mobility.hpp"

namespace vfpe {

/// Beacon dissemination scheme.
enum class Scheme : std::uint8_t {
  RwpOnly = 0,  // no beacons, no chains; plain MANET baseline
  Random = 1,   // extra entries picked uniformly from the database
  Fresh = 2,    // extra entries picked by most recent timestamp
  Ideal = 3,    // node knowledge is ground truth; beacons still on the air
};

inline std::string_view scheme_name(Scheme s) {
  switch (s) {
    case Scheme::RwpOnly: return "rwp-only";
    case Scheme::Random: return "random";
    case Scheme::Fresh: return "fresh";
    case Scheme::Ideal: return "ideal";
  }
  return "?";
}

std::optional<Scheme> scheme_from_name(std::string_view name);

/// Full configuration of one run. Defaults follow the standard parameter
/// set: 1000x1000 m zone, 15 swarm nodes, 100 m radio range, 1 s beacons,
/// 10 Kb/s CBR of 100-byte packets.
struct SimConfig {
  Rect zone{1000.0, 1000.0};
  int n_swarm = 15;      // number of S-type nodes at start (N)
  int cs = 10;           // max beacon entries (contact size)
  Scheme scheme = Scheme::Random;
  double beacon_interval = 1.0;  // s
  double dt = 0.1;               // s, mobility integration step
  double duration = 600.0;       // s
  double radio_range = 100.0;    // m
  ForceParams force;
  double cbr_rate = 10'000.0;  // bit/s
  int cbr_packet = 100;        // bytes
  std::uint64_t seed = 1;

  // Mobility classes.
  RwpParams traffic_rwp{0.25, 1.0, {1000.0, 1000.0}, 0.0};
  RwpParams surveillance_rwp{5.0, 10.0, {1000.0, 1000.0}, 0.0};
  double relay_v_max = 10.0;  // m/s, P/R speed cap
  double node_mass = 1.0;     // kg

  // Radio and routing stand-in constants.
  double broadcast_rate = 1e6;    // bit/s (beacons, routing)
  double unicast_rate = 11e6;     // bit/s (data)
  double frame_overhead = 192e-6; // s, fixed per-frame cost
  double propagation_speed = 3e8; // m/s
  double hello_interval = 2.0;    // s
  double tc_interval = 5.0;       // s, topology flood period
  double link_hold = 6.0;         // s, link expiry after last confirmation
  int teardown_intervals = 3;     // missed beacon intervals before teardown

  // Test support: pin traffic endpoints in place / at given positions.
  bool freeze_traffic = false;
  std::optional<Vec2> source_pos;
  std::optional<Vec2> dest_pos;

  int n_nodes() const { return n_swarm + 2; }

  /// Validates type invariants; returns an error message or empty string.
  std::string validate() const;
};

inline void validate_or_throw(const SimConfig& cfg) {
  std::string err = cfg.validate();
  if (!err.empty()) throw std::invalid_argument("invalid config: " + err);
}

}  // namespace vfpe
