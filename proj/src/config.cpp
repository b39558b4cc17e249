#include "vfpe/config.hpp"

namespace vfpe {

std::optional<Scheme> scheme_from_name(std::string_view name) {
  if (name == "rwp-only" || name == "rwp") return Scheme::RwpOnly;
  if (name == "random") return Scheme::Random;
  if (name == "fresh") return Scheme::Fresh;
  if (name == "ideal") return Scheme::Ideal;
  return std::nullopt;
}

std::string SimConfig::validate() const {
  if (zone.width <= 0.0 || zone.height <= 0.0) return "zone must be positive";
  if (n_swarm < 0) return "n_swarm must be >= 0";
  if (cs < 1) return "cs must be >= 1";
  if (dt <= 0.0) return "dt must be > 0";
  if (duration <= 0.0) return "duration must be > 0";
  if (beacon_interval <= 0.0) return "beacon_interval must be > 0";
  if (radio_range <= 0.0) return "radio_range must be > 0";
  if (!force.valid()) return "force parameters violate zone nesting";
  if (cbr_rate <= 0.0 || cbr_packet <= 0) return "CBR flow must be positive";
  if (!traffic_rwp.valid() || !surveillance_rwp.valid())
    return "RWP speed ranges invalid";
  if (relay_v_max <= 0.0 || node_mass <= 0.0)
    return "relay speed cap and mass must be positive";
  if (broadcast_rate <= 0.0 || unicast_rate <= 0.0)
    return "radio bitrates must be positive";
  if (hello_interval <= 0.0 || tc_interval <= 0.0 || link_hold <= 0.0)
    return "routing timers must be positive";
  if (teardown_intervals < 1) return "teardown_intervals must be >= 1";
  return {};
}

}  // namespace vfpe
