#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "vfpe/core.hpp"

namespace vfpe {

/// Chain-related fields of a beacon entry (present for chain members).
struct ChainFields {
  NodeId successor = kNoNode;
  NodeId predecessor = kNoNode;
  NodeId destination = kNoNode;
  bool insertion_requested = false;

  bool operator==(const ChainFields&) const = default;
};

/// Endpoint-position estimates carried by chain members' entries so that
/// hearing any member is enough to learn where the chain is headed.
struct EndpointFields {
  Vec2 source_pos;
  Vec2 dest_pos;

  bool operator==(const EndpointFields&) const = default;
};

/// One node record inside a beacon. Serializes to exactly 36 bytes with a
/// fixed layout; absent optional fields are zero-filled on the wire.
struct BeaconEntry {
  NodeId node = kNoNode;
  NodeRole role = NodeRole::Surveillance;
  Vec2 pos;
  Vec2 vel;
  double timestamp = 0.0;  // s, generation time of this information
  std::optional<ChainFields> chain_fields;
  std::optional<EndpointFields> endpoint_fields;

  bool operator==(const BeaconEntry&) const = default;
};

/// A beacon message: 1..cs entries, the first always describing the
/// emitting node, no duplicate node ids.
struct Beacon {
  std::vector<BeaconEntry> entries;

  bool operator==(const Beacon&) const = default;
};

inline constexpr std::size_t kBeaconEntryBytes = 36;

/// Wire codec for the fixed 36-byte little-endian entry layout:
///
///   offset  size  field
///   0       4     node id (uint32)
///   4       1     role (0=T 1=S 2=R 3=P)
///   5       8     position x, y (2 x float32)
///   13      8     velocity x, y (2 x float32)
///   21      4     timestamp (uint32, centiseconds)
///   25      6     successor / predecessor / destination ids
///                 (3 x uint16, 0xFFFF = none)
///   31      1     flags (bit0 chain fields, bit1 insertion requested,
///                 bit2 endpoint fields)
///   32      4     source and destination positions, one byte per axis,
///                 quantized over the zone extent
///
/// Quantities carried at reduced precision (float32 positions, centisecond
/// timestamps, byte-grid endpoints) are exactly what receivers consume;
/// decode(encode(x)) is the identity on wire bytes.
class BeaconCodec {
 public:
  explicit BeaconCodec(Rect zone) : zone_(zone) {}

  std::vector<std::byte> encode(const Beacon& beacon) const;
  void encode_entry(const BeaconEntry& entry, std::byte* out) const;

  /// Returns nullopt for malformed input: empty payload, length not a
  /// multiple of 36, unknown role or flag bits, or nonzero bytes in a
  /// zero-filled (absent) field.
  std::optional<Beacon> decode(const std::byte* data, std::size_t size) const;
  std::optional<Beacon> decode(const std::vector<std::byte>& data) const {
    return decode(data.data(), data.size());
  }

  /// Quantize/dequantize one endpoint coordinate (byte grid over the zone).
  std::uint8_t quantize_x(double x) const;
  std::uint8_t quantize_y(double y) const;
  double dequantize_x(std::uint8_t q) const { return q / 255.0 * zone_.width; }
  double dequantize_y(std::uint8_t q) const { return q / 255.0 * zone_.height; }

 private:
  Rect zone_;
};

/// Timestamp wire precision: centiseconds.
inline std::uint32_t timestamp_to_wire(double seconds) {
  return static_cast<std::uint32_t>(seconds * 100.0 + 0.5);
}
inline double timestamp_from_wire(std::uint32_t cs) { return cs / 100.0; }

}  // namespace vfpe
