#include "vfpe/beacon.hpp"

#include <cmath>
#include <cstring>

namespace vfpe {

namespace {

constexpr std::uint8_t kFlagChain = 0x01;
constexpr std::uint8_t kFlagInsertion = 0x02;
constexpr std::uint8_t kFlagEndpoints = 0x04;
constexpr std::uint8_t kKnownFlags = kFlagChain | kFlagInsertion | kFlagEndpoints;
constexpr std::uint16_t kWireNoNode = 0xFFFF;

void put_u16(std::byte* p, std::uint16_t v) {
  p[0] = static_cast<std::byte>(v & 0xFF);
  p[1] = static_cast<std::byte>(v >> 8);
}

void put_u32(std::byte* p, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) p[i] = static_cast<std::byte>((v >> (8 * i)) & 0xFF);
}

void put_f32(std::byte* p, float v) {
  std::uint32_t bits;
  std::memcpy(&bits, &v, 4);
  put_u32(p, bits);
}

std::uint16_t get_u16(const std::byte* p) {
  return static_cast<std::uint16_t>(std::to_integer<std::uint16_t>(p[0]) |
                                    (std::to_integer<std::uint16_t>(p[1]) << 8));
}

std::uint32_t get_u32(const std::byte* p) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= std::to_integer<std::uint32_t>(p[i]) << (8 * i);
  return v;
}

float get_f32(const std::byte* p) {
  std::uint32_t bits = get_u32(p);
  float v;
  std::memcpy(&v, &bits, 4);
  return v;
}

std::uint16_t id_to_wire(NodeId id) {
  return id == kNoNode ? kWireNoNode : static_cast<std::uint16_t>(id);
}

NodeId id_from_wire(std::uint16_t w) {
  return w == kWireNoNode ? kNoNode : static_cast<NodeId>(w);
}

std::uint8_t quantize(double v, double extent) {
  double clamped = std::min(std::max(v, 0.0), extent);
  return static_cast<std::uint8_t>(std::lround(clamped / extent * 255.0));
}

}  // namespace

std::uint8_t BeaconCodec::quantize_x(double x) const {
  return quantize(x, zone_.width);
}
std::uint8_t BeaconCodec::quantize_y(double y) const {
  return quantize(y, zone_.height);
}

void BeaconCodec::encode_entry(const BeaconEntry& entry, std::byte* out) const {
  std::memset(out, 0, kBeaconEntryBytes);
  put_u32(out, entry.node);
  out[4] = static_cast<std::byte>(entry.role);
  put_f32(out + 5, static_cast<float>(entry.pos.x));
  put_f32(out + 9, static_cast<float>(entry.pos.y));
  put_f32(out + 13, static_cast<float>(entry.vel.x));
  put_f32(out + 17, static_cast<float>(entry.vel.y));
  put_u32(out + 21, timestamp_to_wire(entry.timestamp));
  std::uint8_t flags = 0;
  if (entry.chain_fields) {
    flags |= kFlagChain;
    if (entry.chain_fields->insertion_requested) flags |= kFlagInsertion;
    put_u16(out + 25, id_to_wire(entry.chain_fields->successor));
    put_u16(out + 27, id_to_wire(entry.chain_fields->predecessor));
    put_u16(out + 29, id_to_wire(entry.chain_fields->destination));
  }
  if (entry.endpoint_fields) {
    flags |= kFlagEndpoints;
    out[32] = static_cast<std::byte>(quantize_x(entry.endpoint_fields->source_pos.x));
    out[33] = static_cast<std::byte>(quantize_y(entry.endpoint_fields->source_pos.y));
    out[34] = static_cast<std::byte>(quantize_x(entry.endpoint_fields->dest_pos.x));
    out[35] = static_cast<std::byte>(quantize_y(entry.endpoint_fields->dest_pos.y));
  }
  out[31] = static_cast<std::byte>(flags);
}

std::vector<std::byte> BeaconCodec::encode(const Beacon& beacon) const {
  std::vector<std::byte> bytes(beacon.entries.size() * kBeaconEntryBytes);
  for (std::size_t i = 0; i < beacon.entries.size(); ++i)
    encode_entry(beacon.entries[i], bytes.data() + i * kBeaconEntryBytes);
  return bytes;
}

std::optional<Beacon> BeaconCodec::decode(const std::byte* data,
                                          std::size_t size) const {
  if (size == 0 || size % kBeaconEntryBytes != 0) return std::nullopt;
  Beacon beacon;
  beacon.entries.reserve(size / kBeaconEntryBytes);
  for (std::size_t off = 0; off < size; off += kBeaconEntryBytes) {
    const std::byte* p = data + off;
    BeaconEntry e;
    e.node = get_u32(p);
    std::uint8_t role = std::to_integer<std::uint8_t>(p[4]);
    if (role > 3) return std::nullopt;
    e.role = static_cast<NodeRole>(role);
    e.pos = {get_f32(p + 5), get_f32(p + 9)};
    e.vel = {get_f32(p + 13), get_f32(p + 17)};
    e.timestamp = timestamp_from_wire(get_u32(p + 21));
    std::uint8_t flags = std::to_integer<std::uint8_t>(p[31]);
    if (flags & ~kKnownFlags) return std::nullopt;
    if (flags & kFlagChain) {
      ChainFields cf;
      cf.successor = id_from_wire(get_u16(p + 25));
      cf.predecessor = id_from_wire(get_u16(p + 27));
      cf.destination = id_from_wire(get_u16(p + 29));
      cf.insertion_requested = (flags & kFlagInsertion) != 0;
      e.chain_fields = cf;
    } else {
      // Absent fields must be zero-filled for the layout to round-trip.
      if ((flags & kFlagInsertion) || get_u16(p + 25) != 0 ||
          get_u16(p + 27) != 0 || get_u16(p + 29) != 0)
        return std::nullopt;
    }
    if (flags & kFlagEndpoints) {
      EndpointFields ef;
      ef.source_pos = {dequantize_x(std::to_integer<std::uint8_t>(p[32])),
                       dequantize_y(std::to_integer<std::uint8_t>(p[33]))};
      ef.dest_pos = {dequantize_x(std::to_integer<std::uint8_t>(p[34])),
                     dequantize_y(std::to_integer<std::uint8_t>(p[35]))};
      e.endpoint_fields = ef;
    } else {
      for (int i = 32; i < 36; ++i)
        if (std::to_integer<std::uint8_t>(p[i]) != 0) return std::nullopt;
    }
    beacon.entries.push_back(std::move(e));
  }
  return beacon;
}

}  // namespace vfpe
