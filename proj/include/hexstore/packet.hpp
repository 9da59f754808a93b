#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hexstore/cell_id.hpp"
#include "hexstore/face.hpp"

namespace hexstore {

struct HopRecord {
  CellId cell;
  Face egress = *Face::try_from_index(1);

  friend bool operator==(const HopRecord&, const HopRecord&) = default;
};

/// Flooding message: the origin record followed by one record per traversed cell.
struct AddressingPacket {
  std::vector<HopRecord> records;

  friend bool operator==(const AddressingPacket&, const AddressingPacket&) = default;

  const CellId& origin() const { return records.front().cell; }
  bool contains(const CellId& id) const;
};

class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace wire {

inline constexpr std::uint8_t kFrameStart = 0x7E;
inline constexpr std::uint8_t kTypeAddressing = 0x01;
inline constexpr std::size_t kRecordBytes = 13;
inline constexpr std::size_t kMaxRecords = 255;

/// CRC-16/CCITT-FALSE: poly 0x1021, init 0xFFFF, no reflection, no final xor.
std::uint16_t crc16_ccitt_false(std::span<const std::uint8_t> data);

/// Frame layout: 0x7E, type, record count, records (12-byte id + face byte),
/// CRC over everything after 0x7E, big-endian. Throws ProtocolError for empty
/// packets or more than 255 records.
std::vector<std::uint8_t> encode(const AddressingPacket& pkt);

/// Inverse of encode(). Throws ProtocolError describing the first defect.
AddressingPacket decode(std::span<const std::uint8_t> frame);

}  // namespace wire

}  // namespace hexstore
