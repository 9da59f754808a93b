#include "hexstore/packet.hpp"

#include <algorithm>

namespace hexstore {

bool AddressingPacket::contains(const CellId& id) const {
  return std::any_of(records.begin(), records.end(),
                     [&](const HopRecord& r) { return r.cell == id; });
}

namespace wire {

std::uint16_t crc16_ccitt_false(std::span<const std::uint8_t> data) {
  std::uint16_t crc = 0xFFFF;
  for (std::uint8_t byte : data) {
    crc ^= static_cast<std::uint16_t>(byte) << 8;
    for (int bit = 0; bit < 8; ++bit) {
      crc = (crc & 0x8000) ? static_cast<std::uint16_t>((crc << 1) ^ 0x1021)
                           : static_cast<std::uint16_t>(crc << 1);
    }
  }
  return crc;
}

std::vector<std::uint8_t> encode(const AddressingPacket& pkt) {
  if (pkt.records.empty()) throw ProtocolError("cannot encode an empty addressing packet");
  if (pkt.records.size() > kMaxRecords) {
    throw ProtocolError("addressing packet exceeds 255 records");
  }
  std::vector<std::uint8_t> out;
  out.reserve(3 + pkt.records.size() * kRecordBytes + 2);
  out.push_back(kFrameStart);
  out.push_back(kTypeAddressing);
  out.push_back(static_cast<std::uint8_t>(pkt.records.size()));
  for (const HopRecord& r : pkt.records) {
    out.insert(out.end(), r.cell.bytes().begin(), r.cell.bytes().end());
    out.push_back(static_cast<std::uint8_t>(r.egress.index()));
  }
  const std::uint16_t crc = crc16_ccitt_false(std::span(out).subspan(1));
  out.push_back(static_cast<std::uint8_t>(crc >> 8));
  out.push_back(static_cast<std::uint8_t>(crc & 0xff));
  return out;
}

AddressingPacket decode(std::span<const std::uint8_t> frame) {
  if (frame.size() < 5) throw ProtocolError("frame too short");
  if (frame[0] != kFrameStart) throw ProtocolError("missing frame start byte");
  if (frame[1] != kTypeAddressing) {
    throw ProtocolError("unknown frame type " + std::to_string(frame[1]));
  }
  const std::size_t count = frame[2];
  if (count == 0) throw ProtocolError("addressing frame has no records");
  if (frame.size() != 3 + count * kRecordBytes + 2) {
    throw ProtocolError("frame length does not match record count");
  }
  const std::size_t body_end = frame.size() - 2;
  const std::uint16_t expected = crc16_ccitt_false(frame.subspan(1, body_end - 1));
  const std::uint16_t actual =
      static_cast<std::uint16_t>((frame[body_end] << 8) | frame[body_end + 1]);
  if (expected != actual) throw ProtocolError("CRC mismatch");

  AddressingPacket pkt;
  pkt.records.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto rec = frame.subspan(3 + i * kRecordBytes, kRecordBytes);
    CellId::Bytes id{};
    std::copy_n(rec.begin(), CellId::kBytes, id.begin());
    auto face = Face::try_from_index(rec[CellId::kBytes]);
    if (!face) throw ProtocolError("record " + std::to_string(i) + " has an invalid face");
    pkt.records.push_back({CellId(id), *face});
  }
  return pkt;
}

}  // namespace wire

}  // namespace hexstore
