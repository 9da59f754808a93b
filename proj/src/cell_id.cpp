#include "hexstore/cell_id.hpp"

#include <stdexcept>

namespace hexstore {

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

CellId CellId::from_u64(std::uint64_t low) {
  Bytes b{};
  for (std::size_t i = 0; i < 8; ++i) {
    b[kBytes - 1 - i] = static_cast<std::uint8_t>(low >> (8 * i));
  }
  return CellId(b);
}

CellId CellId::from_hex(std::string_view hex) {
  if (hex.size() != 2 * kBytes) {
    throw std::invalid_argument("cell id must be 24 hex digits, got '" + std::string(hex) + "'");
  }
  Bytes b{};
  for (std::size_t i = 0; i < kBytes; ++i) {
    const int hi = hex_value(hex[2 * i]);
    const int lo = hex_value(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) {
      throw std::invalid_argument("cell id has a non-hex digit: '" + std::string(hex) + "'");
    }
    b[i] = static_cast<std::uint8_t>(hi * 16 + lo);
  }
  return CellId(b);
}

std::string CellId::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  s.reserve(2 * kBytes);
  for (std::uint8_t v : bytes_) {
    s.push_back(kDigits[v >> 4]);
    s.push_back(kDigits[v & 0x0f]);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const CellId& id) { return os << id.hex(); }

}  // namespace hexstore
