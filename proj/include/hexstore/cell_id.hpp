#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace hexstore {

/// 96-bit factory-programmed cell identifier, stored big-endian.
class CellId {
 public:
  static constexpr std::size_t kBytes = 12;
  using Bytes = std::array<std::uint8_t, kBytes>;

  constexpr CellId() = default;
  constexpr explicit CellId(const Bytes& bytes) : bytes_(bytes) {}
  /// Identifier whose low 64 bits are `low` and high 32 bits are zero.
  static CellId from_u64(std::uint64_t low);
  /// Parses exactly 24 hex digits (either case). Throws std::invalid_argument.
  static CellId from_hex(std::string_view hex);

  const Bytes& bytes() const { return bytes_; }
  std::string hex() const;

  friend constexpr bool operator==(const CellId&, const CellId&) = default;
  friend constexpr auto operator<=>(const CellId&, const CellId&) = default;

 private:
  Bytes bytes_{};
};

std::ostream& operator<<(std::ostream& os, const CellId& id);

}  // namespace hexstore

template <>
struct std::hash<hexstore::CellId> {
  std::size_t operator()(const hexstore::CellId& id) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::uint8_t b : id.bytes()) {
      h ^= b;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};
