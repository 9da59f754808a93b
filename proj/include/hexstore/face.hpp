#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>

namespace hexstore {

enum class Axis : std::uint8_t { X = 0, Y = 1, Z = 2 };

/// Integer lattice coordinate of a cell, zero-based.
struct Coord {
  int x = 0;
  int y = 0;
  int z = 0;

  friend constexpr bool operator==(const Coord&, const Coord&) = default;
  friend constexpr auto operator<=>(const Coord&, const Coord&) = default;

  constexpr Coord operator+(const Coord& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Coord operator-(const Coord& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Coord operator-() const { return {-x, -y, -z}; }
};

std::ostream& operator<<(std::ostream& os, const Coord& c);

/// Orders coordinates by (z, y, x); used for every deterministic tie-break.
constexpr bool zyx_less(const Coord& a, const Coord& b) {
  if (a.z != b.z) return a.z < b.z;
  if (a.y != b.y) return a.y < b.y;
  return a.x < b.x;
}

/// One of the six faces of a cubic cell, numbered 1..6.
///
/// Every cell uses the same face table: 1 = +X, 2 = -X, 3 = +Y, 4 = -Y,
/// 5 = +Z, 6 = -Z.
class Face {
 public:
  /// Throws std::out_of_range unless 1 <= index <= 6.
  static Face from_index(int index);
  static constexpr std::optional<Face> try_from_index(int index) {
    if (index < 1 || index > 6) return std::nullopt;
    return Face(static_cast<std::uint8_t>(index));
  }

  static constexpr std::array<Face, 6> all() {
    return {Face(1), Face(2), Face(3), Face(4), Face(5), Face(6)};
  }

  constexpr int index() const { return value_; }

  friend constexpr bool operator==(Face, Face) = default;
  friend constexpr auto operator<=>(Face, Face) = default;

 private:
  constexpr explicit Face(std::uint8_t v) : value_(v) {}
  std::uint8_t value_;
};

std::ostream& operator<<(std::ostream& os, Face f);

constexpr Face opposite(Face f) {
  const int i = f.index();
  return *Face::try_from_index(i % 2 == 1 ? i + 1 : i - 1);
}

constexpr Axis axis_of(Face f) { return static_cast<Axis>((f.index() - 1) / 2); }

/// Unit step from a cell to the neighbour behind face `f`.
constexpr Coord direction(Face f) {
  const int sign = f.index() % 2 == 1 ? 1 : -1;
  switch (axis_of(f)) {
    case Axis::X: return {sign, 0, 0};
    case Axis::Y: return {0, sign, 0};
    case Axis::Z: return {0, 0, sign};
  }
  return {};
}

/// Face whose direction equals `step`, if `step` is a unit axis step.
constexpr std::optional<Face> face_toward(const Coord& step) {
  for (Face f : Face::all()) {
    if (direction(f) == step) return f;
  }
  return std::nullopt;
}

}  // namespace hexstore
