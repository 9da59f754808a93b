#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hexstore/face.hpp"

namespace hexstore {

enum class CellKind : std::uint8_t {
  TwoAxis,    // X and Y drives only
  ThreeAxis,  // X, Y and Z drives
};

constexpr char kind_char(CellKind k) { return k == CellKind::ThreeAxis ? 'T' : 'D'; }

constexpr bool has_drive(CellKind k, Axis a) {
  return a != Axis::Z || k == CellKind::ThreeAxis;
}

struct Dims {
  int nx = 0;
  int ny = 0;
  int nz = 0;

  friend constexpr bool operator==(const Dims&, const Dims&) = default;

  constexpr std::size_t cell_count() const {
    if (nx <= 0 || ny <= 0 || nz <= 0) return 0;
    return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny) *
           static_cast<std::size_t>(nz);
  }
  constexpr std::size_t column_count() const {
    if (nx <= 0 || ny <= 0) return 0;
    return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny);
  }
  constexpr bool contains(const Coord& c) const {
    return c.x >= 0 && c.y >= 0 && c.z >= 0 && c.x < nx && c.y < ny && c.z < nz;
  }
  /// Linear index, x fastest, then y, then z.
  constexpr std::size_t index_of(const Coord& c) const {
    return static_cast<std::size_t>(c.x + nx * (c.y + ny * c.z));
  }
  constexpr Coord coord_of(std::size_t i) const {
    const int v = static_cast<int>(i);
    return {v % nx, (v / nx) % ny, v / (nx * ny)};
  }
};

/// Cost per single cell-to-cell transfer along each axis.
struct MoveWeights {
  double wx = 1.0;
  double wy = 1.0;
  double wz = 1.0;

  friend bool operator==(const MoveWeights&, const MoveWeights&) = default;

  double along(Axis a) const {
    switch (a) {
      case Axis::X: return wx;
      case Axis::Y: return wy;
      case Axis::Z: return wz;
    }
    return 0.0;
  }
  MoveWeights scaled(double factor) const { return {wx * factor, wy * factor, wz * factor}; }
};

/// Throws std::invalid_argument when a weight is negative or not finite.
void check_weights(const MoveWeights& w);

struct WarehouseConfig {
  Dims dims;
  std::vector<CellKind> kinds;  // x fastest, then y, then z
  Coord loading;

  friend bool operator==(const WarehouseConfig&, const WarehouseConfig&) = default;

  static WarehouseConfig uniform(Dims dims, CellKind kind, Coord loading = {});
  /// Builds a config from a 'T'/'D' string. Throws ConfigError on other characters.
  static WarehouseConfig from_kinds_string(Dims dims, std::string_view cells, Coord loading = {});

  std::size_t cell_count() const { return kinds.size(); }
  CellKind kind_at(const Coord& c) const { return kinds[dims.index_of(c)]; }
  std::size_t triaxial_count() const;
  std::string kinds_string() const;
};

struct ValidationIssue {
  std::string field;
  std::string message;
};

/// Returns every violated invariant; empty means valid.
std::vector<ValidationIssue> validate(const WarehouseConfig& cfg);

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<ValidationIssue> issues);
  ConfigError(std::string field, std::string message);
  const std::vector<ValidationIssue>& issues() const { return issues_; }

 private:
  std::vector<ValidationIssue> issues_;
};

/// Throws ConfigError if validate() reports anything.
void require_valid(const WarehouseConfig& cfg);

}  // namespace hexstore
