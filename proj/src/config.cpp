#include "hexstore/config.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hexstore {

namespace {

std::string join_issues(const std::vector<ValidationIssue>& issues) {
  std::ostringstream os;
  for (std::size_t i = 0; i < issues.size(); ++i) {
    if (i) os << "; ";
    os << issues[i].field << ": " << issues[i].message;
  }
  return os.str();
}

}  // namespace

void check_weights(const MoveWeights& w) {
  for (double v : {w.wx, w.wy, w.wz}) {
    if (!std::isfinite(v) || v < 0.0) {
      throw std::invalid_argument("move weights must be finite and nonnegative");
    }
  }
}

WarehouseConfig WarehouseConfig::uniform(Dims dims, CellKind kind, Coord loading) {
  return {dims, std::vector<CellKind>(dims.cell_count(), kind), loading};
}

WarehouseConfig WarehouseConfig::from_kinds_string(Dims dims, std::string_view cells,
                                                   Coord loading) {
  WarehouseConfig cfg{dims, {}, loading};
  cfg.kinds.reserve(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    switch (cells[i]) {
      case 'T': cfg.kinds.push_back(CellKind::ThreeAxis); break;
      case 'D': cfg.kinds.push_back(CellKind::TwoAxis); break;
      default:
        throw ConfigError("cells", "unexpected character '" + std::string(1, cells[i]) +
                                         "' at position " + std::to_string(i));
    }
  }
  return cfg;
}

std::size_t WarehouseConfig::triaxial_count() const {
  return static_cast<std::size_t>(std::count(kinds.begin(), kinds.end(), CellKind::ThreeAxis));
}

std::string WarehouseConfig::kinds_string() const {
  std::string s;
  s.reserve(kinds.size());
  for (CellKind k : kinds) s.push_back(kind_char(k));
  return s;
}

std::vector<ValidationIssue> validate(const WarehouseConfig& cfg) {
  std::vector<ValidationIssue> issues;
  const Dims& d = cfg.dims;
  if (d.nx <= 0 || d.ny <= 0 || d.nz <= 0) {
    issues.push_back({"dims", "all dimensions must be positive"});
  }
  if (cfg.kinds.size() != d.cell_count()) {
    issues.push_back({"kinds length", "expected " + std::to_string(d.cell_count()) +
                                          " cells, got " + std::to_string(cfg.kinds.size())});
  }
  if (!d.contains(cfg.loading)) {
    std::ostringstream os;
    os << "loading out of bounds: " << cfg.loading;
    issues.push_back({"loading", os.str()});
  }
  return issues;
}

ConfigError::ConfigError(std::vector<ValidationIssue> issues)
    : std::runtime_error("invalid warehouse config: " + join_issues(issues)),
      issues_(std::move(issues)) {}

ConfigError::ConfigError(std::string field, std::string message)
    : ConfigError(std::vector<ValidationIssue>{{std::move(field), std::move(message)}}) {}

void require_valid(const WarehouseConfig& cfg) {
  auto issues = validate(cfg);
  if (!issues.empty()) throw ConfigError(std::move(issues));
}

}  // namespace hexstore
