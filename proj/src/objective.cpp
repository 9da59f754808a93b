#include "hexstore/objective.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "hexstore/load_sim.hpp"

namespace hexstore {

namespace {

constexpr double kNano = 1e9;

std::int64_t to_nano(double v) { return std::llround(v * kNano); }

std::int64_t nano_cost(const CostModel& cm, CellKind kind) {
  std::int64_t c = to_nano(cm.frame) + to_nano(cm.x_drives) + to_nano(cm.y_drives);
  if (kind == CellKind::ThreeAxis) c += to_nano(cm.z_drives);
  return c;
}

}  // namespace

double CostModel::cost_of(CellKind kind) const {
  return static_cast<double>(nano_cost(*this, kind)) / kNano;
}

double warehouse_cost(const WarehouseConfig& cfg, const CostModel& cm) {
  const auto three = static_cast<std::int64_t>(cfg.triaxial_count());
  const auto two = static_cast<std::int64_t>(cfg.kinds.size()) - three;
  const std::int64_t total =
      three * nano_cost(cm, CellKind::ThreeAxis) + two * nano_cost(cm, CellKind::TwoAxis);
  return static_cast<double>(total) / kNano;
}

void check_params(const ObjectiveParams& p) {
  if (!(p.alpha >= 0.0 && p.alpha <= 1.0)) {
    throw std::invalid_argument("alpha must lie in [0, 1]");
  }
  if (!(p.f_speed_norm > 0.0) || !(p.f_cost_norm > 0.0) || !std::isfinite(p.f_speed_norm) ||
      !std::isfinite(p.f_cost_norm)) {
    throw std::invalid_argument("normalizers must be positive and finite");
  }
}

double objective(double f_speed, double f_cost, const ObjectiveParams& p) {
  check_params(p);
  return p.alpha * (f_speed / p.f_speed_norm) + (1.0 - p.alpha) * (f_cost / p.f_cost_norm);
}

std::optional<double> objective(std::optional<double> f_speed, double f_cost,
                                const ObjectiveParams& p) {
  if (!f_speed) {
    check_params(p);
    return std::nullopt;
  }
  return objective(*f_speed, f_cost, p);
}

Evaluation evaluate_with_speed(const WarehouseConfig& cfg, std::optional<double> f_speed,
                               const CostModel& cm, const ObjectiveParams& p) {
  Evaluation e;
  e.f_speed = f_speed;
  e.f_cost = warehouse_cost(cfg, cm);
  e.f_target = objective(f_speed, e.f_cost, p);
  e.triaxial = cfg.triaxial_count();
  e.params = p;
  return e;
}

Evaluation evaluate(const WarehouseConfig& cfg, const MoveWeights& w, const CostModel& cm,
                    const ObjectiveParams& p) {
  require_valid(cfg);
  return evaluate_with_speed(cfg, loading_cost(cfg, w), cm, p);
}

Norms self_norms(const Dims& dims, const Coord& loading, const MoveWeights& w,
                 const CostModel& cm) {
  const auto full = WarehouseConfig::uniform(dims, CellKind::ThreeAxis, loading);
  require_valid(full);
  const auto speed = loading_cost(full, w);
  if (!speed) throw std::logic_error("all-three-axis warehouse is not loadable");
  return {*speed > 0.0 ? *speed : 1.0, warehouse_cost(full, cm)};
}

double round3(double v) { return std::floor(v * 1000.0 + 0.5 + 1e-9) / 1000.0; }

}  // namespace hexstore
