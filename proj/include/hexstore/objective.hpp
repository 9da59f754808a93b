#pragma once

#include <optional>

#include "hexstore/config.hpp"

namespace hexstore {

/// Module cost breakdown in conventional units (c.u.).
struct CostModel {
  double frame = 0.2;
  double x_drives = 0.2;
  double y_drives = 0.2;
  double z_drives = 0.4;

  /// Cost of one module, rounded to a whole number of nano-units.
  double cost_of(CellKind kind) const;
};

/// Sum of module costs. Accumulated in integer nano-units so decimal inputs
/// such as 0.6 add up without drift.
double warehouse_cost(const WarehouseConfig& cfg, const CostModel& cm);

struct ObjectiveParams {
  double alpha = 0.5;
  double f_speed_norm = 1.0;
  double f_cost_norm = 1.0;
};

/// Throws std::invalid_argument unless 0 <= alpha <= 1 and both norms are > 0.
void check_params(const ObjectiveParams& p);

/// alpha * f_speed / f_speed_norm + (1 - alpha) * f_cost / f_cost_norm
double objective(double f_speed, double f_cost, const ObjectiveParams& p);

/// Infeasible (nullopt) speed propagates to an infeasible target.
std::optional<double> objective(std::optional<double> f_speed, double f_cost,
                                const ObjectiveParams& p);

struct Evaluation {
  std::optional<double> f_speed;
  double f_cost = 0.0;
  std::optional<double> f_target;
  std::size_t triaxial = 0;
  ObjectiveParams params;

  bool feasible() const { return f_target.has_value(); }
  friend bool operator==(const Evaluation& a, const Evaluation& b) {
    return a.f_speed == b.f_speed && a.f_cost == b.f_cost && a.f_target == b.f_target &&
           a.triaxial == b.triaxial && a.params.alpha == b.params.alpha &&
           a.params.f_speed_norm == b.params.f_speed_norm &&
           a.params.f_cost_norm == b.params.f_cost_norm;
  }
};

Evaluation evaluate(const WarehouseConfig& cfg, const MoveWeights& w, const CostModel& cm,
                    const ObjectiveParams& p);

/// Builds an Evaluation from an already known speed value.
Evaluation evaluate_with_speed(const WarehouseConfig& cfg, std::optional<double> f_speed,
                               const CostModel& cm, const ObjectiveParams& p);

struct Norms {
  double speed = 1.0;
  double cost = 1.0;
};

/// Normalizers taken from the all-three-axis warehouse of the same size.
/// A zero speed (single-cell warehouse) is replaced by 1 so the ratio stays
/// defined; the speed term is zero for every configuration in that case.
Norms self_norms(const Dims& dims, const Coord& loading, const MoveWeights& w,
                 const CostModel& cm);

/// Display rounding: 3 decimals, halves rounded up.
double round3(double v);

}  // namespace hexstore
