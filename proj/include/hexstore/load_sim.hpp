#pragma once

#include <optional>
#include <set>
#include <vector>

#include "hexstore/capability_graph.hpp"

namespace hexstore {

struct PathResult {
  std::vector<Coord> path;  // from source to target inclusive
  double cost = 0.0;
};

/// Least-cost route on the capability graph that avoids `occupied` cells.
///
/// Among equal-cost routes the one taken is built greedily from the source,
/// always stepping to the (z, y, x)-smallest successor that still lies on a
/// least-cost route. Returns nullopt when the target cannot be reached.
std::optional<PathResult> shortest_path(const WarehouseConfig& cfg,
                                        const std::set<Coord>& occupied, const Coord& from,
                                        const Coord& to, const MoveWeights& w);

/// Farthest-first fill order from the loading cell.
struct LoadingPlan {
  std::vector<Coord> destinations;
  std::vector<double> distances;  // empty-warehouse distance, +inf if unreachable
  bool feasible = true;
};

/// All cells by non-increasing empty-warehouse distance from the loading cell;
/// ties go to larger z, then y, then x, and the loading cell is always last.
/// Cells unreachable even in the empty warehouse sort first and mark the plan
/// infeasible.
LoadingPlan loading_plan(const WarehouseConfig& cfg, const MoveWeights& w);

struct LoadRecord {
  Coord dest;
  std::vector<Coord> path;
  double cost = 0.0;
};

struct SimReport {
  std::vector<LoadRecord> loads;  // completed loads, in plan order
  std::optional<double> f_speed;  // nullopt when infeasible
  std::optional<Coord> blocked;   // first destination that could not be reached

  bool feasible() const { return f_speed.has_value(); }
};

/// Loads an empty warehouse one load at a time following loading_plan().
/// Each load is routed from the loading cell around every load already
/// placed. The run stops as infeasible at the first unreachable destination.
SimReport simulate_loading(const WarehouseConfig& cfg, const MoveWeights& w);

/// f_speed of simulate_loading() without recording paths.
std::optional<double> loading_cost(const WarehouseConfig& cfg, const MoveWeights& w);

/// True when every cell is reachable from the loading cell in the empty warehouse.
bool all_reachable(const WarehouseConfig& cfg);

}  // namespace hexstore
