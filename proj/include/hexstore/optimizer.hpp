#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hexstore/objective.hpp"

namespace hexstore {

/// Fixed part of a synthesis problem: everything except the cell kinds.
struct Problem {
  Dims dims;
  Coord loading;
  MoveWeights weights;
  CostModel costs;
  ObjectiveParams params;
};

enum class SearchMode { Exhaustive, ColumnScan, Anneal };

struct SearchParams {
  SearchMode mode = SearchMode::Anneal;
  std::uint64_t seed = 0;
  std::size_t iterations = 20000;
  double t0 = 1.0;
  double cooling = 0.995;
  std::size_t k = 2;
  std::size_t max_cells = 12;    // exhaustive size guard
  std::size_t max_columns = 20;  // column scan size guard
  std::optional<std::string> initial;  // anneal start; all three-axis when unset
};

/// Throws std::invalid_argument for out-of-range annealing parameters.
void check_search_params(const SearchParams& sp);

class SearchLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RankedConfig {
  WarehouseConfig config;
  Evaluation evaluation;
};

struct ParetoPoint {
  double f_speed = 0.0;
  double f_cost = 0.0;
  WarehouseConfig config;
};

struct SearchResult {
  std::vector<RankedConfig> best;    // ascending f_target, feasible only
  std::vector<ParetoPoint> pareto;   // ascending f_cost
  std::vector<double> trace;         // best f_target after each annealing step
  std::size_t evaluated = 0;         // distinct configurations evaluated
};

/// Ranking order: f_target, then fewer three-axis cells, then kinds string.
bool ranks_before(const RankedConfig& a, const RankedConfig& b);

struct TradeoffPoint {
  double f_speed = 0.0;
  double f_cost = 0.0;
};

/// Indices of the non-dominated points (both criteria minimized), ordered by
/// ascending f_cost. Of several identical points only the first is kept.
std::vector<std::size_t> pareto_front(std::span<const TradeoffPoint> points);

/// Evaluates all 2^n kind assignments. Throws SearchLimitError above `max_cells`.
SearchResult exhaustive(const Problem& pb, std::size_t k = 2, std::size_t max_cells = 12);

/// Evaluates every assignment in which each vertical column is uniformly one
/// kind. Throws SearchLimitError above `max_columns` columns.
SearchResult column_scan(const Problem& pb, std::size_t k = 2, std::size_t max_columns = 20);

/// Simulated annealing over single-cell flips, deterministic in `sp.seed`.
SearchResult anneal(const Problem& pb, const SearchParams& sp);

/// Dispatches on `sp.mode`.
SearchResult search(const Problem& pb, const SearchParams& sp);

struct SweepRow {
  std::size_t triaxial = 0;
  std::optional<double> f_speed;
  double f_cost = 0.0;
  std::optional<double> f_target;
  std::optional<std::string> kinds;  // absent for externally supplied rows
};

struct SweepSection {
  double alpha = 0.0;
  std::vector<SweepRow> rows;
};

/// Scores fixed (triaxial, f_speed, f_cost) rows under each alpha.
std::vector<SweepSection> sweep_fixed(std::span<const SweepRow> rows,
                                      std::span<const double> alphas, const Norms& norms);

/// Runs the search once per alpha, pools the k best configurations of every
/// run and scores the whole pool under each alpha, most three-axis cells first.
std::vector<SweepSection> sweep_search(const Problem& pb, std::span<const double> alphas,
                                       const SearchParams& sp);

}  // namespace hexstore
