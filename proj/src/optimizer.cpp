#include "hexstore/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <set>

#include "hexstore/load_sim.hpp"

namespace hexstore {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Candidate {
  std::string kinds;
  std::optional<double> f_speed;
  double f_cost = 0.0;
  std::size_t triaxial = 0;
  double f_target = kInf;  // +inf when infeasible
};

bool candidate_before(const Candidate& a, const Candidate& b) {
  if (a.f_target != b.f_target) return a.f_target < b.f_target;
  if (a.triaxial != b.triaxial) return a.triaxial < b.triaxial;
  return a.kinds < b.kinds;
}

WarehouseConfig config_of(const Problem& pb, const std::string& kinds) {
  return WarehouseConfig::from_kinds_string(pb.dims, kinds, pb.loading);
}

Candidate score(const Problem& pb, std::string kinds) {
  Candidate c;
  const WarehouseConfig cfg = config_of(pb, kinds);
  c.f_speed = loading_cost(cfg, pb.weights);
  c.f_cost = warehouse_cost(cfg, pb.costs);
  c.triaxial = cfg.triaxial_count();
  if (c.f_speed) c.f_target = objective(*c.f_speed, c.f_cost, pb.params);
  c.kinds = std::move(kinds);
  return c;
}

void check_problem(const Problem& pb) {
  require_valid(WarehouseConfig::uniform(pb.dims, CellKind::TwoAxis, pb.loading));
  check_weights(pb.weights);
  check_params(pb.params);
}

SearchResult finish(const Problem& pb, std::vector<Candidate> pool, std::size_t k) {
  SearchResult result;
  result.evaluated = pool.size();
  std::erase_if(pool, [](const Candidate& c) { return !c.f_speed; });

  const std::size_t top = std::min(k, pool.size());
  std::partial_sort(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(top), pool.end(),
                    candidate_before);
  for (std::size_t i = 0; i < top; ++i) {
    const WarehouseConfig cfg = config_of(pb, pool[i].kinds);
    result.best.push_back({cfg, evaluate_with_speed(cfg, pool[i].f_speed, pb.costs, pb.params)});
  }

  // Identical trade-off points keep the cheapest-looking representative.
  std::sort(pool.begin(), pool.end(), [](const Candidate& a, const Candidate& b) {
    if (a.triaxial != b.triaxial) return a.triaxial < b.triaxial;
    return a.kinds < b.kinds;
  });
  std::vector<TradeoffPoint> points;
  points.reserve(pool.size());
  for (const Candidate& c : pool) points.push_back({*c.f_speed, c.f_cost});
  for (std::size_t i : pareto_front(points)) {
    result.pareto.push_back({points[i].f_speed, points[i].f_cost, config_of(pb, pool[i].kinds)});
  }
  return result;
}

std::string kinds_from_mask(std::size_t n, std::uint64_t mask) {
  std::string s(n, 'D');
  for (std::size_t i = 0; i < n; ++i) {
    if (mask >> i & 1U) s[i] = 'T';
  }
  return s;
}

}  // namespace

void check_search_params(const SearchParams& sp) {
  if (!(sp.t0 > 0.0) || !std::isfinite(sp.t0)) {
    throw std::invalid_argument("initial temperature must be positive");
  }
  if (!(sp.cooling > 0.0 && sp.cooling < 1.0)) {
    throw std::invalid_argument("cooling factor must lie in (0, 1)");
  }
  if (sp.k == 0) throw std::invalid_argument("result count k must be at least 1");
}

bool ranks_before(const RankedConfig& a, const RankedConfig& b) {
  const double ta = a.evaluation.f_target.value_or(kInf);
  const double tb = b.evaluation.f_target.value_or(kInf);
  if (ta != tb) return ta < tb;
  if (a.evaluation.triaxial != b.evaluation.triaxial) {
    return a.evaluation.triaxial < b.evaluation.triaxial;
  }
  return a.config.kinds_string() < b.config.kinds_string();
}

std::vector<std::size_t> pareto_front(std::span<const TradeoffPoint> points) {
  std::vector<std::size_t> order(points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (points[a].f_cost != points[b].f_cost) return points[a].f_cost < points[b].f_cost;
    return points[a].f_speed < points[b].f_speed;
  });
  std::vector<std::size_t> front;
  double best_speed = kInf;
  for (std::size_t i : order) {
    // Sorted by cost, so a point survives only by being strictly faster than
    // everything at most as expensive.
    if (points[i].f_speed < best_speed) {
      front.push_back(i);
      best_speed = points[i].f_speed;
    }
  }
  return front;
}

SearchResult exhaustive(const Problem& pb, std::size_t k, std::size_t max_cells) {
  check_problem(pb);
  const std::size_t n = pb.dims.cell_count();
  if (n > max_cells || n >= 63) {
    throw SearchLimitError("exhaustive search is limited to " + std::to_string(max_cells) +
                           " cells, warehouse has " + std::to_string(n));
  }
  std::vector<Candidate> pool;
  const std::uint64_t total = std::uint64_t{1} << n;
  pool.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    pool.push_back(score(pb, kinds_from_mask(n, mask)));
  }
  return finish(pb, std::move(pool), k);
}

SearchResult column_scan(const Problem& pb, std::size_t k, std::size_t max_columns) {
  check_problem(pb);
  const Dims& d = pb.dims;
  const std::size_t cols = d.column_count();
  if (cols > max_columns || cols >= 63) {
    throw SearchLimitError("column scan is limited to " + std::to_string(max_columns) +
                           " columns, warehouse has " + std::to_string(cols));
  }
  const std::size_t n = d.cell_count();
  std::vector<Candidate> pool;
  const std::uint64_t total = std::uint64_t{1} << cols;
  pool.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::string kinds(n, 'D');
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> (i % cols) & 1U) kinds[i] = 'T';
    }
    pool.push_back(score(pb, std::move(kinds)));
  }
  return finish(pb, std::move(pool), k);
}

SearchResult anneal(const Problem& pb, const SearchParams& sp) {
  check_problem(pb);
  check_search_params(sp);
  const std::size_t n = pb.dims.cell_count();
  std::string state = sp.initial.value_or(std::string(n, 'T'));
  require_valid(config_of(pb, state));

  std::map<std::string, Candidate> seen;
  auto lookup = [&](const std::string& kinds) -> const Candidate& {
    auto it = seen.find(kinds);
    if (it == seen.end()) it = seen.emplace(kinds, score(pb, kinds)).first;
    return it->second;
  };

  // Portable draws: raw 64-bit engine output only, no std distributions.
  std::mt19937_64 rng(sp.seed);
  auto uniform01 = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  double current = lookup(state).f_target;
  double best = current;
  double temperature = sp.t0;
  std::vector<double> trace;
  trace.reserve(sp.iterations + 1);
  trace.push_back(best);

  for (std::size_t it = 0; it < sp.iterations; ++it) {
    const std::size_t cell = static_cast<std::size_t>(rng() % n);
    std::string next = state;
    next[cell] = next[cell] == 'T' ? 'D' : 'T';
    const double proposed = lookup(next).f_target;

    bool accept;
    if (!std::isfinite(current)) {
      accept = true;
    } else if (!std::isfinite(proposed)) {
      accept = false;
    } else {
      const double delta = proposed - current;
      accept = delta <= 0.0 || uniform01() < std::exp(-delta / temperature);
    }
    if (accept) {
      state = std::move(next);
      current = proposed;
    }
    best = std::min(best, current);
    temperature *= sp.cooling;
    trace.push_back(best);
  }

  std::vector<Candidate> pool;
  pool.reserve(seen.size());
  for (auto& [_, c] : seen) pool.push_back(std::move(c));
  SearchResult result = finish(pb, std::move(pool), sp.k);
  result.trace = std::move(trace);
  return result;
}

SearchResult search(const Problem& pb, const SearchParams& sp) {
  check_search_params(sp);
  switch (sp.mode) {
    case SearchMode::Exhaustive: return exhaustive(pb, sp.k, sp.max_cells);
    case SearchMode::ColumnScan: return column_scan(pb, sp.k, sp.max_columns);
    case SearchMode::Anneal: return anneal(pb, sp);
  }
  throw std::invalid_argument("unknown search mode");
}

std::vector<SweepSection> sweep_fixed(std::span<const SweepRow> rows,
                                      std::span<const double> alphas, const Norms& norms) {
  std::vector<SweepSection> out;
  for (double alpha : alphas) {
    const ObjectiveParams p{alpha, norms.speed, norms.cost};
    check_params(p);
    SweepSection section{alpha, {}};
    for (const SweepRow& r : rows) {
      SweepRow scored = r;
      scored.f_target = objective(r.f_speed, r.f_cost, p);
      section.rows.push_back(std::move(scored));
    }
    out.push_back(std::move(section));
  }
  return out;
}

std::vector<SweepSection> sweep_search(const Problem& pb, std::span<const double> alphas,
                                       const SearchParams& sp) {
  if (alphas.empty()) throw std::invalid_argument("sweep needs at least one alpha");
  std::vector<SweepRow> pool;
  std::set<std::string> pooled;
  for (double alpha : alphas) {
    Problem run = pb;
    run.params.alpha = alpha;
    for (const RankedConfig& rc : search(run, sp).best) {
      std::string kinds = rc.config.kinds_string();
      if (!pooled.insert(kinds).second) continue;
      pool.push_back({rc.evaluation.triaxial, rc.evaluation.f_speed, rc.evaluation.f_cost,
                      std::nullopt, std::move(kinds)});
    }
  }
  std::sort(pool.begin(), pool.end(), [](const SweepRow& a, const SweepRow& b) {
    if (a.triaxial != b.triaxial) return a.triaxial > b.triaxial;
    return *a.kinds < *b.kinds;
  });
  return sweep_fixed(pool, alphas, {pb.params.f_speed_norm, pb.params.f_cost_norm});
}

}  // namespace hexstore
