#include "hexstore/load_sim.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <tuple>

namespace hexstore {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool nearly_equal(double a, double b) {
  return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

// Uniform-cost search over the capability graph. Labels are (cost, hops)
// compared lexicographically; remaining ties settle by node index, which is
// (z, y, x) order.
class Router {
 public:
  Router(const WarehouseConfig& cfg, const MoveWeights& w) : graph_(cfg, w) {
    const std::size_t n = graph_.node_count();
    cost_.resize(n);
    hops_.resize(n);
    std::vector<std::size_t> indegree(n + 1, 0);
    for (const MoveEdge& e : graph_.edges()) ++indegree[e.to + 1];
    std::partial_sum(indegree.begin(), indegree.end(), indegree.begin());
    rev_offsets_ = indegree;
    rev_edges_.resize(graph_.edge_count());
    std::vector<std::size_t> fill(rev_offsets_.begin(), rev_offsets_.end() - 1);
    for (const MoveEdge& e : graph_.edges()) rev_edges_[fill[e.to]++] = e;
  }

  const CapabilityGraph& graph() const { return graph_; }
  const std::vector<double>& cost() const { return cost_; }

  /// Forward search from `src`; stops early once `stop` is settled.
  void search(std::size_t src, const std::vector<char>& blocked,
              std::optional<std::size_t> stop = std::nullopt) {
    run(src, blocked, stop, false);
  }

  /// Search on reversed edges, giving the cost of reaching `dst` from every node.
  void search_to(std::size_t dst, const std::vector<char>& blocked) {
    run(dst, blocked, std::nullopt, true);
  }

  std::vector<std::size_t> trace_path(std::size_t src, std::size_t dst,
                                      const std::vector<char>& blocked) {
    search_to(dst, blocked);
    std::vector<std::size_t> path{src};
    std::size_t u = src;
    while (u != dst) {
      std::optional<std::size_t> next;
      for (const MoveEdge& e : graph_.out_edges(u)) {
        const std::size_t v = e.to;
        if (blocked[v] || hops_[v] + 1 != hops_[u] || !std::isfinite(cost_[v])) continue;
        if (nearly_equal(e.weight + cost_[v], cost_[u])) {
          next = v;
          break;
        }
      }
      u = *next;  // the search-tree parent of u always qualifies
      path.push_back(u);
    }
    return path;
  }

 private:
  std::span<const MoveEdge> edges_of(std::size_t u, bool reverse) const {
    if (!reverse) return graph_.out_edges(u);
    return {rev_edges_.data() + rev_offsets_[u], rev_edges_.data() + rev_offsets_[u + 1]};
  }

  void run(std::size_t src, const std::vector<char>& blocked, std::optional<std::size_t> stop,
           bool reverse) {
    std::fill(cost_.begin(), cost_.end(), kInf);
    std::fill(hops_.begin(), hops_.end(), std::numeric_limits<int>::max());
    using Label = std::tuple<double, int, std::size_t>;
    std::priority_queue<Label, std::vector<Label>, std::greater<>> open;
    cost_[src] = 0.0;
    hops_[src] = 0;
    open.emplace(0.0, 0, src);
    while (!open.empty()) {
      auto [c, h, u] = open.top();
      open.pop();
      if (c != cost_[u] || h != hops_[u]) continue;
      if (stop && u == *stop) return;
      for (const MoveEdge& e : edges_of(u, reverse)) {
        const std::size_t v = reverse ? e.from : e.to;
        if (blocked[v]) continue;
        const double nc = c + e.weight;
        const int nh = h + 1;
        if (nc < cost_[v] || (nc == cost_[v] && nh < hops_[v])) {
          cost_[v] = nc;
          hops_[v] = nh;
          open.emplace(nc, nh, v);
        }
      }
    }
  }

  CapabilityGraph graph_;
  std::vector<MoveEdge> rev_edges_;
  std::vector<std::size_t> rev_offsets_;
  std::vector<double> cost_;
  std::vector<int> hops_;
};

LoadingPlan plan_with(Router& router, const WarehouseConfig& cfg) {
  const Dims& d = cfg.dims;
  const std::size_t n = cfg.cell_count();
  const std::size_t load = d.index_of(cfg.loading);
  router.search(load, std::vector<char>(n, 0));
  const std::vector<double>& dist = router.cost();

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (dist[a] != dist[b]) return dist[a] > dist[b];
    if ((a == load) != (b == load)) return b == load;
    return a > b;  // larger index is larger (z, y, x)
  });

  LoadingPlan plan;
  plan.destinations.reserve(n);
  plan.distances.reserve(n);
  for (std::size_t i : order) {
    plan.destinations.push_back(d.coord_of(i));
    plan.distances.push_back(dist[i]);
    if (!std::isfinite(dist[i])) plan.feasible = false;
  }
  return plan;
}

}  // namespace

std::optional<PathResult> shortest_path(const WarehouseConfig& cfg,
                                        const std::set<Coord>& occupied, const Coord& from,
                                        const Coord& to, const MoveWeights& w) {
  Router router(cfg, w);
  const Dims& d = cfg.dims;
  if (!d.contains(from) || !d.contains(to)) {
    throw std::out_of_range("shortest_path endpoint outside the warehouse");
  }
  if (occupied.count(from)) throw std::invalid_argument("shortest_path source is occupied");
  std::vector<char> blocked(cfg.cell_count(), 0);
  for (const Coord& c : occupied) {
    if (d.contains(c)) blocked[d.index_of(c)] = 1;
  }
  const std::size_t src = d.index_of(from);
  const std::size_t dst = d.index_of(to);
  if (blocked[dst]) return std::nullopt;
  router.search(src, blocked, dst);
  const double cost = router.cost()[dst];
  if (!std::isfinite(cost)) return std::nullopt;
  PathResult result;
  result.cost = cost;
  for (std::size_t i : router.trace_path(src, dst, blocked)) result.path.push_back(d.coord_of(i));
  return result;
}

LoadingPlan loading_plan(const WarehouseConfig& cfg, const MoveWeights& w) {
  Router router(cfg, w);
  return plan_with(router, cfg);
}

SimReport simulate_loading(const WarehouseConfig& cfg, const MoveWeights& w) {
  Router router(cfg, w);
  const LoadingPlan plan = plan_with(router, cfg);
  const Dims& d = cfg.dims;
  const std::size_t load = d.index_of(cfg.loading);
  std::vector<char> blocked(cfg.cell_count(), 0);

  SimReport report;
  double total = 0.0;
  for (const Coord& dest : plan.destinations) {
    const std::size_t dst = d.index_of(dest);
    router.search(load, blocked, dst);
    const double cost = router.cost()[dst];
    if (!std::isfinite(cost)) {
      report.blocked = dest;
      return report;
    }
    LoadRecord rec{dest, {}, cost};
    for (std::size_t i : router.trace_path(load, dst, blocked)) rec.path.push_back(d.coord_of(i));
    report.loads.push_back(std::move(rec));
    total += cost;
    blocked[dst] = 1;
  }
  report.f_speed = total;
  return report;
}

std::optional<double> loading_cost(const WarehouseConfig& cfg, const MoveWeights& w) {
  Router router(cfg, w);
  const LoadingPlan plan = plan_with(router, cfg);
  if (!plan.feasible) return std::nullopt;
  const Dims& d = cfg.dims;
  const std::size_t load = d.index_of(cfg.loading);
  std::vector<char> blocked(cfg.cell_count(), 0);
  double total = 0.0;
  for (const Coord& dest : plan.destinations) {
    const std::size_t dst = d.index_of(dest);
    router.search(load, blocked, dst);
    const double cost = router.cost()[dst];
    if (!std::isfinite(cost)) return std::nullopt;
    total += cost;
    blocked[dst] = 1;
  }
  return total;
}

bool all_reachable(const WarehouseConfig& cfg) {
  require_valid(cfg);
  const Dims& d = cfg.dims;
  const std::size_t n = cfg.cell_count();
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{d.index_of(cfg.loading)};
  seen[stack.back()] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    const Coord c = d.coord_of(u);
    for (Face f : Face::all()) {
      const Coord nb = c + direction(f);
      if (!d.contains(nb) || !has_drive(cfg.kinds[u], axis_of(f))) continue;
      const std::size_t v = d.index_of(nb);
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == n;
}

}  // namespace hexstore
