#include "hexstore/capability_graph.hpp"

#include <algorithm>

namespace hexstore {

CapabilityGraph::CapabilityGraph(const WarehouseConfig& cfg, const MoveWeights& w)
    : dims_(cfg.dims) {
  require_valid(cfg);
  check_weights(w);
  const std::size_t n = cfg.cell_count();
  offsets_.reserve(n + 1);
  offsets_.push_back(0);
  for (std::size_t i = 0; i < n; ++i) {
    const Coord here = dims_.coord_of(i);
    const CellKind kind = cfg.kinds[i];
    const std::size_t first = edges_.size();
    for (Face f : Face::all()) {
      const Coord there = here + direction(f);
      if (!dims_.contains(there)) continue;
      const Axis a = axis_of(f);
      if (!has_drive(kind, a)) continue;
      edges_.push_back({i, dims_.index_of(there), f, w.along(a)});
    }
    // Linear index order is (z, y, x) order.
    std::sort(edges_.begin() + static_cast<std::ptrdiff_t>(first), edges_.end(),
              [](const MoveEdge& a, const MoveEdge& b) { return a.to < b.to; });
    offsets_.push_back(edges_.size());
  }
}

bool CapabilityGraph::has_edge(const Coord& from, const Coord& to) const {
  if (!dims_.contains(from) || !dims_.contains(to)) return false;
  const std::size_t target = dims_.index_of(to);
  for (const MoveEdge& e : out_edges(dims_.index_of(from))) {
    if (e.to == target) return true;
  }
  return false;
}

}  // namespace hexstore
