#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hexstore/config.hpp"

namespace hexstore {

struct MoveEdge {
  std::size_t from = 0;  // linear cell index
  std::size_t to = 0;
  Face face = Face::from_index(1);
  double weight = 0.0;
};

/// Directed movement graph of a warehouse.
///
/// An edge u->v exists when u and v share a face and either the shared axis is
/// X or Y, or it is Z and u is a three-axis cell. Only the source cell of a
/// vertical transfer needs Z drives, for both up and down moves. Out-edges of
/// each node are stored in ascending (z, y, x) order of their targets.
class CapabilityGraph {
 public:
  CapabilityGraph(const WarehouseConfig& cfg, const MoveWeights& w);

  const Dims& dims() const { return dims_; }
  std::size_t node_count() const { return offsets_.size() - 1; }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const MoveEdge> out_edges(std::size_t node) const {
    return {edges_.data() + offsets_[node], edges_.data() + offsets_[node + 1]};
  }
  std::span<const MoveEdge> edges() const { return edges_; }

  bool has_edge(const Coord& from, const Coord& to) const;

 private:
  Dims dims_;
  std::vector<MoveEdge> edges_;
  std::vector<std::size_t> offsets_;
};

inline CapabilityGraph capability_graph(const WarehouseConfig& cfg, const MoveWeights& w) {
  return CapabilityGraph(cfg, w);
}

}  // namespace hexstore
