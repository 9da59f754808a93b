#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hexstore/cell_id.hpp"
#include "hexstore/config.hpp"
#include "hexstore/face.hpp"

namespace hexstore {

/// Physical connection: face `fa` of cell `a` is wired to face `fb` of cell `b`.
struct Link {
  CellId a;
  Face fa = *Face::try_from_index(1);
  CellId b;
  Face fb = *Face::try_from_index(2);

  friend bool operator==(const Link&, const Link&) = default;
};

struct LinkTopology {
  std::vector<CellId> cells;
  std::vector<Link> links;

  bool has_cell(const CellId& id) const;
};

class TopologyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Problems with the topology as a wiring description: duplicate cells,
/// links to unknown cells, self links, and (cell, face) ports used twice.
std::vector<std::string> validate_topology(const LinkTopology& topo);

/// Fully wired nx*ny*nz grid using the shared face table. `id_of` receives the
/// linear (x-fastest) index of each cell.
LinkTopology grid_topology(const Dims& dims, const std::function<CellId(std::size_t)>& id_of);

/// Grid topology whose cell ids are 1..n in linear order.
LinkTopology grid_topology(const Dims& dims);

}  // namespace hexstore
