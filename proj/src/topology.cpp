#include "hexstore/topology.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hexstore {

bool LinkTopology::has_cell(const CellId& id) const {
  return std::find(cells.begin(), cells.end(), id) != cells.end();
}

std::vector<std::string> validate_topology(const LinkTopology& topo) {
  std::vector<std::string> problems;
  std::set<CellId> known;
  for (const CellId& c : topo.cells) {
    if (!known.insert(c).second) problems.push_back("duplicate cell " + c.hex());
  }
  std::set<std::pair<CellId, int>> ports;
  for (std::size_t i = 0; i < topo.links.size(); ++i) {
    const Link& l = topo.links[i];
    const std::string where = "link " + std::to_string(i) + ": ";
    if (!known.count(l.a)) problems.push_back(where + "unknown cell " + l.a.hex());
    if (!known.count(l.b)) problems.push_back(where + "unknown cell " + l.b.hex());
    if (l.a == l.b) problems.push_back(where + "cell linked to itself");
    if (!ports.insert({l.a, l.fa.index()}).second) {
      problems.push_back(where + "face " + std::to_string(l.fa.index()) + " of " + l.a.hex() +
                         " already wired");
    }
    if (!ports.insert({l.b, l.fb.index()}).second) {
      problems.push_back(where + "face " + std::to_string(l.fb.index()) + " of " + l.b.hex() +
                         " already wired");
    }
  }
  return problems;
}

LinkTopology grid_topology(const Dims& dims, const std::function<CellId(std::size_t)>& id_of) {
  LinkTopology topo;
  const std::size_t n = dims.cell_count();
  topo.cells.reserve(n);
  for (std::size_t i = 0; i < n; ++i) topo.cells.push_back(id_of(i));
  for (std::size_t i = 0; i < n; ++i) {
    const Coord c = dims.coord_of(i);
    // Positive faces only so each physical link appears once.
    for (int fi : {1, 3, 5}) {
      const Face f = Face::from_index(fi);
      const Coord nb = c + direction(f);
      if (!dims.contains(nb)) continue;
      topo.links.push_back({topo.cells[i], f, topo.cells[dims.index_of(nb)], opposite(f)});
    }
  }
  return topo;
}

LinkTopology grid_topology(const Dims& dims) {
  return grid_topology(dims, [](std::size_t i) { return CellId::from_u64(i + 1); });
}

}  // namespace hexstore
