#include "hexstore/discovery.hpp"

#include <queue>
#include <sstream>

namespace hexstore {

TopologyFault::TopologyFault(Port port, CellId first, CellId second)
    : std::runtime_error("topology fault: face " + std::to_string(port.face.index()) + " of " +
                         port.cell.hex() + " claimed by both " + first.hex() + " and " +
                         second.hex()),
      port_(port) {}

GeometryError::GeometryError(CellId first, CellId second, const std::string& detail)
    : std::runtime_error("inconsistent geometry between " + first.hex() + " and " +
                         second.hex() + ": " + detail),
      first_(first),
      second_(second) {}

namespace {

void claim(Adjacency& adj, const Port& port, const CellId& neighbour) {
  auto [it, inserted] = adj.emplace(port, neighbour);
  if (!inserted && it->second != neighbour) throw TopologyFault(port, it->second, neighbour);
}

}  // namespace

Adjacency adjacency_from_receptions(std::span<const Reception> receptions) {
  Adjacency adj;
  for (const Reception& r : receptions) {
    if (r.packet.records.size() != 1) continue;
    const HopRecord& sender = r.packet.records.front();
    claim(adj, Port{r.receiver, r.ingress}, sender.cell);
    claim(adj, Port{sender.cell, sender.egress}, r.receiver);
  }
  return adj;
}

Adjacency neighbor_discovery(const LinkTopology& topo) {
  MeshSimulation sim(topo, {1, true});
  sim.power_on();
  sim.run();
  return adjacency_from_receptions(sim.receptions());
}

TopologyMap build_map(const Adjacency& adjacency, const CellId& root) {
  TopologyMap map{root, {}, adjacency};
  std::map<Coord, CellId> occupant;
  map.coords.emplace(root, Coord{});
  occupant.emplace(Coord{}, root);

  std::queue<CellId> frontier;
  frontier.push(root);
  while (!frontier.empty()) {
    const CellId cell = frontier.front();
    frontier.pop();
    const Coord here = map.coords.at(cell);
    for (auto it = adjacency.lower_bound(Port{cell, *Face::try_from_index(1)});
         it != adjacency.end() && it->first.cell == cell; ++it) {
      const CellId& nb = it->second;
      const Coord expected = here + direction(it->first.face);
      auto known = map.coords.find(nb);
      if (known != map.coords.end()) {
        if (known->second != expected) {
          std::ostringstream os;
          os << "face " << it->first.face << " places it at " << expected << " but it is at "
             << known->second;
          throw GeometryError(cell, nb, os.str());
        }
        continue;
      }
      auto taken = occupant.find(expected);
      if (taken != occupant.end()) {
        std::ostringstream os;
        os << "both claim " << expected;
        throw GeometryError(nb, taken->second, os.str());
      }
      map.coords.emplace(nb, expected);
      occupant.emplace(expected, nb);
      frontier.push(nb);
    }
  }
  return map;
}

}  // namespace hexstore
