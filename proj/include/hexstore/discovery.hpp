#pragma once

#include <map>
#include <span>
#include <stdexcept>

#include "hexstore/mesh_sim.hpp"

namespace hexstore {

struct Port {
  CellId cell;
  Face face = *Face::try_from_index(1);

  friend bool operator==(const Port&, const Port&) = default;
  friend auto operator<=>(const Port&, const Port&) = default;
};

/// Which cell sits behind each (cell, face).
using Adjacency = std::map<Port, CellId>;

/// Two different neighbours were observed behind the same (cell, face).
class TopologyFault : public std::runtime_error {
 public:
  TopologyFault(Port port, CellId first, CellId second);
  const Port& port() const { return port_; }

 private:
  Port port_;
};

/// Coordinates disagree: `first` and `second` cannot both be placed.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(CellId first, CellId second, const std::string& detail);
  const CellId& first() const { return first_; }
  const CellId& second() const { return second_; }

 private:
  CellId first_;
  CellId second_;
};

/// Builds adjacency from single-record packets: the receiver learns its
/// neighbour on the ingress face, and the sender's egress face points back.
Adjacency adjacency_from_receptions(std::span<const Reception> receptions);

/// Runs a hop-limit-1 power-on flood and reads the adjacency off the receptions.
Adjacency neighbor_discovery(const LinkTopology& topo);

struct TopologyMap {
  CellId root;
  std::map<CellId, Coord> coords;
  Adjacency adjacency;
};

/// Breadth-first placement starting from `root` at the origin. Every adjacency
/// entry of a reached cell is checked against the face directions; any
/// disagreement or two cells on one coordinate raises GeometryError.
TopologyMap build_map(const Adjacency& adjacency, const CellId& root);

}  // namespace hexstore
