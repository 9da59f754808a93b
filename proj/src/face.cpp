#include "hexstore/face.hpp"

#include <stdexcept>
#include <string>

namespace hexstore {

Face Face::from_index(int index) {
  auto f = try_from_index(index);
  if (!f) throw std::out_of_range("face index must be in 1..6, got " + std::to_string(index));
  return *f;
}

std::ostream& operator<<(std::ostream& os, const Coord& c) {
  return os << '(' << c.x << ',' << c.y << ',' << c.z << ')';
}

std::ostream& operator<<(std::ostream& os, Face f) { return os << f.index(); }

}  // namespace hexstore
