#include "ttomo/grid.hpp"

#include "ttomo/errors.hpp"

namespace ttomo {

GridSpec GridSpec::square(int n, double radius) {
  if (n < 4) fail(ErrorKind::InvalidArgument, "grid needs at least 4 nodes per side");
  GridSpec g;
  g.nx = g.ny = n;
  g.x_min = g.y_min = -radius;
  g.x_max = g.y_max = radius;
  return g;
}

bool GridSpec::operator==(const GridSpec& o) const {
  return nx == o.nx && ny == o.ny && x_min == o.x_min && x_max == o.x_max && y_min == o.y_min && y_max == o.y_max;
}

Lattice::Lattice(const GridSpec& spec, const ConvexDomain& dom) : spec_(spec), domain_(dom) {
  if (spec.nx < 4 || spec.ny < 4) fail(ErrorKind::InvalidArgument, "grid needs at least 4 nodes per side");
  mask_.assign(spec.size(), 0);
  for (std::size_t k = 0; k < spec.size(); ++k) mask_[k] = dom.relative_radius(spec.node(k)) <= 1.0 ? 1 : 0;
}

std::vector<std::size_t> Lattice::inside_nodes() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < mask_.size(); ++k)
    if (mask_[k]) out.push_back(k);
  return out;
}

}  // namespace ttomo
