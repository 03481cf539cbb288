#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ttomo/domain.hpp"
#include "ttomo/types.hpp"

namespace ttomo {

// Uniform node lattice; node (i, j) sits at (x_min + i hx, y_min + j hy),
// stored row-major with i fastest.
struct GridSpec {
  int nx = 0, ny = 0;
  double x_min = -1.0, x_max = 1.0, y_min = -1.0, y_max = 1.0;

  static GridSpec square(int n, double radius);
  double hx() const { return (x_max - x_min) / (nx - 1); }
  double hy() const { return (y_max - y_min) / (ny - 1); }
  std::size_t size() const { return static_cast<std::size_t>(nx) * ny; }
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * nx + i; }
  cplx node(int i, int j) const { return {x_min + i * hx(), y_min + j * hy()}; }
  cplx node(std::size_t k) const { return node(static_cast<int>(k % nx), static_cast<int>(k / nx)); }
  bool operator==(const GridSpec& o) const;
};

// Grid plus the domain support mask.
class Lattice {
 public:
  Lattice() = default;
  Lattice(const GridSpec& spec, const ConvexDomain& dom);

  const GridSpec& spec() const { return spec_; }
  const ConvexDomain& domain() const { return domain_; }
  std::size_t size() const { return spec_.size(); }
  bool inside(std::size_t k) const { return mask_[k] != 0; }
  const std::vector<std::uint8_t>& mask() const { return mask_; }
  std::vector<std::size_t> inside_nodes() const;

 private:
  GridSpec spec_{};
  ConvexDomain domain_ = ConvexDomain::unit_disk();
  std::vector<std::uint8_t> mask_;
};

// Bilinear interpolation of node values; zero outside the lattice box.
template <class T>
T bilinear(const GridSpec& g, const std::vector<T>& v, cplx x) {
  const double fx = (x.real() - g.x_min) / g.hx();
  const double fy = (x.imag() - g.y_min) / g.hy();
  if (!(fx >= 0.0) || !(fy >= 0.0) || fx > g.nx - 1 || fy > g.ny - 1) return T{};
  int i = static_cast<int>(fx), j = static_cast<int>(fy);
  if (i > g.nx - 2) i = g.nx - 2;
  if (j > g.ny - 2) j = g.ny - 2;
  const double tx = fx - i, ty = fy - j;
  const std::size_t k = g.index(i, j);
  return (1 - ty) * ((1 - tx) * v[k] + tx * v[k + 1]) + ty * ((1 - tx) * v[k + g.nx] + tx * v[k + g.nx + 1]);
}

}  // namespace ttomo
