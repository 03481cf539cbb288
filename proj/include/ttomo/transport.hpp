#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ttomo/domain.hpp"
#include "ttomo/grid.hpp"
#include "ttomo/sources.hpp"
#include "ttomo/tensor_algebra.hpp"

namespace ttomo {

// Composite Gauss-Legendre panels along rays.
struct QuadratureOptions {
  double max_step = 1.0 / 256.0;
  int points = 4;
  // h_x / 2 for lattice fields, 1/256 for analytic sources.
  static QuadratureOptions for_source(const TensorSource& f);
};

inline constexpr double kTangentTolerance = 1e-9;

enum class Region : std::uint8_t { Plus, Minus, Zero };
const char* region_name(Region r);
Region classify(cplx normal, const Direction& d);

Chord chord_length(const ConvexDomain& dom, cplx x, const Direction& d);

// Integral over t in [-tau, 0] of <f(x + t theta), theta^m> exp(-int_t^0 a).
double ray_integral(const TensorSource& f, const Attenuation* a, cplx x, const Direction& d, double tau,
                    const QuadratureOptions& q);

double xray_transform(const TensorSource& f, const Attenuation* a, const ConvexDomain& dom, cplx x,
                      const Direction& d, const QuadratureOptions& q);
double xray_transform(const TensorSource& f, const Attenuation* a, const ConvexDomain& dom, cplx x,
                      const Direction& d);

double solve_transport_interior(const TensorSource& f, const Attenuation* a, const ConvexDomain& dom, cplx x,
                                const Direction& d, const QuadratureOptions& q);
double solve_transport_interior(const TensorSource& f, const Attenuation* a, const ConvexDomain& dom, cplx x,
                                const Direction& d);

struct Sinogram {
  int n_b = 0, n_theta = 0;
  std::vector<double> beta, theta;
  std::vector<double> values;   // index i * n_theta + j
  std::vector<Region> region;
  std::string domain = "disk";
  double semi_a = 1.0, semi_b = 1.0;
  int order = 0;
  std::string attenuation_tag = "zero";

  Sinogram() = default;
  Sinogram(const ConvexDomain& dom, int n_b, int n_theta);
  double& at(int i, int j) { return values[static_cast<std::size_t>(i) * n_theta + j]; }
  double at(int i, int j) const { return values[static_cast<std::size_t>(i) * n_theta + j]; }
  Region region_at(int i, int j) const { return region[static_cast<std::size_t>(i) * n_theta + j]; }
  ConvexDomain make_domain() const;
  double max_abs() const;
};

Sinogram trace_data(const TensorSource& f, const Attenuation* a, const ConvexDomain& dom, int n_b, int n_theta,
                    const QuadratureOptions& q);
Sinogram trace_data(const TensorSource& f, const Attenuation* a, const ConvexDomain& dom, int n_b, int n_theta);

// Interior angular modes u_0, u_{-1}, ..., u_{-K} of the transport solution
// on the lattice nodes inside the mask (zero elsewhere).
struct InteriorModes {
  Lattice lattice;
  int n_modes = 0;
  std::vector<std::vector<cplx>> modes;  // modes[n] holds u_{-n}
  const std::vector<cplx>& u(int index) const;  // index <= 0
};

// Per-angle cumulative tables in rotated coordinates, cubic interpolation to
// the nodes, then an FFT in angle.
InteriorModes transport_modes_on_grid(const TensorSource& f, const Attenuation* a, const Lattice& lat,
                                      int n_theta, int n_modes, int table_refine = 1);

// Same modes at arbitrary points from the pointwise quadrature; result[n][p] = u_{-n}(p).
std::vector<std::vector<cplx>> transport_modes_at_points(const TensorSource& f, const Attenuation* a,
                                                         const ConvexDomain& dom, const std::vector<cplx>& points,
                                                         int n_theta, int n_modes, const QuadratureOptions& q);

}  // namespace ttomo
