#include "ttomo/transport.hpp"

#include <algorithm>
#include <cmath>

#include "ttomo/errors.hpp"
#include "ttomo/fft.hpp"
#include "ttomo/quadrature.hpp"

namespace ttomo {

QuadratureOptions QuadratureOptions::for_source(const TensorSource& f) {
  QuadratureOptions q;
  if (auto* g = dynamic_cast<const SymmetricTensorField*>(&f))
    q.max_step = 0.5 * std::min(g->grid().hx(), g->grid().hy());
  return q;
}

const char* region_name(Region r) {
  switch (r) {
    case Region::Plus: return "plus";
    case Region::Minus: return "minus";
    default: return "zero";
  }
}

Region classify(cplx normal, const Direction& d) {
  const double c = dot(d.unit(), normal);
  if (c > kTangentTolerance) return Region::Plus;
  if (c < -kTangentTolerance) return Region::Minus;
  return Region::Zero;
}

Chord chord_length(const ConvexDomain& dom, cplx x, const Direction& d) { return dom.chord(x, d.unit()); }

double ray_integral(const TensorSource& f, const Attenuation* a, cplx x, const Direction& d, double tau,
                    const QuadratureOptions& q) {
  if (tau <= 0.0) return 0.0;
  const cplx th = d.unit();
  const DirectionWeights w(f.order(), d);
  const GaussRule& g = gauss_legendre(q.points);
  const int panels = std::max(1, static_cast<int>(std::ceil(tau / q.max_step)));
  const double len = tau / panels;
  const bool attenuated = a != nullptr && !a->identically_zero();
  double sum = 0.0;
  double a_right = 0.0;  // int_{t_right}^0 a
  for (int p = 0; p < panels; ++p) {
    const double t_right = -p * len;
    const double t_left = t_right - len;
    const double mid = 0.5 * (t_left + t_right);
    double part = 0.0;
    for (int k = 0; k < q.points; ++k) {
      const double t = mid + 0.5 * len * g.nodes[k];
      double v = f.contract(x + t * th, w);
      if (attenuated && v != 0.0) v *= std::exp(-(a_right + a->line_integral(x, th, t, t_right)));
      part += g.weights[k] * v;
    }
    sum += 0.5 * len * part;
    if (attenuated) a_right += a->line_integral(x, th, t_left, t_right);
  }
  return sum;
}

double xray_transform(const TensorSource& f, const Attenuation* a, const ConvexDomain& dom, cplx x,
                      const Direction& d, const QuadratureOptions& q) {
  if (std::abs(dom.relative_radius(x) - 1.0) > 1e-9) fail(ErrorKind::OutsideDomain, "x-ray sample point is not on the boundary");
  if (classify(dom.normal_at(x), d) != Region::Plus) fail(ErrorKind::NotOutgoing, "direction is not outgoing at this boundary point");
  return ray_integral(f, a, x, d, dom.chord(x, d.unit()).backward, q);
}

double xray_transform(const TensorSource& f, const Attenuation* a, const ConvexDomain& dom, cplx x,
                      const Direction& d) {
  return xray_transform(f, a, dom, x, d, QuadratureOptions::for_source(f));
}

double solve_transport_interior(const TensorSource& f, const Attenuation* a, const ConvexDomain& dom, cplx x,
                                const Direction& d, const QuadratureOptions& q) {
  if (!dom.contains(x, 1e-9)) fail(ErrorKind::OutsideDomain, "transport point lies outside the domain");
  return ray_integral(f, a, x, d, dom.chord(x, d.unit()).backward, q);
}

double solve_transport_interior(const TensorSource& f, const Attenuation* a, const ConvexDomain& dom, cplx x,
                                const Direction& d) {
  return solve_transport_interior(f, a, dom, x, d, QuadratureOptions::for_source(f));
}

Sinogram::Sinogram(const ConvexDomain& dom, int nb, int nt) : n_b(nb), n_theta(nt) {
  if (nb < 4 || nt < 4) fail(ErrorKind::InvalidArgument, "sinogram needs at least 4 samples per axis");
  if (nt % 2 != 0) fail(ErrorKind::InvalidArgument, "N_theta must be even");
  beta.resize(nb);
  theta.resize(nt);
  for (int i = 0; i < nb; ++i) beta[i] = kTwoPi * i / nb;
  for (int j = 0; j < nt; ++j) theta[j] = kTwoPi * j / nt;
  values.assign(static_cast<std::size_t>(nb) * nt, 0.0);
  region.assign(values.size(), Region::Zero);
  domain = dom.name();
  semi_a = dom.semi_a();
  semi_b = dom.semi_b();
  const BoundaryGrid bg = dom.sample_boundary(nb);
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nt; ++j) region[static_cast<std::size_t>(i) * nt + j] = classify(bg.normal[i], Direction(theta[j]));
}

ConvexDomain Sinogram::make_domain() const {
  return domain == "disk" ? ConvexDomain::unit_disk() : ConvexDomain::ellipse(semi_a, semi_b);
}

double Sinogram::max_abs() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

Sinogram trace_data(const TensorSource& f, const Attenuation* a, const ConvexDomain& dom, int n_b, int n_theta,
                    const QuadratureOptions& q) {
  Sinogram s(dom, n_b, n_theta);
  s.order = f.order();
  s.attenuation_tag = a ? a->tag() : "zero";
  const BoundaryGrid bg = dom.sample_boundary(n_b);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n_b; ++i) {
    for (int j = 0; j < n_theta; ++j) {
      if (s.region_at(i, j) != Region::Plus) continue;
      const Direction d(s.theta[j]);
      s.at(i, j) = ray_integral(f, a, bg.zeta[i], d, dom.chord(bg.zeta[i], d.unit()).backward, q);
    }
  }
  return s;
}

Sinogram trace_data(const TensorSource& f, const Attenuation* a, const ConvexDomain& dom, int n_b, int n_theta) {
  return trace_data(f, a, dom, n_b, n_theta, QuadratureOptions::for_source(f));
}

const std::vector<cplx>& InteriorModes::u(int index) const {
  if (index > 0 || -index > n_modes) fail(ErrorKind::InvalidArgument, "interior mode index out of range");
  return modes[-index];
}

namespace {

// 4-point Lagrange weights for fractional position f within stencil start s.
inline void lagrange4(double x, double* w) {
  // nodes at 0,1,2,3
  w[0] = -(x - 1) * (x - 2) * (x - 3) / 6.0;
  w[1] = x * (x - 2) * (x - 3) / 2.0;
  w[2] = -x * (x - 1) * (x - 3) / 2.0;
  w[3] = x * (x - 1) * (x - 2) / 6.0;
}

}  // namespace

InteriorModes transport_modes_on_grid(const TensorSource& f, const Attenuation* a, const Lattice& lat,
                                      int n_theta, int n_modes, int table_refine) {
  if (n_modes < 0 || 2 * n_modes >= n_theta) fail(ErrorKind::Undersampled, "too few angles for the requested modes");
  const ConvexDomain& dom = lat.domain();
  const auto nodes = lat.inside_nodes();
  const std::size_t nn = nodes.size();
  const double R = dom.bounding_radius() * (1.0 + 1e-9);
  const int base = std::max(lat.spec().nx, lat.spec().ny) - 1;
  const int nt = std::max(8, table_refine * base + 1);
  const double dt = 2.0 * R / (nt - 1);
  const bool attenuated = a != nullptr && !a->identically_zero();

  std::vector<double> samples(nn * n_theta);
  std::vector<double> table(static_cast<std::size_t>(nt) * nt);
  for (int j = 0; j < n_theta; ++j) {
    const Direction d(kTwoPi * j / n_theta);
    const cplx th = d.unit(), pe = d.perp();
    const DirectionWeights w(f.order(), d);
#pragma omp parallel for schedule(static)
    for (int is = 0; is < nt; ++is) {
      const double s = -R + is * dt;
      double* row = &table[static_cast<std::size_t>(is) * nt];
      double A = 0.0, C = 0.0;
      auto point = [&](double t) { return s * pe + t * th; };
      double a0 = attenuated ? a->value(point(-R)) : 0.0;
      double F0 = f.contract(point(-R), w);
      row[0] = 0.0;
      for (int k = 0; k + 1 < nt; ++k) {
        const double t0 = -R + k * dt;
        const cplx xm = point(t0 + 0.5 * dt), x1 = point(t0 + dt);
        const double Fm = f.contract(xm, w), F1 = f.contract(x1, w);
        if (attenuated) {
          const double am = a->value(xm), a1 = a->value(x1);
          const double Am = A + dt * (5.0 * a0 + 8.0 * am - a1) / 24.0;
          const double A1 = A + dt * (a0 + 4.0 * am + a1) / 6.0;
          C += dt * (F0 * std::exp(A) + 4.0 * Fm * std::exp(Am) + F1 * std::exp(A1)) / 6.0;
          A = A1;
          a0 = a1;
          row[k + 1] = C * std::exp(-A);
        } else {
          C += dt * (F0 + 4.0 * Fm + F1) / 6.0;
          row[k + 1] = C;
        }
        F0 = F1;
      }
    }
#pragma omp parallel for schedule(static)
    for (std::size_t p = 0; p < nn; ++p) {
      const cplx x = lat.spec().node(nodes[p]);
      const double fs = (dot(x, pe) + R) / dt, ft = (dot(x, th) + R) / dt;
      int s0 = std::clamp(static_cast<int>(std::floor(fs)) - 1, 0, nt - 4);
      int t0 = std::clamp(static_cast<int>(std::floor(ft)) - 1, 0, nt - 4);
      double ws[4], wt[4];
      lagrange4(fs - s0, ws);
      lagrange4(ft - t0, wt);
      double v = 0.0;
      for (int a1 = 0; a1 < 4; ++a1) {
        const double* row = &table[static_cast<std::size_t>(s0 + a1) * nt + t0];
        v += ws[a1] * (wt[0] * row[0] + wt[1] * row[1] + wt[2] * row[2] + wt[3] * row[3]);
      }
      samples[p * n_theta + j] = v;
    }
  }

  InteriorModes out;
  out.lattice = lat;
  out.n_modes = n_modes;
  out.modes.assign(n_modes + 1, std::vector<cplx>(lat.size()));
  FourierPlan plan(n_theta, -1);
  std::vector<cplx> in(n_theta), spec(n_theta);
  for (std::size_t p = 0; p < nn; ++p) {
    for (int j = 0; j < n_theta; ++j) in[j] = samples[p * n_theta + j];
    plan.execute(in, spec);
    for (int n = 0; n <= n_modes; ++n) out.modes[n][nodes[p]] = spec[(n_theta - n) % n_theta] / static_cast<double>(n_theta);
  }
  return out;
}

std::vector<std::vector<cplx>> transport_modes_at_points(const TensorSource& f, const Attenuation* a,
                                                         const ConvexDomain& dom, const std::vector<cplx>& points,
                                                         int n_theta, int n_modes, const QuadratureOptions& q) {
  if (n_modes < 0 || 2 * n_modes >= n_theta) fail(ErrorKind::Undersampled, "too few angles for the requested modes");
  std::vector<std::vector<cplx>> out(n_modes + 1, std::vector<cplx>(points.size()));
  FourierPlan plan(n_theta, -1);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t p = 0; p < points.size(); ++p) {
    std::vector<cplx> in(n_theta), spec(n_theta);
    for (int j = 0; j < n_theta; ++j) in[j] = solve_transport_interior(f, a, dom, points[p], Direction(kTwoPi * j / n_theta), q);
    plan.execute(in, spec);
    for (int n = 0; n <= n_modes; ++n) out[n][p] = spec[(n_theta - n) % n_theta] / static_cast<double>(n_theta);
  }
  return out;
}

}  // namespace ttomo
