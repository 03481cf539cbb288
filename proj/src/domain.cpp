#include "ttomo/domain.hpp"

#include <algorithm>
#include <cmath>

#include "ttomo/errors.hpp"

namespace ttomo {

ConvexDomain ConvexDomain::unit_disk() { return ConvexDomain(Kind::Disk, 1.0, 1.0); }

ConvexDomain ConvexDomain::ellipse(double semi_a, double semi_b) {
  if (!(semi_a > 0.0) || !(semi_b > 0.0)) fail(ErrorKind::InvalidArgument, "ellipse semi-axes must be positive");
  if (semi_a == 1.0 && semi_b == 1.0) return unit_disk();
  return ConvexDomain(Kind::Param, semi_a, semi_b);
}

cplx ConvexDomain::boundary_point(double beta) const { return {a_ * std::cos(beta), b_ * std::sin(beta)}; }
cplx ConvexDomain::tangent(double beta) const { return {-a_ * std::sin(beta), b_ * std::cos(beta)}; }
cplx ConvexDomain::second_derivative(double beta) const { return {-a_ * std::cos(beta), -b_ * std::sin(beta)}; }

cplx ConvexDomain::outward_normal(double beta) const {
  cplx t = tangent(beta);
  return -kI * t / std::abs(t);
}

cplx ConvexDomain::normal_at(cplx x) const {
  cplx g{x.real() / (a_ * a_), x.imag() / (b_ * b_)};
  double n = std::abs(g);
  if (n == 0.0) fail(ErrorKind::InvalidArgument, "normal undefined at the centre");
  return g / n;
}

BoundaryGrid ConvexDomain::sample_boundary(int n) const {
  if (n < 4) fail(ErrorKind::InvalidArgument, "boundary grid needs at least 4 nodes");
  BoundaryGrid g;
  g.n = n;
  g.dbeta = kTwoPi / n;
  g.beta.resize(n);
  g.zeta.resize(n);
  g.dzeta.resize(n);
  g.d2zeta.resize(n);
  g.normal.resize(n);
  for (int i = 0; i < n; ++i) {
    double b = g.dbeta * i;
    g.beta[i] = b;
    g.zeta[i] = boundary_point(b);
    g.dzeta[i] = tangent(b);
    g.d2zeta[i] = second_derivative(b);
    g.normal[i] = outward_normal(b);
  }
  if (is_disk()) {
    // exact unit-modulus samples avoid roundoff in |zeta| = 1 identities
    for (int i = 0; i < n; ++i) {
      g.zeta[i] = std::polar(1.0, g.beta[i]);
      g.dzeta[i] = kI * g.zeta[i];
      g.d2zeta[i] = -g.zeta[i];
      g.normal[i] = g.zeta[i];
    }
  }
  return g;
}

double ConvexDomain::relative_radius(cplx x) const {
  double u = x.real() / a_, v = x.imag() / b_;
  return std::sqrt(u * u + v * v);
}

bool ConvexDomain::contains(cplx x, double tol) const { return relative_radius(x) <= 1.0 + tol; }

Chord ConvexDomain::chord(cplx x, cplx dir) const {
  if (!contains(x, 1e-9)) fail(ErrorKind::OutsideDomain, "point lies outside the domain");
  // scaled coordinates turn the ellipse into the unit disk
  cplx xs{x.real() / a_, x.imag() / b_};
  cplx ds{dir.real() / a_, dir.imag() / b_};
  double A = std::norm(ds);
  double B = dot(xs, ds);
  double C = std::norm(xs) - 1.0;
  double disc = std::max(B * B - A * C, 0.0);
  double root = std::sqrt(disc);
  Chord c;
  c.forward = std::max((-B + root) / A, 0.0);
  c.backward = std::max((B + root) / A, 0.0);
  return c;
}

double ConvexDomain::distance_to_boundary(cplx x) const {
  if (is_disk()) return 1.0 - std::abs(x);
  // coarse scan followed by Newton refinement of the foot point
  const int n = 512;
  double best = 1e300, best_beta = 0.0;
  for (int i = 0; i < n; ++i) {
    double b = kTwoPi * i / n;
    double d = std::abs(boundary_point(b) - x);
    if (d < best) best = d, best_beta = b;
  }
  double b = best_beta;
  for (int it = 0; it < 30; ++it) {
    cplx r = boundary_point(b) - x;
    cplx t = tangent(b);
    cplx t2 = second_derivative(b);
    double g = dot(r, t);
    double dg = std::norm(t) + dot(r, t2);
    if (dg <= 0.0) break;
    double step = g / dg;
    b -= step;
    if (std::abs(step) < 1e-15) break;
  }
  double d = std::min(best, std::abs(boundary_point(b) - x));
  return relative_radius(x) <= 1.0 ? d : -d;
}

double ConvexDomain::support_width(cplx n) const {
  return std::sqrt(a_ * a_ * n.real() * n.real() + b_ * b_ * n.imag() * n.imag());
}

}  // namespace ttomo
