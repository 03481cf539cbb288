#include "ttomo/sources.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "ttomo/errors.hpp"
#include "ttomo/quadrature.hpp"

namespace ttomo {

double SmoothCutoff::operator()(double rho) const {
  if (rho <= r_in) return 1.0;
  if (rho >= r_out) return 0.0;
  const double t = (rho - r_in) / (r_out - r_in);
  const double a = std::exp(-1.0 / (1.0 - t));
  const double b = std::exp(-1.0 / t);
  return a / (a + b);
}

BumpPhantom::BumpPhantom(int m, std::vector<GaussianBump> bumps, const ConvexDomain& dom, double delta)
    : order_(m), bumps_(std::move(bumps)), domain_(dom), cutoff_(SmoothCutoff::from_delta(delta)) {
  require_order(m);
  if (!(delta > 0.0) || delta >= 0.3) fail(ErrorKind::InvalidArgument, "cutoff delta must lie in (0, 0.3)");
  for (const auto& b : bumps_)
    if (static_cast<int>(b.coeffs.size()) != m + 1) fail(ErrorKind::InvalidArgument, "bump coefficients must have m+1 entries");
}

void BumpPhantom::evaluate(cplx x, double* out) const {
  for (int k = 0; k <= order_; ++k) out[k] = 0.0;
  const double rho = domain_.relative_radius(x);
  if (rho >= cutoff_.r_out) return;
  const double chi = cutoff_(rho);
  for (const auto& b : bumps_) {
    const double r2 = std::norm(x - b.center);
    const double arg = r2 / (2.0 * b.sigma * b.sigma);
    if (arg > 40.0) continue;
    const double g = chi * std::exp(-arg);
    for (int k = 0; k <= order_; ++k) out[k] += g * b.coeffs[k];
  }
}

std::unique_ptr<BumpPhantom> make_phantom(const std::string& kind, int m, std::uint64_t seed,
                                          const ConvexDomain& dom, double delta, double amplitude,
                                          double sigma) {
  require_order(m);
  std::vector<GaussianBump> bumps;
  const double R = std::min(dom.semi_a(), dom.semi_b());
  if (kind == "zero") {
    // no bumps
  } else if (kind == "radial-gaussian") {
    GaussianBump b{{0.0, 0.0}, sigma, std::vector<double>(m + 1)};
    for (int k = 0; k <= m; ++k) b.coeffs[k] = amplitude / (1.0 + k);
    bumps.push_back(b);
  } else if (kind == "offset-bumps") {
    const cplx centers[3] = {{0.3 * R, 0.1 * R}, {-0.25 * R, 0.3 * R}, {-0.1 * R, -0.35 * R}};
    const double widths[3] = {0.15, 0.18, 0.12};
    for (int b = 0; b < 3; ++b) {
      GaussianBump g{centers[b], widths[b], std::vector<double>(m + 1)};
      for (int k = 0; k <= m; ++k) g.coeffs[k] = amplitude * std::cos(1.3 * b + 0.7 * k + 0.4);
      bumps.push_back(g);
    }
  } else if (kind == "random-smooth") {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (int b = 0; b < 6; ++b) {
      const double r = 0.45 * R * std::sqrt(U(rng));
      const double phi = kTwoPi * U(rng);
      GaussianBump g{std::polar(r, phi), 0.12 + 0.1 * U(rng), std::vector<double>(m + 1)};
      for (int k = 0; k <= m; ++k) g.coeffs[k] = amplitude * (2.0 * U(rng) - 1.0);
      bumps.push_back(g);
    }
  } else {
    fail(ErrorKind::Config, "unknown phantom kind '" + kind + "'");
  }
  return std::make_unique<BumpPhantom>(m, std::move(bumps), dom, delta);
}

double Attenuation::line_integral(cplx p, cplx dir, double t0, double t1) const {
  const double len = std::abs(t1 - t0);
  const int panels = std::max(1, static_cast<int>(std::ceil(len / 0.125)));
  return integrate_gl([&](double t) { return value(p + t * dir); }, t0, t1, 6, panels);
}

double Attenuation::min_over(const Lattice& lat) const {
  double mn = 1e300;
  for (std::size_t k = 0; k < lat.size(); ++k)
    if (lat.inside(k)) mn = std::min(mn, value(lat.spec().node(k)));
  return mn;
}

std::string ConstantAttenuation::tag() const {
  std::ostringstream os;
  os.precision(17);
  os << "constant:" << c_;
  return os.str();
}

double RadialSmoothAttenuation::value(cplx x) const {
  if (!domain_.contains(x)) return 0.0;
  return a0_ + a1_ * std::exp(-std::norm(x) / (2.0 * w_ * w_));
}

double RadialSmoothAttenuation::line_integral(cplx p, cplx dir, double t0, double t1) const {
  // |p + t dir|^2 = (t + q)^2 + s^2 with q = p.dir
  const double q = dot(p, dir);
  const double s2 = std::max(std::norm(p) - q * q, 0.0);
  const double c = std::sqrt(2.0) * w_;
  const double gauss = a1_ * std::exp(-s2 / (2.0 * w_ * w_)) * w_ * std::sqrt(kPi / 2.0) *
                       (std::erf((t1 + q) / c) - std::erf((t0 + q) / c));
  return a0_ * (t1 - t0) + gauss;
}

std::string RadialSmoothAttenuation::tag() const {
  std::ostringstream os;
  os.precision(17);
  os << "radial-smooth:" << a0_ << "," << a1_ << "," << w_;
  return os.str();
}

GridAttenuation::GridAttenuation(const Lattice& lat, std::vector<double> values)
    : Attenuation(lat.domain()), lattice_(lat), values_(std::move(values)) {
  if (values_.size() != lat.size()) fail(ErrorKind::InvalidArgument, "attenuation grid size mismatch");
  zero_ = true;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (!lat.inside(k)) values_[k] = 0.0;
    if (values_[k] != 0.0) zero_ = false;
  }
}

double GridAttenuation::value(cplx x) const { return bilinear(lattice_.spec(), values_, x); }

double GridAttenuation::line_integral(cplx p, cplx dir, double t0, double t1) const {
  const double len = std::abs(t1 - t0);
  const double h = 0.5 * std::min(lattice_.spec().hx(), lattice_.spec().hy());
  const int panels = std::max(1, static_cast<int>(std::ceil(len / h)));
  return integrate_gl([&](double t) { return value(p + t * dir); }, t0, t1, 3, panels);
}

}  // namespace ttomo
