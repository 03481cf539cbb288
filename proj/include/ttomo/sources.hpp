#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ttomo/domain.hpp"
#include "ttomo/grid.hpp"
#include "ttomo/tensor_algebra.hpp"

namespace ttomo {

// C-infinity step: 1 for rho <= r_in, 0 for rho >= r_out.
struct SmoothCutoff {
  double r_in = 0.85, r_out = 0.95;
  static SmoothCutoff from_delta(double delta) { return {1.0 - 3.0 * delta, 1.0 - delta}; }
  double operator()(double rho) const;
};

struct GaussianBump {
  cplx center;
  double sigma = 0.2;
  std::vector<double> coeffs;  // pseudovector weights, length m+1
};

// Sum of Gaussian bumps times a smooth cutoff at relative radius 1 - delta.
class BumpPhantom : public TensorSource {
 public:
  BumpPhantom(int m, std::vector<GaussianBump> bumps, const ConvexDomain& dom, double delta = 0.05);
  int order() const override { return order_; }
  void evaluate(cplx x, double* out) const override;
  const std::vector<GaussianBump>& bumps() const { return bumps_; }

 private:
  int order_;
  std::vector<GaussianBump> bumps_;
  ConvexDomain domain_;
  SmoothCutoff cutoff_;
};

// Built-in phantoms: zero, radial-gaussian, offset-bumps, random-smooth.
std::unique_ptr<BumpPhantom> make_phantom(const std::string& kind, int m, std::uint64_t seed,
                                          const ConvexDomain& dom, double delta = 0.05,
                                          double amplitude = 1.0, double sigma = 0.2);

// Attenuation coefficient a >= 0, supported on the closed domain.
class Attenuation {
 public:
  explicit Attenuation(const ConvexDomain& dom) : domain_(dom) {}
  virtual ~Attenuation() = default;
  virtual double value(cplx x) const = 0;
  // Integral of a along p + t dir for t in [t0, t1]; the segment lies in the domain.
  virtual double line_integral(cplx p, cplx dir, double t0, double t1) const;
  virtual std::string tag() const = 0;
  virtual bool identically_zero() const { return false; }
  const ConvexDomain& domain() const { return domain_; }
  double min_over(const Lattice& lat) const;

 protected:
  ConvexDomain domain_;
};

class ZeroAttenuation : public Attenuation {
 public:
  using Attenuation::Attenuation;
  double value(cplx) const override { return 0.0; }
  double line_integral(cplx, cplx, double, double) const override { return 0.0; }
  std::string tag() const override { return "zero"; }
  bool identically_zero() const override { return true; }
};

class ConstantAttenuation : public Attenuation {
 public:
  ConstantAttenuation(const ConvexDomain& dom, double c) : Attenuation(dom), c_(c) {}
  double value(cplx x) const override { return domain_.contains(x) ? c_ : 0.0; }
  double line_integral(cplx, cplx, double t0, double t1) const override { return c_ * (t1 - t0); }
  std::string tag() const override;
  double level() const { return c_; }

 private:
  double c_;
};

// a(x) = a0 + a1 exp(-|x|^2 / (2 w^2)) on the domain.
class RadialSmoothAttenuation : public Attenuation {
 public:
  RadialSmoothAttenuation(const ConvexDomain& dom, double a0, double a1, double width)
      : Attenuation(dom), a0_(a0), a1_(a1), w_(width) {}
  double value(cplx x) const override;
  double line_integral(cplx p, cplx dir, double t0, double t1) const override;
  std::string tag() const override;

 private:
  double a0_, a1_, w_;
};

// Node values on a lattice, bilinear in between.
class GridAttenuation : public Attenuation {
 public:
  GridAttenuation(const Lattice& lat, std::vector<double> values);
  double value(cplx x) const override;
  double line_integral(cplx p, cplx dir, double t0, double t1) const override;
  std::string tag() const override { return "grid"; }
  bool identically_zero() const override { return zero_; }
  const Lattice& lattice() const { return lattice_; }
  const std::vector<double>& values() const { return values_; }

 private:
  Lattice lattice_;
  std::vector<double> values_;
  bool zero_;
};

}  // namespace ttomo
