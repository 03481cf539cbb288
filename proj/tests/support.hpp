#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "ttomo/domain.hpp"
#include "ttomo/tensor_algebra.hpp"
#include "ttomo/types.hpp"

namespace ttomo::testing {

// Hand-rolled generators over a seeded engine.
struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  double uniform(double lo = -1.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  cplx complex(double scale = 1.0) { return {uniform(-scale, scale), uniform(-scale, scale)}; }
  Direction direction() { return Direction(uniform(0.0, kTwoPi)); }

  std::vector<double> pseudovector(int m) {
    std::vector<double> v(m + 1);
    for (auto& x : v) x = uniform();
    return v;
  }

  // Point of the open disk of radius r_max, uniform in area.
  cplx disk_point(double r_max) { return std::polar(r_max * std::sqrt(uniform(0.0, 1.0)), uniform(0.0, kTwoPi)); }
};

// f = ft (constant pseudovector) inside the domain, zero outside.
class ConstantSource : public TensorSource {
 public:
  ConstantSource(const ConvexDomain& dom, std::vector<double> ft) : dom_(dom), ft_(std::move(ft)) {}
  int order() const override { return static_cast<int>(ft_.size()) - 1; }
  void evaluate(cplx x, double* out) const override {
    const bool in = dom_.contains(x, 1e-9);
    for (std::size_t k = 0; k < ft_.size(); ++k) out[k] = in ? ft_[k] : 0.0;
  }

 private:
  ConvexDomain dom_;
  std::vector<double> ft_;
};

// Scalar exp(-|x - c|^2 / (2 s^2)) without cutoff.
class Gaussian : public TensorSource {
 public:
  Gaussian(cplx c, double s) : c_(c), s_(s) {}
  int order() const override { return 0; }
  void evaluate(cplx x, double* out) const override { out[0] = std::exp(-std::norm(x - c_) / (2 * s_ * s_)); }

 private:
  cplx c_;
  double s_;
};

// Gradient of phi = (1 - |x|^2)^3 on the unit disk: a potential 1-tensor with
// vanishing boundary values, so its X-ray data are zero.
class PotentialField : public TensorSource {
 public:
  int order() const override { return 1; }
  void evaluate(cplx x, double* out) const override {
    const double r2 = std::norm(x);
    const double w = r2 < 1.0 ? -6.0 * (1.0 - r2) * (1.0 - r2) : 0.0;
    out[0] = w * x.real();
    out[1] = w * x.imag();
  }
};

}  // namespace ttomo::testing
