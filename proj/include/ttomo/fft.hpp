#pragma once

#include <span>
#include <vector>

#include "ttomo/types.hpp"

namespace ttomo {

// Thin wrapper over a cached FFTW plan. Unnormalized, out-of-place.
// sign = -1 computes sum_j x_j e^{-2 pi i jk/n}.
class FourierPlan {
 public:
  FourierPlan(int n, int sign);
  int size() const { return n_; }
  void execute(std::span<const cplx> in, std::span<cplx> out) const;

 private:
  int n_;
  void* plan_;
};

// c_k = (1/n) sum_j x_j e^{-ikt_j} for uniform t_j = 2 pi j / n; index k mod n.
std::vector<cplx> fourier_coefficients(std::span<const cplx> samples);

// Band-limited resampling of periodic samples from n to m points (m >= n).
std::vector<cplx> trig_resample(std::span<const cplx> samples, int m);

// Derivative in the periodic parameter of the trigonometric interpolant.
std::vector<cplx> trig_derivative(std::span<const cplx> samples);

}  // namespace ttomo
