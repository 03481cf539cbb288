#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ttomo/mode_sequence.hpp"
#include "ttomo/sources.hpp"
#include "ttomo/tensor_algebra.hpp"

namespace ttomo {

// Da(z, theta): integral of a from z to the domain exit along theta.
double divergent_beam(const Attenuation& a, cplx z, const Direction& d);

// Ra(s, n) = int a(s n + t theta) dt with n = theta-perp (counterclockwise).
double radon_line(const Attenuation& a, double s, const Direction& normal);

// (1/pi) p.v. int f(t) / (s - t) dt for samples f(t0 + k dt), with the
// constant f(s) subtracted and integrated in closed form.
double classical_hilbert(std::span<const double> samples, double t0, double dt, double s);

// Ra(., n) = sqrt(1 - x^2) sum c_k U_k(x) with x = s / w(n), sampled at
// Chebyshev points; H[sqrt(1 - x^2) U_k] = T_{k+1} gives H Ra in closed form.
class RadonHilbertExpansion {
 public:
  RadonHilbertExpansion(const Attenuation& a, const Direction& line_dir, int n_nodes = 128);
  double radon(double s) const;
  double hilbert(double s) const;
  // Largest trailing coefficient relative to the largest one.
  double tail() const { return tail_; }
  std::size_t terms() const { return coeff_.size(); }

 private:
  double width_ = 1.0;
  std::vector<double> coeff_;
  double tail_ = 0.0;
};

// h(z, theta) = Da - (1/2)(I - iH) Ra(z . theta-perp, theta-perp).
cplx h_function(const Attenuation& a, cplx z, const Direction& d);

// alpha_k, beta_k (k = 0..K-1) at a set of points: Fourier coefficients of
// e^{-h} and e^{h}, plus diagnostics of the one-sided spectrum.
struct AttenuationBundle {
  std::vector<cplx> points;
  int n_theta = 0;
  int k_h = 0;
  std::string tag;
  std::vector<cplx> alpha, beta;  // point-major, k_h entries each
  double max_negative_mode = 0.0;        // e^{-h}
  double max_negative_mode_plus = 0.0;   // e^{h}
  double max_convolution_defect = 0.0;   // |(alpha * beta)_k - delta_k0|
  double max_alpha_tail = 0.0;           // last-quartile l^1 share of alpha

  const cplx* alpha_at(std::size_t p) const { return alpha.data() + p * k_h; }
  const cplx* beta_at(std::size_t p) const { return beta.data() + p * k_h; }
};

AttenuationBundle build_bundle(const Attenuation& a, std::span<const cplx> points, int n_theta, int k_h);
std::pair<std::vector<cplx>, std::vector<cplx>> alpha_beta(const Attenuation& a, cplx z, int n_theta, int k_h);

// (e^{-G} s)_n = sum_k alpha_k s_{n-k} (sign < 0) or with beta (sign > 0).
ModeSequence apply_eG(const ModeSequence& s, int sign, const AttenuationBundle& b);

// direction < 0: v = e^{-G} u; direction > 0: u = e^{G} v.
ModeSequence conjugate_systems(const ModeSequence& u, int direction, const AttenuationBundle& b);

}  // namespace ttomo
