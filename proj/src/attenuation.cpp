#include "ttomo/attenuation.hpp"

#include <algorithm>
#include <cmath>

#include "ttomo/errors.hpp"
#include "ttomo/fft.hpp"

namespace ttomo {

double divergent_beam(const Attenuation& a, cplx z, const Direction& d) {
  const cplx th = d.unit();
  const Chord c = a.domain().chord(z, th);
  return a.line_integral(z, th, 0.0, c.forward);
}

double radon_line(const Attenuation& a, double s, const Direction& normal) {
  const cplx n = normal.unit();
  const cplx th = -kI * n;
  const cplx p = s * n;
  if (!a.domain().contains(p, 1e-12)) return 0.0;
  const Chord c = a.domain().chord(p, th);
  if (c.total() <= 0.0) return 0.0;
  return a.line_integral(p, th, -c.backward, c.forward);
}

namespace {

// Cubic Lagrange value and derivative of uniform samples at s.
std::pair<double, double> interp_cubic(std::span<const double> f, double t0, double dt, double s) {
  const int n = static_cast<int>(f.size());
  const double x = (s - t0) / dt;
  if (x < 0.0 || x > n - 1) return {0.0, 0.0};
  int k = std::clamp(static_cast<int>(std::floor(x)) - 1, 0, n - 4);
  const double u = x - k;
  double v = 0.0, d = 0.0;
  for (int a = 0; a < 4; ++a) {
    double num = 1.0, den = 1.0, dsum = 0.0;
    for (int b = 0; b < 4; ++b) {
      if (b == a) continue;
      den *= (a - b);
    }
    for (int b = 0; b < 4; ++b) {
      if (b == a) continue;
      num *= (u - b);
      double prod = 1.0;
      for (int c = 0; c < 4; ++c)
        if (c != a && c != b) prod *= (u - c);
      dsum += prod;
    }
    v += f[k + a] * num / den;
    d += f[k + a] * dsum / den;
  }
  return {v, d / dt};
}

}  // namespace

double classical_hilbert(std::span<const double> samples, double t0, double dt, double s) {
  const int n = static_cast<int>(samples.size());
  if (n < 4) fail(ErrorKind::InvalidArgument, "Hilbert transform needs at least 4 samples");
  const double t_end = t0 + (n - 1) * dt;
  const auto [fs, dfs] = interp_cubic(samples, t0, dt, s);
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    const double t = t0 + k * dt;
    const double w = (k == 0 || k == n - 1) ? 0.5 * dt : dt;
    const double gap = s - t;
    const double v = std::abs(gap) < 1e-9 * dt ? -dfs : (samples[k] - fs) / gap;
    sum += w * v;
  }
  // p.v. int_{t0}^{t_end} dt / (s - t) = ln|s - t0| - ln|s - t_end|
  const double a = std::abs(s - t0), b = std::abs(s - t_end);
  const double logterm = (a > 0.0 && b > 0.0) ? std::log(a / b) : 0.0;
  return (sum + fs * logterm) / kPi;
}

RadonHilbertExpansion::RadonHilbertExpansion(const Attenuation& a, const Direction& line_dir, int n_nodes) {
  const cplx th = line_dir.unit();
  const cplx n = line_dir.perp();
  width_ = a.domain().support_width(n);
  const int M = n_nodes;
  std::vector<double> ra(M);
  std::vector<double> t(M);
  for (int k = 1; k <= M; ++k) {
    t[k - 1] = kPi * k / (M + 1);
    const cplx p = width_ * std::cos(t[k - 1]) * n;
    const Chord c = a.domain().chord(p, th);
    ra[k - 1] = c.total() > 0.0 ? a.line_integral(p, th, -c.backward, c.forward) : 0.0;
  }
  coeff_.assign(M, 0.0);
  double cmax = 0.0;
  for (int j = 0; j < M; ++j) {
    double sum = 0.0;
    for (int k = 0; k < M; ++k) sum += ra[k] * std::sin((j + 1) * t[k]);
    coeff_[j] = 2.0 * sum / (M + 1);
    cmax = std::max(cmax, std::abs(coeff_[j]));
  }
  tail_ = cmax > 0.0 ? std::abs(coeff_[M - 1]) / cmax : 0.0;
  std::size_t used = coeff_.size();
  while (used > 1 && std::abs(coeff_[used - 1]) <= 1e-17 * cmax) --used;
  coeff_.resize(used);
}

double RadonHilbertExpansion::radon(double s) const {
  const double x = s / width_;
  if (std::abs(x) >= 1.0) return 0.0;
  double b1 = 0.0, b2 = 0.0;
  for (std::size_t k = coeff_.size(); k-- > 0;) {
    const double b0 = coeff_[k] + 2.0 * x * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return std::sqrt(1.0 - x * x) * b1;
}

double RadonHilbertExpansion::hilbert(double s) const {
  const double x = std::clamp(s / width_, -1.0, 1.0);
  // sum_{k>=1} d_k T_k(x) with d_k = coeff_{k-1}
  double b1 = 0.0, b2 = 0.0;
  for (std::size_t k = coeff_.size(); k >= 1; --k) {
    const double b0 = coeff_[k - 1] + 2.0 * x * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return x * b1 - b2;
}

namespace {

inline cplx h_value(const Attenuation& a, const RadonHilbertExpansion& rh, cplx z, const Direction& d) {
  const cplx th = d.unit();
  const Chord c = a.domain().chord(z, th);
  const double fwd = a.line_integral(z, th, 0.0, c.forward);
  const double bwd = a.line_integral(z, th, -c.backward, 0.0);
  // Da - Ra/2 = (fwd - bwd)/2
  return {0.5 * (fwd - bwd), 0.5 * rh.hilbert(dot(z, d.perp()))};
}

}  // namespace

cplx h_function(const Attenuation& a, cplx z, const Direction& d) {
  if (!a.domain().contains(z, 1e-9)) fail(ErrorKind::OutsideDomain, "h-function point lies outside the domain");
  if (a.identically_zero()) return {};
  RadonHilbertExpansion rh(a, d);
  return h_value(a, rh, z, d);
}

AttenuationBundle build_bundle(const Attenuation& a, std::span<const cplx> points, int n_theta, int k_h) {
  if (k_h < 1 || k_h > n_theta / 2) fail(ErrorKind::Undersampled, "coefficient count must not exceed N_theta/2");
  for (const cplx& z : points)
    if (!a.domain().contains(z, 1e-9)) fail(ErrorKind::OutsideDomain, "bundle point lies outside the domain");
  AttenuationBundle b;
  b.points.assign(points.begin(), points.end());
  b.n_theta = n_theta;
  b.k_h = k_h;
  b.tag = a.tag();
  const std::size_t np = points.size();
  b.alpha.assign(np * k_h, cplx{});
  b.beta.assign(np * k_h, cplx{});
  if (a.identically_zero()) {
    for (std::size_t p = 0; p < np; ++p) b.alpha[p * k_h] = b.beta[p * k_h] = 1.0;
    return b;
  }
  std::vector<RadonHilbertExpansion> rh;
  rh.reserve(n_theta);
  for (int j = 0; j < n_theta; ++j) rh.emplace_back(a, Direction(kTwoPi * j / n_theta));

  FourierPlan plan(n_theta, -1);
  double neg = 0.0, negp = 0.0, defect = 0.0, tail = 0.0;
#pragma omp parallel reduction(max : neg, negp, defect, tail)
  {
    std::vector<cplx> em(n_theta), ep(n_theta), sm(n_theta), sp(n_theta);
#pragma omp for schedule(dynamic, 64)
    for (std::size_t p = 0; p < np; ++p) {
      for (int j = 0; j < n_theta; ++j) {
        const cplx h = h_value(a, rh[j], points[p], Direction(kTwoPi * j / n_theta));
        em[j] = std::exp(-h);
        ep[j] = std::exp(h);
      }
      plan.execute(em, sm);
      plan.execute(ep, sp);
      const double inv = 1.0 / n_theta;
      for (int k = 0; k < k_h; ++k) {
        b.alpha[p * k_h + k] = sm[k] * inv;
        b.beta[p * k_h + k] = sp[k] * inv;
      }
      for (int k = 1; k < n_theta / 2; ++k) {
        neg = std::max(neg, std::abs(sm[n_theta - k]) * inv);
        negp = std::max(negp, std::abs(sp[n_theta - k]) * inv);
      }
      const cplx* al = &b.alpha[p * k_h];
      const cplx* be = &b.beta[p * k_h];
      double total = 0.0, last = 0.0;
      for (int k = 0; k < k_h; ++k) {
        cplx c{};
        for (int i = 0; i <= k; ++i) c += al[i] * be[k - i];
        defect = std::max(defect, std::abs(c - (k == 0 ? 1.0 : 0.0)));
        total += std::abs(al[k]);
        if (k >= k_h - std::max(1, k_h / 4)) last += std::abs(al[k]);
      }
      tail = std::max(tail, total > 0.0 ? last / total : 0.0);
    }
  }
  b.max_negative_mode = neg;
  b.max_negative_mode_plus = negp;
  b.max_convolution_defect = defect;
  b.max_alpha_tail = tail;
  return b;
}

std::pair<std::vector<cplx>, std::vector<cplx>> alpha_beta(const Attenuation& a, cplx z, int n_theta, int k_h) {
  const cplx pts[1] = {z};
  AttenuationBundle b = build_bundle(a, pts, n_theta, k_h);
  return {std::move(b.alpha), std::move(b.beta)};
}

ModeSequence apply_eG(const ModeSequence& s, int sign, const AttenuationBundle& b) {
  if (s.points() != b.points.size()) fail(ErrorKind::InvalidArgument, "bundle points do not match the sequence");
  if (s.step() != 1) fail(ErrorKind::InvalidArgument, "e^{G} acts on unit-step sequences");
  ModeSequence out(s.points(), s.length(), s.start_index(), s.step(), s.parity());
  out.set_shift_count(s.shift_count());
  const std::size_t L = s.length();
  const std::size_t K = static_cast<std::size_t>(b.k_h);
  for (std::size_t p = 0; p < s.points(); ++p) {
    const cplx* c = sign < 0 ? b.alpha_at(p) : b.beta_at(p);
    const auto in = s.row(p);
    auto dst = out.row(p);
    for (std::size_t n = 0; n < L; ++n) {
      // entry n has index start - n; s_{idx - k} sits at position n + k
      cplx acc{};
      const std::size_t kmax = std::min(K, L - n);
      for (std::size_t k = 0; k < kmax; ++k) acc += c[k] * in[n + k];
      dst[n] = acc;
    }
  }
  return out;
}

ModeSequence conjugate_systems(const ModeSequence& u, int direction, const AttenuationBundle& b) {
  return apply_eG(u, direction < 0 ? -1 : 1, b);
}

}  // namespace ttomo
