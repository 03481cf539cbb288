#include "ttomo/tensor_algebra.hpp"

#include <cmath>
#include <mutex>
#include <string>

#include "ttomo/errors.hpp"

namespace ttomo {

long long binomial(int n, int k) {
  if (n < 0 || n > kMaxOrder) fail(ErrorKind::OrderTooLarge, "binomial: order " + std::to_string(n) + " unsupported");
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void require_order(int m) {
  if (m < 0) fail(ErrorKind::InvalidArgument, "tensor order must be non-negative");
  if (m > kMaxOrder) fail(ErrorKind::OrderTooLarge, "tensor order " + std::to_string(m) + " exceeds " + std::to_string(kMaxOrder));
}

DirectionWeights::DirectionWeights(int m, const Direction& d) : order(m), w(m + 1) {
  const double c = std::cos(d.angle), s = std::sin(d.angle);
  for (int k = 0; k <= m; ++k) w[k] = binomial(m, k) * std::pow(c, m - k) * std::pow(s, k);
}

double DirectionWeights::apply(const double* ft) const {
  double sum = 0.0;
  for (int k = 0; k <= order; ++k) sum += w[k] * ft[k];
  return sum;
}

namespace {

cplx ipow(int p) {
  switch (((p % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

}  // namespace

TensorLaw build_tensor_law(int m) {
  require_order(m);
  const int n = m + 1;
  TensorLaw law;
  law.order = m;
  law.to_complex.assign(n * n, cplx{});
  law.to_cartesian.assign(n * n, cplx{});
  const double scale = std::ldexp(1.0, -m);
  for (int k = 0; k <= m; ++k) {
    for (int q = 0; q <= m - k; ++q) {
      for (int p = 0; p <= k; ++p) {
        const double mult = static_cast<double>(binomial(m - k, q) * binomial(k, p));
        // y-components in holomorphic slots carry -i/2, in antiholomorphic slots +i/2
        law.to_complex[k * n + p + q] += scale * mult * ipow(-q) * ipow(p);
        // inverse: dz/dy = i, dzbar/dy = -i
        law.to_cartesian[k * n + p + q] += mult * ipow(k) * ((p % 2) ? -1.0 : 1.0);
      }
    }
  }
  return law;
}

const TensorLaw& tensor_law(int m) {
  require_order(m);
  static std::once_flag once;
  static std::vector<TensorLaw> laws;
  std::call_once(once, [] {
    for (int k = 0; k <= kMaxOrder; ++k) laws.push_back(build_tensor_law(k));
  });
  return laws[m];
}

std::vector<cplx> pseudovector_to_complex(std::span<const double> ft, const TensorLaw& law) {
  const int m = law.order, n = m + 1;
  if (static_cast<int>(ft.size()) != n) fail(ErrorKind::InvalidArgument, "pseudovector length must be m+1");
  std::vector<cplx> F(n);
  for (int k = 0; k <= m / 2; ++k) {
    cplx s{};
    for (int j = 0; j < n; ++j) s += law.to_complex[k * n + j] * ft[j];
    F[k] = s;
  }
  // reality F_{m-k} = conj(F_k) imposed exactly
  for (int k = 0; k <= m / 2; ++k) F[m - k] = std::conj(F[k]);
  if (m % 2 == 0) F[m / 2] = F[m / 2].real();
  return F;
}

std::vector<cplx> pseudovector_to_complex(std::span<const double> ft) {
  return pseudovector_to_complex(ft, tensor_law(static_cast<int>(ft.size()) - 1));
}

std::vector<double> complex_to_pseudovector(std::span<const cplx> F, const TensorLaw& law, double tol) {
  const int m = law.order, n = m + 1;
  if (static_cast<int>(F.size()) != n) fail(ErrorKind::InvalidArgument, "pseudovector length must be m+1");
  double scale = 1.0;
  for (const auto& v : F) scale = std::max(scale, std::abs(v));
  for (int k = 0; k <= m; ++k)
    if (std::abs(F[k] - std::conj(F[m - k])) > tol * scale)
      fail(ErrorKind::NonRealResult, "complex pseudovector violates F_k = conj(F_{m-k})");
  std::vector<double> ft(n);
  for (int k = 0; k < n; ++k) {
    cplx s{};
    for (int j = 0; j < n; ++j) s += law.to_cartesian[k * n + j] * F[j];
    if (std::abs(s.imag()) > tol * scale * (1 << std::min(m, 20)))
      fail(ErrorKind::NonRealResult, "Cartesian component has an imaginary part");
    ft[k] = s.real();
  }
  return ft;
}

std::vector<double> complex_to_pseudovector(std::span<const cplx> F, double tol) {
  return complex_to_pseudovector(F, tensor_law(static_cast<int>(F.size()) - 1), tol);
}

std::vector<cplx> modes_from_complex(std::span<const cplx> F) {
  const int m = static_cast<int>(F.size()) - 1;
  std::vector<cplx> modes(m + 1);
  for (int k = 0; k <= m; ++k) modes[k] = static_cast<double>(binomial(m, k)) * F[k];
  return modes;
}

std::vector<cplx> complex_from_modes(std::span<const cplx> modes) {
  const int m = static_cast<int>(modes.size()) - 1;
  std::vector<cplx> F(m + 1);
  for (int k = 0; k <= m; ++k) F[k] = modes[k] / static_cast<double>(binomial(m, k));
  return F;
}

double contract_direct(std::span<const double> ft, const Direction& d) {
  DirectionWeights w(static_cast<int>(ft.size()) - 1, d);
  return w.apply(ft.data());
}

double contract_modes(std::span<const cplx> modes, const Direction& d) {
  const int m = static_cast<int>(modes.size()) - 1;
  cplx s{};
  for (int k = 0; k <= m; ++k) s += modes[k] * std::polar(1.0, -(2 * k - m) * d.angle);
  return s.real();
}

double TensorSource::contract(cplx x, const DirectionWeights& w) const {
  double buf[kMaxOrder + 1];
  evaluate(x, buf);
  return w.apply(buf);
}

SymmetricTensorField::SymmetricTensorField(int m, const Lattice& lat)
    : order_(m), lattice_(lat), comps_(m + 1, std::vector<double>(lat.size(), 0.0)) {
  require_order(m);
}

void SymmetricTensorField::evaluate(cplx x, double* out) const {
  for (int k = 0; k <= order_; ++k) out[k] = bilinear(grid(), comps_[k], x);
}

void SymmetricTensorField::apply_mask() {
  for (auto& c : comps_)
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!lattice_.inside(i)) c[i] = 0.0;
}

ComplexModeField::ComplexModeField(int m, const Lattice& lat)
    : order_(m), lattice_(lat), F_(m + 1, std::vector<cplx>(lat.size())) {
  require_order(m);
}

void ComplexModeField::allocate_modes() { modes_.assign(order_ + 1, std::vector<cplx>(lattice_.size())); }

std::vector<cplx>& ComplexModeField::mode(int n) {
  if ((n + order_) % 2 != 0 || n < -order_ || n > order_) fail(ErrorKind::InvalidArgument, "mode index outside support");
  return modes_.at((n + order_) / 2);
}

const std::vector<cplx>& ComplexModeField::mode(int n) const {
  if ((n + order_) % 2 != 0 || n < -order_ || n > order_) fail(ErrorKind::InvalidArgument, "mode index outside support");
  return modes_.at((n + order_) / 2);
}

SymmetricTensorField sample_source(const TensorSource& src, const Lattice& lat) {
  const int m = src.order();
  SymmetricTensorField f(m, lat);
  double buf[kMaxOrder + 1];
  for (std::size_t k = 0; k < lat.size(); ++k) {
    if (!lat.inside(k)) continue;
    src.evaluate(lat.spec().node(k), buf);
    for (int c = 0; c <= m; ++c) f.component(c)[k] = buf[c];
  }
  return f;
}

ComplexModeField cartesian_to_complex(const SymmetricTensorField& f) {
  const int m = f.order();
  const TensorLaw& law = tensor_law(m);
  ComplexModeField out(m, f.lattice());
  std::vector<double> ft(m + 1);
  for (std::size_t k = 0; k < f.lattice().size(); ++k) {
    for (int c = 0; c <= m; ++c) ft[c] = f.component(c)[k];
    auto F = pseudovector_to_complex(ft, law);
    for (int c = 0; c <= m; ++c) out.F(c)[k] = F[c];
  }
  return out;
}

SymmetricTensorField complex_to_cartesian(const ComplexModeField& F, double tol) {
  const int m = F.order();
  const TensorLaw& law = tensor_law(m);
  SymmetricTensorField out(m, F.lattice());
  std::vector<cplx> v(m + 1);
  for (std::size_t k = 0; k < F.lattice().size(); ++k) {
    for (int c = 0; c <= m; ++c) v[c] = F.F(c)[k];
    auto ft = complex_to_pseudovector(v, law, tol);
    for (int c = 0; c <= m; ++c) out.component(c)[k] = ft[c];
  }
  return out;
}

ComplexModeField angular_modes(const ComplexModeField& F) {
  ComplexModeField out = F;
  const int m = F.order();
  out.allocate_modes();
  for (int k = 0; k <= m; ++k) {
    const double c = static_cast<double>(binomial(m, k));
    auto& dst = out.mode(2 * k - m);
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = c * F.F(k)[i];
  }
  return out;
}

std::vector<double> contract_with_theta(const SymmetricTensorField& f, const Direction& d) {
  DirectionWeights w(f.order(), d);
  std::vector<double> out(f.lattice().size());
  std::vector<double> ft(f.order() + 1);
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int c = 0; c <= f.order(); ++c) ft[c] = f.component(c)[k];
    out[k] = w.apply(ft.data());
  }
  return out;
}

std::vector<double> contract_with_modes(const ComplexModeField& F, const Direction& d) {
  if (!F.has_modes()) fail(ErrorKind::InvalidArgument, "angular modes not filled");
  const int m = F.order();
  std::vector<double> out(F.lattice().size());
  std::vector<cplx> md(m + 1);
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int c = 0; c <= m; ++c) md[c] = F.mode(2 * c - m)[k];
    out[k] = contract_modes(md, d);
  }
  return out;
}

}  // namespace ttomo
