#include "ttomo/psi_class.hpp"

#include <algorithm>
#include <cmath>

#include "ttomo/errors.hpp"
#include "ttomo/fft.hpp"

namespace ttomo {

const char* psi_kind_name(PsiKind k) {
  switch (k) {
    case PsiKind::NonattEven: return "nonatt-even";
    case PsiKind::NonattOdd: return "nonatt-odd";
    case PsiKind::AttEven: return "att-even";
    default: return "att-odd";
  }
}

const char* psi_provenance_name(PsiProvenance p) {
  switch (p) {
    case PsiProvenance::UserSupplied: return "user-supplied";
    case PsiProvenance::HarmonicExtension: return "harmonic-extension";
    case PsiProvenance::OracleModes: return "oracle-modes";
    default: return "zero";
  }
}

PsiStrategy parse_psi_strategy(const std::string& s) {
  if (s == "zero") return PsiStrategy::Zero;
  if (s == "harmonic" || s == "harmonic-extension") return PsiStrategy::Harmonic;
  if (s == "oracle" || s == "oracle-modes") return PsiStrategy::Oracle;
  fail(ErrorKind::Config, "unknown psi strategy '" + s + "' (expected zero, harmonic or oracle)");
}

PsiKind psi_kind_for(int m, bool attenuated) {
  if (attenuated) return m % 2 == 0 ? PsiKind::AttEven : PsiKind::AttOdd;
  return m % 2 == 0 ? PsiKind::NonattEven : PsiKind::NonattOdd;
}

std::vector<int> psi_indices(PsiKind kind, int m) {
  require_order(m);
  const int q = m / 2;
  std::vector<int> out;
  switch (kind) {
    case PsiKind::NonattEven:
      if (m % 2) fail(ErrorKind::PsiKindMismatch, "nonatt-even needs even order");
      for (int j = 1; j <= q; ++j) out.push_back(-(2 * j - 1));
      break;
    case PsiKind::NonattOdd:
      if (m % 2 == 0) fail(ErrorKind::PsiKindMismatch, "nonatt-odd needs odd order");
      for (int j = 0; j <= q; ++j) out.push_back(-2 * j);
      break;
    case PsiKind::AttEven:
      if (m % 2) fail(ErrorKind::PsiKindMismatch, "att-even needs even order");
      for (int j = 0; j <= q - 1; ++j) out.push_back(-2 * j);
      break;
    case PsiKind::AttOdd:
      if (m % 2 == 0) fail(ErrorKind::PsiKindMismatch, "att-odd needs odd order");
      for (int j = 1; j <= q; ++j) out.push_back(-(2 * j - 1));
      break;
  }
  return out;
}

const std::vector<cplx>& PsiClassElement::function(int index) const {
  for (std::size_t j = 0; j < indices.size(); ++j)
    if (indices[j] == index) return functions[j];
  fail(ErrorKind::PsiKindMismatch, "psi element has no function for mode " + std::to_string(index));
}

namespace {

// Coefficients c_k, |k| < n/2, of the trigonometric interpolant; Nyquist dropped.
struct Trig {
  std::vector<cplx> pos, neg;  // pos[k] = c_k (k >= 0), neg[k] = c_{-k} (k >= 1)
};

Trig trig_coefficients(std::span<const cplx> samples) {
  const auto c = fourier_coefficients(samples);
  const int n = static_cast<int>(c.size());
  const int K = (n - 1) / 2;
  Trig t;
  t.pos.resize(K + 1);
  t.neg.assign(K + 1, cplx{});
  for (int k = 0; k <= K; ++k) t.pos[k] = c[k];
  for (int k = 1; k <= K; ++k) t.neg[k] = c[n - k];
  return t;
}

cplx horner(const std::vector<cplx>& c, cplx z, std::size_t from) {
  cplx p{};
  for (std::size_t k = c.size(); k-- > from;) p = p * z + c[k];
  return p;
}

// sum_{k>=0} c_k z^k + sum_{k>=1} c_{-k} zbar^k
cplx harmonic_eval(const Trig& t, cplx z) {
  const cplx zb = std::conj(z);
  cplx p{};
  for (std::size_t k = t.neg.size(); k-- > 1;) p = p * zb + t.neg[k];
  return horner(t.pos, z, 0) + p * zb;
}

// Outward normal derivative of the harmonic extension on the unit circle.
std::vector<cplx> harmonic_normal_derivative(std::span<const cplx> trace) {
  auto c = fourier_coefficients(trace);
  const int n = static_cast<int>(c.size());
  for (int k = 0; k < n; ++k) {
    const int kk = k <= n / 2 ? k : k - n;
    c[k] *= (2 * std::abs(kk) == n) ? 0.0 : static_cast<double>(std::abs(kk));
  }
  std::vector<cplx> out(n);
  FourierPlan(n, 1).execute(c, out);
  return out;
}

void require_disk(const ConvexDomain& dom, const char* what) {
  if (!dom.is_disk()) fail(ErrorKind::Unsupported, std::string(what) + " is implemented on the unit disk only");
}

// Values a(zeta) just inside the closed domain.
std::vector<double> boundary_attenuation(const Attenuation& a, const BoundaryGrid& bg) {
  std::vector<double> out(bg.n);
  for (int i = 0; i < bg.n; ++i) out[i] = a.value(bg.zeta[i] * (1.0 - 1e-12));
  return out;
}

double max_abs(std::span<const cplx> v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

std::vector<cplx> harmonic_extension(std::span<const cplx> trace, const Lattice& lat) {
  require_disk(lat.domain(), "harmonic extension");
  const Trig t = trig_coefficients(trace);
  std::vector<cplx> out(lat.size());
#pragma omp parallel for schedule(static)
  for (std::size_t k = 0; k < lat.size(); ++k)
    if (lat.inside(k)) out[k] = harmonic_eval(t, lat.spec().node(k));
  return out;
}

double psi_trace_residual(const PsiClassElement& psi, const ModeSequence& full) {
  if (psi.empty()) return 0.0;
  if (psi.boundary.size() != psi.indices.size()) return std::numeric_limits<double>::quiet_NaN();
  double r = 0.0;
  for (std::size_t j = 0; j < psi.indices.size(); ++j) {
    const auto& b = psi.boundary[j];
    if (b.size() != full.points()) fail(ErrorKind::InvalidArgument, "psi boundary values do not match the data");
    for (std::size_t i = 0; i < b.size(); ++i) r = std::max(r, std::abs(b[i] - full.value(i, psi.indices[j])));
  }
  return r;
}

PsiClassElement default_psi(const ModeSequence& full, const Lattice& lat, int m, const Attenuation* a,
                            PsiStrategy strategy, const PipelineOptions& opt, const OracleSource* oracle) {
  const bool att = is_attenuated(a);
  PsiClassElement e;
  e.kind = psi_kind_for(m, att);
  e.order = m;
  e.lattice = lat;
  e.indices = psi_indices(e.kind, m);
  if (e.empty()) {
    e.provenance = strategy == PsiStrategy::Oracle ? PsiProvenance::OracleModes
                   : strategy == PsiStrategy::Harmonic ? PsiProvenance::HarmonicExtension
                                                       : PsiProvenance::Zero;
    e.trace_residual = e.gradient_residual = 0.0;
    return e;
  }
  const ConvexDomain& dom = lat.domain();
  const int n_b = static_cast<int>(full.points());
  const BoundaryGrid bg = dom.sample_boundary(n_b);
  for (int idx : e.indices)
    if (!full.has_index(idx)) fail(ErrorKind::InvalidArgument, "boundary mode " + std::to_string(idx) + " missing");
  const auto is_real = [](int idx) { return idx == 0; };

  if (strategy == PsiStrategy::Zero) {
    e.provenance = PsiProvenance::Zero;
    for (std::size_t j = 0; j < e.indices.size(); ++j) {
      e.functions.emplace_back(lat.size(), cplx{});
      e.boundary.emplace_back(n_b, cplx{});
    }
    e.trace_residual = psi_trace_residual(e, full);
    return e;
  }

  if (strategy == PsiStrategy::Oracle) {
    if (!oracle || !oracle->f) fail(ErrorKind::InvalidArgument, "oracle strategy needs the source field");
    e.provenance = PsiProvenance::OracleModes;
    int depth = 0;
    for (int idx : e.indices) depth = std::max(depth, -idx);
    const auto inner = transport_modes_on_grid(*oracle->f, oracle->a, lat, oracle->n_theta, depth + 1);
    const auto edge = transport_modes_at_points(*oracle->f, oracle->a, dom, bg.zeta, oracle->n_theta, depth + 1,
                                                QuadratureOptions::for_source(*oracle->f));
    for (int idx : e.indices) {
      auto f = inner.u(idx);
      auto b = edge[-idx];
      if (is_real(idx)) {
        for (auto& v : f) v = v.real();
        for (auto& v : b) v = v.real();
      }
      e.functions.push_back(std::move(f));
      e.boundary.push_back(std::move(b));
    }
    e.trace_residual = psi_trace_residual(e, full);
    if (att) e.notes.push_back("gradient conditions hold for the true modes; not re-evaluated");
    return e;
  }

  // Harmonic extension of each prescribed trace.
  require_disk(dom, "harmonic-extension psi");
  e.provenance = PsiProvenance::HarmonicExtension;
  std::vector<std::vector<cplx>> traces;
  for (int idx : e.indices) {
    std::vector<cplx> tr(n_b);
    for (int i = 0; i < n_b; ++i) tr[i] = is_real(idx) ? cplx(full.value(i, idx).real(), 0.0) : full.value(i, idx);
    const Trig t = trig_coefficients(tr);
    std::vector<cplx> b(n_b);
    for (int i = 0; i < n_b; ++i) b[i] = harmonic_eval(t, bg.zeta[i]);
    e.functions.push_back(harmonic_extension(tr, lat));
    e.boundary.push_back(std::move(b));
    traces.push_back(std::move(tr));
  }
  e.trace_residual = psi_trace_residual(e, full);
  if (!att) return e;

  // Boundary-layer blend: psi += (r - 1) chi(r) c(beta) sets the normal
  // derivative on the circle without touching the trace. Functions are
  // processed from the deepest index up, since each gradient target involves
  // d of the mode two below it.
  const auto ab = boundary_attenuation(*a, bg);
  std::vector<cplx> d_above = boundary_tail_derivative(full, dom, a, m, -m, opt);
  const SmoothCutoff layer{0.0, 1.0};
  const double width = 0.25;
  double worst = 0.0;
  for (std::size_t jj = e.indices.size(); jj-- > 0;) {
    const int idx = e.indices[jj];
    const auto& tr = traces[jj];
    const auto tangential = trig_derivative(tr);  // unit circle: |zeta'| = 1
    const auto hn = harmonic_normal_derivative(tr);
    std::vector<cplx> target(n_b), corr(n_b), dpsi(n_b), dbar(n_b);
    for (int i = 0; i < n_b; ++i) {
      const cplx nu = bg.normal[i], tau = kI * nu;
      target[i] = -d_above[i] - ab[i] * full.value(i, idx - 1);
      cplx un = std::conj(nu) * (2.0 * target[i] - tau * tangential[i]);
      if (is_real(idx)) un = un.real();
      corr[i] = un - hn[i];
      dpsi[i] = 0.5 * (std::conj(nu) * un + std::conj(tau) * tangential[i]);
      dbar[i] = 0.5 * (nu * un + tau * tangential[i]);
    }
    double err = 0.0;
    for (int i = 0; i < n_b; ++i) err = std::max(err, std::abs(dbar[i] - target[i]));
    const double scale = max_abs(target);
    worst = std::max(worst, scale > 0.0 ? err / scale : err);

    const Trig c = trig_coefficients(corr);
    auto& f = e.functions[jj];
#pragma omp parallel for schedule(static)
    for (std::size_t k = 0; k < lat.size(); ++k) {
      if (!lat.inside(k)) continue;
      const cplx z = lat.spec().node(k);
      const double r = std::abs(z);
      if (r <= 1.0 - width || r == 0.0) continue;
      const cplx add = (r - 1.0) * layer((1.0 - r) / width) * harmonic_eval(c, z / r);
      f[k] += is_real(idx) ? cplx(add.real(), 0.0) : add;
    }
    d_above = std::move(dpsi);
  }
  if (e.kind == PsiKind::AttOdd) {
    // 2 Re d psi_{-1} = -a g_0; d_above now holds d psi_{-1}.
    double err = 0.0, scale = 0.0;
    for (int i = 0; i < n_b; ++i) {
      const double want = -ab[i] * full.value(i, 0).real();
      err = std::max(err, std::abs(2.0 * d_above[i].real() - want));
      scale = std::max(scale, std::abs(want));
    }
    worst = std::max(worst, scale > 0.0 ? err / scale : err);
  }
  e.gradient_residual = worst;
  e.gradient_ok = worst <= opt.tolerance;
  if (!e.gradient_ok)
    e.notes.push_back("GradientConditionUnsatisfiable: blend residual " + std::to_string(worst) + " above tolerance");
  return e;
}

}  // namespace ttomo
