#include "ttomo/reconstruct.hpp"

#include <algorithm>
#include <cmath>

#include "ttomo/cauchy_riemann.hpp"
#include "ttomo/errors.hpp"

namespace ttomo {

namespace {

bool same_domain(const ConvexDomain& x, const ConvexDomain& y) {
  return x.kind() == y.kind() && std::abs(x.semi_a() - y.semi_a()) < 1e-12 && std::abs(x.semi_b() - y.semi_b()) < 1e-12;
}

// Fill inside-mask nodes outside `known` from their filled 4-neighbours, one
// layer per sweep.
void extrapolate_collar(const Lattice& lat, std::vector<std::uint8_t> known, std::vector<cplx>& v) {
  const GridSpec& g = lat.spec();
  for (;;) {
    std::vector<std::size_t> layer;
    std::vector<cplx> vals;
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        const std::size_t k = g.index(i, j);
        if (known[k] || !lat.inside(k)) continue;
        cplx sum{};
        int cnt = 0;
        const int di[4] = {1, -1, 0, 0}, dj[4] = {0, 0, 1, -1};
        for (int t = 0; t < 4; ++t) {
          const int ii = i + di[t], jj = j + dj[t];
          if (ii < 0 || jj < 0 || ii >= g.nx || jj >= g.ny) continue;
          const std::size_t kk = g.index(ii, jj);
          if (known[kk]) {
            sum += v[kk];
            ++cnt;
          }
        }
        if (cnt) {
          layer.push_back(k);
          vals.push_back(sum / static_cast<double>(cnt));
        }
      }
    if (layer.empty()) break;
    for (std::size_t t = 0; t < layer.size(); ++t) {
      v[layer[t]] = vals[t];
      known[layer[t]] = 1;
    }
  }
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!lat.inside(k)) v[k] = 0.0;
}

class ModeMap {
 public:
  ModeMap(const Lattice& lat, const std::vector<std::uint8_t>& valid, std::map<int, std::vector<cplx>>& u)
      : lat_(lat), valid_(valid), u_(u) {}

  std::vector<cplx>& operator[](int n) {
    auto it = u_.find(n);
    if (it == u_.end()) it = u_.emplace(n, std::vector<cplx>(lat_.size())).first;
    return it->second;
  }
  bool has(int n) const { return u_.count(n) > 0; }

  const CrPair& cr(int n) {
    auto it = cr_.find(n);
    if (it != cr_.end()) return it->second;
    if (!has(n)) fail(ErrorKind::InvalidArgument, "mode " + std::to_string(n) + " not constructed");
    return cr_.emplace(n, cr_derivatives(lat_.spec(), u_.at(n), valid_)).first->second;
  }
  // dbar u_n, using u_1 = conj(u_{-1}) for n = 1.
  cplx dbar(int n, std::size_t k) { return n == 1 ? std::conj(cr(-1).d[k]) : cr(n).dbar[k]; }
  cplx d(int n, std::size_t k) { return cr(n).d[k]; }

 private:
  const Lattice& lat_;
  const std::vector<std::uint8_t>& valid_;
  std::map<int, std::vector<cplx>>& u_;
  std::map<int, CrPair> cr_;
};

}  // namespace

Reconstruction reconstruct(const Sinogram& g, int m, const Attenuation* a, const PsiClassElement& psi,
                           const Lattice& lat, const ReconstructOptions& opt) {
  require_order(m);
  const ConvexDomain dom = g.make_domain();
  if (!same_domain(dom, lat.domain())) fail(ErrorKind::InvalidArgument, "lattice and sinogram domains differ");
  const bool att = is_attenuated(a);
  if (att) require_positive(*a, lat, opt.min_attenuation);
  require_truncation(opt, m);
  const PsiKind kind = psi_kind_for(m, att);
  if (psi.kind != kind || psi.order != m || psi.indices != psi_indices(kind, m))
    fail(ErrorKind::PsiKindMismatch, std::string("reconstruction needs a ") + psi_kind_name(kind) +
                                         " element of order " + std::to_string(m) + ", got " + psi_kind_name(psi.kind));
  if (!psi.empty() && !(psi.lattice.spec() == lat.spec()))
    fail(ErrorKind::PsiKindMismatch, "psi functions live on a different lattice");

  Reconstruction rec;
  const ModeSequence full = fourier_modes(g, opt.n_modes);
  if (opt.check_first) {
    rec.range = check_range(g, m, a, opt);
    if (!rec.range->pass())
      rec.warnings.push_back("range conditions fail (max residual " + std::to_string(rec.range->max_residual()) +
                             "); the data are not in the range");
  }
  if (!psi.empty() && std::isfinite(psi.trace_residual) && psi.trace_residual > 1e-6)
    rec.warnings.push_back("psi trace mismatch " + std::to_string(psi.trace_residual));
  if (!psi.gradient_ok) rec.warnings.push_back("psi gradient conditions not met; see psi notes");

  // Evaluation targets keep d_min away from the boundary.
  const double collar = opt.collar * cauchy_min_distance(dom, g.n_b);
  rec.targets.assign(lat.size(), 0);
  std::vector<std::size_t> tnodes;
  std::vector<cplx> tpts;
  if (opt.collar < 0.5) fail(ErrorKind::TargetTooCloseToBoundary, "collar must be at least d_min / 2");
  for (std::size_t k = 0; k < lat.size(); ++k) {
    if (!lat.inside(k)) continue;
    const cplx x = lat.spec().node(k);
    if (dom.distance_to_boundary(x) >= collar) {
      rec.targets[k] = 1;
      tnodes.push_back(k);
      tpts.push_back(x);
    } else {
      ++rec.collar_nodes;
    }
  }
  if (tnodes.empty()) fail(ErrorKind::InvalidArgument, "lattice has no nodes away from the boundary collar");

  ModeMap U(lat, rec.targets, rec.modes);
  const ModeSequence tail = interior_tail(full, dom, a, m, tpts, opt);
  const std::size_t n_tail = att ? 2 : 1;
  for (std::size_t e = 0; e < n_tail; ++e) {
    auto& dst = U[tail.index_at(e)];
    for (std::size_t p = 0; p < tnodes.size(); ++p) dst[tnodes[p]] = tail.at(p, e);
  }
  for (int idx : psi.indices) {
    const auto& src = psi.function(idx);
    auto& dst = U[idx];
    for (std::size_t k : tnodes) dst[k] = src[k];
  }

  std::vector<double> av;
  if (att) {
    av.assign(lat.size(), 0.0);
    for (std::size_t k : tnodes) av[k] = a->value(lat.spec().node(k));
  }

  // Intermediate modes of the opposite parity from the homogeneous equations.
  const int q = m / 2;
  if (att) {
    auto gap = [&](int n) {
      auto& dst = U[n];
      for (std::size_t k : tnodes) dst[k] = -(U.dbar(n + 1, k) + U.d(n - 1, k)) / av[k];
    };
    if (m % 2 == 0) {
      for (int j = q - 1; j >= 0; --j) gap(-(2 * j + 1));
    } else {
      for (int j = q; j >= 1; --j) gap(-2 * j);
      auto& u0 = U[0];
      for (std::size_t k : tnodes) u0[k] = -2.0 * U.d(-1, k).real() / av[k];
    }
  }

  // f_j = dbar u_{1-j} + d u_{-1-j} + a u_{-j}, j = m, m-2, ...
  ComplexModeField F(m, lat);
  const std::vector<std::uint8_t> all_inside = lat.mask();
  for (int j = m; j >= 0; j -= 2) {
    std::vector<cplx> fj(lat.size());
    for (std::size_t k : tnodes) {
      cplx v = U.dbar(1 - j, k) + U.d(-1 - j, k);
      if (att) v += av[k] * U[-j][k];
      fj[k] = j == 0 ? cplx(v.real(), 0.0) : v;
    }
    extrapolate_collar(lat, rec.targets, fj);
    // modes[k] = f_{2k-m} = C(m,k) F_k; f_{-j} = conj(f_j)
    const int kp = (m + j) / 2, kn = (m - j) / 2;
    const double c = static_cast<double>(binomial(m, kp));
    auto& Fp = F.F(kp);
    auto& Fn = F.F(kn);
    for (std::size_t k = 0; k < lat.size(); ++k) {
      Fp[k] = fj[k] / c;
      Fn[k] = std::conj(fj[k]) / c;
    }
  }
  rec.field = complex_to_cartesian(F);
  rec.field.apply_mask();
  return rec;
}

double relative_l2_error(const SymmetricTensorField& x, const SymmetricTensorField& ref) {
  if (x.order() != ref.order() || !(x.grid() == ref.grid())) fail(ErrorKind::InvalidArgument, "fields do not match");
  const int m = x.order();
  double num = 0.0, den = 0.0;
  for (int c = 0; c <= m; ++c) {
    const double w = static_cast<double>(binomial(m, c));
    const auto& a = x.component(c);
    const auto& b = ref.component(c);
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (!ref.lattice().inside(k)) continue;
      num += w * (a[k] - b[k]) * (a[k] - b[k]);
      den += w * b[k] * b[k];
    }
  }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

double sinogram_relative_error(const Sinogram& x, const Sinogram& ref) {
  if (x.n_b != ref.n_b || x.n_theta != ref.n_theta) fail(ErrorKind::InvalidArgument, "sinogram shapes differ");
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < ref.values.size(); ++k) {
    if (ref.region[k] != Region::Plus) continue;
    num += (x.values[k] - ref.values[k]) * (x.values[k] - ref.values[k]);
    den += ref.values[k] * ref.values[k];
  }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

GaugeProbe gauge_probe(const Sinogram& g, int m, const Attenuation* a, const PsiClassElement& psi1,
                       const PsiClassElement& psi2, const Lattice& lat, const ReconstructOptions& opt) {
  if (psi_indices(psi_kind_for(m, is_attenuated(a)), m).empty())
    fail(ErrorKind::NoGaugeClass, "order " + std::to_string(m) + " has no free modes; the reconstruction is unique");
  GaugeProbe out;
  out.field1 = reconstruct(g, m, a, psi1, lat, opt).field;
  ReconstructOptions o2 = opt;
  o2.check_first = false;
  out.field2 = reconstruct(g, m, a, psi2, lat, o2).field;
  out.field_distance = relative_l2_error(out.field2, out.field1);
  const ConvexDomain dom = g.make_domain();
  const Sinogram s1 = trace_data(out.field1, a, dom, g.n_b, g.n_theta);
  const Sinogram s2 = trace_data(out.field2, a, dom, g.n_b, g.n_theta);
  double d = 0.0;
  for (std::size_t k = 0; k < s1.values.size(); ++k)
    if (s1.region[k] == Region::Plus) d = std::max(d, std::abs(s1.values[k] - s2.values[k]));
  out.data_discrepancy = d;
  const double gm = g.max_abs();
  out.relative_discrepancy = gm > 0.0 ? d / gm : d;
  return out;
}

double conjugate_mode_check(const ModeSequence& full, const ConvexDomain& dom, std::span<const cplx> points,
                            int k_max, PositiveEntries positive, const CauchyOptions& opt) {
  double worst = 0.0;
  for (int k = 1; k <= k_max; ++k) {
    const ModeSequence u = bukhgeim_cauchy(build_augmented(full, k, positive), dom, points, 1, opt);
    const std::size_t neg = u.position_of(-(2 * k - 1));
    for (std::size_t p = 0; p < u.points(); ++p)
      worst = std::max(worst, std::abs(u.at(p, 0) - std::conj(u.at(p, neg))));
  }
  return worst;
}

}  // namespace ttomo
