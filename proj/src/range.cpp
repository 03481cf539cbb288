#include "ttomo/range.hpp"

#include <algorithm>
#include <cmath>

#include "ttomo/cauchy_riemann.hpp"
#include "ttomo/errors.hpp"

namespace ttomo {

bool is_attenuated(const Attenuation* a) { return a != nullptr; }

void require_truncation(const PipelineOptions& opt, int m) {
  if (opt.n_modes < 2 * m + 8)
    fail(ErrorKind::TruncationTooShort,
         "N_modes = " + std::to_string(opt.n_modes) + " is below 2m + 8 = " + std::to_string(2 * m + 8));
}

void require_positive(const Attenuation& a, const Lattice& probe, double floor) {
  if (a.identically_zero()) fail(ErrorKind::AttenuationNotPositive, "attenuated path requested with a = 0");
  const double mn = a.min_over(probe);
  // the boundary itself is not on the probe lattice
  double mb = mn;
  for (const cplx& z : a.domain().sample_boundary(128).zeta) mb = std::min(mb, a.value(z * (1.0 - 1e-12)));
  if (!(std::min(mn, mb) > floor))
    fail(ErrorKind::AttenuationNotPositive,
         "min a = " + std::to_string(std::min(mn, mb)) + " is not above " + std::to_string(floor));
}

namespace {

Lattice probe_lattice(const ConvexDomain& dom) { return Lattice(GridSpec::square(65, dom.bounding_radius()), dom); }

AttenuationBundle boundary_bundle(const ConvexDomain& dom, const Attenuation& a, int n_b, const PipelineOptions& opt) {
  const auto bg = dom.sample_boundary(n_b);
  return build_bundle(a, bg.zeta, opt.bundle_n_theta, opt.bundle_k_h);
}

}  // namespace

ModeSequence attenuated_boundary_modes(const ModeSequence& full, const ConvexDomain& dom, const Attenuation& a,
                                       const PipelineOptions& opt) {
  const auto b = boundary_bundle(dom, a, static_cast<int>(full.points()), opt);
  return apply_eG(nonpositive_modes(full), -1, b);
}

ModeSequence interior_tail(const ModeSequence& full, const ConvexDomain& dom, const Attenuation* a, int m,
                           std::span<const cplx> points, const PipelineOptions& opt) {
  require_order(m);
  const int q = m / 2;
  const bool even = m % 2 == 0;
  if (!is_attenuated(a)) {
    auto [ge, go] = build_parity(nonpositive_modes(full));
    return even ? bukhgeim_cauchy(left_shift(go, q), dom, points, 1, opt.cauchy)
                : bukhgeim_cauchy(left_shift(ge, q + 1), dom, points, 1, opt.cauchy);
  }
  auto [he, ho] = build_parity(attenuated_boundary_modes(full, dom, *a, opt));
  ModeSequence v;
  if (even)
    v = interleave(bukhgeim_cauchy(left_shift(he, q), dom, points, 1, opt.cauchy),
                   bukhgeim_cauchy(left_shift(ho, q), dom, points, 1, opt.cauchy));
  else
    v = interleave(bukhgeim_cauchy(left_shift(ho, q), dom, points, 1, opt.cauchy),
                   bukhgeim_cauchy(left_shift(he, q + 1), dom, points, 1, opt.cauchy));
  const auto bundle = build_bundle(*a, points, opt.bundle_n_theta, opt.bundle_k_h);
  return apply_eG(v, 1, bundle);
}

std::vector<cplx> boundary_tail_derivative(const ModeSequence& full, const ConvexDomain& dom, const Attenuation* a,
                                           int m, int index, const PipelineOptions& opt) {
  constexpr int kRings = 4;
  const int n_b = static_cast<int>(full.points());
  const auto bg = dom.sample_boundary(n_b);
  // innermost ring at d_min / 2, the closest admissible target
  const double delta = 0.5 * cauchy_min_distance(dom, n_b);
  std::vector<cplx> pts;
  for (int r = 1; r <= kRings; ++r) {
    const auto ring = ring_points(bg, r * delta);
    pts.insert(pts.end(), ring.begin(), ring.end());
  }
  // the stencil divides by delta, so the rings get a finer quadrature
  PipelineOptions fine = opt;
  fine.cauchy.resolve_factor *= 2.0;
  fine.cauchy.max_refine *= 2;
  const auto tail = interior_tail(full, dom, a, m, pts, fine);
  const std::size_t pos = tail.position_of(index);
  std::vector<std::vector<cplx>> rings(kRings, std::vector<cplx>(n_b));
  std::vector<cplx> trace(n_b);
  for (int i = 0; i < n_b; ++i) {
    for (int r = 0; r < kRings; ++r) rings[r][i] = tail.at(static_cast<std::size_t>(r) * n_b + i, pos);
    trace[i] = full.value(i, index);
  }
  return boundary_cr_derivatives(bg, trace, rings, delta).d;
}

double first_order_g0_residual(const ModeSequence& full, const ConvexDomain& dom, const Attenuation& a,
                               const PipelineOptions& opt) {
  const auto d = boundary_tail_derivative(full, dom, &a, 1, -1, opt);
  const auto bg = dom.sample_boundary(static_cast<int>(full.points()));
  double err = 0.0, scale = 0.0;
  for (int i = 0; i < bg.n; ++i) {
    const double g0 = full.value(i, 0).real();
    // evaluate a just inside the boundary; a is supported on the closed domain
    const double ai = a.value(bg.zeta[i] * (1.0 - 1e-12));
    const double v0 = -2.0 * d[i].real() / ai;
    err = std::max(err, std::abs(g0 - v0));
    scale = std::max(scale, std::abs(g0));
  }
  return scale > 0.0 ? err / scale : err;
}

double RangeReport::max_residual() const {
  double r = 0.0;
  for (const auto& c : conditions) r = std::max(r, c.residual);
  return r;
}

bool RangeReport::pass() const {
  return std::all_of(conditions.begin(), conditions.end(), [](const RangeCondition& c) { return c.pass; });
}

RangeReport check_range(const Sinogram& g, int m, const Attenuation* a, const PipelineOptions& opt) {
  require_order(m);
  const ConvexDomain dom = g.make_domain();
  const bool att = is_attenuated(a);
  if (att) require_positive(*a, probe_lattice(dom), 0.0);
  require_truncation(opt, m);

  RangeReport rep;
  rep.order = m;
  rep.attenuated = att;
  rep.attenuation_tag = att ? a->tag() : "zero";
  rep.n_b = g.n_b;
  rep.n_theta = g.n_theta;
  rep.n_modes = opt.n_modes;
  rep.tolerance = opt.tolerance;

  const ModeSequence full = fourier_modes(g, opt.n_modes);
  rep.tail_mass = tail_mass_fraction(nonpositive_modes(full));
  rep.tail_warning = rep.tail_mass > kTailMassWarning;
  if (rep.tail_warning) rep.warnings.push_back("angular tail mass above 10%; increase N_modes");

  auto add = [&](const std::string& name, const ModeSequence& s) {
    RangeCondition c{name, range_residual(s, dom, 1)};
    c.pass = c.residual <= opt.tolerance;
    rep.conditions.push_back(c);
  };
  const int q = m / 2;
  const std::string Lq = "L^" + std::to_string(q) + " ";
  const std::string Lq1 = "L^" + std::to_string(q + 1) + " ";

  if (!att) {
    auto [ge, go] = build_parity(nonpositive_modes(full));
    if (m % 2 == 0) {
      add("(I+iH) g^even", ge);
      add("(I+iH) " + Lq + "g^odd", left_shift(go, q));
    } else {
      add("(I+iH) " + Lq1 + "g^even", left_shift(ge, q + 1));
      rep.k_max = opt.resolved_k_max(m);
      for (int k = 1; k <= rep.k_max; ++k)
        add("(I+iH) g^{2k-1}, k=" + std::to_string(k), build_augmented(full, k));
    }
    return rep;
  }

  auto [he, ho] = build_parity(attenuated_boundary_modes(full, dom, *a, opt));
  if (m % 2 == 0) {
    add("(I+iH) " + Lq + "g_h^even", left_shift(he, q));
    add("(I+iH) " + Lq + "g_h^odd", left_shift(ho, q));
  } else {
    add("(I+iH) " + Lq1 + "g_h^even", left_shift(he, q + 1));
    add("(I+iH) " + Lq + "g_h^odd", left_shift(ho, q));
    if (m == 1) {
      RangeCondition c{"g_0 boundary limit", first_order_g0_residual(full, dom, *a, opt)};
      c.pass = c.residual <= opt.tolerance;
      rep.conditions.push_back(c);
    }
  }
  return rep;
}

}  // namespace ttomo
