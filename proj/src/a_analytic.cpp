#include "ttomo/a_analytic.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "ttomo/errors.hpp"
#include "ttomo/fft.hpp"

namespace ttomo {

double cauchy_min_distance(const ConvexDomain& dom, int n_b) {
  return dom.bounding_radius() * kTwoPi / n_b;
}

namespace {

void require_boundary_sequence(const ModeSequence& g, int shift) {
  if (g.points() < 4) fail(ErrorKind::InvalidArgument, "boundary sequence needs at least 4 nodes");
  if (shift < 1) fail(ErrorKind::InvalidArgument, "shift must be 1 or 2");
}

ModeSequence upsample(const ModeSequence& g, int factor) {
  if (factor == 1) return g;
  const std::size_t n = g.points(), m = n * factor;
  ModeSequence out(m, g.length(), g.start_index(), g.step(), g.parity());
  out.set_shift_count(g.shift_count());
  for (std::size_t j = 0; j < g.length(); ++j) out.set_column(j, trig_resample(g.column(j), static_cast<int>(m)));
  return out;
}

// Adds the contribution of one boundary node to the target accumulator.
inline void accumulate(const cplx* row, std::size_t L, int shift, cplx cw, double bw, cplx r, cplx* S, cplx* acc) {
  for (std::size_t p = L; p-- > 0;) {
    const std::size_t q = p + shift;
    S[p] = q < L ? r * (row[q] + S[q]) : cplx{};
  }
  for (std::size_t p = 0; p < L; ++p) acc[p] += cw * row[p] + bw * S[p];
}

}  // namespace

ModeSequence bukhgeim_cauchy(const ModeSequence& g, const ConvexDomain& dom, std::span<const cplx> targets,
                             int shift, const CauchyOptions& opt) {
  require_boundary_sequence(g, shift);
  const int nb = static_cast<int>(g.points());
  const std::size_t L = g.length();
  const double dmin = cauchy_min_distance(dom, nb);
  const double speed = dom.bounding_radius();

  // refinement level per target
  std::vector<int> level(targets.size());
  for (std::size_t t = 0; t < targets.size(); ++t) {
    const double d = dom.distance_to_boundary(targets[t]);
    if (d < 0.5 * dmin * (1.0 - 1e-9))
      fail(ErrorKind::TargetTooCloseToBoundary,
           "target at distance " + std::to_string(d) + " is closer than d_min/2 = " + std::to_string(0.5 * dmin));
    int R = 1;
    while (R < opt.max_refine && d < opt.resolve_factor * speed * kTwoPi / (nb * R)) R *= 2;
    level[t] = R;
  }

  ModeSequence out(targets.size(), L, g.start_index(), g.step(), g.parity());
  out.set_shift_count(g.shift_count());

  std::map<int, std::vector<std::size_t>> groups;
  for (std::size_t t = 0; t < targets.size(); ++t) groups[level[t]].push_back(t);

  for (const auto& [R, members] : groups) {
    const ModeSequence gf = upsample(g, R);
    const BoundaryGrid bg = dom.sample_boundary(nb * R);
    const double db = bg.dbeta;
    const int n = bg.n;
#pragma omp parallel
    {
      std::vector<cplx> S(L + 2), acc(L);
#pragma omp for schedule(dynamic, 16)
      for (std::size_t idx = 0; idx < members.size(); ++idx) {
        const std::size_t t = members[idx];
        const cplx z = targets[t];
        std::fill(acc.begin(), acc.end(), cplx{});
        for (int l = 0; l < n; ++l) {
          const cplx diff = bg.zeta[l] - z;
          const cplx inv = 1.0 / diff;
          const cplx w = bg.dzeta[l] * inv;
          // dzeta/(2 pi i (zeta - z)) and the real bracket Im(w) dbeta / pi
          const cplx cw = w * cplx(0.0, -db / kTwoPi);
          const double bw = w.imag() * db / kPi;
          const cplx r = std::conj(diff) * inv;
          accumulate(gf.row(l).data(), L, shift, cw, bw, r, S.data(), acc.data());
        }
        for (std::size_t p = 0; p < L; ++p) out.at(t, p) = acc[p];
      }
    }
  }
  return out;
}

ModeSequence bukhgeim_hilbert(const ModeSequence& g, const ConvexDomain& dom, int shift) {
  require_boundary_sequence(g, shift);
  const int n = static_cast<int>(g.points());
  const std::size_t L = g.length();
  const BoundaryGrid bg = dom.sample_boundary(n);
  const double db = bg.dbeta;

  // d g / d beta for the diagonal of the subtracted principal-value integrand
  ModeSequence dg(n, L, g.start_index(), g.step(), g.parity());
  for (std::size_t j = 0; j < L; ++j) dg.set_column(j, trig_derivative(g.column(j)));

  ModeSequence out(n, L, g.start_index(), g.step(), g.parity());
  out.set_shift_count(g.shift_count());
#pragma omp parallel
  {
    std::vector<cplx> S(L + 2), acc(L);
#pragma omp for schedule(static)
    for (int i = 0; i < n; ++i) {
      const cplx z = bg.zeta[i];
      std::fill(acc.begin(), acc.end(), cplx{});
      const auto gi = g.row(i);
      for (int l = 0; l < n; ++l) {
        const auto row = g.row(l);
        if (l == i) {
          // (g(zeta) - g(z)) zeta' / (zeta - z) -> dg/dbeta; bracket -> i Im(zeta''/zeta') dbeta
          const auto d = dg.row(i);
          for (std::size_t p = 0; p < L; ++p) acc[p] += d[p] * (db / kPi);
          const cplx kappa = bg.d2zeta[i] / bg.dzeta[i];
          const cplx bracket = cplx(0.0, kappa.imag()) * (db / kPi);
          const cplx r = std::conj(bg.dzeta[i]) / bg.dzeta[i];
          for (std::size_t p = L; p-- > 0;) {
            const std::size_t q = p + shift;
            S[p] = q < L ? r * (row[q] + S[q]) : cplx{};
          }
          for (std::size_t p = 0; p < L; ++p) acc[p] += bracket * S[p];
          continue;
        }
        const cplx diff = bg.zeta[l] - z;
        const cplx inv = 1.0 / diff;
        const cplx w = bg.dzeta[l] * inv;
        const cplx r = std::conj(diff) * inv;
        // bracket = 2i Im(w) dbeta, divided by pi
        const cplx bracket = cplx(0.0, 2.0 * w.imag() * db / kPi);
        const cplx cw = w * (db / kPi);
        for (std::size_t p = L; p-- > 0;) {
          const std::size_t q = p + shift;
          S[p] = q < L ? r * (row[q] + S[q]) : cplx{};
        }
        for (std::size_t p = 0; p < L; ++p) acc[p] += cw * (row[p] - gi[p]) + bracket * S[p];
      }
      // principal value of the subtracted constant: (1/pi) g(z) i pi
      for (std::size_t p = 0; p < L; ++p) out.at(i, p) = acc[p] + kI * gi[p];
    }
  }
  return out;
}

ModeSequence range_defect(const ModeSequence& g, const ConvexDomain& dom, int shift) {
  ModeSequence h = bukhgeim_hilbert(g, dom, shift);
  for (std::size_t k = 0; k < h.raw().size(); ++k) h.raw()[k] = g.raw()[k] + kI * h.raw()[k];
  return h;
}

double range_residual(const ModeSequence& g, const ConvexDomain& dom, int shift) {
  const double base = sequence_norm(g, 1);
  if (base == 0.0) return 0.0;
  return sequence_norm(range_defect(g, dom, shift), 1) / base;
}

}  // namespace ttomo
