#include "ttomo/cauchy_riemann.hpp"

#include "ttomo/errors.hpp"
#include "ttomo/fft.hpp"

namespace ttomo {

namespace {

// Derivative along one axis at node k; stride between neighbours, pos/count
// locate the node on its line.
cplx axis_derivative(std::span<const cplx> f, std::span<const std::uint8_t> valid, std::size_t k, std::ptrdiff_t stride,
                     int pos, int count, double h) {
  auto ok = [&](int offset) {
    const int q = pos + offset;
    return q >= 0 && q < count && valid[k + offset * stride];
  };
  auto at = [&](int offset) { return f[k + offset * stride]; };
  if (ok(-1) && ok(1)) return (at(1) - at(-1)) / (2.0 * h);
  if (ok(1) && ok(2)) return (-3.0 * at(0) + 4.0 * at(1) - at(2)) / (2.0 * h);
  if (ok(-1) && ok(-2)) return (3.0 * at(0) - 4.0 * at(-1) + at(-2)) / (2.0 * h);
  if (ok(1)) return (at(1) - at(0)) / h;
  if (ok(-1)) return (at(0) - at(-1)) / h;
  return {};
}

}  // namespace

CrPair cr_derivatives(const GridSpec& g, std::span<const cplx> field, std::span<const std::uint8_t> valid) {
  if (field.size() != g.size() || valid.size() != g.size()) fail(ErrorKind::InvalidArgument, "field does not match the grid");
  CrPair out{std::vector<cplx>(g.size()), std::vector<cplx>(g.size())};
  const double hx = g.hx(), hy = g.hy();
#pragma omp parallel for schedule(static)
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const std::size_t k = g.index(i, j);
      if (!valid[k]) continue;
      const cplx dx = axis_derivative(field, valid, k, 1, i, g.nx, hx);
      const cplx dy = axis_derivative(field, valid, k, g.nx, j, g.ny, hy);
      out.d[k] = 0.5 * (dx - kI * dy);
      out.dbar[k] = 0.5 * (dx + kI * dy);
    }
  }
  return out;
}

CrPair boundary_cr_derivatives(const BoundaryGrid& bg, std::span<const cplx> trace,
                               const std::vector<std::vector<cplx>>& rings, double delta) {
  const std::size_t n = static_cast<std::size_t>(bg.n);
  if (rings.size() != 2 && rings.size() != 4) fail(ErrorKind::InvalidArgument, "expected two or four rings");
  if (trace.size() != n) fail(ErrorKind::InvalidArgument, "ring data size mismatch");
  for (const auto& r : rings)
    if (r.size() != n) fail(ErrorKind::InvalidArgument, "ring data size mismatch");
  const auto dbeta = trig_derivative(trace);
  CrPair out{std::vector<cplx>(n), std::vector<cplx>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    const cplx nu = bg.normal[i];
    const cplx tau = kI * nu;
    // outward normal derivative
    const cplx un = rings.size() == 2
                        ? (3.0 * trace[i] - 4.0 * rings[0][i] + rings[1][i]) / (2.0 * delta)
                        : (25.0 * trace[i] - 48.0 * rings[0][i] + 36.0 * rings[1][i] - 16.0 * rings[2][i] +
                           3.0 * rings[3][i]) / (12.0 * delta);
    const cplx ut = dbeta[i] / std::abs(bg.dzeta[i]);
    out.d[i] = 0.5 * (std::conj(nu) * un + std::conj(tau) * ut);
    out.dbar[i] = 0.5 * (nu * un + tau * ut);
  }
  return out;
}

std::vector<cplx> ring_points(const BoundaryGrid& bg, double distance) {
  std::vector<cplx> out(bg.n);
  for (int i = 0; i < bg.n; ++i) out[i] = bg.zeta[i] - distance * bg.normal[i];
  return out;
}

double l2_analyticity_residual(const GridSpec& g, const std::vector<std::vector<cplx>>& v,
                               std::span<const std::uint8_t> valid, std::size_t first, std::size_t count) {
  if (first + count + 2 > v.size()) fail(ErrorKind::InvalidArgument, "analyticity residual needs v_{-(first+count+1)}");
  std::vector<std::uint8_t> core(g.size(), 0);
  for (int j = 1; j + 1 < g.ny; ++j)
    for (int i = 1; i + 1 < g.nx; ++i) {
      const std::size_t k = g.index(i, j);
      core[k] = valid[k] && valid[k - 1] && valid[k + 1] && valid[k - g.nx] && valid[k + g.nx];
    }
  std::vector<CrPair> cr(first + count + 2);
  for (std::size_t j = first; j < first + count + 2; ++j) cr[j] = cr_derivatives(g, v[j], valid);
  double num = 0.0, den = 0.0;
  for (std::size_t j = first; j < first + count; ++j)
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (!core[k]) continue;
      num += std::norm(cr[j].dbar[k] + cr[j + 2].d[k]);
      den += std::norm(cr[j].dbar[k]);
    }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

}  // namespace ttomo
