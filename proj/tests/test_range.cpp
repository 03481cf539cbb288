#include <cmath>

#include "doctest.h"
#include "support.hpp"
#include "ttomo/cauchy_riemann.hpp"
#include "ttomo/errors.hpp"
#include "ttomo/psi_class.hpp"
#include "ttomo/range.hpp"

using namespace ttomo;
using namespace ttomo::testing;

namespace {

const ConvexDomain kDisk = ConvexDomain::unit_disk();

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgument;
}

PipelineOptions options(int nb) {
  PipelineOptions o;
  o.n_modes = nb / 4;
  return o;
}

void perturb(Sinogram& g, double level, std::uint64_t seed) {
  Gen gen(seed);
  for (std::size_t k = 0; k < g.values.size(); ++k)
    if (g.region[k] == Region::Plus) g.values[k] *= 1.0 + level * gen.uniform();
}

}  // namespace

TEST_CASE("Cauchy-Riemann derivatives on the lattice") {
  const GridSpec g = GridSpec::square(41, 1.0);
  std::vector<cplx> z(g.size()), zb(g.size()), r2(g.size());
  std::vector<std::uint8_t> valid(g.size(), 1);
  for (std::size_t k = 0; k < g.size(); ++k) {
    const cplx x = g.node(k);
    z[k] = x;
    zb[k] = std::conj(x);
    r2[k] = std::norm(x);
  }
  const auto a = cr_derivatives(g, z, valid);
  const auto b = cr_derivatives(g, zb, valid);
  const auto c = cr_derivatives(g, r2, valid);
  for (std::size_t k = 0; k < g.size(); ++k) {
    CHECK(std::abs(a.d[k] - cplx(1.0)) < 1e-12);
    CHECK(std::abs(a.dbar[k]) < 1e-12);
    CHECK(std::abs(b.d[k]) < 1e-12);
    CHECK(std::abs(b.dbar[k] - cplx(1.0)) < 1e-12);
    // second-order stencils are exact on quadratics everywhere
    CHECK(std::abs(c.d[k] - std::conj(g.node(k))) < 1e-10);
    CHECK(std::abs(c.dbar[k] - g.node(k)) < 1e-10);
  }
}

TEST_CASE("boundary derivatives from the trace and interior rings") {
  const auto bg = kDisk.sample_boundary(128);
  const double delta = 0.01;
  auto u = [](cplx x) { return std::conj(x) * std::conj(x) + x * std::conj(x) * x; };
  std::vector<cplx> trace(128);
  for (int i = 0; i < 128; ++i) trace[i] = u(bg.zeta[i]);
  for (int nr : {2, 4}) {
    std::vector<std::vector<cplx>> rings;
    for (int r = 1; r <= nr; ++r) {
      const auto pts = ring_points(bg, r * delta);
      std::vector<cplx> v(128);
      for (int i = 0; i < 128; ++i) v[i] = u(pts[i]);
      rings.push_back(v);
    }
    const auto cr = boundary_cr_derivatives(bg, trace, rings, delta);
    double err = 0.0;
    for (int i = 0; i < 128; ++i) {
      const cplx z = bg.zeta[i];
      err = std::max(err, std::abs(cr.d[i] - 2.0 * z * std::conj(z)));
      err = std::max(err, std::abs(cr.dbar[i] - (2.0 * std::conj(z) + z * z)));
    }
    CHECK(err < (nr == 2 ? 1e-3 : 1e-6));
  }
}

TEST_CASE("range conditions hold for true data and fail for perturbed data") {
  RadialSmoothAttenuation ra(kDisk, 0.5, 1.0, 0.4);
  for (int m : {0, 1, 2, 3})
    for (bool att : {false, true}) {
      CAPTURE(m);
      CAPTURE(att);
      const Attenuation* a = att ? &ra : nullptr;
      auto f = make_phantom("random-smooth", m, 1, kDisk);
      Sinogram g = trace_data(*f, a, kDisk, 128, 128);
      const auto r = check_range(g, m, a, options(128));
      CHECK(r.order == m);
      CHECK(r.attenuated == att);
      CHECK(!r.conditions.empty());
      const double base = r.max_residual();
      CHECK(base <= (m == 1 && att ? 1e-2 : 1e-4));
      perturb(g, 0.1, 40 + m);
      const auto p = check_range(g, m, a, options(128));
      CHECK(p.max_residual() >= 10.0 * base);
      CHECK_FALSE(p.pass());

      Sinogram z = g;
      std::fill(z.values.begin(), z.values.end(), 0.0);
      const auto rz = check_range(z, m, a, options(128));
      for (const auto& c : rz.conditions) CHECK(c.residual == 0.0);
    }
}

TEST_CASE("range report shapes") {
  auto f = make_phantom("radial-gaussian", 3, 1, kDisk);
  const Sinogram g = trace_data(*f, nullptr, kDisk, 64, 128);
  PipelineOptions o = options(128);
  o.k_max = 2;
  const auto r = check_range(g, 3, nullptr, o);
  CHECK(r.k_max == 2);
  CHECK(r.conditions.size() == 3);  // L^{q+1} g^even, k = 1, 2
  CHECK(r.tolerance == o.tolerance);

  RadialSmoothAttenuation ra(kDisk, 0.5, 1.0, 0.4);
  auto f1 = make_phantom("radial-gaussian", 1, 1, kDisk);
  const Sinogram g1 = trace_data(*f1, &ra, kDisk, 64, 128);
  const auto r1 = check_range(g1, 1, &ra, options(128));
  bool has_limit = false;
  for (const auto& c : r1.conditions) has_limit = has_limit || c.name == "g_0 boundary limit";
  CHECK(has_limit);
}

TEST_CASE("preconditions") {
  auto f = make_phantom("radial-gaussian", 0, 1, kDisk);
  const Sinogram g = trace_data(*f, nullptr, kDisk, 32, 64);
  ZeroAttenuation zero(kDisk);
  CHECK(kind_of([&] { check_range(g, 0, &zero, options(64)); }) == ErrorKind::AttenuationNotPositive);
  PipelineOptions o;
  o.n_modes = 9;
  CHECK(kind_of([&] { check_range(g, 1, nullptr, o); }) == ErrorKind::TruncationTooShort);
  o.n_modes = 32;
  CHECK(kind_of([&] { check_range(g, 0, nullptr, o); }) == ErrorKind::Undersampled);
  CHECK(kind_of([&] { check_range(g, kMaxOrder + 1, nullptr, options(64)); }) == ErrorKind::OrderTooLarge);
}

TEST_CASE("psi index sets") {
  CHECK(psi_kind_for(2, false) == PsiKind::NonattEven);
  CHECK(psi_kind_for(3, false) == PsiKind::NonattOdd);
  CHECK(psi_kind_for(0, true) == PsiKind::AttEven);
  CHECK(psi_kind_for(1, true) == PsiKind::AttOdd);
  CHECK(psi_indices(PsiKind::NonattEven, 0).empty());
  CHECK(psi_indices(PsiKind::NonattEven, 4) == std::vector<int>{-1, -3});
  CHECK(psi_indices(PsiKind::NonattOdd, 1) == std::vector<int>{0});
  CHECK(psi_indices(PsiKind::NonattOdd, 3) == std::vector<int>{0, -2});
  CHECK(psi_indices(PsiKind::AttEven, 0).empty());
  CHECK(psi_indices(PsiKind::AttEven, 2) == std::vector<int>{0});
  CHECK(psi_indices(PsiKind::AttOdd, 1).empty());
  CHECK(psi_indices(PsiKind::AttOdd, 3) == std::vector<int>{-1});
  CHECK(psi_indices(PsiKind::AttOdd, 5) == std::vector<int>{-1, -3});
  CHECK(kind_of([] { psi_indices(PsiKind::NonattEven, 3); }) == ErrorKind::PsiKindMismatch);
  CHECK(parse_psi_strategy("oracle") == PsiStrategy::Oracle);
  CHECK(kind_of([] { parse_psi_strategy("bogus"); }) == ErrorKind::Config);
}

TEST_CASE("default psi elements") {
  const Lattice lat(GridSpec::square(65, 1.0), kDisk);
  auto f0 = make_phantom("radial-gaussian", 0, 1, kDisk);
  const auto full0 = fourier_modes(trace_data(*f0, nullptr, kDisk, 64, 128), 32);
  CHECK(default_psi(full0, lat, 0, nullptr, PsiStrategy::Harmonic, options(128)).empty());

  // zero trace: psi = 0 is a valid element
  Sinogram zero(kDisk, 64, 128);
  zero.order = 2;
  const auto fz = fourier_modes(zero, 32);
  const auto pz = default_psi(fz, lat, 2, nullptr, PsiStrategy::Zero, options(128));
  CHECK(pz.indices == std::vector<int>{-1});
  CHECK(psi_trace_residual(pz, fz) == 0.0);

  auto f2 = make_phantom("random-smooth", 2, 1, kDisk);
  const auto full2 = fourier_modes(trace_data(*f2, nullptr, kDisk, 64, 128), 32);
  const auto ph = default_psi(full2, lat, 2, nullptr, PsiStrategy::Harmonic, options(128));
  CHECK(ph.provenance == PsiProvenance::HarmonicExtension);
  CHECK(psi_trace_residual(ph, full2) <= 1e-6);
  OracleSource os{f2.get(), nullptr, 128};
  const auto po = default_psi(full2, lat, 2, nullptr, PsiStrategy::Oracle, options(128), &os);
  CHECK(po.provenance == PsiProvenance::OracleModes);
  CHECK(psi_trace_residual(po, full2) <= 1e-8);
  CHECK(kind_of([&] { default_psi(full2, lat, 2, nullptr, PsiStrategy::Oracle, options(128)); }) ==
        ErrorKind::InvalidArgument);

  // attenuated odd order: psi_{-1} meets its trace and gradient conditions
  RadialSmoothAttenuation ra(kDisk, 0.5, 1.0, 0.4);
  auto fa = make_phantom("random-smooth", 3, 1, kDisk);
  const auto fulla = fourier_modes(trace_data(*fa, &ra, kDisk, 128, 128), 32);
  CHECK(default_psi(fulla, lat, 1, &ra, PsiStrategy::Harmonic, options(128)).empty());
  const auto pa = default_psi(fulla, lat, 3, &ra, PsiStrategy::Harmonic, options(128));
  CHECK(pa.kind == PsiKind::AttOdd);
  CHECK(pa.indices == std::vector<int>{-1});
  CHECK(psi_trace_residual(pa, fulla) <= 1e-6);
  CHECK(pa.gradient_residual <= 1e-2);

  // real psi_0 for the non-attenuated odd kind
  auto f3 = make_phantom("random-smooth", 3, 1, kDisk);
  const auto full3 = fourier_modes(trace_data(*f3, nullptr, kDisk, 64, 128), 32);
  const auto p3 = default_psi(full3, lat, 3, nullptr, PsiStrategy::Harmonic, options(128));
  for (std::size_t k = 0; k < lat.size(); ++k) CHECK(std::abs(p3.function(0)[k].imag()) < 1e-12);
}
