#include <cmath>

#include "doctest.h"
#include "support.hpp"
#include "ttomo/errors.hpp"
#include "ttomo/reconstruct.hpp"

using namespace ttomo;
using namespace ttomo::testing;

namespace {

const ConvexDomain kDisk = ConvexDomain::unit_disk();
constexpr int kRes = 128;

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgument;
}

ReconstructOptions options() {
  ReconstructOptions o;
  o.n_modes = kRes / 4;
  return o;
}

struct Case {
  std::unique_ptr<BumpPhantom> f;
  Sinogram g;
  ModeSequence full;
  Lattice lat;
};

Case make_case(const std::string& phantom, int m, const Attenuation* a) {
  Case c{make_phantom(phantom, m, 1, kDisk), {}, {}, Lattice(GridSpec::square(kRes, 1.0), kDisk)};
  c.g = trace_data(*c.f, a, kDisk, kRes, kRes);
  c.full = fourier_modes(c.g, kRes / 4);
  return c;
}

double roundtrip(const Case& c, int m, const Attenuation* a, PsiStrategy s, double* data_err = nullptr) {
  OracleSource os{c.f.get(), a, kRes};
  const auto psi = default_psi(c.full, c.lat, m, a, s, options(), &os);
  const auto rec = reconstruct(c.g, m, a, psi, c.lat, options());
  if (data_err) *data_err = sinogram_relative_error(trace_data(rec.field, a, kDisk, kRes, kRes), c.g);
  return relative_l2_error(rec.field, sample_source(*c.f, c.lat));
}

}  // namespace

TEST_CASE("scalar reconstructions") {
  const auto c = make_case("radial-gaussian", 0, nullptr);
  CHECK(roundtrip(c, 0, nullptr, PsiStrategy::Harmonic) <= 0.05);
  RadialSmoothAttenuation ra(kDisk, 0.5, 1.0, 0.4);
  const auto ca = make_case("radial-gaussian", 0, &ra);
  double d = 0.0;
  CHECK(roundtrip(ca, 0, &ra, PsiStrategy::Harmonic, &d) <= 0.05);
  CHECK(d <= 0.05);
}

TEST_CASE("tensor reconstructions with oracle modes") {
  const auto c = make_case("random-smooth", 2, nullptr);
  CHECK(roundtrip(c, 2, nullptr, PsiStrategy::Oracle) <= 0.02);
}

TEST_CASE("harmonic psi reproduces the data") {
  for (int m : {1, 2}) {
    CAPTURE(m);
    const auto c = make_case("random-smooth", m, nullptr);
    double d = 1.0;
    roundtrip(c, m, nullptr, PsiStrategy::Harmonic, &d);
    CHECK(d <= 0.05);
  }
}

TEST_CASE("reconstruction report") {
  const auto c = make_case("radial-gaussian", 0, nullptr);
  const auto psi = default_psi(c.full, c.lat, 0, nullptr, PsiStrategy::Harmonic, options());
  const auto rec = reconstruct(c.g, 0, nullptr, psi, c.lat, options());
  REQUIRE(rec.range.has_value());
  CHECK(rec.range->pass());
  CHECK(rec.collar_nodes > 0);
  CHECK(rec.collar_fill == "constant-extrapolation");
  for (std::size_t k = 0; k < c.lat.size(); ++k)
    if (!c.lat.inside(k)) CHECK(rec.field.component(0)[k] == 0.0);
  CHECK(relative_l2_error(rec.field, rec.field) == 0.0);
}

TEST_CASE("reconstruction preconditions") {
  const auto c = make_case("radial-gaussian", 2, nullptr);
  const auto psi = default_psi(c.full, c.lat, 2, nullptr, PsiStrategy::Zero, options());
  ZeroAttenuation zero(kDisk);
  CHECK(kind_of([&] { reconstruct(c.g, 2, &zero, psi, c.lat, options()); }) == ErrorKind::AttenuationNotPositive);
  ConstantAttenuation faint(kDisk, 1e-5);
  CHECK(kind_of([&] { reconstruct(c.g, 2, &faint, psi, c.lat, options()); }) == ErrorKind::AttenuationNotPositive);
  RadialSmoothAttenuation ra(kDisk, 0.5, 1.0, 0.4);
  CHECK(kind_of([&] { reconstruct(c.g, 2, &ra, psi, c.lat, options()); }) == ErrorKind::PsiKindMismatch);
  CHECK(kind_of([&] { reconstruct(c.g, 4, nullptr, psi, c.lat, options()); }) == ErrorKind::PsiKindMismatch);
  ReconstructOptions o = options();
  o.collar = 0.4;
  CHECK(kind_of([&] { reconstruct(c.g, 2, nullptr, psi, c.lat, o); }) == ErrorKind::TargetTooCloseToBoundary);
  const Lattice other(GridSpec::square(64, 1.0), kDisk);
  CHECK(kind_of([&] { reconstruct(c.g, 2, nullptr, psi, other, options()); }) == ErrorKind::PsiKindMismatch);
}

TEST_CASE("gauge fiber") {
  const auto c = make_case("random-smooth", 2, nullptr);
  ReconstructOptions o = options();
  o.check_first = false;
  const auto psi1 = default_psi(c.full, c.lat, 2, nullptr, PsiStrategy::Harmonic, o);
  const auto same = gauge_probe(c.g, 2, nullptr, psi1, psi1, c.lat, o);
  CHECK(same.field_distance == 0.0);
  CHECK(same.data_discrepancy == 0.0);

  // add a zero-trace bump to psi_{-1}
  auto psi2 = psi1;
  psi2.provenance = PsiProvenance::UserSupplied;
  for (std::size_t k = 0; k < c.lat.size(); ++k) {
    const cplx z = c.lat.spec().node(k);
    const double w = std::max(0.0, 1.0 - std::norm(z));
    psi2.functions[0][k] += cplx(0.5, 0.3) * w * w * w * std::exp(-4.0 * std::norm(z - cplx(0.2, 0.1)));
  }
  const auto p = gauge_probe(c.g, 2, nullptr, psi1, psi2, c.lat, o);
  CHECK(p.field_distance >= 0.1);
  CHECK(p.relative_discrepancy <= 1e-3);

  const auto c0 = make_case("radial-gaussian", 0, nullptr);
  const auto e = default_psi(c0.full, c0.lat, 0, nullptr, PsiStrategy::Harmonic, o);
  CHECK(kind_of([&] { gauge_probe(c0.g, 0, nullptr, e, e, c0.lat, o); }) == ErrorKind::NoGaugeClass);
}

TEST_CASE("conjugate symmetry of the odd modes") {
  const auto c = make_case("random-smooth", 3, nullptr);
  Gen gen(12);
  std::vector<cplx> pts;
  for (int i = 0; i < 50; ++i) pts.push_back(gen.disk_point(0.85));
  CHECK(conjugate_mode_check(c.full, kDisk, pts, 4) <= 1e-3);
  CHECK(conjugate_mode_check(c.full, kDisk, pts, 0) == 0.0);

  // complex data g + 2 i eps cos(theta): g_{+-1} both shift by i eps
  const double eps = 0.05;
  ModeSequence full = c.full;
  for (std::size_t p = 0; p < full.points(); ++p) {
    full.at(p, full.position_of(1)) += cplx(0.0, eps);
    full.at(p, full.position_of(-1)) += cplx(0.0, eps);
  }
  CHECK(conjugate_mode_check(full, kDisk, pts, 4) >= eps);
}
