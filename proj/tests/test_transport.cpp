#include <cmath>

#include "doctest.h"
#include "support.hpp"
#include "ttomo/errors.hpp"
#include "ttomo/sources.hpp"
#include "ttomo/transport.hpp"

using namespace ttomo;
using namespace ttomo::testing;

namespace {

const ConvexDomain kDisk = ConvexDomain::unit_disk();

// Random outgoing boundary sample of the unit disk.
std::pair<cplx, Direction> outgoing(Gen& gen) {
  const double b = gen.uniform(0.0, kTwoPi);
  const double off = gen.uniform(-1.45, 1.45);
  return {std::polar(1.0, b), Direction(b + off)};
}

}  // namespace

TEST_CASE("domain geometry") {
  const auto bg = kDisk.sample_boundary(64);
  for (int i = 0; i < 64; ++i) {
    CHECK(std::abs(std::abs(bg.normal[i]) - 1.0) < 1e-14);
    // counterclockwise: tangent is i * normal
    CHECK(std::abs(bg.dzeta[i] / std::abs(bg.dzeta[i]) - kI * bg.normal[i]) < 1e-14);
  }
  const ConvexDomain ell = ConvexDomain::ellipse(1.0, 0.6);
  const auto be = ell.sample_boundary(64);
  for (int i = 0; i < 64; ++i) {
    CHECK(std::abs(std::abs(be.normal[i]) - 1.0) < 1e-14);
    CHECK(std::imag(std::conj(be.dzeta[i]) * be.d2zeta[i]) > 0.0);  // strictly convex, ccw
  }
}

TEST_CASE("chord lengths") {
  Gen gen(2);
  for (int j = 0; j < 5; ++j) {
    const auto c = chord_length(kDisk, 0.0, gen.direction());
    CHECK(c.total() == doctest::Approx(2.0));
    CHECK(c.backward == doctest::Approx(1.0));
  }
  CHECK(chord_length(kDisk, 1.0, Direction(kTwoPi / 2)).total() == doctest::Approx(2.0));
  CHECK(chord_length(kDisk, 1.0, Direction(kTwoPi / 4)).total() == doctest::Approx(0.0).epsilon(1e-7));
  CHECK_THROWS_AS(chord_length(kDisk, 1.5, Direction(0.0)), Error);
  // property: a chord through x at distance s from the centre has length 2 sqrt(1 - s^2)
  for (int j = 0; j < 50; ++j) {
    const cplx x = gen.disk_point(0.95);
    const Direction d = gen.direction();
    const double s = std::abs(std::imag(x * std::conj(d.unit())));
    CHECK(chord_length(kDisk, x, d).total() == doctest::Approx(2.0 * std::sqrt(1.0 - s * s)).epsilon(1e-12));
  }
}

TEST_CASE("x-ray transform oracles") {
  ConstantSource one(kDisk, {1.0});
  CHECK(xray_transform(one, nullptr, kDisk, 1.0, Direction(0.0)) == doctest::Approx(2.0).epsilon(1e-6));

  Gen gen(21);
  for (double c : {0.5, 1.0, 2.0}) {
    ConstantAttenuation a(kDisk, c);
    for (int j = 0; j < 10; ++j) {
      const auto [x, d] = outgoing(gen);
      const double l = chord_length(kDisk, x, d).total();
      const double exact = (1.0 - std::exp(-c * l)) / c;
      CHECK(std::abs(xray_transform(one, &a, kDisk, x, d) - exact) <= 1e-6 * exact);
    }
  }

  ConstantSource e1(kDisk, {1.0, 0.0});
  for (int j = 0; j < 10; ++j) {
    const auto [x, d] = outgoing(gen);
    const double l = chord_length(kDisk, x, d).total();
    CHECK(xray_transform(e1, nullptr, kDisk, x, d) == doctest::Approx(l * std::cos(d.angle)).epsilon(1e-9));
  }

  // Gaussian on the central chord: sigma sqrt(2 pi) erf(1 / (sigma sqrt 2)).
  Gaussian gs(0.0, 0.2);
  const double central = 0.2 * std::sqrt(kTwoPi) * std::erf(1.0 / (0.2 * std::sqrt(2.0)));
  CHECK(xray_transform(gs, nullptr, kDisk, 1.0, Direction(0.0)) == doctest::Approx(central).epsilon(1e-8));

  CHECK_THROWS_AS(xray_transform(one, nullptr, kDisk, 1.0, Direction(kTwoPi / 2)), Error);
  CHECK_THROWS_AS(xray_transform(one, nullptr, kDisk, 0.5, Direction(0.0)), Error);
}

TEST_CASE("potential 1-tensors have zero data") {
  PotentialField pf;
  Gen gen(8);
  for (int j = 0; j < 20; ++j) {
    const auto [x, d] = outgoing(gen);
    CHECK(std::abs(xray_transform(pf, nullptr, kDisk, x, d)) < 1e-10);
  }
}

TEST_CASE("interior transport solution") {
  ConstantSource one(kDisk, {1.0});
  Gen gen(4);
  for (int j = 0; j < 5; ++j) CHECK(solve_transport_interior(one, nullptr, kDisk, 0.0, gen.direction()) == doctest::Approx(1.0));
  ConstantSource zero(kDisk, {0.0});
  CHECK(solve_transport_interior(zero, nullptr, kDisk, 0.3, Direction(1.0)) == 0.0);
  RadialSmoothAttenuation a(kDisk, 0.5, 1.0, 0.4);
  Gaussian gs(cplx(0.2, -0.1), 0.25);
  for (int j = 0; j < 10; ++j) {
    const auto [x, d] = outgoing(gen);
    const double g = xray_transform(gs, &a, kDisk, x, d);
    CHECK(std::abs(solve_transport_interior(gs, &a, kDisk, x, d) - g) <= 1e-8 * std::abs(g) + 1e-14);
  }
  CHECK_THROWS_AS(solve_transport_interior(one, nullptr, kDisk, 1.2, Direction(0.0)), Error);
}

TEST_CASE("trace data structure") {
  auto zero = make_phantom("zero", 2, 1, kDisk);
  const Sinogram z = trace_data(*zero, nullptr, kDisk, 16, 32);
  CHECK(z.max_abs() == 0.0);

  auto bump = make_phantom("radial-gaussian", 0, 1, kDisk);
  RadialSmoothAttenuation a(kDisk, 0.5, 1.0, 0.4);
  const Sinogram g = trace_data(*bump, &a, kDisk, 32, 64);
  std::size_t plus = 0;
  for (int i = 0; i < g.n_b; ++i)
    for (int j = 0; j < g.n_theta; ++j) {
      if (g.region_at(i, j) == Region::Plus) {
        ++plus;
        CHECK(g.at(i, j) >= 0.0);
      } else {
        CHECK(g.at(i, j) == 0.0);
      }
    }
  CHECK(plus > 0);
  CHECK(g.attenuation_tag == a.tag());
  CHECK_THROWS_AS(Sinogram(kDisk, 16, 31), Error);
}

TEST_CASE("radial bump data depend only on the chord's distance to the centre") {
  auto bump = make_phantom("radial-gaussian", 0, 1, kDisk);
  const int nb = 32, nt = 64;
  const Sinogram g = trace_data(*bump, nullptr, kDisk, nb, nt);
  // Rotating beta and theta together by one node keeps the chord's distance.
  const int shift = nt / nb;
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nt; ++j) {
      const int i2 = (i + 1) % nb, j2 = (j + shift) % nt;
      CHECK(std::abs(g.at(i, j) - g.at(i2, j2)) < 1e-12);
    }
}

TEST_CASE("property: linearity and determinism") {
  Gen gen(17);
  auto f1 = make_phantom("random-smooth", 2, 3, kDisk);
  auto f2 = make_phantom("random-smooth", 2, 4, kDisk);
  for (int j = 0; j < 10; ++j) {
    const auto [x, d] = outgoing(gen);
    const double s = gen.uniform();
    struct Sum : TensorSource {
      const TensorSource *a, *b;
      double s;
      int order() const override { return a->order(); }
      void evaluate(cplx x, double* out) const override {
        double t[kMaxOrder + 1];
        a->evaluate(x, out);
        b->evaluate(x, t);
        for (int k = 0; k <= order(); ++k) out[k] += s * t[k];
      }
    } sum;
    sum.a = f1.get();
    sum.b = f2.get();
    sum.s = s;
    const double lhs = xray_transform(sum, nullptr, kDisk, x, d);
    const double rhs = xray_transform(*f1, nullptr, kDisk, x, d) + s * xray_transform(*f2, nullptr, kDisk, x, d);
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
  const Sinogram a = trace_data(*f1, nullptr, kDisk, 16, 32);
  const Sinogram b = trace_data(*f1, nullptr, kDisk, 16, 32);
  CHECK(a.values == b.values);
}

TEST_CASE("interior modes: lattice tables agree with pointwise quadrature") {
  auto f = make_phantom("random-smooth", 1, 5, kDisk);
  RadialSmoothAttenuation a(kDisk, 0.5, 1.0, 0.4);
  const Lattice lat(GridSpec::square(65, 1.0), kDisk);
  const auto tab = transport_modes_on_grid(*f, &a, lat, 64, 8, 2);
  std::vector<cplx> pts;
  std::vector<std::size_t> nodes;
  for (std::size_t k = 0; k < lat.size(); k += 97)
    if (lat.inside(k) && std::abs(lat.spec().node(k)) < 0.9) {
      pts.push_back(lat.spec().node(k));
      nodes.push_back(k);
    }
  const auto direct = transport_modes_at_points(*f, &a, kDisk, pts, 64, 8, QuadratureOptions::for_source(*f));
  double err = 0.0, scale = 0.0;
  for (int n = 0; n <= 8; ++n)
    for (std::size_t p = 0; p < pts.size(); ++p) {
      err = std::max(err, std::abs(tab.u(-n)[nodes[p]] - direct[n][p]));
      scale = std::max(scale, std::abs(direct[n][p]));
    }
  CHECK(err < 1e-4 * scale);
}
