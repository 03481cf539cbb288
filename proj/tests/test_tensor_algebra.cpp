#include <cmath>

#include "doctest.h"
#include "support.hpp"
#include "ttomo/errors.hpp"
#include "ttomo/tensor_algebra.hpp"

using namespace ttomo;
using ttomo::testing::Gen;

namespace {

Lattice small_lattice(int n = 33) { return Lattice(GridSpec::square(n, 1.0), ConvexDomain::unit_disk()); }

SymmetricTensorField constant_field(const std::vector<double>& ft, const Lattice& lat) {
  const int m = static_cast<int>(ft.size()) - 1;
  SymmetricTensorField f(m, lat);
  for (int k = 0; k <= m; ++k)
    for (std::size_t p = 0; p < lat.size(); ++p) f.component(k)[p] = lat.inside(p) ? ft[k] : 0.0;
  return f;
}

std::size_t center_node(const Lattice& lat) { return lat.spec().index(lat.spec().nx / 2, lat.spec().ny / 2); }

}  // namespace

TEST_CASE("binomials and order limits") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(20, 10) == 184756);
  CHECK_THROWS_AS(require_order(kMaxOrder + 1), Error);
  CHECK_THROWS_AS(require_order(-1), Error);
}

TEST_CASE("pointwise conversion examples") {
  auto F0 = pseudovector_to_complex(std::vector<double>{5.0});
  CHECK(std::abs(F0[0] - cplx(5.0)) < 1e-15);

  auto F1 = pseudovector_to_complex(std::vector<double>{1.0, 0.0});
  CHECK(std::abs(F1[0] - cplx(0.5)) < 1e-15);
  CHECK(std::abs(F1[1] - cplx(0.5)) < 1e-15);

  // Euclidean metric: F = (0, 1/2, 0), then modes f_0 = 1, f_{+-2} = 0.
  auto F2 = pseudovector_to_complex(std::vector<double>{1.0, 0.0, 1.0});
  CHECK(std::abs(F2[0]) < 1e-15);
  CHECK(std::abs(F2[1] - cplx(0.5)) < 1e-15);
  CHECK(std::abs(F2[2]) < 1e-15);
  auto modes = modes_from_complex(F2);
  CHECK(std::abs(modes[1] - cplx(1.0)) < 1e-15);
  CHECK(std::abs(modes[0]) < 1e-15);
  CHECK(std::abs(modes[2]) < 1e-15);

  auto back = complex_to_pseudovector(F2);
  CHECK(back[0] == doctest::Approx(1.0));
  CHECK(std::abs(back[1]) < 1e-15);
  CHECK(back[2] == doctest::Approx(1.0));

  auto m1 = modes_from_complex(F1);
  CHECK(std::abs(m1[0] - cplx(0.5)) < 1e-15);
  CHECK(std::abs(m1[1] - cplx(0.5)) < 1e-15);
}

TEST_CASE("F_k from the Jacobian of x = (z + zbar)/2, y = (z - zbar)/2i") {
  // Independent oracle: contract f_{st} against dx^s/dz^{i} for each slot.
  Gen gen(11);
  for (int m = 0; m <= 4; ++m) {
    const auto ft = gen.pseudovector(m);
    const auto F = pseudovector_to_complex(ft);
    const cplx dz[2] = {0.5, cplx(0.0, -0.5)};      // dx/dz, dy/dz
    const cplx dzb[2] = {0.5, cplx(0.0, 0.5)};      // dx/dzbar, dy/dzbar
    for (int k = 0; k <= m; ++k) {
      // F_k has m-k holomorphic slots first, then k antiholomorphic slots.
      cplx sum = 0.0;
      for (int idx = 0; idx < (1 << m); ++idx) {
        cplx w = 1.0;
        int twos = 0;
        for (int s = 0; s < m; ++s) {
          const int c = (idx >> s) & 1;
          twos += c;
          w *= s < m - k ? dz[c] : dzb[c];
        }
        sum += w * ft[twos];
      }
      CHECK(std::abs(F[k] - sum) < 1e-13);
    }
  }
}

TEST_CASE("property: roundtrip and reality for random pseudovectors") {
  Gen gen(1234);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = gen.integer(0, 10);
    const auto ft = gen.pseudovector(m);
    const auto F = pseudovector_to_complex(ft);
    for (int k = 0; k <= m; ++k) CHECK(std::abs(F[k] - std::conj(F[m - k])) < 1e-12);
    const auto modes = modes_from_complex(F);
    for (int k = 0; k <= m; ++k) CHECK(std::abs(modes[k] - std::conj(modes[m - k])) < 1e-12);
    const auto back = complex_to_pseudovector(F);
    for (int k = 0; k <= m; ++k) CHECK(std::abs(back[k] - ft[k]) < 1e-12);
    const auto F2 = complex_from_modes(modes);
    for (int k = 0; k <= m; ++k) CHECK(std::abs(F2[k] - F[k]) < 1e-12);
  }
}

TEST_CASE("property: direct contraction equals the mode sum") {
  Gen gen(99);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = gen.integer(0, 8);
    const auto ft = gen.pseudovector(m);
    const auto modes = modes_from_complex(pseudovector_to_complex(ft));
    for (int j = 0; j < 8; ++j) {
      const Direction d = gen.direction();
      CHECK(std::abs(contract_direct(ft, d) - contract_modes(modes, d)) < 1e-12);
    }
  }
}

TEST_CASE("contraction examples") {
  const std::vector<double> e1{1.0, 0.0};
  CHECK(contract_direct(e1, Direction(0.0)) == doctest::Approx(1.0));
  CHECK(std::abs(contract_direct(e1, Direction(kTwoPi / 4))) < 1e-15);
  const std::vector<double> delta{1.0, 0.0, 1.0};
  Gen gen(3);
  for (int j = 0; j < 10; ++j) CHECK(contract_direct(delta, gen.direction()) == doctest::Approx(1.0));
  // m = 2 by hand: f11 c^2 + 2 f12 c s + f22 s^2
  const std::vector<double> f{0.3, -0.7, 1.1};
  const double t = 0.4, c = std::cos(t), s = std::sin(t);
  CHECK(contract_direct(f, Direction(t)) == doctest::Approx(0.3 * c * c - 1.4 * c * s + 1.1 * s * s).epsilon(1e-14));
}

TEST_CASE("non-real complex data are rejected") {
  const std::vector<cplx> bad{cplx(0.0, 1.0)};
  CHECK_THROWS_AS(complex_to_pseudovector(bad), Error);
  const std::vector<cplx> bad1{cplx(1.0, 0.0), cplx(0.0, 0.0)};
  try {
    complex_to_pseudovector(bad1);
    FAIL("expected NonRealResult");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonRealResult);
  }
}

TEST_CASE("a sign flip in the conversion law breaks the roundtrip") {
  TensorLaw law = build_tensor_law(2);
  law.to_complex[1] = -law.to_complex[1];
  const std::vector<double> ft{0.2, 0.9, -0.4};
  const auto F = pseudovector_to_complex(ft, law);
  bool broken = false;
  try {
    const auto back = complex_to_pseudovector(F);
    for (int k = 0; k <= 2; ++k) broken = broken || std::abs(back[k] - ft[k]) > 1e-6;
  } catch (const Error&) {
    broken = true;
  }
  CHECK(broken);
}

TEST_CASE("field conversions on a lattice") {
  const Lattice lat = small_lattice();
  Gen gen(5);
  for (int m = 0; m <= 6; ++m) {
    SymmetricTensorField f(m, lat);
    for (int k = 0; k <= m; ++k)
      for (std::size_t p = 0; p < lat.size(); ++p) f.component(k)[p] = lat.inside(p) ? gen.uniform() : 0.0;
    const auto F = cartesian_to_complex(f);
    const auto back = complex_to_cartesian(F);
    double err = 0.0;
    for (int k = 0; k <= m; ++k)
      for (std::size_t p = 0; p < lat.size(); ++p) err = std::max(err, std::abs(back.component(k)[p] - f.component(k)[p]));
    CHECK(err < 1e-12);

    const auto modes = angular_modes(F);
    for (int j = 0; j < 4; ++j) {
      const Direction d = gen.direction();
      const auto a = contract_with_theta(f, d);
      const auto b = contract_with_modes(modes, d);
      double e = 0.0;
      for (std::size_t p = 0; p < lat.size(); ++p) e = std::max(e, std::abs(a[p] - b[p]));
      CHECK(e < 1e-12);
    }
  }
}

TEST_CASE("angular modes of constant fields") {
  const Lattice lat = small_lattice();
  const std::size_t c = center_node(lat);
  const auto F2 = angular_modes(cartesian_to_complex(constant_field({1.0, 0.0, 1.0}, lat)));
  CHECK(std::abs(F2.mode(0)[c] - cplx(1.0)) < 1e-14);
  CHECK(std::abs(F2.mode(2)[c]) < 1e-14);
  CHECK(std::abs(F2.mode(-2)[c]) < 1e-14);
  const auto F1 = angular_modes(cartesian_to_complex(constant_field({1.0, 0.0}, lat)));
  CHECK(std::abs(F1.mode(1)[c] - cplx(0.5)) < 1e-14);
  CHECK(std::abs(F1.mode(-1)[c] - cplx(0.5)) < 1e-14);
}

TEST_CASE("field invariants: mask support and component count") {
  const Lattice lat = small_lattice();
  SymmetricTensorField f(3, lat);
  for (int k = 0; k <= 3; ++k) std::fill(f.component(k).begin(), f.component(k).end(), 1.0);
  f.apply_mask();
  for (std::size_t p = 0; p < lat.size(); ++p)
    if (!lat.inside(p))
      for (int k = 0; k <= 3; ++k) CHECK(f.component(k)[p] == 0.0);
  const auto F = cartesian_to_complex(f);
  CHECK(F.order() == 3);
}
