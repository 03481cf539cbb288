#include <cmath>

#include "doctest.h"
#include "support.hpp"
#include "ttomo/errors.hpp"
#include "ttomo/mode_sequence.hpp"
#include "ttomo/sources.hpp"

using namespace ttomo;
using namespace ttomo::testing;

namespace {

const ConvexDomain kDisk = ConvexDomain::unit_disk();

Sinogram filled(int nb, int nt, double (*g)(double)) {
  Sinogram s(kDisk, nb, nt);
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nt; ++j) s.at(i, j) = g(s.theta[j]);
  return s;
}

// Full sequence with g_{-n} = n + 1 for n >= 0 and conjugates above.
ModeSequence counting(int n_modes, std::size_t points = 2) {
  ModeSequence s(points, 2 * n_modes + 1, n_modes, 1, Parity::Full);
  for (std::size_t p = 0; p < points; ++p)
    for (int n = -n_modes; n <= n_modes; ++n) s.at(p, s.position_of(n)) = std::abs(n) + 1.0;
  return s;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("fourier modes of single harmonics") {
  const auto c = fourier_modes(filled(8, 64, [](double t) { return std::cos(t); }), 16);
  for (std::size_t p = 0; p < c.points(); ++p)
    for (int n = -16; n <= 16; ++n) {
      const cplx want = std::abs(n) == 1 ? cplx(0.5) : cplx(0.0);
      CHECK(std::abs(c.value(p, n) - want) < 1e-12);
    }
  const auto s2 = fourier_modes(filled(8, 64, [](double t) { return std::sin(2 * t); }), 16);
  CHECK(std::abs(s2.value(3, 2) - cplx(0.0, -0.5)) < 1e-12);
  CHECK(std::abs(s2.value(3, -2) - cplx(0.0, 0.5)) < 1e-12);
  const auto z = fourier_modes(filled(8, 64, [](double) { return 0.0; }), 16);
  for (auto v : z.raw()) CHECK(v == cplx(0.0));
}

TEST_CASE("undersampled angular grids are refused") {
  const Sinogram s(kDisk, 8, 32);
  CHECK(kind_of([&] { fourier_modes(s, 9); }) == ErrorKind::Undersampled);
  CHECK_NOTHROW(fourier_modes(s, 8));
}

TEST_CASE("parity split and shifts") {
  const auto full = counting(10);
  const auto [ev, od] = build_parity(full);
  for (std::size_t j = 0; j < 5; ++j) {
    CHECK(ev.at(0, j) == cplx(2.0 * j + 1));
    CHECK(od.at(0, j) == cplx(2.0 * j + 2));
  }
  const auto np = nonpositive_modes(full);
  CHECK(np.at(1, 3) == cplx(4.0));

  const auto l0 = left_shift(od, 0);
  CHECK(l0.raw() == od.raw());
  const auto l1 = left_shift(np, 1);
  CHECK(l1.at(0, 0) == cplx(2.0));
  // L^q g^odd starts at g_{-(2q+1)}
  const auto lq = left_shift(od, 3);
  CHECK(lq.at(0, 0) == full.value(0, -7));
  CHECK(lq.index_at(0) == -7);
  CHECK(kind_of([&] { left_shift(od, 100); }) == ErrorKind::ShiftExceedsTruncation);

  const auto cos = fourier_modes(filled(4, 64, [](double t) { return std::cos(t); }), 16);
  const auto [ce, co] = build_parity(cos);
  CHECK(std::abs(co.at(0, 0) - cplx(0.5)) < 1e-12);
  for (std::size_t j = 1; j < co.length(); ++j) CHECK(std::abs(co.at(0, j)) < 1e-12);
  for (auto v : ce.raw()) CHECK(std::abs(v) < 1e-12);
}

TEST_CASE("augmented sequences") {
  Gen gen(3);
  const int N = 12;
  ModeSequence full(3, 2 * N + 1, N, 1, Parity::Full);
  for (std::size_t p = 0; p < 3; ++p)
    for (int n = 0; n <= N; ++n) {
      const cplx v = n == 0 ? cplx(gen.uniform()) : gen.complex();
      full.at(p, full.position_of(-n)) = v;
      full.at(p, full.position_of(n)) = std::conj(v);
    }
  const auto a1 = build_augmented(full, 1);
  CHECK(a1.at(1, 0) == full.value(1, 1));
  CHECK(a1.at(1, 1) == full.value(1, -1));
  CHECK(a1.at(1, 2) == full.value(1, -3));
  // L g^1 = g^odd
  const auto od = build_parity(full).second;
  const auto l = left_shift(a1, 1);
  for (std::size_t j = 0; j < l.length(); ++j) CHECK(l.at(2, j) == od.at(2, j));
  // property: L g^{2k-1} = g^{2k-3}
  for (int k = 2; k <= 5; ++k) {
    const auto hi = left_shift(build_augmented(full, k), 1);
    const auto lo = build_augmented(full, k - 1);
    for (std::size_t j = 0; j < lo.length(); ++j) CHECK(std::abs(hi.at(0, j) - lo.at(0, j)) < 1e-15);
  }
  // positive entries of real data are conjugates of the negative ones
  for (int k = 1; k <= 4; ++k) {
    const auto c = build_augmented(full, k, PositiveEntries::Conjugate);
    const auto d = build_augmented(full, k, PositiveEntries::FromData);
    for (std::size_t j = 0; j < c.raw().size(); ++j) CHECK(std::abs(c.raw()[j] - d.raw()[j]) < 1e-15);
  }
}

TEST_CASE("interleave") {
  ModeSequence a(1, 3, 0, 2, Parity::Even), b(1, 3, -1, 2, Parity::Odd);
  for (std::size_t j = 0; j < 3; ++j) {
    a.at(0, j) = 10.0 + j;
    b.at(0, j) = 20.0 + j;
  }
  const auto s = interleave(a, b);
  CHECK(s.length() == 6);
  CHECK(s.at(0, 0) == cplx(10.0));
  CHECK(s.at(0, 1) == cplx(20.0));
  CHECK(s.at(0, 4) == cplx(12.0));
}

TEST_CASE("weighted norms and tail diagnostic") {
  ModeSequence s(1, 4, 0, 1, Parity::Full);
  CHECK(sequence_norm(s, 1) == 0.0);
  s.at(0, 0) = 1.0;
  CHECK(sequence_norm(s, 1) == doctest::Approx(1.0));
  s.at(0, 0) = 0.0;
  s.at(0, 1) = 1.0;
  CHECK(sequence_norm(s, 2) == doctest::Approx(2.0));
  CHECK(sequence_norm(s, 1) == doctest::Approx(std::sqrt(2.0)));

  ModeSequence t(1, 8, 0, 1, Parity::Full);
  for (std::size_t j = 0; j < 8; ++j) t.at(0, j) = std::pow(0.1, j);
  CHECK(tail_mass_fraction(t) < kTailMassWarning);
  for (std::size_t j = 0; j < 8; ++j) t.at(0, j) = 1.0;
  CHECK(tail_mass_fraction(t) == doctest::Approx(0.25));
}

TEST_CASE("smooth data have decaying modes") {
  auto f = make_phantom("random-smooth", 2, 9, kDisk);
  const Sinogram g = trace_data(*f, nullptr, kDisk, 32, 256);
  const auto full = fourier_modes(g, 64);
  CHECK(tail_mass_fraction(nonpositive_modes(full)) < kTailMassWarning);
  // reality of g: g_n = conj(g_{-n})
  for (std::size_t p = 0; p < full.points(); ++p)
    for (int n = 1; n <= 64; ++n) CHECK(std::abs(full.value(p, n) - std::conj(full.value(p, -n))) < 1e-14);
}
