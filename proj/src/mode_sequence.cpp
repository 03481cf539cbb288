#include "ttomo/mode_sequence.hpp"

#include <algorithm>
#include <cmath>

#include "ttomo/errors.hpp"
#include "ttomo/fft.hpp"

namespace ttomo {

const char* parity_name(Parity p) {
  switch (p) {
    case Parity::Full: return "full";
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
    default: return "augmented";
  }
}

ModeSequence::ModeSequence(std::size_t points, std::size_t length, int start_index, int step, Parity parity)
    : points_(points), length_(length), start_(start_index), step_(step), parity_(parity),
      data_(points * length, cplx{}) {
  if (step < 1) fail(ErrorKind::InvalidArgument, "mode sequence step must be positive");
}

bool ModeSequence::has_index(int n) const {
  const int d = start_ - n;
  return d >= 0 && d % step_ == 0 && static_cast<std::size_t>(d / step_) < length_;
}

std::size_t ModeSequence::position_of(int n) const {
  if (!has_index(n)) fail(ErrorKind::InvalidArgument, "mode index " + std::to_string(n) + " not in sequence");
  return static_cast<std::size_t>((start_ - n) / step_);
}

std::vector<cplx> ModeSequence::column(std::size_t pos) const {
  std::vector<cplx> out(points_);
  for (std::size_t p = 0; p < points_; ++p) out[p] = at(p, pos);
  return out;
}

void ModeSequence::set_column(std::size_t pos, std::span<const cplx> v) {
  for (std::size_t p = 0; p < points_; ++p) at(p, pos) = v[p];
}

ModeSequence fourier_modes(const Sinogram& s, int n_modes) {
  if (n_modes < 1) fail(ErrorKind::InvalidArgument, "N_modes must be positive");
  if (s.n_theta < 4 * n_modes)
    fail(ErrorKind::Undersampled, "N_theta = " + std::to_string(s.n_theta) + " is below 4 N_modes = " + std::to_string(4 * n_modes));
  const int nt = s.n_theta;
  ModeSequence out(s.n_b, 2 * n_modes + 1, n_modes, 1, Parity::Full);
  FourierPlan plan(nt, -1);
  std::vector<cplx> in(nt), spec(nt);
  for (int i = 0; i < s.n_b; ++i) {
    for (int j = 0; j < nt; ++j) in[j] = s.at(i, j);
    plan.execute(in, spec);
    for (int n = -n_modes; n <= n_modes; ++n)
      out.at(i, out.position_of(n)) = spec[((n % nt) + nt) % nt] / static_cast<double>(nt);
  }
  return out;
}

namespace {

ModeSequence extract(const ModeSequence& full, int start, int step, std::size_t length, Parity parity) {
  ModeSequence out(full.points(), length, start, step, parity);
  for (std::size_t p = 0; p < full.points(); ++p)
    for (std::size_t j = 0; j < length; ++j) out.at(p, j) = full.value(p, out.index_at(j));
  return out;
}

int lowest_index(const ModeSequence& s) { return s.index_at(s.length() - 1); }

}  // namespace

ModeSequence nonpositive_modes(const ModeSequence& full) {
  if (full.step() != 1 || !full.has_index(0)) fail(ErrorKind::InvalidArgument, "expected a full mode sequence");
  const int low = lowest_index(full);
  return extract(full, 0, 1, static_cast<std::size_t>(-low + 1), Parity::Full);
}

std::pair<ModeSequence, ModeSequence> build_parity(const ModeSequence& full) {
  if (full.step() != 1 || !full.has_index(0) || !full.has_index(-1))
    fail(ErrorKind::InvalidArgument, "expected a full mode sequence");
  const int low = lowest_index(full);
  const std::size_t n_even = static_cast<std::size_t>(-low / 2 + 1);
  const std::size_t n_odd = static_cast<std::size_t>((-low + 1) / 2);
  return {extract(full, 0, 2, n_even, Parity::Even), extract(full, -1, 2, n_odd, Parity::Odd)};
}

ModeSequence left_shift(const ModeSequence& s, int k) {
  if (k < 0) fail(ErrorKind::InvalidArgument, "shift must be non-negative");
  if (static_cast<std::size_t>(k) > s.length())
    fail(ErrorKind::ShiftExceedsTruncation, "shift " + std::to_string(k) + " exceeds sequence length " + std::to_string(s.length()));
  ModeSequence out(s.points(), s.length() - k, s.index_at(0) - k * s.step(), s.step(), s.parity());
  out.set_shift_count(s.shift_count() + k);
  for (std::size_t p = 0; p < s.points(); ++p)
    for (std::size_t j = 0; j < out.length(); ++j) out.at(p, j) = s.at(p, j + k);
  return out;
}

ModeSequence build_augmented(const ModeSequence& full, int k, PositiveEntries positive) {
  if (k < 1) fail(ErrorKind::InvalidArgument, "augmentation index must be positive");
  if (full.step() != 1 || !full.has_index(-1)) fail(ErrorKind::InvalidArgument, "expected a full mode sequence");
  const int low = lowest_index(full);
  const int n_neg = (-low + 1) / 2;
  if (2 * k - 1 > -low) fail(ErrorKind::ShiftExceedsTruncation, "augmentation beyond the truncation window");
  ModeSequence out(full.points(), static_cast<std::size_t>(k + n_neg), 2 * k - 1, 2, Parity::Augmented);
  for (std::size_t p = 0; p < full.points(); ++p) {
    for (std::size_t j = 0; j < out.length(); ++j) {
      const int n = out.index_at(j);
      if (n > 0)
        out.at(p, j) = positive == PositiveEntries::Conjugate ? std::conj(full.value(p, -n)) : full.value(p, n);
      else
        out.at(p, j) = full.value(p, n);
    }
  }
  return out;
}

ModeSequence interleave(const ModeSequence& first, const ModeSequence& second) {
  if (first.points() != second.points() || first.step() != second.step())
    fail(ErrorKind::InvalidArgument, "interleave needs matching sequences");
  const std::size_t len = std::min(first.length(), second.length()) * 2 + (first.length() > second.length() ? 1 : 0);
  const int step = first.step() / 2 > 0 ? first.step() / 2 : 1;
  ModeSequence out(first.points(), len, first.start_index(), step, Parity::Full);
  for (std::size_t p = 0; p < first.points(); ++p)
    for (std::size_t j = 0; j < len; ++j) out.at(p, j) = (j % 2 == 0) ? first.at(p, j / 2) : second.at(p, j / 2);
  return out;
}

double sequence_norm(const ModeSequence& s, int p) {
  double best = 0.0;
  for (std::size_t q = 0; q < s.points(); ++q) {
    double sum = 0.0;
    for (std::size_t j = 0; j < s.length(); ++j) {
      const double w = std::pow(1.0 + static_cast<double>(j) * j, 0.5 * p);
      sum += w * std::abs(s.at(q, j));
    }
    best = std::max(best, sum);
  }
  return best;
}

double tail_mass_fraction(const ModeSequence& s) {
  if (s.length() == 0) return 0.0;
  const std::size_t cut = s.length() - std::max<std::size_t>(1, s.length() / 4);
  double tail = 0.0, total = 0.0;
  for (std::size_t q = 0; q < s.points(); ++q)
    for (std::size_t j = 0; j < s.length(); ++j) {
      const double v = std::abs(s.at(q, j));
      total += v;
      if (j >= cut) tail += v;
    }
  return total > 0.0 ? tail / total : 0.0;
}

}  // namespace ttomo
