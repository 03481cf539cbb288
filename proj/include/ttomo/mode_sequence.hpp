#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ttomo/transport.hpp"
#include "ttomo/types.hpp"

namespace ttomo {

enum class Parity { Full, Even, Odd, Augmented };
const char* parity_name(Parity p);

// Truncated sequence <s_{start}, s_{start-step}, ...> of complex values at
// each base point. Storage is point-major so one point's sequence is contiguous.
class ModeSequence {
 public:
  ModeSequence() = default;
  ModeSequence(std::size_t points, std::size_t length, int start_index, int step, Parity parity);

  std::size_t points() const { return points_; }
  std::size_t length() const { return length_; }
  int start_index() const { return start_; }
  int step() const { return step_; }
  Parity parity() const { return parity_; }
  int shift_count() const { return shifts_; }
  void set_shift_count(int s) { shifts_ = s; }

  int index_at(std::size_t pos) const { return start_ - static_cast<int>(pos) * step_; }
  bool has_index(int n) const;
  std::size_t position_of(int n) const;

  cplx& at(std::size_t p, std::size_t pos) { return data_[p * length_ + pos]; }
  cplx at(std::size_t p, std::size_t pos) const { return data_[p * length_ + pos]; }
  cplx value(std::size_t p, int n) const { return at(p, position_of(n)); }
  std::span<cplx> row(std::size_t p) { return {data_.data() + p * length_, length_}; }
  std::span<const cplx> row(std::size_t p) const { return {data_.data() + p * length_, length_}; }
  // Values of entry pos across all points.
  std::vector<cplx> column(std::size_t pos) const;
  void set_column(std::size_t pos, std::span<const cplx> v);
  std::vector<cplx>& raw() { return data_; }
  const std::vector<cplx>& raw() const { return data_; }

 private:
  std::size_t points_ = 0, length_ = 0;
  int start_ = 0, step_ = 1;
  Parity parity_ = Parity::Full;
  int shifts_ = 0;
  std::vector<cplx> data_;
};

// Angular Fourier modes g_n for n = N, ..., -N at every boundary node.
ModeSequence fourier_modes(const Sinogram& s, int n_modes);

// <g_0, g_{-1}, g_{-2}, ...> from the full modes.
ModeSequence nonpositive_modes(const ModeSequence& full);

// (g^even, g^odd) = (<g_0, g_{-2}, ...>, <g_{-1}, g_{-3}, ...>).
std::pair<ModeSequence, ModeSequence> build_parity(const ModeSequence& full);

ModeSequence left_shift(const ModeSequence& s, int k);

enum class PositiveEntries { Conjugate, FromData };

// <g_{2k-1}, ..., g_1, g_{-1}, g_{-3}, ...>.
ModeSequence build_augmented(const ModeSequence& full, int k, PositiveEntries positive = PositiveEntries::Conjugate);

// <a_0, b_0, a_1, b_1, ...>; both inputs share points and step.
ModeSequence interleave(const ModeSequence& first, const ModeSequence& second);

// sup over points of sum_j <j>^p |s_j|, <j> = (1 + j^2)^{1/2}.
double sequence_norm(const ModeSequence& s, int p);

// Fraction of the total l^1 mass carried by the last quarter of the entries.
double tail_mass_fraction(const ModeSequence& s);

inline constexpr double kTailMassWarning = 0.10;

}  // namespace ttomo
