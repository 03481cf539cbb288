#pragma once

#include <span>
#include <string>
#include <vector>

#include "ttomo/a_analytic.hpp"
#include "ttomo/attenuation.hpp"
#include "ttomo/mode_sequence.hpp"
#include "ttomo/transport.hpp"

namespace ttomo {

// Shared numerical settings of the range checks and reconstructions.
struct PipelineOptions {
  int n_modes = 64;
  int k_max = -1;          // augmented odd-order family; -1 means m + 4
  double tolerance = 1e-3;
  int bundle_n_theta = 64; // angular samples of e^{-+h} at interior points
  int bundle_k_h = 32;
  CauchyOptions cauchy{};
  double min_attenuation = 1e-3;

  int resolved_k_max(int m) const { return k_max < 0 ? m + 4 : k_max; }
};

// Attenuated paths need a > 0; null or identically zero means non-attenuated.
bool is_attenuated(const Attenuation* a);
void require_positive(const Attenuation& a, const Lattice& probe, double floor);
// N_modes >= 2m + 8, else TruncationTooShort.
void require_truncation(const PipelineOptions& opt, int m);

// e^{-G} <g_0, g_{-1}, ...> at the boundary nodes.
ModeSequence attenuated_boundary_modes(const ModeSequence& full, const ConvexDomain& dom, const Attenuation& a,
                                       const PipelineOptions& opt);

// The data-determined tail of the interior mode sequence at `points`:
// non-attenuated, <u_{-(m+1)}, u_{-(m+3)}, ...> from B; attenuated,
// <u_{-m}, u_{-(m+1)}, ...> from e^{G} B e^{-G}.
ModeSequence interior_tail(const ModeSequence& full, const ConvexDomain& dom, const Attenuation* a, int m,
                           std::span<const cplx> points, const PipelineOptions& opt);

// d of the interior mode u_index on the boundary from its trace and two rings.
std::vector<cplx> boundary_tail_derivative(const ModeSequence& full, const ConvexDomain& dom, const Attenuation* a,
                                           int m, int index, const PipelineOptions& opt);

struct RangeCondition {
  std::string name;
  double residual = 0.0;
  bool pass = true;
};

struct RangeReport {
  int order = 0;
  bool attenuated = false;
  std::string attenuation_tag = "zero";
  int n_b = 0, n_theta = 0, n_modes = 0;
  int k_max = 0;  // 0 when the theorem has no infinite family
  double tolerance = 1e-3;
  std::vector<RangeCondition> conditions;
  double tail_mass = 0.0;
  bool tail_warning = false;
  std::vector<std::string> warnings;

  double max_residual() const;
  bool pass() const;
};

RangeReport check_range(const Sinogram& g, int m, const Attenuation* a, const PipelineOptions& opt = {});

// Boundary limit of -2 Re d(e^G B e^{-G} g)_{-1} / a against g_0 (first-order attenuated case).
double first_order_g0_residual(const ModeSequence& full, const ConvexDomain& dom, const Attenuation& a,
                               const PipelineOptions& opt);

}  // namespace ttomo
