#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ttomo/psi_class.hpp"
#include "ttomo/range.hpp"
#include "ttomo/tensor_algebra.hpp"

namespace ttomo {

struct Reconstruction {
  SymmetricTensorField field;
  // Interior modes u_n on the lattice (zero off the evaluation targets).
  std::map<int, std::vector<cplx>> modes;
  std::vector<std::uint8_t> targets;  // nodes outside the boundary collar
  std::size_t collar_nodes = 0;       // inside the mask but filled by extrapolation
  std::string collar_fill = "constant-extrapolation";
  std::optional<RangeReport> range;
  std::vector<std::string> warnings;
};

struct ReconstructOptions : PipelineOptions {
  bool check_first = true;
  // Collar width in units of d_min; the Cauchy formula accepts targets down to d_min / 2.
  double collar = 0.5;
};

Reconstruction reconstruct(const Sinogram& g, int m, const Attenuation* a, const PsiClassElement& psi,
                           const Lattice& lat, const ReconstructOptions& opt = {});

// sqrt(sum_k C(m,k) |x_k - y_k|^2) over the mask, relative to the same norm of ref.
double relative_l2_error(const SymmetricTensorField& x, const SymmetricTensorField& ref);

// ||x - ref||_2 / ||ref||_2 over outgoing samples.
double sinogram_relative_error(const Sinogram& x, const Sinogram& ref);

struct GaugeProbe {
  SymmetricTensorField field1, field2;
  double field_distance = 0.0;       // relative L2 distance of the two fields
  double data_discrepancy = 0.0;     // max |X f1 - X f2| over outgoing samples
  double relative_discrepancy = 0.0; // the same divided by max |g|
};

GaugeProbe gauge_probe(const Sinogram& g, int m, const Attenuation* a, const PsiClassElement& psi1,
                       const PsiClassElement& psi2, const Lattice& lat, const ReconstructOptions& opt = {});

// max over k <= k_max and the points of |u_{2k-1} - conj(u_{-(2k-1)})|, with
// u from the Bukhgeim-Cauchy formula applied to the augmented sequences.
double conjugate_mode_check(const ModeSequence& full, const ConvexDomain& dom, std::span<const cplx> points,
                            int k_max, PositiveEntries positive = PositiveEntries::FromData,
                            const CauchyOptions& opt = {});

}  // namespace ttomo
