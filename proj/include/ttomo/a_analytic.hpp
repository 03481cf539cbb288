#pragma once

#include <span>
#include <vector>

#include "ttomo/domain.hpp"
#include "ttomo/mode_sequence.hpp"

namespace ttomo {

struct CauchyOptions {
  // Boundary data are spectrally upsampled until the target sits at least
  // `resolve_factor` node spacings from the boundary, up to `max_refine` times.
  double resolve_factor = 8.0;
  int max_refine = 32;
};

// One boundary node spacing in arc length, 2 pi max|zeta'| / N_b.
double cauchy_min_distance(const ConvexDomain& dom, int n_b);

// Targets closer than d_min / 2 are rejected (the data are refined once past d_min).
ModeSequence bukhgeim_cauchy(const ModeSequence& g, const ConvexDomain& dom, std::span<const cplx> targets,
                             int shift, const CauchyOptions& opt = {});

// Boundary operator with the series bracket taken by its tangential limit on
// the diagonal.
ModeSequence bukhgeim_hilbert(const ModeSequence& g, const ConvexDomain& dom, int shift = 1);

// g + i H g
ModeSequence range_defect(const ModeSequence& g, const ConvexDomain& dom, int shift = 1);

// ||g + i H g||_{1,1} / ||g||_{1,1}, 0 for the zero sequence.
double range_residual(const ModeSequence& g, const ConvexDomain& dom, int shift = 1);

}  // namespace ttomo
