#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ttomo/domain.hpp"
#include "ttomo/grid.hpp"

namespace ttomo {

struct CrPair {
  std::vector<cplx> d;     // (d/dx - i d/dy) / 2
  std::vector<cplx> dbar;  // (d/dx + i d/dy) / 2
};

// Centered differences where both neighbours are valid, second-order one-sided
// differences at the edge of the valid mask.
CrPair cr_derivatives(const GridSpec& g, std::span<const cplx> field, std::span<const std::uint8_t> valid);

// Boundary values of d u and dbar u from the trace u|Gamma on the boundary grid
// and interior values rings[r][i] at distance (r + 1) delta along the inward
// normal. Two rings give the ratio-2 Richardson limit of the normal difference
// quotient; four rings give the fourth-order one-sided stencil.
CrPair boundary_cr_derivatives(const BoundaryGrid& bg, std::span<const cplx> trace,
                               const std::vector<std::vector<cplx>>& rings, double delta);

// Interior ring points zeta_i - k delta nu_i.
std::vector<cplx> ring_points(const BoundaryGrid& bg, double distance);

// ||dbar v_{-j} + d v_{-j-2}||_2 / ||dbar v_{-j}||_2 summed over j = first ..
// first + count - 1, on valid nodes whose four neighbours are valid.
// v[j] holds v_{-j}.
double l2_analyticity_residual(const GridSpec& g, const std::vector<std::vector<cplx>>& v,
                               std::span<const std::uint8_t> valid, std::size_t first, std::size_t count);

}  // namespace ttomo
