#pragma once

#include <limits>
#include <span>
#include <string>
#include <vector>

#include "ttomo/grid.hpp"
#include "ttomo/mode_sequence.hpp"
#include "ttomo/range.hpp"
#include "ttomo/sources.hpp"

namespace ttomo {

enum class PsiKind { NonattEven, NonattOdd, AttEven, AttOdd };
enum class PsiProvenance { UserSupplied, HarmonicExtension, OracleModes, Zero };
enum class PsiStrategy { Zero, Harmonic, Oracle };

const char* psi_kind_name(PsiKind k);
const char* psi_provenance_name(PsiProvenance p);
PsiStrategy parse_psi_strategy(const std::string& s);
PsiKind psi_kind_for(int m, bool attenuated);

// Mode indices of the free functions, ordered from the highest (0 or -1) down.
std::vector<int> psi_indices(PsiKind kind, int m);

// Free interior modes of the reconstruction. functions[j] holds psi_{indices[j]}
// on the lattice; boundary[j], when present, its values at the boundary nodes.
struct PsiClassElement {
  PsiKind kind = PsiKind::NonattEven;
  int order = 0;
  PsiProvenance provenance = PsiProvenance::UserSupplied;
  Lattice lattice;
  std::vector<int> indices;
  std::vector<std::vector<cplx>> functions;
  std::vector<std::vector<cplx>> boundary;
  double trace_residual = std::numeric_limits<double>::quiet_NaN();
  double gradient_residual = std::numeric_limits<double>::quiet_NaN();
  bool gradient_ok = true;
  std::vector<std::string> notes;

  bool empty() const { return indices.empty(); }
  const std::vector<cplx>& function(int index) const;
};

// Interior truth for the oracle strategy (tests and the --oracle CLI path).
struct OracleSource {
  const TensorSource* f = nullptr;
  const Attenuation* a = nullptr;
  int n_theta = 256;
};

// Harmonic extension into the unit disk of periodic boundary samples.
std::vector<cplx> harmonic_extension(std::span<const cplx> trace, const Lattice& lat);

PsiClassElement default_psi(const ModeSequence& full, const Lattice& lat, int m, const Attenuation* a,
                            PsiStrategy strategy, const PipelineOptions& opt = {},
                            const OracleSource* oracle = nullptr);

// max |psi_j - g_{index_j}| over the boundary nodes; NaN without boundary values.
double psi_trace_residual(const PsiClassElement& psi, const ModeSequence& full);

}  // namespace ttomo
