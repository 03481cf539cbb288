#pragma once

#include <span>
#include <vector>

#include "ttomo/grid.hpp"
#include "ttomo/types.hpp"

namespace ttomo {

inline constexpr int kMaxOrder = 20;

// Exact binomial coefficient; n <= kMaxOrder.
long long binomial(int n, int k);
void require_order(int m);

struct Direction {
  double angle = 0.0;
  Direction() = default;
  explicit Direction(double a) : angle(a) {}
  cplx unit() const { return std::polar(1.0, angle); }
  // counterclockwise rotation by pi/2
  cplx perp() const { return kI * unit(); }
  cplx theta_pair_plus() const { return unit(); }
  cplx theta_pair_minus() const { return std::conj(unit()); }
};

// Weights C(m,k) cos^{m-k} sin^k so that <f, theta^m> = sum_k w_k f~_k.
struct DirectionWeights {
  int order = 0;
  std::vector<double> w;
  DirectionWeights(int m, const Direction& d);
  double apply(const double* ft) const;
};

// Conversion matrices between f~ (Cartesian pseudovector) and F (complex
// pseudovector), F_k carrying m-k holomorphic and k antiholomorphic slots.
struct TensorLaw {
  int order = 0;
  std::vector<cplx> to_complex;    // (m+1)^2, row k gives F_k
  std::vector<cplx> to_cartesian;  // (m+1)^2, row k gives f~_k (real part)
};
const TensorLaw& tensor_law(int m);
TensorLaw build_tensor_law(int m);

// Pointwise conversions.
std::vector<cplx> pseudovector_to_complex(std::span<const double> ft, const TensorLaw& law);
std::vector<cplx> pseudovector_to_complex(std::span<const double> ft);
std::vector<double> complex_to_pseudovector(std::span<const cplx> F, const TensorLaw& law, double tol = 1e-9);
std::vector<double> complex_to_pseudovector(std::span<const cplx> F, double tol = 1e-9);
// modes[k] = f_n with n = 2k - m.
std::vector<cplx> modes_from_complex(std::span<const cplx> F);
std::vector<cplx> complex_from_modes(std::span<const cplx> modes);
double contract_direct(std::span<const double> ft, const Direction& d);
double contract_modes(std::span<const cplx> modes, const Direction& d);

// Anything that yields an m-tensor pseudovector at a point of the plane.
class TensorSource {
 public:
  virtual ~TensorSource() = default;
  virtual int order() const = 0;
  virtual void evaluate(cplx x, double* out) const = 0;
  double contract(cplx x, const DirectionWeights& w) const;
};

class SymmetricTensorField : public TensorSource {
 public:
  SymmetricTensorField() = default;
  SymmetricTensorField(int m, const Lattice& lat);

  int order() const override { return order_; }
  void evaluate(cplx x, double* out) const override;

  const Lattice& lattice() const { return lattice_; }
  const GridSpec& grid() const { return lattice_.spec(); }
  std::vector<double>& component(int k) { return comps_[k]; }
  const std::vector<double>& component(int k) const { return comps_[k]; }
  // Zero every value outside the mask.
  void apply_mask();

 private:
  int order_ = 0;
  Lattice lattice_;
  std::vector<std::vector<double>> comps_;
};

class ComplexModeField {
 public:
  ComplexModeField() = default;
  ComplexModeField(int m, const Lattice& lat);

  int order() const { return order_; }
  const Lattice& lattice() const { return lattice_; }
  std::vector<cplx>& F(int k) { return F_[k]; }
  const std::vector<cplx>& F(int k) const { return F_[k]; }
  bool has_modes() const { return !modes_.empty(); }
  // Mode f_n, n in {-m, -m+2, ..., m}.
  std::vector<cplx>& mode(int n);
  const std::vector<cplx>& mode(int n) const;
  void allocate_modes();

 private:
  int order_ = 0;
  Lattice lattice_;
  std::vector<std::vector<cplx>> F_;
  std::vector<std::vector<cplx>> modes_;
};

SymmetricTensorField sample_source(const TensorSource& src, const Lattice& lat);
ComplexModeField cartesian_to_complex(const SymmetricTensorField& f);
SymmetricTensorField complex_to_cartesian(const ComplexModeField& F, double tol = 1e-9);
ComplexModeField angular_modes(const ComplexModeField& F);
std::vector<double> contract_with_theta(const SymmetricTensorField& f, const Direction& d);
std::vector<double> contract_with_modes(const ComplexModeField& F, const Direction& d);

}  // namespace ttomo
