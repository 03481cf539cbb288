#pragma once

#include <string>
#include <vector>

#include "ttomo/types.hpp"

namespace ttomo {

// Distances along a line through x in direction theta to the two boundary
// crossings: x + forward*theta and x - backward*theta lie on the boundary.
struct Chord {
  double forward = 0.0;
  double backward = 0.0;
  double total() const { return forward + backward; }
};

// Boundary samples at uniform parameter values beta_i = 2 pi i / n.
struct BoundaryGrid {
  int n = 0;
  double dbeta = 0.0;
  std::vector<double> beta;
  std::vector<cplx> zeta;    // boundary point
  std::vector<cplx> dzeta;   // d zeta / d beta
  std::vector<cplx> d2zeta;  // d^2 zeta / d beta^2
  std::vector<cplx> normal;  // outward unit normal
};

// Strictly convex domain: the unit disk or a centred ellipse
// zeta(beta) = a cos(beta) + i b sin(beta), traversed counterclockwise.
class ConvexDomain {
 public:
  enum class Kind { Disk, Param };

  static ConvexDomain unit_disk();
  static ConvexDomain ellipse(double semi_a, double semi_b);

  Kind kind() const { return kind_; }
  bool is_disk() const { return kind_ == Kind::Disk; }
  double semi_a() const { return a_; }
  double semi_b() const { return b_; }
  std::string name() const { return is_disk() ? "disk" : "param"; }
  double bounding_radius() const { return a_ > b_ ? a_ : b_; }

  cplx boundary_point(double beta) const;
  cplx tangent(double beta) const;
  cplx second_derivative(double beta) const;
  cplx outward_normal(double beta) const;
  // Outward unit normal at the boundary point nearest to x along the level set.
  cplx normal_at(cplx x) const;
  BoundaryGrid sample_boundary(int n) const;

  // ((x/a)^2 + (y/b)^2)^{1/2}; equals 1 on the boundary.
  double relative_radius(cplx x) const;
  bool contains(cplx x, double tol = 1e-12) const;
  // x may sit on the boundary up to roundoff; throws OutsideDomain otherwise.
  Chord chord(cplx x, cplx dir) const;
  double distance_to_boundary(cplx x) const;
  // Half-width of the domain projected on the unit vector n.
  double support_width(cplx n) const;

 private:
  ConvexDomain(Kind k, double a, double b) : kind_(k), a_(a), b_(b) {}
  Kind kind_;
  double a_, b_;
};

}  // namespace ttomo
