#pragma once

#include <vector>

namespace ttomo {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

// Gauss-Legendre rule, cached per order.
const GaussRule& gauss_legendre(int n);

// Integral of f over [a, b] with `panels` equal panels of an n-point rule.
template <class F>
double integrate_gl(F&& f, double a, double b, int n = 8, int panels = 1) {
  const GaussRule& g = gauss_legendre(n);
  const double w = (b - a) / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * w;
    const double mid = lo + 0.5 * w;
    double part = 0.0;
    for (int k = 0; k < n; ++k) part += g.weights[k] * f(mid + 0.5 * w * g.nodes[k]);
    sum += 0.5 * w * part;
  }
  return sum;
}

}  // namespace ttomo
