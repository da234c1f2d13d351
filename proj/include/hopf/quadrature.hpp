#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace hopf {

using Complex = std::complex<double>;

struct QuadResult {
  Complex value;
  double error_estimate = 0.0;
  int intervals = 0;
};

inline constexpr int kMaxQuadIntervals = 4000;

// Globally adaptive Gauss-Kronrod (7/15) quadrature of a complex integrand on
// [a, b]. Bisects the interval with the largest |K15 - G7| until the summed
// estimate is <= tol (absolute). Throws QuadratureError when the interval
// budget runs out. Deterministic for a deterministic integrand.
QuadResult quad_segment_detailed(const std::function<Complex(double)>& integrand, double a,
                                 double b, double tol);

Complex quad_segment(const std::function<Complex(double)>& integrand, double a, double b,
                     double tol);

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;  // sum to 2
};

// n-point Gauss-Legendre rule via Newton iteration on P_n.
GaussRule gauss_legendre(int n);

}  // namespace hopf
