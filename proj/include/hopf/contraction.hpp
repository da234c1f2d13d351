#pragma once

#include "hopf/fields.hpp"

namespace hopf {

/// Truncated geometric-series solution f_K(z) = sum_{k<K} g(lambda^k z) of
/// f - f o gamma = g on E.
struct SeriesSolution {
  FieldE field;
  int terms = 0;             // K
  double lipschitz = 0.0;    // estimated L with |g(y)| <= L |y| on the ball
  double radius = 0.0;       // R
  double tail_bound = 0.0;   // L R lambda^K / (1 - lambda)
};

// f_K for a fixed K, with no truncation policy.
FieldE partial_sum(const FieldE& g, int terms, const HopfModel& m);

// Deterministic Halton points inside the ball of radius R in R^n.
std::vector<Vec> halton_ball(int n, double radius, int count);

// Bound L on |g(y) - g(0)| / |y| over the ball, from ratios at `samples`
// quasi-random points and central-difference gradients at the origin and the
// first points. Throws LipschitzEstimateFailed on non-finite samples.
double estimate_lipschitz(const FieldE& g, double radius, const HopfModel& m,
                          int samples = 1000);

// Solves f - f o gamma = g with truncation K chosen so that the series tail is
// <= tol on |z| <= R. Throws NecessaryConditionViolated when |g(0)| > tol.
SeriesSolution solve_contraction(const FieldE& g, double radius, double tol,
                                 const HopfModel& m);

// Coordinate of [g] in H^1(Gamma, C^inf(E)) = C (generated by the constant 1).
Complex gamma_class(const FieldE& g, const HopfModel& m);

// l(z) = ln|z| / ln(1/lambda), with l(z) - l(lambda z) = 1 on E \ {0}.
FieldEStar log_cocycle(const HopfModel& m);

}  // namespace hopf
