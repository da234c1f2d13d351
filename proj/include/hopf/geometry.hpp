#pragma once

#include <span>

#include "hopf/model.hpp"

namespace hopf {

// Point (z, t) of the cover E x R \ {(0,0)}.
struct CoverPoint {
  Vec z;
  double t = 0.0;

  double radius() const;
  double z_norm() const;
};

// Point (w, theta) of M = S^n x S^1, theta in [0, 1).
struct HopfPoint {
  Vec w;
  double theta = 0.0;
};

// Point (u, theta) of the transversal V = S^{n-1} x S^1.
struct TransversalPoint {
  Vec u;
  double theta = 0.0;
};

double norm(std::span<const double> v);
// x - floor(x), folded into [0, 1).
double frac(double x);
// Distance on R/Z.
double circle_distance(double a, double b);

CoverPoint gamma(const CoverPoint& p, const HopfModel& m);
CoverPoint gamma_inv(const CoverPoint& p, const HopfModel& m);
// gamma^k for any integer k.
CoverPoint gamma_pow(const CoverPoint& p, int k, const HopfModel& m);

// Chart M = {(w, theta)}: w = (z, t) / r, theta = frac(ln r / ln lambda).
HopfPoint project(const CoverPoint& p, const HopfModel& m);
// Section of project over the fundamental shell lambda < r <= 1.
CoverPoint lift(const HopfPoint& q, const HopfModel& m);

// Speed a(z, t) = r of the vector field X = a d/dt; a(gamma p) = lambda a(p).
double speed(const CoverPoint& p, const HopfModel& m);

// gamma-invariant metric <u, v> / r^2 in cover coordinates (dz_1..dz_n, dt).
double metric(const CoverPoint& p, std::span<const double> u, std::span<const double> v,
              const HopfModel& m);

// Time-s map of X = a d/dt. Closed form on the half-line leaves z = 0,
// adaptive Dormand-Prince integration elsewhere. Throws IntegratorError.
CoverPoint flow(const CoverPoint& p, double s, const HopfModel& m);

// V embedded as the leaf {t = 0}: (u, theta) -> (lambda^theta u, 0).
CoverPoint transversal_embed(const TransversalPoint& v, const HopfModel& m);
// Inverse of transversal_embed modulo gamma, for z != 0.
TransversalPoint transversal_project(std::span<const double> z, const HopfModel& m);

}  // namespace hopf
