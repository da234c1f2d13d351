#pragma once

#include <vector>

#include "hopf/geometry.hpp"

namespace hopf {

// Deterministic point sets on the unit sphere S^{d-1} in R^d.
struct SphereGrid {
  std::vector<Vec> points;
  std::vector<double> weights;  // normalized to sum 1
};

// Product rule for the uniform measure: trapezoid in the azimuth, and per polar
// angle a rule exact on polynomials in u. Symmetric under u -> -u.
SphereGrid quadrature_sphere(int ambient_dim, int azimuth_pts);

// Covering set for sups: equispaced polar angles including both poles, each
// pole emitted once. Weights are uniform and carry no quadrature meaning.
SphereGrid cover_sphere(int ambient_dim, int azimuth_pts);

struct VGrid {
  std::vector<TransversalPoint> points;
  std::vector<double> weights;
};

struct MGrid {
  std::vector<HopfPoint> points;
  std::vector<double> weights;
};

// Quadrature grid on V = S^{n-1} x S^1 (sphere_pts x theta_pts).
VGrid v_quadrature_grid(const HopfModel& m);
// Quadrature grid on M = S^n x S^1 at half the V resolution per factor.
MGrid m_quadrature_grid(const HopfModel& m);
// Covering grid on M (poles included) used for sup-norm verification.
MGrid m_cover_grid(const HopfModel& m);

}  // namespace hopf
