#include "hopf/model.hpp"

#include <string>

#include "hopf/errors.hpp"

namespace hopf {

void HopfModel::validate() const {
  if (n < 2 || n + 1 > kMaxAmbient) {
    throw ModelError("dimension n must lie in [2, " + std::to_string(kMaxAmbient - 1) + "]");
  }
  if (!(lambda > 0.0 && lambda < 1.0)) throw ModelError("lambda must lie in (0, 1)");
  if (!(quad_tol > 0.0) || !(series_tol > 0.0) || !(solve_tol > 0.0) || !(flow_rtol > 0.0)) {
    throw ModelError("tolerances must be strictly positive");
  }
  if (fd_order < 2 || fd_order % 2 != 0 || fd_order > 8) {
    throw ModelError("fd_order must be even and in [2, 8]");
  }
  if (grid.sphere_pts < 8 || grid.theta_pts < 8 || grid.radial_layers < 1) {
    throw ModelError("grid resolutions too small");
  }
}

}  // namespace hopf
