// The C/p law for phi = sqrt, checked literally on every (k, r) with k <= 3,
// r <= 2. Known to fail where p = 32..64 is still preasymptotic for the annulus
// (large k, high r); see the README.

#include <algorithm>

#include <doctest.h>

#include "hopf/frechet.hpp"

using namespace hopf;

namespace {

struct Law {
  std::vector<ConvergenceRow> rows;

  double rho(int k, int r, int p) const {
    for (const ConvergenceRow& row : rows) {
      if (row.k == k && row.r == r && row.p == p) return row.rho;
    }
    return NAN;
  }
  double bound(int k, int r, int p_max) const {
    double best = 0.0;
    for (const ConvergenceRow& row : rows) {
      if (row.k == k && row.r == r && row.p <= p_max) best = std::max(best, row.p_times_rho);
    }
    return best;
  }
};

const Law& law() {
  static const Law table = [] {
    HopfModel m;
    AppendixProfile pr;
    pr.p_max = 64;
    return Law{convergence_table(pr, m)};
  }();
  return table;
}

}  // namespace

TEST_CASE("C(k, r) is stable within 20% when p_max doubles from 32 to 64") {
  for (int k = 1; k <= 3; ++k) {
    for (int r = 0; r <= 2; ++r) {
      CAPTURE(k);
      CAPTURE(r);
      CHECK(law().bound(k, r, 64) <= 1.2 * law().bound(k, r, 32));
    }
  }
}

TEST_CASE("doubling p halves rho within 10% for p >= 8") {
  for (int k = 1; k <= 3; ++k) {
    for (int r = 0; r <= 2; ++r) {
      for (int p = 8; 2 * p <= 64; p *= 2) {
        CAPTURE(k);
        CAPTURE(r);
        CAPTURE(p);
        CHECK(law().rho(k, r, 2 * p) <= 0.55 * law().rho(k, r, p));
      }
    }
  }
}
