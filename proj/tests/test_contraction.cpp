#include <cmath>

#include <doctest.h>

#include "hopf/atlas.hpp"
#include "hopf/contraction.hpp"
#include "hopf/errors.hpp"

using namespace hopf;

namespace {

FieldE real_field(std::function<double(std::span<const double>)> f) {
  return FieldE([f](std::span<const double> z) { return Complex{f(z), 0.0}; });
}

Vec scaled(const Vec& z, double s) {
  Vec out = z;
  for (double& x : out) x *= s;
  return out;
}

}  // namespace

TEST_CASE("geometric series closed forms") {
  HopfModel m;
  const FieldE z1 = real_field([](std::span<const double> z) { return z[0]; });
  const FieldE r2 = real_field([](std::span<const double> z) { return z[0] * z[0] + z[1] * z[1]; });
  const SeriesSolution lin = solve_contraction(z1, 2.0, 1e-10, m);
  const SeriesSolution quad = solve_contraction(r2, 2.0, 1e-10, m);
  for (const Vec& z : halton_ball(2, 2.0, 200)) {
    CHECK(std::abs(lin.field(z) - 2.0 * z[0]) < 1e-10);
    CHECK(std::abs(quad.field(z) - (4.0 / 3.0) * (z[0] * z[0] + z[1] * z[1])) < 1e-10);
  }
  CHECK(lin.tail_bound <= 1e-10);
  CHECK(lin.lipschitz >= 1.0);
}

TEST_CASE("residual of the series stays within twice the tolerance") {
  for (double lambda : {0.5, 1.0 / 3.0}) {
    HopfModel m;
    m.lambda = lambda;
    for (const NamedFieldE& g : contraction_atlas(m)) {
      const SeriesSolution s = solve_contraction(g.field, 2.0, 1e-10, m);
      for (const Vec& z : halton_ball(2, 2.0, 300)) {
        CHECK(std::abs(s.field(z) - s.field(scaled(z, lambda)) - g.field(z)) <= 2e-10);
      }
      CHECK(std::abs(s.field(Vec{0.0, 0.0})) == 0.0);
    }
  }
}

TEST_CASE("necessary condition g(0) = 0") {
  HopfModel m;
  const FieldE one = real_field([](std::span<const double>) { return 1.0; });
  CHECK_THROWS_AS(solve_contraction(one, 1.0, 1e-10, m), NecessaryConditionViolated);
  CHECK(gamma_class(one, m) == Complex{1.0, 0.0});
  CHECK(gamma_class(real_field([](std::span<const double> z) { return z[0]; }), m) ==
        Complex{0.0, 0.0});
  CHECK(gamma_class(real_field([](std::span<const double> z) { return 3.0 + z[0]; }), m) ==
        Complex{3.0, 0.0});
}

TEST_CASE("Lipschitz sampling reports non-finite fields") {
  HopfModel m;
  const FieldE bad = real_field([](std::span<const double> z) {
    return z[0] > 0.5 ? std::numeric_limits<double>::infinity() : 0.0;
  });
  CHECK_THROWS_AS(estimate_lipschitz(bad, 1.0, m), LipschitzEstimateFailed);
}

TEST_CASE("partial sums are linear in g") {
  HopfModel m;
  const FieldE a = real_field([](std::span<const double> z) { return std::sin(z[0]) * z[1]; });
  const FieldE b = real_field([](std::span<const double> z) { return z[0] - z[1] * z[1]; });
  const FieldE sa = partial_sum(a, 20, m);
  const FieldE sb = partial_sum(b, 20, m);
  const FieldE sab = partial_sum(FieldE(Complex{2.0, 0.0} * a + Complex{-3.0, 0.0} * b), 20, m);
  for (const Vec& z : halton_ball(2, 1.5, 100)) {
    CHECK(std::abs(sab(z) - (2.0 * sa(z) - 3.0 * sb(z))) < 1e-12);
  }
  CHECK(partial_sum(real_field([](std::span<const double>) { return 1.0; }), 7, m)(
            Vec{0.0, 0.0}) == Complex{7.0, 0.0});
}

TEST_CASE("truncations converge in the seminorms") {
  HopfModel m;
  const FieldE g = real_field([](std::span<const double> z) { return z[0] * std::exp(z[1]); });
  double previous = INFINITY;
  for (int K : {4, 8, 16}) {
    const FieldE diff(partial_sum(g, K, m) - partial_sum(g, 2 * K, m));
    const double rho = seminorm(diff, 1, 2, m);
    CHECK(rho < previous);
    previous = rho;
  }
  CHECK(previous < 1e-3);
}

TEST_CASE("log cocycle") {
  HopfModel m;
  const FieldEStar l = log_cocycle(m);
  CHECK(std::abs(l(Vec{1.0, 0.0})) < 1e-15);
  CHECK(l(Vec{0.5, 0.0}).real() == doctest::Approx(-1.0));
  for (const Vec& z : halton_ball(3, 4.0, 100)) {
    if (norm(z) == 0.0) continue;
    CHECK(std::abs(l(z) - l(scaled(z, m.lambda)) - 1.0) < 1e-12);
  }
}
