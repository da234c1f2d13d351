#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "hopf/atlas.hpp"
#include "hopf/errors.hpp"
#include "hopf/fields.hpp"
#include "hopf/quadrature.hpp"
#include "oracle_values.hpp"

using namespace hopf;

namespace {

FieldE polynomial(std::function<double(std::span<const double>)> f) {
  return FieldE([f](std::span<const double> z) { return Complex{f(z), 0.0}; });
}

MultiIndex mi(std::initializer_list<int> s) { return MultiIndex(s); }

}  // namespace

TEST_CASE("multi_indices are graded") {
  const auto idx = multi_indices(2, 2);
  REQUIRE(idx.size() == 6);
  CHECK(order(idx[0]) == 0);
  CHECK(order(idx[1]) == 1);
  CHECK(order(idx[5]) == 2);
  CHECK(multi_indices(3, 4).size() == 35);
}

TEST_CASE("finite differences are exact on polynomials") {
  HopfModel m;
  const FieldE sq = polynomial([](std::span<const double> z) { return z[0] * z[0]; });
  const FieldE norm2 =
      polynomial([](std::span<const double> z) { return z[0] * z[0] + z[1] * z[1]; });
  const FieldE cubic =
      polynomial([](std::span<const double> z) { return z[0] * z[0] * z[1] - 2.0 * z[1]; });
  for (Vec z : {Vec{0.0, 0.0}, Vec{1.3, -0.4}, Vec{-5.0, 2.0}}) {
    CHECK(std::abs(derivative(sq, mi({2, 0}), z, m) - 2.0) < 1e-6);
    CHECK(std::abs(derivative(norm2, mi({1, 1}), z, m)) < 1e-6);
    CHECK(std::abs(derivative(cubic, mi({2, 1}), z, m) - 2.0) < 1e-6);
    CHECK(std::abs(derivative(cubic, mi({0, 1}), z, m) - (z[0] * z[0] - 2.0)) < 1e-6);
  }
}

TEST_CASE("third derivative of exp at the origin") {
  HopfModel m;
  const FieldE e = polynomial([](std::span<const double> z) { return std::exp(z[0]); });
  CHECK(std::abs(derivative(e, mi({3, 0}), Vec{0.0, 0.0}, m) - oracle::kExpThird) < 1e-5);
}

TEST_CASE("derivative order is capped") {
  HopfModel m;
  const FieldE e = polynomial([](std::span<const double> z) { return z[0]; });
  CHECK_THROWS_AS(derivative(e, mi({3, 2}), Vec{0.0, 0.0}, m), DerivativeOrderError);
}

TEST_CASE("analytic derivatives take precedence") {
  HopfModel m;
  bool used = false;
  FieldE f([](std::span<const double> z) { return Complex{z[0], 0.0}; },
           [&used](std::span<const double>, const MultiIndex&) {
             used = true;
             return Complex{42.0, 0.0};
           });
  CHECK(derivative(f, mi({1, 0}), Vec{0.1, 0.2}, m) == Complex{42.0, 0.0});
  CHECK(used);
}

TEST_CASE("FieldE refuses fields that are not smooth at 0") {
  FieldEStar s([](std::span<const double> z) { return Complex{std::log(norm(z)), 0.0}; });
  CHECK_THROWS_AS(FieldE{s}, ModelError);
}

TEST_CASE("seminorm examples and monotonicity") {
  HopfModel m;
  const FieldE one = polynomial([](std::span<const double>) { return 1.0; });
  CHECK(seminorm(one, 1, 0, m) == doctest::Approx(1.0));
  CHECK(seminorm(one, 3, 0, m) == doctest::Approx(1.0));
  const FieldE z1 = polynomial([](std::span<const double> z) { return z[0]; });
  CHECK(seminorm(z1, 1, 0, m) == doctest::Approx(2.0).epsilon(1e-12));

  const FieldM g = random_field_m(4, m);
  const FieldE f([g, m](std::span<const double> z) {
    HopfPoint q;
    q.w.assign(z.begin(), z.end());
    q.w.push_back(0.3);
    q.theta = 0.2;
    return g(q);
  });
  for (int k = 1; k <= 2; ++k) {
    for (int r = 0; r <= 1; ++r) {
      CHECK(seminorm(f, k, r, m) <= seminorm(f, k + 1, r + 1, m) + 1e-12);
    }
  }
}

TEST_CASE("segment quadrature") {
  auto one = [](double) { return Complex{1.0, 0.0}; };
  auto odd = [](double s) { return Complex{s, 0.0}; };
  auto peaked = [](double s) { return Complex{1.0 / std::sqrt(0.01 + s * s), 0.0}; };
  CHECK(std::abs(quad_segment(one, 0.0, 1.0, 1e-12) - 1.0) < 1e-12);
  CHECK(std::abs(quad_segment(odd, -1.0, 1.0, 1e-12)) < 1e-12);
  CHECK(std::abs(quad_segment(peaked, -1.0, 1.0, 1e-11) - oracle::kQuadAsinh) < 1e-11);
  CHECK(std::abs(quad_segment(peaked, 1.0, -1.0, 1e-11) + oracle::kQuadAsinh) < 1e-11);
}

TEST_CASE("quadrature battery against closed forms") {
  struct Case {
    std::function<Complex(double)> f;
    double a, b, exact;
  };
  const std::vector<Case> battery{
      {[](double s) { return Complex{std::sin(s), 0.0}; }, 0.0, std::numbers::pi, 2.0},
      {[](double s) { return Complex{std::exp(s), 0.0}; }, 0.0, 1.0, std::exp(1.0) - 1.0},
      {[](double s) { return Complex{1.0 / (1.0 + s * s), 0.0}; }, -5.0, 5.0, 2.0 * std::atan(5.0)},
      {[](double s) { return Complex{std::sqrt(s), 0.0}; }, 0.0, 1.0, 2.0 / 3.0},
      {[](double s) { return Complex{std::cos(40.0 * s), 0.0}; }, 0.0, 1.0, std::sin(40.0) / 40.0},
  };
  for (double tol : {1e-8, 1e-11}) {
    for (const Case& c : battery) {
      const QuadResult r = quad_segment_detailed(c.f, c.a, c.b, tol);
      CHECK(std::abs(r.value - c.exact) < tol);
      CHECK(r.error_estimate <= tol);
    }
  }
  // Complex integrand: int_0^{2 pi} e^{i s} ds = 0.
  CHECK(std::abs(quad_segment([](double s) { return std::exp(Complex{0.0, s}); }, 0.0,
                              2.0 * std::numbers::pi, 1e-12)) < 1e-12);
}

TEST_CASE("quadrature reports exhaustion") {
  auto wild = [](double s) { return Complex{std::sin(1.0 / (s + 1e-9)), 0.0}; };
  CHECK_THROWS_AS(quad_segment(wild, 0.0, 1.0, 1e-14), QuadratureError);
}

TEST_CASE("Gauss-Legendre rules integrate polynomials exactly") {
  const GaussRule rule = gauss_legendre(6);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    acc += rule.weights[i] * std::pow(rule.nodes[i], 10);
  }
  CHECK(acc == doctest::Approx(2.0 / 11.0).epsilon(1e-14));
}

TEST_CASE("lifts are gamma-invariant") {
  HopfModel m;
  const FieldM g = random_field_m(2, m);
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    CoverPoint p;
    p.z = {2.0 * unit_uniform(rng()) - 1.0, 2.0 * unit_uniform(rng()) - 1.0};
    p.t = 2.0 * unit_uniform(rng()) - 1.0;
    CHECK(std::abs(g.lifted(gamma(p, m), m) - g.lifted(p, m)) < 1e-12);
  }
}

TEST_CASE("apply_X") {
  HopfModel m;
  const FieldM zero = apply_X(FieldM::constant(3.0), m);
  HopfPoint q;
  q.w = {0.6, 0.0, 0.8};
  q.theta = 0.3;
  CHECK(std::abs(zero(q)) < 1e-12);

  // X.(t/r) at (z, t) = ((1, 0), 0) is a (1/r - t^2/r^3) = 1.
  const FieldM x_tr = apply_X(parse_field("t_over_r", m), m);
  HopfPoint e1;
  e1.w = {1.0, 0.0, 0.0};
  e1.theta = 0.0;
  CHECK(std::abs(x_tr(e1) - 1.0) < 1e-9);

  const FieldM f = random_field_m(5, m);
  const FieldM g = random_field_m(6, m);
  const FieldM lhs = apply_X(Complex{2.0, 0.0} * f + Complex{-0.5, 0.0} * g, m);
  const FieldM fx = apply_X(f, m);
  const FieldM gx = apply_X(g, m);
  for (const HopfPoint& p : m_cover_grid(m).points) {
    CHECK(std::abs(lhs(p) - (2.0 * fx(p) - 0.5 * gx(p))) < 1e-9);
  }

  // The lift of X.g is invariant: both cover points project to the same chart value.
  std::mt19937_64 rng(23);
  for (int i = 0; i < 30; ++i) {
    CoverPoint p;
    p.z = {unit_uniform(rng()), -unit_uniform(rng())};
    p.t = unit_uniform(rng()) - 0.5;
    CHECK(std::abs(fx.lifted(gamma(p, m), m) - fx.lifted(p, m)) < 1e-10);
  }
}

TEST_CASE("mean over V") {
  HopfModel m;
  CHECK(std::abs(mean_V([](const TransversalPoint&) { return Complex{2.5, 1.0}; }, m) -
                 Complex{2.5, 1.0}) < 1e-13);
  CHECK(std::abs(mean_V([](const TransversalPoint& v) { return Complex{v.u[0], 0.0}; }, m)) <
        1e-10);
  CHECK(std::abs(mean_V(
            [](const TransversalPoint& v) {
              return Complex{std::cos(2.0 * std::numbers::pi * v.theta), 0.0};
            },
            m)) < 1e-10);
  // Second moment of a coordinate over S^{n-1} is 1/n.
  for (int n : {2, 3, 4}) {
    HopfModel mn;
    mn.n = n;
    CHECK(mean_V([](const TransversalPoint& v) { return Complex{v.u[0] * v.u[0], 0.0}; }, mn)
              .real() == doctest::Approx(1.0 / n).epsilon(1e-12));
  }
}

TEST_CASE("oscillation is the bounding-box diagonal") {
  const std::vector<Complex> s{{0.0, 0.0}, {3.0, 0.0}, {1.0, 4.0}};
  CHECK(oscillation(s) == doctest::Approx(5.0));
}
