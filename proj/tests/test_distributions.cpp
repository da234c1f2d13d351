#include <cmath>

#include <doctest.h>

#include "hopf/atlas.hpp"
#include "hopf/distributions.hpp"
#include "hopf/errors.hpp"
#include "oracle_values.hpp"

using namespace hopf;

TEST_CASE("lifted distributions pair through the obstruction class") {
  HopfModel m;
  const InvariantDistributionM uniform = lift_distribution(uniform_distribution(), m);
  TransversalPoint v0;
  v0.u = {0.0, 1.0};
  v0.theta = 0.25;
  const InvariantDistributionM point = lift_distribution(dirac(v0), m);
  const FieldM one = FieldM::constant(1.0);
  CHECK(std::abs(uniform.pairing(one) - oracle::kConstCHalf) < 1e-8);
  CHECK(std::abs(point.pairing(one) - oracle::kConstCHalf) < 1e-8);

  const FieldM f = random_field_m(12, m);
  const FieldM xf = apply_X(f, m);
  CHECK(std::abs(uniform.pairing(xf)) < 1e-6);
  CHECK(std::abs(xstar(point, f, m)) < 1e-6);
}

TEST_CASE("atoms add") {
  HopfModel m;
  const TransversalPoint a = random_point_v(1, m);
  const TransversalPoint b = random_point_v(2, m);
  DistributionV both;
  both.atoms = {{a, Complex{1.0, 0.0}}, {b, Complex{0.0, 2.0}}};
  const FieldV h = random_field_v(3, m);
  CHECK(std::abs(both.pair(h, m) - (dirac(a).pair(h, m) + Complex{0.0, 2.0} * dirac(b).pair(h, m))) <
        1e-14);
}

TEST_CASE("sampled and evaluated density pairings agree") {
  HopfModel m;
  DistributionV t;
  t.density = random_field_v(4, m);
  const FieldV h = random_field_v(5, m);
  std::vector<Complex> samples;
  for (const TransversalPoint& v : v_quadrature_grid(m).points) samples.push_back(h(v));
  CHECK(std::abs(t.pair(h, m) - t.pair(h, samples, m)) < 1e-14);
  CHECK_THROWS_AS(t.pair(h, std::vector<Complex>(3), m), ModelError);
}

TEST_CASE("invalid distributions are rejected") {
  HopfModel m;
  CHECK_THROWS_AS(lift_distribution(DistributionV{}, m), ModelError);
  DistributionV bad = dirac(random_point_v(1, m));
  bad.atoms[0].second = Complex{NAN, 0.0};
  CHECK_THROWS_AS(bad.validate(), ModelError);
}

TEST_CASE("orbit distributions") {
  HopfModel m;
  const InvariantDistributionM plus = orbit_distribution(Orbit::plus, m);
  const InvariantDistributionM minus = orbit_distribution(Orbit::minus, m);
  const FieldM one = FieldM::constant(1.0);
  CHECK(std::abs(plus.pairing(one) - 1.0) < 1e-10);
  CHECK(std::abs(minus.pairing(one) - 1.0) < 1e-10);
  const FieldM tr = parse_field("t_over_r", m);
  CHECK(std::abs(plus.pairing(tr) - 1.0) < 1e-10);
  CHECK(std::abs(minus.pairing(tr) + 1.0) < 1e-10);
  CHECK(std::abs(xstar(plus, one, m)) < 1e-12);

  const FieldM f = random_field_m(13, m);
  CHECK(std::abs(plus.pairing(apply_X(f, m))) < 1e-8);
  CHECK(std::abs(minus.pairing(apply_X(f, m))) < 1e-8);

  // The class-level pairing reads the same orbit integrals.
  const ObstructionClass cls = obstruction(tr, m);
  CHECK(std::abs(plus.pairing(cls) - plus.pairing(tr)) < 1e-12);
}

TEST_CASE("xstar is bilinear") {
  HopfModel m;
  const FieldM f = random_field_m(14, m);
  const FieldM g = random_field_m(15, m);
  const InvariantDistributionM plus = orbit_distribution(Orbit::plus, m);
  const Complex a{0.5, 0.0}, b{-2.0, 0.0};
  CHECK(std::abs(xstar(plus, a * f + b * g, m) - (a * xstar(plus, f, m) + b * xstar(plus, g, m))) <
        1e-12);
}

TEST_CASE("a nontrivial pairing rules out solvability") {
  HopfModel m;
  const std::vector<InvariantDistributionM> dists{
      lift_distribution(uniform_distribution(), m), orbit_distribution(Orbit::plus, m),
      orbit_distribution(Orbit::minus, m)};
  for (const char* name : {"const1", "t_over_r", "random:3", "w1*cos_theta + 0.2"}) {
    const FieldM g = parse_field(name, m);
    const ObstructionClass cls = obstruction(g, m);
    bool detected = false;
    for (const auto& t : dists) detected = detected || std::abs(t.pairing(cls)) > 1e-3;
    if (detected) CHECK(!solve_cohomological_equation(g, m).solvable());
  }
}

TEST_CASE("orbit averages are not captured by density lifts") {
  // t/r has (c, h) = 0, so every lift pairs to zero with it, while the orbit
  // averages see +1 and -1.
  HopfModel m;
  const FieldM tr = parse_field("t_over_r", m);
  const ObstructionClass cls = obstruction(tr, m);
  DistributionV t;
  t.density = random_field_v(6, m);
  CHECK(std::abs(lift_distribution(t, m).pairing(cls)) < 1e-10);
  CHECK(std::abs(lift_distribution(uniform_distribution(), m).pairing(cls)) < 1e-10);
  CHECK(std::abs(orbit_distribution(Orbit::plus, m).pairing(cls) - 1.0) < 1e-10);
}
