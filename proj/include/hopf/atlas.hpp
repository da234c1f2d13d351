#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hopf/fields.hpp"

namespace hopf {

// Uniform double in [0, 1) from the raw 64-bit stream; identical on every platform.
double unit_uniform(std::uint64_t bits);

// Seeded random trigonometric field on M: low-degree polynomials in w times
// Fourier modes in theta.
FieldM random_field_m(std::uint64_t seed, const HopfModel& m);
// Seeded random trigonometric density on V, bounded away from nothing in sign.
FieldV random_field_v(std::uint64_t seed, const HopfModel& m);
// Seeded random point of V.
TransversalPoint random_point_v(std::uint64_t seed, const HopfModel& m);

/// Field expressions over the built-in atlas:
///   const1, zero, const:<v>, w<i> (1-based, i <= n+1), t_over_r (= w_{n+1}),
///   cos_theta, sin_theta, cos:<k>, sin:<k>, random:<seed>,
///   coboundary:<factor> (X applied to the factor),
/// combined with +, -, *, unary minus, numbers and parentheses.
/// Throws ConfigError on malformed input.
FieldM parse_field(const std::string& expr, const HopfModel& m);

struct NamedField {
  std::string name;
  FieldM field;
};

// Fixed list of atlas fields covering every primitive kind.
std::vector<NamedField> builtin_atlas(const HopfModel& m);

struct NamedFieldE {
  std::string name;
  FieldE field;
};

// Atlas of fields on E with g(0) = 0 for the contraction solver.
std::vector<NamedFieldE> contraction_atlas(const HopfModel& m);

}  // namespace hopf
