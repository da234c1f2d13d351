#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hopf/obstruction.hpp"

namespace hopf {

/// Finite-order distribution on V: a density paired against the normalized
/// product measure (v_quadrature_grid) plus finitely many weighted atoms.
struct DistributionV {
  std::optional<FieldV> density;
  std::vector<std::pair<TransversalPoint, Complex>> atoms;

  // Throws ModelError when empty or when a weight is not finite.
  void validate() const;
  Complex pair(const FieldV& h, const HopfModel& m) const;
  // Same pairing with h already sampled on v_quadrature_grid(m).
  Complex pair(const FieldV& h, std::span<const Complex> grid_samples, const HopfModel& m) const;
};

DistributionV uniform_distribution();
DistributionV dirac(const TransversalPoint& v);

/// X-invariant distribution on M. Pairings are taken through the obstruction
/// class, so a class computed once can be paired against many distributions.
class InvariantDistributionM {
 public:
  using ClassPairing = std::function<Complex(const ObstructionClass&)>;
  using FieldPairing = std::function<Complex(const FieldM&)>;

  InvariantDistributionM(std::string name, ClassPairing on_class, FieldPairing on_field)
      : name_(std::move(name)), on_class_(std::move(on_class)), on_field_(std::move(on_field)) {}

  const std::string& name() const { return name_; }
  Complex pairing(const FieldM& phi) const { return on_field_(phi); }
  Complex pairing(const ObstructionClass& cls) const { return on_class_(cls); }

 private:
  std::string name_;
  ClassPairing on_class_;
  FieldPairing on_field_;
};

// <T, h + c 1> with (c, h) the obstruction class of the argument, h of mean zero.
InvariantDistributionM lift_distribution(const DistributionV& t, const HopfModel& m,
                                         std::string name = "lift");

// Closed-orbit average I_+/- / ln(1/lambda).
InvariantDistributionM orbit_distribution(Orbit o, const HopfModel& m);

// <X.T, phi> = -<T, X.phi>.
Complex xstar(const InvariantDistributionM& t, const FieldM& phi, const HopfModel& m);

}  // namespace hopf
