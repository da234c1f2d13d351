#include "hopf/distributions.hpp"

#include <cmath>

#include "hopf/errors.hpp"

namespace hopf {

void DistributionV::validate() const {
  if (!density && atoms.empty()) throw ModelError("DistributionV: no density and no atoms");
  for (const auto& [v, w] : atoms) {
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
      throw ModelError("DistributionV: atom weight is not finite");
    }
  }
}

Complex DistributionV::pair(const FieldV& h, const HopfModel& m) const {
  std::vector<Complex> samples;
  if (density) {
    for (const TransversalPoint& v : v_quadrature_grid(m).points) samples.push_back(h(v));
  }
  return pair(h, samples, m);
}

Complex DistributionV::pair(const FieldV& h, std::span<const Complex> grid_samples,
                            const HopfModel& m) const {
  Complex acc{0.0, 0.0};
  if (density) {
    const VGrid grid = v_quadrature_grid(m);
    if (grid_samples.size() != grid.points.size()) {
      throw ModelError("DistributionV: samples do not match the V grid");
    }
    for (std::size_t i = 0; i < grid.points.size(); ++i) {
      acc += grid.weights[i] * (*density)(grid.points[i]) * grid_samples[i];
    }
  }
  for (const auto& [v, w] : atoms) acc += w * h(v);
  return acc;
}

DistributionV uniform_distribution() {
  DistributionV t;
  t.density = [](const TransversalPoint&) { return Complex{1.0, 0.0}; };
  return t;
}

DistributionV dirac(const TransversalPoint& v) {
  DistributionV t;
  t.atoms.emplace_back(v, Complex{1.0, 0.0});
  return t;
}

InvariantDistributionM lift_distribution(const DistributionV& t, const HopfModel& m,
                                         std::string name) {
  t.validate();
  // <T, 1> does not depend on the field.
  const Complex mass = t.pair([](const TransversalPoint&) { return Complex{1.0, 0.0}; }, m);
  auto on_class = [t, m, mass](const ObstructionClass& cls) {
    return t.pair(cls.h, cls.h_samples, m) + cls.c * mass;
  };
  auto on_field = [on_class, m](const FieldM& phi) { return on_class(obstruction(phi, m)); };
  return InvariantDistributionM(std::move(name), on_class, on_field);
}

InvariantDistributionM orbit_distribution(Orbit o, const HopfModel& m) {
  const double period = m.period();
  auto on_class = [o, period](const ObstructionClass& cls) {
    return (o == Orbit::plus ? cls.diagnostics.i_plus : cls.diagnostics.i_minus) / period;
  };
  auto on_field = [o, m, period](const FieldM& phi) { return orbit_integral(phi, o, m) / period; };
  return InvariantDistributionM(o == Orbit::plus ? "orbit_plus" : "orbit_minus", on_class,
                                on_field);
}

Complex xstar(const InvariantDistributionM& t, const FieldM& phi, const HopfModel& m) {
  return -t.pairing(apply_X(phi, m));
}

}  // namespace hopf
