#include "hopf/obstruction.hpp"

#include <cmath>
#include <limits>

#include "hopf/errors.hpp"
#include "hopf/quadrature.hpp"

namespace hopf {
namespace {

CoverPoint at(std::span<const double> z, double t) {
  CoverPoint p;
  p.z.assign(z.begin(), z.end());
  p.t = t;
  return p;
}

Complex leaf_integral_impl(const FieldM& g, const HopfModel& m, std::span<const double> z,
                           double t0, double t1) {
  if (t0 == t1) return {0.0, 0.0};
  const double rho = norm(z);
  CoverPoint p = at(z, 0.0);
  if (rho > 0.0) {
    // ds / a = d tau under s = rho sinh(tau); the integrand becomes g~ itself.
    auto integrand = [&](double tau) {
      p.t = rho * std::sinh(tau);
      return g.lifted(p, m);
    };
    return quad_segment(integrand, std::asinh(t0 / rho), std::asinh(t1 / rho), m.quad_tol);
  }
  if (t0 * t1 <= 0.0) {
    throw ModelError("leaf_integral: the half-line leaves at z = 0 do not cross t = 0");
  }
  auto integrand = [&](double s) {
    p.t = s;
    return g.lifted(p, m) / std::abs(s);
  };
  return quad_segment(integrand, t0, t1, m.quad_tol);
}

Complex window_defect(const FieldM& g, const HopfModel& m, std::span<const double> z) {
  const double top = 1.0 / m.lambda;
  return leaf_integral_impl(g, m, z, 1.0, top) + leaf_integral_impl(g, m, z, -top, -1.0);
}

}  // namespace

// --- free operations --------------------------------------------------------------

FieldEStar coboundary_gap(const FieldM& g, const HopfModel& m) {
  return FieldEStar([g, m](std::span<const double> z) {
    return leaf_integral_impl(g, m, z, -1.0, 1.0);
  });
}

InvarianceDefect invariance_defect(const FieldEStar&, const FieldM& g, const HopfModel& m) {
  FieldE e([g, m](std::span<const double> z) { return window_defect(g, m, z); });
  const Vec origin(m.n, 0.0);
  return {e, e(origin)};
}

Complex orbit_integral(const FieldM& g, Orbit o, const HopfModel& m) {
  const double sign = o == Orbit::plus ? 1.0 : -1.0;
  CoverPoint p;
  p.z.assign(m.n, 0.0);
  auto integrand = [&](double x) {
    p.t = sign * std::exp(x);
    return g.lifted(p, m);
  };
  return quad_segment(integrand, 0.0, m.period(), m.quad_tol);
}

// --- pipeline -----------------------------------------------------------------------

ObstructionPipeline::ObstructionPipeline(FieldM g, HopfModel m) : g_(std::move(g)), m_(m) {
  m_.validate();
  const Vec origin(m_.n, 0.0);
  c_ = window_defect(g_, m_, origin);
  const Complex c = c_;
  FieldE rhs([g = g_, m = m_, c](std::span<const double> z) { return c - window_defect(g, m, z); });
  correction_ = solve_contraction(rhs, 1.0, m_.series_tol, m_);

  grid_ = v_quadrature_grid(m_);
  h0_samples_.reserve(grid_.points.size());
  h_mean_ = {0.0, 0.0};
  for (std::size_t i = 0; i < grid_.points.size(); ++i) {
    h0_samples_.push_back(h0(grid_.points[i]));
    h_mean_ += grid_.weights[i] * h0_samples_.back();
  }
  h_osc_ = oscillation(h0_samples_);
  i_plus_ = hopf::orbit_integral(g_, Orbit::plus, m_);
  i_minus_ = hopf::orbit_integral(g_, Orbit::minus, m_);
}

Complex ObstructionPipeline::leaf_integral(std::span<const double> z, double t0, double t1) const {
  return leaf_integral_impl(g_, m_, z, t0, t1);
}

Complex ObstructionPipeline::primitive_plus(const CoverPoint& p) const {
  return leaf_integral(p.z, 1.0, p.t);
}

Complex ObstructionPipeline::primitive_minus(const CoverPoint& p) const {
  return leaf_integral(p.z, -1.0, p.t);
}

Complex ObstructionPipeline::gap(std::span<const double> z) const {
  return leaf_integral(z, -1.0, 1.0);
}

Complex ObstructionPipeline::defect(std::span<const double> z) const {
  return window_defect(g_, m_, z);
}

Complex ObstructionPipeline::orbit_integral(Orbit o) const {
  return o == Orbit::plus ? i_plus_ : i_minus_;
}

Complex ObstructionPipeline::invariant_gap(std::span<const double> z) const {
  const double ell = std::log(norm(z)) / -m_.log_lambda();
  return gap(z) - correction_.field(z) + c_ * ell;
}

Complex ObstructionPipeline::h0(const TransversalPoint& v) const {
  return invariant_gap(transversal_embed(v, m_).z);
}

Complex ObstructionPipeline::smooth_gap(std::span<const double> z) const {
  return correction_.field(z) + h_mean_;
}

Complex ObstructionPipeline::global_primitive(const CoverPoint& p) const {
  // U_- holds every point with t < 0 and every point off a narrow cone around
  // the positive t-axis; the rest lies in U_+.
  constexpr double kConeSlope = 0.5;
  if (p.t < 0.0 || p.z_norm() >= kConeSlope * p.radius()) return primitive_minus(p);
  return primitive_plus(p) + smooth_gap(p.z);
}

Complex ObstructionPipeline::descent_defect(std::span<const double> z) const {
  const CoverPoint p = at(z, -1.0);
  return global_primitive(gamma(p, m_)) - global_primitive(p);
}

ObstructionClass ObstructionPipeline::make_class(
    std::shared_ptr<const ObstructionPipeline> self) const {
  ObstructionClass cls;
  cls.c = c_;
  cls.h_constant = h_mean_;
  cls.h_oscillation = h_osc_;
  cls.grid = grid_;
  cls.h_samples.reserve(h0_samples_.size());
  for (const Complex& x : h0_samples_) cls.h_samples.push_back(x - h_mean_);
  cls.h = [self](const TransversalPoint& v) { return self->h0(v) - self->h_mean(); };

  ObstructionDiagnostics& diag = cls.diagnostics;
  diag.quad_tol = m_.quad_tol;
  diag.series_tol = m_.series_tol;
  diag.solve_tol = m_.solve_tol;
  diag.v_grid_points = static_cast<int>(grid_.points.size());
  diag.contraction_terms = correction_.terms;
  diag.contraction_lipschitz = correction_.lipschitz;
  diag.i_plus = i_plus_;
  diag.i_minus = i_minus_;

  if (std::abs(c_) <= m_.solve_tol && h_osc_ <= m_.solve_tol) {
    const Vec origin(m_.n, 0.0);
    cls.d = descent_defect(origin);
    CoverPoint top = at(origin, 1.0);
    diag.d_plus = global_primitive(gamma(top, m_)) - global_primitive(top);
  }
  cls.pipeline = std::move(self);
  return cls;
}

bool ObstructionClass::vanishes(double tol) const {
  return std::abs(c) <= tol && h_oscillation <= tol && d.has_value() && std::abs(*d) <= tol;
}

ObstructionClass obstruction(const FieldM& g, const HopfModel& m) {
  auto pipe = std::make_shared<const ObstructionPipeline>(g, m);
  return pipe->make_class(pipe);
}

// --- solving -------------------------------------------------------------------------

double verify_solution(const FieldM& f, const FieldM& g, const HopfModel& m) {
  const FieldM xf = apply_X(f, m);
  double sup = 0.0;
  for (const HopfPoint& q : m_cover_grid(m).points) sup = std::max(sup, std::abs(xf(q) - g(q)));
  return sup;
}

SolveReport solve_cohomological_equation(const FieldM& g, const HopfModel& m) {
  auto pipe = std::make_shared<const ObstructionPipeline>(g, m);
  SolveReport report;
  report.obstruction = pipe->make_class(pipe);
  report.residual = std::numeric_limits<double>::quiet_NaN();
  if (!report.obstruction.vanishes(m.solve_tol)) return report;

  const Complex d = *report.obstruction.d;
  FieldE basic([pipe, d](std::span<const double> z) { return pipe->descent_defect(z) - d; });
  const SeriesSolution w = solve_contraction(basic, 1.0, m.series_tol, m);
  report.descent_terms = w.terms;

  const FieldE wf = w.field;
  FieldM raw([pipe, wf, m](const HopfPoint& q) {
    const CoverPoint p = lift(q, m);
    return pipe->global_primitive(p) + wf(p.z);
  });
  const MGrid grid = m_quadrature_grid(m);
  Complex mean{0.0, 0.0};
  for (std::size_t i = 0; i < grid.points.size(); ++i) mean += grid.weights[i] * raw(grid.points[i]);
  report.normalization = mean;
  report.solution = raw - FieldM::constant(mean);
  report.residual = verify_solution(*report.solution, g, m);
  return report;
}

}  // namespace hopf
