#include "hopf/geometry.hpp"

#include <cmath>
#include <string>

#include <boost/numeric/odeint.hpp>

#include "hopf/errors.hpp"

namespace hopf {

double norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double frac(double x) {
  double f = x - std::floor(x);
  return f >= 1.0 ? 0.0 : f;
}

double circle_distance(double a, double b) {
  double d = frac(a - b);
  return std::min(d, 1.0 - d);
}

double CoverPoint::z_norm() const { return norm(z); }

double CoverPoint::radius() const { return std::hypot(z_norm(), t); }

CoverPoint gamma(const CoverPoint& p, const HopfModel& m) {
  CoverPoint q = p;
  for (double& x : q.z) x *= m.lambda;
  q.t *= m.lambda;
  return q;
}

CoverPoint gamma_inv(const CoverPoint& p, const HopfModel& m) {
  CoverPoint q = p;
  for (double& x : q.z) x /= m.lambda;
  q.t /= m.lambda;
  return q;
}

CoverPoint gamma_pow(const CoverPoint& p, int k, const HopfModel& m) {
  CoverPoint q = p;
  for (int i = 0; i < k; ++i) q = gamma(q, m);
  for (int i = 0; i > k; --i) q = gamma_inv(q, m);
  return q;
}

HopfPoint project(const CoverPoint& p, const HopfModel& m) {
  const double r = p.radius();
  HopfPoint q;
  for (double x : p.z) q.w.push_back(x / r);
  q.w.push_back(p.t / r);
  q.theta = frac(std::log(r) / m.log_lambda());
  return q;
}

CoverPoint lift(const HopfPoint& q, const HopfModel& m) {
  const double r = std::pow(m.lambda, q.theta);
  CoverPoint p;
  for (std::size_t i = 0; i + 1 < q.w.size(); ++i) p.z.push_back(r * q.w[i]);
  p.t = r * q.w.back();
  return p;
}

double speed(const CoverPoint& p, const HopfModel&) { return p.radius(); }

double metric(const CoverPoint& p, std::span<const double> u, std::span<const double> v,
              const HopfModel&) {
  double dot = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) dot += u[i] * v[i];
  const double r = p.radius();
  return dot / (r * r);
}

CoverPoint flow(const CoverPoint& p, double s, const HopfModel& m) {
  CoverPoint q = p;
  if (s == 0.0) return q;
  const double rho = p.z_norm();
  if (rho == 0.0) {
    q.t = p.t * std::exp(s * (p.t > 0.0 ? 1.0 : -1.0));
    return q;
  }
  namespace odeint = boost::numeric::odeint;
  using State = double;
  auto rhs = [rho](const State& t, State& dt, double) { dt = std::hypot(rho, t); };
  State t = p.t;
  auto stepper = odeint::make_controlled(m.flow_rtol * 1e-2, m.flow_rtol,
                                         odeint::runge_kutta_dopri5<State>());
  const double h0 = std::copysign(std::min(1e-3, std::abs(s)), s);
  try {
    odeint::integrate_adaptive(stepper, rhs, t, 0.0, s, h0);
  } catch (const odeint::odeint_error& err) {
    throw IntegratorError(std::string("flow: ") + err.what());
  }
  if (!std::isfinite(t)) throw IntegratorError("flow: non-finite state");
  q.t = t;
  return q;
}

CoverPoint transversal_embed(const TransversalPoint& v, const HopfModel& m) {
  const double r = std::pow(m.lambda, v.theta);
  CoverPoint p;
  for (double x : v.u) p.z.push_back(r * x);
  p.t = 0.0;
  return p;
}

TransversalPoint transversal_project(std::span<const double> z, const HopfModel& m) {
  const double r = norm(z);
  TransversalPoint v;
  for (double x : z) v.u.push_back(x / r);
  v.theta = frac(std::log(r) / m.log_lambda());
  return v;
}

}  // namespace hopf
