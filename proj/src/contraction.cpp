#include "hopf/contraction.hpp"

#include <array>
#include <cmath>
#include <string>

#include "hopf/errors.hpp"

namespace hopf {

FieldE partial_sum(const FieldE& g, int terms, const HopfModel& m) {
  const double lambda = m.lambda;
  return FieldE([g, terms, lambda](std::span<const double> z) {
    Vec y(z.begin(), z.end());
    Complex acc{0.0, 0.0};
    for (int k = 0; k < terms; ++k) {
      acc += g(y);
      for (double& x : y) x *= lambda;
    }
    return acc;
  });
}

namespace {

constexpr std::array<int, kMaxAmbient> kPrimes = {2, 3, 5, 7, 11, 13, 17, 19};

double radical_inverse(long index, int base) {
  double result = 0.0;
  double f = 1.0 / base;
  while (index > 0) {
    result += f * static_cast<double>(index % base);
    index /= base;
    f /= base;
  }
  return result;
}

}  // namespace

std::vector<Vec> halton_ball(int n, double radius, int count) {
  std::vector<Vec> pts;
  for (long i = 1; static_cast<int>(pts.size()) < count; ++i) {
    Vec y;
    double r2 = 0.0;
    for (int d = 0; d < n; ++d) {
      const double c = 2.0 * radical_inverse(i, kPrimes[d]) - 1.0;
      y.push_back(c);
      r2 += c * c;
    }
    if (r2 > 1.0 || r2 == 0.0) continue;
    for (double& x : y) x *= radius;
    pts.push_back(y);
  }
  return pts;
}

double estimate_lipschitz(const FieldE& g, double radius, const HopfModel& m, int samples) {
  const Vec origin(m.n, 0.0);
  const Complex g0 = g(origin);
  const std::vector<Vec> pts = halton_ball(m.n, radius, samples);
  double bound = 0.0;
  for (const Vec& y : pts) {
    const double ratio = std::abs(g(y) - g0) / norm(y);
    if (!std::isfinite(ratio)) throw LipschitzEstimateFailed("non-finite sample of g in the ball");
    bound = std::max(bound, ratio);
  }
  const std::vector<MultiIndex> firsts = [&] {
    std::vector<MultiIndex> out;
    for (const MultiIndex& s : multi_indices(m.n, 1)) {
      if (order(s) == 1) out.push_back(s);
    }
    return out;
  }();
  constexpr int kGradientPoints = 32;
  for (int i = -1; i < std::min(kGradientPoints, static_cast<int>(pts.size())); ++i) {
    const Vec& y = i < 0 ? origin : pts[i];
    double g2 = 0.0;
    for (const MultiIndex& s : firsts) g2 += std::norm(derivative(g, s, y, m));
    const double gn = std::sqrt(g2);
    if (!std::isfinite(gn)) throw LipschitzEstimateFailed("non-finite gradient of g in the ball");
    bound = std::max(bound, gn);
  }
  constexpr double kSafety = 1.25;
  return kSafety * bound;
}

SeriesSolution solve_contraction(const FieldE& g, double radius, double tol, const HopfModel& m) {
  const Complex g0 = gamma_class(g, m);
  if (std::abs(g0) > tol) {
    throw NecessaryConditionViolated("solve_contraction: |g(0)| = " + std::to_string(std::abs(g0)) +
                                     " exceeds tolerance " + std::to_string(tol));
  }
  const double L = estimate_lipschitz(g, radius, m);
  int terms = 1;
  if (L > 0.0) {
    const double target = tol * (1.0 - m.lambda) / (L * radius);
    if (target < 1.0) terms = std::max(1, static_cast<int>(std::ceil(std::log(target) / m.log_lambda())));
  }
  SeriesSolution sol;
  sol.field = partial_sum(g, terms, m);
  sol.terms = terms;
  sol.lipschitz = L;
  sol.radius = radius;
  sol.tail_bound = L * radius * std::pow(m.lambda, terms) / (1.0 - m.lambda);
  return sol;
}

Complex gamma_class(const FieldE& g, const HopfModel& m) {
  const Vec origin(m.n, 0.0);
  return g(origin);
}

FieldEStar log_cocycle(const HopfModel& m) {
  const double inv = 1.0 / -m.log_lambda();
  return FieldEStar([inv](std::span<const double> z) { return Complex{std::log(norm(z)) * inv, 0.0}; });
}

}  // namespace hopf
