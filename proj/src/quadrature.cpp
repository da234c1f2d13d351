#include "hopf/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "hopf/errors.hpp"

namespace hopf {
namespace {

// Kronrod 15-point abscissae (positive half, descending) and weights; every
// odd index is also a 7-point Gauss node.
constexpr std::array<double, 8> kXk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  Complex value;
  double error;
};

Panel gk15(const std::function<Complex(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const Complex fc = f(c);
  Complex kron = fc * kWk[7];
  Complex gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXk[j];
    const Complex pair = f(c - dx) + f(c + dx);
    kron += kWk[j] * pair;
    if (j % 2 == 1) gauss += kWg[j / 2] * pair;
  }
  kron *= h;
  gauss *= h;
  return {a, b, kron, std::abs(kron - gauss)};
}

}  // namespace

QuadResult quad_segment_detailed(const std::function<Complex(double)>& integrand, double a,
                                 double b, double tol) {
  if (a == b) return {Complex{0.0, 0.0}, 0.0, 0};
  std::vector<Panel> panels{gk15(integrand, a, b)};
  double total_err = panels.front().error;
  while (total_err > tol) {
    if (static_cast<int>(panels.size()) >= kMaxQuadIntervals) {
      throw QuadratureError("quad_segment: subdivision limit exceeded on [" + std::to_string(a) +
                            ", " + std::to_string(b) + "], error estimate " +
                            std::to_string(total_err));
    }
    std::size_t worst = 0;
    for (std::size_t i = 1; i < panels.size(); ++i) {
      if (panels[i].error > panels[worst].error) worst = i;
    }
    const Panel p = panels[worst];
    const double mid = 0.5 * (p.a + p.b);
    if (!(mid > std::min(p.a, p.b) && mid < std::max(p.a, p.b))) {
      throw QuadratureError("quad_segment: interval collapsed to machine precision");
    }
    panels[worst] = gk15(integrand, p.a, mid);
    panels.push_back(gk15(integrand, mid, p.b));
    total_err = 0.0;
    for (const Panel& q : panels) total_err += q.error;
    if (!std::isfinite(total_err)) throw QuadratureError("quad_segment: non-finite integrand");
  }
  // Summation in interval order keeps the result independent of split order.
  std::sort(panels.begin(), panels.end(),
            [](const Panel& l, const Panel& r) { return l.a < r.a; });
  Complex sum{0.0, 0.0};
  for (const Panel& q : panels) sum += q.value;
  return {sum, total_err, static_cast<int>(panels.size())};
}

Complex quad_segment(const std::function<Complex(double)>& integrand, double a, double b,
                     double tol) {
  return quad_segment_detailed(integrand, a, b, tol).value;
}

GaussRule gauss_legendre(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

}  // namespace hopf
