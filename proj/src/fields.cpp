#include "hopf/fields.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hopf/errors.hpp"

namespace hopf {

int order(const MultiIndex& s) {
  int total = 0;
  for (int x : s) total += x;
  return total;
}

namespace {

void compositions(int axis, int remaining, MultiIndex& s, std::vector<MultiIndex>& out) {
  const int n = static_cast<int>(s.size());
  if (axis == n - 1) {
    s[axis] = remaining;
    out.push_back(s);
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    s[axis] = v;
    compositions(axis + 1, remaining - v, s, out);
  }
}

}  // namespace

std::vector<MultiIndex> multi_indices(int n, int max_order) {
  std::vector<MultiIndex> out;
  MultiIndex s(n, 0);
  for (int total = 0; total <= max_order; ++total) compositions(0, total, s, out);
  return out;
}

// --- FieldM -----------------------------------------------------------------

FieldM FieldM::constant(Complex c) {
  return FieldM([c](const HopfPoint&) { return c; });
}

FieldM operator+(const FieldM& a, const FieldM& b) {
  return FieldM([a, b](const HopfPoint& q) { return a(q) + b(q); });
}

FieldM operator-(const FieldM& a, const FieldM& b) {
  return FieldM([a, b](const HopfPoint& q) { return a(q) - b(q); });
}

FieldM operator*(Complex s, const FieldM& a) {
  return FieldM([s, a](const HopfPoint& q) { return s * a(q); });
}

FieldM operator*(const FieldM& a, const FieldM& b) {
  return FieldM([a, b](const HopfPoint& q) { return a(q) * b(q); });
}

// --- Euclidean fields -----------------------------------------------------------

namespace {

EuclideanField::DerivativeEvaluator combine_derivatives(const EuclideanField& a,
                                                         const EuclideanField& b, Complex sa,
                                                         Complex sb) {
  if (!a.has_analytic_derivatives() || !b.has_analytic_derivatives()) return {};
  auto da = a.analytic_derivative();
  auto db = b.analytic_derivative();
  return [da, db, sa, sb](std::span<const double> z, const MultiIndex& s) {
    return sa * da(z, s) + sb * db(z, s);
  };
}

}  // namespace

EuclideanField operator-(const EuclideanField& a, const EuclideanField& b) {
  return EuclideanField([a, b](std::span<const double> z) { return a(z) - b(z); },
                        combine_derivatives(a, b, 1.0, -1.0),
                        a.smooth_at_origin() && b.smooth_at_origin());
}

EuclideanField operator+(const EuclideanField& a, const EuclideanField& b) {
  return EuclideanField([a, b](std::span<const double> z) { return a(z) + b(z); },
                        combine_derivatives(a, b, 1.0, 1.0),
                        a.smooth_at_origin() && b.smooth_at_origin());
}

EuclideanField operator*(Complex s, const EuclideanField& a) {
  EuclideanField::DerivativeEvaluator d;
  if (a.has_analytic_derivatives()) {
    auto da = a.analytic_derivative();
    d = [da, s](std::span<const double> z, const MultiIndex& idx) { return s * da(z, idx); };
  }
  return EuclideanField([a, s](std::span<const double> z) { return s * a(z); }, d,
                        a.smooth_at_origin());
}

FieldE::FieldE(const EuclideanField& f) : EuclideanField(f) {
  if (!f.smooth_at_origin()) throw ModelError("FieldE: field is not smooth through the origin");
}

// --- finite differences --------------------------------------------------------

std::vector<double> central_fd_weights(int derivative_order, int accuracy_order) {
  const int points = 2 * ((derivative_order + 1) / 2) - 1 + accuracy_order;
  const int half = (points - 1) / 2;
  std::vector<double> x(points);
  for (int i = 0; i < points; ++i) x[i] = i - half;
  // Fornberg's recursion for weights at x0 = 0.
  const int mmax = derivative_order;
  std::vector<std::vector<double>> c(points, std::vector<double>(mmax + 1, 0.0));
  double c1 = 1.0;
  double c4 = x[0];
  c[0][0] = 1.0;
  for (int i = 1; i < points; ++i) {
    const int mn = std::min(i, mmax);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = x[i];
    for (int j = 0; j < i; ++j) {
      const double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(points);
  for (int i = 0; i < points; ++i) w[i] = c[i][mmax];
  return w;
}

namespace {

struct AxisStencil {
  int axis;
  double h;
  std::vector<double> weights;
};

// Applies the per-axis stencils in turn; the caller divides by prod h^s_i.
Complex iterated_difference(const EuclideanField& f, std::span<const AxisStencil> stencils,
                            Vec& z) {
  if (stencils.empty()) return f(z);
  const AxisStencil& st = stencils.front();
  const int half = static_cast<int>(st.weights.size() - 1) / 2;
  const double z0 = z[st.axis];
  Complex acc{0.0, 0.0};
  for (int i = -half; i <= half; ++i) {
    const double w = st.weights[i + half];
    if (w == 0.0) continue;
    z[st.axis] = z0 + i * st.h;
    acc += w * iterated_difference(f, stencils.subspan(1), z);
  }
  z[st.axis] = z0;
  return acc;
}

}  // namespace

Complex derivative(const EuclideanField& f, const MultiIndex& s, std::span<const double> z,
                   const HopfModel& m) {
  const int total = order(s);
  if (total > kMaxDerivativeOrder) {
    throw DerivativeOrderError("derivative: order " + std::to_string(total) +
                               " exceeds supported order " + std::to_string(kMaxDerivativeOrder));
  }
  if (f.has_analytic_derivatives()) return f.analytic_derivative()(z, s);
  if (total == 0) return f(z);
  const double znorm = norm(z);
  const double scale = f.smooth_at_origin() ? std::max(znorm, 1.0) : znorm;
  if (scale == 0.0) throw ModelError("derivative: punctured field evaluated at the origin");
  const double eps = std::numeric_limits<double>::epsilon();
  std::vector<AxisStencil> stencils;
  double norm_factor = 1.0;
  for (std::size_t axis = 0; axis < s.size(); ++axis) {
    if (s[axis] == 0) continue;
    const double h = scale * std::pow(eps, 1.0 / (s[axis] + m.fd_order));
    stencils.push_back({static_cast<int>(axis), h, central_fd_weights(s[axis], m.fd_order)});
    norm_factor *= std::pow(h, s[axis]);
  }
  Vec work(z.begin(), z.end());
  const Complex raw = iterated_difference(f, stencils, work);
  return raw / norm_factor;
}

// --- seminorms --------------------------------------------------------------------

std::vector<Vec> annulus_grid(int k, const HopfModel& m) {
  const SphereGrid dirs = cover_sphere(m.n, m.grid.sphere_pts);
  std::vector<Vec> pts;
  if (k == 0) {
    for (const Vec& u : dirs.points) pts.push_back(u);
    return pts;
  }
  const int layers = 2 * k * m.grid.radial_layers + 1;
  for (int i = 0; i < layers; ++i) {
    const double expo = k - 2.0 * k * i / (layers - 1);
    const double r = std::pow(m.lambda, expo);
    for (const Vec& u : dirs.points) {
      Vec z;
      for (double x : u) z.push_back(r * x);
      pts.push_back(z);
    }
  }
  return pts;
}

double seminorm(const EuclideanField& f, int k, int r, const HopfModel& m) {
  const std::vector<MultiIndex> idx = multi_indices(m.n, r);
  std::vector<double> sups(idx.size(), 0.0);
  for (const Vec& z : annulus_grid(k, m)) {
    for (std::size_t j = 0; j < idx.size(); ++j) {
      sups[j] = std::max(sups[j], std::abs(derivative(f, idx[j], z, m)));
    }
  }
  double total = 0.0;
  for (double s : sups) total += s;
  return total;
}

// --- the flow's vector field -----------------------------------------------------------

FieldM apply_X(const FieldM& g, const HopfModel& m) {
  const std::vector<double> weights = central_fd_weights(1, m.fd_order);
  return FieldM([g, m, weights](const HopfPoint& q) {
    CoverPoint p = lift(q, m);
    const double a = speed(p, m);
    const double h = std::max(1e-4, 1e-3 * a);
    const int half = static_cast<int>(weights.size() - 1) / 2;
    const double t0 = p.t;
    Complex acc{0.0, 0.0};
    for (int i = -half; i <= half; ++i) {
      if (weights[i + half] == 0.0) continue;
      p.t = t0 + i * h;
      acc += weights[i + half] * g.lifted(p, m);
    }
    return a * acc / h;
  });
}

Complex mean_V(const FieldV& h, const HopfModel& m) {
  const VGrid grid = v_quadrature_grid(m);
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < grid.points.size(); ++i) acc += grid.weights[i] * h(grid.points[i]);
  return acc;
}

double oscillation(std::span<const Complex> samples) {
  if (samples.empty()) return 0.0;
  double re_lo = samples[0].real(), re_hi = re_lo;
  double im_lo = samples[0].imag(), im_hi = im_lo;
  for (const Complex& c : samples) {
    re_lo = std::min(re_lo, c.real());
    re_hi = std::max(re_hi, c.real());
    im_lo = std::min(im_lo, c.imag());
    im_hi = std::max(im_hi, c.imag());
  }
  return std::hypot(re_hi - re_lo, im_hi - im_lo);
}

}  // namespace hopf
