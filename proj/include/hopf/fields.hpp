#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "hopf/geometry.hpp"
#include "hopf/grids.hpp"

namespace hopf {

using Complex = std::complex<double>;
using MultiIndex = SmallVec<int, kMaxAmbient>;

inline constexpr int kMaxDerivativeOrder = 4;

int order(const MultiIndex& s);
// All multi-indices in n variables with |s| <= max_order, graded then lexicographic.
std::vector<MultiIndex> multi_indices(int n, int max_order);

/// Smooth function on M = S^n x S^1. A leafwise 1-form g.chi is stored as its
/// coefficient g. The lift g o project is gamma-invariant by construction.
class FieldM {
 public:
  using Evaluator = std::function<Complex(const HopfPoint&)>;

  FieldM() = default;
  explicit FieldM(Evaluator eval) : eval_(std::move(eval)) {}

  static FieldM constant(Complex c);

  Complex operator()(const HopfPoint& q) const { return eval_(q); }
  Complex lifted(const CoverPoint& p, const HopfModel& m) const { return eval_(project(p, m)); }
  explicit operator bool() const { return static_cast<bool>(eval_); }

  friend FieldM operator+(const FieldM& a, const FieldM& b);
  friend FieldM operator-(const FieldM& a, const FieldM& b);
  friend FieldM operator*(Complex s, const FieldM& a);
  friend FieldM operator*(const FieldM& a, const FieldM& b);

 private:
  Evaluator eval_;
};

/// Black-box field on E = R^n or on E \ {0}, with optional analytic partials.
class EuclideanField {
 public:
  using Evaluator = std::function<Complex(std::span<const double>)>;
  using DerivativeEvaluator = std::function<Complex(std::span<const double>, const MultiIndex&)>;

  EuclideanField() = default;
  EuclideanField(Evaluator eval, DerivativeEvaluator deriv, bool smooth_at_origin)
      : eval_(std::move(eval)), deriv_(std::move(deriv)), smooth_at_origin_(smooth_at_origin) {}

  Complex operator()(std::span<const double> z) const { return eval_(z); }
  bool has_analytic_derivatives() const { return static_cast<bool>(deriv_); }
  const DerivativeEvaluator& analytic_derivative() const { return deriv_; }
  bool smooth_at_origin() const { return smooth_at_origin_; }

  friend EuclideanField operator-(const EuclideanField& a, const EuclideanField& b);
  friend EuclideanField operator+(const EuclideanField& a, const EuclideanField& b);
  friend EuclideanField operator*(Complex s, const EuclideanField& a);

 private:
  Evaluator eval_;
  DerivativeEvaluator deriv_;
  bool smooth_at_origin_ = true;
};

// Field on E, defined at z = 0.
class FieldE : public EuclideanField {
 public:
  FieldE() = default;
  explicit FieldE(Evaluator eval, DerivativeEvaluator deriv = {})
      : EuclideanField(std::move(eval), std::move(deriv), true) {}
  // Throws ModelError when f does not claim smoothness through 0.
  explicit FieldE(const EuclideanField& f);
};

// Field on E \ {0}; nothing is claimed at the origin.
class FieldEStar : public EuclideanField {
 public:
  FieldEStar() = default;
  explicit FieldEStar(Evaluator eval, DerivativeEvaluator deriv = {})
      : EuclideanField(std::move(eval), std::move(deriv), false) {}
  explicit FieldEStar(const EuclideanField& f)
      : EuclideanField(
            [f](std::span<const double> z) { return f(z); },
            f.has_analytic_derivatives() ? f.analytic_derivative() : DerivativeEvaluator{}, false) {}
};

// Field on V = S^{n-1} x S^1.
using FieldV = std::function<Complex(const TransversalPoint&)>;

// Central finite-difference weights (Fornberg) for the given derivative order
// and even accuracy order; offsets are -half..half.
std::vector<double> central_fd_weights(int derivative_order, int accuracy_order);

// Partial derivative D^s f(z). Uses the analytic derivative when the field has
// one, otherwise per-axis iterated central differences of order m.fd_order.
// Throws DerivativeOrderError when |s| > kMaxDerivativeOrder.
Complex derivative(const EuclideanField& f, const MultiIndex& s, std::span<const double> z,
                   const HopfModel& m);

// Seminorm rho_{k,r}(f) = sum_{|s|<=r} sup_{C_k} |D^s f| over the annulus
// C_k = {lambda^k <= |z| <= lambda^-k}. The sup runs over a fixed grid:
// cover_sphere(n, sphere_pts) directions x geometric radii with radial_layers
// points per factor lambda, both boundaries included.
double seminorm(const EuclideanField& f, int k, int r, const HopfModel& m);

// The annulus grid used by seminorm.
std::vector<Vec> annulus_grid(int k, const HopfModel& m);

// X.g = a d/dt (g o project), computed on the lift over the fundamental shell
// by central differences in t.
FieldM apply_X(const FieldM& g, const HopfModel& m);

// Mean of h over V for the normalized product of uniform sphere measure and
// d theta (v_quadrature_grid).
Complex mean_V(const FieldV& h, const HopfModel& m);

// max - min of the samples, taken as the diagonal of the bounding box in C.
double oscillation(std::span<const Complex> samples);

}  // namespace hopf
