#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "hopf/fields.hpp"

namespace hopf {

/// Truncated Taylor polynomial in n variables around a point, up to a fixed
/// total order. Coefficients follow multi_indices(n, order).
class Jet {
 public:
  Jet(int n, int order);

  static Jet constant(int n, int order, double value);
  // The coordinate z_i expanded at z0.
  static Jet variable(int n, int order, int i, double z0_i);

  int dims() const { return n_; }
  int order() const { return order_; }
  double value() const { return coeff_[0]; }
  // D^s of the underlying function at the expansion point (s! times the coefficient).
  double derivative(const MultiIndex& s) const;

  Jet& operator+=(const Jet& o);
  Jet& operator*=(double s);
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator*(const Jet& a, const Jet& b);

  // phi o u, given phi and its derivatives phi^(k)(u(z0)) for k = 0..order.
  Jet compose(const std::vector<double>& phi_derivatives) const;

 private:
  int index_of(const MultiIndex& s) const;

  int n_;
  int order_;
  std::vector<MultiIndex> indices_;
  std::vector<double> coeff_;
};

/// Profile phi on (0, infinity) with closed-form derivatives.
struct Profile {
  std::string name;
  // phi^(k)(t) for k = 0..order.
  std::function<std::vector<double>(double t, int order)> derivatives;
  bool polynomial = false;
};

// "sqrt", "inverse" (1/t), "identity" (t), "square" (t^2). Throws ConfigError otherwise.
Profile make_profile(const std::string& name);

struct AppendixProfile {
  Profile phi = make_profile("sqrt");
  int p_max = 64;
  std::vector<int> k_list{1, 2, 3};
  std::vector<int> r_list{0, 1, 2};

  void validate() const;
};

struct AppendixPair {
  FieldEStar f;   // phi(|z|^2)
  FieldE f_p;     // phi(|z|^2 + 1/p)
};

AppendixPair appendix_pair(const AppendixProfile& profile, int p, const HopfModel& m);

struct ConvergenceRow {
  int k = 0;
  int r = 0;
  int p = 0;
  double rho = 0.0;
  double p_times_rho = 0.0;
};

// rho_{k,r}(f_p - f) for every (k, r) of the profile and p = 1..p_max.
std::vector<ConvergenceRow> convergence_table(const AppendixProfile& profile, const HopfModel& m);

struct WitnessRow {
  int j = 0;
  double radius = 0.0;
  double sup_abs = 0.0;       // sup |f| on |z| = radius
  double sup_second = 0.0;    // sup max_{|s|=2} |D^s f| on |z| = radius
};

// Rows for radii lambda^j, j = 1..layers, over cover_sphere(n, sphere_pts).
std::vector<WitnessRow> nonsmoothness_witness(const FieldEStar& f, const HopfModel& m,
                                              int layers = 8);

void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows);
void write_witness_csv(std::ostream& out, const std::vector<WitnessRow>& rows);

}  // namespace hopf
