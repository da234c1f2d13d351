#include "hopf/frechet.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "hopf/errors.hpp"

namespace hopf {

// --- jets -------------------------------------------------------------------------------

Jet::Jet(int n, int order)
    : n_(n), order_(order), indices_(multi_indices(n, order)), coeff_(indices_.size(), 0.0) {}

Jet Jet::constant(int n, int order, double value) {
  Jet j(n, order);
  j.coeff_[0] = value;
  return j;
}

Jet Jet::variable(int n, int order, int i, double z0_i) {
  Jet j(n, order);
  j.coeff_[0] = z0_i;
  if (order >= 1) {
    MultiIndex e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    j.coeff_[static_cast<std::size_t>(j.index_of(e))] = 1.0;
  }
  return j;
}

int Jet::index_of(const MultiIndex& s) const {
  // multi_indices is small; a linear scan keeps this honest.
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] == s) return static_cast<int>(i);
  }
  return -1;
}

double Jet::derivative(const MultiIndex& s) const {
  if (hopf::order(s) > order_) throw DerivativeOrderError("Jet: derivative order exceeds jet order");
  const int i = index_of(s);
  double fact = 1.0;
  for (int si : s) {
    for (int q = 2; q <= si; ++q) fact *= q;
  }
  return fact * coeff_[static_cast<std::size_t>(i)];
}

Jet& Jet::operator+=(const Jet& o) {
  for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] += o.coeff_[i];
  return *this;
}

Jet& Jet::operator*=(double s) {
  for (double& c : coeff_) c *= s;
  return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
  Jet out(a.n_, a.order_);
  MultiIndex sum(static_cast<std::size_t>(a.n_), 0);
  for (std::size_t i = 0; i < a.indices_.size(); ++i) {
    if (a.coeff_[i] == 0.0) continue;
    const int oi = hopf::order(a.indices_[i]);
    for (std::size_t j = 0; j < b.indices_.size(); ++j) {
      if (b.coeff_[j] == 0.0 || oi + hopf::order(b.indices_[j]) > a.order_) continue;
      for (std::size_t q = 0; q < sum.size(); ++q) sum[q] = a.indices_[i][q] + b.indices_[j][q];
      out.coeff_[static_cast<std::size_t>(out.index_of(sum))] += a.coeff_[i] * b.coeff_[j];
    }
  }
  return out;
}

Jet Jet::compose(const std::vector<double>& phi_derivatives) const {
  // phi(u0 + du) = sum_k phi^(k)(u0) du^k / k!, du has no constant term.
  Jet du = *this;
  du.coeff_[0] = 0.0;
  Jet out = constant(n_, order_, phi_derivatives[0]);
  Jet power = constant(n_, order_, 1.0);
  double fact = 1.0;
  for (int k = 1; k <= order_; ++k) {
    power = power * du;
    fact *= k;
    Jet term = power;
    term *= phi_derivatives[static_cast<std::size_t>(k)] / fact;
    out += term;
  }
  return out;
}

// --- profiles ----------------------------------------------------------------------------

Profile make_profile(const std::string& name) {
  if (name == "sqrt") {
    return {name, [](double t, int order) {
              std::vector<double> d(static_cast<std::size_t>(order) + 1);
              double coef = 1.0;
              double expo = 0.5;
              for (int k = 0; k <= order; ++k) {
                d[static_cast<std::size_t>(k)] = coef * std::pow(t, expo);
                coef *= expo;
                expo -= 1.0;
              }
              return d;
            },
            false};
  }
  if (name == "inverse") {
    return {name, [](double t, int order) {
              std::vector<double> d(static_cast<std::size_t>(order) + 1);
              double coef = 1.0;
              for (int k = 0; k <= order; ++k) {
                d[static_cast<std::size_t>(k)] = coef * std::pow(t, -1.0 - k);
                coef *= -(k + 1.0);
              }
              return d;
            },
            false};
  }
  if (name == "identity") {
    return {name, [](double t, int order) {
              std::vector<double> d(static_cast<std::size_t>(order) + 1, 0.0);
              d[0] = t;
              if (order >= 1) d[1] = 1.0;
              return d;
            },
            true};
  }
  if (name == "square") {
    return {name, [](double t, int order) {
              std::vector<double> d(static_cast<std::size_t>(order) + 1, 0.0);
              d[0] = t * t;
              if (order >= 1) d[1] = 2.0 * t;
              if (order >= 2) d[2] = 2.0;
              return d;
            },
            true};
  }
  throw ConfigError(0, "unknown phi '" + name + "' (expected sqrt, inverse, identity, square)");
}

void AppendixProfile::validate() const {
  if (p_max < 4) throw ModelError("AppendixProfile: p_max must be at least 4");
  for (int k : k_list) {
    if (k < 0) throw ModelError("AppendixProfile: negative annulus index");
  }
  for (int r : r_list) {
    if (r < 0 || r > kMaxDerivativeOrder) throw DerivativeOrderError("AppendixProfile: bad r");
  }
}

// --- the appendix sequence ----------------------------------------------------------------

namespace {

// phi(|z|^2 + eps) as an EuclideanField with jet-based partial derivatives.
EuclideanField radial_profile(const Profile& phi, double eps, bool smooth) {
  auto eval = [phi, eps](std::span<const double> z) {
    double u = eps;
    for (double x : z) u += x * x;
    return Complex{phi.derivatives(u, 0)[0], 0.0};
  };
  auto deriv = [phi, eps](std::span<const double> z, const MultiIndex& s) {
    const int n = static_cast<int>(z.size());
    const int r = order(s);
    if (r > kMaxDerivativeOrder) throw DerivativeOrderError("radial profile: order too high");
    Jet u = Jet::constant(n, r, eps);
    for (int i = 0; i < n; ++i) {
      Jet zi = Jet::variable(n, r, i, z[static_cast<std::size_t>(i)]);
      u += zi * zi;
    }
    return Complex{u.compose(phi.derivatives(u.value(), r)).derivative(s), 0.0};
  };
  return EuclideanField(eval, deriv, smooth);
}

}  // namespace

AppendixPair appendix_pair(const AppendixProfile& profile, int p, const HopfModel&) {
  if (p < 1) throw ModelError("appendix_pair: p must be positive");
  return {FieldEStar(radial_profile(profile.phi, 0.0, profile.phi.polynomial)),
          FieldE(radial_profile(profile.phi, 1.0 / p, true))};
}

std::vector<ConvergenceRow> convergence_table(const AppendixProfile& profile,
                                              const HopfModel& m) {
  profile.validate();
  std::vector<ConvergenceRow> rows;
  for (int k : profile.k_list) {
    for (int r : profile.r_list) {
      for (int p = 1; p <= profile.p_max; ++p) {
        const AppendixPair pair = appendix_pair(profile, p, m);
        const double rho = seminorm(pair.f_p - pair.f, k, r, m);
        rows.push_back({k, r, p, rho, p * rho});
      }
    }
  }
  return rows;
}

std::vector<WitnessRow> nonsmoothness_witness(const FieldEStar& f, const HopfModel& m,
                                              int layers) {
  const SphereGrid dirs = cover_sphere(m.n, m.grid.sphere_pts);
  std::vector<MultiIndex> second;
  for (const MultiIndex& s : multi_indices(m.n, 2)) {
    if (order(s) == 2) second.push_back(s);
  }
  std::vector<WitnessRow> rows;
  for (int j = 1; j <= layers; ++j) {
    WitnessRow row{j, std::pow(m.lambda, j), 0.0, 0.0};
    for (const Vec& u : dirs.points) {
      Vec z = u;
      for (double& x : z) x *= row.radius;
      row.sup_abs = std::max(row.sup_abs, std::abs(f(z)));
      for (const MultiIndex& s : second) {
        row.sup_second = std::max(row.sup_second, std::abs(derivative(f, s, z, m)));
      }
    }
    rows.push_back(row);
  }
  return rows;
}

void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows) {
  fmt::print(out, "k,r,p,rho,p_times_rho\n");
  for (const ConvergenceRow& row : rows) {
    fmt::print(out, "{},{},{},{:.12e},{:.12e}\n", row.k, row.r, row.p, row.rho, row.p_times_rho);
  }
}

void write_witness_csv(std::ostream& out, const std::vector<WitnessRow>& rows) {
  fmt::print(out, "j,radius,sup_abs_f,sup_second_derivative\n");
  for (const WitnessRow& row : rows) {
    fmt::print(out, "{},{:.12e},{:.12e},{:.12e}\n", row.j, row.radius, row.sup_abs,
               row.sup_second);
  }
}

}  // namespace hopf
