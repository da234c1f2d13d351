#include "hopf/grids.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hopf/quadrature.hpp"

namespace hopf {
namespace {

constexpr double kPi = std::numbers::pi;

SphereGrid circle(int pts) {
  SphereGrid g;
  for (int j = 0; j < pts; ++j) {
    const double a = 2.0 * kPi * j / pts;
    g.points.push_back(Vec{std::cos(a), std::sin(a)});
    g.weights.push_back(1.0 / pts);
  }
  return g;
}

void normalize(SphereGrid& g) {
  double total = 0.0;
  for (double w : g.weights) total += w;
  for (double& w : g.weights) w /= total;
}

}  // namespace

SphereGrid quadrature_sphere(int ambient_dim, int azimuth_pts) {
  if (ambient_dim == 2) return circle(azimuth_pts);
  const SphereGrid inner = quadrature_sphere(ambient_dim - 1, azimuth_pts);
  const int nodes = std::max(2, azimuth_pts / 2);
  const int jac = ambient_dim - 2;  // measure sin^jac(phi) dphi
  // Polar nodes (cos phi, sin phi) with weights, exact on polynomials in u:
  // odd jac is a polynomial weight (1 - x^2)^((jac-1)/2) in x = cos phi, so
  // Gauss-Legendre in x; even jac makes sin^jac a trigonometric polynomial, so
  // the midpoint rule in phi.
  std::vector<double> c, sn, w;
  if (jac % 2 == 1) {
    const GaussRule rule = gauss_legendre(nodes);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double x = rule.nodes[i];
      c.push_back(x);
      sn.push_back(std::sqrt(std::max(0.0, 1.0 - x * x)));
      w.push_back(rule.weights[i] * std::pow(1.0 - x * x, (jac - 1) / 2));
    }
  } else {
    for (int i = 0; i < nodes; ++i) {
      const double phi = kPi * (i + 0.5) / nodes;
      c.push_back(std::cos(phi));
      sn.push_back(std::sin(phi));
      w.push_back(std::pow(std::sin(phi), jac));
    }
  }
  SphereGrid g;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < inner.points.size(); ++j) {
      Vec u{c[i]};
      for (double x : inner.points[j]) u.push_back(sn[i] * x);
      g.points.push_back(u);
      g.weights.push_back(w[i] * inner.weights[j]);
    }
  }
  normalize(g);
  return g;
}

SphereGrid cover_sphere(int ambient_dim, int azimuth_pts) {
  if (ambient_dim == 2) return circle(azimuth_pts);
  const SphereGrid inner = cover_sphere(ambient_dim - 1, azimuth_pts);
  const int polar = azimuth_pts / 2 + 1;
  SphereGrid g;
  for (int i = 0; i < polar; ++i) {
    if (i == 0 || i == polar - 1) {
      Vec u(ambient_dim, 0.0);
      u[0] = i == 0 ? 1.0 : -1.0;
      g.points.push_back(u);
      continue;
    }
    const double phi = kPi * i / (polar - 1);
    for (const Vec& v : inner.points) {
      Vec u{std::cos(phi)};
      for (double x : v) u.push_back(std::sin(phi) * x);
      g.points.push_back(u);
    }
  }
  g.weights.assign(g.points.size(), 1.0);
  normalize(g);
  return g;
}

VGrid v_quadrature_grid(const HopfModel& m) {
  const SphereGrid s = quadrature_sphere(m.n, m.grid.sphere_pts);
  const int nt = m.grid.theta_pts;
  VGrid g;
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    for (int j = 0; j < nt; ++j) {
      g.points.push_back({s.points[i], static_cast<double>(j) / nt});
      g.weights.push_back(s.weights[i] / nt);
    }
  }
  return g;
}

namespace {

// Sphere coordinates are reversed so the grid poles sit on the t-axis, where
// the two closed orbits live.
MGrid m_grid(const SphereGrid& s, int nt) {
  MGrid g;
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    const Vec w(s.points[i].rbegin(), s.points[i].rend());
    for (int j = 0; j < nt; ++j) {
      g.points.push_back({w, static_cast<double>(j) / nt});
      g.weights.push_back(s.weights[i] / nt);
    }
  }
  return g;
}

}  // namespace

MGrid m_quadrature_grid(const HopfModel& m) {
  return m_grid(quadrature_sphere(m.n + 1, std::max(8, m.grid.sphere_pts / 2)),
                std::max(8, m.grid.theta_pts / 2));
}

MGrid m_cover_grid(const HopfModel& m) {
  return m_grid(cover_sphere(m.n + 1, std::max(8, m.grid.sphere_pts / 2)),
                std::max(8, m.grid.theta_pts / 2));
}

}  // namespace hopf
