#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "hopf/contraction.hpp"
#include "hopf/fields.hpp"
#include "hopf/grids.hpp"

namespace hopf {

enum class Orbit { plus, minus };

class ObstructionPipeline;

struct ObstructionDiagnostics {
  double quad_tol = 0.0;
  double series_tol = 0.0;
  double solve_tol = 0.0;
  int v_grid_points = 0;
  int contraction_terms = 0;       // K of the series correcting b
  double contraction_lipschitz = 0.0;
  Complex i_plus;                  // closed-orbit integral over F_+
  Complex i_minus;                 // closed-orbit integral over F_-
  std::optional<Complex> d_plus;   // descent defect read off the t > 0 half-line
};

/// Class of g.chi in leafwise H^1: scalar part c, transversal part h (a
/// mean-zero function on V plus its recorded constant) and, when c and the
/// oscillation of h vanish, the descent scalar d.
struct ObstructionClass {
  Complex c;
  FieldV h;
  Complex h_constant;
  double h_oscillation = 0.0;
  std::optional<Complex> d;
  VGrid grid;                       // v_quadrature_grid of the model
  std::vector<Complex> h_samples;   // h on `grid`
  ObstructionDiagnostics diagnostics;
  std::shared_ptr<const ObstructionPipeline> pipeline;

  // c, the oscillation of h and d all within tol (d must be defined).
  bool vanishes(double tol) const;
};

struct SolveReport {
  std::optional<FieldM> solution;
  ObstructionClass obstruction;
  double residual = 0.0;           // sup |X.f - g| on m_cover_grid; NaN without solution
  Complex normalization{};         // constant removed to give f mean zero
  int descent_terms = 0;           // K of the series making the primitive invariant

  bool solvable() const { return solution.has_value(); }
};

/// Mayer-Vietoris route for a fixed g. The cover pieces U_+/U_- are handled
/// through the basepoint planes t = +1 / t = -1: every leaf of U_+ crosses
/// t = 1 once, every leaf of U_- crosses t = -1 once.
class ObstructionPipeline {
 public:
  ObstructionPipeline(FieldM g, HopfModel m);

  const FieldM& field() const { return g_; }
  const HopfModel& model() const { return m_; }

  // Integral of (g~ / a)(z, s) ds over [t0, t1]. Uses s = |z| sinh(tau) for
  // z != 0; for z = 0 the segment must avoid s = 0.
  Complex leaf_integral(std::span<const double> z, double t0, double t1) const;

  // Leafwise primitives with basepoints on t = +1 (U_+) and t = -1 (U_-).
  Complex primitive_plus(const CoverPoint& p) const;
  Complex primitive_minus(const CoverPoint& p) const;

  // b(z) = int_{-1}^{1} (g~/a)(z, s) ds = f_- - f_+ on the overlap.
  Complex gap(std::span<const double> z) const;
  // e(z) = b(lambda z) - b(z) in its window form, smooth through z = 0.
  Complex defect(std::span<const double> z) const;
  Complex orbit_integral(Orbit o) const;

  Complex c() const { return c_; }
  const SeriesSolution& correction() const { return correction_; }
  // b'' = b - v + c l, exactly gamma-invariant on E \ {0}.
  Complex invariant_gap(std::span<const double> z) const;
  // h_0 on V, the descent of b''.
  Complex h0(const TransversalPoint& v) const;
  Complex h_mean() const { return h_mean_; }

  // q = v + mean(h_0), the smooth part of b.
  Complex smooth_gap(std::span<const double> z) const;
  // Global primitive: f_- on U_-, glued with f_+ + q on U_+.
  Complex global_primitive(const CoverPoint& p) const;
  // d~(z) = F~(gamma p) - F~(p) for p = (z, -1); basic, smooth through 0.
  Complex descent_defect(std::span<const double> z) const;

  ObstructionClass make_class(std::shared_ptr<const ObstructionPipeline> self) const;

 private:
  FieldM g_;
  HopfModel m_;
  Complex c_;
  SeriesSolution correction_;
  VGrid grid_;
  std::vector<Complex> h0_samples_;
  Complex h_mean_;
  double h_osc_ = 0.0;
  Complex i_plus_, i_minus_;
};

// b = coboundary gap of g on E \ {0}.
FieldEStar coboundary_gap(const FieldM& g, const HopfModel& m);

struct InvarianceDefect {
  FieldE e;
  Complex c;
};

// e(z) = b(lambda z) - b(z) and c = e(0). b is accepted for interface
// symmetry; e is evaluated from g through its window form.
InvarianceDefect invariance_defect(const FieldEStar& b, const FieldM& g, const HopfModel& m);

// I_+ / I_-: integral of g~(0, s)/|s| over one gamma-period of the closed orbit
// F_+ / F_-, taken in the logarithmic variable s = +-e^x.
Complex orbit_integral(const FieldM& g, Orbit o, const HopfModel& m);

ObstructionClass obstruction(const FieldM& g, const HopfModel& m);

// Solves X.f = g when the class vanishes; f is normalized to mean zero on
// m_quadrature_grid. Unsolvable inputs give a report without a solution.
SolveReport solve_cohomological_equation(const FieldM& g, const HopfModel& m);

// sup over m_cover_grid of |X.f - g|.
double verify_solution(const FieldM& f, const FieldM& g, const HopfModel& m);

}  // namespace hopf
