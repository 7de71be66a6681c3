#pragma once

#include <complex>

#include "grushinlab/profiles.hpp"

namespace grushinlab {

using cxd = std::complex<double>;

// Geometry of the complement-of-a-rectangle counterexample after the change
// of variable z = e^(iy - q'(0) t - (1-eps) d_agm(x)):
//   U = D(0, r0) + {|z| < 1, arg z not in I},   r0 = e^(-(1-eps) min(d(-a), d(b)))
//   r1 = e^(-q'(0) (1+eps) T)
// The counterexample needs r0 < r1, i.e. T < (1-eps) min(d(-a), d(b)) /
// (q'(0) (1+eps)); z0 sits at the midpoint argument of the removed arc with
// |z0| = sqrt(r0 r1).
struct PolynomialTestCase {
  double a = 0.5, b = 0.5;       // rectangle half-widths in x
  double epsilon = 0.1;
  double T = 0.05;
  double qprime0 = 1.0;
  double d_minus = 0.0, d_plus = 0.0;  // d_agm(-a), d_agm(b)
  double r0 = 0.0, r1 = 0.0;
  double arc_lo = 0.0, arc_hi = 0.0;   // removed arc I (radians)
  cxd z0;
  int vanishing_order = 8;       // N: zero of order N at 0 -> factor z^(N+1)
  int stages = 6;                // refinement stages

  bool feasible() const { return r0 < r1; }

  static PolynomialTestCase build(const DegeneracyProfile& profile, double a,
                                  double b, double epsilon, double T,
                                  double arc_lo = kPi / 4,
                                  double arc_hi = 3 * kPi / 4,
                                  int vanishing_order = 8, int stages = 6);
};

struct PacmanSamples {
  std::vector<cxd> boundary_U;  // deterministic ordering
  std::vector<cxd> boundary_V;  // 1.02-dilation of U
};

PacmanSamples pacman_region(const PolynomialTestCase& c, int density = 4096);

struct RungeStage {
  int k = 0;
  int degree = 0;          // degree of the assembled polynomial p_k
  double contraction = 0;  // measured max |1 - (z - z0) R_k(z)| on boundary_V
  double lhs = 0;          // ||p_k||_{L^2(D(0, r1))}, exact from coefficients
  double rhs = 0;          // max |p_k| over boundary_V samples
  double ratio = 0;        // lhs / rhs
};

struct RungeResult {
  PolynomialTestCase geometry;
  std::vector<RungeStage> history;
  std::vector<cxd> final_coefficients;  // of p_k at the last stage
};

// Constructive Runge approximation of 1/(z - z0) by pole pushing along the
// ray z0 [1, inf): per-stage truncated geometric re-expansion around poles
// receding to |w| = 10, terminal stage expanded by -(1/W) sum (z/W)^i.
// Each refinement stage k raises the truncation orders together; the
// contraction is certified on the sampled boundary of the dilated pacman.
// p_k = z^(N+1) R_k(z). LHS is computed exactly from the coefficients via
// pi sum |a_n|^2 r1^(2n+2)/(n+1). Throws ValidationError when r0 >= r1
// (T above the theorem's time threshold).
RungeResult runge_counterexample(const PolynomialTestCase& c);

std::string runge_history_csv(const RungeResult& r);

}  // namespace grushinlab
