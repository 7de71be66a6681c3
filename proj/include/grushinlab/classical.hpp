#pragma once

#include "grushinlab/eigensolve.hpp"
#include "grushinlab/profiles.hpp"

namespace grushinlab {

// Ground data of the classical Fourier component
// -u'' + q^(g)(0)^2/(g!)^2 xi^2 x^(2g) u on (-L_minus, L_plus).
struct ClassicalGroundData {
  double xi = 0.0;
  double mu = 0.0;     // first eigenvalue
  double x_xi = 0.0;   // concentration scale ((g!)^2 mu / (q^(g)(0)^2 xi^2))^(1/2g)
  double A_xi = 0.0;   // supersolution amplitude
  double B_xi = 0.0;   // supersolution rate xi q^(g)(0) / (g! (g+1))
  int gamma = 1;
  double dgamma0 = 1.0;
  Grid1D grid;
  TailResolvedState ground;
  bool resolution_warning = false;  // n < 32 L / x_xi
};

// Resolution rule: warn when n < 32 L / x_xi, error when n < 8 L / x_xi.
ClassicalGroundData classical_mu(const DegeneracyProfile& profile, double xi,
                                 const Grid1D& grid);

// W_xi(x) = A_xi exp(-B_xi |x|^(g+1)), valid on |x| >= x_xi (even extension).
double supersolution(const ClassicalGroundData& data, double x);

struct ScalingReport {
  double mu = 0.0;         // at (xi, L)
  double mu_scaled = 0.0;  // tau^2 * mu at (1, tau L), tau = |xi|^(1/(1+gamma))
  double rel_mismatch = 0.0;
};

// Verifies mu_xi = tau^2 mu(1, tau L) on proportionally matched grids.
ScalingReport scaling_invariance_check(const DegeneracyProfile& profile,
                                       double xi, const Grid1D& grid);

// Suggested interior node count for resolving xi: at least 32 L / x_est,
// rounded up to a power of two plus one.
int recommended_nodes(const DegeneracyProfile& profile, double xi_max,
                      int floor_nodes = 1025);

std::string classical_sweep_csv(const std::vector<ClassicalGroundData>& sweep);

}  // namespace grushinlab
