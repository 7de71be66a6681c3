#pragma once

#include "grushinlab/generalized.hpp"

namespace grushinlab {

// Interior values of f(t, x, y) on tensorized grids, row-major in x.
struct TensorField {
  Grid1D gx, gy;
  std::vector<double> values;  // values[i * gy.n + j]
  double time = 0.0;

  double& at(int i, int j) { return values[static_cast<std::size_t>(i) * gy.n + j]; }
  double at(int i, int j) const { return values[static_cast<std::size_t>(i) * gy.n + j]; }
  double norm() const;  // weighted L^2(dx dy)
};

// A = (Ax + V) (x) I + diag(q^2) (x) Ay, applied through its Kronecker
// factors (never materialized densely).
struct HeatOperator {
  TridiagonalOperator Ax;       // -d2/dx2 + V at x-nodes
  TridiagonalOperator Ay;       // -(r^2 d/dy)' at y-nodes
  std::vector<double> q2;       // q(x_i)^2
  Grid1D gx, gy;

  static HeatOperator assemble(const DegeneracyProfile& profile,
                               const PotentialSpec& V, const WeightSpec& r,
                               const Grid1D& gx, const Grid1D& gy);
  void apply(std::span<const double> f, std::span<double> out) const;
  double min_potential() const;  // min V, for the SPD time-step guard
};

// One Crank-Nicolson step: (I + dt/2 A) f_new = (I - dt/2 A) f, solved by
// diagonally preconditioned CG to relative residual 1e-10. Throws
// NumericalGuardError when CG fails to converge in 10 sqrt(dim) iterations.
TensorField step_crank_nicolson(const TensorField& field, double dt,
                                const HeatOperator& op);

struct EvolveReport {
  double lambda = 0.0;      // discrete tensor eigenvalue lambda_{k,n}
  double max_rel_error = 0.0;
  std::vector<double> times;
  std::vector<double> norms;       // simulated ||f(t)||
  std::vector<double> predicted;   // ||f(0)|| e^(-lambda t)
};

// Integrates the mode v_k (x) phi_n to time T and compares the norm
// trajectory against the semigroup synthesis e^(-lambda t). Errors when
// dt > 0.1 / lambda (accuracy rule).
EvolveReport evolve_and_compare(const DegeneracyProfile& profile,
                                const PotentialSpec& V, const WeightSpec& r,
                                const Grid1D& gx, const Grid1D& gy, int k,
                                int n, double T, double dt);

std::string norm_trajectory_csv(const EvolveReport& report);
std::string snapshot_csv(const TensorField& field);

}  // namespace grushinlab
