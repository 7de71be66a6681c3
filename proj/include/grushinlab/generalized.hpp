#pragma once

#include "grushinlab/classical.hpp"

namespace grushinlab {

// Spectral data of the generalized component G_{V,xi} = -d2 + xi^2 q^2 + V.
struct GeneralizedGroundData {
  double xi = 0.0;
  double lambda = 0.0;   // selected eigenvalue
  double mu_ref = 0.0;   // classical mu_xi
  double gap = 0.0;      // |lambda - mu_ref|
  double certificate = 0.0;  // ||(G_V - mu) v_classical|| / ||v_classical||
  int ordinal = 0;       // 1-based index of lambda in the spectrum
  bool ambiguous = false;  // two nearest candidates within 2x bisection tol
  TailResolvedState eigenfunction;
};

// Selects the first eigenvalue when gamma = 1, the eigenvalue nearest mu_xi
// when gamma > 1. Enforces the resolution rule of classical_mu.
GeneralizedGroundData generalized_lambda(const DegeneracyProfile& profile,
                                         double xi, const PotentialSpec& V,
                                         const Grid1D& grid);

struct RateFit {
  double exponent = 0.0;     // slope of log lambda vs log xi
  double coefficient = 0.0;  // exp(intercept)
  double residual_rms = 0.0;
  double lambda_over_xi_last = 0.0;  // reported for gamma = 1
};

// Least-squares fit of log lambda against log xi. Requires >= 5 points
// spanning at least one decade.
RateFit asymptotic_rate_fit(const std::vector<GeneralizedGroundData>& sweep,
                            int gamma);

struct YEigenBasis {
  std::vector<double> eigenvalues;            // xi_n^2, nondecreasing
  std::vector<std::vector<double>> vectors;   // weighted-orthonormal
  Boundary boundary = Boundary::Dirichlet;
};

// First `count` eigenpairs of -(r^2 phi')': Sturm bisection + inverse
// iteration on Dirichlet grids, dense Jacobi fallback for periodic grids.
YEigenBasis y_eigenbasis(const Grid1D& grid, const WeightSpec& r, int count);

struct GaussianProjection {
  TailResolvedState ground;      // u_n, ground state of G_{n,V}
  std::vector<double> v;         // v_n = c_n u_n
  double coefficient = 0.0;      // c_n = <vtilde_n, u_n>
  double norm_v = 0.0;
  double norm_vtilde = 0.0;
};

// Spectral projection of the Gaussian quasimode
// vtilde_n = n^(1/4) exp(-n q'(0) x^2 / 2) onto the first eigenspace of
// G_{n,V}. Requires gamma = 1. Throws when the overlap collapses (<1e-6).
GaussianProjection gaussian_projection(const DegeneracyProfile& profile,
                                       double n, const PotentialSpec& V,
                                       const Grid1D& grid);

std::string generalized_sweep_csv(const std::vector<GeneralizedGroundData>& sweep,
                                  int gamma);
std::string basis_csv(const YEigenBasis& basis);

}  // namespace grushinlab
