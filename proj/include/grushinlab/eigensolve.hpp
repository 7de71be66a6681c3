#pragma once

#include <span>
#include <vector>

#include "grushinlab/grid.hpp"

namespace grushinlab {

// Eigenvalue + grid eigenfunction. The vector is normalized to weighted
// L^2 = 1 on its grid and sign-fixed positive at its max-|value| node.
struct EigenPair {
  double value = 0.0;
  std::vector<double> vector;
  double residual = 0.0;  // ||(A - value) v|| / ||A||, Euclidean
  int index = -1;         // 1-based ordinal in the spectrum, -1 if unknown
};

// Count of eigenvalues strictly below lambda (scaled Sturm recurrence).
// Requires a plain tridiagonal operator (no periodic corner).
int sturm_count(const TridiagonalOperator& op, double lambda);

// k-th smallest eigenvalue (1-based) by bisection on Sturm counts; final
// bracket width <= tol * (1 + |lambda|).
double eigenvalue_k(const TridiagonalOperator& op, int k, double tol = 1e-12);

// Eigenvector at an eigenvalue approximation lambda via inverse iteration
// (partial-pivoted tridiagonal solves). Re-orthogonalizes against
// `orthogonalize_against` each sweep. Throws NumericalGuardError after 50
// non-converged iterations (clustered eigenvalues; caller must refine).
EigenPair eigenvector(const TridiagonalOperator& op, const Grid1D& grid,
                      double lambda, double tol = 1e-10,
                      const std::vector<std::vector<double>>& orthogonalize_against = {});

// Ground-state solve that also resolves the exponentially small tails:
// two-sided inward recursion matched at the potential minimum, with a
// per-node log-magnitude ledger so tail magnitudes far below the rounding
// floor (and beyond double range) stay meaningful. log_abs[i] = ln|v_i| for
// the weighted-normalized eigenfunction.
struct TailResolvedState {
  EigenPair pair;
  std::vector<double> log_abs;
};

TailResolvedState ground_state_tail(const TridiagonalOperator& op,
                                    const Grid1D& grid, double lambda);

// Full spectrum of a (possibly periodic-bordered) symmetric operator via
// cyclic Jacobi. Dimension capped at 4096.
std::vector<double> dense_spectrum(const TridiagonalOperator& op);

struct DenseEigenSystem {
  std::vector<double> values;               // ascending
  std::vector<std::vector<double>> vectors;  // orthonormal (Euclidean)
};
DenseEigenSystem dense_eigensystem(const TridiagonalOperator& op);

// ||(A - lambda) u|| / ||u||; an upper bound for dist(lambda, sigma(A)).
double spectral_distance_bound(const TridiagonalOperator& op, double lambda,
                               std::span<const double> u);

}  // namespace grushinlab
