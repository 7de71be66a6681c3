#pragma once

#include <optional>
#include <span>
#include <vector>

#include "grushinlab/common.hpp"

namespace grushinlab {

enum class Boundary { Dirichlet, Periodic };

// Uniform 1-D grid. Dirichlet grids store the n interior nodes of (a,b) with
// spacing h = (b-a)/(n+1); periodic grids store n nodes with wraparound and
// spacing h = (b-a)/n.
struct Grid1D {
  double a = -1.0;
  double b = 1.0;
  int n = 3;
  Boundary boundary = Boundary::Dirichlet;

  double spacing() const {
    return boundary == Boundary::Dirichlet ? (b - a) / (n + 1) : (b - a) / n;
  }
  double node(int i) const {
    return boundary == Boundary::Dirichlet ? a + (i + 1) * spacing()
                                           : a + i * spacing();
  }
  static Grid1D dirichlet(double a, double b, int n);
  static Grid1D periodic(double a, double b, int n);
};

// Symmetric tridiagonal operator, optionally with a periodic corner coupling.
struct TridiagonalOperator {
  std::vector<double> diag;
  std::vector<double> off;          // off[i] couples node i and i+1
  std::optional<double> corner;     // couples node 0 and node n-1 (periodic)

  int dim() const { return static_cast<int>(diag.size()); }
  double gershgorin_min() const;
  double gershgorin_max() const;
  void apply(std::span<const double> x, std::span<double> y) const;
  double rayleigh(std::span<const double> v) const;  // <v,Av>/<v,v>
};

struct DegeneracyProfile;
struct PotentialSpec;
struct WeightSpec;

// -u'' + w(x)u with w = xi^2 q(x)^2 + V(x), or the classical monomial
// potential q^(g)(0)^2/(g!)^2 xi^2 x^(2g) when `classical` is set.
TridiagonalOperator assemble_x_operator(const Grid1D& grid,
                                        const DegeneracyProfile& profile,
                                        double xi, const PotentialSpec& V,
                                        bool classical = false);

// -(r(y)^2 u')' in conservative flux form with half-node weights.
TridiagonalOperator assemble_y_operator(const Grid1D& grid, const WeightSpec& r);

// L^2 norm via trapezoid rule, zero boundary extension for Dirichlet grids.
double weighted_norm(std::span<const double> values, const Grid1D& grid);
double weighted_dot(std::span<const double> u, std::span<const double> v,
                    const Grid1D& grid);

// Three-column CSV export (index, diag, offdiag) for external validation.
std::string operator_csv(const TridiagonalOperator& op);

}  // namespace grushinlab
