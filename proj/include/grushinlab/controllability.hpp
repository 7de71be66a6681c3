#pragma once

#include "grushinlab/generalized.hpp"

namespace grushinlab {

// Control zone: disjoint x-intervals at positive distance from the
// singularity (vertical-strip mode).
struct ControlZone {
  std::vector<Interval> x_intervals;
  double distance_to_singularity() const;
  static ControlZone strips(std::vector<Interval> intervals);
};

// Trapezoid quadrature of v^2 over the zone's x-intervals.
double zone_mass(const EigenPair& v, const ControlZone& zone, const Grid1D& grid);

// ln of the zone mass from the tail-resolved log ledger; meaningful far
// below the double underflow threshold.
double zone_log_mass(const TailResolvedState& v, const ControlZone& zone,
                     const Grid1D& grid);

// e^(-2 lambda T) / lambda^(2s): the weighted terminal norm of a normalized
// eigenfunction solution started in D(G^s).
double dual_norm_dissipation(double lambda, double T, double s);

struct ObservabilityReport {
  int gamma = 1;
  double s = 0.5;
  std::vector<double> frequencies;
  std::vector<double> lambdas;
  std::vector<double> log_masses;   // ln m_n
  std::vector<double> masses;       // exp(log_masses); 0 when underflowed
  std::vector<double> betas;        // -ln(m_n) / (2 xi_n)
  double alpha_hat = 0.0;           // lambda_n ~ alpha_hat xi_n^(2/(1+gamma))
  double beta_hat = 0.0;            // -ln m_n ~ 2 beta_hat xi_n
  double fit_residual_alpha = 0.0;
  double fit_residual_beta = 0.0;
  bool unbounded = false;           // gamma > 1 verdict
  double T_lower = 0.0;             // beta_hat / alpha_hat when gamma = 1
  double lambda_exponent = 0.0;     // 2/(1+gamma), recorded for the verdict
  double decay_exponent = 1.0;
  std::vector<double> T_list;
  // log_ratio[t][i] = ln R(T_t, xi_i), R = e^(-2 lambda T) / (lambda^(2s) m).
  std::vector<std::vector<double>> log_ratio;
};

// Per-frequency dissipation vs. control-zone mass along eigenfunction
// solutions; fits the dissipation and decay rates and the minimal-time
// estimate T_lower = beta_hat / alpha_hat (gamma = 1), or the "unbounded"
// verdict (gamma > 1).
ObservabilityReport observability_ratio_sweep(const DegeneracyProfile& profile,
                                              const PotentialSpec& V,
                                              const ControlZone& zone,
                                              const std::vector<double>& xis,
                                              const std::vector<double>& Ts,
                                              double s, const Grid1D& grid);

// Omega_y = R route: both sides of the Fourier observability inequality by
// midpoint quadrature in xi over [n - delta, n + delta] with the plateau
// weight psi_n built from the bump construction. Reports the same fits on
// the psi^2-averaged dissipation and masses.
ObservabilityReport frequency_localized_sweep(const DegeneracyProfile& profile,
                                              const PotentialSpec& V,
                                              const ControlZone& zone,
                                              const std::vector<double>& centers,
                                              double delta, int quadrature_nodes,
                                              const std::vector<double>& Ts,
                                              double s, const Grid1D& grid);

struct ErrorTermTable {
  std::vector<double> ts, xs;
  std::vector<double> ns;
  // values[it][ix][in] = gamma_{t,x}(n-1)
  //   = e^(-t (lambda_n - q'(0) n)) v_n(x) e^(n d_agm(x) (1-eps))
  std::vector<std::vector<std::vector<double>>> values;
  std::vector<std::vector<std::vector<double>>> dissipation_factor;
  double max_modulus = 0.0;
  bool growth_flag = false;  // some |gamma| exceeded e^(growth_delta n)
};

// Tabulates the Koenig error term using the spectral projections v_n.
// Requires gamma = 1. growth_delta is the user's tolerated exponential rate.
ErrorTermTable error_term_table(const DegeneracyProfile& profile,
                                const PotentialSpec& V, double epsilon,
                                const std::vector<double>& ts,
                                const std::vector<double>& xs,
                                const std::vector<double>& ns,
                                const Grid1D& grid, double growth_delta = 0.01);

std::string observability_csv(const ObservabilityReport& report);

}  // namespace grushinlab
