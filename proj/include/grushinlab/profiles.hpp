#pragma once

#include <string>
#include <vector>

#include "grushinlab/grid.hpp"

namespace grushinlab {

// ---------------------------------------------------------------------------
// Degeneracy profiles q(x) on (-L_minus, L_plus): q vanishes to order gamma at
// x = 0 with q^(gamma)(0) = dgamma0 > 0 and q != 0 away from 0.
// ---------------------------------------------------------------------------

enum class ProfileForm { Monomial, Polynomial, Tangent, Tabulated };

struct DegeneracyProfile {
  ProfileForm form = ProfileForm::Monomial;
  int gamma = 1;
  double dgamma0 = 1.0;      // q^(gamma)(0)
  double L_minus = 1.0;      // domain (-L_minus, L_plus)
  double L_plus = 1.0;
  std::vector<double> coeffs;              // Polynomial: q = sum coeffs[k] x^k
  std::vector<double> tab_x, tab_q;        // Tabulated samples

  double operator()(double x) const;
  double L_max() const { return L_minus > L_plus ? L_minus : L_plus; }

  // q(x) = dgamma0/gamma! * x^gamma
  static DegeneracyProfile monomial(int gamma, double L = 1.0,
                                    double dgamma0 = 0.0 /* default gamma! */);
  static DegeneracyProfile monomial_on(int gamma, double L_minus, double L_plus,
                                       double dgamma0 = 0.0);
  static DegeneracyProfile tangent(double L);
  static DegeneracyProfile polynomial(std::vector<double> coeffs, double L_minus,
                                      double L_plus);
  // Tabulated samples are interpolated with monotone-slope cubics so that
  // derivative estimates at 0 stay usable.
  static DegeneracyProfile tabulated(std::vector<double> x, std::vector<double> q,
                                     int gamma);
};

enum class PotentialForm { Zero, Constant, Polynomial, Tabulated };

struct PotentialSpec {
  PotentialForm form = PotentialForm::Zero;
  double constant = 0.0;
  std::vector<double> coeffs;
  std::vector<double> tab_x, tab_v;
  double sup_norm = 0.0;  // ||V||_inf on the sampled domain

  double operator()(double x) const;
  static PotentialSpec zero();
  static PotentialSpec constant_value(double c);
  static PotentialSpec polynomial(std::vector<double> coeffs, double L_minus,
                                  double L_plus);
  static PotentialSpec tabulated(std::vector<double> x, std::vector<double> v);
};

enum class WeightForm { One, Polynomial, Tabulated };

struct WeightSpec {
  WeightForm form = WeightForm::One;
  std::vector<double> coeffs;
  std::vector<double> tab_y, tab_r;
  double positivity_floor = 1e-12;

  double operator()(double y) const;
  static WeightSpec one();
  static WeightSpec constant_value(double c);
  static WeightSpec polynomial(std::vector<double> coeffs, double lo, double hi,
                               double floor);
};

enum class MeasureForm { One, Exponential, Cosine, Tabulated };

// Measure density h(x) > 0; mu = h(x) dx dy.
struct MeasureSpec {
  MeasureForm form = MeasureForm::One;
  double rate = 0.0;  // Exponential: h = exp(rate * x)
  std::vector<double> tab_x, tab_h;

  double operator()(double x) const;
  static MeasureSpec one();
  static MeasureSpec exponential(double rate);
  static MeasureSpec cosine();
  static MeasureSpec tabulated(std::vector<double> x, std::vector<double> h);
};

// ---------------------------------------------------------------------------
// Hypothesis H2 validation
// ---------------------------------------------------------------------------

struct H2Report {
  bool pass = false;
  // Central finite-difference estimates of d^k q(0), k = 0..gamma.
  std::vector<double> derivative_estimates;
  double min_abs_off_zero = 0.0;  // min |q| outside a tol-neighborhood of 0
  std::string failure;            // empty when pass
};

// Pass iff the estimated derivatives of order k < gamma vanish (<= tol), the
// gamma-th is positive (> tol), and |q| > tol away from 0.
H2Report validate_h2(const DegeneracyProfile& profile, double tol = 1e-6);

// ---------------------------------------------------------------------------
// Agmon distances
// ---------------------------------------------------------------------------

// delta = 0 integrates |q|; delta > 0 integrates (q^2 - delta)_+^(1/2).
// Composite Simpson on `resolution` subintervals, split first at the points
// where q^2 crosses delta (square-root kink of the floored integrand).
struct AgmonMetric {
  DegeneracyProfile profile;
  double delta = 0.0;
  int resolution = 4096;
};

double agmon_distance(const AgmonMetric& metric, double x);

struct Interval {
  double lo = 0.0, hi = 0.0;
  double length() const { return hi - lo; }
};

struct SublevelSet {
  Interval interval;   // maximal interval around 0 with q^2 <= delta
  bool connected = false;
};

// F_delta = {x : q(x)^2 <= delta}; fails when the grid sublevel set is
// disconnected (delta too large).
SublevelSet sublevel_set_fdelta(const DegeneracyProfile& profile, double delta,
                                const Grid1D& grid);

struct SetDistance {
  double value = 0.0;
  bool overlap_warning = false;
};

// Agmon distance between a union of zone intervals and F_delta: infimum of
// the floored-integrand quadrature over endpoint pairs.
SetDistance agmon_set_distance(const AgmonMetric& metric,
                               const std::vector<Interval>& zone,
                               const Interval& fdelta);

// ---------------------------------------------------------------------------
// Bump-function pair: chi1^2 + chi2^2 = 1 with chi1 = 1 on [-delta R, delta R]
// and chi1 = 0 outside [-R, R], built from the smoothed step
// s(x) = (pi/2) g((x - delta R)/((1-delta) R)), g = f/(f + f(1-.)),
// f = exp(-1/x) on x > 0.
// ---------------------------------------------------------------------------

double bump_chi1(double x, double R, double delta);
double bump_chi2(double x, double R, double delta);

struct BumpPair {
  std::vector<double> chi1, chi2;       // samples at grid nodes
  double sup_dchi1 = 0.0;               // measured sup |chi_i'| (grid maximum)
  double sup_dchi2 = 0.0;
  double max_partition_residual = 0.0;  // max |chi1^2 + chi2^2 - 1|
  // sup |chi_i'| * 2 (1-delta) R / pi: independent of (R, delta) by
  // construction up to grid sampling.
  double normalized_derivative_constant = 0.0;
};

BumpPair bump_pair(double R, double delta, const Grid1D& grid);

// V = (sqrt h)'' / sqrt h on interior nodes; closed form for known measures.
PotentialSpec potential_from_measure(const MeasureSpec& h, const Grid1D& grid);

// ---------------------------------------------------------------------------
// Flat key-value serialization (keys: form, gamma, coeffs, L_minus, L_plus,
// delta); tabulated forms round-trip through two-column CSV (x, value).
// ---------------------------------------------------------------------------

std::string profile_to_kv(const DegeneracyProfile& p);
DegeneracyProfile profile_from_kv(const std::string& text);
std::string potential_to_kv(const PotentialSpec& v);
PotentialSpec potential_from_kv(const std::string& text);
std::string measure_to_kv(const MeasureSpec& h);
MeasureSpec measure_from_kv(const std::string& text);

std::string table_to_csv(const std::vector<double>& x, const std::vector<double>& v);
void table_from_csv(const std::string& text, std::vector<double>& x,
                    std::vector<double>& v);

}  // namespace grushinlab
