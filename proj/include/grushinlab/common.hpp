#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace grushinlab {

// Input or configuration rejected before any numerics ran (CLI exit code 2).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A numerical guard tripped mid-computation: resolution rule, solver
// divergence, dynamic-range overflow (CLI exit code 3).
struct NumericalGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr double kPi = 3.14159265358979323846;

// log(sum exp(a_i)) without overflow; -inf for an empty range.
double log_sum_exp(const std::vector<double>& a);

// Run fn(i) for i in [0, count). Worker count comes from the
// GRUSHIN_LAB_WORKERS environment variable (default: hardware concurrency).
// Each index writes only its own slot, so results are deterministic.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

std::size_t worker_count();

}  // namespace grushinlab
