#pragma once

#include <string>
#include <vector>

#include "grushinlab/controllability.hpp"

namespace grushinlab {

inline constexpr const char* kToolVersion = "grushin-lab 0.1.0";

// Locale-independent formatting; floating point carries 17 significant
// digits so emitted files are byte-stable and round-trip exactly.
std::string format_double(double v);

// Minimal deterministic JSON emitter (insertion order preserved).
class JsonWriter {
 public:
  std::string str() const;
  void begin_object();
  void end_object();
  void key(const std::string& k);
  void value(double v);
  void value(int v);
  void value(const std::string& v);
  void value_raw(const std::string& raw);
  void value(const std::vector<double>& v);
  void begin_array();
  void end_array();

 private:
  void comma();
  std::string out_;
  std::vector<int> counts_;
};

// {profile, zone, gamma, s, frequencies[], lambdas[], masses[], alpha_hat,
//  beta_hat, T_lower | "unbounded", fit_residuals, tool_version}
std::string observability_report_json(const ObservabilityReport& report,
                                      const std::string& profile_desc,
                                      const std::string& zone_desc);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace grushinlab
