#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace linwave::checks {

struct Measurement {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  std::string relation = "<=";  // "<=", ">=" or "=="
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::string background;
  std::vector<Measurement> results;
  double seconds = 0.0;

  bool pass() const;
};

struct SuiteOptions {
  int nmax = 8;
  std::uint64_t seed = 1;
  int trials = 10;
};

const std::vector<std::string>& suite_names();
/// Backgrounds a suite runs on; "minkowski-torus" and "flat-torus" are aliases.
std::vector<std::string> suite_backgrounds(const std::string& suite);
/// Throws InvalidArgument for unknown suites or unsupported backgrounds.
SuiteReport run_suite(const std::string& suite, const std::string& background, const SuiteOptions& options = {});

/// Squared truncated Sobolev norms of delta^(order) along one axis.
struct SpectrumRow {
  int truncation = 0;
  std::vector<double> norm_sq;  // one per Sobolev order
};
std::vector<SpectrumRow> dirac_spectrum(int order, const std::vector<double>& sobolev, const std::vector<int>& truncations);

}  // namespace linwave::checks
