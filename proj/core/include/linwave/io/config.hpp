#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace linwave::io {

/// Run configuration. Text form is one `section.key = value` per line;
/// `#` starts a comment, lists are comma separated. Keys:
///
///   background.kind        minkowski-torus | flat-torus | kasner | berger
///   background.n           2 or 3 (tori)
///   background.p           three Kasner exponents
///   background.lambda      Berger parameter (default: the scalar-flat value)
///   lattice.nmax           default 8
///   data.source            generator | snapshot
///   data.generator         random | constrained | gauge | standing-wave | bump
///   data.seed, data.amplitude, data.decay, data.width
///   data.path              pair snapshot (relative to the config file)
///   evolve.t0, evolve.t1   t0 defaults to 0 (Minkowski) or 1 (Kasner)
///   evolve.dt              a positive step or `exact` (default)
///   evolve.samples         extra sample times
///   evolve.J, evolve.sobolev_k
///   output.dir
///   tolerance.gauge, tolerance.constraint
struct RunConfig {
  std::string background = "minkowski-torus";
  int n = 3;
  std::array<double, 3> p{2.0 / 3.0, 2.0 / 3.0, -1.0 / 3.0};
  std::optional<double> lambda;
  int nmax = 8;

  std::string source = "generator";
  std::string generator = "constrained";
  unsigned long long seed = 1;
  double amplitude = 1.0;
  double decay = 0.3;
  double width = 0.3;
  std::string path;

  std::optional<double> t0;
  double t1 = 1.0;
  std::optional<double> dt;  // empty means exact
  std::vector<double> samples;
  int J = 1;
  double sobolev_k = 1.0;

  std::string out_dir = "out";
  double tol_gauge = 1e-8;
  double tol_constraint = 1e-8;

  bool operator==(const RunConfig&) const = default;

  bool is_kasner() const { return background == "kasner"; }
  double start_time() const { return t0.value_or(is_kasner() ? 1.0 : 0.0); }
};

/// Parses and validates. Bad lines raise ParseError or UnknownKey naming the
/// line; out-of-domain values are
/// DomainViolation errors naming the key. `base_dir` resolves data.path.
RunConfig parse_config(const std::string& text, const std::filesystem::path& base_dir = {});
RunConfig load_config(const std::filesystem::path& file);

/// Canonical text form; parse_config(save_config(c)) == c.
std::string save_config(const RunConfig& c);

/// Domain checks shared by parse_config and programmatic configs.
void validate_config(const RunConfig& c, const std::filesystem::path& base_dir = {});

}  // namespace linwave::io
