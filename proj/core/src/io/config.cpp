#include "linwave/io/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "linwave/common.hpp"
#include "linwave/geometry/slice.hpp"
#include "linwave/io/report.hpp"

namespace linwave::io {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void line_error(ErrorCode code, int line, const std::string& msg) {
  fail(code, "config line " + std::to_string(line) + ": " + msg);
}

double to_double(const std::string& v, int line, const std::string& key) {
  double d = 0.0;
  const auto* end = v.data() + v.size();
  const auto r = std::from_chars(v.data(), end, d);
  if (r.ec != std::errc() || r.ptr != end || !std::isfinite(d)) {
    line_error(ErrorCode::ParseError, line, key + ": expected a number, got '" + v + "'");
  }
  return d;
}

long long to_int(const std::string& v, int line, const std::string& key) {
  long long i = 0;
  const auto* end = v.data() + v.size();
  const auto r = std::from_chars(v.data(), end, i);
  if (r.ec != std::errc() || r.ptr != end) line_error(ErrorCode::ParseError, line, key + ": expected an integer, got '" + v + "'");
  return i;
}

std::vector<double> to_list(const std::string& v, int line, const std::string& key) {
  std::vector<double> out;
  if (trim(v).empty()) return out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_double(trim(item), line, key));
  return out;
}

[[noreturn]] void domain(const std::string& key, const std::string& msg) {
  fail(ErrorCode::DomainViolation, key + ": " + msg);
}

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + format_real(v[i]);
  return s;
}

}  // namespace

void validate_config(const RunConfig& c, const std::filesystem::path& base_dir) {
  static const std::set<std::string> kinds{"minkowski-torus", "flat-torus", "kasner", "berger"};
  if (!kinds.count(c.background)) domain("background.kind", "unknown background '" + c.background + "'");
  if (c.n != 2 && c.n != 3) domain("background.n", "must be 2 or 3");
  if (c.background == "kasner" || c.background == "berger") {
    if (c.n != 3) domain("background.n", c.background + " is three-dimensional");
  }
  if (c.is_kasner()) {
    try {
      geometry::validate_kasner(c.p);
    } catch (const Error& e) {
      domain("background.p", e.what());
    }
  }
  if (c.lambda && !(*c.lambda > 0.0)) domain("background.lambda", "must be positive");
  if (c.nmax < 0 || c.nmax > 512) domain("lattice.nmax", "must lie in [0, 512]");
  if (c.source != "generator" && c.source != "snapshot") domain("data.source", "must be generator or snapshot");
  static const std::set<std::string> gens{"random", "constrained", "gauge", "standing-wave", "bump"};
  if (c.source == "generator" && !gens.count(c.generator)) domain("data.generator", "unknown generator '" + c.generator + "'");
  if (c.source == "snapshot") {
    if (c.path.empty()) domain("data.path", "required when data.source = snapshot");
    const std::filesystem::path p = std::filesystem::path(c.path).is_absolute() ? std::filesystem::path(c.path) : base_dir / c.path;
    if (!std::filesystem::exists(p)) domain("data.path", "file not found: " + p.string());
  }
  if (!(c.amplitude >= 0.0)) domain("data.amplitude", "must be nonnegative");
  if (!(c.decay > 0.0)) domain("data.decay", "must be positive");
  if (!(c.width > 0.0)) domain("data.width", "must be positive");
  if (c.dt && !(*c.dt > 0.0)) domain("evolve.dt", "must be positive or 'exact'");
  if (c.is_kasner()) {
    if (!c.dt) domain("evolve.dt", "exact evolution exists only on the Minkowski torus; give a step for kasner");
    if (!(c.start_time() > 0.0) || !(c.t1 > 0.0)) domain("evolve.t0", "Kasner times must be positive");
  }
  const double lo = std::min(c.start_time(), c.t1), hi = std::max(c.start_time(), c.t1);
  for (double s : c.samples) {
    if (s < lo || s > hi) domain("evolve.samples", "sample time " + format_real(s) + " outside [t0, t1]");
  }
  if (c.J < 0 || c.J > 7) domain("evolve.J", "must lie in [0, 7]");
  if (c.out_dir.empty()) domain("output.dir", "must not be empty");
  if (!(c.tol_gauge > 0.0)) domain("tolerance.gauge", "must be positive");
  if (!(c.tol_constraint > 0.0)) domain("tolerance.constraint", "must be positive");
}

RunConfig parse_config(const std::string& text, const std::filesystem::path& base_dir) {
  RunConfig c;
  using Setter = std::function<void(const std::string&, int, const std::string&)>;
  const std::map<std::string, Setter> keys{
      {"background.kind", [&](const std::string& v, int, const std::string&) { c.background = v; }},
      {"background.n", [&](const std::string& v, int l, const std::string& k) { c.n = static_cast<int>(to_int(v, l, k)); }},
      {"background.p",
       [&](const std::string& v, int l, const std::string& k) {
         const auto p = to_list(v, l, k);
         if (p.size() != 3) line_error(ErrorCode::ParseError, l, k + ": expected three exponents");
         c.p = {p[0], p[1], p[2]};
       }},
      {"background.lambda", [&](const std::string& v, int l, const std::string& k) { c.lambda = to_double(v, l, k); }},
      {"lattice.nmax", [&](const std::string& v, int l, const std::string& k) { c.nmax = static_cast<int>(to_int(v, l, k)); }},
      {"data.source", [&](const std::string& v, int, const std::string&) { c.source = v; }},
      {"data.generator", [&](const std::string& v, int, const std::string&) { c.generator = v; }},
      {"data.seed",
       [&](const std::string& v, int l, const std::string& k) {
         const auto s = to_int(v, l, k);
         if (s < 0) line_error(ErrorCode::ParseError, l, k + ": seed must be nonnegative");
         c.seed = static_cast<unsigned long long>(s);
       }},
      {"data.amplitude", [&](const std::string& v, int l, const std::string& k) { c.amplitude = to_double(v, l, k); }},
      {"data.decay", [&](const std::string& v, int l, const std::string& k) { c.decay = to_double(v, l, k); }},
      {"data.width", [&](const std::string& v, int l, const std::string& k) { c.width = to_double(v, l, k); }},
      {"data.path", [&](const std::string& v, int, const std::string&) { c.path = v; }},
      {"evolve.t0", [&](const std::string& v, int l, const std::string& k) { c.t0 = to_double(v, l, k); }},
      {"evolve.t1", [&](const std::string& v, int l, const std::string& k) { c.t1 = to_double(v, l, k); }},
      {"evolve.dt",
       [&](const std::string& v, int l, const std::string& k) {
         if (v == "exact") {
           c.dt.reset();
         } else {
           c.dt = to_double(v, l, k);
         }
       }},
      {"evolve.samples", [&](const std::string& v, int l, const std::string& k) { c.samples = to_list(v, l, k); }},
      {"evolve.J", [&](const std::string& v, int l, const std::string& k) { c.J = static_cast<int>(to_int(v, l, k)); }},
      {"evolve.sobolev_k", [&](const std::string& v, int l, const std::string& k) { c.sobolev_k = to_double(v, l, k); }},
      {"output.dir", [&](const std::string& v, int, const std::string&) { c.out_dir = v; }},
      {"tolerance.gauge", [&](const std::string& v, int l, const std::string& k) { c.tol_gauge = to_double(v, l, k); }},
      {"tolerance.constraint",
       [&](const std::string& v, int l, const std::string& k) { c.tol_constraint = to_double(v, l, k); }},
  };
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string::npos) line_error(ErrorCode::ParseError, line, "expected 'section.key = value'");
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    if (key.find('.') == std::string::npos) line_error(ErrorCode::ParseError, line, "key '" + key + "' lacks a section");
    const auto it = keys.find(key);
    if (it == keys.end()) line_error(ErrorCode::UnknownKey, line, "unknown key '" + key + "'");
    if (!seen.insert(key).second) line_error(ErrorCode::ParseError, line, "duplicate key '" + key + "'");
    if (value.empty() && key != "evolve.samples") line_error(ErrorCode::ParseError, line, key + ": missing value");
    it->second(value, line, key);
  }
  validate_config(c, base_dir);
  return c;
}

RunConfig load_config(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) fail(ErrorCode::IoFailure, "cannot open config " + file.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), file.parent_path());
}

std::string save_config(const RunConfig& c) {
  std::ostringstream o;
  o << "background.kind = " << c.background << '\n';
  o << "background.n = " << c.n << '\n';
  o << "background.p = " << join({c.p[0], c.p[1], c.p[2]}) << '\n';
  if (c.lambda) o << "background.lambda = " << format_real(*c.lambda) << '\n';
  o << "lattice.nmax = " << c.nmax << '\n';
  o << "data.source = " << c.source << '\n';
  o << "data.generator = " << c.generator << '\n';
  o << "data.seed = " << c.seed << '\n';
  o << "data.amplitude = " << format_real(c.amplitude) << '\n';
  o << "data.decay = " << format_real(c.decay) << '\n';
  o << "data.width = " << format_real(c.width) << '\n';
  if (!c.path.empty()) o << "data.path = " << c.path << '\n';
  if (c.t0) o << "evolve.t0 = " << format_real(*c.t0) << '\n';
  o << "evolve.t1 = " << format_real(c.t1) << '\n';
  o << "evolve.dt = " << (c.dt ? format_real(*c.dt) : std::string("exact")) << '\n';
  o << "evolve.samples = " << join(c.samples) << '\n';
  o << "evolve.J = " << c.J << '\n';
  o << "evolve.sobolev_k = " << format_real(c.sobolev_k) << '\n';
  o << "output.dir = " << c.out_dir << '\n';
  o << "tolerance.gauge = " << format_real(c.tol_gauge) << '\n';
  o << "tolerance.constraint = " << format_real(c.tol_constraint) << '\n';
  return o.str();
}

}  // namespace linwave::io
