#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "checks/checks.hpp"
#include "linwave/common.hpp"
#include "linwave/constraints/constraints.hpp"
#include "linwave/decomposition/gauge_data.hpp"
#include "linwave/decomposition/moncrief.hpp"
#include "linwave/decomposition/split.hpp"
#include "linwave/evolution/cauchy.hpp"
#include "linwave/evolution/diagnostics.hpp"
#include "linwave/evolution/gauge_recovery.hpp"
#include "linwave/geometry/slice_ops.hpp"
#include "linwave/io/config.hpp"
#include "linwave/io/generators.hpp"
#include "linwave/io/report.hpp"
#include "linwave/io/snapshot.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace linwave;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::vector<double> parse_reals(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, std::string(what) + ": '" + item + "' is not a number");
    }
  }
  if (out.empty()) fail(ErrorCode::ParseError, std::string(what) + ": empty list");
  return out;
}

struct SliceArgs {
  std::string kind = "flat-torus";
  int n = 3;
  std::string p;
  double t = 1.0;
  std::optional<double> lambda;

  void add_to(CLI::App* app) {
    app->add_option("--slice", kind, "flat-torus | kasner | berger")->capture_default_str();
    app->add_option("--n", n, "torus dimension")->capture_default_str();
    app->add_option("--p", p, "Kasner exponents, comma separated");
    app->add_option("--t", t, "Kasner slice time")->capture_default_str();
    app->add_option("--lambda", lambda, "Berger squashing parameter");
  }

  geometry::SliceGeometry build() const {
    switch (geometry::parse_slice_kind(kind)) {
      case geometry::SliceKind::FlatTorus: return geometry::SliceGeometry::flat_torus(n);
      case geometry::SliceKind::Kasner: {
        std::array<double, 3> e = geometry::kDefaultKasner;
        if (!p.empty()) {
          const auto v = parse_reals(p, "--p");
          if (v.size() != 3) fail(ErrorCode::InvalidArgument, "--p needs three exponents");
          e = {v[0], v[1], v[2]};
        }
        return geometry::SliceGeometry::kasner(e, t);
      }
      case geometry::SliceKind::BergerInvariant:
        return lambda ? geometry::SliceGeometry::berger(*lambda) : geometry::SliceGeometry::berger_scalar_flat();
    }
    fail(ErrorCode::InvalidArgument, "unknown slice");
  }

  json describe(const geometry::SliceGeometry& s) const {
    json j{{"kind", s.id()}, {"n", s.dim()}};
    if (s.kind() == geometry::SliceKind::Kasner) {
      j["p"] = s.kasner_exponents();
      j["t"] = s.time();
    }
    if (s.kind() == geometry::SliceKind::BergerInvariant) j["lambda"] = s.berger_lambda();
    return j;
  }
};

json matrix_json(const geometry::RMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (int j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
    rows.push_back(r);
  }
  return rows;
}

json measurement_json(const checks::Measurement& m) {
  return {{"name", m.name}, {"value", m.value}, {"threshold", m.threshold}, {"relation", m.relation}, {"pass", m.pass}};
}

void write_json(const fs::path& p, const json& j) { io::write_text(p, j.dump(2) + "\n"); }

// Manifest written by every subcommand: enough to repeat the run.
void write_manifest(const fs::path& out, const std::string& command, const std::vector<std::string>& argv, json extra) {
  extra["command"] = command;
  extra["arguments"] = argv;
  extra["version"] = linwave::version();
  write_json(out / "manifest.json", extra);
}

io::SnapshotMeta meta_for(const geometry::SliceGeometry& s, double order, std::map<std::string, std::string> params = {}) {
  return {s.id(), order, std::move(params)};
}

void require_slice_lattice(const geometry::SliceGeometry& s, const spectral::SpectralField& f) { s.check_field(f); }

// -- subcommands ------------------------------------------------------------

int cmd_background(const SliceArgs& sa, int nmax, const fs::path& out, const std::vector<std::string>& argv) {
  const auto s = sa.build();
  const auto phi = constraints::phi_background(s, s.is_torus() ? nmax : 0);
  const double residual = std::max(phi.scalar.max_abs(), phi.oneform.max_abs());
  const double ric = std::sqrt((s.ric() * s.frame().Ginv * s.ric() * s.frame().Ginv).trace());
  // vacuum is expected everywhere except on a squashed Berger sphere away from the scalar-flat value
  const bool vacuum = s.kind() != geometry::SliceKind::BergerInvariant || !sa.lambda;
  json results = json::array();
  results.push_back(measurement_json({"phi_residual", residual, 1e-12, "<=", !vacuum || residual <= 1e-12}));
  json report{{"slice", sa.describe(s)},
              {"metric", matrix_json(s.metric())},
              {"second_fundamental_form", matrix_json(s.k())},
              {"ricci", matrix_json(s.ric())},
              {"ricci_norm", ric},
              {"scalar_curvature", s.scal()},
              {"volume", s.volume()},
              {"vacuum_expected", vacuum},
              {"results", results}};
  const bool pass = results[0]["pass"].get<bool>();
  report["pass"] = pass;
  write_json(out / "background.json", report);
  write_manifest(out, "background", argv, {{"pass", pass}});
  std::cout << report.dump(2) << "\n";
  return pass ? kOk : kCheckFailed;
}

int cmd_decompose(const fs::path& input, const SliceArgs& sa, const std::string& part_name, const fs::path& out,
                  const std::vector<std::string>& argv) {
  using namespace decomposition;
  const auto t = Clock::now();
  auto snap = io::read_snapshot(input);
  auto sa2 = sa;
  sa2.n = snap.records.front().lattice().dim();
  const auto s = sa2.build();
  const auto& src = snap.records.front();
  require_slice_lattice(s, src);
  if (src.rank() != spectral::Rank::Sym2) fail(ErrorCode::RankMismatch, "decompose needs a sym2 field");
  const auto part = parse_split_part(part_name);
  const auto d = split_solve(src, part, s);
  const auto kb = kernel_basis(params_for(part, s.dim()), s, 2);
  const auto Lw = geometry::apply_slice_operator(s, geometry::SliceOp::ConformalKilling, d.omega);

  const double gamma_res = part == SplitPart::Position ? d.gamma_position : d.gamma_momentum;
  const bool pass = d.reconstruction <= 1e-10 && gamma_res <= 1e-10;
  const std::map<std::string, std::string> params{{"source", input.string()}, {"part", to_string(part)}};
  io::write_snapshot(out / "gamma.lwf", d.gamma_part, meta_for(s, snap.meta.sobolev_order, params));
  io::write_snapshot(out / "omega.lwf", d.omega, meta_for(s, snap.meta.sobolev_order + 1.0, params));
  io::write_snapshot(out / "phi.lwf", d.phi, meta_for(s, snap.meta.sobolev_order, params));
  io::write_snapshot(out / "lie_omega.lwf", Lw, meta_for(s, snap.meta.sobolev_order, params));
  json report{{"part", to_string(part)},
              {"slice", sa2.describe(s)},
              {"C", d.C},
              {"residuals",
               {{"reconstruction", d.reconstruction},
                {"solve", d.solve_residual},
                {"gamma_position", d.gamma_position},
                {"gamma_momentum", d.gamma_momentum}}},
              {"kernel_dims", {{"kernel", kb.dimension}, {"adjoint_kernel", kb.adjoint_dimension}}},
              {"pass", pass}};
  write_json(out / "report.json", report);
  write_manifest(out, "decompose", argv, {{"pass", pass}, {"seconds", seconds_since(t)}});
  std::cout << report.dump(2) << "\n";
  return pass ? kOk : kCheckFailed;
}

constraints::InitialDataPair load_pair(const fs::path& input, const SliceArgs& sa, SliceArgs& resolved) {
  auto snap = io::read_snapshot(input);
  if (snap.records.size() != 2) fail(ErrorCode::CountMismatch, "expected a pair snapshot with two records");
  resolved = sa;
  resolved.n = snap.records[0].lattice().dim();
  const auto s = resolved.build();
  constraints::InitialDataPair p(std::move(snap.records[0]), std::move(snap.records[1]), s, snap.meta.sobolev_order);
  p.validate();
  return p;
}

int cmd_moncrief(const fs::path& input, const SliceArgs& sa, const fs::path& out, const std::vector<std::string>& argv) {
  using namespace decomposition;
  const auto t = Clock::now();
  SliceArgs sa2;
  const auto pair = load_pair(input, sa, sa2);
  const auto& s = pair.slice;
  const auto ms = moncrief_project(pair);
  const bool pass = ms.adjoint_residual <= 1e-10 && ms.orthogonality <= 1e-10 && ms.reconstruction <= 1e-10;
  const auto meta = meta_for(s, pair.sobolev_order, {{"source", input.string()}});
  io::write_pair_snapshot(out / "gauge.lwf", ms.gauge_h, ms.gauge_m, meta);
  io::write_pair_snapshot(out / "gamma.lwf", ms.gamma_h, ms.gamma_m, meta);
  io::write_snapshot(out / "N.lwf", ms.N, meta);
  io::write_snapshot(out / "beta.lwf", ms.beta, meta);
  json report{{"slice", sa2.describe(s)},
              {"residuals",
               {{"reconstruction", ms.reconstruction},
                {"adjoint", ms.adjoint_residual},
                {"orthogonality", ms.orthogonality}}},
              {"pass", pass}};
  write_json(out / "report.json", report);
  write_manifest(out, "moncrief", argv, {{"pass", pass}, {"seconds", seconds_since(t)}});
  std::cout << report.dump(2) << "\n";
  return pass ? kOk : kCheckFailed;
}

int cmd_gauge_data(const SliceArgs& sa, int nmax, std::uint64_t seed, const fs::path& out,
                   const std::vector<std::string>& argv) {
  const auto s = sa.build();
  const auto g = io::gauge_pair(s, s.lattice(nmax), {seed});
  const auto r = constraints::dphi(g.pair);
  const double scale = std::sqrt(geometry::slice_inner(s, g.pair.h, g.pair.h) + geometry::slice_inner(s, g.pair.m, g.pair.m));
  const double rel = scale > 0.0 ? r.max_norm() / scale : r.max_norm();
  const bool pass = rel <= 1e-8;
  const auto meta = meta_for(s, 0.0, {{"generator", "gauge"}, {"seed", std::to_string(seed)}});
  io::write_pair_snapshot(out / "pair.lwf", g.pair.h, g.pair.m, meta);
  io::write_snapshot(out / "N.lwf", g.N, meta);
  io::write_snapshot(out / "beta.lwf", g.beta, meta);
  json report{{"slice", sa.describe(s)},
              {"nmax", s.lattice(nmax).nmax()},
              {"seed", seed},
              {"results", json::array({measurement_json({"constraint_residual", rel, 1e-8, "<=", pass})})},
              {"pass", pass}};
  write_json(out / "report.json", report);
  write_manifest(out, "gauge-data", argv, {{"pass", pass}});
  std::cout << report.dump(2) << "\n";
  return pass ? kOk : kCheckFailed;
}

geometry::SpacetimeBackground spacetime_of(const io::RunConfig& c) {
  if (c.background == "kasner") return geometry::SpacetimeBackground::kasner(c.p);
  if (c.background == "minkowski-torus" || c.background == "flat-torus") {
    return geometry::SpacetimeBackground::minkowski(c.n);
  }
  fail(ErrorCode::Unsupported, "evolution runs on minkowski-torus or kasner, not '" + c.background + "'");
}

int cmd_evolve(const fs::path& config_path, const std::optional<fs::path>& out_override,
               const std::vector<std::string>& argv) {
  const auto t_start = Clock::now();
  const auto c = io::load_config(config_path);
  const fs::path out = out_override ? *out_override : fs::path(c.out_dir);
  const auto st = spacetime_of(c);
  const double t0 = c.start_time();
  const auto slice = st.slice(t0);
  const auto L = slice.lattice(c.nmax);

  std::optional<io::GaugePair> gauge;
  std::optional<constraints::InitialDataPair> pair;
  const io::GeneratorParams gp{c.seed, c.amplitude, c.decay, c.width};
  if (c.source == "snapshot") {
    SliceArgs sa, resolved;
    sa.kind = slice.id();
    sa.n = c.n;
    sa.t = t0;
    pair = load_pair(config_path.parent_path() / c.path, sa, resolved);
    if (resolved.kind == "kasner") {
      pair.emplace(pair->h, pair->m, slice, pair->sobolev_order);
    }
  } else if (c.generator == "gauge") {
    gauge = io::gauge_pair(slice, L, gp);
    pair = gauge->pair;
  } else {
    pair = io::generate_pair(c.generator, slice, L, gp);
  }

  evolution::EvolveOptions eo;
  eo.t_end = c.t1;
  eo.exact = !c.dt;
  eo.dt = c.dt.value_or(0.0);
  eo.sample_times = c.samples;
  const auto t_evolve = Clock::now();
  const auto sol = evolution::evolve(evolution::build_cauchy_jet(*pair, st, t0), eo);
  const double evolve_seconds = seconds_since(t_evolve);
  const auto diag = evolution::diagnostics(sol, {c.sobolev_k, c.J});

  io::write_text(out / "diagnostics.csv", io::diagnostics_csv(diag));
  json snapshots = json::array();
  for (std::size_t i = 0; i < sol.times().size(); ++i) {
    const double tau = sol.times()[i];
    const auto d = evolution::extract_induced_data(sol, tau);
    char name[64];
    std::snprintf(name, sizeof name, "snapshots/pair_%04zu.lwf", i);
    io::write_pair_snapshot(out / name, d.h, d.m, meta_for(d.slice, pair->sobolev_order, {{"t", io::format_real(tau)}}));
    snapshots.push_back({{"file", name}, {"t", tau}});
  }

  // propagation checks apply when the initial data satisfy the constraints
  const bool constrained = diag.gauge_res.front() <= c.tol_gauge &&
                           std::max(diag.dphi1_res.front(), diag.dphi2_res.front()) <= c.tol_constraint;
  json results = json::array();
  bool pass = true;
  if (constrained) {
    const checks::Measurement g{"max_gauge_residual", diag.max_gauge(), c.tol_gauge, "<=", diag.max_gauge() <= c.tol_gauge};
    const checks::Measurement k{"max_constraint_residual", diag.max_constraint(), c.tol_constraint, "<=",
                                diag.max_constraint() <= c.tol_constraint};
    results.push_back(measurement_json(g));
    results.push_back(measurement_json(k));
    pass = g.pass && k.pass;
  }
  if (gauge) {
    const auto rec = evolution::recover_gauge_vector(sol, evolution::GaugeSeed{gauge->N, gauge->beta});
    const checks::Measurement m{"gauge_recovery_deviation", rec.max_deviation(), 1e-9, "<=", rec.max_deviation() <= 1e-9};
    results.push_back(measurement_json(m));
    pass = pass && m.pass;
  }

  io::write_text(out / "config.txt", io::save_config(c));
  json manifest{
      {"background", {{"kind", st.id()}, {"n", st.n()}}},
      {"lattice", {{"n", L.dim()}, {"nmax", L.nmax()}, {"modes", L.size()}}},
      {"dt", c.dt ? json(*c.dt) : json("exact")},
      {"t0", t0},
      {"t1", c.t1},
      {"sample_times", sol.times()},
      {"data",
       {{"source", c.source},
        {"generator", c.generator},
        {"path", c.path},
        {"amplitude", c.amplitude},
        {"decay", c.decay},
        {"width", c.width}}},
      {"seeds", {c.seed}},
      {"tolerances", {{"gauge", c.tol_gauge}, {"constraint", c.tol_constraint}}},
      {"energy", {{"J", c.J}, {"sobolev_k", c.sobolev_k}}},
      {"config", io::save_config(c)},
      {"snapshots", snapshots},
      {"checks_applied", constrained || gauge.has_value()},
      {"results", results},
      {"pass", pass},
      {"timings", {{"evolve_seconds", evolve_seconds}, {"total_seconds", seconds_since(t_start)}}},
  };
  if (st.kind() == geometry::SpacetimeKind::Kasner) manifest["background"]["p"] = c.p;
  write_manifest(out, "evolve", argv, manifest);
  std::cout << json{{"results", results}, {"pass", pass}, {"out", out.string()}}.dump(2) << "\n";
  return pass ? kOk : kCheckFailed;
}

json suite_json(const checks::SuiteReport& r) {
  json res = json::array();
  for (const auto& m : r.results) res.push_back(measurement_json(m));
  return {{"suite", r.suite}, {"background", r.background}, {"results", res}, {"pass", r.pass()}};
}

int cmd_check(const std::string& suite, const std::string& background, const checks::SuiteOptions& o,
              const std::optional<fs::path>& out, const std::vector<std::string>& argv) {
  const auto t = Clock::now();
  json report;
  bool pass = true;
  if (background == "all") {
    json res = json::array();
    for (const auto& bg : checks::suite_backgrounds(suite)) {
      const auto r = checks::run_suite(suite, bg, o);
      for (const auto& m : r.results) {
        auto j = measurement_json(m);
        j["background"] = bg;
        res.push_back(j);
      }
      pass = pass && r.pass();
    }
    report = {{"suite", suite}, {"background", "all"}, {"results", res}, {"pass", pass}};
  } else {
    const auto r = checks::run_suite(suite, background, o);
    report = suite_json(r);
    pass = r.pass();
  }
  std::cout << report.dump(2) << "\n";
  if (out) {
    write_json(*out / "report.json", report);
    write_manifest(*out, "check", argv,
                   {{"suite", suite},
                    {"background", background},
                    {"nmax", o.nmax},
                    {"seeds", {o.seed}},
                    {"trials", o.trials},
                    {"pass", pass},
                    {"seconds", seconds_since(t)}});
  }
  return pass ? kOk : kCheckFailed;
}

int cmd_spectrum(const std::string& generator, int order, const std::string& sobolev_text,
                 const std::string& truncations_text, const std::optional<fs::path>& out,
                 const std::vector<std::string>& argv) {
  if (generator != "dirac-derivative") fail(ErrorCode::InvalidArgument, "unknown generator '" + generator + "'");
  const auto sob = parse_reals(sobolev_text, "--sobolev");
  std::vector<int> trunc;
  for (double v : parse_reals(truncations_text, "--truncations")) {
    if (v != std::floor(v) || v < 1) fail(ErrorCode::InvalidArgument, "--truncations must be positive integers");
    trunc.push_back(static_cast<int>(v));
  }
  const auto rows = checks::dirac_spectrum(order, sob, trunc);

  std::ostringstream table;
  table << "# squared truncated Sobolev norms of the order-" << order << " derivative of a point mass\n";
  table << "nmax";
  for (double s : sob) table << ",s=" << io::format_real(s);
  table << "\n";
  json jrows = json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    table << rows[i].truncation;
    json norms = json::object();
    for (std::size_t k = 0; k < sob.size(); ++k) {
      table << "," << io::format_real(rows[i].norm_sq[k]);
      norms[io::format_real(sob[k])] = rows[i].norm_sq[k];
    }
    table << "\n";
    jrows.push_back({{"truncation", rows[i].truncation}, {"norm_sq", norms}});
  }
  // per order: growth of the squared norm per step and the increment ratio
  json trends = json::object();
  for (std::size_t k = 0; k < sob.size(); ++k) {
    json growth = json::array(), increments = json::array();
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
      growth.push_back(rows[i + 1].norm_sq[k] / rows[i].norm_sq[k]);
      increments.push_back(rows[i + 1].norm_sq[k] - rows[i].norm_sq[k]);
    }
    trends[io::format_real(sob[k])] = {{"growth", growth}, {"increments", increments}};
  }
  json report{{"generator", generator}, {"order", order}, {"sobolev", sob}, {"rows", jrows}, {"trends", trends}};
  std::cout << table.str();
  if (out) {
    io::write_text(*out / "spectrum.csv", table.str());
    write_json(*out / "spectrum.json", report);
    write_manifest(*out, "spectrum", argv, {{"generator", generator}, {"order", order}});
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  CLI::App app{"Linearised Einstein gauge and constraint toolkit"};
  app.set_version_flag("--version", std::string(linwave::version()));
  app.require_subcommand(1);

  SliceArgs slice;
  int nmax = 8;
  std::uint64_t seed = 1;
  std::string out, input, part = "position", config, suite, background = "all";
  std::optional<std::string> out_opt;
  checks::SuiteOptions so;
  std::string generator = "dirac-derivative", sobolev = "-3,-2", truncations = "64,128,256";
  int order = 2;

  auto* bg = app.add_subcommand("background", "background invariants and constraint residual of a slice");
  slice.add_to(bg);
  bg->add_option("--nmax", nmax, "lattice truncation")->capture_default_str();
  bg->add_option("--out", out, "output directory")->required();

  auto* dec = app.add_subcommand("decompose", "split a sym2 snapshot into gauge-fixed, gauge and conformal parts");
  dec->add_option("--input", input, "sym2 snapshot")->required()->check(CLI::ExistingFile);
  slice.add_to(dec);
  dec->add_option("--part", part, "position | momentum")->capture_default_str();
  dec->add_option("--out", out, "output directory")->required();

  auto* mon = app.add_subcommand("moncrief", "split a data pair into gauge image and adjoint kernel");
  mon->add_option("--input", input, "pair snapshot")->required()->check(CLI::ExistingFile);
  slice.add_to(mon);
  mon->add_option("--out", out, "output directory")->required();

  auto* gd = app.add_subcommand("gauge-data", "random gauge-producing initial data");
  slice.add_to(gd);
  gd->add_option("--nmax", nmax, "lattice truncation")->capture_default_str();
  gd->add_option("--seed", seed, "random seed")->capture_default_str();
  gd->add_option("--out", out, "output directory")->required();

  auto* ev = app.add_subcommand("evolve", "evolve initial data described by a config file");
  ev->add_option("--config", config, "run configuration")->required()->check(CLI::ExistingFile);
  ev->add_option("--out", out_opt, "output directory (overrides output.dir)");

  auto* ck = app.add_subcommand("check", "run a verification suite and print a JSON report");
  ck->add_option("--suite", suite, "suite name")->required();
  ck->add_option("--background", background, "background, or all")->capture_default_str();
  ck->add_option("--nmax", so.nmax, "lattice truncation")->capture_default_str();
  ck->add_option("--seed", so.seed, "random seed")->capture_default_str();
  ck->add_option("--trials", so.trials, "random trials")->capture_default_str();
  ck->add_option("--out", out_opt, "output directory");

  auto* sp = app.add_subcommand("spectrum", "truncated Sobolev norms of distributional data");
  sp->add_option("--generator", generator, "dirac-derivative")->capture_default_str();
  sp->add_option("--order", order, "derivative order")->capture_default_str();
  sp->add_option("--sobolev", sobolev, "comma separated Sobolev orders")->capture_default_str()->allow_extra_args(false);
  sp->add_option("--truncations", truncations, "comma separated truncations")->capture_default_str();
  sp->add_option("--out", out_opt, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (*bg) return cmd_background(slice, nmax, out, args);
    if (*dec) return cmd_decompose(input, slice, part, out, args);
    if (*mon) return cmd_moncrief(input, slice, out, args);
    if (*gd) return cmd_gauge_data(slice, nmax, seed, out, args);
    if (*ev) return cmd_evolve(config, out_opt ? std::optional<fs::path>(*out_opt) : std::nullopt, args);
    if (*ck) {
      return cmd_check(suite, background, so, out_opt ? std::optional<fs::path>(*out_opt) : std::nullopt, args);
    }
    if (*sp) {
      return cmd_spectrum(generator, order, sobolev, truncations,
                          out_opt ? std::optional<fs::path>(*out_opt) : std::nullopt, args);
    }
  } catch (const linwave::Error& e) {
    std::cerr << "error (" << linwave::to_string(e.code()) << "): " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
