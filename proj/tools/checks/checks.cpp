#include "checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>

#include "linwave/constraints/identities.hpp"
#include "linwave/constraints/oracle.hpp"
#include "linwave/decomposition/gauge_data.hpp"
#include "linwave/decomposition/moncrief.hpp"
#include "linwave/decomposition/split.hpp"
#include "linwave/evolution/cauchy.hpp"
#include "linwave/evolution/diagnostics.hpp"
#include "linwave/evolution/gauge_recovery.hpp"
#include "linwave/geometry/slice_ops.hpp"
#include "linwave/io/generators.hpp"
#include "linwave/spectral/distribution.hpp"
#include "linwave/spectral/sobolev.hpp"
#include "linwave/spectral/transform.hpp"

namespace linwave::checks {

using constraints::InitialDataPair;
using geometry::SliceGeometry;
using geometry::SpacetimeBackground;
using spectral::ModeLattice;
using spectral::Rank;
using spectral::SpectralField;

namespace {

Measurement at_most(std::string name, double v, double tol) {
  return {std::move(name), v, tol, "<=", v <= tol};
}
Measurement at_least(std::string name, double v, double tol) {
  return {std::move(name), v, tol, ">=", v >= tol};
}
Measurement equals(std::string name, double v, double expected) {
  return {std::move(name), v, expected, "==", v == expected};
}

double safe_ratio(double a, double b) { return b > 0.0 ? a / b : a; }

std::string canonical(const std::string& bg) { return bg == "minkowski-torus" ? "flat-torus" : bg; }

SliceGeometry slice_for(const std::string& bg) {
  if (bg == "flat-torus") return SliceGeometry::flat_torus(3);
  if (bg == "kasner") return SliceGeometry::kasner(geometry::kDefaultKasner, 1.0);
  if (bg == "berger") return SliceGeometry::berger_scalar_flat();
  fail(ErrorCode::InvalidArgument, "no slice named '" + bg + "'");
}

SpacetimeBackground spacetime_for(const std::string& bg) {
  if (bg == "flat-torus") return SpacetimeBackground::minkowski(3);
  if (bg == "kasner") return SpacetimeBackground::kasner(geometry::kDefaultKasner);
  fail(ErrorCode::InvalidArgument, "no spacetime named '" + bg + "'");
}

double pair_norm(const SliceGeometry& s, const SpectralField& h, const SpectralField& m) {
  return std::sqrt(geometry::slice_inner(s, h, h) + geometry::slice_inner(s, m, m));
}

double field_max(const constraints::ConstraintFields& f) { return std::max(f.scalar.max_abs(), f.oneform.max_abs()); }

// -- background ------------------------------------------------------------

void suite_background(const std::string& bg, const SuiteOptions& o, SuiteReport& r) {
  if (bg == "flat-torus") {
    for (int n : {2, 3}) {
      r.results.push_back(at_most("phi_residual_n" + std::to_string(n),
                                  field_max(constraints::phi_background(SliceGeometry::flat_torus(n), o.nmax)), 1e-12));
    }
  } else if (bg == "kasner") {
    for (double t : {1.0, 1.7}) {
      const auto s = SliceGeometry::kasner(geometry::kDefaultKasner, t);
      r.results.push_back(at_most("phi_residual_t" + std::to_string(t).substr(0, 3),
                                  field_max(constraints::phi_background(s, o.nmax)), 1e-12));
    }
  } else {
    const auto s = SliceGeometry::berger_scalar_flat();
    const double ric = std::sqrt(geometry::contract(s.frame(), s.ric(), geometry::matrix_to_packed(s.ric())).real());
    r.results.push_back(at_most("scalar_curvature", std::abs(s.scal()), 1e-12));
    r.results.push_back(at_least("ricci_norm", ric, 0.1));
    r.results.push_back(at_most("phi_residual", field_max(constraints::phi_background(s)), 1e-12));
  }
}

// -- linearisation vs oracle -----------------------------------------------

void suite_constraints(const std::string& bg, const SuiteOptions& o, SuiteReport& r) {
  const auto s = slice_for(bg);
  const auto L = s.lattice(o.nmax);
  double worst = 0.0;
  for (int i = 0; i < o.trials; ++i) {
    const std::uint64_t seed = o.seed * 1000 + static_cast<std::uint64_t>(i);
    const InitialDataPair p(io::sparse_random_field(L, Rank::Sym2, seed), io::sparse_random_field(L, Rank::Sym2, seed + 500),
                            s);
    const auto a = constraints::dphi(p);
    const auto b = constraints::dphi_oracle(p);
    const double scale = std::max(geometry::slice_norm(s, a.phi1), geometry::slice_norm(s, a.phi2));
    const double dev = std::max(geometry::slice_norm(s, a.phi1 - b.phi1), geometry::slice_norm(s, a.phi2 - b.phi2));
    worst = std::max(worst, safe_ratio(dev, scale));
  }
  r.results.push_back(at_most("dphi_oracle_relative_deviation", worst, 1e-6));
}

// -- normal identities -----------------------------------------------------

void suite_identities(const std::string& bg, const SuiteOptions& o, SuiteReport& r) {
  const auto st = spacetime_for(bg);
  const double t = bg == "kasner" ? 1.3 : 0.0;
  const ModeLattice L(3, std::min(o.nmax, 4));
  double worst = 0.0;
  for (int i = 0; i < o.trials; ++i) {
    const std::uint64_t seed = o.seed * 7919 + static_cast<std::uint64_t>(i) * 13;
    auto jet = geometry::CauchyJet::zeros(st, t, L);
    jet.h_nn = io::random_field(L, Rank::Scalar, seed + 1);
    jet.h_n = io::random_field(L, Rank::OneForm, seed + 2);
    jet.h_s = io::random_field(L, Rank::Sym2, seed + 3);
    jet.dh_nn = io::random_field(L, Rank::Scalar, seed + 4);
    jet.dh_n = io::random_field(L, Rank::OneForm, seed + 5);
    jet.dh_s = io::random_field(L, Rank::Sym2, seed + 6);
    const auto res = constraints::normal_identities(jet);
    worst = std::max(worst, safe_ratio(res.max_residual(), res.scale));
  }
  r.results.push_back(at_most("identity_relative_residual", worst, 1e-8));
}

// -- decomposition ---------------------------------------------------------

void suite_decomposition(const std::string& bg, const SuiteOptions& o, SuiteReport& r) {
  using namespace decomposition;
  const auto s = slice_for(bg);
  const auto L = s.lattice(o.nmax);
  for (SplitPart part : {SplitPart::Position, SplitPart::Momentum}) {
    const std::string tag = std::string("_") + to_string(part);
    double rec = 0.0, idem = 0.0, uniq = 0.0, gam = 0.0;
    for (int i = 0; i < std::max(1, o.trials / 5); ++i) {
      const std::uint64_t seed = o.seed * 31 + static_cast<std::uint64_t>(i);
      const auto a = io::random_field(L, Rank::Sym2, seed);
      const double an = geometry::slice_norm(s, a);
      const auto d = split_solve(a, part, s);
      rec = std::max(rec, d.reconstruction);
      gam = std::max(gam, part == SplitPart::Position ? d.gamma_position : d.gamma_momentum);
      const auto d2 = split_solve(d.gamma_part, part, s);
      idem = std::max(idem, safe_ratio(geometry::slice_norm(s, d2.gamma_part - d.gamma_part), an));
      // shifting by L w0 must leave gamma and phi alone and move omega by w0 up to Killing fields
      const auto w0 = io::random_field(L, Rank::OneForm, seed + 99);
      const auto Lw0 = geometry::apply_slice_operator(s, geometry::SliceOp::ConformalKilling, w0);
      const auto d3 = split_solve(a + Lw0, part, s);
      const auto dw = geometry::apply_slice_operator(s, geometry::SliceOp::ConformalKilling, d3.omega - d.omega) - Lw0;
      uniq = std::max({uniq, safe_ratio(geometry::slice_norm(s, d3.gamma_part - d.gamma_part), an),
                       safe_ratio(geometry::slice_norm(s, d3.phi - d.phi), an), safe_ratio(geometry::slice_norm(s, dw), an),
                       std::abs(d3.C - d.C)});
    }
    r.results.push_back(at_most("reconstruction" + tag, rec, 1e-10));
    r.results.push_back(at_most("idempotence" + tag, idem, 1e-10));
    r.results.push_back(at_most("uniqueness" + tag, uniq, 1e-10));
    r.results.push_back(at_most("gamma_residual" + tag, gam, 1e-10));
    if (bg == "berger") {
      const auto d = split_solve(s.ric_field(L), part, s);
      r.results.push_back(at_most("ricci_coefficient_error" + tag, std::abs(d.C - 1.0), 1e-10));
    }
  }
}

// -- kernels ---------------------------------------------------------------

void suite_kernels(const std::string& bg, const SuiteOptions&, SuiteReport& r) {
  using namespace decomposition;
  const auto s = slice_for(bg);
  const double expected = bg == "berger" ? 2.0 : 4.0;
  for (SplitPart part : {SplitPart::Position, SplitPart::Momentum}) {
    const auto kb = kernel_basis(params_for(part, s.dim()), s, 2);
    const std::string tag = std::string("_") + to_string(part);
    r.results.push_back(equals("kernel_dimension" + tag, kb.dimension, expected));
    r.results.push_back(equals("adjoint_kernel_dimension" + tag, kb.adjoint_dimension, kb.dimension));
  }
}

// -- Moncrief split --------------------------------------------------------

void suite_moncrief(const std::string& bg, const SuiteOptions& o, SuiteReport& r) {
  using namespace decomposition;
  const auto s = slice_for(bg);
  const auto L = s.lattice(o.nmax);
  double adj = 0.0, orth = 0.0, gauge = 0.0, rec = 0.0;
  for (int i = 0; i < o.trials; ++i) {
    const std::uint64_t seed = o.seed * 101 + static_cast<std::uint64_t>(i);
    const auto p = io::random_pair(s, L, {seed});
    const auto ms = moncrief_project(p);
    adj = std::max(adj, ms.adjoint_residual);
    rec = std::max(rec, ms.reconstruction);
    const auto q = moncrief_apply(io::random_field(L, Rank::Scalar, seed + 3), io::random_field(L, Rank::OneForm, seed + 4), s);
    const double ip = geometry::slice_inner(s, q.h, ms.gamma_h) + geometry::slice_inner(s, q.m, ms.gamma_m);
    orth = std::max(orth, safe_ratio(std::abs(ip), pair_norm(s, q.h, q.m) * pair_norm(s, p.h, p.m)));
    const auto g = io::gauge_pair(s, L, {seed + 7});
    const auto mg = moncrief_project(g.pair);
    gauge = std::max(gauge, safe_ratio(pair_norm(s, mg.gamma_h, mg.gamma_m), pair_norm(s, g.pair.h, g.pair.m)));
  }
  r.results.push_back(at_most("adjoint_of_gamma", adj, 1e-10));
  r.results.push_back(at_most("orthogonality_to_image", orth, 1e-10));
  r.results.push_back(at_most("gauge_data_gamma", gauge, 1e-10));
  r.results.push_back(at_most("reconstruction", rec, 1e-10));
}

// -- propagation -----------------------------------------------------------

std::vector<double> grid_times(double a, double b, int count) {
  std::vector<double> t;
  for (int i = 1; i < count; ++i) t.push_back(a + (b - a) * i / count);
  return t;
}

double solution_defect(const evolution::Solution& a, const evolution::Solution& ref) {
  const std::size_t i = a.times().size() - 1;
  auto ds = a.state(i), dr = a.rate(i);
  for (std::size_t c = 0; c < ds.size(); ++c) {
    ds[c] -= ref.state(i)[c];
    dr[c] -= ref.rate(i)[c];
  }
  const int D = a.background().D();
  return std::hypot(evolution::spacetime_sobolev_norm(a.lattice(), D, ds, 1.0),
                    evolution::spacetime_sobolev_norm(a.lattice(), D, dr, 0.0));
}

void suite_propagation(const std::string& bg, const SuiteOptions& o, SuiteReport& r) {
  const auto st = spacetime_for(bg);
  const bool kasner = bg == "kasner";
  const double t0 = kasner ? 1.0 : 0.0, t1 = kasner ? 2.0 : 10.0;
  const auto s = st.slice(t0);
  const auto L = s.lattice(o.nmax);
  const auto pair = io::constrained_pair(s, L, {o.seed});
  const auto jet = evolution::build_cauchy_jet(pair, st);
  evolution::EvolveOptions eo;
  eo.t_end = t1;
  eo.exact = !kasner;
  eo.dt = 1e-3;
  eo.sample_times = grid_times(t0, t1, 10);
  const auto sol = evolution::evolve(jet, eo);
  const auto d = evolution::diagnostics(sol, {1.0, 1});
  const double tol = kasner ? 1e-8 : 1e-12;
  r.results.push_back(at_most("gauge_residual", d.max_gauge(), tol));
  r.results.push_back(at_most("constraint_residual", d.max_constraint(), tol));
  if (kasner) {
    // 4th-order check at a step where the defect sits well above roundoff
    auto run = [&](double dt) {
      evolution::EvolveOptions ro;
      ro.t_end = t1;
      ro.dt = dt;
      return evolution::evolve(jet, ro);
    };
    const double dt = 0.02;
    const auto ref = run(dt / 8);
    const double e1 = solution_defect(run(dt), ref), e2 = solution_defect(run(dt / 2), ref);
    r.results.push_back(at_least("halving_dt_defect_ratio", safe_ratio(e1, e2), 14.0));
  }
}

// -- gauge recovery --------------------------------------------------------

void suite_gauge_recovery(const std::string& bg, const SuiteOptions& o, SuiteReport& r) {
  const auto st = spacetime_for(bg);
  const bool kasner = bg == "kasner";
  const double t0 = kasner ? 1.0 : 0.0, t1 = kasner ? 1.5 : 3.0;
  const auto s = st.slice(t0);
  const auto L = s.lattice(o.nmax);
  evolution::EvolveOptions eo;
  eo.t_end = t1;
  eo.exact = !kasner;
  eo.dt = 1e-3;
  eo.sample_times = grid_times(t0, t1, 6);
  const auto g = io::gauge_pair(s, L, {o.seed});
  const auto sol = evolution::evolve(evolution::build_cauchy_jet(g.pair, st), eo);
  const auto rec = evolution::recover_gauge_vector(sol, evolution::GaugeSeed{g.N, g.beta});
  r.results.push_back(at_most("gauge_data_deviation", rec.max_deviation(), 1e-9));
  if (!kasner) {
    const auto tt = evolution::evolve(evolution::build_cauchy_jet(io::standing_wave_pair(s, L), st), eo);
    const auto rt = evolution::recover_gauge_vector(tt);
    r.results.push_back(
        at_least("standing_wave_deviation", *std::min_element(rt.deviation.begin(), rt.deviation.end()), 0.5));
  }
}

// -- Sobolev spectrum ------------------------------------------------------

void suite_spectrum(const std::string&, const SuiteOptions&, SuiteReport& r) {
  const int order = 2;
  const std::vector<int> N{64, 128, 256, 512};
  const auto rows = dirac_spectrum(order, {-order - 1.0, -double(order)}, N);
  // H^{-n-1}: successive differences shrink like 1/nmax, i.e. halve per doubling
  double lo = 1e300, hi = 0.0;
  for (std::size_t i = 0; i + 2 < rows.size(); ++i) {
    const double d1 = rows[i + 1].norm_sq[0] - rows[i].norm_sq[0];
    const double d2 = rows[i + 2].norm_sq[0] - rows[i + 1].norm_sq[0];
    lo = std::min(lo, d1 / d2);
    hi = std::max(hi, d1 / d2);
  }
  r.results.push_back(at_least("cauchy_difference_ratio_min", lo, 1.8));
  r.results.push_back(at_most("cauchy_difference_ratio_max", hi, 2.2));
  // H^{-n}: squared norms grow linearly, i.e. double per doubling
  double glo = 1e300, ghi = 0.0;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    const double q = rows[i + 1].norm_sq[1] / rows[i].norm_sq[1];
    glo = std::min(glo, q);
    ghi = std::max(ghi, q);
  }
  r.results.push_back(at_least("growth_ratio_min", glo, 1.9));
  r.results.push_back(at_most("growth_ratio_max", ghi, 2.1));
}

// -- finite speed ----------------------------------------------------------

struct MassSamples {
  std::vector<double> r;     // distance from the bump centre
  std::vector<double> mass;  // pointwise |h|^2
};

MassSamples sample_mass(const geometry::CauchyJet& jet, int grid) {
  const int n = jet.lattice().dim();
  const auto nn = spectral::synthesize(jet.h_nn, grid);
  const auto nv = spectral::synthesize(jet.h_n, grid);
  const auto ss = spectral::synthesize(jet.h_s, grid);
  const std::size_t npts = nn.points();
  MassSamples m;
  m.r.resize(npts);
  m.mass.assign(npts, 0.0);
  const double h = 2.0 * std::numbers::pi / grid;
  for (std::size_t p = 0; p < npts; ++p) {
    std::size_t rest = p;
    double r2 = 0.0;
    for (int a = n - 1; a >= 0; --a) {
      const double x = h * static_cast<double>(rest % static_cast<std::size_t>(grid)) - std::numbers::pi;
      rest /= static_cast<std::size_t>(grid);
      r2 += x * x;
    }
    m.r[p] = std::sqrt(r2);
    double v = nn.values[p] * nn.values[p];
    for (int c = 0; c < n; ++c) v += 2.0 * std::pow(nv.values[static_cast<std::size_t>(c) * npts + p], 2);
    for (int c = 0; c < spectral::component_count(Rank::Sym2, n); ++c) {
      v += spectral::flat_component_weight(Rank::Sym2, n, c) * std::pow(ss.values[static_cast<std::size_t>(c) * npts + p], 2);
    }
    m.mass[p] = v;
  }
  return m;
}

void suite_finite_speed(const std::string&, const SuiteOptions&, SuiteReport& r) {
  const int nmax = 32;
  const double T = 1.0;
  const auto st = SpacetimeBackground::minkowski(3);
  const auto s = st.slice(0.0);
  const auto L = s.lattice(nmax);
  const auto pair = io::bump_pair(s, L, 0.3);
  const auto jet = evolution::build_cauchy_jet(pair, st);
  const int grid = L.side();

  // r0: radius holding all but 1e-6 of the initial mass
  const auto m0 = sample_mass(jet, grid);
  std::vector<std::size_t> order(m0.r.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return m0.r[a] < m0.r[b]; });
  double total0 = 0.0;
  for (double v : m0.mass) total0 += v;
  double acc = 0.0, r0 = 0.0;
  for (std::size_t i : order) {
    acc += m0.mass[i];
    r0 = m0.r[i];
    if (acc >= (1.0 - 1e-6) * total0) break;
  }

  evolution::EvolveOptions eo;
  eo.t_end = T;
  eo.exact = true;
  const auto sol = evolution::evolve(jet, eo);
  const auto m1 = sample_mass(sol.jet(sol.times().size() - 1), grid);
  const double R = r0 + T + 5.0 * 2.0 * std::numbers::pi / grid;
  double total = 0.0, outside = 0.0;
  for (std::size_t p = 0; p < m1.mass.size(); ++p) {
    total += m1.mass[p];
    if (m1.r[p] > R) outside += m1.mass[p];
  }
  r.results.push_back(at_most("mass_outside_light_cone", safe_ratio(outside, total), 1e-6));
  r.results.push_back(at_most("cone_radius", R, std::numbers::pi));
}

// -- continuity ------------------------------------------------------------

InitialDataPair truncate(const InitialDataPair& p, int N) {
  auto q = p;
  const auto& L = p.lattice();
  for (std::size_t m = 0; m < L.size(); ++m) {
    const auto k = L.mode(m);
    if (std::max({std::abs(k[0]), std::abs(k[1]), std::abs(k[2])}) <= N) continue;
    for (int c = 0; c < q.h.components(); ++c) {
      q.h.coeff(m, c) = 0.0;
      q.m.coeff(m, c) = 0.0;
    }
  }
  return q;
}

void suite_continuity(const std::string& bg, const SuiteOptions& o, SuiteReport& r) {
  const auto st = spacetime_for(bg);
  const bool kasner = bg == "kasner";
  const double t0 = kasner ? 1.0 : 0.0;
  const double k = 1.0;
  const auto s = st.slice(t0);
  const auto L = s.lattice(kasner ? std::min(o.nmax, 8) : std::max(o.nmax, 16));
  const auto pair = io::constrained_pair(s, L, {o.seed, 1.0, 0.05});
  evolution::EvolveOptions eo;
  eo.t_end = t0 + 1.0;
  eo.exact = !kasner;
  eo.dt = 1e-2;
  auto run = [&](const InitialDataPair& p) { return evolution::evolve(evolution::build_cauchy_jet(p, st), eo); };
  const auto ref = run(pair);
  const int D = st.D();
  double lo = 1e300, hi = 0.0, prev = 0.0, contraction = 0.0;
  for (int N = 2; N < L.nmax(); N *= 2) {
    const auto pn = truncate(pair, N);
    const double data = spectral::sobolev_norm(pn.h - pair.h, k) + spectral::sobolev_norm(pn.m - pair.m, k - 1.0);
    const auto sol = run(pn);
    const std::size_t e = sol.times().size() - 1;
    auto ds = sol.state(e), dr = sol.rate(e);
    for (std::size_t c = 0; c < ds.size(); ++c) {
      ds[c] -= ref.state(e)[c];
      dr[c] -= ref.rate(e)[c];
    }
    const double out = std::hypot(evolution::spacetime_sobolev_norm(L, D, ds, k),
                                  evolution::spacetime_sobolev_norm(L, D, dr, k - 1.0));
    const double ratio = safe_ratio(out, data);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
    if (prev > 0.0) contraction = std::max(contraction, out / prev);
    prev = out;
  }
  r.results.push_back(at_least("solution_to_data_ratio_min", lo, 0.1));
  r.results.push_back(at_most("solution_to_data_ratio_max", hi, 10.0));
  // successive truncations must bring the solution strictly closer
  r.results.push_back(at_most("solution_error_contraction", contraction, 0.9));
}

using SuiteFn = std::function<void(const std::string&, const SuiteOptions&, SuiteReport&)>;

struct SuiteEntry {
  SuiteFn fn;
  std::vector<std::string> backgrounds;
};

const std::map<std::string, SuiteEntry>& registry() {
  static const std::map<std::string, SuiteEntry> r{
      {"background", {suite_background, {"flat-torus", "kasner", "berger"}}},
      {"constraints", {suite_constraints, {"flat-torus", "kasner", "berger"}}},
      {"identities", {suite_identities, {"minkowski-torus", "kasner"}}},
      {"decomposition", {suite_decomposition, {"flat-torus", "berger"}}},
      {"kernels", {suite_kernels, {"flat-torus", "berger"}}},
      {"moncrief", {suite_moncrief, {"flat-torus", "berger"}}},
      {"propagation", {suite_propagation, {"minkowski-torus", "kasner"}}},
      {"gauge-recovery", {suite_gauge_recovery, {"minkowski-torus", "kasner"}}},
      {"spectrum", {suite_spectrum, {"flat-torus"}}},
      {"finite-speed", {suite_finite_speed, {"minkowski-torus"}}},
      {"continuity", {suite_continuity, {"minkowski-torus", "kasner"}}},
  };
  return r;
}

}  // namespace

bool SuiteReport::pass() const {
  return !results.empty() && std::all_of(results.begin(), results.end(), [](const Measurement& m) { return m.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, e] : registry()) v.push_back(k);
    return v;
  }();
  return names;
}

std::vector<std::string> suite_backgrounds(const std::string& suite) {
  const auto it = registry().find(suite);
  if (it == registry().end()) fail(ErrorCode::InvalidArgument, "unknown check suite '" + suite + "'");
  return it->second.backgrounds;
}

SuiteReport run_suite(const std::string& suite, const std::string& background, const SuiteOptions& options) {
  const auto it = registry().find(suite);
  if (it == registry().end()) fail(ErrorCode::InvalidArgument, "unknown check suite '" + suite + "'");
  const auto& bgs = it->second.backgrounds;
  const bool ok = std::any_of(bgs.begin(), bgs.end(), [&](const std::string& b) { return canonical(b) == canonical(background); });
  if (!ok) fail(ErrorCode::InvalidArgument, "suite '" + suite + "' does not run on background '" + background + "'");
  SuiteReport r;
  r.suite = suite;
  r.background = background;
  const auto start = std::chrono::steady_clock::now();
  it->second.fn(canonical(background), options, r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<SpectrumRow> dirac_spectrum(int order, const std::vector<double>& sobolev, const std::vector<int>& truncations) {
  if (order < 0) fail(ErrorCode::InvalidArgument, "derivative order must be nonnegative");
  spectral::LineDistribution dist;
  dist.order = order;
  std::vector<SpectrumRow> rows;
  for (int N : truncations) {
    if (N < 1) fail(ErrorCode::InvalidArgument, "truncations must be positive");
    SpectrumRow row;
    row.truncation = N;
    for (double s : sobolev) row.norm_sq.push_back(dist.truncated_norm_sq(s, N));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace linwave::checks
