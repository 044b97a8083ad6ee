#include <algorithm>
#include <cmath>

#include "linwave/evolution/cauchy.hpp"
#include "linwave/evolution/diagnostics.hpp"
#include "linwave/evolution/gauge_recovery.hpp"
#include "linwave/io/generators.hpp"
#include "test_support.hpp"

using namespace linwave;
using namespace linwave::evolution;
using geometry::SpacetimeBackground;

namespace {

double state_diff(const Solution& a, const Solution& b, std::size_t i) {
  double d = 0.0, s = 0.0;
  for (std::size_t c = 0; c < a.state(i).size(); ++c) {
    d = std::max(d, std::abs(a.state(i)[c] - b.state(i)[c]));
    s = std::max(s, std::abs(b.state(i)[c]));
  }
  return d / s;
}

}  // namespace

TEST_CASE("sample times") {
  const auto t = resolve_sample_times(0.0, 2.0, {1.5, 0.5, 1.5});
  CHECK(t == std::vector<double>{0.0, 0.5, 1.5, 2.0});
  CHECK_ERROR_CODE(resolve_sample_times(0.0, 1.0, {3.0}), ErrorCode::OutOfRange);
}

TEST_CASE("closed form and RK4 agree on Minkowski") {
  const auto bg = SpacetimeBackground::minkowski(3);
  const auto s = bg.slice(0.0);
  const auto jet = build_cauchy_jet(io::constrained_pair(s, s.lattice(3), {2}), bg);
  EvolveOptions ex{1.0, 0.0, true, {0.5}};
  EvolveOptions rk{1.0, 0.01, false, {0.5}};
  const auto a = evolve(jet, ex), b = evolve(jet, rk);
  REQUIRE(a.times() == b.times());
  CHECK(state_diff(b, a, 2) < 1e-8);
  CHECK(a.sample_index(0.5) == 1);
  CHECK_ERROR_CODE(a.sample_index(0.7), ErrorCode::OutOfRange);
}

TEST_CASE("evolution argument checks") {
  const auto bg = SpacetimeBackground::kasner(geometry::kDefaultKasner);
  const auto s = bg.slice(1.0);
  const auto jet = build_cauchy_jet(io::random_pair(s, s.lattice(1), {1}), bg);
  CHECK_ERROR_CODE(evolve(jet, {2.0, 0.0, true, {}}), ErrorCode::Unsupported);
  CHECK_ERROR_CODE(evolve(jet, {2.0, 0.0, false, {}}), ErrorCode::InvalidArgument);
  CHECK_ERROR_CODE(evolve(jet, {-1.0, 0.01, false, {}}), ErrorCode::DomainViolation);
}

TEST_CASE("constraints and gauge propagate on Kasner") {
  const auto bg = SpacetimeBackground::kasner(geometry::kDefaultKasner);
  const auto s = bg.slice(1.0);
  const auto jet = build_cauchy_jet(io::constrained_pair(s, s.lattice(2), {6}), bg);
  const auto sol = evolve(jet, {1.5, 2e-3, false, {1.25}});
  const auto d = diagnostics(sol, {1.0, 2});
  CHECK(d.max_gauge() < 1e-10);
  CHECK(d.max_constraint() < 1e-10);
  REQUIRE(d.energy.size() == 3);
  CHECK(d.energy[0].size() == 3);
  // backward in time as well
  const auto back = evolve(jet, {0.8, 2e-3, false, {}});
  CHECK(back.times().back() == doctest::Approx(0.8));
  CHECK(diagnostics(back).max_constraint() < 1e-10);
}

TEST_CASE("fourth-order convergence in dt") {
  const auto bg = SpacetimeBackground::kasner(geometry::kDefaultKasner);
  const auto s = bg.slice(1.0);
  const auto jet = build_cauchy_jet(io::constrained_pair(s, s.lattice(2), {3}), bg);
  const auto ref = evolve(jet, {2.0, 0.0025, false, {}});
  const double e1 = state_diff(evolve(jet, {2.0, 0.04, false, {}}), ref, 1);
  const double e2 = state_diff(evolve(jet, {2.0, 0.02, false, {}}), ref, 1);
  CHECK(e1 / e2 > 14.0);
}

TEST_CASE("induced data are recovered at sample times") {
  const auto bg = SpacetimeBackground::minkowski(3);
  const auto s = bg.slice(0.0);
  const auto p = io::constrained_pair(s, s.lattice(2), {1});
  const auto sol = evolve(build_cauchy_jet(p, bg), {2.0, 0.0, true, {}});
  const auto d0 = extract_induced_data(sol, 0.0);
  CHECK((d0.h - p.h).max_abs() < 1e-14);
  CHECK((d0.m - p.m).max_abs() < 1e-14);
}

TEST_CASE("gauge vector recovery") {
  const auto bg = SpacetimeBackground::minkowski(3);
  const auto s = bg.slice(0.0);
  const auto L = s.lattice(3);
  const auto g = io::gauge_pair(s, L, {4});
  const auto sol = evolve(build_cauchy_jet(g.pair, bg), {2.0, 0.0, true, {0.5, 1.0}});
  CHECK(recover_gauge_vector(sol, GaugeSeed{g.N, g.beta}).max_deviation() < 1e-12);

  const auto tt = evolve(build_cauchy_jet(io::standing_wave_pair(s, L), bg), {1.0, 0.0, true, {0.5}});
  const auto r = recover_gauge_vector(tt);
  CHECK(*std::min_element(r.deviation.begin(), r.deviation.end()) > 0.5);
}

TEST_CASE("gauge vector recovery on Kasner") {
  const auto bg = SpacetimeBackground::kasner(geometry::kDefaultKasner);
  const auto s = bg.slice(1.0);
  const auto g = io::gauge_pair(s, s.lattice(2), {9});
  const auto sol = evolve(build_cauchy_jet(g.pair, bg), {1.2, 1e-3, false, {1.1}});
  CHECK(recover_gauge_vector(sol, GaugeSeed{g.N, g.beta}).max_deviation() < 1e-9);
}
