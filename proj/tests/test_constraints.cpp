#include <cmath>

#include "linwave/constraints/identities.hpp"
#include "linwave/constraints/oracle.hpp"
#include "linwave/decomposition/gauge_data.hpp"
#include "linwave/evolution/cauchy.hpp"
#include "linwave/io/generators.hpp"
#include "test_support.hpp"

using namespace linwave;
using namespace linwave::constraints;
using geometry::SliceGeometry;
using spectral::ModeLattice;
using spectral::Rank;

namespace {

double rel_dphi(const InitialDataPair& p) {
  const auto r = dphi(p);
  const double scale = std::sqrt(geometry::slice_inner(p.slice, p.h, p.h) + geometry::slice_inner(p.slice, p.m, p.m));
  return r.max_norm() / scale;
}

}  // namespace

TEST_CASE("backgrounds solve the constraints") {
  for (const auto& s : {SliceGeometry::flat_torus(2), SliceGeometry::kasner(geometry::kDefaultKasner, 2.5),
                        SliceGeometry::berger_scalar_flat()}) {
    const auto f = phi_background(s, 2);
    CHECK(std::max(f.scalar.max_abs(), f.oneform.max_abs()) <= 1e-12);
  }
  const auto round = SliceGeometry::berger(1.0);
  CHECK(phi_background(round).scalar.max_abs() > 1.0);
}

TEST_CASE("linearisation agrees with finite differences of the constraints") {
  for (const auto& s : {SliceGeometry::flat_torus(3), SliceGeometry::kasner(geometry::kDefaultKasner, 1.0),
                        SliceGeometry::berger_scalar_flat()}) {
    const auto L = s.lattice(3);
    const InitialDataPair p(io::sparse_random_field(L, Rank::Sym2, 4), io::sparse_random_field(L, Rank::Sym2, 5), s);
    const auto a = dphi(p);
    const auto b = dphi_oracle(p);
    const double scale = std::max(geometry::slice_norm(s, a.phi1), geometry::slice_norm(s, a.phi2));
    CHECK(geometry::slice_norm(s, a.phi1 - b.phi1) <= 1e-6 * scale);
    CHECK(geometry::slice_norm(s, a.phi2 - b.phi2) <= 1e-6 * scale);
  }
}

TEST_CASE("projected data satisfy the linearised constraints") {
  const auto s = SliceGeometry::kasner(geometry::kDefaultKasner, 1.3);
  const auto L = s.lattice(3);
  const auto raw = io::random_pair(s, L, {2});
  CHECK(rel_dphi(raw) > 1e-3);
  CHECK(rel_dphi(project_to_constraints(raw)) < 1e-13);
}

TEST_CASE("gauge-producing data are constrained on vacuum slices") {
  for (const auto& s : {SliceGeometry::flat_torus(3), SliceGeometry::kasner(geometry::kDefaultKasner, 1.6),
                        SliceGeometry::berger_scalar_flat()}) {
    const auto g = io::gauge_pair(s, s.lattice(3), {8});
    CHECK(rel_dphi(g.pair) < 1e-12);
  }
}

TEST_CASE("Cauchy jet induces its own data") {
  const auto bg = geometry::SpacetimeBackground::kasner(geometry::kDefaultKasner);
  const auto s = bg.slice(1.2);
  const auto p = io::random_pair(s, s.lattice(2), {3});
  const auto back = induced_data(evolution::build_cauchy_jet(p, bg));
  CHECK((back.h - p.h).max_abs() < 1e-13);
  CHECK((back.m - p.m).max_abs() < 1e-13);
  CHECK_ERROR_CODE(evolution::build_cauchy_jet(p, geometry::SpacetimeBackground::minkowski(3)),
                   ErrorCode::BackendMismatch);
}

TEST_CASE("normal identities of the linearised Ricci tensor") {
  for (const auto& bg :
       {geometry::SpacetimeBackground::minkowski(3), geometry::SpacetimeBackground::kasner(geometry::kDefaultKasner)}) {
    const ModeLattice L(3, 2);
    auto jet = geometry::CauchyJet::zeros(bg, 1.1, L);
    jet.h_nn = io::random_field(L, Rank::Scalar, 1);
    jet.h_n = io::random_field(L, Rank::OneForm, 2);
    jet.h_s = io::random_field(L, Rank::Sym2, 3);
    jet.dh_nn = io::random_field(L, Rank::Scalar, 4);
    jet.dh_n = io::random_field(L, Rank::OneForm, 5);
    jet.dh_s = io::random_field(L, Rank::Sym2, 6);
    const auto r = normal_identities(jet);
    CHECK(r.scale > 0.0);
    CHECK(r.max_residual() <= 1e-10 * r.scale);
  }
}

TEST_CASE("distributional data are rejected by the oracle") {
  const auto s = SliceGeometry::flat_torus(3);
  const auto L = s.lattice(2);
  const InitialDataPair p(io::random_field(L, Rank::Sym2, 1), io::random_field(L, Rank::Sym2, 2), s, -2.0);
  CHECK_ERROR_CODE(dphi_oracle(p), ErrorCode::Unsupported);
}
