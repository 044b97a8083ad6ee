#include <cmath>

#include "linwave/decomposition/moncrief.hpp"
#include "linwave/decomposition/split.hpp"
#include "linwave/geometry/slice_ops.hpp"
#include "linwave/io/generators.hpp"
#include "test_support.hpp"

using namespace linwave;
using namespace linwave::decomposition;
using spectral::Rank;

TEST_CASE("split parameters") {
  const auto pos = SplitOperatorParams::position(3);
  CHECK(pos.a() == doctest::Approx(-1.0 / 3.0));
  CHECK(pos.b() == -2.0);
  const auto mom = SplitOperatorParams::momentum(3);
  CHECK(mom.a() * mom.b() == doctest::Approx(4.0 / 3.0));
  CHECK_ERROR_CODE(SplitOperatorParams(1.0, 2.0), ErrorCode::DomainViolation);
  CHECK_ERROR_CODE(SplitOperatorParams(-1.0, 1.0), ErrorCode::DomainViolation);
  CHECK_ERROR_CODE(parse_split_part("velocity"), ErrorCode::InvalidArgument);
}

TEST_CASE("split reconstructs and lands in the gauge-fixed space") {
  for (const auto& s : {SliceGeometry::flat_torus(3), SliceGeometry::berger_scalar_flat()}) {
    const auto L = s.lattice(4);
    const auto a = io::random_field(L, Rank::Sym2, 21);
    for (auto part : {SplitPart::Position, SplitPart::Momentum}) {
      const auto d = split_solve(a, part, s);
      CHECK(d.reconstruction < 1e-12);
      CHECK(geometry::slice_norm(s, reassemble(d, s) - a) < 1e-12 * geometry::slice_norm(s, a));
      CHECK((part == SplitPart::Position ? d.gamma_position : d.gamma_momentum) < 1e-12);
      const auto again = split_solve(d.gamma_part, part, s);
      CHECK(geometry::slice_norm(s, again.gamma_part - d.gamma_part) < 1e-12 * geometry::slice_norm(s, a));
    }
  }
}

TEST_CASE("Ricci direction on the Berger sphere") {
  const auto s = SliceGeometry::berger_scalar_flat();
  const auto L = s.lattice(0);
  for (auto part : {SplitPart::Position, SplitPart::Momentum}) {
    CHECK(split_solve(s.ric_field(L), part, s).C == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(ricci_coefficient(s.metric_field(L), s) == doctest::Approx(0.0));
}

TEST_CASE("split needs a scalar-flat static slice") {
  const auto s = SliceGeometry::kasner(geometry::kDefaultKasner, 1.0);
  CHECK_ERROR_CODE(split_solve(io::random_field(s.lattice(2), Rank::Sym2, 1), SplitPart::Position, s),
                   ErrorCode::Unsupported);
}

TEST_CASE("kernel dimensions") {
  for (auto part : {SplitPart::Position, SplitPart::Momentum}) {
    const auto t = kernel_basis(params_for(part, 3), SliceGeometry::flat_torus(3));
    CHECK(t.dimension == 4);
    CHECK(t.adjoint_dimension == 4);
    const auto b = kernel_basis(params_for(part, 3), SliceGeometry::berger_scalar_flat());
    CHECK(b.dimension == 2);
    CHECK(b.adjoint_dimension == 2);
    for (const auto& v : b.basis) {
      const auto r = split_operator_apply(params_for(part, 3), v.scalar, v.oneform, SliceGeometry::berger_scalar_flat());
      CHECK(std::max(r.scalar.max_abs(), r.oneform.max_abs()) < 1e-12);
    }
  }
}

TEST_CASE("Moncrief projection") {
  for (const auto& s : {SliceGeometry::flat_torus(3), SliceGeometry::berger_scalar_flat()}) {
    const auto L = s.lattice(3);
    const auto p = io::random_pair(s, L, {4});
    const auto m = moncrief_project(p);
    CHECK(m.reconstruction < 1e-12);
    CHECK(m.adjoint_residual < 1e-12);
    CHECK(m.orthogonality < 1e-12);
    const auto g = io::gauge_pair(s, L, {5});
    const auto mg = moncrief_project(g.pair);
    CHECK(std::max(mg.gamma_h.max_abs(), mg.gamma_m.max_abs()) < 1e-12 * (1 + g.pair.h.max_abs()));
  }
}
