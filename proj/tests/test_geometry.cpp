#include <cmath>

#include "linwave/geometry/fd_oracle.hpp"
#include "linwave/geometry/mode_operator.hpp"
#include "linwave/geometry/slice_ops.hpp"
#include "linwave/invariant/frame.hpp"
#include "linwave/invariant/operators.hpp"
#include "linwave/io/generators.hpp"
#include "test_support.hpp"

using namespace linwave;
using namespace linwave::geometry;
using spectral::ModeLattice;
using spectral::Rank;

TEST_CASE("round SU(2) is Einstein") {
  const auto f = invariant::HomogeneousFrame::su2(1, 1, 1);
  CHECK(f.jacobi_defect() == 0.0);
  const auto g = invariant::invariant_geometry(f);
  CHECK((g.ric - 2.0 * Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(g.scal == doctest::Approx(6.0));
  CHECK(invariant::killing_basis(g).cols() == 3);
}

TEST_CASE("Koszul curvature matches Milnor") {
  for (auto l : {std::array<double, 3>{1.0, 2.0, 3.0}, std::array<double, 3>{0.5, 1.0, 1.0}}) {
    const auto g = invariant::invariant_geometry(invariant::HomogeneousFrame::su2(l[0], l[1], l[2]));
    const auto m = invariant::milnor_ricci_diagonal(l[0], l[1], l[2]);
    for (int i = 0; i < 3; ++i) CHECK(g.ric(i, i) == doctest::Approx(m(i)).epsilon(1e-12));
  }
}

TEST_CASE("scalar-flat Berger sphere") {
  const double lam = invariant::berger_scalar_flat_lambda();
  CHECK(lam > 1.0);
  CHECK(std::abs(invariant::berger_scalar_curvature(lam)) < 1e-12);
  const auto s = SliceGeometry::berger_scalar_flat();
  CHECK(s.scalar_flat_static());
  CHECK(s.ric().norm() > 0.1);
  CHECK(invariant::killing_basis(invariant::invariant_geometry(invariant::HomogeneousFrame::berger(lam))).cols() == 1);
  CHECK_ERROR_CODE(SliceGeometry::berger(-1.0), ErrorCode::SingularMetric);
}

TEST_CASE("Kasner exponent validation") {
  CHECK_NOTHROW(validate_kasner(kDefaultKasner));
  CHECK_ERROR_CODE(validate_kasner({0.5, 0.5, 0.5}), ErrorCode::DomainViolation);
  CHECK_ERROR_CODE(SliceGeometry::kasner(kDefaultKasner, 0.0), ErrorCode::DomainViolation);
}

TEST_CASE("L* is the adjoint of L") {
  for (const auto& s : {SliceGeometry::flat_torus(3), SliceGeometry::kasner(kDefaultKasner, 1.4),
                        SliceGeometry::berger_scalar_flat()}) {
    const auto L = s.lattice(3);
    const auto w = io::random_field(L, Rank::OneForm, 5);
    const auto h = io::random_field(L, Rank::Sym2, 6);
    const auto Lw = apply_slice_operator(s, SliceOp::ConformalKilling, w);
    const auto Lsh = apply_slice_operator(s, SliceOp::ConformalKillingAdjoint, h);
    CHECK(slice_inner(s, Lw, h) == doctest::Approx(slice_inner(s, w, Lsh)).epsilon(1e-12));
    const auto LsL = apply_slice_operator(s, SliceOp::ConformalKillingAdjoint, Lw);
    const auto N = apply_slice_operator(s, SliceOp::CklNormal, w);
    CHECK((LsL - N).max_abs() <= 1e-12 * (1.0 + N.max_abs()));
  }
}

TEST_CASE("trace of the Hessian is the Laplacian up to sign") {
  const auto s = SliceGeometry::kasner(kDefaultKasner, 1.2);
  const auto L = s.lattice(3);
  const auto f = io::random_field(L, Rank::Scalar, 9);
  const auto trH = apply_slice_operator(s, SliceOp::Trace, apply_slice_operator(s, SliceOp::Hessian, f));
  const auto lap = apply_slice_operator(s, SliceOp::Laplacian, f);
  CHECK((trH + lap).max_abs() <= 1e-12 * lap.max_abs());
}

TEST_CASE("slice operator lattice checks") {
  const auto s = SliceGeometry::berger_scalar_flat();
  const auto f = io::random_field(ModeLattice(3, 2), Rank::Scalar, 1);
  CHECK_ERROR_CODE(apply_slice_operator(s, SliceOp::Gradient, f), ErrorCode::BackendMismatch);
}

namespace {

// Compare one operator symbol against nested finite differences at x = 0.
double symbol_vs_fd(const SpacetimeBackground& bg, SpacetimeOp op, double t0, const std::array<double, 3>& k) {
  const int D = 4, N = 10;
  const bool sym_in = op != SpacetimeOp::LieOfG;
  const int nin = sym_in ? N : D;
  std::vector<Eigen::VectorXcd> taylor;
  for (int j = 0; j < 3; ++j) {
    Eigen::VectorXcd v(nin);
    for (int c = 0; c < nin; ++c) v(c) = cplx(std::sin(1.0 + c + 3.0 * j), 0.3 * std::cos(2.0 * c - j));
    taylor.push_back(v);
  }
  const auto sym = mode_symbol(bg, op, k, t0);
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(sym.A[0].rows());
  double fact = 1.0;
  for (std::size_t j = 0; j < sym.A.size(); ++j) {
    if (j > 0) fact *= static_cast<double>(j);
    out += sym.A[j] * (fact * taylor[j]);
  }
  const auto g = fd::background_metric(bg);
  const fd::Point p{t0, 0, 0, 0};
  fd::Mat4 ref{};
  if (op == SpacetimeOp::Lichnerowicz) ref = fd::lichnerowicz(g, fd::mode_sym2_field(taylor, t0, k), p);
  if (op == SpacetimeOp::LieOfG) ref = fd::lie_of_oneform(g, fd::mode_oneform_field(taylor, t0, k), p);
  double err = 0.0, scale = 0.0;
  for (int a = 0; a < D; ++a) {
    for (int b = a; b < D; ++b) {
      const double v = out(spectral::sym_index(a, b, D)).real();
      err = std::max(err, std::abs(v - static_cast<double>(ref[a * D + b])));
      scale = std::max(scale, std::abs(v));
    }
  }
  return err / scale;
}

}  // namespace

TEST_CASE("spacetime symbols agree with finite differences") {
  const auto kas = SpacetimeBackground::kasner(kDefaultKasner);
  const auto mink = SpacetimeBackground::minkowski(3);
  CHECK(symbol_vs_fd(kas, SpacetimeOp::Lichnerowicz, 1.3, {1.0, -2.0, 1.0}) < 1e-6);
  CHECK(symbol_vs_fd(kas, SpacetimeOp::LieOfG, 1.3, {0.0, 1.0, 2.0}) < 1e-6);
  CHECK(symbol_vs_fd(mink, SpacetimeOp::Lichnerowicz, 0.0, {1.0, 1.0, 0.0}) < 1e-6);
}

TEST_CASE("quadratic kernel reproduces the dense symbol") {
  const auto bg = SpacetimeBackground::kasner(kDefaultKasner);
  const QuadraticModeKernel q(bg, SpacetimeOp::Lichnerowicz, 1.7);
  const std::array<int, 3> k{3, -1, 2};
  const auto sym = mode_symbol(bg, SpacetimeOp::Lichnerowicz, {3.0, -1.0, 2.0}, 1.7);
  for (int j = 0; j < 3; ++j) CHECK((q.dense(j, k) - sym.A[static_cast<std::size_t>(j)]).norm() < 1e-12 * (1 + sym.A[0].norm()));
}

TEST_CASE("nabla_t and d_t conversions invert each other") {
  const auto bg = SpacetimeBackground::kasner(kDefaultKasner);
  Eigen::VectorXcd h = Eigen::VectorXcd::Random(10), dh = Eigen::VectorXcd::Random(10);
  const auto back = nabla_t_to_dt(bg, 1.5, h, dt_to_nabla_t(bg, 1.5, h, dh));
  CHECK((back - dh).norm() < 1e-14);
  CHECK_ERROR_CODE(bg.jets(-1.0, 1), ErrorCode::DomainViolation);
}
