#include <cmath>
#include <numbers>

#include "linwave/io/generators.hpp"
#include "linwave/spectral/distribution.hpp"
#include "linwave/spectral/sobolev.hpp"
#include "linwave/spectral/transform.hpp"
#include "test_support.hpp"

using namespace linwave;
using namespace linwave::spectral;

TEST_CASE("lattice ordering and mirrors") {
  const ModeLattice L(3, 2);
  CHECK(L.size() == 125);
  CHECK(L.mode(0) == std::array<int, 3>{-2, -2, -2});
  CHECK(L.mode(L.zero_mode()) == std::array<int, 3>{0, 0, 0});
  for (std::size_t i = 0; i < L.size(); ++i) {
    const auto k = L.mode(i);
    const auto m = L.mode(L.mirror(i));
    for (int a = 0; a < 3; ++a) CHECK(m[a] == -k[a]);
    CHECK(L.index(std::span<const int>(k.data(), 3)) == i);
  }
  CHECK(L.mode(1)[2] == -1);  // last axis varies fastest
}

TEST_CASE("sym2 packing") {
  for (int n : {2, 3, 4}) {
    for (int c = 0; c < component_count(Rank::Sym2, n); ++c) {
      const auto p = sym_pair(c, n);
      CHECK(sym_index(p[0], p[1], n) == c);
      CHECK(sym_index(p[1], p[0], n) == c);
    }
  }
  CHECK(component_count(Rank::OneForm, 3) == 3);
  CHECK(flat_component_weight(Rank::Sym2, 3, sym_index(0, 1, 3)) == 2.0);
  CHECK(flat_component_weight(Rank::Sym2, 3, sym_index(1, 1, 3)) == 1.0);
}

TEST_CASE("analyze inverts synthesize on resolving grids") {
  const ModeLattice L(2, 4);
  const auto f = io::random_field(L, Rank::Sym2, 11);
  for (int grid : {9, 12, 16}) {
    const auto back = analyze(synthesize(f, grid), L);
    CHECK((back - f).max_abs() < 1e-13);
  }
  CHECK_ERROR_CODE(analyze(synthesize(f, 9), ModeLattice(2, 5)), ErrorCode::GridTooSmall);
}

TEST_CASE("point evaluation matches the grid") {
  const ModeLattice L(3, 2);
  const auto f = io::random_field(L, Rank::Scalar, 3);
  const auto g = synthesize(f, 5);
  const double h = 2.0 * std::numbers::pi / 5;
  const std::array<double, 3> x{2 * h, 0.0, 4 * h};
  const auto v = evaluate(f, x);
  CHECK(v[0] == doctest::Approx(g.values[(2 * 5 + 0) * 5 + 4]).epsilon(1e-12));
}

TEST_CASE("grid and spectral inner products agree") {
  const ModeLattice L(3, 2);
  const auto a = io::random_field(L, Rank::Sym2, 1);
  const auto b = io::random_field(L, Rank::Sym2, 2);
  CHECK(grid_inner(synthesize(a, 7), synthesize(b, 7)) == doctest::Approx(l2_inner(a, b)).epsilon(1e-12));
}

TEST_CASE("Sobolev norm of a single mode") {
  const ModeLattice L(3, 3);
  SpectralField f(L, Rank::Scalar);
  const std::array<int, 3> k{1, 2, 0}, mk{-1, -2, 0};
  f.coeff(L.index(k), 0) = 0.5;
  f.coeff(L.index(mk), 0) = 0.5;
  const double vol = std::pow(2 * std::numbers::pi, 3);
  for (double s : {-2.0, 0.0, 1.5}) {
    CHECK(sobolev_norm_sq(f, s) == doctest::Approx(vol * 0.5 * std::pow(6.0, s)).epsilon(1e-13));
  }
  CHECK(sobolev_norm(f, 0.0, 0) == 0.0);
  CHECK(f.is_hermitian());
}

TEST_CASE("Hermitian symmetrization") {
  const ModeLattice L(2, 2);
  SpectralField f(L, Rank::Scalar);
  f.coeff(0, 0) = cplx(1.0, 1.0);
  CHECK_FALSE(f.is_hermitian());
  f.symmetrize();
  CHECK(f.is_hermitian());
  CHECK_ERROR_CODE(synthesize(SpectralField(L, Rank::Scalar, std::vector<cplx>(L.size(), cplx(0, 1))), 5),
                   ErrorCode::SymmetryViolated);
}

TEST_CASE("line distribution norms") {
  LineDistribution d;
  d.order = 2;
  const ModeLattice L(3, 6);
  const auto f = d.on_lattice(L);
  for (double s : {-3.0, -2.0, -1.0}) {
    CHECK(d.truncated_norm_sq(s, 6) == doctest::Approx(sobolev_norm_sq(f, s)).epsilon(1e-12));
  }
  // order-2 derivative of a point mass: s = -3 converges, s = -2 grows linearly
  const double a = d.truncated_norm_sq(-3.0, 1000), b = d.truncated_norm_sq(-3.0, 2000);
  CHECK(std::abs(b - a) < 1e-3 * a);
  CHECK(d.truncated_norm_sq(-2.0, 2000) / d.truncated_norm_sq(-2.0, 1000) == doctest::Approx(2.0).epsilon(0.01));
}
