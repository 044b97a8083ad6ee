#include "linwave/decomposition/moncrief.hpp"

#include <cmath>

#include "deflated_solve.hpp"
#include "linwave/decomposition/split.hpp"
#include "linwave/geometry/slice_ops.hpp"

namespace linwave::decomposition {

using geometry::CVec;
using spectral::Rank;

namespace {

Eigen::MatrixXcd p_matrix(const SliceGeometry& s, const geometry::Symbol& ik) {
  const int n = s.dim();
  const int ns = n * (n + 1) / 2;
  Eigen::MatrixXcd M(2 * ns, n + 1);
  for (int c = 0; c <= n; ++c) {
    const CVec e = CVec::Unit(n + 1, c);
    M.col(c) = geometry::moncrief_p_mode(s.frame(), ik, s.ric(), e.head(n), e.tail(1));
  }
  return M;
}

}  // namespace

InitialDataPair moncrief_apply(const SpectralField& N, const SpectralField& beta, const SliceGeometry& slice) {
  slice.check_field(N);
  if (N.rank() != Rank::Scalar || beta.rank() != Rank::OneForm || !(N.lattice() == beta.lattice())) {
    fail(ErrorCode::RankMismatch, "moncrief_apply: expects a scalar N and a one-form beta on one lattice");
  }
  const auto& L = N.lattice();
  const int ns = L.dim() * (L.dim() + 1) / 2;
  auto out = InitialDataPair::zeros(slice, L);
  for (std::size_t mode = 0; mode < L.size(); ++mode) {
    const CVec v = geometry::moncrief_p_mode(slice.frame(), slice.symbol(L, mode), slice.ric(),
                                             geometry::mode_vector(beta, mode), geometry::mode_vector(N, mode));
    geometry::set_mode_vector(out.h, mode, v.head(ns));
    geometry::set_mode_vector(out.m, mode, v.tail(ns));
  }
  return out;
}

std::pair<SpectralField, SpectralField> moncrief_adjoint_apply(const InitialDataPair& pair) {
  pair.validate();
  const auto& L = pair.lattice();
  const int n = L.dim();
  SpectralField one(L, Rank::OneForm), sc(L, Rank::Scalar);
  for (std::size_t mode = 0; mode < L.size(); ++mode) {
    const CVec v = geometry::moncrief_pstar_mode(pair.slice.frame(), pair.slice.symbol(L, mode), pair.slice.ric(),
                                                 geometry::mode_vector(pair.h, mode), geometry::mode_vector(pair.m, mode));
    geometry::set_mode_vector(one, mode, v.head(n));
    sc.coeff(mode, 0) = v(n);
  }
  return {one, sc};
}

MoncriefSplit moncrief_project(const InitialDataPair& pair) {
  pair.validate();
  const SliceGeometry& s = pair.slice;
  require_scalar_flat(s, "moncrief_project");
  const auto& L = pair.lattice();
  const int n = L.dim();
  const int ns = n * (n + 1) / 2;

  // codomain weight Wc = R^H R, domain weight Wd
  const geometry::RMat g2 = geometry::gram(s.frame(), Rank::Sym2);
  Eigen::MatrixXd Wc = Eigen::MatrixXd::Zero(2 * ns, 2 * ns);
  Wc.topLeftCorner(ns, ns) = g2;
  Wc.bottomRightCorner(ns, ns) = g2;
  const Eigen::MatrixXcd R = Eigen::MatrixXd(Wc.llt().matrixU()).cast<cplx>();
  Eigen::MatrixXcd Wd = Eigen::MatrixXcd::Zero(n + 1, n + 1);
  Wd.topLeftCorner(n, n) = s.frame().Ginv.cast<cplx>();
  Wd(n, n) = 1.0;

  double scale = 0.0;
  for (std::size_t mode = 0; mode < L.size(); ++mode) {
    scale = std::max(scale, (R * p_matrix(s, s.symbol(L, mode))).norm());
  }

  MoncriefSplit out{SpectralField(L, Rank::Scalar), SpectralField(L, Rank::OneForm), SpectralField(L, Rank::Sym2),
                    SpectralField(L, Rank::Sym2),   SpectralField(L, Rank::Sym2),    SpectralField(L, Rank::Sym2)};
  for (std::size_t mode = 0; mode < L.size(); ++mode) {
    const Eigen::MatrixXcd P = p_matrix(s, s.symbol(L, mode));
    CVec y(2 * ns);
    y.head(ns) = geometry::mode_vector(pair.h, mode);
    y.tail(ns) = geometry::mode_vector(pair.m, mode);
    const CVec x = detail::solve_deflated(R * P, R * y, Wd, std::max(scale, 1e-300));
    const CVec g = P * x;
    geometry::set_mode_vector(out.beta, mode, x.head(n));
    out.N.coeff(mode, 0) = x(n);
    geometry::set_mode_vector(out.gauge_h, mode, g.head(ns));
    geometry::set_mode_vector(out.gauge_m, mode, g.tail(ns));
    geometry::set_mode_vector(out.gamma_h, mode, y.head(ns) - g.head(ns));
    geometry::set_mode_vector(out.gamma_m, mode, y.tail(ns) - g.tail(ns));
  }

  auto pn = [&](const SpectralField& h, const SpectralField& m) {
    return std::sqrt(geometry::slice_inner(s, h, h) + geometry::slice_inner(s, m, m));
  };
  const double in = std::max(pn(pair.h, pair.m), 1e-300);
  out.reconstruction = pn(pair.h - out.gauge_h - out.gamma_h, pair.m - out.gauge_m - out.gamma_m) / in;
  const auto adj = moncrief_adjoint_apply(InitialDataPair(out.gamma_h, out.gamma_m, s));
  out.adjoint_residual =
      std::sqrt(geometry::slice_inner(s, adj.first, adj.first) + geometry::slice_inner(s, adj.second, adj.second)) / in;
  const double ng = pn(out.gauge_h, out.gauge_m), nr = pn(out.gamma_h, out.gamma_m);
  if (ng > 1e-14 * in && nr > 1e-14 * in) {
    out.orthogonality = std::abs(geometry::slice_inner(s, out.gauge_h, out.gamma_h) +
                                 geometry::slice_inner(s, out.gauge_m, out.gamma_m)) /
                        (ng * nr);
  }
  return out;
}

}  // namespace linwave::decomposition
