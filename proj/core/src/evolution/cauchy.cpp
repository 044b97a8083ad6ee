#include "linwave/evolution/cauchy.hpp"

#include <cmath>

#include "linwave/geometry/slice_ops.hpp"

namespace linwave::evolution {

using geometry::CVec;
using geometry::SliceKind;
using geometry::SpacetimeKind;

namespace {

Eigen::MatrixXcd to_matrix(const CVec& p, int n) {
  Eigen::MatrixXcd M(n, n);
  for (int c = 0; c < p.size(); ++c) {
    const auto ij = spectral::sym_pair(c, n);
    M(ij[0], ij[1]) = p(c);
    M(ij[1], ij[0]) = p(c);
  }
  return M;
}

CVec to_packed(const Eigen::MatrixXcd& M) {
  const int n = static_cast<int>(M.rows());
  CVec p(n * (n + 1) / 2);
  for (int c = 0; c < p.size(); ++c) {
    const auto ij = spectral::sym_pair(c, n);
    p(c) = M(ij[0], ij[1]);
  }
  return p;
}

double resolve_time(const geometry::SliceGeometry& s, const geometry::SpacetimeBackground& bg,
                    std::optional<double> t0) {
  if (bg.kind() == SpacetimeKind::MinkowskiTorus) {
    if (s.kind() != SliceKind::FlatTorus || s.dim() != bg.n()) {
      fail(ErrorCode::BackendMismatch, "build_cauchy_jet: Minkowski needs data on the flat torus of the same dimension");
    }
    return t0.value_or(0.0);
  }
  if (s.kind() != SliceKind::Kasner || s.kasner_exponents() != bg.exponents()) {
    fail(ErrorCode::BackendMismatch, "build_cauchy_jet: data slice is not a slice of this Kasner background");
  }
  if (t0 && std::abs(*t0 - s.time()) > 1e-14 * std::max(1.0, s.time())) {
    fail(ErrorCode::BackendMismatch, "build_cauchy_jet: requested time differs from the data slice time");
  }
  return s.time();
}

}  // namespace

geometry::CauchyJet build_cauchy_jet(const constraints::InitialDataPair& pair,
                                     const geometry::SpacetimeBackground& background,
                                     std::optional<double> t0) {
  pair.validate();
  const auto& s = pair.slice;
  const double t = resolve_time(s, background, t0);
  const auto& L = pair.lattice();
  const int n = L.dim();
  const auto& f = s.frame();
  const Eigen::MatrixXcd Ginv = f.Ginv.cast<cplx>();
  const Eigen::MatrixXcd K = s.k().cast<cplx>();
  auto jet = geometry::CauchyJet::zeros(background, t, L);
  jet.h_s = pair.h;
  for (std::size_t mode = 0; mode < L.size(); ++mode) {
    const auto ik = s.symbol(L, mode);
    const CVec h = geometry::mode_vector(pair.h, mode);
    const CVec m = geometry::mode_vector(pair.m, mode);
    const Eigen::MatrixXcd H = to_matrix(h, n);
    const CVec hk = to_packed(H * Ginv * K + K * Ginv * H);
    geometry::set_mode_vector(jet.dh_s, mode, 2.0 * m - hk);
    geometry::set_mode_vector(jet.dh_n, mode, geometry::div_sym2(f, ik, geometry::trace_reverse(f, h)));
    jet.dh_nn.coeff(mode, 0) = -2.0 * geometry::trace_sym2(f, m)(0);
  }
  return jet;
}

}  // namespace linwave::evolution
