#include "linwave/constraints/constraints.hpp"

#include <cmath>

#include "linwave/geometry/slice_ops.hpp"
#include "linwave/invariant/frame.hpp"
#include "linwave/spectral/sobolev.hpp"
#include "linwave/spectral/transform.hpp"
#include "pointwise.hpp"

namespace linwave::constraints {

using geometry::CVec;
using geometry::FrameData;
using geometry::RMat;
using geometry::Symbol;
using spectral::ModeLattice;
using spectral::Rank;
using spectral::sym_index;

InitialDataPair::InitialDataPair(SpectralField h_, SpectralField m_, SliceGeometry slice_,
                                 double sobolev_order_)
    : h(std::move(h_)), m(std::move(m_)), slice(std::move(slice_)), sobolev_order(sobolev_order_) {
  validate();
}

InitialDataPair InitialDataPair::zeros(const SliceGeometry& slice, const ModeLattice& lattice) {
  return InitialDataPair(SpectralField(lattice, Rank::Sym2), SpectralField(lattice, Rank::Sym2), slice);
}

void InitialDataPair::validate() const {
  if (h.rank() != Rank::Sym2 || m.rank() != Rank::Sym2) {
    fail(ErrorCode::RankMismatch, "initial data: h and m must be symmetric 2-tensors");
  }
  if (!(h.lattice() == m.lattice())) fail(ErrorCode::BackendMismatch, "initial data: h and m lattices differ");
  slice.check_field(h);
}

namespace {

double residual_norm(const SliceGeometry& slice, const SpectralField& f, double s) {
  if (slice.is_torus()) return spectral::sobolev_norm(f, s);
  return geometry::slice_norm(slice, f);
}

cplx scalar_of(const CVec& v) { return v(0); }

// D Phi at one mode; returns the scalar row followed by the one-form row.
CVec dphi_mode(const SliceGeometry& slice, const Symbol& ik, const CVec& h, const CVec& m) {
  using namespace geometry;
  const FrameData& f = slice.frame();
  const int n = f.n;
  const RMat& K = slice.k();
  const double trK = slice.trace_k();
  const CVec Gp = matrix_to_packed(f.G);

  // scalar part
  const CVec trh = trace_sym2(f, h);
  const CVec trm = trace_sym2(f, m);
  const CVec inner = div_sym2(f, ik, h) - d_scalar(f, ik, trh);
  cplx s1 = scalar_of(div_oneform(f, ik, inner)) - contract(f, slice.ric(), h);
  const RMat KK = compose(f, K, K);
  s1 += 2.0 * contract(f, KK - trK * K, h);
  s1 -= 2.0 * contract(f, K, m - trm(0) * Gp);

  // one-form part
  CVec s2 = div_sym2(f, ik, m - trm(0) * Gp);
  const bool has_k = K.cwiseAbs().maxCoeff() != 0.0;
  if (has_k) {
    const Symbol zero{};
    const CVec nK = nabla(f, zero, sym_to_full(matrix_to_packed(K), n), 2);  // (nabla_a K)_bc
    const CVec hf = sym_to_full(h, n);
    // raised h^{ab}
    Eigen::MatrixXcd H(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) H(a, b) = hf(a * n + b);
    const Eigen::MatrixXcd Hup = f.Ginv * H * f.Ginv;
    const CVec divhbar = div_sym2(f, ik, trace_reverse(f, h));
    const CVec nh = nabla(f, ik, hf, 2);  // (nabla_X h)_ab
    const RMat Kmix = K * f.Ginv;         // K_X^b
    const RMat Kup = f.Ginv * K * f.Ginv;
    const CVec dgkh = d_scalar(f, ik, CVec::Constant(1, contract(f, K, h)));
    for (int x = 0; x < n; ++x) {
      cplx v = 0.0;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          v -= Hup(a, b) * nK((a * n + b) * n + x);
          v -= 0.5 * Kup(a, b) * nh((x * n + a) * n + b);
        }
      for (int b = 0; b < n; ++b) v -= Kmix(x, b) * divhbar(b);
      v += dgkh(x);
      s2(x) += v;
    }
  }
  CVec out(1 + n);
  out(0) = s1;
  out.tail(n) = s2;
  return out;
}

}  // namespace

double ConstraintResidual::norm1(double s) const { return residual_norm(slice, phi1, s); }
double ConstraintResidual::norm2(double s) const { return residual_norm(slice, phi2, s); }

ConstraintResidual dphi(const InitialDataPair& pair, const std::vector<double>& orders) {
  pair.validate();
  const auto& L = pair.lattice();
  const int n = L.dim();
  ConstraintResidual r{SpectralField(L, Rank::Scalar), SpectralField(L, Rank::OneForm), pair.slice, {}};
  for (std::size_t mode = 0; mode < L.size(); ++mode) {
    const CVec out = dphi_mode(pair.slice, pair.slice.symbol(L, mode), geometry::mode_vector(pair.h, mode),
                               geometry::mode_vector(pair.m, mode));
    r.phi1.coeff(mode, 0) = out(0);
    for (int i = 0; i < n; ++i) r.phi2.coeff(mode, i) = out(1 + i);
  }
  for (double s : orders) r.norms.push_back({s, r.norm1(s), r.norm2(s)});
  return r;
}

Eigen::MatrixXcd dphi_symbol(const SliceGeometry& slice, const Symbol& ik) {
  const int n = slice.dim();
  const int ns = n * (n + 1) / 2;
  Eigen::MatrixXcd M(1 + n, 2 * ns);
  for (int c = 0; c < 2 * ns; ++c) {
    CVec h = CVec::Zero(ns), m = CVec::Zero(ns);
    (c < ns ? h(c) : m(c - ns)) = 1.0;
    M.col(c) = dphi_mode(slice, ik, h, m);
  }
  return M;
}

InitialDataPair project_to_constraints(const InitialDataPair& pair) {
  pair.validate();
  InitialDataPair out = pair;
  const auto& L = pair.lattice();
  const int ns = pair.h.components();
  for (std::size_t mode = 0; mode < L.size(); ++mode) {
    const Eigen::MatrixXcd M = dphi_symbol(pair.slice, pair.slice.symbol(L, mode));
    CVec x(2 * ns);
    x.head(ns) = geometry::mode_vector(pair.h, mode);
    x.tail(ns) = geometry::mode_vector(pair.m, mode);
    const Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod(M);
    x -= cod.solve(M * x);
    geometry::set_mode_vector(out.h, mode, x.head(ns));
    geometry::set_mode_vector(out.m, mode, x.tail(ns));
  }
  return out;
}

// ---------------------------------------------------------------------------
// nonlinear constraint map

namespace {

SpectralField derivative(const SpectralField& f, int axis) {
  SpectralField out(f.lattice(), f.rank());
  const auto& L = f.lattice();
  for (std::size_t m = 0; m < L.size(); ++m) {
    const cplx ik(0.0, static_cast<double>(L.mode(m)[static_cast<std::size_t>(axis)]));
    for (int c = 0; c < f.components(); ++c) out.coeff(m, c) = ik * f.coeff(m, c);
  }
  return out;
}

ConstraintFields phi_invariant(const SpectralField& g, const SpectralField& k, const SliceGeometry& slice) {
  const std::size_t z = g.lattice().zero_mode();
  const RMat G = geometry::packed_to_matrix(geometry::mode_vector(g, z), 3);
  const RMat K = geometry::packed_to_matrix(geometry::mode_vector(k, z), 3);
  auto frame = invariant::HomogeneousFrame::berger(1.0);
  frame.G = G;
  frame.validate();
  const auto geom = invariant::invariant_geometry(frame);
  const FrameData& f = geom.frame;
  const CVec Kp = geometry::matrix_to_packed(K);
  const double trk = geometry::trace_sym2(f, Kp)(0).real();
  const double kk = geometry::contract(f, K, Kp).real();
  ConstraintFields out{SpectralField(g.lattice(), Rank::Scalar), SpectralField(g.lattice(), Rank::OneForm)};
  out.scalar.coeff(z, 0) = geom.scal - kk + trk * trk;
  const CVec d = geometry::div_sym2(f, geometry::Symbol{}, Kp);
  for (int i = 0; i < 3; ++i) out.oneform.coeff(z, i) = d(i);
  (void)slice;
  return out;
}

}  // namespace

ConstraintFields phi(const SpectralField& g, const SpectralField& k, const SliceGeometry& slice) {
  slice.check_field(g);
  if (!(g.lattice() == k.lattice()) || g.rank() != Rank::Sym2 || k.rank() != Rank::Sym2) {
    fail(ErrorCode::RankMismatch, "phi: g and k must be sym2 fields on one lattice");
  }
  if (!slice.is_torus()) return phi_invariant(g, k, slice);

  const auto& L = g.lattice();
  const int n = L.dim();
  const int grid = std::max(L.side(), 3 * L.nmax() + 1);
  // grid samples of g, dg, ddg, k, dk
  auto samples = [&](const SpectralField& f) { return spectral::synthesize(f, grid, 1e-8).values; };
  const auto gv = samples(g);
  const auto kv = samples(k);
  std::vector<std::vector<double>> dg(3), dk(3), ddg(9);
  for (int a = 0; a < n; ++a) {
    const SpectralField ga = derivative(g, a);
    dg[static_cast<std::size_t>(a)] = samples(ga);
    dk[static_cast<std::size_t>(a)] = samples(derivative(k, a));
    for (int b = a; b < n; ++b) ddg[static_cast<std::size_t>(a * 3 + b)] = samples(derivative(ga, b));
    for (int b = 0; b < a; ++b) ddg[static_cast<std::size_t>(a * 3 + b)] = ddg[static_cast<std::size_t>(b * 3 + a)];
  }
  spectral::GridSamples s1{n, grid, Rank::Scalar, {}}, s2{n, grid, Rank::OneForm, {}};
  std::size_t npts = 1;
  for (int i = 0; i < n; ++i) npts *= static_cast<std::size_t>(grid);
  s1.values.assign(npts, 0.0);
  s2.values.assign(npts * static_cast<std::size_t>(n), 0.0);
  for (std::size_t p = 0; p < npts; ++p) {
    detail::PointData<double> d;
    d.g[2][2] = 1.0;  // padding axis when n = 2
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const auto c = static_cast<std::size_t>(sym_index(i, j, n));
        d.g[i][j] = gv[c * npts + p];
        d.k[i][j] = kv[c * npts + p];
        for (int a = 0; a < n; ++a) {
          d.dg[a][i][j] = dg[static_cast<std::size_t>(a)][c * npts + p];
          d.dk[a][i][j] = dk[static_cast<std::size_t>(a)][c * npts + p];
          for (int b = 0; b < n; ++b) d.ddg[a][b][i][j] = ddg[static_cast<std::size_t>(a * 3 + b)][c * npts + p];
        }
      }
    double p1, p2[3];
    detail::phi_point(d, p1, p2);
    s1.values[p] = p1;
    for (int i = 0; i < n; ++i) s2.values[static_cast<std::size_t>(i) * npts + p] = p2[i];
  }
  return {spectral::analyze(s1, L), spectral::analyze(s2, L)};
}

ConstraintFields phi_background(const SliceGeometry& slice, int nmax) {
  const auto L = slice.lattice(nmax);
  return phi(slice.metric_field(L), slice.k_field(L), slice);
}

InitialDataPair induced_data(const geometry::CauchyJet& jet) {
  using namespace geometry;
  jet.validate();
  const auto& L = jet.lattice();
  const int n = L.dim();
  const int D = n + 1;
  const SliceGeometry slice = jet.background.slice(jet.t);
  InitialDataPair out = InitialDataPair::zeros(slice, L);
  const BackgroundJets bj = jet.background.jets(jet.t, 1);
  const RMat& K = slice.k();
  for (std::size_t mode = 0; mode < L.size(); ++mode) {
    const PackedJets hj = jet.dt_jets(mode, 1);
    const JetTensor N = covariant_derivative(bj, symbol_of(L.mode(mode)), hj);
    const CVec nn = jet.nabla_nu(mode);
    const cplx hnn = jet.h_nn.coeff(mode, 0);
    CVec hs(n * (n + 1) / 2), ms(n * (n + 1) / 2);
    for (int c = 0; c < hs.size(); ++c) {
      const auto ij = spectral::sym_pair(c, n);
      const int x = ij[0] + 1, y = ij[1] + 1;
      hs(c) = jet.h_s.coeff(mode, c);
      const cplx nx = N[static_cast<std::size_t>((x * D + 0) * D + y)].d[0];  // nabla_X h(nu, Y)
      const cplx ny = N[static_cast<std::size_t>((y * D + 0) * D + x)].d[0];
      ms(c) = -0.5 * hnn * K(ij[0], ij[1]) - 0.5 * nx - 0.5 * ny + 0.5 * nn(sym_index(x, y, D));
    }
    set_mode_vector(out.h, mode, hs);
    set_mode_vector(out.m, mode, ms);
  }
  return out;
}

}  // namespace linwave::constraints
