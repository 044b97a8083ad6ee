#include "linwave/decomposition/split.hpp"

#include <cmath>

#include "deflated_solve.hpp"
#include "linwave/geometry/slice_ops.hpp"

namespace linwave::decomposition {

using geometry::CVec;
using geometry::FrameData;
using geometry::RMat;
using geometry::Symbol;
using spectral::ModeLattice;
using spectral::Rank;

SplitOperatorParams::SplitOperatorParams(double a, double b) : a_(a), b_(b) {
  const double ab = a * b;
  if (!(ab > 0.0 && ab < 2.0)) {
    fail(ErrorCode::DomainViolation,
         "split operator needs 0 < a b < 2, got a b = " + std::to_string(ab));
  }
}

SplitOperatorParams SplitOperatorParams::position(int n) { return {-1.0 / n, -2.0}; }
SplitOperatorParams SplitOperatorParams::momentum(int n) { return {1.0 / n, 2.0 * (n - 1)}; }

const char* to_string(SplitPart part) noexcept {
  return part == SplitPart::Position ? "position" : "momentum";
}

SplitPart parse_split_part(const std::string& name) {
  if (name == "position") return SplitPart::Position;
  if (name == "momentum") return SplitPart::Momentum;
  fail(ErrorCode::InvalidArgument, "unknown part '" + name + "' (expected position or momentum)");
}

SplitOperatorParams params_for(SplitPart part, int n) {
  return part == SplitPart::Position ? SplitOperatorParams::position(n) : SplitOperatorParams::momentum(n);
}

void require_scalar_flat(const SliceGeometry& slice, const char* what) {
  if (!slice.scalar_flat_static()) {
    fail(ErrorCode::Unsupported, std::string(what) + ": needs a scalar-flat slice with vanishing k~ (got " +
                                     slice.id() + ")");
  }
}

namespace {

Eigen::MatrixXcd p_matrix(const SplitOperatorParams& p, const SliceGeometry& s, const Symbol& ik, bool adjoint) {
  const int n = s.dim();
  Eigen::MatrixXcd M(1 + n, 1 + n);
  for (int c = 0; c <= n; ++c) {
    const CVec e = CVec::Unit(1 + n, c);
    M.col(c) = adjoint ? geometry::split_pstar_mode(s.frame(), ik, s.ric(), p.a(), p.b(), e.head(1), e.tail(n))
                       : geometry::split_p_mode(s.frame(), ik, s.ric(), p.a(), p.b(), e.head(1), e.tail(n));
  }
  return M;
}

// Block inner-product weight on (scalar, one-form) coefficients.
Eigen::MatrixXcd domain_gram(const SliceGeometry& s) {
  const int n = s.dim();
  Eigen::MatrixXcd W = Eigen::MatrixXcd::Zero(1 + n, 1 + n);
  W(0, 0) = 1.0;
  W.bottomRightCorner(n, n) = s.frame().Ginv.cast<cplx>();
  return W;
}

using detail::solve_deflated;

double norm(const SliceGeometry& s, const SpectralField& f) { return geometry::slice_norm(s, f); }

double ric_sq(const SliceGeometry& s) {
  return geometry::contract(s.frame(), s.ric(), geometry::matrix_to_packed(s.ric())).real();
}

}  // namespace

ScalarOneForm split_operator_apply(const SplitOperatorParams& params, const SpectralField& phi,
                                   const SpectralField& omega, const SliceGeometry& slice) {
  require_scalar_flat(slice, "split_operator_apply");
  slice.check_field(phi);
  if (phi.rank() != Rank::Scalar || omega.rank() != Rank::OneForm || !(phi.lattice() == omega.lattice())) {
    fail(ErrorCode::RankMismatch, "split_operator_apply: expects a scalar and a one-form on one lattice");
  }
  const auto& L = phi.lattice();
  const int n = L.dim();
  ScalarOneForm out{SpectralField(L, Rank::Scalar), SpectralField(L, Rank::OneForm)};
  for (std::size_t m = 0; m < L.size(); ++m) {
    const CVec v = geometry::split_p_mode(slice.frame(), slice.symbol(L, m), slice.ric(), params.a(), params.b(),
                                          geometry::mode_vector(phi, m), geometry::mode_vector(omega, m));
    out.scalar.coeff(m, 0) = v(0);
    geometry::set_mode_vector(out.oneform, m, v.tail(n));
  }
  return out;
}

ScalarOneForm split_adjoint_apply(const SplitOperatorParams& params, const SpectralField& psi,
                                  const SpectralField& eta, const SliceGeometry& slice) {
  require_scalar_flat(slice, "split_adjoint_apply");
  slice.check_field(psi);
  if (psi.rank() != Rank::Scalar || eta.rank() != Rank::OneForm || !(psi.lattice() == eta.lattice())) {
    fail(ErrorCode::RankMismatch, "split_adjoint_apply: expects a scalar and a one-form on one lattice");
  }
  const auto& L = psi.lattice();
  const int n = L.dim();
  ScalarOneForm out{SpectralField(L, Rank::Scalar), SpectralField(L, Rank::OneForm)};
  for (std::size_t m = 0; m < L.size(); ++m) {
    const CVec v = geometry::split_pstar_mode(slice.frame(), slice.symbol(L, m), slice.ric(), params.a(), params.b(),
                                              geometry::mode_vector(psi, m), geometry::mode_vector(eta, m));
    out.scalar.coeff(m, 0) = v(0);
    geometry::set_mode_vector(out.oneform, m, v.tail(n));
  }
  return out;
}

GammaResidual gamma_residual(const InitialDataPair& pair) {
  pair.validate();
  const SliceGeometry& s = pair.slice;
  require_scalar_flat(s, "gamma_residual");
  const FrameData& f = s.frame();
  const auto& L = pair.lattice();
  const CVec Gp = geometry::matrix_to_packed(f.G);
  SpectralField th(L, Rank::Scalar), dh(L, Rank::OneForm), tm(L, Rank::Scalar), dm(L, Rank::OneForm);
  for (std::size_t mode = 0; mode < L.size(); ++mode) {
    const Symbol ik = s.symbol(L, mode);
    const CVec h = geometry::mode_vector(pair.h, mode);
    const CVec m = geometry::mode_vector(pair.m, mode);
    const CVec trh = geometry::trace_sym2(f, h);
    const CVec trm = geometry::trace_sym2(f, m);
    th.coeff(mode, 0) = geometry::laplacian_scalar(f, ik, trh)(0) - geometry::contract(f, s.ric(), h);
    geometry::set_mode_vector(dh, mode, geometry::div_sym2(f, ik, h));
    tm.coeff(mode, 0) = geometry::laplacian_scalar(f, ik, trm)(0) + geometry::contract(f, s.ric(), m);
    geometry::set_mode_vector(dm, mode, geometry::div_sym2(f, ik, m - trm(0) * Gp));
  }
  return {norm(s, th), norm(s, dh), norm(s, tm), norm(s, dm)};
}

double ricci_coefficient(const SpectralField& source, const SliceGeometry& slice) {
  const double r2 = ric_sq(slice);
  if (r2 <= 1e-24) return 0.0;
  // Ric is constant, so only the zero mode of g(source, Ric) integrates
  const std::size_t z = source.lattice().zero_mode();
  return geometry::contract(slice.frame(), slice.ric(), geometry::mode_vector(source, z)).real() / r2;
}

DecompositionResult split_solve(const SpectralField& source, SplitPart part, const SliceGeometry& slice) {
  require_scalar_flat(slice, "split_solve");
  slice.check_field(source);
  if (source.rank() != Rank::Sym2) fail(ErrorCode::RankMismatch, "split_solve: source must be a sym2 field");
  const auto& L = source.lattice();
  const int n = L.dim();
  const FrameData& f = slice.frame();
  const SplitOperatorParams params = params_for(part, n);
  const CVec Gp = geometry::matrix_to_packed(f.G);
  const double C = ricci_coefficient(source, slice);
  const double r2 = ric_sq(slice);
  const Eigen::MatrixXcd W = domain_gram(slice);

  // operator scale for the kernel threshold: the largest symbol norm on the lattice
  double scale = 0.0;
  for (std::size_t m = 0; m < L.size(); ++m) {
    scale = std::max(scale, p_matrix(params, slice, slice.symbol(L, m), false).norm());
  }

  DecompositionResult r{part, SpectralField(L, Rank::Sym2), SpectralField(L, Rank::OneForm), C,
                        SpectralField(L, Rank::Scalar)};
  double res2 = 0.0, rhs2 = 0.0;
  for (std::size_t mode = 0; mode < L.size(); ++mode) {
    const Symbol ik = slice.symbol(L, mode);
    const CVec a = geometry::mode_vector(source, mode);
    const CVec tra = geometry::trace_sym2(f, a);
    CVec rhs(1 + n);
    if (part == SplitPart::Position) {
      rhs(0) = -geometry::contract(f, slice.ric(), a) / double(n) + geometry::laplacian_scalar(f, ik, tra)(0) / double(n);
      rhs.tail(n) = -2.0 * geometry::div_sym2(f, ik, a);
    } else {
      rhs(0) = geometry::contract(f, slice.ric(), a) / double(n) + geometry::laplacian_scalar(f, ik, tra)(0) / double(n);
      rhs.tail(n) = -2.0 * geometry::div_sym2(f, ik, a - tra(0) * Gp);
    }
    if (mode == L.zero_mode()) rhs(0) += (part == SplitPart::Position ? 1.0 : -1.0) * C * r2 / n;
    const Eigen::MatrixXcd P = p_matrix(params, slice, ik, false);
    const CVec x = solve_deflated(P, rhs, W, scale);
    res2 += (P * x - rhs).squaredNorm();
    rhs2 += rhs.squaredNorm();
    r.phi.coeff(mode, 0) = x(0);
    geometry::set_mode_vector(r.omega, mode, x.tail(n));
  }
  r.solve_residual = std::sqrt(res2 / std::max(rhs2, 1e-300));

  const SpectralField Lw = geometry::apply_slice_operator(slice, geometry::SliceOp::ConformalKilling, r.omega);
  SpectralField gamma = source - Lw - C * slice.ric_field(L);
  for (std::size_t mode = 0; mode < L.size(); ++mode) {
    const cplx ph = r.phi.coeff(mode, 0);
    if (ph == 0.0) continue;
    for (int c = 0; c < gamma.components(); ++c) gamma.coeff(mode, c) -= ph * Gp(c);
  }
  r.gamma_part = gamma;

  const double sn = std::max(norm(slice, source), 1e-300);
  r.reconstruction = norm(slice, source - reassemble(r, slice)) / sn;
  const SpectralField zero(L, Rank::Sym2);
  const GammaResidual g = part == SplitPart::Position ? gamma_residual(InitialDataPair(gamma, zero, slice))
                                                      : gamma_residual(InitialDataPair(zero, gamma, slice));
  r.gamma_position = g.position_max() / sn;
  r.gamma_momentum = g.momentum_max() / sn;
  return r;
}

SpectralField reassemble(const DecompositionResult& r, const SliceGeometry& slice) {
  const auto& L = r.gamma_part.lattice();
  SpectralField out = r.gamma_part + geometry::apply_slice_operator(slice, geometry::SliceOp::ConformalKilling, r.omega);
  out += r.C * slice.ric_field(L);
  const CVec Gp = geometry::matrix_to_packed(slice.frame().G);
  for (std::size_t mode = 0; mode < L.size(); ++mode) {
    for (int c = 0; c < out.components(); ++c) out.coeff(mode, c) += r.phi.coeff(mode, 0) * Gp(c);
  }
  return out;
}

KernelBasis kernel_basis(const SplitOperatorParams& params, const SliceGeometry& slice, int nmax) {
  require_scalar_flat(slice, "kernel_basis");
  const ModeLattice L = slice.lattice(nmax);
  const int n = L.dim();
  double scale = 0.0;
  for (std::size_t m = 0; m < L.size(); ++m) {
    scale = std::max(scale, p_matrix(params, slice, slice.symbol(L, m), false).norm());
  }
  const double cut = 1e-10 * std::max(scale, 1e-300);
  auto null_vectors = [&](const Eigen::MatrixXcd& M) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M, Eigen::ComputeFullV);
    std::vector<CVec> out;
    for (Eigen::Index i = 0; i < M.cols(); ++i) {
      const double s = i < svd.singularValues().size() ? svd.singularValues()(i) : 0.0;
      if (s <= cut) out.push_back(svd.matrixV().col(i));
    }
    return out;
  };
  KernelBasis kb;
  for (std::size_t mode = 0; mode < L.size(); ++mode) {
    const Symbol ik = slice.symbol(L, mode);
    const auto adj = null_vectors(p_matrix(params, slice, ik, true));
    kb.adjoint_dimension += static_cast<int>(adj.size());
    const std::size_t mirror = L.mirror(mode);
    if (mode == L.zero_mode()) {
      // self-conjugate mode: the symbol is real, so take a real null basis
      const Eigen::MatrixXd M = p_matrix(params, slice, ik, false).real();
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
      for (Eigen::Index i = 0; i < M.cols(); ++i) {
        const double s = i < svd.singularValues().size() ? svd.singularValues()(i) : 0.0;
        if (s > cut) continue;
        ScalarOneForm e{SpectralField(L, Rank::Scalar), SpectralField(L, Rank::OneForm)};
        const CVec v = svd.matrixV().col(i).cast<cplx>();
        e.scalar.coeff(mode, 0) = v(0);
        geometry::set_mode_vector(e.oneform, mode, v.tail(n));
        kb.basis.push_back(std::move(e));
        ++kb.dimension;
      }
      continue;
    }
    const auto vs = null_vectors(p_matrix(params, slice, ik, false));
    kb.dimension += static_cast<int>(vs.size());
    if (mode > mirror) continue;  // the pair was emitted from its partner
    for (const CVec& v : vs) {
      for (const cplx phase : {cplx(1.0, 0.0), cplx(0.0, 1.0)}) {
        ScalarOneForm e{SpectralField(L, Rank::Scalar), SpectralField(L, Rank::OneForm)};
        const CVec w = phase * v;
        e.scalar.coeff(mode, 0) = w(0);
        e.scalar.coeff(mirror, 0) = std::conj(w(0));
        geometry::set_mode_vector(e.oneform, mode, w.tail(n));
        geometry::set_mode_vector(e.oneform, mirror, w.tail(n).conjugate());
        kb.basis.push_back(std::move(e));
      }
    }
  }
  return kb;
}

}  // namespace linwave::decomposition
