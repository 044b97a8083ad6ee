#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "linwave/common.hpp"
#include "linwave/spectral/lattice.hpp"

namespace linwave::geometry {

using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;

/// Constant-coefficient Riemannian data in a frame {e_i}: metric G_ij and
/// connection coefficients with nabla_{e_i} e_j = Gamma^k_ij e_k.
///
/// Both slice backends reduce to this: on a torus the frame is the coordinate
/// frame (Gamma = 0 because the metric is constant), on the Berger sphere it
/// is a left-invariant frame.
struct FrameData {
  int n = 3;
  RMat G;
  RMat Ginv;
  std::vector<double> gamma;  // n^3, index (k * n + i) * n + j

  double Gam(int k, int i, int j) const {
    return gamma[static_cast<std::size_t>((k * n + i) * n + j)];
  }
  static FrameData flat(const RMat& G);
};

/// Derivative symbol of one Fourier mode: e_a(f) = ik[a] f.
using Symbol = std::array<cplx, 3>;

// Full tensors of rank r are vectors of length n^r with the first index slowest.

int tensor_size(int n, int rank);

CVec sym_to_full(const CVec& packed, int n);
/// Symmetric part of a full rank-2 tensor, packed.
CVec full_to_sym(const CVec& full, int n);

/// Covariant derivative; the new (derivative) index is the first one.
CVec nabla(const FrameData& f, const Symbol& ik, const CVec& T, int rank);

// Packed-component operators at one mode. Scalars have length 1, one-forms n,
// sym2 n(n+1)/2.

CVec d_scalar(const FrameData& f, const Symbol& ik, const CVec& phi);
CVec hessian(const FrameData& f, const Symbol& ik, const CVec& phi);
CVec div_oneform(const FrameData& f, const Symbol& ik, const CVec& w);
CVec div_sym2(const FrameData& f, const Symbol& ik, const CVec& h);
CVec trace_sym2(const FrameData& f, const CVec& h);
CVec trace_reverse(const FrameData& f, const CVec& h);
/// Delta phi = delta d phi with delta = -div.
CVec laplacian_scalar(const FrameData& f, const Symbol& ik, const CVec& phi);
/// Hodge Laplacian (d delta + delta d) on one-forms.
CVec laplacian_oneform(const FrameData& f, const Symbol& ik, const CVec& w);
/// -G^ab nabla_a nabla_b T for rank 0, 1 or 2 (sym2 packed).
CVec connection_laplacian(const FrameData& f, const Symbol& ik, const CVec& T,
                          spectral::Rank rank);
/// nabla_i w_j + nabla_j w_i.
CVec lie_metric(const FrameData& f, const Symbol& ik, const CVec& w);
/// L w = lie_metric(w) - (2/n) (div w) G.
CVec conformal_killing(const FrameData& f, const Symbol& ik, const CVec& w);
/// L* h = -2 div h + (2/n) d tr h.
CVec conformal_killing_adjoint(const FrameData& f, const Symbol& ik, const CVec& h);
CVec ckl_normal(const FrameData& f, const Symbol& ik, const CVec& w);
/// Lie derivative of a constant background sym2 tensor K along w^sharp.
CVec lie_of_background(const FrameData& f, const Symbol& ik, const CVec& w,
                       const RMat& K);

/// Metric contraction g(A, B) = A_ab G^ac G^bd B_cd of a background tensor A
/// with a packed sym2 B.
cplx contract(const FrameData& f, const RMat& A, const CVec& B);
/// A o B (X, Y) = A(X, a) G^ab B(b, Y), for full matrices.
RMat compose(const FrameData& f, const RMat& A, const RMat& B);

RMat packed_to_matrix(const CVec& packed, int n);  // real part
CVec matrix_to_packed(const RMat& M);

/// Pointwise Hermitian form for packed components of the given rank:
/// conj(a) . b contracted with G^{-1} on every index.
cplx metric_pair(const FrameData& f, spectral::Rank rank, const CVec& a, const CVec& b);

}  // namespace linwave::geometry

namespace linwave::geometry {

/// Split operator P(phi, w) = (Delta phi + a g(Ric, L w), L*L w + b d phi)
/// at one mode; returns the scalar row followed by the one-form row.
CVec split_p_mode(const FrameData& f, const Symbol& ik, const RMat& ric,
                  double a, double b, const CVec& phi, const CVec& w);
/// P*(psi, eta) = (Delta psi + b delta eta, L*L eta + a L*(psi Ric)).
CVec split_pstar_mode(const FrameData& f, const Symbol& ik, const RMat& ric,
                      double a, double b, const CVec& psi, const CVec& eta);

/// Moncrief map P(beta, N) = (L_beta g, Hess N - Ric N); returns h then m.
CVec moncrief_p_mode(const FrameData& f, const Symbol& ik, const RMat& ric,
                     const CVec& beta, const CVec& N);
/// P*(h, m) = (-2 div h, div div m - g(Ric, m)); returns the one-form then
/// the scalar.
CVec moncrief_pstar_mode(const FrameData& f, const Symbol& ik, const RMat& ric,
                         const CVec& h, const CVec& m);

/// Gram matrix of metric_pair on the packed basis of a rank.
RMat gram(const FrameData& f, spectral::Rank rank);

}  // namespace linwave::geometry
