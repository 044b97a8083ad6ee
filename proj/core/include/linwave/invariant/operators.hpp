#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "linwave/invariant/frame.hpp"
#include "linwave/spectral/lattice.hpp"

namespace linwave::invariant {

using spectral::Rank;

/// Operators available as matrices on left-invariant sections. Invariant
/// scalars are constants, so d and Hess act as zero on them.
enum class OperatorKind {
  Div,                      // sym2 -> one-form
  DivOneForm,               // one-form -> scalar
  Trace,                    // sym2 -> scalar
  Hessian,                  // scalar -> sym2
  LieMetric,                // one-form -> sym2
  ConformalKilling,         // L
  ConformalKillingAdjoint,  // L*
  CklNormal,                // L*L
  Laplacian,                // one-form Hodge Laplacian
  MoncriefP,                // (beta, N) -> (h, m)
  MoncriefPAdjoint,         // (h, m) -> (beta, N)
  SplitP,                   // (phi, w) -> (scalar, one-form), params (a, b)
  SplitPAdjoint,
};

OperatorKind parse_operator_kind(const std::string& name);
const char* to_string(OperatorKind kind) noexcept;

struct OperatorMatrix {
  std::vector<Rank> domain;
  std::vector<Rank> codomain;
  Eigen::MatrixXd matrix;
};

/// Matrix of an operator on invariant sections; `a`, `b` only matter for the
/// split kinds.
OperatorMatrix operator_matrix(const InvariantGeometry& geom, OperatorKind kind,
                               double a = 0.0, double b = 0.0);

/// Inner-product weight of a block layout: <x, y> = x^T W y, the G-induced
/// pointwise contraction times the total volume.
Eigen::MatrixXd block_gram(const InvariantGeometry& geom, const std::vector<Rank>& blocks);

/// Adjoint of M with respect to the block Gram matrices.
Eigen::MatrixXd weighted_adjoint(const InvariantGeometry& geom, const OperatorMatrix& op);

/// Columns span the null space (singular values below rel_tol * sigma_max).
Eigen::MatrixXd null_space(const Eigen::MatrixXd& M, double rel_tol = 1e-10);

/// Killing one-forms: the null space of LieMetric, orthonormal in the
/// invariant inner product. Columns are frame components.
Eigen::MatrixXd killing_basis(const InvariantGeometry& geom);

}  // namespace linwave::invariant
