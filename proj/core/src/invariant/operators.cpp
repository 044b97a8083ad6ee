#include "linwave/invariant/operators.hpp"

#include <map>

namespace linwave::invariant {

namespace {

using geometry::CVec;
using geometry::Symbol;

int block_size(const std::vector<Rank>& blocks) {
  int s = 0;
  for (Rank r : blocks) s += spectral::component_count(r, 3);
  return s;
}

struct KindInfo {
  const char* name;
  std::vector<Rank> dom;
  std::vector<Rank> cod;
};

const std::map<OperatorKind, KindInfo>& kind_table() {
  static const std::map<OperatorKind, KindInfo> table = {
      {OperatorKind::Div, {"div", {Rank::Sym2}, {Rank::OneForm}}},
      {OperatorKind::DivOneForm, {"div-oneform", {Rank::OneForm}, {Rank::Scalar}}},
      {OperatorKind::Trace, {"trace", {Rank::Sym2}, {Rank::Scalar}}},
      {OperatorKind::Hessian, {"hessian", {Rank::Scalar}, {Rank::Sym2}}},
      {OperatorKind::LieMetric, {"lie-metric", {Rank::OneForm}, {Rank::Sym2}}},
      {OperatorKind::ConformalKilling, {"conformal-killing", {Rank::OneForm}, {Rank::Sym2}}},
      {OperatorKind::ConformalKillingAdjoint,
       {"conformal-killing-adjoint", {Rank::Sym2}, {Rank::OneForm}}},
      {OperatorKind::CklNormal, {"ckl-normal", {Rank::OneForm}, {Rank::OneForm}}},
      {OperatorKind::Laplacian, {"laplacian", {Rank::OneForm}, {Rank::OneForm}}},
      {OperatorKind::MoncriefP,
       {"moncrief-p", {Rank::OneForm, Rank::Scalar}, {Rank::Sym2, Rank::Sym2}}},
      {OperatorKind::MoncriefPAdjoint,
       {"moncrief-p-adjoint", {Rank::Sym2, Rank::Sym2}, {Rank::OneForm, Rank::Scalar}}},
      {OperatorKind::SplitP,
       {"split-p", {Rank::Scalar, Rank::OneForm}, {Rank::Scalar, Rank::OneForm}}},
      {OperatorKind::SplitPAdjoint,
       {"split-p-adjoint", {Rank::Scalar, Rank::OneForm}, {Rank::Scalar, Rank::OneForm}}},
  };
  return table;
}

CVec apply(const InvariantGeometry& g, OperatorKind kind, double a, double b,
           const CVec& x) {
  const auto& f = g.frame;
  const Symbol ik{};
  const Eigen::MatrixXd ric = g.ric;
  switch (kind) {
    case OperatorKind::Div: return geometry::div_sym2(f, ik, x);
    case OperatorKind::DivOneForm: return geometry::div_oneform(f, ik, x);
    case OperatorKind::Trace: return geometry::trace_sym2(f, x);
    case OperatorKind::Hessian: return geometry::hessian(f, ik, x);
    case OperatorKind::LieMetric: return geometry::lie_metric(f, ik, x);
    case OperatorKind::ConformalKilling: return geometry::conformal_killing(f, ik, x);
    case OperatorKind::ConformalKillingAdjoint:
      return geometry::conformal_killing_adjoint(f, ik, x);
    case OperatorKind::CklNormal: return geometry::ckl_normal(f, ik, x);
    case OperatorKind::Laplacian: return geometry::laplacian_oneform(f, ik, x);
    case OperatorKind::MoncriefP:
      return geometry::moncrief_p_mode(f, ik, ric, x.head(3), x.tail(1));
    case OperatorKind::MoncriefPAdjoint:
      return geometry::moncrief_pstar_mode(f, ik, ric, x.head(6), x.tail(6));
    case OperatorKind::SplitP:
      return geometry::split_p_mode(f, ik, ric, a, b, x.head(1), x.tail(3));
    case OperatorKind::SplitPAdjoint:
      return geometry::split_pstar_mode(f, ik, ric, a, b, x.head(1), x.tail(3));
  }
  fail(ErrorCode::Unsupported, "operator_matrix: unknown kind");
}

}  // namespace

OperatorKind parse_operator_kind(const std::string& name) {
  for (const auto& [kind, info] : kind_table()) {
    if (name == info.name) return kind;
  }
  fail(ErrorCode::Unsupported, "unknown operator kind '" + name + "'");
}

const char* to_string(OperatorKind kind) noexcept {
  const auto it = kind_table().find(kind);
  return it == kind_table().end() ? "unknown" : it->second.name;
}

OperatorMatrix operator_matrix(const InvariantGeometry& geom, OperatorKind kind,
                               double a, double b) {
  const auto it = kind_table().find(kind);
  if (it == kind_table().end()) fail(ErrorCode::Unsupported, "operator_matrix: unknown kind");
  OperatorMatrix op;
  op.domain = it->second.dom;
  op.codomain = it->second.cod;
  const int nd = block_size(op.domain);
  const int nc = block_size(op.codomain);
  op.matrix.resize(nc, nd);
  for (int j = 0; j < nd; ++j) {
    const CVec col = apply(geom, kind, a, b, CVec::Unit(nd, j));
    op.matrix.col(j) = col.real();
  }
  return op;
}

Eigen::MatrixXd block_gram(const InvariantGeometry& geom, const std::vector<Rank>& blocks) {
  const int total = block_size(blocks);
  Eigen::MatrixXd W = Eigen::MatrixXd::Zero(total, total);
  int off = 0;
  for (Rank r : blocks) {
    const int d = spectral::component_count(r, 3);
    W.block(off, off, d, d) = geom.volume * geometry::gram(geom.frame, r);
    off += d;
  }
  return W;
}

Eigen::MatrixXd weighted_adjoint(const InvariantGeometry& geom, const OperatorMatrix& op) {
  const Eigen::MatrixXd Wd = block_gram(geom, op.domain);
  const Eigen::MatrixXd Wc = block_gram(geom, op.codomain);
  return Wd.ldlt().solve(op.matrix.transpose() * Wc);
}

Eigen::MatrixXd null_space(const Eigen::MatrixXd& M, double rel_tol) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double smax = s.size() > 0 ? s(0) : 0.0;
  int rank = 0;
  for (int i = 0; i < s.size(); ++i) {
    if (s(i) > rel_tol * smax && s(i) > 0.0) ++rank;
  }
  const int cols = static_cast<int>(M.cols());
  return svd.matrixV().rightCols(cols - rank);
}

Eigen::MatrixXd killing_basis(const InvariantGeometry& geom) {
  const auto op = operator_matrix(geom, OperatorKind::LieMetric);
  Eigen::MatrixXd N = null_space(op.matrix);
  if (N.cols() == 0) return N;
  // orthonormalize in the invariant inner product
  const Eigen::MatrixXd W = block_gram(geom, {Rank::OneForm});
  const Eigen::MatrixXd S = N.transpose() * W * N;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S);
  const Eigen::MatrixXd inv_sqrt =
      es.eigenvectors() * es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
      es.eigenvectors().transpose();
  return N * inv_sqrt;
}

}  // namespace linwave::invariant
