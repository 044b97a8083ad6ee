#pragma once

#include <vector>

#include <Eigen/Dense>

namespace linwave::decomposition::detail {

/// Minimal-norm solution of M x = r in the W inner product. Singular values
/// at or below rel_tol * scale count as kernel; the result is W-orthogonal
/// to that kernel.
inline Eigen::VectorXcd solve_deflated(const Eigen::MatrixXcd& M, const Eigen::VectorXcd& r,
                                       const Eigen::MatrixXcd& W, double scale, double rel_tol = 1e-10) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cut = rel_tol * scale;
  Eigen::VectorXcd x = Eigen::VectorXcd::Zero(M.cols());
  std::vector<Eigen::Index> kernel;
  for (Eigen::Index i = 0; i < M.cols(); ++i) {
    const double s = i < sv.size() ? sv(i) : 0.0;
    if (s > cut) {
      x += svd.matrixV().col(i) * (svd.matrixU().col(i).dot(r) / s);
    } else {
      kernel.push_back(i);
    }
  }
  if (!kernel.empty()) {
    Eigen::MatrixXcd N(M.cols(), static_cast<Eigen::Index>(kernel.size()));
    for (std::size_t j = 0; j < kernel.size(); ++j) N.col(static_cast<Eigen::Index>(j)) = svd.matrixV().col(kernel[j]);
    const Eigen::MatrixXcd NW = N.adjoint() * W;
    x -= N * (NW * N).ldlt().solve(NW * x);
  }
  return x;
}

}  // namespace linwave::decomposition::detail
