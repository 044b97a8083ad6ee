#pragma once

#include <array>

#include <Eigen/Dense>

#include "linwave/geometry/frame_calculus.hpp"

namespace linwave::invariant {

/// Left-invariant frame on a 3-dimensional Lie group: structure constants of
/// [e_i, e_j] = c^k_ij e_k and the metric components G_ij in this frame.
struct HomogeneousFrame {
  std::array<double, 27> c{};  // c^k_ij at (k * 3 + i) * 3 + j
  Eigen::Matrix3d G = Eigen::Matrix3d::Identity();

  double C(int k, int i, int j) const {
    return c[static_cast<std::size_t>((k * 3 + i) * 3 + j)];
  }

  /// SU(2) with [e_i, e_j] = 2 eps_ijk e_k and G = diag(l1, l2, l3).
  static HomogeneousFrame su2(double l1, double l2, double l3);
  /// Berger family G = diag(lambda, 1, 1).
  static HomogeneousFrame berger(double lambda);

  /// Throws unless c is an antisymmetric Lie bracket and G is SPD.
  void validate() const;
  /// Largest Jacobi-identity defect.
  double jacobi_defect() const;
};

struct InvariantGeometry {
  geometry::FrameData frame;  // G and Levi-Civita Gamma^k_ij
  Eigen::Matrix3d ric;        // Ric(e_i, e_j)
  double scal = 0.0;
  double volume = 0.0;        // 2 pi^2 sqrt(det G)
};

/// Levi-Civita connection from the Koszul formula for left-invariant fields,
/// then the curvature tensors.
InvariantGeometry invariant_geometry(const HomogeneousFrame& frame);

/// Independent check: Ricci principal values of a diagonal SU(2) metric in
/// the orthonormalized frame from Milnor's formula r_i = 2 mu_j mu_k. Returned
/// as frame components Ric(e_i, e_i) = l_i r_i.
Eigen::Vector3d milnor_ricci_diagonal(double l1, double l2, double l3);

/// Scalar curvature of the Berger metric diag(lambda, 1, 1).
double berger_scalar_curvature(double lambda);

/// The squashing lambda* > 1 with vanishing scalar curvature, found by
/// bracketing root search on berger_scalar_curvature.
double berger_scalar_flat_lambda();

}  // namespace linwave::invariant
