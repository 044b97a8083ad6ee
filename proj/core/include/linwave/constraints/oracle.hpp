#pragma once

#include "linwave/constraints/constraints.hpp"

namespace linwave::constraints {

struct OracleOptions {
  double epsilon = 1e-5;  // central difference in the perturbation size
  double delta = 1e-3;    // finite-difference stencil step (torus)
  int grid = 0;           // sample grid per axis; 0 means 2 nmax + 1
};

/// Brute-force linearisation of the nonlinear constraint map,
///   [Phi(g + eps h, k + eps m) - Phi(g - eps h, k - eps m)] / (2 eps),
/// with spatial derivatives from 4th-order central differences of the
/// pointwise series (torus) or the orthonormal-frame curvature formula of a
/// unimodular group (Berger). Independent of the spectral D Phi.
///
/// Rejects pairs declared distributional (negative Sobolev order).
ConstraintResidual dphi_oracle(const InitialDataPair& pair, const OracleOptions& opt = {});

/// Scalar curvature of a left-invariant metric G on SU(2) with
/// [e_i, e_j] = 2 eps_ijk e_k, from an orthonormal basis:
///   Scal = -1/4 sum |[E_a, E_b]|^2 - 1/2 sum_a tr(ad_{E_a}^2).
long double su2_scalar_curvature(const long double G[3][3]);

}  // namespace linwave::constraints
