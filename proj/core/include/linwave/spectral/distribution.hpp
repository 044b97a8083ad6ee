#pragma once

#include <array>

#include "linwave/spectral/field.hpp"
#include "linwave/spectral/sobolev.hpp"

namespace linwave::spectral {

/// The sym2 field delta^(order)(x^axis) dx^i (x) dx^j (symmetrized), supported
/// on the hyperplane x^axis = 0. Its coefficients are (i k_axis)^order / (2 pi)
/// on the modes with every other wave-vector entry zero.
struct LineDistribution {
  int n = 3;
  int order = 0;
  int axis = 2;
  std::array<int, 2> slot{0, 1};

  /// Coefficient growth exponent: |coeff(k)| ~ |k|^order.
  int growth() const noexcept { return order; }

  /// Restriction to a lattice.
  SpectralField on_lattice(const ModeLattice& lattice) const;

  /// Squared truncated Sobolev norm, summing only |k_axis| <= truncation.
  /// Equals sobolev_norm_sq(on_lattice(L), s) for any L with nmax = truncation
  /// but needs no lattice storage, so large truncations are cheap.
  double truncated_norm_sq(SobolevOrder s, int truncation) const;
};

/// Convenience wrapper: LineDistribution{...}.on_lattice(lattice).
SpectralField distributional_coefficients(const ModeLattice& lattice, int order,
                                          int axis, std::array<int, 2> slot);

}  // namespace linwave::spectral
