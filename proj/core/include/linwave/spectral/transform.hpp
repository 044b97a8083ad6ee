#pragma once

#include <span>
#include <vector>

#include "linwave/spectral/field.hpp"

namespace linwave::spectral {

/// Uniform grid samples of a field: `grid` points per axis at
/// x_j = 2 pi i_j / grid, flattened with axis 1 slowest, component-major
/// (all points of component 0, then component 1, ...).
struct GridSamples {
  int n = 3;
  int grid = 0;
  Rank rank = Rank::Scalar;
  std::vector<double> values;

  std::size_t points() const;
};

/// Forward transform onto `lattice`. Requires grid >= 2 nmax + 1.
SpectralField analyze(const GridSamples& samples, const ModeLattice& lattice);

/// Pointwise evaluation of the truncated series on a uniform grid.
/// Rejects fields whose Hermitian defect exceeds `hermitian_tol`.
GridSamples synthesize(const SpectralField& field, int grid,
                       double hermitian_tol = 1e-10);

/// Same as `synthesize` but keeps the imaginary part (no symmetry check).
std::vector<cplx> synthesize_complex(const SpectralField& field, int grid);

/// Evaluate all components at one point x (length n).
std::vector<double> evaluate(const SpectralField& field,
                             std::span<const double> x);

/// Trapezoidal grid quadrature of the flat pointwise pairing; exact for
/// band-limited fields when grid >= 2 nmax + 1.
double grid_inner(const GridSamples& a, const GridSamples& b);

}  // namespace linwave::spectral
