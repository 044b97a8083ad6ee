#pragma once

#include "linwave/constraints/constraints.hpp"

namespace linwave::decomposition {

using constraints::InitialDataPair;
using geometry::SliceGeometry;
using spectral::SpectralField;

/// L2-orthogonal splitting of initial data into the image of
///   P(beta, N) = (L_beta g, Hess N - Ric N)
/// and the kernel of its adjoint P*(h, m) = (-2 div h, div div m - g(Ric, m)).
struct MoncriefSplit {
  SpectralField N;        // lapse-like scalar
  SpectralField beta;     // shift-like one-form
  SpectralField gauge_h;  // P(beta, N)
  SpectralField gauge_m;
  SpectralField gamma_h;  // remainder in ker P*
  SpectralField gamma_m;

  double reconstruction = 0.0;     // relative
  double adjoint_residual = 0.0;   // |P*(gamma)| / |input|
  double orthogonality = 0.0;      // |<P(beta, N), gamma>| / (|gauge| |gamma|), 0 if either vanishes
};

/// P(beta, N) as an initial-data pair on `slice`.
InitialDataPair moncrief_apply(const SpectralField& N, const SpectralField& beta, const SliceGeometry& slice);
/// P*(h, m) as (one-form, scalar).
std::pair<SpectralField, SpectralField> moncrief_adjoint_apply(const InitialDataPair& pair);

/// Weighted least-squares projection per mode, on scalar-flat slices with
/// k~ = 0. (N, beta) are returned orthogonal to ker P.
MoncriefSplit moncrief_project(const InitialDataPair& pair);

}  // namespace linwave::decomposition
