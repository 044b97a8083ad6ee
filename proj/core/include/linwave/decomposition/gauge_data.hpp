#pragma once

#include "linwave/constraints/constraints.hpp"

namespace linwave::decomposition {

/// Initial data induced by the gauge solution L_V g with V = N nu + beta:
///   h~ = L_beta g~ + 2 k~ N,
///   m~ = L_beta k~ + Hess N + (2 k~ o k~ - Ric - (tr k~) k~) N.
/// Valid on every slice kind.
constraints::InitialDataPair gauge_producing_data(const spectral::SpectralField& N,
                                                  const spectral::SpectralField& beta,
                                                  const geometry::SliceGeometry& slice);

}  // namespace linwave::decomposition
