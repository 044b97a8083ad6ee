#pragma once

#include <optional>
#include <vector>

#include "linwave/evolution/evolve.hpp"

namespace linwave::evolution {

/// Value of the gauge vector on the initial slice, V = N nu + beta.
/// Absent means V = 0 there.
struct GaugeSeed {
  spectral::SpectralField N;
  spectral::SpectralField beta;
};

/// U = V_flat along the solution, solving nabla* nabla U = -div hbar with
///   U|_S = (-N, beta),
///   (nabla_t U)_0 = 1/2 h_00,
///   (nabla_t U)_i = h_0i - (nabla_i U)_0,
/// so that L_V g matches h and its normal components on the initial slice.
struct GaugeRecovery {
  std::vector<double> times;
  std::vector<std::vector<cplx>> U;     // per sample, mode-major, D entries per mode
  std::vector<std::vector<cplx>> Udot;  // d/dt of the coordinate components
  std::vector<double> deviation;        // |h - L_V g| / |h|, or the absolute value when h = 0
  double max_deviation() const;
};

/// Re-integrates h together with U on Kasner (same steps as the solution)
/// and uses the closed form for exact Minkowski solutions, where the source
/// div hbar vanishes identically for gauge-fixed data.
GaugeRecovery recover_gauge_vector(const Solution& sol, const std::optional<GaugeSeed>& seed = std::nullopt);

}  // namespace linwave::evolution
