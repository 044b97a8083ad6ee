#pragma once

#include <vector>

#include "linwave/constraints/constraints.hpp"
#include "linwave/evolution/evolve.hpp"

namespace linwave::evolution {

struct DiagnosticsOptions {
  double sobolev_k = 0.0;  // energies use H^{k-j}
  int J = 1;               // highest time derivative in the energies
};

/// Per-sample monitors of a solution. Residuals are relative:
///   gauge_res = |div hbar| / |h|_{H^1-type},
///   dphi_res  = |D Phi_i(h~, m~)| / (|h~|_{H^2} + |m~|_{H^1}),
/// all in coordinate multiplier norms on the slice torus. energy[i][j] is
/// |nabla_t^j h(t_i)|_{H^{k-j}} over the packed spacetime components.
struct DiagnosticsSeries {
  int J = 1;
  double sobolev_k = 0.0;
  std::vector<double> times;
  std::vector<double> gauge_res;
  std::vector<double> dphi1_res;
  std::vector<double> dphi2_res;
  std::vector<std::vector<double>> energy;

  double max_gauge() const;
  double max_constraint() const;
};

DiagnosticsSeries diagnostics(const Solution& sol, const DiagnosticsOptions& options = {});

/// (h~, m~) induced on the slice at sample time tau.
constraints::InitialDataPair extract_induced_data(const Solution& sol, double tau);

/// Coordinate multiplier norm of packed spacetime sym2 coefficients
/// (mode-major, D(D+1)/2 per mode), off-diagonal entries counted twice.
double spacetime_sobolev_norm(const spectral::ModeLattice& lattice, int D, const std::vector<cplx>& coeffs,
                              double s);

}  // namespace linwave::evolution
