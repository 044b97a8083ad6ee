#pragma once

#include "linwave/constraints/constraints.hpp"
#include "linwave/geometry/cauchy_jet.hpp"

namespace linwave::constraints {

/// Both sides of the normal-component identities of the linearised Ricci
/// tensor on a vacuum background,
///   tr_g DRic(h) + 2 DRic(h)(nu, nu) = D Phi_1(h~, m~),
///   DRic(h)(nu, .)                   = D Phi_2(h~, m~),
/// with the left sides from the spacetime DRic symbol and the right sides
/// from dphi on the induced data.
struct IdentityResidual {
  SpectralField lhs_scalar, rhs_scalar;
  SpectralField lhs_oneform, rhs_oneform;
  double residual_scalar = 0.0;   // L2 norm of lhs - rhs
  double residual_oneform = 0.0;
  double scale = 0.0;             // largest side norm, for relative checks

  double max_residual() const { return std::max(residual_scalar, residual_oneform); }
};

/// The jet's second time derivative comes from its explicit d2h blocks or,
/// when absent, from box_L h = 0.
IdentityResidual normal_identities(const geometry::CauchyJet& jet);

}  // namespace linwave::constraints
