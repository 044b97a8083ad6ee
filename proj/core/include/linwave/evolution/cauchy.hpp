#pragma once

#include <optional>

#include "linwave/constraints/constraints.hpp"
#include "linwave/geometry/cauchy_jet.hpp"

namespace linwave::evolution {

/// Cauchy data for box_L h = 0 in wave gauge from slice data (h~, m~):
///   h(X,Y) = h~,  h(nu,.) = 0,  h(nu,nu) = 0,
///   nabla_nu h(X,Y)  = 2 m~ - (h~ o k~ + k~ o h~),
///   nabla_nu h(nu,X) = div(h~ - 1/2 tr h~ g~),
///   nabla_nu h(nu,nu) = -2 tr m~.
/// The slice must be the background's slice at t0. On Kasner t0 defaults to
/// the slice time; on the Minkowski torus it defaults to 0.
geometry::CauchyJet build_cauchy_jet(const constraints::InitialDataPair& pair,
                                     const geometry::SpacetimeBackground& background,
                                     std::optional<double> t0 = std::nullopt);

}  // namespace linwave::evolution
