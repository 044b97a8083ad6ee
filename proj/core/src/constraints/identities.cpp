#include "linwave/constraints/identities.hpp"

#include "linwave/spectral/sobolev.hpp"

namespace linwave::constraints {

using spectral::Rank;
using spectral::sym_index;

IdentityResidual normal_identities(const geometry::CauchyJet& jet) {
  using namespace geometry;
  jet.validate();
  const auto& L = jet.lattice();
  const int n = L.dim();
  const int D = n + 1;
  const BackgroundJets bj = jet.background.jets(jet.t, 2);
  const SliceGeometry slice = jet.background.slice(jet.t);
  const RMat& Ginv = slice.frame().Ginv;

  IdentityResidual r{SpectralField(L, Rank::Scalar), SpectralField(L, Rank::Scalar),
                     SpectralField(L, Rank::OneForm), SpectralField(L, Rank::OneForm)};
  for (std::size_t mode = 0; mode < L.size(); ++mode) {
    const PackedJets h = jet.dt_jets(mode, 2);
    const PackedJets ric = apply_spacetime_op(bj, symbol_of(L.mode(mode)), SpacetimeOp::DRic, h);
    cplx s = ric[static_cast<std::size_t>(sym_index(0, 0, D))].d[0];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (Ginv(i, j) == 0.0) continue;
        s += Ginv(i, j) * ric[static_cast<std::size_t>(sym_index(i + 1, j + 1, D))].d[0];
      }
    r.lhs_scalar.coeff(mode, 0) = s;
    for (int i = 0; i < n; ++i) r.lhs_oneform.coeff(mode, i) = ric[static_cast<std::size_t>(sym_index(0, i + 1, D))].d[0];
  }
  const ConstraintResidual rhs = dphi(induced_data(jet));
  r.rhs_scalar = rhs.phi1;
  r.rhs_oneform = rhs.phi2;
  r.residual_scalar = spectral::sobolev_norm(r.lhs_scalar - r.rhs_scalar, 0.0);
  r.residual_oneform = spectral::sobolev_norm(r.lhs_oneform - r.rhs_oneform, 0.0);
  r.scale = std::max({spectral::sobolev_norm(r.lhs_scalar, 0.0), spectral::sobolev_norm(r.rhs_scalar, 0.0),
                      spectral::sobolev_norm(r.lhs_oneform, 0.0), spectral::sobolev_norm(r.rhs_oneform, 0.0)});
  return r;
}

}  // namespace linwave::constraints
