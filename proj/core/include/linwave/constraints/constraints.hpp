#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include "linwave/geometry/cauchy_jet.hpp"
#include "linwave/geometry/slice.hpp"
#include "linwave/spectral/field.hpp"

namespace linwave::constraints {

using geometry::SliceGeometry;
using spectral::SpectralField;

/// Linearised first and second fundamental forms (h~, m~) on a slice.
struct InitialDataPair {
  SpectralField h;
  SpectralField m;
  SliceGeometry slice;
  double sobolev_order = 0.0;  // declared regularity; negative means distributional

  InitialDataPair(SpectralField h_, SpectralField m_, SliceGeometry slice_,
                  double sobolev_order_ = 0.0);
  static InitialDataPair zeros(const SliceGeometry& slice, const spectral::ModeLattice& lattice);

  const spectral::ModeLattice& lattice() const { return h.lattice(); }
  void validate() const;
};

/// A scalar and a one-form field, the two parts of a constraint map.
struct ConstraintFields {
  SpectralField scalar;
  SpectralField oneform;
};

struct ConstraintResidual {
  SpectralField phi1;  // scalar part
  SpectralField phi2;  // one-form part
  SliceGeometry slice;

  struct Norms {
    double s;
    double phi1;
    double phi2;
  };
  std::vector<Norms> norms;  // at the requested Sobolev orders

  /// Multiplier norm of order s on tori; the invariant L2 norm on Berger.
  double norm1(double s = 0.0) const;
  double norm2(double s = 0.0) const;
  double max_norm(double s = 0.0) const { return std::max(norm1(s), norm2(s)); }
};

/// Phi(g~, k~) for (possibly non-constant) sym2 fields g~, k~ on the slice's
/// backend. Torus fields are differentiated spectrally and combined on a
/// grid; invariant fields are evaluated in the frame.
ConstraintFields phi(const SpectralField& g, const SpectralField& k, const SliceGeometry& slice);
/// Phi of the slice's own background data.
ConstraintFields phi_background(const SliceGeometry& slice, int nmax = 0);

/// D Phi(h~, m~) including every k~ term; norms evaluated at `orders`.
ConstraintResidual dphi(const InitialDataPair& pair, const std::vector<double>& orders = {0.0});

/// Per-mode matrix of D Phi: rows (scalar, one-form), columns (h~, m~) packed.
Eigen::MatrixXcd dphi_symbol(const SliceGeometry& slice, const geometry::Symbol& ik);

/// Orthogonal projection of each mode of (h~, m~) onto the kernel of the
/// D Phi symbol: data satisfying the linearised constraints exactly.
InitialDataPair project_to_constraints(const InitialDataPair& pair);

/// Induced (h~, m~) of a jet on its slice:
///   m~ = -1/2 h(nu,nu) k~ - 1/2 nabla_X h(nu,Y) - 1/2 nabla_Y h(nu,X) + 1/2 nabla_nu h(X,Y).
InitialDataPair induced_data(const geometry::CauchyJet& jet);

}  // namespace linwave::constraints
