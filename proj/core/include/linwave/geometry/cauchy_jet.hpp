#pragma once

#include <array>
#include <optional>

#include "linwave/geometry/mode_operator.hpp"
#include "linwave/spectral/field.hpp"

namespace linwave::geometry {

/// A spacetime symmetric 2-tensor h and its normal derivative on the slice
/// {t} of a background, split into normal/tangential blocks. With unit lapse
/// and zero shift, nu = d/dt, so index 0 of packed spacetime vectors is nu.
struct CauchyJet {
  SpacetimeBackground background = SpacetimeBackground::minkowski(3);
  double t = 0.0;

  spectral::SpectralField h_nn;  // h(nu, nu)
  spectral::SpectralField h_n;   // h(nu, .)
  spectral::SpectralField h_s;   // h(., .)
  spectral::SpectralField dh_nn; // (nabla_nu h)(nu, nu)
  spectral::SpectralField dh_n;  // (nabla_nu h)(nu, .)
  spectral::SpectralField dh_s;  // (nabla_nu h)(., .)

  /// Optional explicit second time derivatives of the coordinate
  /// components (scalar, one-form, sym2 blocks). Without them, higher
  /// derivatives come from the closure box_L h = 0.
  std::optional<std::array<spectral::SpectralField, 3>> d2h;

  static CauchyJet zeros(const SpacetimeBackground& bg, double t,
                         const spectral::ModeLattice& lattice);

  const spectral::ModeLattice& lattice() const { return h_s.lattice(); }
  /// Throws when blocks disagree in lattice or rank.
  void validate() const;

  /// Packed spacetime sym2 (D(D+1)/2 entries) of h at one mode.
  Eigen::VectorXcd value(std::size_t mode) const;
  /// Packed (nabla_nu h) at one mode.
  Eigen::VectorXcd nabla_nu(std::size_t mode) const;
  void set_mode(std::size_t mode, const Eigen::VectorXcd& h, const Eigen::VectorXcd& nabla_nu_h);

  /// d/dt jets of the components up to `order` (>= 1). Orders >= 2 use d2h
  /// for the second derivative when present (and stop there), otherwise the
  /// wave closure.
  PackedJets dt_jets(std::size_t mode, int order) const;
};

/// Pack blocks (scalar, one-form, sym2 at a mode) into a spacetime sym2.
Eigen::VectorXcd pack_blocks(int n, cplx nn, const Eigen::VectorXcd& n_, const Eigen::VectorXcd& s);
/// Inverse of pack_blocks.
void unpack_blocks(int n, const Eigen::VectorXcd& v, cplx& nn, Eigen::VectorXcd& n_, Eigen::VectorXcd& s);

}  // namespace linwave::geometry
