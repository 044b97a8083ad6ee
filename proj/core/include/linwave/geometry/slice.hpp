#pragma once

#include <array>
#include <string>

#include "linwave/geometry/frame_calculus.hpp"
#include "linwave/invariant/frame.hpp"
#include "linwave/spectral/field.hpp"

namespace linwave::geometry {

enum class SliceKind { FlatTorus, Kasner, BergerInvariant };

const char* to_string(SliceKind kind) noexcept;
SliceKind parse_slice_kind(const std::string& name);

/// Default Kasner exponents.
inline constexpr std::array<double, 3> kDefaultKasner{2.0 / 3.0, 2.0 / 3.0, -1.0 / 3.0};

/// A background Cauchy slice with constant frame data: metric g~, second
/// fundamental form k~, Ricci and scalar curvature.
///
/// Torus slices use the coordinate frame of (R / 2 pi Z)^n. The Berger slice
/// uses a left-invariant frame and only acts on invariant fields, stored on
/// an n = 3, nmax = 0 lattice.
class SliceGeometry {
 public:
  static SliceGeometry flat_torus(int n);
  /// Kasner slice {t = t0} of -dt^2 + sum t^{2 p_i} dx_i^2.
  static SliceGeometry kasner(const std::array<double, 3>& p, double t0);
  static SliceGeometry berger(double lambda);
  /// Berger slice at the scalar-flat squashing.
  static SliceGeometry berger_scalar_flat();

  SliceKind kind() const noexcept { return kind_; }
  int dim() const noexcept { return frame_.n; }
  bool is_torus() const noexcept { return kind_ != SliceKind::BergerInvariant; }
  std::string id() const { return to_string(kind_); }

  const FrameData& frame() const noexcept { return frame_; }
  const RMat& metric() const noexcept { return frame_.G; }
  const RMat& k() const noexcept { return k_; }
  const RMat& ric() const noexcept { return ric_; }
  double scal() const noexcept { return scal_; }
  double volume() const noexcept { return volume_; }
  double trace_k() const;

  const std::array<double, 3>& kasner_exponents() const noexcept { return p_; }
  double time() const noexcept { return t0_; }
  double berger_lambda() const noexcept { return lambda_; }

  /// k~ = 0 and |Scal| <= 1e-10: where the data splittings apply.
  bool scalar_flat_static() const;

  /// Throws BackendMismatch when `lattice` cannot carry fields of this slice.
  void check_lattice(const spectral::ModeLattice& lattice) const;
  void check_field(const spectral::SpectralField& f) const { check_lattice(f.lattice()); }

  /// Derivative symbol of a lattice mode (zero on the invariant sector).
  Symbol symbol(const spectral::ModeLattice& lattice, std::size_t mode) const;

  /// Natural lattice for this slice at truncation nmax (nmax ignored for Berger).
  spectral::ModeLattice lattice(int nmax) const;

  /// Background g~ and k~ as constant sym2 fields.
  spectral::SpectralField metric_field(const spectral::ModeLattice& lattice) const;
  spectral::SpectralField k_field(const spectral::ModeLattice& lattice) const;
  spectral::SpectralField ric_field(const spectral::ModeLattice& lattice) const;

 private:
  SliceGeometry() = default;

  SliceKind kind_ = SliceKind::FlatTorus;
  FrameData frame_;
  RMat k_;
  RMat ric_;
  double scal_ = 0.0;
  double volume_ = 0.0;
  std::array<double, 3> p_{0.0, 0.0, 0.0};
  double t0_ = 1.0;
  double lambda_ = 1.0;
};

/// Validates Kasner exponents: sum p = sum p^2 = 1 within 1e-12.
void validate_kasner(const std::array<double, 3>& p);

/// Constant sym2 field with the given matrix on the zero mode.
spectral::SpectralField constant_sym2(const spectral::ModeLattice& lattice, const RMat& M);

/// Volume-normalized L2 pairing in the slice metric: sum over modes of
/// metric_pair, times the slice volume.
double slice_inner(const SliceGeometry& geom, const spectral::SpectralField& a,
                   const spectral::SpectralField& b);
double slice_norm(const SliceGeometry& geom, const spectral::SpectralField& a);

}  // namespace linwave::geometry
