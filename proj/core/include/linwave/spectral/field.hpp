#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "linwave/common.hpp"
#include "linwave/spectral/lattice.hpp"

namespace linwave::spectral {

/// Real scalar, one-form or symmetric 2-tensor field stored as truncated
/// Fourier coefficients,
///
///   f(x) = sum_k coeff(k) exp(i k.x),
///
/// with coefficient index (mode * components + component). Sym2 components
/// use the upper-triangle order of `sym_index`.
///
/// A lattice with nmax = 0 holds a single constant mode; the left-invariant
/// sector of the Berger sphere reuses it to store frame components.
class SpectralField {
 public:
  SpectralField(ModeLattice lattice, Rank rank);
  SpectralField(ModeLattice lattice, Rank rank, std::vector<cplx> coeffs);

  static SpectralField zeros(const ModeLattice& lattice, Rank rank) {
    return SpectralField(lattice, rank);
  }

  const ModeLattice& lattice() const noexcept { return lattice_; }
  Rank rank() const noexcept { return rank_; }
  int components() const noexcept { return ncomp_; }
  std::size_t modes() const noexcept { return lattice_.size(); }

  cplx coeff(std::size_t mode, int c) const {
    return coeffs_[mode * static_cast<std::size_t>(ncomp_) +
                   static_cast<std::size_t>(c)];
  }
  cplx& coeff(std::size_t mode, int c) {
    return coeffs_[mode * static_cast<std::size_t>(ncomp_) +
                   static_cast<std::size_t>(c)];
  }

  /// Components of one mode.
  std::span<const cplx> mode_coeffs(std::size_t mode) const {
    return {coeffs_.data() + mode * static_cast<std::size_t>(ncomp_),
            static_cast<std::size_t>(ncomp_)};
  }
  std::span<cplx> mode_coeffs(std::size_t mode) {
    return {coeffs_.data() + mode * static_cast<std::size_t>(ncomp_),
            static_cast<std::size_t>(ncomp_)};
  }

  const std::vector<cplx>& data() const noexcept { return coeffs_; }
  std::vector<cplx>& data() noexcept { return coeffs_; }

  /// max |coeff(-k) - conj(coeff(k))|, relative to the largest coefficient.
  double hermitian_defect() const;
  bool is_hermitian(double tol = 1e-12) const {
    return hermitian_defect() <= tol;
  }
  /// Replace each pair by its Hermitian average.
  void symmetrize();

  double max_abs() const;

  SpectralField& operator+=(const SpectralField& other);
  SpectralField& operator-=(const SpectralField& other);
  SpectralField& operator*=(double s);

  friend SpectralField operator+(SpectralField a, const SpectralField& b) {
    return a += b;
  }
  friend SpectralField operator-(SpectralField a, const SpectralField& b) {
    return a -= b;
  }
  friend SpectralField operator*(double s, SpectralField a) { return a *= s; }

 private:
  void require_compatible(const SpectralField& other, const char* op) const;

  ModeLattice lattice_;
  Rank rank_;
  int ncomp_;
  std::vector<cplx> coeffs_;
};

/// Flat L2 pairing (2 pi)^n sum_k sum conj(a) b, with sym2 off-diagonal
/// components counted twice (full tensor contraction).
double l2_inner(const SpectralField& a, const SpectralField& b);

/// Weight of stored component `c` in a flat contraction (1 or 2).
double flat_component_weight(Rank rank, int n, int c);

}  // namespace linwave::spectral
