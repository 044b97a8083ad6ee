#include "linwave/spectral/field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace linwave::spectral {

SpectralField::SpectralField(ModeLattice lattice, Rank rank)
    : lattice_(lattice),
      rank_(rank),
      ncomp_(component_count(rank, lattice.dim())),
      coeffs_(lattice.size() * static_cast<std::size_t>(ncomp_)) {}

SpectralField::SpectralField(ModeLattice lattice, Rank rank,
                             std::vector<cplx> coeffs)
    : lattice_(lattice),
      rank_(rank),
      ncomp_(component_count(rank, lattice.dim())),
      coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != lattice_.size() * static_cast<std::size_t>(ncomp_)) {
    fail(ErrorCode::CountMismatch,
         "SpectralField: expected " +
             std::to_string(lattice_.size() * static_cast<std::size_t>(ncomp_)) +
             " coefficients, got " + std::to_string(coeffs_.size()));
  }
}

double SpectralField::hermitian_defect() const {
  double defect = 0.0;
  const double scale = std::max(max_abs(), 1e-300);
  for (std::size_t m = 0; m < modes(); ++m) {
    const std::size_t mm = lattice_.mirror(m);
    for (int c = 0; c < ncomp_; ++c) {
      defect = std::max(defect, std::abs(coeff(mm, c) - std::conj(coeff(m, c))));
    }
  }
  return defect / scale;
}

void SpectralField::symmetrize() {
  for (std::size_t m = 0; m <= lattice_.zero_mode(); ++m) {
    const std::size_t mm = lattice_.mirror(m);
    for (int c = 0; c < ncomp_; ++c) {
      const cplx avg = 0.5 * (coeff(m, c) + std::conj(coeff(mm, c)));
      coeff(m, c) = avg;
      coeff(mm, c) = std::conj(avg);
    }
  }
}

double SpectralField::max_abs() const {
  double m = 0.0;
  for (const auto& z : coeffs_) m = std::max(m, std::abs(z));
  return m;
}

void SpectralField::require_compatible(const SpectralField& other,
                                       const char* op) const {
  if (!(lattice_ == other.lattice_)) {
    fail(ErrorCode::BackendMismatch, std::string(op) + ": lattice mismatch");
  }
  if (rank_ != other.rank_) {
    fail(ErrorCode::RankMismatch, std::string(op) + ": rank mismatch");
  }
}

SpectralField& SpectralField::operator+=(const SpectralField& other) {
  require_compatible(other, "operator+=");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& other) {
  require_compatible(other, "operator-=");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

SpectralField& SpectralField::operator*=(double s) {
  for (auto& z : coeffs_) z *= s;
  return *this;
}

double flat_component_weight(Rank rank, int n, int c) {
  if (rank != Rank::Sym2) return 1.0;
  const auto ij = sym_pair(c, n);
  return ij[0] == ij[1] ? 1.0 : 2.0;
}

double l2_inner(const SpectralField& a, const SpectralField& b) {
  if (!(a.lattice() == b.lattice())) {
    fail(ErrorCode::BackendMismatch, "l2_inner: lattice mismatch");
  }
  if (a.rank() != b.rank()) {
    fail(ErrorCode::RankMismatch, "l2_inner: rank mismatch");
  }
  const int n = a.lattice().dim();
  std::vector<double> w(static_cast<std::size_t>(a.components()));
  for (int c = 0; c < a.components(); ++c) {
    w[static_cast<std::size_t>(c)] = flat_component_weight(a.rank(), n, c);
  }
  double sum = 0.0;
  for (std::size_t m = 0; m < a.modes(); ++m) {
    for (int c = 0; c < a.components(); ++c) {
      sum += w[static_cast<std::size_t>(c)] *
             (std::conj(a.coeff(m, c)) * b.coeff(m, c)).real();
    }
  }
  return std::pow(2.0 * std::numbers::pi, n) * sum;
}

}  // namespace linwave::spectral
