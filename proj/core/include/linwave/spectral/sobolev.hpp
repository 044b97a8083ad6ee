#pragma once

#include <optional>

#include "linwave/spectral/field.hpp"

namespace linwave::spectral {

/// Real Sobolev order. Only finite orders are evaluated; `infinite()` exists
/// so configs can name the smooth limit.
class SobolevOrder {
 public:
  constexpr SobolevOrder(double s) : s_(s), inf_(false) {}  // NOLINT(implicit)
  static constexpr SobolevOrder infinite() { return SobolevOrder(); }

  constexpr bool is_finite() const noexcept { return !inf_; }
  double value() const;

 private:
  constexpr SobolevOrder() : s_(0.0), inf_(true) {}
  double s_;
  bool inf_;
};

/// Multiplier norm
///
///   ||f||_s^2 = (2 pi)^n sum_k (1 + |k|^2)^s sum_c w_c |coeff(k, c)|^2
///
/// with w_c the flat contraction weight, so s = 0 gives sqrt(l2_inner(f, f)).
/// `truncation`, when set, restricts the sum to |k_i| <= truncation and must
/// not exceed the lattice nmax.
double sobolev_norm(const SpectralField& f, SobolevOrder s,
                    std::optional<int> truncation = std::nullopt);

/// Squared version of `sobolev_norm`.
double sobolev_norm_sq(const SpectralField& f, SobolevOrder s,
                       std::optional<int> truncation = std::nullopt);

}  // namespace linwave::spectral
