#pragma once

#include <array>
#include <string>
#include <vector>

#include "linwave/geometry/jet_tensor.hpp"
#include "linwave/geometry/slice.hpp"

namespace linwave::geometry {

enum class SpacetimeKind { MinkowskiTorus, Kasner };

const char* to_string(SpacetimeKind kind) noexcept;
SpacetimeKind parse_spacetime_kind(const std::string& name);

/// Background jets at one time: diagonal metric, its inverse, Christoffel
/// symbols Gamma^l_mn (dense with a nonzero mask) and Riemann R^a_bcd
/// (sparse list), all as jets in t.
struct BackgroundJets {
  int D = 4;
  std::vector<Jet> g;     // diagonal g_mm
  std::vector<Jet> ginv;  // diagonal g^mm
  std::vector<Jet> gamma; // D^3, index (l * D + m) * D + n
  std::vector<bool> gamma_nz;
  struct RiemannEntry {
    int a, b, c, d;
    Jet value;
  };
  std::vector<RiemannEntry> riemann;

  const Jet& Gam(int l, int m, int n) const {
    return gamma[static_cast<std::size_t>((l * D + m) * D + n)];
  }
  bool Gnz(int l, int m, int n) const {
    return gamma_nz[static_cast<std::size_t>((l * D + m) * D + n)];
  }
};

/// Spatially homogeneous vacuum background g = -dt^2 + sum_i t^{2 p_i} dx_i^2
/// on R x T^n: Minkowski (p = 0) or Kasner. Lapse 1, zero shift.
class SpacetimeBackground {
 public:
  static SpacetimeBackground minkowski(int n);
  static SpacetimeBackground kasner(const std::array<double, 3>& p);

  SpacetimeKind kind() const noexcept { return kind_; }
  int n() const noexcept { return n_; }
  int D() const noexcept { return n_ + 1; }
  std::string id() const { return to_string(kind_); }
  const std::array<double, 3>& exponents() const noexcept { return p_; }

  /// Throws DomainViolation for t <= 0 on Kasner.
  void check_time(double t) const;

  /// Jets of order `order` for metric and Christoffels; Riemann one lower.
  BackgroundJets jets(double t, int order) const;

  /// The slice {t} with induced g~ and k~.
  SliceGeometry slice(double t) const;

 private:
  SpacetimeKind kind_ = SpacetimeKind::MinkowskiTorus;
  int n_ = 3;
  std::array<double, 3> p_{0.0, 0.0, 0.0};
};

}  // namespace linwave::geometry
