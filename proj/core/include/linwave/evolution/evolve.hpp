#pragma once

#include <array>
#include <vector>

#include "linwave/geometry/cauchy_jet.hpp"

namespace linwave::evolution {

using geometry::CauchyJet;
using geometry::SpacetimeBackground;

struct EvolveOptions {
  double t_end = 1.0;
  double dt = 0.0;     // RK4 step bound; ignored when exact
  bool exact = false;  // closed-form evolution, Minkowski torus only
  std::vector<double> sample_times;  // t0 and t_end are always included
};

/// One mode's coordinate components h_ab(t) and d/dt h_ab(t), packed
/// spacetime sym2 over indices 0..n.
struct ModeTrajectory {
  std::array<int, 3> k{};
  std::vector<double> times;
  std::vector<Eigen::VectorXcd> state;
  std::vector<Eigen::VectorXcd> rate;
};

/// Solution of box_L h = 0 stored per mode at the sample times.
class Solution {
 public:
  Solution(SpacetimeBackground bg, spectral::ModeLattice lattice, std::vector<double> times, double dt, bool exact);

  const SpacetimeBackground& background() const noexcept { return bg_; }
  const spectral::ModeLattice& lattice() const noexcept { return lattice_; }
  const std::vector<double>& times() const noexcept { return times_; }
  double dt() const noexcept { return dt_; }
  bool exact() const noexcept { return exact_; }
  int components() const noexcept { return nh_; }

  /// Coefficients at sample i, mode-major with components() per mode.
  const std::vector<cplx>& state(std::size_t i) const { return state_.at(i); }
  const std::vector<cplx>& rate(std::size_t i) const { return rate_.at(i); }
  std::vector<cplx>& state(std::size_t i) { return state_.at(i); }
  std::vector<cplx>& rate(std::size_t i) { return rate_.at(i); }

  /// Index of the sample at time tau; throws OutOfRange when absent.
  std::size_t sample_index(double tau) const;
  /// Cauchy jet (h, nabla_nu h) on the slice of sample i.
  CauchyJet jet(std::size_t i) const;
  ModeTrajectory mode_trajectory(std::size_t mode) const;

 private:
  SpacetimeBackground bg_;
  spectral::ModeLattice lattice_;
  std::vector<double> times_;
  double dt_;
  bool exact_;
  int nh_;
  std::vector<std::vector<cplx>> state_, rate_;
};

/// Evolve a jet to t_end, recording the samples in the order they are reached. Kasner uses
/// fixed-step RK4 (dt > 0 required, no crossing of t = 0); the Minkowski
/// torus may use the closed form. Backward evolution (t_end < t0) is allowed.
Solution evolve(const CauchyJet& jet, const EvolveOptions& options);

/// Sorted, de-duplicated sample times including both ends.
std::vector<double> resolve_sample_times(double t0, double t_end, const std::vector<double>& extra);

}  // namespace linwave::evolution
