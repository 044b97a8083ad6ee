#include "linwave/evolution/evolve.hpp"

#include <algorithm>
#include <cmath>

#include "mode_system.hpp"

namespace linwave::evolution {

using geometry::SpacetimeKind;

Solution::Solution(SpacetimeBackground bg, spectral::ModeLattice lattice, std::vector<double> times, double dt,
                   bool exact)
    : bg_(std::move(bg)),
      lattice_(std::move(lattice)),
      times_(std::move(times)),
      dt_(dt),
      exact_(exact),
      nh_(bg_.D() * (bg_.D() + 1) / 2) {
  const std::size_t len = lattice_.size() * static_cast<std::size_t>(nh_);
  state_.assign(times_.size(), std::vector<cplx>(len));
  rate_.assign(times_.size(), std::vector<cplx>(len));
}

std::size_t Solution::sample_index(double tau) const {
  for (std::size_t i = 0; i < times_.size(); ++i) {
    if (std::abs(times_[i] - tau) <= 1e-12 * std::max(1.0, std::abs(tau))) return i;
  }
  fail(ErrorCode::OutOfRange, "no sample at t = " + std::to_string(tau));
}

CauchyJet Solution::jet(std::size_t i) const {
  const double t = times_.at(i);
  CauchyJet j = CauchyJet::zeros(bg_, t, lattice_);
  const auto& s = state_[i];
  const auto& r = rate_[i];
  for (std::size_t mode = 0; mode < lattice_.size(); ++mode) {
    const Eigen::VectorXcd h = Eigen::Map<const Eigen::VectorXcd>(s.data() + mode * static_cast<std::size_t>(nh_), nh_);
    const Eigen::VectorXcd d = Eigen::Map<const Eigen::VectorXcd>(r.data() + mode * static_cast<std::size_t>(nh_), nh_);
    j.set_mode(mode, h, geometry::dt_to_nabla_t(bg_, t, h, d));
  }
  return j;
}

ModeTrajectory Solution::mode_trajectory(std::size_t mode) const {
  if (mode >= lattice_.size()) fail(ErrorCode::OutOfRange, "mode_trajectory: mode index out of range");
  ModeTrajectory mt;
  mt.k = lattice_.mode(mode);
  mt.times = times_;
  for (std::size_t i = 0; i < times_.size(); ++i) {
    mt.state.push_back(Eigen::Map<const Eigen::VectorXcd>(state_[i].data() + mode * static_cast<std::size_t>(nh_), nh_));
    mt.rate.push_back(Eigen::Map<const Eigen::VectorXcd>(rate_[i].data() + mode * static_cast<std::size_t>(nh_), nh_));
  }
  return mt;
}

std::vector<double> resolve_sample_times(double t0, double t_end, const std::vector<double>& extra) {
  const double lo = std::min(t0, t_end), hi = std::max(t0, t_end);
  std::vector<double> out{t0, t_end};
  for (double t : extra) {
    if (!(t >= lo - 1e-12 && t <= hi + 1e-12)) {
      fail(ErrorCode::OutOfRange, "sample time " + std::to_string(t) + " lies outside the evolution interval");
    }
    out.push_back(std::clamp(t, lo, hi));
  }
  if (t_end >= t0) {
    std::sort(out.begin(), out.end());
  } else {
    std::sort(out.begin(), out.end(), std::greater<>());
  }
  out.erase(std::unique(out.begin(), out.end(),
                        [](double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)); }),
            out.end());
  return out;
}

Solution evolve(const CauchyJet& jet, const EvolveOptions& o) {
  jet.validate();
  const SpacetimeBackground& bg = jet.background;
  const double t0 = jet.t;
  if (!std::isfinite(o.t_end)) fail(ErrorCode::InvalidArgument, "evolve: t_end must be finite");
  if (o.exact) {
    if (bg.kind() != SpacetimeKind::MinkowskiTorus) {
      fail(ErrorCode::Unsupported, "evolve: closed-form evolution exists only on the Minkowski torus");
    }
  } else if (!(o.dt > 0.0) || !std::isfinite(o.dt)) {
    fail(ErrorCode::InvalidArgument, "evolve: dt must be positive");
  }
  if (bg.kind() == SpacetimeKind::Kasner && !(o.t_end > 0.0)) {
    fail(ErrorCode::DomainViolation, "evolve: interval reaches the Kasner singularity at t = 0");
  }
  const auto& L = jet.lattice();
  Solution sol(bg, L, resolve_sample_times(t0, o.t_end, o.sample_times), o.exact ? 0.0 : o.dt, o.exact);
  const int nh = sol.components();
  const auto NH = static_cast<std::size_t>(nh);

  // real fields: evolve one mode of each conjugate pair
  std::vector<std::size_t> half;
  for (std::size_t q = 0; q < L.size(); ++q) {
    if (q <= L.mirror(q)) half.push_back(q);
  }
  std::vector<Eigen::VectorXcd> h0(half.size()), d0(half.size());
  for (std::size_t i = 0; i < half.size(); ++i) {
    h0[i] = jet.value(half[i]);
    d0[i] = geometry::nabla_t_to_dt(bg, t0, h0[i], jet.nabla_nu(half[i]));
  }
  auto store = [&](std::size_t sample, std::size_t i, const cplx* h, const cplx* d) {
    const std::size_t q = half[i], m = L.mirror(q);
    auto& S = sol.state(sample);
    auto& R = sol.rate(sample);
    for (std::size_t c = 0; c < NH; ++c) {
      S[q * NH + c] = h[c];
      R[q * NH + c] = d[c];
      if (m != q) {
        S[m * NH + c] = std::conj(h[c]);
        R[m * NH + c] = std::conj(d[c]);
      }
    }
  };

  const auto& times = sol.times();
  if (o.exact) {
    for (std::size_t s = 0; s < times.size(); ++s) {
      const double tau = times[s] - t0;
      for (std::size_t i = 0; i < half.size(); ++i) {
        const auto k = L.mode(half[i]);
        const double w = std::sqrt(double(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]));
        Eigen::VectorXcd h, d;
        if (w == 0.0) {
          h = h0[i] + tau * d0[i];
          d = d0[i];
        } else {
          const double c = std::cos(w * tau), sn = std::sin(w * tau);
          h = c * h0[i] + (sn / w) * d0[i];
          d = (-w * sn) * h0[i] + c * d0[i];
        }
        store(s, i, h.data(), d.data());
      }
    }
    return sol;
  }

  const detail::ModeSystem sys(bg.D(), false);
  const auto M = static_cast<std::size_t>(sys.size());
  std::vector<cplx> y(half.size() * M);
  std::vector<std::vector<double>> mono(half.size());
  const geometry::QuadraticModeKernel probe(bg, geometry::SpacetimeOp::Lichnerowicz, t0);
  for (std::size_t i = 0; i < half.size(); ++i) {
    mono[i] = probe.monomials(L.mode(half[i]));
    std::copy(h0[i].data(), h0[i].data() + nh, y.begin() + static_cast<std::ptrdiff_t>(i * M));
    std::copy(d0[i].data(), d0[i].data() + nh, y.begin() + static_cast<std::ptrdiff_t>(i * M + NH));
  }
  double t = t0;
  for (std::size_t s = 0; s < times.size(); ++s) {
    detail::rk4_advance(bg, sys, false, mono, y, t, times[s], detail::step_count(t, times[s], o.dt));
    t = times[s];
    for (std::size_t i = 0; i < half.size(); ++i) store(s, i, &y[i * M], &y[i * M + NH]);
  }
  return sol;
}

}  // namespace linwave::evolution
