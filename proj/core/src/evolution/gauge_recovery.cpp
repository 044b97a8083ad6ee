#include "linwave/evolution/gauge_recovery.hpp"

#include <algorithm>
#include <cmath>

#include "linwave/evolution/diagnostics.hpp"
#include "linwave/geometry/slice_ops.hpp"
#include "mode_system.hpp"

namespace linwave::evolution {

using geometry::SpacetimeOp;

double GaugeRecovery::max_deviation() const {
  return deviation.empty() ? 0.0 : *std::max_element(deviation.begin(), deviation.end());
}

GaugeRecovery recover_gauge_vector(const Solution& sol, const std::optional<GaugeSeed>& seed) {
  const auto& bg = sol.background();
  const auto& L = sol.lattice();
  const int D = bg.D();
  const int n = bg.n();
  const int nh = sol.components();
  const auto NH = static_cast<std::size_t>(nh);
  const auto ND = static_cast<std::size_t>(D);
  const auto& times = sol.times();
  const double t0 = times.front();
  if (seed) {
    if (!(seed->N.lattice() == L) || !(seed->beta.lattice() == L) || seed->N.rank() != spectral::Rank::Scalar ||
        seed->beta.rank() != spectral::Rank::OneForm) {
      fail(ErrorCode::BackendMismatch, "recover_gauge_vector: seed fields must be a scalar and a one-form on the solution lattice");
    }
  }

  GaugeRecovery out;
  out.times = times;
  out.U.assign(times.size(), std::vector<cplx>(L.size() * ND));
  out.Udot.assign(times.size(), std::vector<cplx>(L.size() * ND));

  // initial U and d/dt U per mode
  const geometry::BackgroundJets bj = bg.jets(t0, 0);
  auto G = [&](int l, int a, int b) { return bj.Gnz(l, a, b) ? bj.Gam(l, a, b).d[0] : cplx(0.0); };
  std::vector<Eigen::VectorXcd> u0(L.size()), u1(L.size());
  const auto& S0 = sol.state(0);
  for (std::size_t q = 0; q < L.size(); ++q) {
    Eigen::VectorXcd u = Eigen::VectorXcd::Zero(D);
    if (seed) {
      u(0) = -seed->N.coeff(q, 0);
      for (int i = 0; i < n; ++i) u(i + 1) = seed->beta.coeff(q, i);
    }
    const auto k = L.mode(q);
    auto h = [&](int a, int b) { return S0[q * NH + static_cast<std::size_t>(spectral::sym_index(a, b, D))]; };
    Eigen::VectorXcd nt(D);
    nt(0) = 0.5 * h(0, 0);
    for (int i = 1; i < D; ++i) {
      cplx ni0 = cplx(0.0, k[static_cast<std::size_t>(i - 1)]) * u(0);
      for (int l = 0; l < D; ++l) ni0 -= G(l, i, 0) * u(l);
      nt(i) = h(0, i) - ni0;
    }
    Eigen::VectorXcd dt = nt;
    for (int a = 0; a < D; ++a) {
      for (int l = 0; l < D; ++l) dt(a) += G(l, 0, a) * u(l);
    }
    u0[q] = u;
    u1[q] = dt;
  }

  auto put = [&](std::size_t s, std::size_t q, const cplx* u, const cplx* d) {
    const std::size_t m = L.mirror(q);
    for (std::size_t c = 0; c < ND; ++c) {
      out.U[s][q * ND + c] = u[c];
      out.Udot[s][q * ND + c] = d[c];
      out.U[s][m * ND + c] = std::conj(u[c]);
      out.Udot[s][m * ND + c] = std::conj(d[c]);
    }
  };

  std::vector<std::size_t> half;
  for (std::size_t q = 0; q < L.size(); ++q) {
    if (q <= L.mirror(q)) half.push_back(q);
  }
  // h along the recovery: the stored solution, or the re-integrated one
  std::vector<std::vector<cplx>> hs(times.size());
  if (sol.exact()) {
    for (std::size_t s = 0; s < times.size(); ++s) {
      const double tau = times[s] - t0;
      for (std::size_t q : half) {
        const auto k = L.mode(q);
        const double w = std::sqrt(double(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]));
        Eigen::VectorXcd u, d;
        if (w == 0.0) {
          u = u0[q] + tau * u1[q];
          d = u1[q];
        } else {
          const double c = std::cos(w * tau), sn = std::sin(w * tau);
          u = c * u0[q] + (sn / w) * u1[q];
          d = (-w * sn) * u0[q] + c * u1[q];
        }
        put(s, q, u.data(), d.data());
      }
      hs[s] = sol.state(s);
    }
  } else {
    const detail::ModeSystem sys(D, true);
    const auto M = static_cast<std::size_t>(sys.size());
    std::vector<cplx> y(half.size() * M);
    std::vector<std::vector<double>> mono(half.size());
    const geometry::QuadraticModeKernel probe(bg, SpacetimeOp::Lichnerowicz, t0);
    const auto& R0 = sol.rate(0);
    for (std::size_t i = 0; i < half.size(); ++i) {
      const std::size_t q = half[i];
      mono[i] = probe.monomials(L.mode(q));
      cplx* yq = &y[i * M];
      for (std::size_t c = 0; c < NH; ++c) {
        yq[c] = S0[q * NH + c];
        yq[NH + c] = R0[q * NH + c];
      }
      for (std::size_t c = 0; c < ND; ++c) {
        yq[2 * NH + c] = u0[q](static_cast<Eigen::Index>(c));
        yq[2 * NH + ND + c] = u1[q](static_cast<Eigen::Index>(c));
      }
    }
    double t = t0;
    for (std::size_t s = 0; s < times.size(); ++s) {
      detail::rk4_advance(bg, sys, true, mono, y, t, times[s], detail::step_count(t, times[s], sol.dt()));
      t = times[s];
      hs[s].assign(L.size() * NH, cplx(0.0));
      for (std::size_t i = 0; i < half.size(); ++i) {
        const std::size_t q = half[i], m = L.mirror(q);
        const cplx* yq = &y[i * M];
        for (std::size_t c = 0; c < NH; ++c) {
          hs[s][q * NH + c] = yq[c];
          hs[s][m * NH + c] = std::conj(yq[c]);
        }
        put(s, q, yq + 2 * NH, yq + 2 * NH + ND);
      }
    }
  }

  // deviation |h - L_V g| / |h|
  for (std::size_t s = 0; s < times.size(); ++s) {
    const geometry::QuadraticModeKernel lie(bg, SpacetimeOp::LieOfG, times[s]);
    std::vector<cplx> diff = hs[s];
    std::vector<cplx> a(NH), b(NH);
    for (std::size_t q = 0; q < L.size(); ++q) {
      const auto mono = lie.monomials(L.mode(q));
      lie.apply(0, mono, &out.U[s][q * ND], a.data());
      lie.apply(1, mono, &out.Udot[s][q * ND], b.data());
      for (std::size_t c = 0; c < NH; ++c) diff[q * NH + c] -= a[c] + b[c];
    }
    const double hn = spacetime_sobolev_norm(L, D, hs[s], 0.0);
    const double dn = spacetime_sobolev_norm(L, D, diff, 0.0);
    out.deviation.push_back(hn > 0.0 ? dn / hn : dn);
  }
  return out;
}

}  // namespace linwave::evolution
