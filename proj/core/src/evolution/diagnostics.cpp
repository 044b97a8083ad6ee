#include "linwave/evolution/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "linwave/spectral/sobolev.hpp"

namespace linwave::evolution {

using geometry::BackgroundJets;
using geometry::Jet;
using geometry::PackedJets;

namespace {

double k2_of(const std::array<int, 3>& k) { return double(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]); }

// nabla_t X for a packed sym2 of jets: d_t X_ab - Gam^l_{ta} X_lb - Gam^l_{tb} X_al
PackedJets nabla_t(const BackgroundJets& bj, const PackedJets& X) {
  const int D = bj.D;
  PackedJets out(X.size());
  for (std::size_t c = 0; c < X.size(); ++c) {
    const auto ab = spectral::sym_pair(static_cast<int>(c), D);
    Jet v = X[c].dt();
    for (int l = 0; l < D; ++l) {
      if (bj.Gnz(l, 0, ab[0])) v -= bj.Gam(l, 0, ab[0]) * X[static_cast<std::size_t>(spectral::sym_index(l, ab[1], D))];
      if (bj.Gnz(l, 0, ab[1])) v -= bj.Gam(l, 0, ab[1]) * X[static_cast<std::size_t>(spectral::sym_index(ab[0], l, D))];
    }
    v.order = std::min(v.order, X[c].order - 1);
    out[c] = v;
  }
  return out;
}

}  // namespace

double DiagnosticsSeries::max_gauge() const {
  return gauge_res.empty() ? 0.0 : *std::max_element(gauge_res.begin(), gauge_res.end());
}

double DiagnosticsSeries::max_constraint() const {
  double m = 0.0;
  for (double v : dphi1_res) m = std::max(m, v);
  for (double v : dphi2_res) m = std::max(m, v);
  return m;
}

double spacetime_sobolev_norm(const spectral::ModeLattice& L, int D, const std::vector<cplx>& x, double s) {
  const int nh = D * (D + 1) / 2;
  double sum = 0.0;
  for (std::size_t q = 0; q < L.size(); ++q) {
    double part = 0.0;
    for (int c = 0; c < nh; ++c) {
      const auto ab = spectral::sym_pair(c, D);
      part += (ab[0] == ab[1] ? 1.0 : 2.0) * std::norm(x[q * static_cast<std::size_t>(nh) + static_cast<std::size_t>(c)]);
    }
    sum += std::pow(1.0 + k2_of(L.mode(q)), s) * part;
  }
  return std::sqrt(std::pow(2.0 * std::numbers::pi, L.dim()) * sum);
}

constraints::InitialDataPair extract_induced_data(const Solution& sol, double tau) {
  return constraints::induced_data(sol.jet(sol.sample_index(tau)));
}

DiagnosticsSeries diagnostics(const Solution& sol, const DiagnosticsOptions& o) {
  if (o.J < 0 || o.J >= Jet::kMax) fail(ErrorCode::OutOfRange, "diagnostics: J must lie in [0, 7]");
  const auto& bg = sol.background();
  const auto& L = sol.lattice();
  const int D = bg.D();
  const int nh = sol.components();
  const auto NH = static_cast<std::size_t>(nh);
  const double vol = std::pow(2.0 * std::numbers::pi, L.dim());

  DiagnosticsSeries out;
  out.J = o.J;
  out.sobolev_k = o.sobolev_k;
  out.times = sol.times();
  for (std::size_t i = 0; i < sol.times().size(); ++i) {
    const double t = sol.times()[i];
    const auto& S = sol.state(i);
    const auto& R = sol.rate(i);

    // gauge residual and its first-order scale
    const geometry::QuadraticModeKernel div(bg, geometry::SpacetimeOp::DivTraceReversed, t);
    double g2 = 0.0, e2 = 0.0;
    std::vector<cplx> a(static_cast<std::size_t>(D)), b(static_cast<std::size_t>(D));
    for (std::size_t q = 0; q < L.size(); ++q) {
      const auto k = L.mode(q);
      const auto mono = div.monomials(k);
      div.apply(0, mono, &S[q * NH], a.data());
      div.apply(1, mono, &R[q * NH], b.data());
      for (int c = 0; c < D; ++c) g2 += std::norm(a[static_cast<std::size_t>(c)] + b[static_cast<std::size_t>(c)]);
      for (int c = 0; c < nh; ++c) {
        const auto ab = spectral::sym_pair(c, D);
        const double w = ab[0] == ab[1] ? 1.0 : 2.0;
        e2 += w * ((1.0 + k2_of(k)) * std::norm(S[q * NH + static_cast<std::size_t>(c)]) +
                   std::norm(R[q * NH + static_cast<std::size_t>(c)]));
      }
    }
    out.gauge_res.push_back(e2 > 0.0 ? std::sqrt(g2 / e2) : 0.0);

    // constraints on the induced data
    const auto pair = constraints::induced_data(sol.jet(i));
    const auto res = constraints::dphi(pair, {0.0});
    const double scale = spectral::sobolev_norm(pair.h, 2.0) + spectral::sobolev_norm(pair.m, 1.0);
    out.dphi1_res.push_back(scale > 0.0 ? res.norm1(0.0) / scale : 0.0);
    out.dphi2_res.push_back(scale > 0.0 ? res.norm2(0.0) / scale : 0.0);

    // energies |nabla_t^j h|_{H^{k-j}}
    std::vector<double> ej(static_cast<std::size_t>(o.J + 1), 0.0);
    const BackgroundJets bj = bg.jets(t, std::max(o.J, 1));
    for (std::size_t q = 0; q < L.size(); ++q) {
      const auto k = L.mode(q);
      const Eigen::VectorXcd h = Eigen::Map<const Eigen::VectorXcd>(&S[q * NH], nh);
      const Eigen::VectorXcd d = Eigen::Map<const Eigen::VectorXcd>(&R[q * NH], nh);
      PackedJets X = geometry::make_jets({h, d});
      if (o.J >= 2) X = geometry::close_wave_jet(bg, t, geometry::symbol_of(k), X, o.J);
      const double w1 = 1.0 + k2_of(k);
      for (int j = 0; j <= o.J; ++j) {
        double part = 0.0;
        for (int c = 0; c < nh; ++c) {
          const auto ab = spectral::sym_pair(c, D);
          part += (ab[0] == ab[1] ? 1.0 : 2.0) * std::norm(X[static_cast<std::size_t>(c)].d[0]);
        }
        ej[static_cast<std::size_t>(j)] += std::pow(w1, o.sobolev_k - j) * part;
        if (j < o.J) X = nabla_t(bj, X);
      }
    }
    for (double& v : ej) v = std::sqrt(vol * v);
    out.energy.push_back(std::move(ej));
  }
  return out;
}

}  // namespace linwave::evolution
