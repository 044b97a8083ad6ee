#include "linwave/geometry/spacetime.hpp"

#include <cmath>

namespace linwave::geometry {

const char* to_string(SpacetimeKind kind) noexcept {
  switch (kind) {
    case SpacetimeKind::MinkowskiTorus: return "minkowski-torus";
    case SpacetimeKind::Kasner: return "kasner";
  }
  return "unknown";
}

SpacetimeKind parse_spacetime_kind(const std::string& name) {
  if (name == "minkowski-torus" || name == "minkowski") return SpacetimeKind::MinkowskiTorus;
  if (name == "kasner") return SpacetimeKind::Kasner;
  fail(ErrorCode::InvalidArgument, "unknown spacetime background '" + name + "'");
}

SpacetimeBackground SpacetimeBackground::minkowski(int n) {
  if (n < 2 || n > 3) fail(ErrorCode::InvalidArgument, "Minkowski torus dimension must be 2 or 3");
  SpacetimeBackground b;
  b.kind_ = SpacetimeKind::MinkowskiTorus;
  b.n_ = n;
  return b;
}

SpacetimeBackground SpacetimeBackground::kasner(const std::array<double, 3>& p) {
  validate_kasner(p);
  SpacetimeBackground b;
  b.kind_ = SpacetimeKind::Kasner;
  b.n_ = 3;
  b.p_ = p;
  return b;
}

void SpacetimeBackground::check_time(double t) const {
  if (kind_ == SpacetimeKind::Kasner && !(t > 0.0)) {
    fail(ErrorCode::DomainViolation, "Kasner background is singular at t <= 0");
  }
}

BackgroundJets SpacetimeBackground::jets(double t, int order) const {
  check_time(t);
  const int D = this->D();
  BackgroundJets bj;
  bj.D = D;
  bj.g.assign(static_cast<std::size_t>(D), Jet::constant(1.0, order + 1));
  bj.ginv.assign(static_cast<std::size_t>(D), Jet::constant(1.0, order + 1));
  bj.g[0] = Jet::constant(-1.0, order + 1);
  bj.ginv[0] = Jet::constant(-1.0, order + 1);
  bj.gamma.assign(static_cast<std::size_t>(D * D * D), Jet::zero(order + 1));
  bj.gamma_nz.assign(static_cast<std::size_t>(D * D * D), false);
  auto set_gamma = [&](int l, int m, int n, const Jet& v) {
    bj.gamma[static_cast<std::size_t>((l * D + m) * D + n)] = v;
    bj.gamma_nz[static_cast<std::size_t>((l * D + m) * D + n)] = true;
  };
  for (int i = 1; i < D; ++i) {
    const double p = p_[static_cast<std::size_t>(i - 1)];
    if (p == 0.0) continue;
    bj.g[static_cast<std::size_t>(i)] = power_jet(t, 2.0 * p, order + 1);
    bj.ginv[static_cast<std::size_t>(i)] = power_jet(t, -2.0 * p, order + 1);
    // Gamma^0_ii = p t^{2p-1}, Gamma^i_0i = Gamma^i_i0 = p / t
    set_gamma(0, i, i, cplx(p) * power_jet(t, 2.0 * p - 1.0, order + 1));
    const Jet pt = cplx(p) * power_jet(t, -1.0, order + 1);
    set_gamma(i, 0, i, pt);
    set_gamma(i, i, 0, pt);
  }
  // R^a_bcd = d_c Gam^a_db - d_d Gam^a_cb + Gam^a_ce Gam^e_db - Gam^a_de Gam^e_cb
  for (int a = 0; a < D; ++a) {
    for (int b = 0; b < D; ++b) {
      for (int c = 0; c < D; ++c) {
        for (int d = c + 1; d < D; ++d) {
          Jet r = Jet::zero(order);
          bool nz = false;
          if (c == 0 && bj.Gnz(a, d, b)) {
            r += bj.Gam(a, d, b).dt();
            nz = true;
          }
          for (int e = 0; e < D; ++e) {
            if (bj.Gnz(a, c, e) && bj.Gnz(e, d, b)) {
              fma(r, bj.Gam(a, c, e), bj.Gam(e, d, b));
              nz = true;
            }
            if (bj.Gnz(a, d, e) && bj.Gnz(e, c, b)) {
              r -= bj.Gam(a, d, e) * bj.Gam(e, c, b);
              nz = true;
            }
          }
          if (!nz) continue;
          r.order = std::min(r.order, order);
          bool any = false;
          for (int j = 0; j <= r.order; ++j) any = any || std::abs(r.d[static_cast<std::size_t>(j)]) > 0.0;
          if (!any) continue;
          bj.riemann.push_back({a, b, c, d, r});
          bj.riemann.push_back({a, b, d, c, cplx(-1.0) * r});
        }
      }
    }
  }
  return bj;
}

SliceGeometry SpacetimeBackground::slice(double t) const {
  check_time(t);
  if (kind_ == SpacetimeKind::MinkowskiTorus) return SliceGeometry::flat_torus(n_);
  return SliceGeometry::kasner(p_, t);
}

}  // namespace linwave::geometry
