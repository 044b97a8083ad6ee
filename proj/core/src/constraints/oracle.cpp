#include "linwave/constraints/oracle.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "linwave/spectral/transform.hpp"
#include "pointwise.hpp"

namespace linwave::constraints {

namespace {

using Real = long double;
using CReal = std::complex<Real>;
using spectral::Rank;
using spectral::sym_index;

struct SupportMode {
  std::array<int, 3> k{};
  CReal h[3][3]{};
  CReal m[3][3]{};
};

// Orthonormal basis A (columns) with A^T G A = I and structure constants
// C[g][a][b] of [E_a, E_b] = C^g_ab E_g.
void orthonormal_structure(const Real G[3][3], Real A[3][3], Real C[3][3][3]) {
  // Cholesky G = L L^T, then A = L^{-T}
  Real L[3][3]{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j <= i; ++j) {
      Real s = G[i][j];
      for (int q = 0; q < j; ++q) s -= L[i][q] * L[j][q];
      L[i][j] = (i == j) ? std::sqrt(s) : s / L[j][j];
    }
  Real Li[3][3]{};
  detail::invert3(L, Li);
  Real Ainv[3][3];  // A^{-1} = L^T
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      A[i][j] = Li[j][i];
      Ainv[i][j] = L[j][i];
    }
  auto eps = [](int i, int j, int k) -> Real {
    return static_cast<Real>((i - j) * (j - k) * (k - i)) / 2;
  };
  for (int g = 0; g < 3; ++g)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        Real s = 0;
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) s += A[i][a] * A[j][b] * 2 * eps(i, j, k) * Ainv[g][k];
        C[g][a][b] = s;
      }
}

// Phi for invariant (G, K) using only orthonormal-frame formulas.
void phi_su2(const Real G[3][3], const Real K[3][3], Real& phi1, Real phi2[3]) {
  Real A[3][3], C[3][3][3];
  orthonormal_structure(G, A, C);
  Real scal = 0;
  for (int g = 0; g < 3; ++g)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) scal -= C[g][a][b] * C[g][a][b] / 4;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int g = 0; g < 3; ++g) scal -= C[g][a][b] * C[b][a][g] / 2;
  // K in the orthonormal basis
  Real k[3][3]{};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) k[a][b] += A[i][a] * K[i][j] * A[j][b];
  Real kk = 0, trk = 0;
  for (int a = 0; a < 3; ++a) {
    trk += k[a][a];
    for (int b = 0; b < 3; ++b) kk += k[a][b] * k[a][b];
  }
  phi1 = scal - kk + trk * trk;
  // nabla_{E_a} E_b = w[a][b][g] E_g
  Real w[3][3][3];
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int g = 0; g < 3; ++g) w[a][b][g] = (C[g][a][b] - C[a][b][g] + C[b][g][a]) / 2;
  Real on[3];
  for (int x = 0; x < 3; ++x) {
    Real s = 0;
    for (int a = 0; a < 3; ++a)
      for (int g = 0; g < 3; ++g) s -= w[a][a][g] * k[g][x] + w[a][x][g] * k[a][g];
    on[x] = s;  // d tr k = 0 for invariant k
  }
  // frame components: phi2(e_i) = sum_x (A^{-1})_{x i} phi2(E_x)
  Real Ai[3][3];
  detail::invert3(A, Ai);
  for (int i = 0; i < 3; ++i) {
    phi2[i] = 0;
    for (int x = 0; x < 3; ++x) phi2[i] += Ai[x][i] * on[x];
  }
}

ConstraintResidual oracle_invariant(const InitialDataPair& pair, const OracleOptions& opt) {
  const auto& Lat = pair.lattice();
  const std::size_t z = Lat.zero_mode();
  const Real eps = opt.epsilon;
  Real res1 = 0, res2[3]{};
  for (int sign = -1; sign <= 1; sign += 2) {
    Real G[3][3], K[3][3];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const int c = sym_index(i, j, 3);
        G[i][j] = static_cast<Real>(pair.slice.metric()(i, j)) + sign * eps * static_cast<Real>(pair.h.coeff(z, c).real());
        K[i][j] = static_cast<Real>(pair.slice.k()(i, j)) + sign * eps * static_cast<Real>(pair.m.coeff(z, c).real());
      }
    Real p1, p2[3];
    phi_su2(G, K, p1, p2);
    res1 += sign * p1;
    for (int i = 0; i < 3; ++i) res2[i] += sign * p2[i];
  }
  ConstraintResidual r{SpectralField(Lat, Rank::Scalar), SpectralField(Lat, Rank::OneForm), pair.slice, {}};
  r.phi1.coeff(z, 0) = static_cast<double>(res1 / (2 * eps));
  for (int i = 0; i < 3; ++i) r.phi2.coeff(z, i) = static_cast<double>(res2[i] / (2 * eps));
  return r;
}

ConstraintResidual oracle_torus(const InitialDataPair& pair, const OracleOptions& opt) {
  const auto& Lat = pair.lattice();
  const int n = Lat.dim();
  const int grid = opt.grid > 0 ? opt.grid : Lat.side();
  const Real eps = opt.epsilon;
  const Real dl = opt.delta;

  std::vector<SupportMode> support;
  for (std::size_t mode = 0; mode < Lat.size(); ++mode) {
    bool nz = false;
    for (int c = 0; c < pair.h.components(); ++c) {
      nz = nz || pair.h.coeff(mode, c) != 0.0 || pair.m.coeff(mode, c) != 0.0;
    }
    if (!nz) continue;
    SupportMode s;
    s.k = Lat.mode(mode);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const int c = sym_index(i, j, n);
        s.h[i][j] = CReal(pair.h.coeff(mode, c).real(), pair.h.coeff(mode, c).imag());
        s.m[i][j] = CReal(pair.m.coeff(mode, c).real(), pair.m.coeff(mode, c).imag());
      }
    support.push_back(s);
  }
  const std::size_t S = support.size();
  // stencil phases exp(i k_a o delta), o in {-2, -1, 0, 1, 2}
  std::vector<std::array<std::array<CReal, 5>, 3>> step(S);
  for (std::size_t s = 0; s < S; ++s)
    for (int a = 0; a < 3; ++a)
      for (int o = -2; o <= 2; ++o) {
        const Real arg = static_cast<Real>(support[s].k[static_cast<std::size_t>(a)]) * o * dl;
        step[s][static_cast<std::size_t>(a)][static_cast<std::size_t>(o + 2)] = CReal(std::cos(arg), std::sin(arg));
      }
  Real G0[3][3]{}, K0[3][3]{};
  G0[2][2] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      G0[i][j] = static_cast<Real>(pair.slice.metric()(i, j));
      K0[i][j] = static_cast<Real>(pair.slice.k()(i, j));
    }

  const Real w1[5] = {1, -8, 0, 8, -1};      // / (12 delta)
  const Real w2[5] = {-1, 16, -30, 16, -1};  // / (12 delta^2)

  std::size_t npts = 1;
  for (int i = 0; i < n; ++i) npts *= static_cast<std::size_t>(grid);
  spectral::GridSamples s1{n, grid, Rank::Scalar, {}}, s2{n, grid, Rank::OneForm, {}};
  s1.values.assign(npts, 0.0);
  s2.values.assign(npts * static_cast<std::size_t>(n), 0.0);

  std::vector<CReal> base(S);
  for (std::size_t p = 0; p < npts; ++p) {
    // grid coordinates, axis 1 slowest
    std::array<Real, 3> x{0, 0, 0};
    std::size_t rem = p;
    for (int a = n - 1; a >= 0; --a) {
      x[static_cast<std::size_t>(a)] = 2 * std::numbers::pi_v<Real> * static_cast<Real>(rem % static_cast<std::size_t>(grid)) / grid;
      rem /= static_cast<std::size_t>(grid);
    }
    for (std::size_t s = 0; s < S; ++s) {
      Real arg = 0;
      for (int a = 0; a < 3; ++a) arg += support[s].k[static_cast<std::size_t>(a)] * x[static_cast<std::size_t>(a)];
      base[s] = CReal(std::cos(arg), std::sin(arg));
    }
    // perturbation values at x + o1 delta e_a + o2 delta e_b
    auto eval = [&](int a, int o1, int b, int o2, bool want_m, Real H[3][3], Real M[3][3]) {
      CReal h[3][3]{}, m[3][3]{};
      for (std::size_t s = 0; s < S; ++s) {
        CReal e = base[s] * step[s][static_cast<std::size_t>(a)][static_cast<std::size_t>(o1 + 2)] *
                  step[s][static_cast<std::size_t>(b)][static_cast<std::size_t>(o2 + 2)];
        for (int i = 0; i < n; ++i)
          for (int j = i; j < n; ++j) {
            h[i][j] += support[s].h[i][j] * e;
            if (want_m) m[i][j] += support[s].m[i][j] * e;
          }
      }
      for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
          H[i][j] = H[j][i] = h[i][j].real();
          M[i][j] = M[j][i] = m[i][j].real();
        }
    };
    detail::PointData<Real> dh, dm;  // derivatives of the perturbations
    Real tmpH[3][3], tmpM[3][3];
    eval(0, 0, 0, 0, true, dh.g, dm.g);
    for (int a = 0; a < n; ++a) {
      for (int o = -2; o <= 2; ++o) {
        if (o == 0) continue;
        eval(a, o, a, 0, true, tmpH, tmpM);
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) {
            dh.dg[a][i][j] += w1[o + 2] * tmpH[i][j] / (12 * dl);
            dm.dg[a][i][j] += w1[o + 2] * tmpM[i][j] / (12 * dl);
            dh.ddg[a][a][i][j] += w2[o + 2] * tmpH[i][j] / (12 * dl * dl);
          }
      }
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) dh.ddg[a][a][i][j] += w2[2] * dh.g[i][j] / (12 * dl * dl);
      for (int b = a + 1; b < n; ++b) {
        for (int o1 = -2; o1 <= 2; ++o1)
          for (int o2 = -2; o2 <= 2; ++o2) {
            if (o1 == 0 || o2 == 0) continue;
            eval(a, o1, b, o2, false, tmpH, tmpM);
            const Real w = w1[o1 + 2] * w1[o2 + 2] / (144 * dl * dl);
            for (int i = 0; i < 3; ++i)
              for (int j = 0; j < 3; ++j) dh.ddg[a][b][i][j] += w * tmpH[i][j];
          }
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) dh.ddg[b][a][i][j] = dh.ddg[a][b][i][j];
      }
    }
    Real acc1 = 0, acc2[3]{};
    for (int sign = -1; sign <= 1; sign += 2) {
      detail::PointData<Real> d;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          d.g[i][j] = G0[i][j] + sign * eps * dh.g[i][j];
          d.k[i][j] = K0[i][j] + sign * eps * dm.g[i][j];
          for (int a = 0; a < 3; ++a) {
            d.dg[a][i][j] = sign * eps * dh.dg[a][i][j];
            d.dk[a][i][j] = sign * eps * dm.dg[a][i][j];
            for (int b = 0; b < 3; ++b) d.ddg[a][b][i][j] = sign * eps * dh.ddg[a][b][i][j];
          }
        }
      Real p1, p2[3];
      detail::phi_point(d, p1, p2);
      acc1 += sign * p1;
      for (int i = 0; i < 3; ++i) acc2[i] += sign * p2[i];
    }
    s1.values[p] = static_cast<double>(acc1 / (2 * eps));
    for (int i = 0; i < n; ++i) s2.values[static_cast<std::size_t>(i) * npts + p] = static_cast<double>(acc2[i] / (2 * eps));
  }
  return {spectral::analyze(s1, Lat), spectral::analyze(s2, Lat), pair.slice, {}};
}

}  // namespace

long double su2_scalar_curvature(const long double G[3][3]) {
  const Real K[3][3]{};
  Real p1, p2[3];
  phi_su2(G, K, p1, p2);
  return p1;
}

ConstraintResidual dphi_oracle(const InitialDataPair& pair, const OracleOptions& opt) {
  pair.validate();
  if (pair.sobolev_order < 0.0) {
    fail(ErrorCode::Unsupported, "dphi_oracle: distributional data have no pointwise values");
  }
  if (!(opt.epsilon > 0.0) || !(opt.delta > 0.0)) fail(ErrorCode::InvalidArgument, "dphi_oracle: steps must be positive");
  ConstraintResidual r = pair.slice.is_torus() ? oracle_torus(pair, opt) : oracle_invariant(pair, opt);
  r.norms.push_back({0.0, r.norm1(0.0), r.norm2(0.0)});
  return r;
}

}  // namespace linwave::constraints
