#pragma once

#include <array>

namespace linwave::constraints::detail {

/// Metric, second fundamental form and coordinate derivatives at one point
/// of a 3-dimensional slice (lower-dimensional slices pad with a flat axis).
template <typename R>
struct PointData {
  R g[3][3]{};
  R dg[3][3][3]{};      // d_a g_ij at [a][i][j]
  R ddg[3][3][3][3]{};  // d_a d_b g_ij at [a][b][i][j]
  R k[3][3]{};
  R dk[3][3][3]{};      // d_a k_ij
};

template <typename R>
void invert3(const R m[3][3], R out[3][3]) {
  const R det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  out[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) / det;
  out[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / det;
  out[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / det;
  out[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) / det;
  out[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / det;
  out[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / det;
  out[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) / det;
  out[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / det;
  out[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / det;
}

/// Nonlinear constraints in coordinates:
///   phi1 = Scal - g(k, k) + (tr k)^2,  phi2 = div k - d tr k.
template <typename R>
void phi_point(const PointData<R>& p, R& phi1, R phi2[3]) {
  R gi[3][3];
  invert3(p.g, gi);
  // d_e g^{cd}
  R dgi[3][3][3]{};
  for (int e = 0; e < 3; ++e)
    for (int c = 0; c < 3; ++c)
      for (int d = 0; d < 3; ++d) {
        R s = 0;
        for (int q = 0; q < 3; ++q)
          for (int r = 0; r < 3; ++r) s -= gi[c][q] * p.dg[e][q][r] * gi[r][d];
        dgi[e][c][d] = s;
      }
  // lowered Christoffels [ab,d] and their derivatives
  R low[3][3][3], dlow[3][3][3][3];
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int d = 0; d < 3; ++d) {
        low[a][b][d] = (p.dg[a][b][d] + p.dg[b][a][d] - p.dg[d][a][b]) / 2;
        for (int e = 0; e < 3; ++e) {
          dlow[e][a][b][d] = (p.ddg[e][a][b][d] + p.ddg[e][b][a][d] - p.ddg[e][d][a][b]) / 2;
        }
      }
  R G[3][3][3]{}, dG[3][3][3][3]{};  // G[c][a][b], dG[e][c][a][b]
  for (int c = 0; c < 3; ++c)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        R s = 0;
        for (int d = 0; d < 3; ++d) s += gi[c][d] * low[a][b][d];
        G[c][a][b] = s;
        for (int e = 0; e < 3; ++e) {
          R t = 0;
          for (int d = 0; d < 3; ++d) t += dgi[e][c][d] * low[a][b][d] + gi[c][d] * dlow[e][a][b][d];
          dG[e][c][a][b] = t;
        }
      }
  R scal = 0;
  for (int b = 0; b < 3; ++b)
    for (int d = 0; d < 3; ++d) {
      R ric = 0;
      for (int a = 0; a < 3; ++a) {
        ric += dG[a][a][b][d] - dG[d][a][a][b];
        for (int e = 0; e < 3; ++e) ric += G[a][a][e] * G[e][b][d] - G[a][d][e] * G[e][a][b];
      }
      scal += gi[b][d] * ric;
    }
  R kk = 0, trk = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      trk += gi[a][b] * p.k[a][b];
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) kk += gi[a][c] * gi[b][d] * p.k[a][b] * p.k[c][d];
    }
  phi1 = scal - kk + trk * trk;
  for (int x = 0; x < 3; ++x) {
    R div = 0, dtr = 0;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        R nk = p.dk[a][b][x];
        for (int c = 0; c < 3; ++c) nk -= G[c][a][b] * p.k[c][x] + G[c][a][x] * p.k[b][c];
        div += gi[a][b] * nk;
        dtr += dgi[x][a][b] * p.k[a][b] + gi[a][b] * p.dk[x][a][b];
      }
    phi2[x] = div - dtr;
  }
}

}  // namespace linwave::constraints::detail
