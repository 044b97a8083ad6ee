#include "linwave/geometry/fd_oracle.hpp"

#include <cmath>

namespace linwave::geometry::fd {

namespace {

using spectral::sym_index;

template <typename F>
auto d1(const F& f, const Point& p, int dir, Real h) {
  auto at = [&](Real s) {
    Point q = p;
    q[static_cast<std::size_t>(dir)] += s;
    return f(q);
  };
  const auto fm2 = at(-2 * h), fm1 = at(-h), fp1 = at(h), fp2 = at(2 * h);
  auto out = fm2;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = (fm2[i] - 8 * fm1[i] + 8 * fp1[i] - fp2[i]) / (12 * h);
  }
  return out;
}

Mat4 inverse(const Mat4& m) {
  Eigen::Matrix<Real, 4, 4> M;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) M(i, j) = m[static_cast<std::size_t>(i * 4 + j)];
  }
  const Eigen::Matrix<Real, 4, 4> Mi = M.inverse();
  Mat4 out{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) out[static_cast<std::size_t>(i * 4 + j)] = Mi(i, j);
  }
  return out;
}

using Rank3 = std::array<Real, 64>;

// (nabla h)_{abc} at p
Rank3 nabla_sym2(const MetricFn& g, const Sym2Fn& h, const Point& p, const Options& o) {
  const auto G = christoffel(g, p, o);
  const Mat4 hv = h(p);
  Rank3 out{};
  for (int a = 0; a < 4; ++a) {
    const Mat4 dh = d1(h, p, a, o.delta);
    for (int b = 0; b < 4; ++b) {
      for (int c = 0; c < 4; ++c) {
        Real v = dh[static_cast<std::size_t>(b * 4 + c)];
        for (int l = 0; l < 4; ++l) {
          v -= G[static_cast<std::size_t>((l * 4 + a) * 4 + b)] * hv[static_cast<std::size_t>(l * 4 + c)];
          v -= G[static_cast<std::size_t>((l * 4 + a) * 4 + c)] * hv[static_cast<std::size_t>(b * 4 + l)];
        }
        out[static_cast<std::size_t>((a * 4 + b) * 4 + c)] = v;
      }
    }
  }
  return out;
}

}  // namespace

MetricFn background_metric(const SpacetimeBackground& bg) {
  const auto p = bg.exponents();
  return [p](const Point& q) {
    Mat4 m{};
    m[0] = -1;
    for (int i = 1; i < 4; ++i) {
      m[static_cast<std::size_t>(i * 4 + i)] = std::pow(q[0], 2 * static_cast<Real>(p[static_cast<std::size_t>(i - 1)]));
    }
    return m;
  };
}

Sym2Fn mode_sym2_field(const std::vector<Eigen::VectorXcd>& taylor, double t0,
                       const std::array<double, 3>& k) {
  return [taylor, t0, k](const Point& q) {
    const Real s = q[0] - t0;
    std::array<std::complex<Real>, 10> v{};
    Real pw = 1;
    for (const auto& H : taylor) {
      for (int c = 0; c < 10; ++c) {
        v[static_cast<std::size_t>(c)] += pw * std::complex<Real>(H(c).real(), H(c).imag());
      }
      pw *= s;
    }
    const Real phase = k[0] * q[1] + k[1] * q[2] + k[2] * q[3];
    const std::complex<Real> e(std::cos(phase), std::sin(phase));
    Mat4 m{};
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        m[static_cast<std::size_t>(a * 4 + b)] = (v[static_cast<std::size_t>(sym_index(a, b, 4))] * e).real();
      }
    }
    return m;
  };
}

OneFormFn mode_oneform_field(const std::vector<Eigen::VectorXcd>& taylor, double t0,
                             const std::array<double, 3>& k) {
  return [taylor, t0, k](const Point& q) {
    const Real s = q[0] - t0;
    std::array<std::complex<Real>, 4> v{};
    Real pw = 1;
    for (const auto& H : taylor) {
      for (int c = 0; c < 4; ++c) {
        v[static_cast<std::size_t>(c)] += pw * std::complex<Real>(H(c).real(), H(c).imag());
      }
      pw *= s;
    }
    const Real phase = k[0] * q[1] + k[1] * q[2] + k[2] * q[3];
    const std::complex<Real> e(std::cos(phase), std::sin(phase));
    Vec4 out{};
    for (int a = 0; a < 4; ++a) out[static_cast<std::size_t>(a)] = (v[static_cast<std::size_t>(a)] * e).real();
    return out;
  };
}

std::array<Real, 64> christoffel(const MetricFn& g, const Point& p, const Options& o) {
  const Mat4 gi = inverse(g(p));
  std::array<Mat4, 4> dg;
  for (int a = 0; a < 4; ++a) dg[static_cast<std::size_t>(a)] = d1(g, p, a, o.delta);
  std::array<Real, 64> G{};
  for (int l = 0; l < 4; ++l) {
    for (int m = 0; m < 4; ++m) {
      for (int n = 0; n < 4; ++n) {
        Real s = 0;
        for (int k = 0; k < 4; ++k) {
          s += gi[static_cast<std::size_t>(l * 4 + k)] *
               (dg[static_cast<std::size_t>(m)][static_cast<std::size_t>(k * 4 + n)] +
                dg[static_cast<std::size_t>(n)][static_cast<std::size_t>(k * 4 + m)] -
                dg[static_cast<std::size_t>(k)][static_cast<std::size_t>(m * 4 + n)]);
        }
        G[static_cast<std::size_t>((l * 4 + m) * 4 + n)] = s / 2;
      }
    }
  }
  return G;
}

namespace {

// R^a_{bcd}, index ((a * 4 + b) * 4 + c) * 4 + d
std::array<Real, 256> riemann(const MetricFn& g, const Point& p, const Options& o) {
  const auto G = christoffel(g, p, o);
  auto Gf = [&](const Point& q) { return christoffel(g, q, o); };
  std::array<std::array<Real, 64>, 4> dG;
  for (int c = 0; c < 4; ++c) dG[static_cast<std::size_t>(c)] = d1(Gf, p, c, o.delta);
  auto Gam = [&](int l, int m, int n) { return G[static_cast<std::size_t>((l * 4 + m) * 4 + n)]; };
  std::array<Real, 256> R{};
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      for (int c = 0; c < 4; ++c) {
        for (int d = 0; d < 4; ++d) {
          Real v = dG[static_cast<std::size_t>(c)][static_cast<std::size_t>((a * 4 + d) * 4 + b)] -
                   dG[static_cast<std::size_t>(d)][static_cast<std::size_t>((a * 4 + c) * 4 + b)];
          for (int e = 0; e < 4; ++e) v += Gam(a, c, e) * Gam(e, d, b) - Gam(a, d, e) * Gam(e, c, b);
          R[static_cast<std::size_t>(((a * 4 + b) * 4 + c) * 4 + d)] = v;
        }
      }
    }
  }
  return R;
}

}  // namespace

Mat4 ricci(const MetricFn& g, const Point& p, const Options& o) {
  const auto R = riemann(g, p, o);
  Mat4 out{};
  for (int b = 0; b < 4; ++b) {
    for (int d = 0; d < 4; ++d) {
      Real s = 0;
      for (int a = 0; a < 4; ++a) s += R[static_cast<std::size_t>(((a * 4 + b) * 4 + a) * 4 + d)];
      out[static_cast<std::size_t>(b * 4 + d)] = s;
    }
  }
  return out;
}

Mat4 lichnerowicz(const MetricFn& g, const Sym2Fn& h, const Point& p, const Options& o) {
  const auto G = christoffel(g, p, o);
  const Mat4 gi = inverse(g(p));
  const Rank3 N = nabla_sym2(g, h, p, o);
  auto Nf = [&](const Point& q) { return nabla_sym2(g, h, q, o); };
  // (nabla_a N)_{m b c} for all a, m
  std::array<Rank3, 4> dN;
  for (int a = 0; a < 4; ++a) dN[static_cast<std::size_t>(a)] = d1(Nf, p, a, o.delta);
  auto Gam = [&](int l, int m, int n) { return G[static_cast<std::size_t>((l * 4 + m) * 4 + n)]; };
  auto Nv = [&](int m, int b, int c) { return N[static_cast<std::size_t>((m * 4 + b) * 4 + c)]; };
  const auto R = riemann(g, p, o);
  const Mat4 hv = h(p);
  Mat4 out{};
  for (int b = 0; b < 4; ++b) {
    for (int c = 0; c < 4; ++c) {
      Real lap = 0;
      for (int a = 0; a < 4; ++a) {
        for (int m = 0; m < 4; ++m) {
          const Real gam = gi[static_cast<std::size_t>(a * 4 + m)];
          if (gam == 0) continue;
          Real v = dN[static_cast<std::size_t>(a)][static_cast<std::size_t>((m * 4 + b) * 4 + c)];
          for (int l = 0; l < 4; ++l) {
            v -= Gam(l, a, m) * Nv(l, b, c) + Gam(l, a, b) * Nv(m, l, c) + Gam(l, a, c) * Nv(m, b, l);
          }
          lap -= gam * v;
        }
      }
      // R h (x = b, y = c) = g^{ae} R^f_{c a b} h_{f e}
      Real rh = 0;
      for (int a = 0; a < 4; ++a) {
        for (int e = 0; e < 4; ++e) {
          const Real gae = gi[static_cast<std::size_t>(a * 4 + e)];
          if (gae == 0) continue;
          for (int f = 0; f < 4; ++f) {
            rh += gae * R[static_cast<std::size_t>(((f * 4 + c) * 4 + a) * 4 + b)] *
                  hv[static_cast<std::size_t>(f * 4 + e)];
          }
        }
      }
      out[static_cast<std::size_t>(b * 4 + c)] = lap - 2 * rh;
    }
  }
  return out;
}

Mat4 lie_of_oneform(const MetricFn& g, const OneFormFn& u, const Point& p, const Options& o) {
  const auto G = christoffel(g, p, o);
  const Vec4 uv = u(p);
  Mat4 nab{};
  for (int a = 0; a < 4; ++a) {
    const Vec4 du = d1(u, p, a, o.delta);
    for (int b = 0; b < 4; ++b) {
      Real v = du[static_cast<std::size_t>(b)];
      for (int l = 0; l < 4; ++l) v -= G[static_cast<std::size_t>((l * 4 + a) * 4 + b)] * uv[static_cast<std::size_t>(l)];
      nab[static_cast<std::size_t>(a * 4 + b)] = v;
    }
  }
  Mat4 out{};
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      out[static_cast<std::size_t>(a * 4 + b)] = nab[static_cast<std::size_t>(a * 4 + b)] + nab[static_cast<std::size_t>(b * 4 + a)];
    }
  }
  return out;
}

}  // namespace linwave::geometry::fd
