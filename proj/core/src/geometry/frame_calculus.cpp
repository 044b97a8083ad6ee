#include "linwave/geometry/frame_calculus.hpp"

namespace linwave::geometry {

using spectral::Rank;
using spectral::sym_index;
using spectral::sym_pair;

FrameData FrameData::flat(const RMat& G) {
  FrameData f;
  f.n = static_cast<int>(G.rows());
  f.G = G;
  f.Ginv = G.inverse();
  f.gamma.assign(static_cast<std::size_t>(f.n * f.n * f.n), 0.0);
  return f;
}

int tensor_size(int n, int rank) {
  int s = 1;
  for (int i = 0; i < rank; ++i) s *= n;
  return s;
}

CVec sym_to_full(const CVec& packed, int n) {
  CVec full(n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) full(i * n + j) = packed(sym_index(i, j, n));
  }
  return full;
}

CVec full_to_sym(const CVec& full, int n) {
  CVec packed(n * (n + 1) / 2);
  for (int c = 0; c < packed.size(); ++c) {
    const auto ij = sym_pair(c, n);
    packed(c) = 0.5 * (full(ij[0] * n + ij[1]) + full(ij[1] * n + ij[0]));
  }
  return packed;
}

CVec nabla(const FrameData& f, const Symbol& ik, const CVec& T, int rank) {
  const int n = f.n;
  const int m = tensor_size(n, rank);
  CVec out(n * m);
  std::vector<int> idx(static_cast<std::size_t>(rank));
  for (int a = 0; a < n; ++a) {
    for (int flat = 0; flat < m; ++flat) {
      // decode multi-index, first index slowest
      int rem = flat;
      for (int s = rank - 1; s >= 0; --s) {
        idx[static_cast<std::size_t>(s)] = rem % n;
        rem /= n;
      }
      cplx v = ik[static_cast<std::size_t>(a)] * T(flat);
      int stride = m;
      for (int s = 0; s < rank; ++s) {
        stride /= n;
        const int b = idx[static_cast<std::size_t>(s)];
        const int base = flat - b * stride;
        for (int l = 0; l < n; ++l) {
          const double g = f.Gam(l, a, b);
          if (g != 0.0) v -= g * T(base + l * stride);
        }
      }
      out(a * m + flat) = v;
    }
  }
  return out;
}

CVec d_scalar(const FrameData& f, const Symbol& ik, const CVec& phi) {
  CVec out(f.n);
  for (int a = 0; a < f.n; ++a) out(a) = ik[static_cast<std::size_t>(a)] * phi(0);
  return out;
}

CVec hessian(const FrameData& f, const Symbol& ik, const CVec& phi) {
  return full_to_sym(nabla(f, ik, d_scalar(f, ik, phi), 1), f.n);
}

CVec div_oneform(const FrameData& f, const Symbol& ik, const CVec& w) {
  const CVec dw = nabla(f, ik, w, 1);
  cplx s = 0.0;
  for (int a = 0; a < f.n; ++a) {
    for (int b = 0; b < f.n; ++b) s += f.Ginv(a, b) * dw(a * f.n + b);
  }
  CVec out(1);
  out(0) = s;
  return out;
}

CVec div_sym2(const FrameData& f, const Symbol& ik, const CVec& h) {
  const int n = f.n;
  const CVec dh = nabla(f, ik, sym_to_full(h, n), 2);
  CVec out = CVec::Zero(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const double gi = f.Ginv(a, b);
      if (gi == 0.0) continue;
      for (int c = 0; c < n; ++c) out(c) += gi * dh((a * n + b) * n + c);
    }
  }
  return out;
}

CVec trace_sym2(const FrameData& f, const CVec& h) {
  cplx s = 0.0;
  for (int a = 0; a < f.n; ++a) {
    for (int b = 0; b < f.n; ++b) s += f.Ginv(a, b) * h(sym_index(a, b, f.n));
  }
  CVec out(1);
  out(0) = s;
  return out;
}

CVec trace_reverse(const FrameData& f, const CVec& h) {
  const cplx tr = trace_sym2(f, h)(0);
  CVec out = h;
  for (int c = 0; c < out.size(); ++c) {
    const auto ij = sym_pair(c, f.n);
    out(c) -= 0.5 * tr * f.G(ij[0], ij[1]);
  }
  return out;
}

CVec laplacian_scalar(const FrameData& f, const Symbol& ik, const CVec& phi) {
  return -div_oneform(f, ik, d_scalar(f, ik, phi));
}

CVec laplacian_oneform(const FrameData& f, const Symbol& ik, const CVec& w) {
  const int n = f.n;
  // d delta w with delta = -div
  const CVec ddelta = d_scalar(f, ik, -div_oneform(f, ik, w));
  // delta d w, (dw)_ab = nabla_a w_b - nabla_b w_a
  const CVec nw = nabla(f, ik, w, 1);
  CVec dw(n * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) dw(a * n + b) = nw(a * n + b) - nw(b * n + a);
  }
  const CVec ndw = nabla(f, ik, dw, 2);
  CVec deltad = CVec::Zero(n);
  for (int a = 0; a < n; ++a) {
    for (int c = 0; c < n; ++c) {
      const double gi = f.Ginv(a, c);
      if (gi == 0.0) continue;
      for (int b = 0; b < n; ++b) deltad(b) -= gi * ndw((a * n + c) * n + b);
    }
  }
  return ddelta + deltad;
}

CVec connection_laplacian(const FrameData& f, const Symbol& ik, const CVec& T,
                          Rank rank) {
  const int n = f.n;
  const int r = static_cast<int>(rank);
  const CVec full = rank == Rank::Sym2 ? sym_to_full(T, n) : T;
  const CVec nn = nabla(f, ik, nabla(f, ik, full, r), r + 1);
  const int m = tensor_size(n, r);
  CVec out = CVec::Zero(m);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const double gi = f.Ginv(a, b);
      if (gi == 0.0) continue;
      out -= gi * nn.segment((a * n + b) * m, m);
    }
  }
  return rank == Rank::Sym2 ? full_to_sym(out, n) : out;
}

CVec lie_metric(const FrameData& f, const Symbol& ik, const CVec& w) {
  return 2.0 * full_to_sym(nabla(f, ik, w, 1), f.n);
}

CVec conformal_killing(const FrameData& f, const Symbol& ik, const CVec& w) {
  CVec out = lie_metric(f, ik, w);
  const cplx dv = div_oneform(f, ik, w)(0);
  for (int c = 0; c < out.size(); ++c) {
    const auto ij = sym_pair(c, f.n);
    out(c) -= (2.0 / f.n) * dv * f.G(ij[0], ij[1]);
  }
  return out;
}

CVec conformal_killing_adjoint(const FrameData& f, const Symbol& ik, const CVec& h) {
  return -2.0 * div_sym2(f, ik, h) +
         (2.0 / f.n) * d_scalar(f, ik, trace_sym2(f, h));
}

CVec ckl_normal(const FrameData& f, const Symbol& ik, const CVec& w) {
  return conformal_killing_adjoint(f, ik, conformal_killing(f, ik, w));
}

CVec lie_of_background(const FrameData& f, const Symbol& ik, const CVec& w,
                       const RMat& K) {
  const int n = f.n;
  // (L_X K)_ij = X^l (nabla_l K)_ij + K_lj nabla_i X^l + K_il nabla_j X^l
  const CVec Kfull = sym_to_full(matrix_to_packed(K), n).eval();
  const Symbol zero{};
  const CVec nK = nabla(f, zero, Kfull, 2);  // background is invariant
  const CVec X = f.Ginv.cast<cplx>() * w;
  const CVec nw = nabla(f, ik, w, 1);
  // nabla_i X^l = G^{lm} nabla_i w_m
  Eigen::MatrixXcd nX(n, n);  // (i, l)
  for (int i = 0; i < n; ++i) {
    for (int l = 0; l < n; ++l) {
      cplx s = 0.0;
      for (int m = 0; m < n; ++m) s += f.Ginv(l, m) * nw(i * n + m);
      nX(i, l) = s;
    }
  }
  CVec full(n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      cplx v = 0.0;
      for (int l = 0; l < n; ++l) {
        v += X(l) * nK((l * n + i) * n + j);
        v += K(l, j) * nX(i, l) + K(i, l) * nX(j, l);
      }
      full(i * n + j) = v;
    }
  }
  return full_to_sym(full, n);
}

cplx contract(const FrameData& f, const RMat& A, const CVec& B) {
  const int n = f.n;
  const RMat Aup = f.Ginv * A * f.Ginv;
  cplx s = 0.0;
  for (int c = 0; c < n; ++c) {
    for (int d = 0; d < n; ++d) s += Aup(c, d) * B(sym_index(c, d, n));
  }
  return s;
}

RMat compose(const FrameData& f, const RMat& A, const RMat& B) {
  return A * f.Ginv * B;
}

RMat packed_to_matrix(const CVec& packed, int n) {
  RMat M(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) M(i, j) = packed(sym_index(i, j, n)).real();
  }
  return M;
}

CVec matrix_to_packed(const RMat& M) {
  const int n = static_cast<int>(M.rows());
  CVec p(n * (n + 1) / 2);
  for (int c = 0; c < p.size(); ++c) {
    const auto ij = sym_pair(c, n);
    p(c) = 0.5 * (M(ij[0], ij[1]) + M(ij[1], ij[0]));
  }
  return p;
}

cplx metric_pair(const FrameData& f, Rank rank, const CVec& a, const CVec& b) {
  const int n = f.n;
  switch (rank) {
    case Rank::Scalar:
      return std::conj(a(0)) * b(0);
    case Rank::OneForm:
      return (a.conjugate().transpose() * f.Ginv * b)(0);
    case Rank::Sym2: {
      const CVec A = sym_to_full(a, n);
      const CVec B = sym_to_full(b, n);
      cplx s = 0.0;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          for (int k = 0; k < n; ++k) {
            for (int l = 0; l < n; ++l) {
              const double w = f.Ginv(i, k) * f.Ginv(j, l);
              if (w != 0.0) s += w * std::conj(A(i * n + j)) * B(k * n + l);
            }
          }
        }
      }
      return s;
    }
  }
  return 0.0;
}

}  // namespace linwave::geometry

namespace linwave::geometry {

namespace {
CVec concat(const CVec& a, const CVec& b) {
  CVec out(a.size() + b.size());
  out << a, b;
  return out;
}
}  // namespace

CVec split_p_mode(const FrameData& f, const Symbol& ik, const RMat& ric,
                  double a, double b, const CVec& phi, const CVec& w) {
  CVec row1 = laplacian_scalar(f, ik, phi);
  row1(0) += a * contract(f, ric, conformal_killing(f, ik, w));
  const CVec row2 = ckl_normal(f, ik, w) + b * d_scalar(f, ik, phi);
  return concat(row1, row2);
}

CVec split_pstar_mode(const FrameData& f, const Symbol& ik, const RMat& ric,
                      double a, double b, const CVec& psi, const CVec& eta) {
  const CVec row1 = laplacian_scalar(f, ik, psi) - b * div_oneform(f, ik, eta);
  const CVec psi_ric = psi(0) * matrix_to_packed(ric);
  const CVec row2 = ckl_normal(f, ik, eta) + a * conformal_killing_adjoint(f, ik, psi_ric);
  return concat(row1, row2);
}

CVec moncrief_p_mode(const FrameData& f, const Symbol& ik, const RMat& ric,
                     const CVec& beta, const CVec& N) {
  const CVec h = lie_metric(f, ik, beta);
  const CVec m = hessian(f, ik, N) - N(0) * matrix_to_packed(ric);
  return concat(h, m);
}

CVec moncrief_pstar_mode(const FrameData& f, const Symbol& ik, const RMat& ric,
                         const CVec& h, const CVec& m) {
  const CVec one = -2.0 * div_sym2(f, ik, h);
  CVec scal = div_oneform(f, ik, div_sym2(f, ik, m));
  scal(0) -= contract(f, ric, m);
  return concat(one, scal);
}

RMat gram(const FrameData& f, spectral::Rank rank) {
  const int d = spectral::component_count(rank, f.n);
  RMat W(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      W(i, j) = metric_pair(f, rank, CVec::Unit(d, i), CVec::Unit(d, j)).real();
    }
  }
  return W;
}

}  // namespace linwave::geometry
