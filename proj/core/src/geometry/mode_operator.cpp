#include "linwave/geometry/mode_operator.hpp"

#include <array>
#include <utility>

namespace linwave::geometry {

using spectral::sym_index;
using spectral::sym_pair;

namespace {

constexpr std::array<std::pair<SpacetimeOp, const char*>, 5> kOpNames{{
    {SpacetimeOp::Lichnerowicz, "lichnerowicz"},
    {SpacetimeOp::DivTraceReversed, "div-trace-reversed"},
    {SpacetimeOp::DRic, "d-ric"},
    {SpacetimeOp::LieOfG, "lie-of-g"},
    {SpacetimeOp::ConnectionWave, "connection-wave"},
}};

int sym_size(int D) { return D * (D + 1) / 2; }

JetTensor unpack_sym(const PackedJets& p, int D) {
  JetTensor T(D, 2, Jet::kMax);
  for (int a = 0; a < D; ++a) {
    for (int b = 0; b < D; ++b) {
      T[static_cast<std::size_t>(a * D + b)] = p[static_cast<std::size_t>(sym_index(a, b, D))];
    }
  }
  return T;
}

PackedJets pack_sym(const JetTensor& T) {
  const int D = T.D;
  PackedJets p(static_cast<std::size_t>(sym_size(D)));
  for (int c = 0; c < sym_size(D); ++c) {
    const auto ab = sym_pair(c, D);
    Jet v = T[static_cast<std::size_t>(ab[0] * D + ab[1])] +
            T[static_cast<std::size_t>(ab[1] * D + ab[0])];
    v *= 0.5;
    p[static_cast<std::size_t>(c)] = v;
  }
  return p;
}

JetTensor from_oneform(const PackedJets& p, int D) {
  JetTensor T(D, 1, Jet::kMax);
  for (int a = 0; a < D; ++a) T[static_cast<std::size_t>(a)] = p[static_cast<std::size_t>(a)];
  return T;
}

Jet partial(const Symbol& ik, int a, const Jet& v) {
  if (a == 0) return v.dt();
  return ik[static_cast<std::size_t>(a - 1)] * v;
}

// (nabla_a T)_{idx}; idx has T.rank entries.
Jet cov_component(const BackgroundJets& bg, const Symbol& ik, const JetTensor& T, int a,
                  const int* idx) {
  const int D = T.D;
  std::size_t flat = 0;
  for (int s = 0; s < T.rank; ++s) flat = flat * static_cast<std::size_t>(D) + static_cast<std::size_t>(idx[s]);
  Jet v = partial(ik, a, T[flat]);
  std::size_t stride = T.size();
  for (int s = 0; s < T.rank; ++s) {
    stride /= static_cast<std::size_t>(D);
    const int b = idx[s];
    const std::size_t base = flat - static_cast<std::size_t>(b) * stride;
    for (int l = 0; l < D; ++l) {
      if (!bg.Gnz(l, a, b)) continue;
      v -= bg.Gam(l, a, b) * T[base + static_cast<std::size_t>(l) * stride];
    }
  }
  return v;
}

JetTensor nabla(const BackgroundJets& bg, const Symbol& ik, const JetTensor& T) {
  const int D = T.D;
  JetTensor out(D, T.rank + 1, Jet::kMax);
  std::array<int, 8> idx{};
  const std::size_t m = T.size();
  for (int a = 0; a < D; ++a) {
    for (std::size_t flat = 0; flat < m; ++flat) {
      std::size_t rem = flat;
      for (int s = T.rank - 1; s >= 0; --s) {
        idx[static_cast<std::size_t>(s)] = static_cast<int>(rem % static_cast<std::size_t>(D));
        rem /= static_cast<std::size_t>(D);
      }
      out[static_cast<std::size_t>(a) * m + flat] = cov_component(bg, ik, T, a, idx.data());
    }
  }
  return out;
}

PackedJets trace_reversed(const BackgroundJets& bg, const PackedJets& h) {
  const int D = bg.D;
  Jet tr = Jet::zero(Jet::kMax);
  bool first = true;
  for (int a = 0; a < D; ++a) {
    const Jet term = bg.ginv[static_cast<std::size_t>(a)] * h[static_cast<std::size_t>(sym_index(a, a, D))];
    if (first) {
      tr = term;
      first = false;
    } else {
      tr += term;
    }
  }
  PackedJets out = h;
  for (int a = 0; a < D; ++a) {
    Jet corr = bg.g[static_cast<std::size_t>(a)] * tr;
    corr *= 0.5;
    out[static_cast<std::size_t>(sym_index(a, a, D))] -= corr;
  }
  return out;
}

PackedJets div_trace_reversed(const BackgroundJets& bg, const Symbol& ik, const PackedJets& h) {
  const int D = bg.D;
  const JetTensor hb = unpack_sym(trace_reversed(bg, h), D);
  PackedJets out(static_cast<std::size_t>(D));
  for (int b = 0; b < D; ++b) {
    Jet s;
    for (int a = 0; a < D; ++a) {
      const int idx[2] = {a, b};
      const Jet term = bg.ginv[static_cast<std::size_t>(a)] * cov_component(bg, ik, hb, a, idx);
      if (a == 0) {
        s = term;
      } else {
        s += term;
      }
    }
    out[static_cast<std::size_t>(b)] = s;
  }
  return out;
}

PackedJets lie_of_oneform(const BackgroundJets& bg, const Symbol& ik, const PackedJets& u) {
  const int D = bg.D;
  const JetTensor N = nabla(bg, ik, from_oneform(u, D));
  PackedJets out(static_cast<std::size_t>(sym_size(D)));
  for (int c = 0; c < sym_size(D); ++c) {
    const auto ab = sym_pair(c, D);
    out[static_cast<std::size_t>(c)] = N[static_cast<std::size_t>(ab[0] * D + ab[1])] +
                                       N[static_cast<std::size_t>(ab[1] * D + ab[0])];
  }
  return out;
}

// -g^{aa} (nabla_a nabla_a T) for a full tensor T; returns full tensor.
JetTensor rough_laplacian(const BackgroundJets& bg, const Symbol& ik, const JetTensor& T) {
  const int D = T.D;
  const JetTensor N = nabla(bg, ik, T);
  JetTensor out(D, T.rank, Jet::kMax);
  std::array<int, 8> idx{};
  for (std::size_t flat = 0; flat < T.size(); ++flat) {
    std::size_t rem = flat;
    for (int s = T.rank; s >= 1; --s) {
      idx[static_cast<std::size_t>(s)] = static_cast<int>(rem % static_cast<std::size_t>(D));
      rem /= static_cast<std::size_t>(D);
    }
    Jet s;
    for (int a = 0; a < D; ++a) {
      idx[0] = a;
      const Jet term = bg.ginv[static_cast<std::size_t>(a)] * cov_component(bg, ik, N, a, idx.data());
      if (a == 0) {
        s = term;
      } else {
        s += term;
      }
    }
    s *= -1.0;
    out[flat] = s;
  }
  return out;
}

PackedJets lichnerowicz(const BackgroundJets& bg, const Symbol& ik, const PackedJets& h) {
  const int D = bg.D;
  PackedJets out = pack_sym(rough_laplacian(bg, ik, unpack_sym(h, D)));
  const PackedJets rh = curvature_action(bg, h);
  for (std::size_t c = 0; c < out.size(); ++c) axpy(out[c], -2.0, rh[c]);
  return out;
}

}  // namespace

const char* to_string(SpacetimeOp op) noexcept {
  for (const auto& [k, name] : kOpNames) {
    if (k == op) return name;
  }
  return "unknown";
}

SpacetimeOp parse_spacetime_op(const std::string& name) {
  for (const auto& [k, n] : kOpNames) {
    if (name == n) return k;
  }
  fail(ErrorCode::Unsupported, "unknown spacetime operator '" + name + "'");
}

int op_input_size(SpacetimeOp op, int D) {
  switch (op) {
    case SpacetimeOp::LieOfG:
    case SpacetimeOp::ConnectionWave: return D;
    default: return sym_size(D);
  }
}

int op_output_size(SpacetimeOp op, int D) {
  switch (op) {
    case SpacetimeOp::DivTraceReversed:
    case SpacetimeOp::ConnectionWave: return D;
    default: return sym_size(D);
  }
}

int op_time_order(SpacetimeOp op) {
  switch (op) {
    case SpacetimeOp::DivTraceReversed:
    case SpacetimeOp::LieOfG: return 1;
    default: return 2;
  }
}

JetTensor covariant_derivative(const BackgroundJets& bg, const Symbol& ik, const PackedJets& h) {
  return nabla(bg, ik, unpack_sym(h, bg.D));
}

PackedJets curvature_action(const BackgroundJets& bg, const PackedJets& h) {
  const int D = bg.D;
  JetTensor out(D, 2, Jet::kMax);
  bool touched[16] = {};
  int order = Jet::kMax;
  for (const auto& j : h) order = std::min(order, j.order);
  for (auto& j : out.c) j = Jet::zero(order);
  for (const auto& e : bg.riemann) {
    // R h (x = d, y = b) += g^{cc} R^a_{b c d} h_{a c}
    const std::size_t xy = static_cast<std::size_t>(e.d * D + e.b);
    Jet term = bg.ginv[static_cast<std::size_t>(e.c)] * e.value;
    fma(out[xy], term, h[static_cast<std::size_t>(sym_index(e.a, e.c, D))]);
    touched[xy] = true;
  }
  (void)touched;
  return pack_sym(out);
}

PackedJets apply_spacetime_op(const BackgroundJets& bg, const Symbol& ik, SpacetimeOp op,
                              const PackedJets& in) {
  const int D = bg.D;
  if (static_cast<int>(in.size()) != op_input_size(op, D)) {
    fail(ErrorCode::RankMismatch, "apply_spacetime_op: input size mismatch");
  }
  switch (op) {
    case SpacetimeOp::Lichnerowicz: return lichnerowicz(bg, ik, in);
    case SpacetimeOp::DivTraceReversed: return div_trace_reversed(bg, ik, in);
    case SpacetimeOp::DRic: {
      PackedJets out = lichnerowicz(bg, ik, in);
      const PackedJets lie = lie_of_oneform(bg, ik, div_trace_reversed(bg, ik, in));
      for (std::size_t c = 0; c < out.size(); ++c) {
        out[c] += lie[c];
        out[c] *= 0.5;
      }
      return out;
    }
    case SpacetimeOp::LieOfG: return lie_of_oneform(bg, ik, in);
    case SpacetimeOp::ConnectionWave: {
      const JetTensor r = rough_laplacian(bg, ik, from_oneform(in, D));
      return PackedJets(r.c.begin(), r.c.end());
    }
  }
  fail(ErrorCode::Unsupported, "apply_spacetime_op: unknown operator");
}

Symbol symbol_of(const std::array<double, 3>& k) {
  return {cplx(0.0, k[0]), cplx(0.0, k[1]), cplx(0.0, k[2])};
}

Symbol symbol_of(const std::array<int, 3>& k) {
  return symbol_of(std::array<double, 3>{static_cast<double>(k[0]), static_cast<double>(k[1]),
                                         static_cast<double>(k[2])});
}

ModeSymbol mode_symbol(const BackgroundJets& bj, SpacetimeOp op, const Symbol& ik) {
  const int D = bj.D;
  const int nin = op_input_size(op, D);
  const int nout = op_output_size(op, D);
  const int s = op_time_order(op);
  ModeSymbol sym;
  sym.op = op;
  sym.A.assign(static_cast<std::size_t>(s + 1), Eigen::MatrixXcd::Zero(nout, nin));
  PackedJets in(static_cast<std::size_t>(nin), Jet::zero(s));
  for (int c = 0; c < nin; ++c) {
    for (int j = 0; j <= s; ++j) {
      in[static_cast<std::size_t>(c)].d[static_cast<std::size_t>(j)] = 1.0;
      const PackedJets out = apply_spacetime_op(bj, ik, op, in);
      for (int r = 0; r < nout; ++r) {
        sym.A[static_cast<std::size_t>(j)](r, c) = out[static_cast<std::size_t>(r)].d[0];
      }
      in[static_cast<std::size_t>(c)].d[static_cast<std::size_t>(j)] = 0.0;
    }
  }
  return sym;
}

ModeSymbol mode_symbol(const SpacetimeBackground& bg, SpacetimeOp op,
                       const std::array<double, 3>& k, double t) {
  return mode_symbol(bg.jets(t, op_time_order(op)), op, symbol_of(k));
}

ModeOperator::ModeOperator(SpacetimeBackground bg, SpacetimeOp op, std::array<int, 3> k)
    : bg_(std::move(bg)), op_(op), k_(k) {}

ModeSymbol ModeOperator::at(double t) const {
  return mode_symbol(bg_, op_,
                     {static_cast<double>(k_[0]), static_cast<double>(k_[1]),
                      static_cast<double>(k_[2])},
                     t);
}

ModeOperator assemble_mode_operator(const SpacetimeBackground& bg, SpacetimeOp op,
                                    std::array<int, 3> k) {
  for (int a = bg.n(); a < 3; ++a) {
    if (k[static_cast<std::size_t>(a)] != 0) {
      fail(ErrorCode::InvalidArgument, "wave vector has entries beyond the spatial dimension");
    }
  }
  return ModeOperator(bg, op, k);
}

QuadraticModeKernel::QuadraticModeKernel(const SpacetimeBackground& bg, SpacetimeOp op,
                                         double t)
    : n_(bg.n()) {
  const int D = bg.D();
  rows_ = op_output_size(op, D);
  cols_ = op_input_size(op, D);
  const int s = op_time_order(op);
  const BackgroundJets bj = bg.jets(t, s);
  auto eval = [&](std::array<double, 3> k) { return mode_symbol(bj, op, symbol_of(k)); };

  // term layout: 0 -> C, 1..n -> L_a, then Q_ab for a <= b
  nterms_ = 1 + n_ + n_ * (n_ + 1) / 2;
  std::vector<std::vector<Eigen::MatrixXcd>> coef(
      static_cast<std::size_t>(s + 1),
      std::vector<Eigen::MatrixXcd>(static_cast<std::size_t>(nterms_)));
  const ModeSymbol c0 = eval({0, 0, 0});
  std::vector<ModeSymbol> plus, minus;
  for (int a = 0; a < n_; ++a) {
    std::array<double, 3> e{0, 0, 0};
    e[static_cast<std::size_t>(a)] = 1.0;
    plus.push_back(eval(e));
    e[static_cast<std::size_t>(a)] = -1.0;
    minus.push_back(eval(e));
  }
  for (int j = 0; j <= s; ++j) {
    const auto J = static_cast<std::size_t>(j);
    auto& cj = coef[J];
    cj[0] = c0.A[J];
    for (int a = 0; a < n_; ++a) {
      const auto A = static_cast<std::size_t>(a);
      cj[1 + A] = 0.5 * (plus[A].A[J] - minus[A].A[J]);
    }
  }
  int term = 1 + n_;
  for (int a = 0; a < n_; ++a) {
    for (int b = a; b < n_; ++b, ++term) {
      const auto A = static_cast<std::size_t>(a);
      if (a == b) {
        for (int j = 0; j <= s; ++j) {
          const auto J = static_cast<std::size_t>(j);
          coef[J][static_cast<std::size_t>(term)] =
              0.5 * (plus[A].A[J] + minus[A].A[J]) - c0.A[J];
        }
      }
    }
  }
  term = 1 + n_;
  for (int a = 0; a < n_; ++a) {
    for (int b = a; b < n_; ++b, ++term) {
      if (a == b) continue;
      std::array<double, 3> e{0, 0, 0};
      e[static_cast<std::size_t>(a)] = 1.0;
      e[static_cast<std::size_t>(b)] = 1.0;
      const ModeSymbol sab = eval(e);
      const int qa = 1 + n_ + a * n_ - a * (a - 1) / 2;  // index of Q_aa
      const int qb = 1 + n_ + b * n_ - b * (b - 1) / 2;
      for (int j = 0; j <= s; ++j) {
        const auto J = static_cast<std::size_t>(j);
        auto& cj = coef[J];
        cj[static_cast<std::size_t>(term)] = sab.A[J] - cj[0] - cj[static_cast<std::size_t>(1 + a)] -
                                             cj[static_cast<std::size_t>(1 + b)] -
                                             cj[static_cast<std::size_t>(qa)] -
                                             cj[static_cast<std::size_t>(qb)];
      }
    }
  }
  entries_.assign(static_cast<std::size_t>(s + 1), {});
  for (int j = 0; j <= s; ++j) {
    double scale = 0.0;
    for (const auto& M : coef[static_cast<std::size_t>(j)]) scale = std::max(scale, M.cwiseAbs().maxCoeff());
    const double cut = 1e-15 * scale;
    for (int tm = 0; tm < nterms_; ++tm) {
      const auto& M = coef[static_cast<std::size_t>(j)][static_cast<std::size_t>(tm)];
      for (int c = 0; c < cols_; ++c) {
        for (int r = 0; r < rows_; ++r) {
          if (std::abs(M(r, c)) > cut) {
            entries_[static_cast<std::size_t>(j)].push_back({r, c, tm, M(r, c)});
          }
        }
      }
    }
  }
}

std::vector<double> QuadraticModeKernel::monomials(const std::array<int, 3>& k) const {
  std::vector<double> m(static_cast<std::size_t>(nterms_));
  m[0] = 1.0;
  for (int a = 0; a < n_; ++a) m[static_cast<std::size_t>(1 + a)] = k[static_cast<std::size_t>(a)];
  int term = 1 + n_;
  for (int a = 0; a < n_; ++a) {
    for (int b = a; b < n_; ++b, ++term) {
      m[static_cast<std::size_t>(term)] =
          static_cast<double>(k[static_cast<std::size_t>(a)]) * k[static_cast<std::size_t>(b)];
    }
  }
  return m;
}

void QuadraticModeKernel::apply(int j, const std::vector<double>& mono, const cplx* x,
                                cplx* out) const {
  for (int r = 0; r < rows_; ++r) out[r] = 0.0;
  for (const auto& e : entries_[static_cast<std::size_t>(j)]) {
    out[e.row] += (mono[static_cast<std::size_t>(e.term)] * e.value) * x[e.col];
  }
}

Eigen::MatrixXcd QuadraticModeKernel::dense(int j, const std::array<int, 3>& k) const {
  const auto mono = monomials(k);
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(rows_, cols_);
  for (const auto& e : entries_[static_cast<std::size_t>(j)]) {
    M(e.row, e.col) += mono[static_cast<std::size_t>(e.term)] * e.value;
  }
  return M;
}

std::size_t QuadraticModeKernel::nonzeros() const {
  std::size_t s = 0;
  for (const auto& e : entries_) s += e.size();
  return s;
}

namespace {

Eigen::VectorXcd gamma_t_terms(const SpacetimeBackground& bg, double t, const Eigen::VectorXcd& h) {
  const int D = bg.D();
  const BackgroundJets bj = bg.jets(t, 0);
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(h.size());
  for (int c = 0; c < h.size(); ++c) {
    const auto ab = sym_pair(c, D);
    cplx v = 0.0;
    for (int l = 0; l < D; ++l) {
      if (bj.Gnz(l, 0, ab[0])) v += bj.Gam(l, 0, ab[0]).d[0] * h(sym_index(l, ab[1], D));
      if (bj.Gnz(l, 0, ab[1])) v += bj.Gam(l, 0, ab[1]).d[0] * h(sym_index(ab[0], l, D));
    }
    out(c) = v;
  }
  return out;
}

}  // namespace

Eigen::VectorXcd nabla_t_to_dt(const SpacetimeBackground& bg, double t, const Eigen::VectorXcd& h,
                               const Eigen::VectorXcd& nabla_t_h) {
  return nabla_t_h + gamma_t_terms(bg, t, h);
}

Eigen::VectorXcd dt_to_nabla_t(const SpacetimeBackground& bg, double t, const Eigen::VectorXcd& h,
                               const Eigen::VectorXcd& dt_h) {
  return dt_h - gamma_t_terms(bg, t, h);
}

PackedJets make_jets(const std::vector<Eigen::VectorXcd>& derivs) {
  const int order = static_cast<int>(derivs.size()) - 1;
  PackedJets out(static_cast<std::size_t>(derivs.front().size()), Jet::zero(order));
  for (int j = 0; j <= order; ++j) {
    for (Eigen::Index c = 0; c < derivs[static_cast<std::size_t>(j)].size(); ++c) {
      out[static_cast<std::size_t>(c)].d[static_cast<std::size_t>(j)] = derivs[static_cast<std::size_t>(j)](c);
    }
  }
  return out;
}

Eigen::VectorXcd jet_values(const PackedJets& jets, int order) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(jets.size()));
  for (std::size_t c = 0; c < jets.size(); ++c) {
    if (jets[c].order < order) fail(ErrorCode::OutOfRange, "jet_values: order not available");
    v(static_cast<Eigen::Index>(c)) = jets[c].d[static_cast<std::size_t>(order)];
  }
  return v;
}

PackedJets close_wave_jet(const SpacetimeBackground& bg, double t, const Symbol& ik,
                          const PackedJets& h01, int order) {
  if (order > Jet::kMax) fail(ErrorCode::OutOfRange, "close_wave_jet: order too high");
  PackedJets h = h01;
  for (auto& j : h) {
    if (j.order < 1) fail(ErrorCode::InvalidArgument, "close_wave_jet: need value and first derivative");
    j.order = 1;
  }
  for (int q = 2; q <= order; ++q) {
    for (auto& j : h) {
      j.order = q;
      j.d[static_cast<std::size_t>(q)] = 0.0;
    }
    // box_L h = d_t^2 h + lower terms, so the unknown top derivative is
    // minus the residual evaluated with it set to zero
    const PackedJets r = apply_spacetime_op(bg.jets(t, q), ik, SpacetimeOp::Lichnerowicz, h);
    for (std::size_t c = 0; c < h.size(); ++c) h[c].d[static_cast<std::size_t>(q)] = -r[c].d[static_cast<std::size_t>(q - 2)];
  }
  return h;
}

}  // namespace linwave::geometry
