#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "linwave/geometry/mode_operator.hpp"

namespace linwave::evolution::detail {

using geometry::QuadraticModeKernel;
using geometry::SpacetimeBackground;
using geometry::SpacetimeOp;

/// Operator symbols at one stage time. With `gauge`, also the vector wave
/// operator and the divergence source for the gauge-vector equation.
struct StageKernels {
  double t = 0.0;
  QuadraticModeKernel wave, conn, div;

  StageKernels(const SpacetimeBackground& bg, double t_, bool gauge) : t(t_), wave(bg, SpacetimeOp::Lichnerowicz, t_) {
    if (gauge) {
      conn = QuadraticModeKernel(bg, SpacetimeOp::ConnectionWave, t_);
      div = QuadraticModeKernel(bg, SpacetimeOp::DivTraceReversed, t_);
    }
  }
};

/// First-order form of, per mode,
///   h'' = -(A1 h' + A0 h),
///   U'' = -(B1 U' + B0 U) - (C1 h' + C0 h)   (gauge only),
/// relying on unit leading coefficients. State layout [h, h', U, U'].
class ModeSystem {
 public:
  ModeSystem(int D, bool gauge) : nh_(D * (D + 1) / 2), nu_(gauge ? D : 0) {}

  int size() const noexcept { return 2 * (nh_ + nu_); }
  int nh() const noexcept { return nh_; }
  int nu() const noexcept { return nu_; }

  void rhs(const StageKernels& K, const std::vector<double>& mono, const cplx* y, cplx* dy) const {
    std::array<cplx, 16> a{}, b{};
    const cplx* h = y;
    const cplx* hd = y + nh_;
    for (int i = 0; i < nh_; ++i) dy[i] = hd[i];
    K.wave.apply(0, mono, h, a.data());
    K.wave.apply(1, mono, hd, b.data());
    for (int i = 0; i < nh_; ++i) dy[nh_ + i] = -(a[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>(i)]);
    if (nu_ == 0) return;
    const cplx* u = y + 2 * nh_;
    const cplx* ud = u + nu_;
    cplx* du = dy + 2 * nh_;
    for (int i = 0; i < nu_; ++i) du[i] = ud[i];
    std::array<cplx, 4> c{}, d{}, e{}, g{};
    K.conn.apply(0, mono, u, c.data());
    K.conn.apply(1, mono, ud, d.data());
    K.div.apply(0, mono, h, e.data());
    K.div.apply(1, mono, hd, g.data());
    for (int i = 0; i < nu_; ++i) {
      const auto I = static_cast<std::size_t>(i);
      du[nu_ + i] = -(c[I] + d[I] + e[I] + g[I]);
    }
  }

 private:
  int nh_, nu_;
};

/// Throws unless the second-order symbols have identity leading part.
inline void check_unit_leading(const StageKernels& K, bool gauge) {
  const std::array<int, 3> probe{1, 2, 3};
  auto check = [&](const QuadraticModeKernel& q) {
    const Eigen::MatrixXcd A = q.dense(2, probe);
    if ((A - Eigen::MatrixXcd::Identity(A.rows(), A.cols())).norm() > 1e-12) {
      fail(ErrorCode::Unsupported, "mode integrator: leading time coefficient is not the identity");
    }
  };
  check(K.wave);
  if (gauge) check(K.conn);
}

/// Advance every selected mode of `y` (stride sys.size()) from ta to tb in
/// `steps` classical RK4 steps.
inline void rk4_advance(const SpacetimeBackground& bg, const ModeSystem& sys, bool gauge,
                        const std::vector<std::vector<double>>& mono, std::vector<cplx>& y, double ta, double tb,
                        long steps) {
  if (steps <= 0 || ta == tb) return;
  const int m = sys.size();
  const std::size_t nmodes = mono.size();
  const double h = (tb - ta) / static_cast<double>(steps);
  std::vector<cplx> k1(static_cast<std::size_t>(m)), k2(k1), k3(k1), k4(k1), tmp(k1);
  StageKernels K0(bg, ta, gauge);
  check_unit_leading(K0, gauge);
  for (long s = 0; s < steps; ++s) {
    const double t = ta + static_cast<double>(s) * h;
    const double t1 = s + 1 == steps ? tb : t + h;
    const StageKernels Km(bg, t + 0.5 * h, gauge);
    StageKernels K1(bg, t1, gauge);
    for (std::size_t q = 0; q < nmodes; ++q) {
      cplx* yq = y.data() + q * static_cast<std::size_t>(m);
      const auto& mo = mono[q];
      sys.rhs(K0, mo, yq, k1.data());
      for (int i = 0; i < m; ++i) tmp[static_cast<std::size_t>(i)] = yq[i] + 0.5 * h * k1[static_cast<std::size_t>(i)];
      sys.rhs(Km, mo, tmp.data(), k2.data());
      for (int i = 0; i < m; ++i) tmp[static_cast<std::size_t>(i)] = yq[i] + 0.5 * h * k2[static_cast<std::size_t>(i)];
      sys.rhs(Km, mo, tmp.data(), k3.data());
      for (int i = 0; i < m; ++i) tmp[static_cast<std::size_t>(i)] = yq[i] + h * k3[static_cast<std::size_t>(i)];
      sys.rhs(K1, mo, tmp.data(), k4.data());
      for (int i = 0; i < m; ++i) {
        const auto I = static_cast<std::size_t>(i);
        yq[i] += (h / 6.0) * (k1[I] + 2.0 * k2[I] + 2.0 * k3[I] + k4[I]);
      }
    }
    K0 = std::move(K1);
  }
}

/// Number of equal steps of size at most |dt| covering [ta, tb].
inline long step_count(double ta, double tb, double dt) {
  const double span = std::abs(tb - ta);
  if (span == 0.0) return 0;
  return std::max(1L, static_cast<long>(std::ceil(span / dt - 1e-9)));
}

}  // namespace linwave::evolution::detail
