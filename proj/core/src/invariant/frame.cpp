#include "linwave/invariant/frame.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/tools/roots.hpp>

namespace linwave::invariant {

namespace {
int eps(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}
}  // namespace

HomogeneousFrame HomogeneousFrame::su2(double l1, double l2, double l3) {
  HomogeneousFrame f;
  for (int k = 0; k < 3; ++k) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        f.c[static_cast<std::size_t>((k * 3 + i) * 3 + j)] = 2.0 * eps(i, j, k);
      }
    }
  }
  f.G = Eigen::Vector3d(l1, l2, l3).asDiagonal();
  return f;
}

HomogeneousFrame HomogeneousFrame::berger(double lambda) {
  return su2(lambda, 1.0, 1.0);
}

double HomogeneousFrame::jacobi_defect() const {
  // [[e_i,e_j],e_k] + cyclic = 0, component m
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        for (int m = 0; m < 3; ++m) {
          double s = 0.0;
          for (int l = 0; l < 3; ++l) {
            s += C(l, i, j) * C(m, l, k) + C(l, j, k) * C(m, l, i) +
                 C(l, k, i) * C(m, l, j);
          }
          worst = std::max(worst, std::abs(s));
        }
      }
    }
  }
  return worst;
}

void HomogeneousFrame::validate() const {
  for (int k = 0; k < 3; ++k) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (C(k, i, j) != -C(k, j, i)) {
          fail(ErrorCode::DomainViolation, "frame: structure constants not antisymmetric");
        }
      }
    }
  }
  if (jacobi_defect() > 1e-12) {
    fail(ErrorCode::DomainViolation, "frame: Jacobi identity violated");
  }
  if ((G - G.transpose()).cwiseAbs().maxCoeff() > 0.0) {
    fail(ErrorCode::SingularMetric, "frame: metric not symmetric");
  }
  Eigen::LLT<Eigen::Matrix3d> llt(G);
  if (llt.info() != Eigen::Success) {
    fail(ErrorCode::SingularMetric, "frame: metric not positive definite");
  }
}

InvariantGeometry invariant_geometry(const HomogeneousFrame& fr) {
  fr.validate();
  InvariantGeometry out;
  const Eigen::Matrix3d& G = fr.G;
  const Eigen::Matrix3d Ginv = G.inverse();
  geometry::FrameData f;
  f.n = 3;
  f.G = G;
  f.Ginv = Ginv;
  f.gamma.assign(27, 0.0);
  // Koszul: 2 g(nabla_i e_j, e_k) = g([e_i,e_j],e_k) - g([e_j,e_k],e_i) + g([e_k,e_i],e_j)
  std::array<double, 27> low{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        double s = 0.0;
        for (int m = 0; m < 3; ++m) {
          s += fr.C(m, i, j) * G(m, k) - fr.C(m, j, k) * G(m, i) + fr.C(m, k, i) * G(m, j);
        }
        low[static_cast<std::size_t>((i * 3 + j) * 3 + k)] = 0.5 * s;
      }
    }
  }
  for (int m = 0; m < 3; ++m) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        double s = 0.0;
        for (int k = 0; k < 3; ++k) s += Ginv(m, k) * low[static_cast<std::size_t>((i * 3 + j) * 3 + k)];
        f.gamma[static_cast<std::size_t>((m * 3 + i) * 3 + j)] = s;
      }
    }
  }
  // R(e_i,e_j)e_k = R^l_{k i j} e_l
  //   = Gam^m_jk Gam^l_im - Gam^m_ik Gam^l_jm - c^m_ij Gam^l_mk
  Eigen::Matrix3d ric = Eigen::Matrix3d::Zero();
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      double s = 0.0;
      for (int i = 0; i < 3; ++i) {
        for (int m = 0; m < 3; ++m) {
          s += f.Gam(m, j, k) * f.Gam(i, i, m) - f.Gam(m, i, k) * f.Gam(i, j, m) -
               fr.C(m, i, j) * f.Gam(i, m, k);
        }
      }
      ric(j, k) = s;
    }
  }
  out.frame = f;
  out.ric = 0.5 * (ric + ric.transpose());
  out.scal = (Ginv.cwiseProduct(out.ric)).sum();
  out.volume = 2.0 * std::numbers::pi * std::numbers::pi * std::sqrt(G.determinant());
  return out;
}

Eigen::Vector3d milnor_ricci_diagonal(double l1, double l2, double l3) {
  const std::array<double, 3> l{l1, l2, l3};
  // [E_j, E_k] = kappa_i E_i in the orthonormal frame E_i = e_i / sqrt(l_i)
  std::array<double, 3> kappa{};
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    kappa[static_cast<std::size_t>(i)] =
        2.0 * std::sqrt(l[static_cast<std::size_t>(i)] /
                        (l[static_cast<std::size_t>(j)] * l[static_cast<std::size_t>(k)]));
  }
  std::array<double, 3> mu{};
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    mu[static_cast<std::size_t>(i)] =
        0.5 * (kappa[static_cast<std::size_t>(j)] + kappa[static_cast<std::size_t>(k)] -
               kappa[static_cast<std::size_t>(i)]);
  }
  Eigen::Vector3d out;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    out(i) = l[static_cast<std::size_t>(i)] * 2.0 * mu[static_cast<std::size_t>(j)] *
             mu[static_cast<std::size_t>(k)];
  }
  return out;
}

double berger_scalar_curvature(double lambda) {
  return invariant_geometry(HomogeneousFrame::berger(lambda)).scal;
}

double berger_scalar_flat_lambda() {
  // Scal(1) > 0 (round sphere) and Scal decreases through zero for lambda > 1
  const auto f = [](double l) { return berger_scalar_curvature(l); };
  std::uintmax_t iters = 200;
  const auto [lo, hi] = boost::math::tools::toms748_solve(
      f, 1.0, 16.0, boost::math::tools::eps_tolerance<double>(52), iters);
  return 0.5 * (lo + hi);
}

}  // namespace linwave::invariant
