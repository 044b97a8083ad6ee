#pragma once

#include <array>
#include <functional>
#include <vector>

#include "linwave/geometry/mode_operator.hpp"

namespace linwave::geometry::fd {

/// Brute-force coordinate tensor calculus by nested 4th-order central
/// differences in long double. Independent of the jet calculus: Christoffels
/// come from differentiating the metric, curvature from differentiating those.

using Real = long double;
using Point = std::array<Real, 4>;           // (t, x1, x2, x3)
using Mat4 = std::array<Real, 16>;           // row-major 4x4
using Vec4 = std::array<Real, 4>;
using MetricFn = std::function<Mat4(const Point&)>;
using Sym2Fn = std::function<Mat4(const Point&)>;
using OneFormFn = std::function<Vec4(const Point&)>;

struct Options {
  Real delta = 1e-3L;
};

/// Metric of a background as a function on R x T^3.
MetricFn background_metric(const SpacetimeBackground& bg);

/// Real field Re(sum_j H_j (t - t0)^j exp(i k.x)) from packed sym2 (or
/// one-form) Taylor coefficients H_j.
Sym2Fn mode_sym2_field(const std::vector<Eigen::VectorXcd>& taylor, double t0,
                       const std::array<double, 3>& k);
OneFormFn mode_oneform_field(const std::vector<Eigen::VectorXcd>& taylor, double t0,
                             const std::array<double, 3>& k);

/// Gamma^l_mn, index (l * 4 + m) * 4 + n.
std::array<Real, 64> christoffel(const MetricFn& g, const Point& p, const Options& opt = {});
Mat4 ricci(const MetricFn& g, const Point& p, const Options& opt = {});
/// nabla* nabla h - 2 R h at p.
Mat4 lichnerowicz(const MetricFn& g, const Sym2Fn& h, const Point& p, const Options& opt = {});
/// nabla_a U_b + nabla_b U_a at p.
Mat4 lie_of_oneform(const MetricFn& g, const OneFormFn& u, const Point& p, const Options& opt = {});

}  // namespace linwave::geometry::fd
