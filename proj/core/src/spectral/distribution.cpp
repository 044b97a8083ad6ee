#include "linwave/spectral/distribution.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace linwave::spectral {
namespace {

void validate(const LineDistribution& d) {
  if (d.order < 0) fail(ErrorCode::InvalidArgument, "distribution: order must be >= 0");
  if (d.axis < 0 || d.axis >= d.n) {
    fail(ErrorCode::OutOfRange, "distribution: axis " + std::to_string(d.axis) +
                                    " out of range for n=" + std::to_string(d.n));
  }
  for (int i : d.slot) {
    if (i < 0 || i >= d.n) fail(ErrorCode::OutOfRange, "distribution: tensor slot out of range");
  }
}

cplx line_coeff(int order, int k) {
  // (i k)^order / (2 pi)
  cplx z(1.0, 0.0);
  const cplx ik(0.0, static_cast<double>(k));
  for (int p = 0; p < order; ++p) z *= ik;
  return z / (2.0 * std::numbers::pi);
}

}  // namespace

SpectralField LineDistribution::on_lattice(const ModeLattice& lattice) const {
  validate(*this);
  if (lattice.dim() != n) fail(ErrorCode::BackendMismatch, "distribution: lattice dimension");
  SpectralField f(lattice, Rank::Sym2);
  const int c = sym_index(slot[0], slot[1], n);
  std::array<int, 3> k{0, 0, 0};
  for (int j = -lattice.nmax(); j <= lattice.nmax(); ++j) {
    k[static_cast<std::size_t>(axis)] = j;
    f.coeff(lattice.index(std::span<const int>(k.data(), static_cast<std::size_t>(n))), c) =
        line_coeff(order, j);
  }
  return f;
}

double LineDistribution::truncated_norm_sq(SobolevOrder s, int truncation) const {
  validate(*this);
  if (truncation < 0) fail(ErrorCode::OutOfRange, "distribution: negative truncation");
  const double order_s = s.value();
  const double w = slot[0] == slot[1] ? 1.0 : 2.0;
  // symmetric in k, so sum k > 0 twice; add from the tail for accuracy
  double sum = 0.0;
  for (int k = truncation; k >= 1; --k) {
    sum += 2.0 * std::pow(1.0 + static_cast<double>(k) * k, order_s) *
           std::norm(line_coeff(order, k));
  }
  sum += std::norm(line_coeff(order, 0));
  return std::pow(2.0 * std::numbers::pi, n) * w * sum;
}

SpectralField distributional_coefficients(const ModeLattice& lattice, int order,
                                          int axis, std::array<int, 2> slot) {
  LineDistribution d;
  d.n = lattice.dim();
  d.order = order;
  d.axis = axis;
  d.slot = slot;
  return d.on_lattice(lattice);
}

}  // namespace linwave::spectral
