#include "linwave/spectral/sobolev.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace linwave::spectral {

double SobolevOrder::value() const {
  if (inf_) fail(ErrorCode::InvalidArgument, "Sobolev order is infinite");
  return s_;
}

double sobolev_norm_sq(const SpectralField& f, SobolevOrder s,
                       std::optional<int> truncation) {
  const double order = s.value();
  const auto& lat = f.lattice();
  const int cut = truncation.value_or(lat.nmax());
  if (cut < 0 || cut > lat.nmax()) {
    fail(ErrorCode::OutOfRange, "sobolev_norm: truncation " + std::to_string(cut) +
                                    " outside [0, " + std::to_string(lat.nmax()) + "]");
  }
  const int n = lat.dim();
  std::vector<double> w(static_cast<std::size_t>(f.components()));
  for (int c = 0; c < f.components(); ++c) {
    w[static_cast<std::size_t>(c)] = flat_component_weight(f.rank(), n, c);
  }
  double sum = 0.0;
  for (std::size_t m = 0; m < lat.size(); ++m) {
    const auto k = lat.mode(m);
    bool inside = true;
    for (int a = 0; a < n; ++a) inside = inside && std::abs(k[static_cast<std::size_t>(a)]) <= cut;
    if (!inside) continue;
    double amp = 0.0;
    for (int c = 0; c < f.components(); ++c) {
      amp += w[static_cast<std::size_t>(c)] * std::norm(f.coeff(m, c));
    }
    if (amp == 0.0) continue;
    sum += std::pow(1.0 + lat.norm2(m), order) * amp;
  }
  return std::pow(2.0 * std::numbers::pi, n) * sum;
}

double sobolev_norm(const SpectralField& f, SobolevOrder s,
                    std::optional<int> truncation) {
  return std::sqrt(sobolev_norm_sq(f, s, truncation));
}

}  // namespace linwave::spectral
