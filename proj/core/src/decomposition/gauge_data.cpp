#include "linwave/decomposition/gauge_data.hpp"

#include "linwave/geometry/slice_ops.hpp"

namespace linwave::decomposition {

using geometry::CVec;
using geometry::RMat;
using spectral::Rank;
using spectral::SpectralField;

constraints::InitialDataPair gauge_producing_data(const SpectralField& N, const SpectralField& beta,
                                                  const geometry::SliceGeometry& slice) {
  slice.check_field(N);
  if (N.rank() != Rank::Scalar || beta.rank() != Rank::OneForm || !(N.lattice() == beta.lattice())) {
    fail(ErrorCode::RankMismatch, "gauge_producing_data: expects a scalar N and a one-form beta on one lattice");
  }
  const auto& f = slice.frame();
  const auto& L = N.lattice();
  const RMat& K = slice.k();
  const RMat KK = geometry::compose(f, K, K);
  const CVec Kp = geometry::matrix_to_packed(K);
  const CVec coeff = geometry::matrix_to_packed(2.0 * KK - slice.ric() - slice.trace_k() * K);
  auto pair = constraints::InitialDataPair::zeros(slice, L);
  for (std::size_t mode = 0; mode < L.size(); ++mode) {
    const auto ik = slice.symbol(L, mode);
    const CVec b = geometry::mode_vector(beta, mode);
    const CVec n = geometry::mode_vector(N, mode);
    const CVec h = geometry::lie_metric(f, ik, b) + 2.0 * n(0) * Kp;
    const CVec m = geometry::lie_of_background(f, ik, b, K) + geometry::hessian(f, ik, n) + n(0) * coeff;
    geometry::set_mode_vector(pair.h, mode, h);
    geometry::set_mode_vector(pair.m, mode, m);
  }
  return pair;
}

}  // namespace linwave::decomposition
