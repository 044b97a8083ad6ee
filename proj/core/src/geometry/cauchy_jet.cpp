#include "linwave/geometry/cauchy_jet.hpp"

#include "linwave/geometry/slice_ops.hpp"

namespace linwave::geometry {

using spectral::ModeLattice;
using spectral::Rank;
using spectral::SpectralField;
using spectral::sym_index;
using spectral::sym_pair;

Eigen::VectorXcd pack_blocks(int n, cplx nn, const Eigen::VectorXcd& n_, const Eigen::VectorXcd& s) {
  const int D = n + 1;
  Eigen::VectorXcd v(D * (D + 1) / 2);
  v(sym_index(0, 0, D)) = nn;
  for (int i = 0; i < n; ++i) v(sym_index(0, i + 1, D)) = n_(i);
  for (int c = 0; c < s.size(); ++c) {
    const auto ij = sym_pair(c, n);
    v(sym_index(ij[0] + 1, ij[1] + 1, D)) = s(c);
  }
  return v;
}

void unpack_blocks(int n, const Eigen::VectorXcd& v, cplx& nn, Eigen::VectorXcd& n_, Eigen::VectorXcd& s) {
  const int D = n + 1;
  nn = v(sym_index(0, 0, D));
  n_.resize(n);
  for (int i = 0; i < n; ++i) n_(i) = v(sym_index(0, i + 1, D));
  s.resize(n * (n + 1) / 2);
  for (int c = 0; c < s.size(); ++c) {
    const auto ij = sym_pair(c, n);
    s(c) = v(sym_index(ij[0] + 1, ij[1] + 1, D));
  }
}

CauchyJet CauchyJet::zeros(const SpacetimeBackground& bg, double t, const ModeLattice& lattice) {
  bg.check_time(t);
  if (lattice.dim() != bg.n()) fail(ErrorCode::BackendMismatch, "CauchyJet: lattice dimension differs from background");
  CauchyJet j{bg,
              t,
              SpectralField(lattice, Rank::Scalar),
              SpectralField(lattice, Rank::OneForm),
              SpectralField(lattice, Rank::Sym2),
              SpectralField(lattice, Rank::Scalar),
              SpectralField(lattice, Rank::OneForm),
              SpectralField(lattice, Rank::Sym2),
              std::nullopt};
  return j;
}

void CauchyJet::validate() const {
  const auto& L = h_s.lattice();
  const SpectralField* blocks[] = {&h_nn, &h_n, &h_s, &dh_nn, &dh_n, &dh_s};
  const Rank ranks[] = {Rank::Scalar, Rank::OneForm, Rank::Sym2, Rank::Scalar, Rank::OneForm, Rank::Sym2};
  for (int b = 0; b < 6; ++b) {
    if (!(blocks[b]->lattice() == L)) fail(ErrorCode::BackendMismatch, "CauchyJet: blocks use different lattices");
    if (blocks[b]->rank() != ranks[b]) fail(ErrorCode::RankMismatch, "CauchyJet: block has the wrong rank");
  }
  if (L.dim() != background.n()) fail(ErrorCode::BackendMismatch, "CauchyJet: lattice dimension differs from background");
  if (d2h) {
    for (int b = 0; b < 3; ++b) {
      const auto& f = (*d2h)[static_cast<std::size_t>(b)];
      if (!(f.lattice() == L) || f.rank() != ranks[b]) {
        fail(ErrorCode::BackendMismatch, "CauchyJet: second-derivative block mismatch");
      }
    }
  }
  background.check_time(t);
}

Eigen::VectorXcd CauchyJet::value(std::size_t mode) const {
  return pack_blocks(lattice().dim(), h_nn.coeff(mode, 0), mode_vector(h_n, mode), mode_vector(h_s, mode));
}

Eigen::VectorXcd CauchyJet::nabla_nu(std::size_t mode) const {
  return pack_blocks(lattice().dim(), dh_nn.coeff(mode, 0), mode_vector(dh_n, mode), mode_vector(dh_s, mode));
}

void CauchyJet::set_mode(std::size_t mode, const Eigen::VectorXcd& h, const Eigen::VectorXcd& nh) {
  const int n = lattice().dim();
  cplx nn;
  Eigen::VectorXcd a, b;
  unpack_blocks(n, h, nn, a, b);
  h_nn.coeff(mode, 0) = nn;
  set_mode_vector(h_n, mode, a);
  set_mode_vector(h_s, mode, b);
  unpack_blocks(n, nh, nn, a, b);
  dh_nn.coeff(mode, 0) = nn;
  set_mode_vector(dh_n, mode, a);
  set_mode_vector(dh_s, mode, b);
}

PackedJets CauchyJet::dt_jets(std::size_t mode, int order) const {
  if (order < 1) fail(ErrorCode::InvalidArgument, "CauchyJet::dt_jets: order must be >= 1");
  const Eigen::VectorXcd h = value(mode);
  const Eigen::VectorXcd dh = nabla_t_to_dt(background, t, h, nabla_nu(mode));
  if (d2h && order >= 2) {
    const auto& b = *d2h;
    const Eigen::VectorXcd dd = pack_blocks(lattice().dim(), b[0].coeff(mode, 0), mode_vector(b[1], mode),
                                            mode_vector(b[2], mode));
    return make_jets({h, dh, dd});
  }
  const PackedJets base = make_jets({h, dh});
  if (order == 1) return base;
  return close_wave_jet(background, t, symbol_of(lattice().mode(mode)), base, order);
}

}  // namespace linwave::geometry
