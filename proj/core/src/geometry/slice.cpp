#include "linwave/geometry/slice.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace linwave::geometry {

using spectral::ModeLattice;
using spectral::Rank;
using spectral::SpectralField;

const char* to_string(SliceKind kind) noexcept {
  switch (kind) {
    case SliceKind::FlatTorus: return "flat-torus";
    case SliceKind::Kasner: return "kasner";
    case SliceKind::BergerInvariant: return "berger";
  }
  return "unknown";
}

SliceKind parse_slice_kind(const std::string& name) {
  if (name == "flat-torus" || name == "flat" || name == "minkowski-torus") {
    return SliceKind::FlatTorus;
  }
  if (name == "kasner") return SliceKind::Kasner;
  if (name == "berger") return SliceKind::BergerInvariant;
  fail(ErrorCode::InvalidArgument, "unknown slice kind '" + name + "'");
}

void validate_kasner(const std::array<double, 3>& p) {
  const double s1 = p[0] + p[1] + p[2];
  const double s2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
  if (std::abs(s1 - 1.0) > 1e-12 || std::abs(s2 - 1.0) > 1e-12) {
    std::ostringstream os;
    os.precision(17);
    os << "Kasner exponents must satisfy sum p = 1 and sum p^2 = 1; got sum p = " << s1
       << ", sum p^2 = " << s2;
    fail(ErrorCode::DomainViolation, os.str());
  }
}

SliceGeometry SliceGeometry::flat_torus(int n) {
  if (n < 2 || n > 3) fail(ErrorCode::InvalidArgument, "flat torus dimension must be 2 or 3");
  SliceGeometry g;
  g.kind_ = SliceKind::FlatTorus;
  g.frame_ = FrameData::flat(RMat::Identity(n, n));
  g.k_ = RMat::Zero(n, n);
  g.ric_ = RMat::Zero(n, n);
  g.volume_ = std::pow(2.0 * std::numbers::pi, n);
  return g;
}

SliceGeometry SliceGeometry::kasner(const std::array<double, 3>& p, double t0) {
  validate_kasner(p);
  if (!(t0 > 0.0)) fail(ErrorCode::DomainViolation, "Kasner slice time must be positive");
  SliceGeometry g;
  g.kind_ = SliceKind::Kasner;
  RMat G = RMat::Zero(3, 3);
  RMat K = RMat::Zero(3, 3);
  for (int i = 0; i < 3; ++i) {
    const double pi = p[static_cast<std::size_t>(i)];
    G(i, i) = std::pow(t0, 2.0 * pi);
    K(i, i) = pi * std::pow(t0, 2.0 * pi - 1.0);
  }
  g.frame_ = FrameData::flat(G);
  g.k_ = K;
  g.ric_ = RMat::Zero(3, 3);
  g.volume_ = std::pow(2.0 * std::numbers::pi, 3) * std::sqrt(G.determinant());
  g.p_ = p;
  g.t0_ = t0;
  return g;
}

SliceGeometry SliceGeometry::berger(double lambda) {
  if (!(lambda > 0.0)) fail(ErrorCode::SingularMetric, "Berger parameter must be positive");
  const auto ig = invariant::invariant_geometry(invariant::HomogeneousFrame::berger(lambda));
  SliceGeometry g;
  g.kind_ = SliceKind::BergerInvariant;
  g.frame_ = ig.frame;
  g.k_ = RMat::Zero(3, 3);
  g.ric_ = ig.ric;
  g.scal_ = ig.scal;
  g.volume_ = ig.volume;
  g.lambda_ = lambda;
  return g;
}

SliceGeometry SliceGeometry::berger_scalar_flat() {
  return berger(invariant::berger_scalar_flat_lambda());
}

double SliceGeometry::trace_k() const { return (frame_.Ginv.cwiseProduct(k_)).sum(); }

bool SliceGeometry::scalar_flat_static() const {
  return k_.cwiseAbs().maxCoeff() == 0.0 && std::abs(scal_) <= 1e-10;
}

void SliceGeometry::check_lattice(const ModeLattice& lattice) const {
  if (lattice.dim() != dim()) {
    fail(ErrorCode::BackendMismatch, "field dimension " + std::to_string(lattice.dim()) +
                                         " does not match " + id() + " slice");
  }
  if (kind_ == SliceKind::BergerInvariant && lattice.nmax() != 0) {
    fail(ErrorCode::BackendMismatch,
         "Berger slice carries only invariant fields (nmax = 0 lattice)");
  }
}

Symbol SliceGeometry::symbol(const ModeLattice& lattice, std::size_t mode) const {
  Symbol ik{};
  if (!is_torus()) return ik;
  const auto k = lattice.mode(mode);
  for (int a = 0; a < lattice.dim(); ++a) {
    ik[static_cast<std::size_t>(a)] = cplx(0.0, static_cast<double>(k[static_cast<std::size_t>(a)]));
  }
  return ik;
}

ModeLattice SliceGeometry::lattice(int nmax) const {
  return ModeLattice(dim(), is_torus() ? nmax : 0);
}

SpectralField constant_sym2(const ModeLattice& lattice, const RMat& M) {
  SpectralField f(lattice, Rank::Sym2);
  const CVec p = matrix_to_packed(M);
  for (int c = 0; c < p.size(); ++c) f.coeff(lattice.zero_mode(), c) = p(c);
  return f;
}

SpectralField SliceGeometry::metric_field(const ModeLattice& lattice) const {
  check_lattice(lattice);
  return constant_sym2(lattice, frame_.G);
}

SpectralField SliceGeometry::k_field(const ModeLattice& lattice) const {
  check_lattice(lattice);
  return constant_sym2(lattice, k_);
}

SpectralField SliceGeometry::ric_field(const ModeLattice& lattice) const {
  check_lattice(lattice);
  return constant_sym2(lattice, ric_);
}

double slice_inner(const SliceGeometry& geom, const SpectralField& a, const SpectralField& b) {
  geom.check_field(a);
  if (!(a.lattice() == b.lattice())) fail(ErrorCode::BackendMismatch, "slice_inner: lattice mismatch");
  if (a.rank() != b.rank()) fail(ErrorCode::RankMismatch, "slice_inner: rank mismatch");
  const int nc = a.components();
  double s = 0.0;
  for (std::size_t m = 0; m < a.modes(); ++m) {
    const auto ca = a.mode_coeffs(m);
    const auto cb = b.mode_coeffs(m);
    const CVec va = Eigen::Map<const CVec>(ca.data(), nc);
    const CVec vb = Eigen::Map<const CVec>(cb.data(), nc);
    s += metric_pair(geom.frame(), a.rank(), va, vb).real();
  }
  return geom.volume() * s;
}

double slice_norm(const SliceGeometry& geom, const SpectralField& a) {
  return std::sqrt(std::max(0.0, slice_inner(geom, a, a)));
}

}  // namespace linwave::geometry
