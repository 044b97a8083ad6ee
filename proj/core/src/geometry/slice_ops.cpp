#include "linwave/geometry/slice_ops.hpp"

#include <array>
#include <utility>

namespace linwave::geometry {

using spectral::Rank;
using spectral::SpectralField;

namespace {

constexpr std::array<std::pair<SliceOp, const char*>, 11> kNames{{
    {SliceOp::Divergence, "divergence"},
    {SliceOp::Trace, "trace"},
    {SliceOp::TraceReverse, "trace-reverse"},
    {SliceOp::Gradient, "gradient"},
    {SliceOp::Hessian, "hessian"},
    {SliceOp::Laplacian, "laplacian"},
    {SliceOp::ConnectionLaplacian, "connection-laplacian"},
    {SliceOp::LieMetric, "lie-metric"},
    {SliceOp::ConformalKilling, "conformal-killing"},
    {SliceOp::ConformalKillingAdjoint, "conformal-killing-adjoint"},
    {SliceOp::CklNormal, "ckl-normal"},
}};

void require_rank(const SpectralField& f, Rank r, SliceOp op) {
  if (f.rank() != r) {
    fail(ErrorCode::RankMismatch,
         std::string("slice operator '") + to_string(op) + "' does not accept this rank");
  }
}

}  // namespace

const char* to_string(SliceOp op) noexcept {
  for (const auto& [k, name] : kNames) {
    if (k == op) return name;
  }
  return "unknown";
}

SliceOp parse_slice_op(const std::string& name) {
  for (const auto& [k, n] : kNames) {
    if (name == n) return k;
  }
  fail(ErrorCode::Unsupported, "unknown slice operator '" + name + "'");
}

CVec mode_vector(const SpectralField& f, std::size_t mode) {
  const auto c = f.mode_coeffs(mode);
  return Eigen::Map<const CVec>(c.data(), static_cast<Eigen::Index>(c.size()));
}

void set_mode_vector(SpectralField& f, std::size_t mode, const CVec& v) {
  auto c = f.mode_coeffs(mode);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = v(static_cast<Eigen::Index>(i));
}

SpectralField map_modes(const SliceGeometry& geom, const SpectralField& in, Rank out,
                        const ModeMap& fn) {
  geom.check_field(in);
  SpectralField result(in.lattice(), out);
  for (std::size_t m = 0; m < in.modes(); ++m) {
    set_mode_vector(result, m, fn(geom.symbol(in.lattice(), m), mode_vector(in, m)));
  }
  return result;
}

SpectralField apply_slice_operator(const SliceGeometry& geom, SliceOp op,
                                   const SpectralField& field) {
  const FrameData& f = geom.frame();
  switch (op) {
    case SliceOp::Divergence:
      if (field.rank() == Rank::Sym2) {
        return map_modes(geom, field, Rank::OneForm,
                         [&](const Symbol& ik, const CVec& v) { return div_sym2(f, ik, v); });
      }
      require_rank(field, Rank::OneForm, op);
      return map_modes(geom, field, Rank::Scalar,
                       [&](const Symbol& ik, const CVec& v) { return div_oneform(f, ik, v); });
    case SliceOp::Trace:
      require_rank(field, Rank::Sym2, op);
      return map_modes(geom, field, Rank::Scalar,
                       [&](const Symbol&, const CVec& v) { return trace_sym2(f, v); });
    case SliceOp::TraceReverse:
      require_rank(field, Rank::Sym2, op);
      return map_modes(geom, field, Rank::Sym2,
                       [&](const Symbol&, const CVec& v) { return trace_reverse(f, v); });
    case SliceOp::Gradient:
      require_rank(field, Rank::Scalar, op);
      return map_modes(geom, field, Rank::OneForm,
                       [&](const Symbol& ik, const CVec& v) { return d_scalar(f, ik, v); });
    case SliceOp::Hessian:
      require_rank(field, Rank::Scalar, op);
      return map_modes(geom, field, Rank::Sym2,
                       [&](const Symbol& ik, const CVec& v) { return hessian(f, ik, v); });
    case SliceOp::Laplacian:
      if (field.rank() == Rank::Scalar) {
        return map_modes(geom, field, Rank::Scalar, [&](const Symbol& ik, const CVec& v) {
          return laplacian_scalar(f, ik, v);
        });
      }
      require_rank(field, Rank::OneForm, op);
      return map_modes(geom, field, Rank::OneForm, [&](const Symbol& ik, const CVec& v) {
        return laplacian_oneform(f, ik, v);
      });
    case SliceOp::ConnectionLaplacian: {
      const Rank r = field.rank();
      return map_modes(geom, field, r, [&](const Symbol& ik, const CVec& v) {
        return connection_laplacian(f, ik, v, r);
      });
    }
    case SliceOp::LieMetric:
      require_rank(field, Rank::OneForm, op);
      return map_modes(geom, field, Rank::Sym2,
                       [&](const Symbol& ik, const CVec& v) { return lie_metric(f, ik, v); });
    case SliceOp::ConformalKilling:
      require_rank(field, Rank::OneForm, op);
      return map_modes(geom, field, Rank::Sym2, [&](const Symbol& ik, const CVec& v) {
        return conformal_killing(f, ik, v);
      });
    case SliceOp::ConformalKillingAdjoint:
      require_rank(field, Rank::Sym2, op);
      return map_modes(geom, field, Rank::OneForm, [&](const Symbol& ik, const CVec& v) {
        return conformal_killing_adjoint(f, ik, v);
      });
    case SliceOp::CklNormal:
      require_rank(field, Rank::OneForm, op);
      return map_modes(geom, field, Rank::OneForm,
                       [&](const Symbol& ik, const CVec& v) { return ckl_normal(f, ik, v); });
  }
  fail(ErrorCode::Unsupported, "apply_slice_operator: unknown operator");
}

}  // namespace linwave::geometry
