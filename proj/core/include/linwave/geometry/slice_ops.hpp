#pragma once

#include <functional>
#include <string>

#include "linwave/geometry/slice.hpp"

namespace linwave::geometry {

enum class SliceOp {
  Divergence,              // sym2 -> one-form, one-form -> scalar
  Trace,                   // sym2 -> scalar
  TraceReverse,            // h - (1/2) tr h g~
  Gradient,                // scalar -> one-form
  Hessian,                 // scalar -> sym2
  Laplacian,               // delta d + d delta on scalars and one-forms
  ConnectionLaplacian,     // any rank
  LieMetric,               // w -> L_{w#} g~
  ConformalKilling,        // L
  ConformalKillingAdjoint, // L*
  CklNormal,               // L*L
};

const char* to_string(SliceOp op) noexcept;
SliceOp parse_slice_op(const std::string& name);

/// Exact per-mode action of a slice operator (matrix action on the
/// invariant backend).
spectral::SpectralField apply_slice_operator(const SliceGeometry& geom, SliceOp op,
                                             const spectral::SpectralField& field);

/// Apply a per-mode map producing a field of rank `out`.
using ModeMap = std::function<CVec(const Symbol&, const CVec&)>;
spectral::SpectralField map_modes(const SliceGeometry& geom, const spectral::SpectralField& in,
                                  spectral::Rank out, const ModeMap& fn);

/// Mode coefficients as an Eigen vector.
CVec mode_vector(const spectral::SpectralField& f, std::size_t mode);
void set_mode_vector(spectral::SpectralField& f, std::size_t mode, const CVec& v);

}  // namespace linwave::geometry
