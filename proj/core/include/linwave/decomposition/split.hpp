#pragma once

#include <string>
#include <vector>

#include "linwave/constraints/constraints.hpp"
#include "linwave/geometry/slice.hpp"
#include "linwave/spectral/field.hpp"

namespace linwave::decomposition {

using constraints::InitialDataPair;
using geometry::SliceGeometry;
using spectral::SpectralField;

/// Coefficients of the coupled operator
///   P(phi, w)    = (Delta phi + a g(Ric, L w), L*L w + b d phi),
///   P*(psi, eta) = (Delta psi + b delta eta, L*L eta + a L*(psi Ric)).
/// Construction enforces 0 < a b < 2.
class SplitOperatorParams {
 public:
  SplitOperatorParams(double a, double b);
  /// (a, b) = (-1/n, -2): the position (first fundamental form) equations.
  static SplitOperatorParams position(int n);
  /// (a, b) = (1/n, 2(n - 1)): the momentum (second fundamental form) equations.
  static SplitOperatorParams momentum(int n);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }

 private:
  double a_, b_;
};

enum class SplitPart { Position, Momentum };
const char* to_string(SplitPart part) noexcept;
SplitPart parse_split_part(const std::string& name);
SplitOperatorParams params_for(SplitPart part, int n);

/// A (scalar, one-form) pair such as (phi, w) or (psi, eta).
struct ScalarOneForm {
  SpectralField scalar;
  SpectralField oneform;
};

/// Throws Unsupported unless the slice has k~ = 0 and Scal = 0.
void require_scalar_flat(const SliceGeometry& slice, const char* what);

ScalarOneForm split_operator_apply(const SplitOperatorParams& params, const SpectralField& phi,
                                   const SpectralField& omega, const SliceGeometry& slice);
ScalarOneForm split_adjoint_apply(const SplitOperatorParams& params, const SpectralField& psi,
                                  const SpectralField& eta, const SliceGeometry& slice);

/// Norms of the four defining equations of the gauge-fixed data spaces,
///   Delta tr h = g(Ric, h),  div h = 0,  Delta tr m = -g(Ric, m),  div(m - tr m g) = 0.
struct GammaResidual {
  double trace_h = 0.0;
  double div_h = 0.0;
  double trace_m = 0.0;
  double div_m = 0.0;

  double position_max() const { return std::max(trace_h, div_h); }
  double momentum_max() const { return std::max(trace_m, div_m); }
  double max() const { return std::max(position_max(), momentum_max()); }
};
GammaResidual gamma_residual(const InitialDataPair& pair);

/// source = gamma_part + L omega + C Ric + phi g.
struct DecompositionResult {
  SplitPart part = SplitPart::Position;
  SpectralField gamma_part;
  SpectralField omega;
  double C = 0.0;
  SpectralField phi;

  double reconstruction = 0.0;     // relative norm of the reassembly error
  double solve_residual = 0.0;     // relative residual of the P solve
  double gamma_position = 0.0;     // residual of the equations for this part
  double gamma_momentum = 0.0;
};

/// Decompose a sym2 field on a scalar-flat slice with k~ = 0. The returned
/// phi has zero mean and omega is the representative orthogonal to the
/// Killing one-forms.
DecompositionResult split_solve(const SpectralField& source, SplitPart part, const SliceGeometry& slice);

/// Reassemble gamma_part + L omega + C Ric + phi g.
SpectralField reassemble(const DecompositionResult& r, const SliceGeometry& slice);

/// C = integral g(source, Ric) / integral |Ric|^2, or 0 when Ric = 0.
double ricci_coefficient(const SpectralField& source, const SliceGeometry& slice);

struct KernelBasis {
  std::vector<ScalarOneForm> basis;  // real fields spanning ker P
  int dimension = 0;                 // dim ker P
  int adjoint_dimension = 0;         // dim ker P*
};

/// Kernel of P (and the dimension of ker P*) by a per-mode null-space scan.
KernelBasis kernel_basis(const SplitOperatorParams& params, const SliceGeometry& slice, int nmax = 2);

}  // namespace linwave::decomposition
