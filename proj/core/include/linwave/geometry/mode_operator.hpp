#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "linwave/geometry/frame_calculus.hpp"
#include "linwave/geometry/spacetime.hpp"

namespace linwave::geometry {

/// Spacetime operators acting on a single Fourier mode h_mn(t) e^{ik.x}.
enum class SpacetimeOp {
  Lichnerowicz,      // box_L h = nabla*nabla h - 2 R h    (sym2 -> sym2)
  DivTraceReversed,  // h -> nabla . (h - 1/2 tr h g)      (sym2 -> one-form)
  DRic,              // 1/2 (box_L h + L_{div hbar} g)     (sym2 -> sym2)
  LieOfG,            // U = V_flat -> L_V g = nabla U + (nabla U)^T (one-form -> sym2)
  ConnectionWave,    // nabla*nabla on one-forms           (one-form -> one-form)
};

const char* to_string(SpacetimeOp op) noexcept;
SpacetimeOp parse_spacetime_op(const std::string& name);

/// Input/output component counts and highest time derivative used.
int op_input_size(SpacetimeOp op, int D);
int op_output_size(SpacetimeOp op, int D);
int op_time_order(SpacetimeOp op);

/// Packed spacetime fields: sym2 in upper-triangle order over indices 0..n
/// (index 0 is t), one-forms with D entries.
using PackedJets = std::vector<Jet>;

/// Apply an operator to jets of one mode at one time. Output jets have order
/// (input order - op_time_order). `bg` must come from jets(t, q) with q at
/// least the input order.
PackedJets apply_spacetime_op(const BackgroundJets& bg, const Symbol& ik, SpacetimeOp op,
                              const PackedJets& in);

/// Full covariant derivative of a packed sym2, (nabla h)_{abc} at index
/// (a * D + b) * D + c with the derivative index a first. Time components
/// lose one order.
JetTensor covariant_derivative(const BackgroundJets& bg, const Symbol& ik, const PackedJets& h);

/// R h (x, y) = g^{ac} R^e_{y a x} h_{ec}, packed sym2 in and out.
PackedJets curvature_action(const BackgroundJets& bg, const PackedJets& h);

/// Per-mode symbol at time t: output = sum_j A[j] d^j/dt^j input.
struct ModeSymbol {
  SpacetimeOp op = SpacetimeOp::Lichnerowicz;
  std::vector<Eigen::MatrixXcd> A;
};

/// Time-dependent matrix operator for a fixed mode k (integer wave vector).
class ModeOperator {
 public:
  ModeOperator(SpacetimeBackground bg, SpacetimeOp op, std::array<int, 3> k);

  SpacetimeOp op() const noexcept { return op_; }
  const std::array<int, 3>& mode() const noexcept { return k_; }
  ModeSymbol at(double t) const;

 private:
  SpacetimeBackground bg_;
  SpacetimeOp op_;
  std::array<int, 3> k_;
};

ModeOperator assemble_mode_operator(const SpacetimeBackground& bg, SpacetimeOp op,
                                    std::array<int, 3> k);

/// Symbol for a real wave vector (the derivative symbol is i k).
ModeSymbol mode_symbol(const SpacetimeBackground& bg, SpacetimeOp op,
                       const std::array<double, 3>& k, double t);
ModeSymbol mode_symbol(const BackgroundJets& bj, SpacetimeOp op, const Symbol& ik);

Symbol symbol_of(const std::array<double, 3>& k);
Symbol symbol_of(const std::array<int, 3>& k);

/// Every operator symbol is a quadratic polynomial in k. This stores, for one
/// time, each A[j] as C + sum_a k_a L_a + sum_{a<=b} k_a k_b Q_ab in sparse
/// form, extracted from 1 + 2n + n(n-1)/2 symbol evaluations.
class QuadraticModeKernel {
 public:
  QuadraticModeKernel() = default;
  QuadraticModeKernel(const SpacetimeBackground& bg, SpacetimeOp op, double t);

  /// Monomials (1, k_a, k_a k_b) for a wave vector.
  std::vector<double> monomials(const std::array<int, 3>& k) const;

  /// out = A[j](k) x, using precomputed monomials.
  void apply(int j, const std::vector<double>& mono, const cplx* x, cplx* out) const;
  Eigen::MatrixXcd dense(int j, const std::array<int, 3>& k) const;

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  int terms() const noexcept { return nterms_; }
  std::size_t nonzeros() const;

 private:
  struct Entry {
    int row, col, term;
    cplx value;
  };
  int n_ = 3;
  int rows_ = 0, cols_ = 0, nterms_ = 0;
  std::vector<std::vector<Entry>> entries_;  // per time-derivative order
};

/// Convert between nabla_t and d_t jets of a packed sym2 at time t:
/// d_t h_ab = (nabla_t h)_ab + Gamma^c_{ta} h_cb + Gamma^c_{tb} h_ac.
Eigen::VectorXcd nabla_t_to_dt(const SpacetimeBackground& bg, double t,
                               const Eigen::VectorXcd& h, const Eigen::VectorXcd& nabla_t_h);
Eigen::VectorXcd dt_to_nabla_t(const SpacetimeBackground& bg, double t,
                               const Eigen::VectorXcd& h, const Eigen::VectorXcd& dt_h);

/// Packed sym2 jets from value vectors per derivative order.
PackedJets make_jets(const std::vector<Eigen::VectorXcd>& derivs);
Eigen::VectorXcd jet_values(const PackedJets& jets, int order);

/// Fill the derivatives 2..order of h from the closure box_L h = 0, given
/// valid orders 0 and 1.
PackedJets close_wave_jet(const SpacetimeBackground& bg, double t, const Symbol& ik,
                          const PackedJets& h01, int order);

}  // namespace linwave::geometry
