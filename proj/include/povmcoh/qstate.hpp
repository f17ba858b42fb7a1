#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "povmcoh/cmatrix.hpp"

namespace povmcoh {

inline constexpr double kNormTol = 1e-10;
inline constexpr double kCompletenessTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-10;

/// Normalized state vector. Construction rejects vectors whose norm is off by
/// more than kNormTol; use PureState::normalize for raw amplitudes.
class PureState {
 public:
  explicit PureState(CVector amplitudes);

  static PureState normalize(const CVector& raw);
  static PureState basis(Eigen::Index dim, Eigen::Index index);

  const CVector& amplitudes() const { return amps_; }
  Eigen::Index dim() const { return amps_.size(); }
  CMatrix projector() const { return amps_ * amps_.adjoint(); }

 private:
  CVector amps_;
};

/// Hermitian, positive semidefinite, unit trace.
class DensityMatrix {
 public:
  explicit DensityMatrix(CMatrix m);
  explicit DensityMatrix(const PureState& s) : m_(s.projector()) {}

  const CMatrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

 private:
  CMatrix m_;
};

/// An ordered list of effects on a `dim`-dimensional system. Only the shape is
/// enforced on construction; use validate_povm for positivity/completeness.
class Povm {
 public:
  Povm(Eigen::Index dim, std::vector<CMatrix> effects);

  Eigen::Index dim() const { return dim_; }
  std::size_t size() const { return effects_.size(); }
  const std::vector<CMatrix>& effects() const { return effects_; }
  const CMatrix& operator[](std::size_t i) const { return effects_[i]; }

  /// {|j><j|} on a d-dimensional system.
  static Povm computational(Eigen::Index dim);

 private:
  Eigen::Index dim_;
  std::vector<CMatrix> effects_;
};

struct ValidationReport {
  std::vector<double> psd_margin;  // smallest eigenvalue of each effect
  double completeness_residual = 0.0;
  Eigen::Index residual_row = 0;
  Eigen::Index residual_col = 0;
  bool passed = false;
  std::string message;
};

ValidationReport validate_povm(const Povm& p);

/// Σ_k α_k |φ_k>, with its 2-norm and normalized direction.
struct SuperpositionSpec {
  std::vector<Complex> coefficients;
  std::vector<PureState> states;
  CVector omega;            // unnormalized
  double norm = 0.0;        // sqrt(<Ω|Ω>)
  CVector omega_normalized;

  double norm_sq() const { return norm * norm; }
  PureState normalized_state() const { return PureState(omega_normalized); }
};

SuperpositionSpec superpose(std::span<const Complex> coeffs, std::span<const PureState> states);

// Gates. Qubit 0 is the most significant bit of a basis label.
CMatrix ry(double angle);
CMatrix cnot(int control, int target, int n_qubits);
CMatrix kron_chain(std::span<const CMatrix> gates);

/// max |U†U - I|.
double unitarity_defect(const CMatrix& u);

/// CNOT · (Ry(θ1) ⊗ Ry(θ2)).
CMatrix dilation_unitary_1q(const std::array<double, 2>& theta);
/// CNOT_{2,3} · CNOT_{1,2} · CNOT_{0,1} · (Ry(γ1) ⊗ … ⊗ Ry(γ4)).
CMatrix dilation_unitary_2q(const std::array<double, 4>& gamma);

/// POVM realized by applying U to ρ ⊗ |0…0><0…0| and measuring every qubit in
/// the computational basis. Outcome i is the binary label of the measured
/// string; the system occupies the leading `sys_qubits` qubits.
Povm povm_from_dilation(const CMatrix& u, int sys_qubits, int anc_qubits);

/// <i| U (ρ ⊗ |0…0><0…0|) U† |i>, ancilla size inferred from the dimensions.
double naimark_outcome_prob(const CMatrix& u, const DensityMatrix& state, Eigen::Index outcome);

}  // namespace povmcoh
