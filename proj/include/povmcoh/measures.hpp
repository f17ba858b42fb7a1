#pragma once

#include <vector>

#include "povmcoh/qstate.hpp"

namespace povmcoh {

/// p_j = <φ|E_j|φ>; weights at or below kRoundoffFloor are reported as 0.
std::vector<double> outcome_weights(const PureState& phi, const Povm& e);
/// p_j = Tr(E_j ρ), floored the same way.
std::vector<double> outcome_weights(const DensityMatrix& rho, const Povm& e);

/// Throws LambdaOutOfRange unless λ ∈ (0,1) ∪ (1,2] with |λ-1| >= 1e-6.
void check_tsallis_lambda(double lambda);

// Relative entropy of POVM-based coherence, Σ_j S(√E_j ρ √E_j) - S(ρ).
double c_r(const DensityMatrix& rho, const Povm& e);
double c_r_pure(const PureState& phi, const Povm& e);

// l1-norm of POVM-based coherence, Σ_{i≠j} ||√E_i ρ √E_j||_tr over ordered pairs.
double c_l1(const DensityMatrix& rho, const Povm& e);
double c_l1_pure(const PureState& phi, const Povm& e);

// Robustness; pure states only, where it coincides with the l1 measure.
double c_rob_pure(const PureState& phi, const Povm& e);

// Tsallis relative entropy of coherence,
// (Σ_j Tr[(√E_j ρ^λ √E_j)^{1/λ}] - 1) / (λ - 1).
double c_tsallis(const DensityMatrix& rho, const Povm& e, double lambda);
double c_tsallis_pure(const PureState& phi, const Povm& e, double lambda);

/// Σ_{i≠j} ||√E_i|φ><ψ|√E_j||_tr = Σ_{i≠j} ||√E_i φ|| ||√E_j ψ||.
double cross_l1(const PureState& phi, const PureState& psi, const Povm& e);

struct ComplexTraceReport {
  Complex trace_sum;        // Σ_j Tr[(√E_j (|φ><ψ|)^λ √E_j)^{1/λ}]
  Complex value;            // (trace_sum - 1) / (λ - 1)
  double imag_magnitude = 0.0;
};

/// Cross-state Tsallis quantity, with the rank-one power convention
/// (|u><v|)^s := <v|u>^{s-1} |u><v| on the principal branch. Diagnostic only.
ComplexTraceReport cross_tsallis_diag(const PureState& phi, const PureState& psi, const Povm& e,
                                      double lambda);

}  // namespace povmcoh
