#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "povmcoh/measures.hpp"
#include "povmcoh/qstate.hpp"

namespace povmcoh {

enum class BoundStatus {
  Ok,
  NoConstraintRoot,  // |α|²/c + |β|²/(1-c) = 1 has no root c = cos²θ in (0,1)
  ZeroOverlap,       // a pair constant diverges for orthogonal constituents
};

std::string_view to_string(BoundStatus s);

struct BoundResult {
  std::optional<double> value;
  BoundStatus status = BoundStatus::Ok;
  std::vector<double> roots;           // constraint roots used (relative entropy bounds)
  std::vector<double> pair_constants;  // per ordered pair (k, k'), k ≠ k', row-major
  double imag_discarded = 0.0;         // largest imaginary magnitude dropped from a pair constant

  bool applicable() const { return value.has_value(); }
};

enum class TraceConvention { RealPart, Modulus };

/// Real part or modulus of a complex pair constant, plus what was dropped.
struct PairValue {
  double value = 0.0;
  double imag_discarded = 0.0;
};

// ---------------------------------------------------------------------------
// Relative entropy

/// Roots c = cos²θ of c² - c(1 + a - b) + a = 0 in (0,1) with μ = a/c in
/// (0,1), where a = |α|², b = |β|². Empty when √a + √b > 1. Ascending.
std::vector<double> solve_theta_constraint(double a, double b);

struct Theorem1Params {
  double cos2theta = 0.0;
  double mu = 0.0;
  double one_minus_mu = 0.0;  // computed directly, not as 1 - mu
  double nu = 0.0;
  double xi = 0.0;
  double p1 = 0.0;
  double p2 = 0.0;
  double p3 = 0.0;
};

/// Parameters at a root of the constraint. A cos2theta that matches a root
/// returned by solve_theta_constraint is evaluated through the stable form.
Theorem1Params theorem1_params(double a, double b, double norm_sq, double cos2theta);

/// p/||Ω||² with p = ||Ω||²μ(1-μ)/((1-μ)a + μb); equals 1 on a constraint root.
double eq13_identity_check(double a, double b, double root);

/// Upper bound for C_r(Ω') of a two-term superposition; minimum over roots.
BoundResult thm1_upper(const SuperpositionSpec& spec, const Povm& e);
/// max{L1, L2, 0} maximized over roots; 0 without a root.
BoundResult thm1_lower(const SuperpositionSpec& spec, const Povm& e);

// ---------------------------------------------------------------------------
// l1 norm / robustness

/// (d-1) Σ_i ||√E_i|φ_k><φ_k'| ||_tr = (d-1) Σ_i ||√E_i φ_k||.
double m_pair(const PureState& phi_k, const PureState& phi_kp, const Povm& e);

struct Thm2Result {
  double upper = 0.0;
  double lower = 0.0;
  std::vector<double> pair_constants;
};

Thm2Result thm2_bounds(const SuperpositionSpec& spec, const Povm& e);

// ---------------------------------------------------------------------------
// Tsallis

/// -ln_λ((d T)^{-1/λ}) with T = Σ_j Tr(√E_j ρ² √E_j), d the number of effects.
double lemma1_bound(const DensityMatrix& rho, const Povm& e, double lambda);

/// X = (d |Σ_j Tr[√E_j (|φ><ψ|)² √E_j]|)^{-1/λ}. Throws ZeroOverlap.
PairValue x_pair(const PureState& phi, const PureState& psi, const Povm& e, double lambda);

/// N = (Σ_j <ψ|E_j^{1/λ}|φ> - 1)/(λ-1) for λ ∈ (1,2].
PairValue n_pair(const PureState& phi, const PureState& psi, const Povm& e, double lambda,
                 TraceConvention conv = TraceConvention::RealPart);

BoundResult thm3_upper(const SuperpositionSpec& spec, const Povm& e, double lambda);
/// Only defined for λ ∈ (1,2]; throws LambdaOutOfRange otherwise.
BoundResult thm3_lower(const SuperpositionSpec& spec, const Povm& e, double lambda,
                       TraceConvention conv = TraceConvention::RealPart);

}  // namespace povmcoh
