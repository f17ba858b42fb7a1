#include "povmcoh/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "povmcoh/error.hpp"

namespace povmcoh {

std::string_view to_string(BoundStatus s) {
  switch (s) {
    case BoundStatus::Ok: return "ok";
    case BoundStatus::NoConstraintRoot: return "no-constraint-root";
    case BoundStatus::ZeroOverlap: return "zero-overlap";
  }
  return "unknown";
}

namespace {

constexpr double kBoundarySlack = 1e-14;  // tolerated excess of √a + √b over 1
constexpr double kOverlapTol = 1e-12;

// Constituents with a zero coefficient contribute nothing to Ω and are
// dropped together with their cross terms.
struct Terms {
  std::vector<double> weight;  // |α_k|
  std::vector<const PureState*> state;
};

Terms nonzero_terms(const SuperpositionSpec& spec) {
  Terms t;
  for (std::size_t k = 0; k < spec.coefficients.size(); ++k) {
    const double w = std::abs(spec.coefficients[k]);
    if (w > 0.0) {
      t.weight.push_back(w);
      t.state.push_back(&spec.states[k]);
    }
  }
  return t;
}

double cross_weight(const Terms& t) {
  double s = 0.0;
  for (std::size_t k = 0; k < t.weight.size(); ++k) {
    for (std::size_t kp = 0; kp < t.weight.size(); ++kp) {
      if (k != kp) s += t.weight[k] * t.weight[kp];
    }
  }
  return s;
}

double square_weight(const Terms& t) {
  double s = 0.0;
  for (double w : t.weight) s += w * w;
  return s;
}

void require_two_terms(const SuperpositionSpec& spec) {
  if (spec.states.size() != 2) {
    throw Error(ErrorCode::DimensionMismatch, "relative entropy bounds take exactly two constituent states");
  }
}

// β = 0 (or α = 0) collapses Ω' onto one constituent.
std::optional<double> degenerate_exact(const SuperpositionSpec& spec, const Povm& e) {
  if (std::abs(spec.coefficients[1]) == 0.0) return c_r_pure(spec.states[0], e);
  if (std::abs(spec.coefficients[0]) == 0.0) return c_r_pure(spec.states[1], e);
  return std::nullopt;
}

double pick(Complex z, TraceConvention conv) { return conv == TraceConvention::RealPart ? z.real() : std::abs(z); }

}  // namespace

namespace {

// A constraint root with its complements. μ = a/c is the other root of the
// same quadratic, so μ and 1-μ come from the stable root formulas instead of
// 1 - a/c, which cancels badly when b is tiny.
struct ThetaRoot {
  double c;
  double one_minus_c;
  double mu;
  double one_minus_mu;
};

std::vector<ThetaRoot> theta_roots(double a, double b) {
  std::vector<ThetaRoot> roots;
  if (!(a > 0.0 && b > 0.0)) return roots;
  // Factored discriminant (1+a-b)² - 4a, accurate near the double root.
  const double x = std::sqrt(a);
  const double y = std::sqrt(b);
  const double gap = 1.0 - x - y;
  if (gap < -kBoundarySlack) return roots;
  const double disc = std::max(gap, 0.0) * (1.0 - x + y) * (1.0 + x - y) * (1.0 + x + y);
  const double sq = std::sqrt(disc);
  // Small root from the product of roots (= a); the large one through
  // s = 1 - c, which solves the mirrored equation with a and b swapped.
  const double lo = a / (0.5 * (1.0 + a - b + sq));
  const double s_hi = b / (0.5 * (1.0 + b - a + sq));
  const double hi = 1.0 - s_hi;
  const ThetaRoot candidates[] = {{lo, 1.0 - lo, hi, s_hi}, {hi, s_hi, lo, 1.0 - lo}};
  for (const auto& r : candidates) {
    if (!(r.c > 0.0 && r.c < 1.0 && r.mu > 0.0 && r.mu < 1.0)) continue;
    if (!roots.empty() && std::abs(roots.back().c - r.c) <= 1e-15) continue;
    roots.push_back(r);
  }
  return roots;
}

// Matches a caller-supplied root to the stable representation; anything that
// is not a root is taken at face value.
ThetaRoot resolve_root(double a, double b, double c) {
  for (const auto& r : theta_roots(a, b)) {
    if (std::abs(r.c - c) <= 1e-12 * r.c) return r;
  }
  return {c, 1.0 - c, a / c, 1.0 - a / c};
}

Theorem1Params params_at(double a, double b, double norm_sq, const ThetaRoot& r) {
  Theorem1Params p;
  const double c = r.c;
  const double s = r.one_minus_c;
  p.cos2theta = c;
  p.mu = r.mu;
  p.one_minus_mu = r.one_minus_mu;
  p.nu = s * norm_sq / (s * norm_sq + b * c);
  p.xi = s * norm_sq / (s * norm_sq + a * c);
  p.p1 = (p.one_minus_mu * a + p.mu * b) / (p.mu * p.one_minus_mu * norm_sq);
  p.p2 = (1.0 - p.nu) * a / ((1.0 - p.nu) * norm_sq + p.nu * b);
  p.p3 = (1.0 - p.xi) * b / ((1.0 - p.xi) * norm_sq + p.xi * a);
  return p;
}

}  // namespace

std::vector<double> solve_theta_constraint(double a, double b) {
  std::vector<double> out;
  for (const auto& r : theta_roots(a, b)) out.push_back(r.c);
  return out;
}

Theorem1Params theorem1_params(double a, double b, double norm_sq, double cos2theta) {
  return params_at(a, b, norm_sq, resolve_root(a, b, cos2theta));
}

double eq13_identity_check(double a, double b, double root) {
  const ThetaRoot r = resolve_root(a, b, root);
  return r.mu * r.one_minus_mu / (r.one_minus_mu * a + r.mu * b);
}

BoundResult thm1_upper(const SuperpositionSpec& spec, const Povm& e) {
  require_two_terms(spec);
  BoundResult r;
  if (auto exact = degenerate_exact(spec, e)) {
    r.value = *exact;
    return r;
  }
  const double a = std::norm(spec.coefficients[0]);
  const double b = std::norm(spec.coefficients[1]);
  r.roots = solve_theta_constraint(a, b);
  if (r.roots.empty()) {
    r.status = BoundStatus::NoConstraintRoot;
    return r;
  }
  const double c_phi = c_r_pure(spec.states[0], e);
  const double c_psi = c_r_pure(spec.states[1], e);
  for (const auto& root : theta_roots(a, b)) {
    const auto p = params_at(a, b, spec.norm_sq(), root);
    const double v = p.p1 * (p.mu * c_phi + p.one_minus_mu * c_psi + binary_entropy(p.mu));
    r.value = r.value ? std::min(*r.value, v) : v;
  }
  return r;
}

BoundResult thm1_lower(const SuperpositionSpec& spec, const Povm& e) {
  require_two_terms(spec);
  BoundResult r;
  if (auto exact = degenerate_exact(spec, e)) {
    r.value = *exact;
    return r;
  }
  const double a = std::norm(spec.coefficients[0]);
  const double b = std::norm(spec.coefficients[1]);
  r.roots = solve_theta_constraint(a, b);
  r.value = 0.0;
  if (r.roots.empty()) {
    r.status = BoundStatus::NoConstraintRoot;
    return r;
  }
  const double c_phi = c_r_pure(spec.states[0], e);
  const double c_psi = c_r_pure(spec.states[1], e);
  for (const auto& root : theta_roots(a, b)) {
    const auto p = params_at(a, b, spec.norm_sq(), root);
    const double l1 = p.p2 * c_phi - (1.0 - p.nu) / p.nu * c_psi - binary_entropy(p.nu) / p.nu;
    const double l2 = p.p3 * c_psi - (1.0 - p.xi) / p.xi * c_phi - binary_entropy(p.xi) / p.xi;
    r.value = std::max({*r.value, l1, l2});
  }
  return r;
}

double m_pair(const PureState& phi_k, const PureState& phi_kp, const Povm& e) {
  if (phi_k.dim() != phi_kp.dim()) throw Error(ErrorCode::DimensionMismatch, "m_pair state dimensions differ");
  double s = 0.0;
  for (double p : outcome_weights(phi_k, e)) s += std::sqrt(p);
  return static_cast<double>(e.size() - 1) * s;
}

Thm2Result thm2_bounds(const SuperpositionSpec& spec, const Povm& e) {
  const Terms t = nonzero_terms(spec);
  Thm2Result r;
  double diag = 0.0;
  for (std::size_t k = 0; k < t.weight.size(); ++k) diag += t.weight[k] * t.weight[k] * c_l1_pure(*t.state[k], e);
  double cross = 0.0;
  for (std::size_t k = 0; k < t.weight.size(); ++k) {
    for (std::size_t kp = 0; kp < t.weight.size(); ++kp) {
      if (k == kp) continue;
      const double m = m_pair(*t.state[k], *t.state[kp], e);
      r.pair_constants.push_back(m);
      cross += t.weight[k] * t.weight[kp] * m;
    }
  }
  r.upper = (diag + cross) / spec.norm_sq();
  r.lower = std::max(0.0, (diag - cross) / spec.norm_sq());
  return r;
}

double lemma1_bound(const DensityMatrix& rho, const Povm& e, double lambda) {
  check_tsallis_lambda(lambda);
  if (rho.dim() != e.dim()) throw Error(ErrorCode::DimensionMismatch, "state and POVM dimensions differ");
  const CMatrix rho2 = rho.matrix() * rho.matrix();
  double t = 0.0;
  for (const auto& effect : e.effects()) t += (effect * rho2).trace().real();  // Tr(√E ρ² √E) = Tr(E ρ²)
  const double d = static_cast<double>(e.size());
  return -ln_lambda(std::pow(d * t, -1.0 / lambda), lambda);
}

PairValue x_pair(const PureState& phi, const PureState& psi, const Povm& e, double lambda) {
  check_tsallis_lambda(lambda);
  if (phi.dim() != psi.dim() || phi.dim() != e.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "x_pair dimensions differ");
  }
  const Complex overlap = psi.amplitudes().dot(phi.amplitudes());
  if (std::abs(overlap) <= kOverlapTol) {
    throw Error(ErrorCode::ZeroOverlap, "X diverges for orthogonal constituents");
  }
  // (|φ><ψ|)² = <ψ|φ> |φ><ψ|, so each trace is <ψ|φ><ψ|E_j|φ>.
  Complex sum = 0.0;
  for (const auto& effect : e.effects()) sum += overlap * psi.amplitudes().dot(effect * phi.amplitudes());
  const double d = static_cast<double>(e.size());
  return {std::pow(d * std::abs(sum), -1.0 / lambda), std::abs(sum.imag())};
}

PairValue n_pair(const PureState& phi, const PureState& psi, const Povm& e, double lambda, TraceConvention conv) {
  check_tsallis_lambda(lambda);
  if (lambda <= 1.0) throw Error(ErrorCode::LambdaOutOfRange, "N is defined for lambda in (1,2]");
  if (phi.dim() != psi.dim() || phi.dim() != e.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "n_pair dimensions differ");
  }
  const double inv = 1.0 / lambda;
  Complex sum = 0.0;
  for (const auto& effect : e.effects()) {
    const CMatrix power = psd_func(effect, [inv](double x) { return std::pow(x, inv); });
    sum += psi.amplitudes().dot(power * phi.amplitudes());
  }
  return {(pick(sum, conv) - 1.0) / (lambda - 1.0), std::abs(sum.imag())};
}

BoundResult thm3_upper(const SuperpositionSpec& spec, const Povm& e, double lambda) {
  check_tsallis_lambda(lambda);
  const Terms t = nonzero_terms(spec);
  BoundResult r;
  double diag = 0.0;
  for (std::size_t k = 0; k < t.weight.size(); ++k) {
    diag += t.weight[k] * t.weight[k] * c_tsallis_pure(*t.state[k], e, lambda);
  }
  double cross = 0.0;
  for (std::size_t k = 0; k < t.weight.size(); ++k) {
    for (std::size_t kp = 0; kp < t.weight.size(); ++kp) {
      if (k == kp) continue;
      PairValue x;
      try {
        x = x_pair(*t.state[k], *t.state[kp], e, lambda);
      } catch (const Error& err) {
        if (err.code() != ErrorCode::ZeroOverlap) throw;
        r.status = BoundStatus::ZeroOverlap;
        r.value.reset();
        return r;
      }
      r.pair_constants.push_back(x.value);
      r.imag_discarded = std::max(r.imag_discarded, x.imag_discarded);
      cross += t.weight[k] * t.weight[kp] * ln_lambda(x.value, lambda);
    }
  }
  const double n2 = spec.norm_sq();
  const double slack = square_weight(t) + cross_weight(t) - n2;
  r.value = (diag - cross) / n2 + slack / (n2 * (lambda - 1.0));
  return r;
}

BoundResult thm3_lower(const SuperpositionSpec& spec, const Povm& e, double lambda, TraceConvention conv) {
  check_tsallis_lambda(lambda);
  if (lambda <= 1.0) throw Error(ErrorCode::LambdaOutOfRange, "Tsallis lower bound needs lambda in (1,2]");
  const Terms t = nonzero_terms(spec);
  BoundResult r;
  double diag = 0.0;
  for (std::size_t k = 0; k < t.weight.size(); ++k) {
    diag += t.weight[k] * t.weight[k] * c_tsallis_pure(*t.state[k], e, lambda);
  }
  double cross = 0.0;
  for (std::size_t k = 0; k < t.weight.size(); ++k) {
    for (std::size_t kp = 0; kp < t.weight.size(); ++kp) {
      if (k == kp) continue;
      const PairValue n = n_pair(*t.state[k], *t.state[kp], e, lambda, conv);
      r.pair_constants.push_back(n.value);
      r.imag_discarded = std::max(r.imag_discarded, n.imag_discarded);
      cross += t.weight[k] * t.weight[kp] * n.value;
    }
  }
  const double n2 = spec.norm_sq();
  const double slack = square_weight(t) + cross_weight(t) - n2;
  r.value = std::max(0.0, (diag + cross + slack / (lambda - 1.0)) / n2);
  return r;
}

}  // namespace povmcoh
