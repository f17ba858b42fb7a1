#include "povmcoh/measures.hpp"

#include <algorithm>
#include <cmath>

#include "povmcoh/error.hpp"

namespace povmcoh {

namespace {

void check_dims(Eigen::Index state_dim, const Povm& e) {
  if (state_dim != e.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "state dimension " + std::to_string(state_dim) +
                                                  " vs POVM dimension " + std::to_string(e.dim()));
  }
}

// Same roundoff treatment psd_func applies to spectra.
double floor_weight(double p) { return p <= kRoundoffFloor ? 0.0 : p; }

CMatrix hermitian_part(const CMatrix& m) { return 0.5 * (m + m.adjoint()); }

std::vector<CMatrix> effect_roots(const Povm& e) {
  std::vector<CMatrix> roots;
  roots.reserve(e.size());
  for (const auto& effect : e.effects()) {
    roots.push_back(psd_func(effect, [](double x) { return std::sqrt(x); }));
  }
  return roots;
}

double entropy_of_weights(const std::vector<double>& p) {
  double s = 0.0;
  for (double pj : p) {
    if (pj > 0.0) s -= pj * std::log2(pj);
  }
  return s;
}

}  // namespace

std::vector<double> outcome_weights(const PureState& phi, const Povm& e) {
  check_dims(phi.dim(), e);
  std::vector<double> p;
  p.reserve(e.size());
  for (const auto& effect : e.effects()) {
    p.push_back(floor_weight(phi.amplitudes().dot(effect * phi.amplitudes()).real()));
  }
  return p;
}

std::vector<double> outcome_weights(const DensityMatrix& rho, const Povm& e) {
  check_dims(rho.dim(), e);
  std::vector<double> p;
  p.reserve(e.size());
  for (const auto& effect : e.effects()) p.push_back(floor_weight((effect * rho.matrix()).trace().real()));
  return p;
}

void check_tsallis_lambda(double lambda) {
  if (!(lambda > 0.0 && lambda <= 2.0) || std::abs(lambda - 1.0) < 1e-6) {
    throw Error(ErrorCode::LambdaOutOfRange, "lambda " + std::to_string(lambda) + " not in (0,1) U (1,2]");
  }
}

double c_r(const DensityMatrix& rho, const Povm& e) {
  check_dims(rho.dim(), e);
  double total = 0.0;
  for (const auto& root : effect_roots(e)) {
    total += von_neumann_entropy(hermitian_part(root * rho.matrix() * root));
  }
  return total - von_neumann_entropy(rho.matrix());
}

double c_r_pure(const PureState& phi, const Povm& e) {
  // √E_j|φ><φ|√E_j is rank one with sole nonzero eigenvalue p_j.
  return entropy_of_weights(outcome_weights(phi, e));
}

double c_l1(const DensityMatrix& rho, const Povm& e) {
  check_dims(rho.dim(), e);
  const auto roots = effect_roots(e);
  double total = 0.0;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const CMatrix left = roots[i] * rho.matrix();
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (i != j) total += trace_norm(left * roots[j]);
    }
  }
  return total;
}

double c_l1_pure(const PureState& phi, const Povm& e) {
  const auto p = outcome_weights(phi, e);
  double root_sum = 0.0;
  double sum = 0.0;
  for (double pj : p) {
    root_sum += std::sqrt(pj);
    sum += pj;
  }
  return root_sum * root_sum - sum;
}

double c_rob_pure(const PureState& phi, const Povm& e) { return c_l1_pure(phi, e); }

double c_tsallis(const DensityMatrix& rho, const Povm& e, double lambda) {
  check_tsallis_lambda(lambda);
  check_dims(rho.dim(), e);
  const CMatrix rho_pow = psd_func(rho.matrix(), [lambda](double x) { return std::pow(x, lambda); });
  const double inv = 1.0 / lambda;
  double total = 0.0;
  for (const auto& root : effect_roots(e)) {
    const CMatrix inner = hermitian_part(root * rho_pow * root);
    total += psd_func(inner, [inv](double x) { return std::pow(x, inv); }).trace().real();
  }
  return (total - 1.0) / (lambda - 1.0);
}

double c_tsallis_pure(const PureState& phi, const Povm& e, double lambda) {
  check_tsallis_lambda(lambda);
  double total = 0.0;
  for (double pj : outcome_weights(phi, e)) total += std::pow(pj, 1.0 / lambda);
  return (total - 1.0) / (lambda - 1.0);
}

double cross_l1(const PureState& phi, const PureState& psi, const Povm& e) {
  if (phi.dim() != psi.dim()) throw Error(ErrorCode::DimensionMismatch, "cross_l1 state dimensions differ");
  const auto p = outcome_weights(phi, e);
  const auto q = outcome_weights(psi, e);
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (i != j) total += std::sqrt(p[i]) * std::sqrt(q[j]);
    }
  }
  return total;
}

ComplexTraceReport cross_tsallis_diag(const PureState& phi, const PureState& psi, const Povm& e,
                                      double lambda) {
  check_tsallis_lambda(lambda);
  if (phi.dim() != psi.dim()) throw Error(ErrorCode::DimensionMismatch, "state dimensions differ");
  check_dims(phi.dim(), e);
  const Complex overlap = psi.amplitudes().dot(phi.amplitudes());  // <ψ|φ>
  if (std::abs(overlap) <= 1e-12 && lambda < 1.0) {
    throw Error(ErrorCode::ZeroOverlap, "(|φ><ψ|)^λ diverges for orthogonal states and λ < 1");
  }
  // (|φ><ψ|)^λ = c |φ><ψ| with c = <ψ|φ>^{λ-1}; then √E_j c|φ><ψ| √E_j is
  // rank one with trace c<ψ|E_j|φ>, so its 1/λ power has trace (c<ψ|E_j|φ>)^{1/λ}.
  const Complex c = std::abs(overlap) <= 1e-12 ? Complex(0.0) : std::pow(overlap, lambda - 1.0);
  ComplexTraceReport report{};
  for (const auto& effect : e.effects()) {
    const Complex inner = c * psi.amplitudes().dot(effect * phi.amplitudes());
    if (std::abs(inner) > 0.0) report.trace_sum += std::pow(inner, 1.0 / lambda);
  }
  report.value = (report.trace_sum - 1.0) / (lambda - 1.0);
  report.imag_magnitude = std::abs(report.trace_sum.imag());
  return report;
}

}  // namespace povmcoh
