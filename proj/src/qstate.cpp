#include "povmcoh/qstate.hpp"

#include <cmath>
#include <sstream>

#include "povmcoh/error.hpp"

namespace povmcoh {

PureState::PureState(CVector amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.size() == 0) throw Error(ErrorCode::InvalidState, "empty state vector");
  const double n = amps_.norm();
  if (std::abs(n - 1.0) > kNormTol) {
    std::ostringstream msg;
    msg << "state norm " << n << " deviates from 1";
    throw Error(ErrorCode::NotNormalized, msg.str());
  }
}

PureState PureState::normalize(const CVector& raw) {
  const double n = raw.norm();
  if (!(n > kNormTol)) throw Error(ErrorCode::InvalidState, "cannot normalize a null vector");
  return PureState(raw / n);
}

PureState PureState::basis(Eigen::Index dim, Eigen::Index index) {
  if (index < 0 || index >= dim) throw Error(ErrorCode::IndexOutOfRange, "basis index out of range");
  CVector v = CVector::Zero(dim);
  v[index] = 1.0;
  return PureState(std::move(v));
}

DensityMatrix::DensityMatrix(CMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0) {
    throw Error(ErrorCode::InvalidState, "density matrix must be square and non-empty");
  }
  if (!is_hermitian(m_)) throw Error(ErrorCode::NotHermitian, "density matrix is not Hermitian");
  const double tr = m_.trace().real();
  if (std::abs(tr - 1.0) > kNormTol) {
    throw Error(ErrorCode::InvalidState, "density matrix trace " + std::to_string(tr) + " != 1");
  }
  const double smallest = hermitian_eig(m_).values.minCoeff();
  if (smallest < -kClampEps) {
    throw Error(ErrorCode::NotPsd, "density matrix eigenvalue " + std::to_string(smallest));
  }
}

Povm::Povm(Eigen::Index dim, std::vector<CMatrix> effects) : dim_(dim), effects_(std::move(effects)) {
  if (dim_ <= 0) throw Error(ErrorCode::DimensionMismatch, "POVM dimension must be positive");
  if (effects_.empty()) throw Error(ErrorCode::DimensionMismatch, "POVM needs at least one effect");
  for (const auto& e : effects_) {
    if (e.rows() != dim_ || e.cols() != dim_) {
      throw Error(ErrorCode::DimensionMismatch, "effect shape does not match POVM dimension");
    }
  }
}

Povm Povm::computational(Eigen::Index dim) {
  std::vector<CMatrix> effects;
  effects.reserve(static_cast<std::size_t>(dim));
  for (Eigen::Index j = 0; j < dim; ++j) effects.push_back(PureState::basis(dim, j).projector());
  return Povm(dim, std::move(effects));
}

ValidationReport validate_povm(const Povm& p) {
  ValidationReport report;
  bool psd_ok = true;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (!is_hermitian(p[j])) {
      report.psd_margin.push_back(-std::numeric_limits<double>::infinity());
      psd_ok = false;
      report.message += "effect " + std::to_string(j) + " not Hermitian; ";
      continue;
    }
    const double margin = hermitian_eig(p[j]).values.minCoeff();
    report.psd_margin.push_back(margin);
    if (margin < -kClampEps) {
      psd_ok = false;
      report.message += "effect " + std::to_string(j) + " has negative eigenvalue; ";
    }
  }
  CMatrix total = CMatrix::Zero(p.dim(), p.dim());
  for (const auto& e : p.effects()) total += e;
  total -= CMatrix::Identity(p.dim(), p.dim());
  for (Eigen::Index i = 0; i < total.rows(); ++i) {
    for (Eigen::Index j = 0; j < total.cols(); ++j) {
      if (std::abs(total(i, j)) > report.completeness_residual) {
        report.completeness_residual = std::abs(total(i, j));
        report.residual_row = i;
        report.residual_col = j;
      }
    }
  }
  const bool complete = report.completeness_residual <= kCompletenessTol;
  if (!complete) {
    std::ostringstream msg;
    msg << "completeness residual " << report.completeness_residual << " at (" << report.residual_row << ","
        << report.residual_col << ")";
    report.message += msg.str();
  }
  report.passed = psd_ok && complete;
  return report;
}

SuperpositionSpec superpose(std::span<const Complex> coeffs, std::span<const PureState> states) {
  if (coeffs.size() != states.size() || states.empty()) {
    throw Error(ErrorCode::DimensionMismatch, "need one coefficient per constituent state");
  }
  const Eigen::Index dim = states.front().dim();
  SuperpositionSpec spec;
  spec.omega = CVector::Zero(dim);
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (states[k].dim() != dim) throw Error(ErrorCode::DimensionMismatch, "constituent dimensions differ");
    spec.omega += coeffs[k] * states[k].amplitudes();
  }
  spec.norm = spec.omega.norm();
  if (!(spec.norm > kNormTol)) {
    throw Error(ErrorCode::NullSuperposition, "superposition has norm " + std::to_string(spec.norm));
  }
  spec.coefficients.assign(coeffs.begin(), coeffs.end());
  spec.states.assign(states.begin(), states.end());
  spec.omega_normalized = spec.omega / spec.norm;
  return spec;
}

CMatrix ry(double angle) {
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  CMatrix m(2, 2);
  m << c, -s, s, c;
  return m;
}

CMatrix cnot(int control, int target, int n_qubits) {
  if (n_qubits <= 0 || control < 0 || target < 0 || control >= n_qubits || target >= n_qubits ||
      control == target) {
    throw Error(ErrorCode::IndexOutOfRange, "cnot(" + std::to_string(control) + "," + std::to_string(target) +
                                                ") invalid on " + std::to_string(n_qubits) + " qubits");
  }
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  const Eigen::Index cmask = Eigen::Index{1} << (n_qubits - 1 - control);
  const Eigen::Index tmask = Eigen::Index{1} << (n_qubits - 1 - target);
  CMatrix m = CMatrix::Zero(dim, dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    const Eigen::Index out = (b & cmask) ? (b ^ tmask) : b;
    m(out, b) = 1.0;
  }
  return m;
}

CMatrix kron_chain(std::span<const CMatrix> gates) {
  CMatrix out = CMatrix::Identity(1, 1);
  for (const auto& g : gates) {
    if (g.rows() != g.cols()) throw Error(ErrorCode::DimensionMismatch, "kron_chain expects square factors");
    out = kron(out, g);
  }
  return out;
}

double unitarity_defect(const CMatrix& u) {
  if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
  return (u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

CMatrix dilation_unitary_1q(const std::array<double, 2>& theta) {
  const std::array<CMatrix, 2> layer{ry(theta[0]), ry(theta[1])};
  return cnot(0, 1, 2) * kron_chain(layer);
}

CMatrix dilation_unitary_2q(const std::array<double, 4>& gamma) {
  const std::array<CMatrix, 4> layer{ry(gamma[0]), ry(gamma[1]), ry(gamma[2]), ry(gamma[3])};
  CMatrix v = kron_chain(layer);
  for (int q = 0; q < 3; ++q) v = cnot(q, q + 1, 4) * v;
  return v;
}

Povm povm_from_dilation(const CMatrix& u, int sys_qubits, int anc_qubits) {
  if (sys_qubits <= 0 || anc_qubits < 0) throw Error(ErrorCode::DimensionMismatch, "invalid qubit counts");
  const Eigen::Index d_sys = Eigen::Index{1} << sys_qubits;
  const Eigen::Index d_anc = Eigen::Index{1} << anc_qubits;
  if (u.rows() != d_sys * d_anc || u.cols() != d_sys * d_anc) {
    throw Error(ErrorCode::DimensionMismatch, "unitary does not act on sys+anc qubits");
  }
  const double defect = unitarity_defect(u);
  if (defect > kUnitaryTol) {
    throw Error(ErrorCode::NotUnitary, "unitarity defect " + std::to_string(defect));
  }
  // Row i of U restricted to the columns |k>|0…0> is the measurement operator
  // A_i = <i|U|·,0>; the effect is A_i† A_i.
  std::vector<CMatrix> effects;
  effects.reserve(static_cast<std::size_t>(u.rows()));
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    CVector a(d_sys);
    for (Eigen::Index k = 0; k < d_sys; ++k) a[k] = std::conj(u(i, k * d_anc));
    effects.push_back(a * a.adjoint());
  }
  return Povm(d_sys, std::move(effects));
}

double naimark_outcome_prob(const CMatrix& u, const DensityMatrix& state, Eigen::Index outcome) {
  const Eigen::Index d_sys = state.dim();
  if (u.rows() != u.cols() || u.rows() % d_sys != 0) {
    throw Error(ErrorCode::DimensionMismatch, "unitary dimension is not a multiple of the state dimension");
  }
  if (outcome < 0 || outcome >= u.rows()) throw Error(ErrorCode::IndexOutOfRange, "outcome index out of range");
  const Eigen::Index d_anc = u.rows() / d_sys;
  CMatrix anc0 = CMatrix::Zero(d_anc, d_anc);
  anc0(0, 0) = 1.0;
  const CMatrix joint = kron(state.matrix(), anc0);
  const CVector row = u.row(outcome).transpose();
  // <i|U X U†|i> = row^T X conj(row)
  return (row.transpose() * joint * row.conjugate())(0, 0).real();
}

}  // namespace povmcoh
