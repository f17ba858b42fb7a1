#include "povmcoh/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "povmcoh/error.hpp"

namespace povmcoh {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NotPsd: return "NotPsd";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::LambdaNearOne: return "LambdaNearOne";
    case ErrorCode::LambdaOutOfRange: return "LambdaOutOfRange";
    case ErrorCode::NonpositiveArgument: return "NonpositiveArgument";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NullSuperposition: return "NullSuperposition";
    case ErrorCode::ZeroOverlap: return "ZeroOverlap";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

double hermitian_defect(const CMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i; j < m.cols(); ++j) {
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return worst;
}

bool is_hermitian(const CMatrix& m, double tol) { return hermitian_defect(m) <= tol; }

EigenDecomposition hermitian_eig(const CMatrix& m) {
  const double defect = hermitian_defect(m);
  if (!(defect <= kHermitianTol)) {
    std::ostringstream msg;
    msg << "matrix " << m.rows() << "x" << m.cols() << " has hermiticity defect " << defect;
    throw Error(ErrorCode::NotHermitian, msg.str());
  }
  // Solve on the exactly-Hermitian part so the residual anti-Hermitian noise
  // cannot leak into the eigenvectors.
  const CMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NoConvergence, "self-adjoint eigensolver did not converge");
  }
  // Eigen returns ascending order; flip to descending.
  const Eigen::Index n = sym.rows();
  EigenDecomposition out{RVector(n), CMatrix(n, n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values[k] = solver.eigenvalues()[n - 1 - k];
    out.vectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  }
  return out;
}

namespace {

RVector clamp_spectrum(const RVector& values, double clamp_eps) {
  RVector clamped = values;
  const double floor = kRoundoffFloor * std::max(1.0, clamped.cwiseAbs().maxCoeff());
  for (Eigen::Index k = 0; k < clamped.size(); ++k) {
    if (clamped[k] < -clamp_eps) {
      std::ostringstream msg;
      msg << "eigenvalue " << clamped[k] << " below -" << clamp_eps;
      throw Error(ErrorCode::NotPsd, msg.str());
    }
    if (clamped[k] < 0.0 || clamped[k] <= floor) clamped[k] = 0.0;
  }
  return clamped;
}

}  // namespace

CMatrix psd_func(const CMatrix& m, const std::function<double(double)>& f, double clamp_eps) {
  const auto eig = hermitian_eig(m);
  const RVector lam = clamp_spectrum(eig.values, clamp_eps);
  RVector mapped(lam.size());
  for (Eigen::Index k = 0; k < lam.size(); ++k) mapped[k] = f(lam[k]);
  return eig.vectors * mapped.asDiagonal() * eig.vectors.adjoint();
}

double trace_norm(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues().sum();
}

double von_neumann_entropy(const CMatrix& m, double clamp_eps) {
  const RVector lam = clamp_spectrum(hermitian_eig(m).values, clamp_eps);
  double s = 0.0;
  for (Eigen::Index k = 0; k < lam.size(); ++k) {
    if (lam[k] > 0.0) s -= lam[k] * std::log2(lam[k]);
  }
  return s;
}

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw Error(ErrorCode::OutOfRange, "binary_entropy argument " + std::to_string(x) + " not in [0,1]");
  }
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double ln_lambda(double x, double lambda) {
  if (std::abs(lambda - 1.0) < 1e-6) {
    throw Error(ErrorCode::LambdaNearOne, "ln_lambda needs |lambda - 1| >= 1e-6, got " + std::to_string(lambda));
  }
  if (!(x > 0.0)) {
    throw Error(ErrorCode::NonpositiveArgument, "ln_lambda argument must be positive, got " + std::to_string(x));
  }
  return (std::pow(x, 1.0 - lambda) - 1.0) / (1.0 - lambda);
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace povmcoh
