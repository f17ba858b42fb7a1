#pragma once

#include <complex>
#include <functional>

#include <Eigen/Dense>

namespace povmcoh {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kClampEps = 1e-12;
// Positive eigenvalues at or below this (relative to max(1, |λ|_max)) are
// indistinguishable from eigensolver roundoff and are treated as zero.
inline constexpr double kRoundoffFloor = 1e-14;

struct EigenDecomposition {
  RVector values;   // descending
  CMatrix vectors;  // column k belongs to values[k]
};

/// max_ij |m_ij - conj(m_ji)|; +inf for non-square input.
double hermitian_defect(const CMatrix& m);
bool is_hermitian(const CMatrix& m, double tol = kHermitianTol);

/// Eigendecomposition of a Hermitian matrix with eigenvalues sorted in
/// descending order. Throws NotHermitian / NoConvergence.
EigenDecomposition hermitian_eig(const CMatrix& m);

/// V f(Λ) V† for a positive semidefinite m.
///
/// Eigenvalues in [-clamp_eps, 0) and in (0, kRoundoffFloor] are set to zero
/// before f is applied, so fractional powers such as x^0.3 do not amplify the
/// roundoff of rank-deficient inputs. Anything below -clamp_eps is NotPsd.
CMatrix psd_func(const CMatrix& m, const std::function<double(double)>& f,
                 double clamp_eps = kClampEps);

/// Sum of singular values. Rectangular input is allowed.
double trace_norm(const CMatrix& m);

/// -Σ λ log2 λ over the positive spectrum, 0 log 0 = 0.
double von_neumann_entropy(const CMatrix& m, double clamp_eps = kClampEps);

double binary_entropy(double x);

/// Tsallis q-logarithm (x^{1-λ} - 1) / (1 - λ).
double ln_lambda(double x, double lambda);

CMatrix kron(const CMatrix& a, const CMatrix& b);

}  // namespace povmcoh
