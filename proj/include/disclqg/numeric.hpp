#pragma once

#include <Eigen/Core>

#include "disclqg/types.hpp"

namespace disclqg {

// Shared numerical policy. Symmetry and rank tests are relative; Hurwitz
// tests treat marginal eigenvalues as unstable.
inline constexpr double kSymRelTol = 1e-10;
inline constexpr double kRankRelTol = 1e-10;
inline constexpr double kHurwitzMargin = 1e-10;
inline constexpr double kResidualRelTol = 1e-9;
inline constexpr double kSolutionPsdTol = 1e-9;
inline constexpr double kDualFormRelTol = 1e-8;
inline constexpr double kBlockAgreementRelTol = 1e-10;

/// True when ||M - M^T||_F <= kSymRelTol * max(1, ||M||_F).
bool is_symmetric_within_tol(const Matrix& M);

/// (M + M^T) / 2.
Matrix symmetrize(const Matrix& M);

/// Smallest eigenvalue of the symmetrized matrix.
double min_symmetric_eigenvalue(const Matrix& M);

/// PSD / PD tests on the symmetrized matrix, with the relative tolerance
/// kSymRelTol * max(1, ||M||_F).
bool is_psd_within_tol(const Matrix& M);
bool is_pd_within_tol(const Matrix& M);

/// Largest real part over the eigenvalues of A.
double spectral_abscissa(const Matrix& A);

/// True when every eigenvalue satisfies Re(lambda) < -kHurwitzMargin.
bool is_hurwitz(const Matrix& A);

}  // namespace disclqg
