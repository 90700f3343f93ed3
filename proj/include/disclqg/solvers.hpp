#pragma once

#include <utility>

#include "disclqg/types.hpp"

namespace disclqg::solvers {

struct SolveDiagnostics {
  double residual_norm = 0.0;      // Frobenius norm of the equation residual
  double relative_residual = 0.0;  // residual_norm / max(1, ||equation data||_F)
  int iterations = 0;              // refinement steps taken (0 = direct)
  double spectral_abscissa = 0.0;  // of the (closed-loop) dynamics matrix
};

/// Solves Acl^T X + X Acl + Qrhs = 0 for symmetric X.
/// Requires Acl Hurwitz (throws NotHurwitz otherwise) and Qrhs symmetric.
/// Guarantees a relative residual <= 1e-9.
std::pair<Matrix, SolveDiagnostics> solve_lyapunov(const Matrix& Acl,
                                                   const Matrix& Qrhs);

/// Solves the Sylvester equation A1 X + X A2 + C = 0. The spectra of A1 and
/// -A2 must be disjoint. Dense vectorized solve for small problems, complex
/// Schur (Bartels-Stewart style) reduction above kDenseSylvesterLimit.
std::pair<Matrix, SolveDiagnostics> solve_sylvester(const Matrix& A1,
                                                    const Matrix& A2,
                                                    const Matrix& C);

inline constexpr int kDenseSylvesterLimit = 64;

/// Stabilizing solution of the controller Riccati equation
///   Ain^T X + X Ain + Q - X B R^{-1} B^T X = 0.
/// Method: complex Schur form of the 2n x 2n Hamiltonian with the stable
/// invariant subspace reordered to the front, followed by up to five
/// Newton-Kleinman refinement steps. X is symmetric PSD and
/// Ain - B R^{-1} B^T X is Hurwitz on return.
std::pair<Matrix, SolveDiagnostics> solve_care(const Matrix& Ain,
                                               const Matrix& B,
                                               const Matrix& Q,
                                               const Matrix& R);

/// Stabilizing solution of the filter Riccati equation
///   Ain E + E Ain^T + Vin - E C^T W^{-1} C E = 0.
/// Same machinery as solve_care in the dual orientation; Ain - E C^T W^{-1} C
/// is Hurwitz on return.
std::pair<Matrix, SolveDiagnostics> solve_filter_care(const Matrix& Ain,
                                                      const Matrix& C,
                                                      const Matrix& Vin,
                                                      const Matrix& W);

namespace detail {
// Exposed for cross-checking the two Sylvester code paths in tests.
Matrix solve_sylvester_dense(const Matrix& A1, const Matrix& A2,
                             const Matrix& C);
Matrix solve_sylvester_schur(const Matrix& A1, const Matrix& A2,
                             const Matrix& C);
}  // namespace detail

}  // namespace disclqg::solvers
