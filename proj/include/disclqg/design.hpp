#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "disclqg/solvers.hpp"
#include "disclqg/types.hpp"

namespace disclqg::design {

/// Analytic cost attached to a design. finite_total is the value of the
/// discounted integral J; steady_rate is lim dJ(T)/dT; infinite marks the
/// cases where the total diverges and no rate is reported.
struct CostValue {
  enum class Kind { finite_total, steady_rate, infinite };
  Kind kind = Kind::infinite;
  std::optional<double> value;  // absent iff kind == infinite

  static CostValue total(double v) { return {Kind::finite_total, v}; }
  static CostValue rate(double v) { return {Kind::steady_rate, v}; }
  static CostValue diverged() { return {Kind::infinite, std::nullopt}; }
};

struct DesignResult {
  GainPair gains;
  std::optional<Matrix> X;  // controller Riccati solution (X or X_alpha)
  std::optional<Matrix> E;  // filter Riccati solution (E or E_alpha)
  std::optional<CostValue> cost;  // absent for observer-only designs
  // Both evaluations of the dual cost formulas, when the design has them.
  std::optional<std::pair<double, double>> cost_dual_forms;
  std::optional<solvers::SolveDiagnostics> controller_diag;
  std::optional<solvers::SolveDiagnostics> filter_diag;
};

/// Optimal full-state feedback for the non-discounted cost (alpha must be 0):
/// F = R^{-1} B^T X. Cost is tr(X Sigma0) when V = 0, otherwise the
/// steady-state rate tr(X V).
DesignResult lqr(const LinearSystem& sys, const InitialBelief& belief,
                 const CostSpec& cost);

/// Optimal full-state feedback for the discounted cost: the Riccati equation
/// is solved on A + alpha I. For alpha < 0 the total cost is
/// tr(X_alpha (Sigma0 - V / (2 alpha))); for alpha > 0 the total diverges but
/// the gain still enforces the prescribed degree of stability.
DesignResult lqr_discounted(const LinearSystem& sys,
                            const InitialBelief& belief, const CostSpec& cost);

/// Kalman-Bucy observer gain K = E C^T W^{-1}; observer-only result (no F,
/// no cost).
DesignResult kalman(const LinearSystem& sys);

/// Output-feedback design for the non-discounted cost (alpha must be 0):
/// separation principle, F from lqr and K from kalman. The steady-state cost
/// rate is evaluated through both dual trace formulas, which must agree.
DesignResult lqg(const LinearSystem& sys, const CostSpec& cost);

/// Output-feedback design for the discounted cost. The controller Riccati
/// equation runs on A + alpha I; the filter Riccati equation uses the
/// effective noise V - 2 alpha (Sigma0 - mu0 mu0^T), which must be PSD.
/// For alpha < 0 both dual forms of the total cost are evaluated and
/// cross-checked; for alpha >= 0 the total diverges.
DesignResult lqg_discounted(const LinearSystem& sys,
                            const InitialBelief& belief, const CostSpec& cost);

/// Eigenvalues of the joint closed loop: the blocks A - B F and A - K C
/// together when both gains are present, otherwise the single available
/// block. Sorted by real part, then imaginary part.
std::vector<std::complex<double>> closed_loop_eigenvalues(
    const LinearSystem& sys, const GainPair& gains);

// Cost evaluators, shared with the verification front-end.

/// Non-discounted full-state cost for a given controller Riccati solution.
CostValue cost_full_state(const LinearSystem& sys, const InitialBelief& belief,
                          const Matrix& X);

/// Discounted full-state cost tr(X_alpha (Sigma0 - V / (2 alpha))).
CostValue cost_full_state_discounted(const LinearSystem& sys,
                                     const InitialBelief& belief, double alpha,
                                     const Matrix& X_alpha);

/// Both lines of the non-discounted output-feedback rate:
///   tr(X K W K^T + E Q)  and  tr(X V + E F^T R F).
/// Returns (first line as the CostValue, {line1, line2}); throws
/// InternalConsistency when they disagree beyond 1e-8 relative.
std::pair<CostValue, std::pair<double, double>> cost_rate_output_feedback(
    const LinearSystem& sys, const CostSpec& cost, const Matrix& X,
    const Matrix& E, const Matrix& F, const Matrix& K);

/// Both lines of the discounted output-feedback total (alpha < 0):
///   tr(X K W K^T + E Q) / (-2 alpha) + mu0^T X mu0
///   tr(X V + E F^T R F) / (-2 alpha) + tr(X Sigma0).
std::pair<CostValue, std::pair<double, double>>
cost_output_feedback_discounted(const LinearSystem& sys,
                                const InitialBelief& belief,
                                const CostSpec& cost, const Matrix& X,
                                const Matrix& E, const Matrix& F,
                                const Matrix& K);

}  // namespace disclqg::design
