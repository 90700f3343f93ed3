#pragma once

#include "disclqg/types.hpp"

namespace disclqg::oracle {

/// Which pair of signals spans the joint closed-loop state.
/// state_error:    (x, e)    with e = xhat - x; the primary analysis basis.
/// estimate_error: (xhat, e); alternative basis used to validate the
///                 mu0^T X mu0 form of the discounted cost.
enum class JointBasis { state_error, estimate_error };

/// The 2n-dimensional closed loop driving the exact cost evaluation.
struct JointSystem {
  Matrix Atilde;       // block upper-triangular closed-loop dynamics
  Matrix Vtilde;       // joint noise intensity, symmetric PSD
  Matrix Qtilde;       // joint cost weight, symmetric PSD
  Vector mu_tilde0;    // E[xtilde_0]
  Matrix Sigma_tilde0; // E[xtilde_0 xtilde_0^T]
};

struct JointCostBreakdown {
  double total = 0.0;     // exact expected discounted cost
  double J11 = 0.0;       // state-block contribution
  double J22 = 0.0;       // error-block contribution
  double X12_norm = 0.0;  // ||X12||_F of the block Lyapunov solution
};

struct StationarityReport {
  double max_grad_F = 0.0;  // max |dJ/dF_ij| by central differences
  double max_grad_K = 0.0;  // max |dJ/dK_ij|
  double step_F = 0.0;
  double step_K = 0.0;
};

/// Assembles the joint closed-loop system for a full gain pair.
JointSystem build_joint(const LinearSystem& sys, const InitialBelief& belief,
                        const GainPair& gains,
                        JointBasis basis = JointBasis::state_error);

/// Exact expected discounted cost tr(Xt (Sigma_tilde0 - Vtilde / (2 alpha)))
/// of any joint system, with Xt from the shifted Lyapunov equation. Requires
/// alpha < 0 and Atilde + alpha I Hurwitz.
double discounted_quadratic_cost(const JointSystem& joint, double alpha);

/// Exact expected discounted cost for an ARBITRARY gain pair, evaluated two
/// ways: on the full 2n x 2n joint system and through the blockwise expansion
/// of the joint Lyapunov equation. The two routes must agree to 1e-10
/// relative; total carries the full-matrix value.
JointCostBreakdown joint_cost(const LinearSystem& sys,
                              const InitialBelief& belief,
                              const CostSpec& cost, const GainPair& gains);

/// Discounted full-state analogue (alpha < 0): exact cost of u = -F x,
/// tr(Xbar (Sigma0 - V / (2 alpha))) with Xbar from the shifted Lyapunov
/// equation for the given F.
double full_state_cost_for_gain(const LinearSystem& sys,
                                const InitialBelief& belief,
                                const CostSpec& cost, const Matrix& F);

/// Steady-state cost rate tr(X V) of u = -F x for the non-discounted cost
/// (alpha must be 0), X from the closed-loop Lyapunov equation. Requires
/// A - B F Hurwitz.
double cost_rate_for_gain(const LinearSystem& sys, const CostSpec& cost,
                          const Matrix& F);

/// Largest central-difference gradient of joint_cost with respect to each
/// gain entry. h <= 0 selects the default step 1e-5 * max(1, ||gain||_F).
StationarityReport verify_stationarity(const LinearSystem& sys,
                                       const InitialBelief& belief,
                                       const CostSpec& cost,
                                       const GainPair& gains, double h = 0.0);

}  // namespace disclqg::oracle
