#pragma once

#include <Eigen/Core>
#include <optional>

namespace disclqg {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Continuous-time plant
///   dx = (A x + B u) dt + v,   y = C x + D u + w,
/// with v, w white noise of intensity V and W. A system without measurements
/// (full-state feedback problems) is represented with p = 0, i.e. C, D have
/// zero rows and W is 0x0.
struct LinearSystem {
  Matrix A;  // n x n state dynamics
  Matrix B;  // n x m input map
  Matrix C;  // p x n output map
  Matrix D;  // p x m feedthrough
  Matrix V;  // n x n process-noise intensity, symmetric PSD
  Matrix W;  // p x p measurement-noise intensity, symmetric PD

  Eigen::Index n() const { return A.rows(); }
  Eigen::Index m() const { return B.cols(); }
  Eigen::Index p() const { return C.rows(); }
  bool has_outputs() const { return p() > 0; }
};

/// Gaussian description of the initial state. Sigma0 is the second moment
/// E[x0 x0^T]; the covariance of x0 is Sigma0 - mu0 mu0^T.
struct InitialBelief {
  Vector mu0;
  Matrix Sigma0;
};

/// Quadratic cost integrand x^T Q x + u^T R u weighted by exp(2 alpha t).
/// alpha < 0 discounts the future; alpha > 0 prescribes a degree of
/// stability.
struct CostSpec {
  Matrix Q;  // n x n, symmetric PSD
  Matrix R;  // m x m, symmetric PD
  double alpha = 0.0;
};

/// Controller/observer gain pair. Either member may be absent: full-state
/// designs carry only F, observer-only designs carry only K.
struct GainPair {
  std::optional<Matrix> F;  // m x n state-feedback gain (u = -F xhat)
  std::optional<Matrix> K;  // n x p observer gain
};

}  // namespace disclqg
