#pragma once

#include <string>
#include <vector>

#include "disclqg/types.hpp"

namespace disclqg::model {

/// A + alpha * I. Returns A itself (bitwise) when alpha == 0.
Matrix shifted_A(const LinearSystem& sys, double alpha);

/// PBH test: (A, B) is stabilizable iff [A - lambda I, B] has full row rank
/// for every eigenvalue lambda with Re(lambda) >= 0. Marginal eigenvalues
/// (|Re| below the Hurwitz margin) count as unstable.
bool is_stabilizable(const Matrix& A, const Matrix& B);

/// Dual of is_stabilizable: (A, C) detectable iff (A^T, C^T) stabilizable.
bool is_detectable(const Matrix& A, const Matrix& C);

struct ValidationIssue {
  std::string field;
  std::string message;
};

/// Structural checks on a problem description: dimension consistency,
/// symmetry, definiteness and the second-moment inequality. Reports every
/// violation instead of throwing; an empty result means the problem is valid.
std::vector<ValidationIssue> validate(const LinearSystem& sys,
                                      const InitialBelief& belief,
                                      const CostSpec& cost);

}  // namespace disclqg::model
