#pragma once

#include <Eigen/Dense>

namespace conevol::detail {

enum class LpStatus { Optimal, Unbounded, IterationLimit };

struct LpResult {
  LpStatus status = LpStatus::IterationLimit;
  Eigen::VectorXd x;
  double objective = 0.0;
};

/// Dense tableau simplex for
///   maximize c^T x  s.t.  A x <= b,  x >= 0,
/// with b >= 0 so the slack basis is feasible. Bland's rule for both the
/// entering and the leaving variable, so it cannot cycle.
LpResult maximize(const Eigen::MatrixXd& a, const Eigen::VectorXd& b, const Eigen::VectorXd& c,
                  int max_pivots = 10000);

}  // namespace conevol::detail
