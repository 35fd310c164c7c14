#include "conevol/detail/lp.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace conevol::detail {

LpResult maximize(const Eigen::MatrixXd& a, const Eigen::VectorXd& b, const Eigen::VectorXd& c,
                  int max_pivots) {
  constexpr double eps = 1e-12;
  const Eigen::Index m = a.rows();
  const Eigen::Index nv = a.cols();
  const Eigen::Index rhs = nv + m;

  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m + 1, nv + m + 1);
  t.topLeftCorner(m, nv) = a;
  t.block(0, nv, m, m).setIdentity();
  t.col(rhs).head(m) = b;
  t.row(m).head(nv) = -c.transpose();

  std::vector<Eigen::Index> basis(static_cast<std::size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) basis[static_cast<std::size_t>(i)] = nv + i;

  LpResult result;
  for (int pivots = 0; pivots < max_pivots; ++pivots) {
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < rhs; ++j) {
      if (t(m, j) < -eps) {
        enter = j;
        break;
      }
    }
    if (enter < 0) {
      result.status = LpStatus::Optimal;
      result.x = Eigen::VectorXd::Zero(nv);
      for (Eigen::Index i = 0; i < m; ++i) {
        const auto var = basis[static_cast<std::size_t>(i)];
        if (var < nv) result.x(var) = t(i, rhs);
      }
      result.objective = t(m, rhs);
      return result;
    }

    Eigen::Index leave = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < m; ++i) {
      if (t(i, enter) <= eps) continue;
      const double ratio = t(i, rhs) / t(i, enter);
      const bool tie = leave >= 0 && std::abs(ratio - best_ratio) <= eps;
      if (leave < 0 || ratio < best_ratio - eps ||
          (tie && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
        best_ratio = ratio;
        leave = i;
      }
    }
    if (leave < 0) {
      result.status = LpStatus::Unbounded;
      return result;
    }

    t.row(leave) /= t(leave, enter);
    for (Eigen::Index i = 0; i <= m; ++i) {
      if (i != leave && t(i, enter) != 0.0) t.row(i) -= t(i, enter) * t.row(leave);
    }
    basis[static_cast<std::size_t>(leave)] = enter;
  }
  result.status = LpStatus::IterationLimit;
  return result;
}

}  // namespace conevol::detail
