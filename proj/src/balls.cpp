#include "conevol/balls.hpp"

#include "conevol/detail/lp.hpp"
#include "conevol/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace conevol {

namespace {

constexpr std::uint64_t kWelzlSeed = 0x5eedba11c0ffeeULL;

// Smallest ball with every support point on its boundary. The centre lies in
// the affine hull of the support: c = p0 + sum_k lambda_k (p_k - p0).
Ball ball_through(const std::vector<const Point*>& support, Eigen::Index dim) {
  if (support.empty()) return {Point::Zero(dim), -1.0};
  const Point& p0 = *support.front();
  if (support.size() == 1) return {p0, 0.0};
  const auto m = static_cast<Eigen::Index>(support.size() - 1);
  Eigen::MatrixXd q(dim, m);
  for (Eigen::Index k = 0; k < m; ++k) q.col(k) = *support[static_cast<std::size_t>(k + 1)] - p0;
  const Eigen::MatrixXd gram = 2.0 * q.transpose() * q;
  const Eigen::VectorXd rhs = q.colwise().squaredNorm().transpose();
  const Eigen::VectorXd lambda = gram.completeOrthogonalDecomposition().solve(rhs);
  Point c = p0 + q * lambda;
  double r = 0.0;
  for (const Point* p : support) r = std::max(r, (*p - c).norm());
  return {std::move(c), r};
}

bool outside(const Point& p, const Ball& b) {
  if (b.radius < 0.0) return true;
  return (p - b.center).norm() > b.radius * (1.0 + 1e-12) + 1e-15;
}

class MoveToFrontWelzl {
 public:
  MoveToFrontWelzl(std::vector<const Point*> pts, Eigen::Index dim) : pts_(std::move(pts)), dim_(dim) {}

  Ball run() {
    std::vector<const Point*> support;
    return solve(pts_.size(), support);
  }

 private:
  Ball solve(std::size_t end, std::vector<const Point*>& support) {
    Ball ball = ball_through(support, dim_);
    if (support.size() == static_cast<std::size_t>(dim_) + 1) return ball;
    for (std::size_t i = 0; i < end; ++i) {
      if (!outside(*pts_[i], ball)) continue;
      support.push_back(pts_[i]);
      ball = solve(i, support);
      support.pop_back();
      std::rotate(pts_.begin(), pts_.begin() + static_cast<long>(i), pts_.begin() + static_cast<long>(i) + 1);
    }
    return ball;
  }

  std::vector<const Point*> pts_;
  Eigen::Index dim_;
};

}  // namespace

Ball circumball(std::span<const Point> points) {
  if (points.empty()) throw Error(ErrorCode::DegenerateInput, "circumball of no points");
  const Eigen::Index dim = points.front().size();
  std::vector<const Point*> ptrs;
  ptrs.reserve(points.size());
  for (const auto& p : points) ptrs.push_back(&p);

  std::mt19937_64 rng(kWelzlSeed);
  for (std::size_t i = ptrs.size(); i > 1; --i) {
    std::swap(ptrs[i - 1], ptrs[rng() % i]);
  }
  return MoveToFrontWelzl(std::move(ptrs), dim).run();
}

ChebyshevBall chebyshev_center(const Polytope& q) {
  const Eigen::Index n = q.dim;
  const auto m = static_cast<Eigen::Index>(q.facets.size());
  // Shift to the vertex centroid so the slack basis is feasible, and split the
  // free centre into u - w with u, w >= 0.
  const Point shift = q.vertex_centroid();
  Eigen::MatrixXd a(m, 2 * n + 1);
  Eigen::VectorXd b(m);
  for (Eigen::Index j = 0; j < m; ++j) {
    const Facet& f = q.facets[static_cast<std::size_t>(j)];
    a.block(j, 0, 1, n) = f.normal.transpose();
    a.block(j, n, 1, n) = -f.normal.transpose();
    a(j, 2 * n) = 1.0;
    b(j) = f.offset - f.normal.dot(shift);
    if (!(b(j) > 0.0)) throw Error(ErrorCode::LpFailure, "vertex centroid is not interior");
  }
  Eigen::VectorXd c = Eigen::VectorXd::Zero(2 * n + 1);
  c(2 * n) = 1.0;

  const auto lp = detail::maximize(a, b, c);
  if (lp.status != detail::LpStatus::Optimal) {
    throw Error(ErrorCode::LpFailure, "Chebyshev LP did not reach an optimum");
  }

  ChebyshevBall out;
  out.center = shift + lp.x.head(n) - lp.x.segment(n, n);
  out.radius = lp.x(2 * n);
  const double tol = kEqualityTol * std::max(1.0, out.radius);
  out.has_insphere = std::all_of(q.facets.begin(), q.facets.end(), [&](const Facet& f) {
    return f.offset - f.normal.dot(out.center) - out.radius <= tol;
  });
  return out;
}

BallInfo ball_info(const Polytope& q) {
  const Ball outer = circumball(q.vertices);
  const ChebyshevBall inner = chebyshev_center(q);
  BallInfo info;
  info.circumcenter = outer.center;
  info.circumradius = outer.radius;
  info.chebyshev_center = inner.center;
  info.chebyshev_radius = inner.radius;
  info.has_insphere = inner.has_insphere;
  if (inner.has_insphere) info.incenter = inner.center;
  return info;
}

}  // namespace conevol
