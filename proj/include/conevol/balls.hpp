#pragma once

#include "conevol/polytope.hpp"

#include <span>

namespace conevol {

struct Ball {
  Point center;
  double radius = 0.0;
};

/// Smallest enclosing ball by move-to-front Welzl. The points are shuffled
/// with a fixed internal seed, so the result is deterministic.
Ball circumball(std::span<const Point> points);

struct ChebyshevBall {
  Point center;
  double radius = 0.0;
  /// All facet constraints active at the optimum within kEqualityTol.
  bool has_insphere = false;
};

/// Largest inscribed ball, from the LP
///   maximize r  s.t.  <normal_j, x> + r <= offset_j  for every facet.
/// Throws LpFailure if the solver does not reach an optimum.
ChebyshevBall chebyshev_center(const Polytope& q);

/// Circumball of the vertices plus the Chebyshev ball; incenter is set iff
/// the polytope has an insphere.
BallInfo ball_info(const Polytope& q);

}  // namespace conevol
