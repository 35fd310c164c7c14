#pragma once

#include "conevol/polytope.hpp"

#include <cstddef>
#include <vector>

namespace conevol {

/// Volume by the cone-volume formula: (1/n) sum_j dist(base, F_j) vol(F_j).
/// Throws PointNotInterior unless `base` is strictly inside Q.
double volume(const Polytope& q, const Point& base);
/// Volume with the vertex centroid as base point.
double volume(const Polytope& q);

double surface_area(const Polytope& q);

struct FacetHeight {
  double height;
  double area;
};

/// h_j = offset_j - <normal_j, origin>, one entry per facet.
/// Throws PointNotInterior if any h_j <= 0.
std::vector<FacetHeight> facet_heights(const Polytope& q, const Point& origin);
std::vector<FacetHeight> facet_heights(const Polytope& q);

/// True iff every facet height from `x` is positive, i.e. x is strictly interior.
bool is_strictly_interior(const Polytope& q, const Point& x, double margin = 0.0);

/// A face of dimension 0 (vertex), 1 (edge; for n == 2 this is a facet) or
/// n-1 (facet), addressed by its index in the corresponding list of Q.
struct FaceRef {
  int k = 0;
  std::size_t index = 0;
};

/// Euclidean distance from x to the closest point of the face itself (not its
/// affine hull).
double face_distance(const Polytope& q, FaceRef face, const Point& x);

/// Edges with lengths and dihedral angles (n == 3).
const std::vector<Edge>& edges_with_angles(const Polytope& q);

/// Whether the orthogonal projection of the circumcenter onto every facet
/// plane lands in the facet (boundary counts as inside). Requires n == 3.
bool foot_condition(const Polytope& q);

/// Point-in-convex-polygon test for a 3D facet; `y` is assumed to lie in the
/// facet plane. Boundary within `tol` counts as inside.
bool facet_contains(const Polytope& q, std::size_t facet, const Point& y, double tol = 1e-9);

}  // namespace conevol
