#pragma once

#include "conevol/polytope.hpp"

#include <span>
#include <vector>

namespace conevol {

/// Convex hull of a point set in dimension 2 or 3.
///
/// In 3D the hull is grown by incremental insertion in lexicographic order;
/// coplanar triangles (within kCoplanarTol) are merged into polygonal facets so
/// that e.g. a cube has 6 square facets. In 2D the result is a counter-clockwise
/// polygon with collinear points dropped. Throws DegenerateInput when the points
/// are affinely dependent.
Polytope convex_hull(std::span<const Point> points, int dim);

/// Simplex from n+1 affinely independent points in R^n (any n >= 2). Facet
/// areas come from Gram determinants of the facet edge vectors.
Polytope simplex_from_vertices(std::span<const Point> points);

/// Dispatches on dimension: hull for n <= 3, simplex for n > 3 (which then
/// requires exactly n+1 points).
Polytope build_polytope(std::span<const Point> points);

/// Recomputes the edge list of a 3-polytope from its facet cycles.
/// Throws NonManifold if an edge is not shared by exactly two facets.
std::vector<Edge> edges_from_facets(const Polytope& q);

}  // namespace conevol
