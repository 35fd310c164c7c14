#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace conevol {

using Point = Eigen::VectorXd;

/// Coplanarity tolerance used when merging hull triangles into facets.
inline constexpr double kCoplanarTol = 1e-9;
/// Tolerance at which equality cases (insphere, equiareal, regular) are detected.
inline constexpr double kEqualityTol = 1e-7;

/// A facet lies in the plane <normal, x> = offset with normal pointing outward.
/// For dim == 3 the vertex indices form a cycle, counter-clockwise seen from outside.
struct Facet {
  std::vector<std::size_t> vertex_indices;
  Point normal;
  double offset = 0.0;
  double area = 0.0;
  Point centroid;
};

struct Edge {
  std::size_t a = 0;
  std::size_t b = 0;
  double length = 0.0;
  std::size_t facet_left = 0;
  std::size_t facet_right = 0;
  /// Interior dihedral angle, in (0, pi).
  double dihedral = 0.0;
  /// pi - dihedral, the angle between the two outer normals.
  double exterior = 0.0;
};

/// Convex polytope with vertices, facets and, for dim == 3, edges annotated
/// with dihedral angles. Immutable once built by one of the constructors in
/// hull.hpp.
struct Polytope {
  int dim = 0;
  std::vector<Point> vertices;
  std::vector<Facet> facets;
  std::vector<Edge> edges;

  std::size_t num_vertices() const { return vertices.size(); }
  std::size_t num_facets() const { return facets.size(); }
  std::size_t num_edges() const { return edges.size(); }

  Point vertex_centroid() const;
};

struct BallInfo {
  Point circumcenter;
  double circumradius = 0.0;
  Point chebyshev_center;
  double chebyshev_radius = 0.0;
  bool has_insphere = false;
  std::optional<Point> incenter;
};

}  // namespace conevol
