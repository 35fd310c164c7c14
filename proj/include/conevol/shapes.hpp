#pragma once

#include "conevol/polytope.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace conevol {

enum class Platonic { Tetrahedron, Cube, Octahedron, Dodecahedron, Icosahedron };

/// arccos(sqrt((15 + sqrt(145)) / 40)), the angle of the 8-vertex
/// maximum-volume polytope.
double berman_hanes_theta();

/// Named or random polytope inscribed in the unit sphere, circumcentred at the
/// origin.
struct ShapeSpec {
  enum class Kind { RegularSimplex, Platonic, RegularPolygon, Bipyramid, BermanHanes, RandomInscribed };

  Kind kind = Kind::Platonic;
  int dim = 3;                          ///< simplex / random
  Platonic solid = Platonic::Tetrahedron;
  int count = 0;                        ///< polygon K, bipyramid K, random K
  std::vector<double> equator_angles;   ///< bipyramid; empty means regular
  double theta = 0.0;                   ///< berman_hanes
  std::uint64_t seed = 0;               ///< random

  static ShapeSpec regular_simplex(int n);
  static ShapeSpec platonic(Platonic s);
  static ShapeSpec regular_polygon(int k);
  static ShapeSpec bipyramid(int k, std::vector<double> equator_angles = {});
  static ShapeSpec berman_hanes(double theta);
  static ShapeSpec berman_hanes() { return berman_hanes(berman_hanes_theta()); }
  static ShapeSpec random_inscribed(int n, int k, std::uint64_t seed);

  /// CLI syntax: tetra|cube|octa|dodeca|icosa|simplex:n|polygon:K|bipyramid:K|
  /// bh|bh:theta|random:n,K,seed. Throws InvalidSpec.
  static ShapeSpec parse(std::string_view text);
  std::string name() const;
};

/// Vertex coordinates of a named shape (random specs are resampled as in
/// random_inscribed).
std::vector<Point> shape_points(const ShapeSpec& spec);

/// Builds the polytope. Throws InvalidSpec for out-of-range parameters.
Polytope generate(const ShapeSpec& spec);

/// Closed-form ground truth where it exists. Unknown fields stay empty.
struct ShapeMetadata {
  std::optional<double> inradius;
  std::optional<double> circumradius;
  std::optional<double> surface_area;
  std::optional<double> volume;
  std::optional<int> vertices;
  std::optional<int> edges;
  std::optional<int> facets;
};

/// Throws NoClosedForm for random specs.
ShapeMetadata metadata(const ShapeSpec& spec);

/// K uniform points on S^{n-1} (normalised Gaussians from a seeded stream),
/// redrawn until the origin is interior with margin 1e-6. Throws InvalidSpec
/// for K < n+1 and RetriesExhausted after 1000 draws.
Polytope random_inscribed(int n, int k, std::uint64_t seed);
std::vector<Point> random_inscribed_points(int n, int k, std::uint64_t seed);

/// Total facet area of the regular simplex inscribed in S^{n-1}:
/// (n+1)^{(n+1)/2} / (n^{n/2-1} (n-1)!).
double regular_simplex_surface(int n);

}  // namespace conevol
