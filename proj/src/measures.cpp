#include "conevol/measures.hpp"

#include "conevol/balls.hpp"
#include "conevol/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace conevol {

namespace {

using Eigen::Vector3d;

// Distance from x to the simplex spanned by `verts` (any dimension, any
// number of vertices). Recurses onto sub-faces when the projection onto the
// affine hull falls outside.
double distance_to_simplex(const std::vector<Point>& verts, const Point& x) {
  const std::size_t m = verts.size();
  if (m == 1) return (x - verts[0]).norm();
  Eigen::MatrixXd d(x.size(), static_cast<Eigen::Index>(m - 1));
  for (std::size_t k = 1; k < m; ++k) d.col(static_cast<Eigen::Index>(k - 1)) = verts[k] - verts[0];
  const Eigen::VectorXd lambda = d.colPivHouseholderQr().solve(x - verts[0]);
  const double first = 1.0 - lambda.sum();
  if (first >= -1e-14 && (lambda.array() >= -1e-14).all()) {
    return (x - verts[0] - d * lambda).norm();
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t drop = 0; drop < m; ++drop) {
    std::vector<Point> sub;
    sub.reserve(m - 1);
    for (std::size_t k = 0; k < m; ++k)
      if (k != drop) sub.push_back(verts[k]);
    best = std::min(best, distance_to_simplex(sub, x));
  }
  return best;
}

double distance_to_segment(const Point& a, const Point& b, const Point& x) {
  const Point d = b - a;
  const double t = std::clamp((x - a).dot(d) / d.squaredNorm(), 0.0, 1.0);
  return (x - (a + t * d)).norm();
}

}  // namespace

std::vector<FacetHeight> facet_heights(const Polytope& q, const Point& origin) {
  std::vector<FacetHeight> out;
  out.reserve(q.facets.size());
  for (const auto& f : q.facets) {
    const double h = f.offset - f.normal.dot(origin);
    if (!(h > 0.0)) throw Error(ErrorCode::PointNotInterior, "base point is not strictly inside the polytope");
    out.push_back({h, f.area});
  }
  return out;
}

std::vector<FacetHeight> facet_heights(const Polytope& q) {
  return facet_heights(q, Point::Zero(q.dim));
}

bool is_strictly_interior(const Polytope& q, const Point& x, double margin) {
  return std::all_of(q.facets.begin(), q.facets.end(),
                     [&](const Facet& f) { return f.offset - f.normal.dot(x) > margin; });
}

double volume(const Polytope& q, const Point& base) {
  double sum = 0.0;
  for (const auto& [h, a] : facet_heights(q, base)) sum += h * a;
  return sum / q.dim;
}

double volume(const Polytope& q) { return volume(q, q.vertex_centroid()); }

double surface_area(const Polytope& q) {
  double s = 0.0;
  for (const auto& f : q.facets) s += f.area;
  return s;
}

bool facet_contains(const Polytope& q, std::size_t facet, const Point& y, double tol) {
  const Facet& f = q.facets.at(facet);
  const Vector3d n = f.normal;
  const Vector3d p = y;
  const auto& c = f.vertex_indices;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Vector3d a = q.vertices[c[i]];
    const Vector3d b = q.vertices[c[(i + 1) % c.size()]];
    const Vector3d e = b - a;
    // Signed distance of p from the edge line, positive towards the interior.
    if (n.cross(e).dot(p - a) / e.norm() < -tol) return false;
  }
  return true;
}

double face_distance(const Polytope& q, FaceRef face, const Point& x) {
  const int n = q.dim;
  if (face.k == 0) return (x - q.vertices.at(face.index)).norm();

  if (face.k == n - 1) {
    const Facet& f = q.facets.at(face.index);
    if (n == 3 && f.vertex_indices.size() > 3) {
      const double h = f.normal.dot(x) - f.offset;
      const Point y = x - h * f.normal;
      if (facet_contains(q, face.index, y, 0.0)) return std::abs(h);
      double best = std::numeric_limits<double>::infinity();
      const auto& c = f.vertex_indices;
      for (std::size_t i = 0; i < c.size(); ++i) {
        best = std::min(best, distance_to_segment(q.vertices[c[i]], q.vertices[c[(i + 1) % c.size()]], x));
      }
      return best;
    }
    std::vector<Point> verts;
    for (auto i : f.vertex_indices) verts.push_back(q.vertices[i]);
    return distance_to_simplex(verts, x);
  }

  if (face.k == 1 && n == 3) {
    const Edge& e = q.edges.at(face.index);
    return distance_to_segment(q.vertices[e.a], q.vertices[e.b], x);
  }
  throw Error(ErrorCode::UnsupportedFaceDim, "face dimension " + std::to_string(face.k) + " in R^" + std::to_string(n));
}

const std::vector<Edge>& edges_with_angles(const Polytope& q) {
  if (q.dim != 3) throw Error(ErrorCode::UnsupportedFaceDim, "edge angles need a 3-polytope");
  return q.edges;
}

bool foot_condition(const Polytope& q) {
  if (q.dim != 3) throw Error(ErrorCode::UnsupportedFaceDim, "foot condition needs a 3-polytope");
  const Point c = circumball(q.vertices).center;
  for (std::size_t j = 0; j < q.facets.size(); ++j) {
    const Facet& f = q.facets[j];
    const Point foot = c - (f.normal.dot(c) - f.offset) * f.normal;
    if (!facet_contains(q, j, foot)) return false;
  }
  return true;
}

}  // namespace conevol
