#include "conevol/hull.hpp"

#include "conevol/error.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cmath>
#include <map>
#include <numeric>
#include <unordered_map>
#include <utility>

namespace conevol {

Point Polytope::vertex_centroid() const {
  Point c = Point::Zero(dim);
  for (const auto& v : vertices) c += v;
  return c / static_cast<double>(vertices.size());
}

namespace {

using Eigen::Vector2d;
using Eigen::Vector3d;

void require_dim(std::span<const Point> points, int dim) {
  for (const auto& p : points) {
    if (p.size() != dim) throw Error(ErrorCode::DegenerateInput, "point dimension mismatch");
    if (!p.allFinite()) throw Error(ErrorCode::DegenerateInput, "non-finite coordinate");
  }
}

double point_scale(std::span<const Point> points) {
  Point c = Point::Zero(points.front().size());
  for (const auto& p : points) c += p;
  c /= static_cast<double>(points.size());
  double s = 0.0;
  for (const auto& p : points) s = std::max(s, (p - c).norm());
  return std::max(s, 1e-300);
}

// Indices sorted lexicographically with exact duplicates removed.
std::vector<std::size_t> lexicographic_order(std::span<const Point> points) {
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  auto less = [&](std::size_t a, std::size_t b) {
    const auto& pa = points[a];
    const auto& pb = points[b];
    for (Eigen::Index k = 0; k < pa.size(); ++k) {
      if (pa[k] != pb[k]) return pa[k] < pb[k];
    }
    return a < b;
  };
  std::stable_sort(order.begin(), order.end(), less);
  order.erase(std::unique(order.begin(), order.end(),
                          [&](std::size_t a, std::size_t b) { return points[a] == points[b]; }),
              order.end());
  return order;
}

// ---------------------------------------------------------------------------
// 2D: Andrew's monotone chain.

Polytope hull_2d(std::span<const Point> points) {
  const auto order = lexicographic_order(points);
  if (order.size() < 3) throw Error(ErrorCode::DegenerateInput, "fewer than 3 distinct points");
  const double scale = point_scale(points);
  const double tol = 1e-12 * scale * scale;

  auto cross = [&](std::size_t o, std::size_t a, std::size_t b) {
    const Point& po = points[o];
    const Point& pa = points[a];
    const Point& pb = points[b];
    return (pa[0] - po[0]) * (pb[1] - po[1]) - (pa[1] - po[1]) * (pb[0] - po[0]);
  };

  std::vector<std::size_t> chain(2 * order.size());
  std::size_t k = 0;
  for (std::size_t i : order) {
    while (k >= 2 && cross(chain[k - 2], chain[k - 1], i) <= tol) --k;
    chain[k++] = i;
  }
  for (std::size_t j = order.size() - 1, lower = k + 1; j-- > 0;) {
    const std::size_t i = order[j];
    while (k >= lower && cross(chain[k - 2], chain[k - 1], i) <= tol) --k;
    chain[k++] = i;
  }
  chain.resize(k - 1);
  if (chain.size() < 3) throw Error(ErrorCode::DegenerateInput, "points are collinear");

  Polytope q;
  q.dim = 2;
  for (std::size_t i : chain) q.vertices.push_back(points[i]);
  const std::size_t m = q.vertices.size();
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = (i + 1) % m;
    const Point d = q.vertices[j] - q.vertices[i];
    Facet f;
    f.vertex_indices = {i, j};
    f.area = d.norm();
    f.normal = Point(2);
    f.normal << d[1] / f.area, -d[0] / f.area;
    f.offset = f.normal.dot(q.vertices[i]);
    f.centroid = 0.5 * (q.vertices[i] + q.vertices[j]);
    q.facets.push_back(std::move(f));
  }
  return q;
}

// ---------------------------------------------------------------------------
// 3D: incremental insertion with horizon repair, then coplanar merging.

struct Tri {
  std::array<std::size_t, 3> v;
  Vector3d normal;
  double offset;
  bool alive = true;
};

class IncrementalHull {
 public:
  IncrementalHull(const std::vector<Vector3d>& pts, double scale)
      : pts_(pts), eps_(1e-10 * std::max(1.0, scale)) {}

  void seed(std::array<std::size_t, 4> s) {
    Vector3d inside = Vector3d::Zero();
    for (auto i : s) inside += pts_[i];
    inside_ = inside / 4.0;
    const std::array<std::array<std::size_t, 3>, 4> faces{{{s[0], s[1], s[2]},
                                                           {s[0], s[1], s[3]},
                                                           {s[0], s[2], s[3]},
                                                           {s[1], s[2], s[3]}}};
    for (auto f : faces) {
      Vector3d n = (pts_[f[1]] - pts_[f[0]]).cross(pts_[f[2]] - pts_[f[0]]);
      if (n.dot(inside_ - pts_[f[0]]) > 0) std::swap(f[1], f[2]);
      add_face(f[0], f[1], f[2]);
    }
  }

  void insert(std::size_t p) {
    const Vector3d& x = pts_[p];
    std::vector<std::size_t> visible;
    for (std::size_t t = 0; t < tris_.size(); ++t) {
      if (tris_[t].alive && tris_[t].normal.dot(x) - tris_[t].offset > eps_) visible.push_back(t);
    }
    if (visible.empty()) return;

    std::vector<char> is_visible(tris_.size(), 0);
    for (auto t : visible) is_visible[t] = 1;

    std::vector<std::pair<std::size_t, std::size_t>> horizon;
    for (auto t : visible) {
      const auto& v = tris_[t].v;
      for (int e = 0; e < 3; ++e) {
        const std::size_t a = v[e];
        const std::size_t b = v[(e + 1) % 3];
        const auto twin = edge_owner_.find(key(b, a));
        if (twin == edge_owner_.end() || !is_visible[twin->second]) horizon.emplace_back(a, b);
      }
    }
    for (auto t : visible) kill_face(t);
    for (auto [a, b] : horizon) add_face(a, b, p);
  }

  const std::vector<Tri>& triangles() const { return tris_; }

  std::size_t neighbor(std::size_t a, std::size_t b) const {
    const auto it = edge_owner_.find(key(b, a));
    if (it == edge_owner_.end()) throw Error(ErrorCode::NonManifold, "open triangulation");
    return it->second;
  }

 private:
  std::uint64_t key(std::size_t a, std::size_t b) const {
    return static_cast<std::uint64_t>(a) * pts_.size() + b;
  }

  void add_face(std::size_t a, std::size_t b, std::size_t c) {
    Tri t;
    t.v = {a, b, c};
    t.normal = (pts_[b] - pts_[a]).cross(pts_[c] - pts_[a]).normalized();
    t.offset = t.normal.dot(pts_[a]);
    const std::size_t id = tris_.size();
    tris_.push_back(t);
    edge_owner_[key(a, b)] = id;
    edge_owner_[key(b, c)] = id;
    edge_owner_[key(c, a)] = id;
  }

  void kill_face(std::size_t t) {
    tris_[t].alive = false;
    const auto& v = tris_[t].v;
    for (int e = 0; e < 3; ++e) {
      const auto it = edge_owner_.find(key(v[e], v[(e + 1) % 3]));
      if (it != edge_owner_.end() && it->second == t) edge_owner_.erase(it);
    }
  }

  const std::vector<Vector3d>& pts_;
  double eps_;
  Vector3d inside_;
  std::vector<Tri> tris_;
  std::unordered_map<std::uint64_t, std::size_t> edge_owner_;
};

std::array<std::size_t, 4> initial_simplex(const std::vector<Vector3d>& pts,
                                           const std::vector<std::size_t>& order, double scale) {
  const double tol = 1e-9 * scale;
  const std::size_t i0 = order.front();
  std::size_t i1 = i0;
  double best = 0.0;
  for (auto i : order) {
    const double d = (pts[i] - pts[i0]).norm();
    if (d > best) best = d, i1 = i;
  }
  if (best <= tol) throw Error(ErrorCode::DegenerateInput, "all points coincide");

  const Vector3d axis = (pts[i1] - pts[i0]).normalized();
  std::size_t i2 = i0;
  best = 0.0;
  for (auto i : order) {
    const Vector3d r = pts[i] - pts[i0];
    const double d = (r - r.dot(axis) * axis).norm();
    if (d > best) best = d, i2 = i;
  }
  if (best <= tol) throw Error(ErrorCode::DegenerateInput, "points are collinear");

  const Vector3d n = (pts[i1] - pts[i0]).cross(pts[i2] - pts[i0]).normalized();
  std::size_t i3 = i0;
  best = 0.0;
  for (auto i : order) {
    const double d = std::abs(n.dot(pts[i] - pts[i0]));
    if (d > best) best = d, i3 = i;
  }
  if (best <= tol) throw Error(ErrorCode::DegenerateInput, "points are coplanar");
  return {i0, i1, i2, i3};
}

// Groups hull triangles into maximal coplanar regions and returns each region's
// boundary as a counter-clockwise vertex cycle (indices into the input points).
std::vector<std::vector<std::size_t>> merged_facet_cycles(const IncrementalHull& hull,
                                                          const std::vector<Vector3d>& pts) {
  const auto& tris = hull.triangles();
  std::vector<long> region(tris.size(), -1);
  std::vector<std::vector<std::size_t>> regions;

  for (std::size_t seed = 0; seed < tris.size(); ++seed) {
    if (!tris[seed].alive || region[seed] >= 0) continue;
    const long id = static_cast<long>(regions.size());
    regions.emplace_back();
    const Vector3d& n = tris[seed].normal;
    const double off = tris[seed].offset;
    std::vector<std::size_t> stack{seed};
    region[seed] = id;
    while (!stack.empty()) {
      const std::size_t t = stack.back();
      stack.pop_back();
      regions.back().push_back(t);
      for (int e = 0; e < 3; ++e) {
        const std::size_t a = tris[t].v[e];
        const std::size_t b = tris[t].v[(e + 1) % 3];
        const std::size_t u = hull.neighbor(a, b);
        if (region[u] >= 0) continue;
        bool coplanar = tris[u].normal.dot(n) > 0.0;
        for (auto w : tris[u].v) coplanar = coplanar && std::abs(n.dot(pts[w]) - off) <= kCoplanarTol;
        if (coplanar) {
          region[u] = id;
          stack.push_back(u);
        }
      }
    }
  }

  std::vector<std::vector<std::size_t>> cycles;
  cycles.reserve(regions.size());
  for (std::size_t r = 0; r < regions.size(); ++r) {
    std::map<std::size_t, std::size_t> next;
    for (auto t : regions[r]) {
      for (int e = 0; e < 3; ++e) {
        const std::size_t a = tris[t].v[e];
        const std::size_t b = tris[t].v[(e + 1) % 3];
        if (region[hull.neighbor(a, b)] == static_cast<long>(r)) continue;
        if (!next.emplace(a, b).second) {
          throw Error(ErrorCode::DegenerateInput, "coplanar region is not a simple polygon");
        }
      }
    }
    std::vector<std::size_t> cycle;
    std::size_t cur = next.begin()->first;
    do {
      cycle.push_back(cur);
      const auto it = next.find(cur);
      if (it == next.end() || cycle.size() > next.size()) {
        throw Error(ErrorCode::DegenerateInput, "broken facet boundary");
      }
      cur = it->second;
    } while (cur != cycle.front());
    if (cycle.size() != next.size()) {
      throw Error(ErrorCode::DegenerateInput, "facet boundary has several loops");
    }

    // Drop vertices that sit on a straight run of the boundary.
    bool changed = true;
    while (changed && cycle.size() > 3) {
      changed = false;
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        const Vector3d& u = pts[cycle[(i + cycle.size() - 1) % cycle.size()]];
        const Vector3d& v = pts[cycle[i]];
        const Vector3d& w = pts[cycle[(i + 1) % cycle.size()]];
        const Vector3d d = w - u;
        if ((v - u).cross(d).norm() <= kCoplanarTol * d.norm()) {
          cycle.erase(cycle.begin() + static_cast<long>(i));
          changed = true;
          break;
        }
      }
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

Polytope hull_3d(std::span<const Point> points) {
  const auto order = lexicographic_order(points);
  if (order.size() < 4) throw Error(ErrorCode::DegenerateInput, "fewer than 4 distinct points");
  const double scale = point_scale(points);

  std::vector<Vector3d> pts(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) pts[i] = points[i];

  const auto seed = initial_simplex(pts, order, scale);
  IncrementalHull hull(pts, scale);
  hull.seed(seed);
  for (auto i : order) {
    if (std::find(seed.begin(), seed.end(), i) == seed.end()) hull.insert(i);
  }

  auto cycles = merged_facet_cycles(hull, pts);

  // Hull vertices keep their relative input order.
  std::vector<char> used(points.size(), 0);
  for (const auto& c : cycles)
    for (auto i : c) used[i] = 1;
  std::vector<std::size_t> remap(points.size(), 0);
  Polytope q;
  q.dim = 3;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!used[i]) continue;
    remap[i] = q.vertices.size();
    q.vertices.push_back(points[i]);
  }

  for (auto& cycle : cycles) {
    Facet f;
    Vector3d newell = Vector3d::Zero();
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      newell += pts[cycle[i]].cross(pts[cycle[(i + 1) % cycle.size()]]);
    }
    const Vector3d n = newell.normalized();
    double off = 0.0;
    for (auto i : cycle) off += n.dot(pts[i]);
    off /= static_cast<double>(cycle.size());

    Vector3d centroid = Vector3d::Zero();
    double area = 0.0;
    const Vector3d& o = pts[cycle[0]];
    for (std::size_t i = 1; i + 1 < cycle.size(); ++i) {
      const Vector3d& b = pts[cycle[i]];
      const Vector3d& c = pts[cycle[i + 1]];
      const double a = 0.5 * (b - o).cross(c - o).dot(n);
      area += a;
      centroid += a * (o + b + c) / 3.0;
    }
    f.normal = n;
    f.offset = off;
    f.area = area;
    f.centroid = centroid / area;
    for (auto i : cycle) f.vertex_indices.push_back(remap[i]);
    q.facets.push_back(std::move(f));
  }
  q.edges = edges_from_facets(q);
  return q;
}

double factorial(int k) {
  double r = 1.0;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

}  // namespace

std::vector<Edge> edges_from_facets(const Polytope& q) {
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> owners;
  for (std::size_t fi = 0; fi < q.facets.size(); ++fi) {
    const auto& c = q.facets[fi].vertex_indices;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const std::size_t a = c[i];
      const std::size_t b = c[(i + 1) % c.size()];
      owners[{std::min(a, b), std::max(a, b)}].push_back(fi);
    }
  }
  std::vector<Edge> edges;
  edges.reserve(owners.size());
  for (const auto& [ab, fs] : owners) {
    if (fs.size() != 2) throw Error(ErrorCode::NonManifold, "edge shared by " + std::to_string(fs.size()) + " facets");
    const Vector3d n1 = q.facets[fs[0]].normal;
    const Vector3d n2 = q.facets[fs[1]].normal;
    Edge e;
    e.a = ab.first;
    e.b = ab.second;
    e.length = (q.vertices[e.a] - q.vertices[e.b]).norm();
    e.facet_left = fs[0];
    e.facet_right = fs[1];
    e.exterior = std::atan2(n1.cross(n2).norm(), n1.dot(n2));
    e.dihedral = M_PI - e.exterior;
    edges.push_back(e);
  }
  return edges;
}

Polytope convex_hull(std::span<const Point> points, int dim) {
  if (dim != 2 && dim != 3) throw Error(ErrorCode::DegenerateInput, "hull supports dim 2 or 3");
  if (points.size() < static_cast<std::size_t>(dim) + 1) {
    throw Error(ErrorCode::DegenerateInput, "need at least dim+1 points");
  }
  require_dim(points, dim);
  return dim == 2 ? hull_2d(points) : hull_3d(points);
}

Polytope simplex_from_vertices(std::span<const Point> points) {
  if (points.empty()) throw Error(ErrorCode::DegenerateInput, "no points");
  const int n = static_cast<int>(points.front().size());
  if (n < 2) throw Error(ErrorCode::DegenerateInput, "dimension must be >= 2");
  if (points.size() != static_cast<std::size_t>(n) + 1) {
    throw Error(ErrorCode::DegenerateInput, "a simplex in R^n needs exactly n+1 points");
  }
  require_dim(points, n);

  Eigen::MatrixXd span_mat(n, n);
  for (int i = 0; i < n; ++i) span_mat.col(i) = points[i + 1] - points[0];
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(span_mat);
  const auto& sv = svd.singularValues();
  if (sv(0) <= 0.0 || sv(n - 1) <= 1e-10 * sv(0)) {
    throw Error(ErrorCode::DegenerateInput, "points are affinely dependent");
  }

  Polytope q;
  q.dim = n;
  q.vertices.assign(points.begin(), points.end());
  const double norm_factor = factorial(n - 1);
  for (int j = 0; j <= n; ++j) {
    Facet f;
    for (int i = 0; i <= n; ++i)
      if (i != j) f.vertex_indices.push_back(static_cast<std::size_t>(i));
    const Point& base = points[f.vertex_indices[0]];
    Eigen::MatrixXd edges(n - 1, n);
    for (int k = 1; k < n; ++k) edges.row(k - 1) = (points[f.vertex_indices[k]] - base).transpose();

    const double gram = (edges * edges.transpose()).determinant();
    f.area = std::sqrt(std::max(gram, 0.0)) / norm_factor;

    const Eigen::JacobiSVD<Eigen::MatrixXd> esvd(edges, Eigen::ComputeFullV);
    Point normal = esvd.matrixV().col(n - 1);
    if (normal.dot(points[j] - base) > 0) normal = -normal;
    f.normal = normal.normalized();
    f.offset = f.normal.dot(base);

    f.centroid = Point::Zero(n);
    for (auto i : f.vertex_indices) f.centroid += points[i];
    f.centroid /= static_cast<double>(n);

    if (n == 3) {
      const Vector3d a = points[f.vertex_indices[0]];
      const Vector3d b = points[f.vertex_indices[1]];
      const Vector3d c = points[f.vertex_indices[2]];
      if ((b - a).cross(c - a).dot(Vector3d(f.normal)) < 0) {
        std::swap(f.vertex_indices[1], f.vertex_indices[2]);
      }
    }
    q.facets.push_back(std::move(f));
  }
  if (n == 3) q.edges = edges_from_facets(q);
  return q;
}

Polytope build_polytope(std::span<const Point> points) {
  if (points.empty()) throw Error(ErrorCode::DegenerateInput, "no points");
  const int n = static_cast<int>(points.front().size());
  if (n <= 3) return convex_hull(points, n);
  return simplex_from_vertices(points);
}

}  // namespace conevol
