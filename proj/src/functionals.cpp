#include "conevol/functionals.hpp"

#include "conevol/balls.hpp"
#include "conevol/error.hpp"
#include "conevol/measures.hpp"
#include "conevol/random.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace conevol {

std::string_view to_string(AngleConvention c) {
  return c == AngleConvention::Exterior ? "exterior" : "reflex";
}

double edge_angle(const Edge& e, AngleConvention conv) {
  return conv == AngleConvention::Exterior ? e.exterior : 2.0 * M_PI - e.dihedral;
}

double s_weighted(const Polytope& q, const WeightFunction& w) {
  double s = 0.0;
  for (const auto& [h, a] : facet_heights(q)) s += w(h) * a;
  return s;
}

double s_weighted_in(const Polytope& q, const WeightFunction& w) {
  const ChebyshevBall in = chebyshev_center(q);
  if (!in.has_insphere) throw Error(ErrorCode::NoInsphere, "polytope has no insphere");
  double s = 0.0;
  for (const auto& f : q.facets) s += (f.offset - f.normal.dot(in.center)) * w(f.area);
  return s;
}

double s_p(const Polytope& q, double p) {
  double s = 0.0;
  for (const auto& [h, a] : facet_heights(q)) s += std::pow(h, 1.0 - p) * a;
  return s;
}

double orlicz_surface_area(const Polytope& q, const WeightFunction& w) {
  double s = 0.0;
  for (const auto& [h, a] : facet_heights(q)) s += w(1.0 / h) * h * a;
  return s;
}

double t_functional(const Polytope& q, double a, double b, int k) {
  const int n = q.dim;
  if (k != 0 && k != 1 && k != n - 1) {
    throw Error(ErrorCode::UnsupportedFaceDim, "T-functional supports k in {0, 1, n-1}");
  }
  const auto heights = facet_heights(q);  // also enforces origin interior
  const Point o = Point::Zero(n);

  double s = 0.0;
  if (k == n - 1) {
    for (const auto& [h, area] : heights) s += std::pow(h, a) * std::pow(area, b);
  } else if (k == 0) {
    for (std::size_t i = 0; i < q.vertices.size(); ++i) s += std::pow(face_distance(q, {0, i}, o), a);
  } else {
    for (std::size_t i = 0; i < q.edges.size(); ++i) {
      s += std::pow(face_distance(q, {1, i}, o), a) * std::pow(q.edges[i].length, b);
    }
  }
  return s;
}

double edge_curvature(const Polytope& q, AngleConvention conv) {
  double s = 0.0;
  for (const auto& e : edges_with_angles(q)) s += e.length * edge_angle(e, conv);
  return 0.5 * s;
}

double edge_curvature_weighted(const Polytope& q, const WeightFunction& w, AngleConvention conv,
                               EdgeWeighting variant) {
  double s = 0.0;
  for (const auto& e : edges_with_angles(q)) {
    const double theta = edge_angle(e, conv);
    if (!(theta > 0.0)) throw Error(ErrorCode::DomainError, "non-positive edge angle");
    s += variant == EdgeWeighting::Angle ? e.length * w(theta) : theta * w(e.length);
  }
  return 0.5 * s;
}

double mean_width_exact(const Polytope& q) {
  return edge_curvature(q, AngleConvention::Exterior) / (2.0 * M_PI);
}

namespace {

constexpr std::uint64_t kBlock = 4096;

struct BlockSums {
  double sum = 0.0;
  double sum_sq = 0.0;
};

BlockSums support_block(const std::vector<Eigen::Vector3d>& verts, std::uint64_t seed, std::uint64_t begin,
                        std::uint64_t end) {
  BlockSums out;
  for (std::uint64_t i = begin; i < end; ++i) {
    const Eigen::Vector3d u = direction_at(seed, i);
    double h = -std::numeric_limits<double>::infinity();
    for (const auto& v : verts) h = std::max(h, v.dot(u));
    const double width = 2.0 * h;
    out.sum += width;
    out.sum_sq += width * width;
  }
  return out;
}

MonteCarloEstimate reduce(const std::vector<BlockSums>& blocks, std::uint64_t samples) {
  double sum = 0.0;
  double sum_sq = 0.0;
  for (const auto& b : blocks) {
    sum += b.sum;
    sum_sq += b.sum_sq;
  }
  const double n = static_cast<double>(samples);
  const double mean = sum / n;
  const double var = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
  return {mean, std::sqrt(var / n), samples};
}

std::vector<Eigen::Vector3d> vertices_3d(const Polytope& q) {
  if (q.dim != 3) throw Error(ErrorCode::UnsupportedFaceDim, "mean width needs a 3-polytope");
  std::vector<Eigen::Vector3d> v;
  v.reserve(q.vertices.size());
  for (const auto& p : q.vertices) v.emplace_back(p);
  return v;
}

}  // namespace

MonteCarloEstimate mean_width_monte_carlo_serial(const Polytope& q, std::uint64_t samples, std::uint64_t seed) {
  if (samples < 2) throw Error(ErrorCode::InadmissibleParams, "need at least 2 samples");
  const auto verts = vertices_3d(q);
  const std::uint64_t nblocks = (samples + kBlock - 1) / kBlock;
  std::vector<BlockSums> blocks(nblocks);
  for (std::uint64_t b = 0; b < nblocks; ++b) {
    blocks[b] = support_block(verts, seed, b * kBlock, std::min(samples, (b + 1) * kBlock));
  }
  return reduce(blocks, samples);
}

MonteCarloEstimate mean_width_monte_carlo(const Polytope& q, std::uint64_t samples, std::uint64_t seed) {
  if (samples < 2) throw Error(ErrorCode::InadmissibleParams, "need at least 2 samples");
  const auto verts = vertices_3d(q);
  const auto nblocks = static_cast<std::int64_t>((samples + kBlock - 1) / kBlock);
  std::vector<BlockSums> blocks(static_cast<std::size_t>(nblocks));
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < nblocks; ++b) {
    const auto ub = static_cast<std::uint64_t>(b);
    blocks[static_cast<std::size_t>(b)] = support_block(verts, seed, ub * kBlock, std::min(samples, (ub + 1) * kBlock));
  }
  return reduce(blocks, samples);
}

FunctionalSummary summary(const Polytope& q, AngleConvention conv) {
  FunctionalSummary s;
  s.convention = conv;
  const double area = surface_area(q);
  s.mean_facet_area = area / static_cast<double>(q.facets.size());

  if (is_strictly_interior(q, Point::Zero(q.dim))) {
    double weighted = 0.0;
    for (const auto& [h, a] : facet_heights(q)) weighted += h * a;
    s.mean_height = weighted / area;
  }

  const ChebyshevBall in = chebyshev_center(q);
  if (in.has_insphere) {
    double hs = 0.0;
    for (const auto& f : q.facets) hs += f.offset - f.normal.dot(in.center);
    s.height_sum = hs;
  }

  if (q.dim == 3) {
    double total = 0.0;
    double weighted = 0.0;
    for (const auto& e : q.edges) {
      total += e.length;
      weighted += e.length * edge_angle(e, conv);
    }
    s.total_edge_length = total;
    s.mean_edge_angle = weighted / total;
  }
  return s;
}

}  // namespace conevol
