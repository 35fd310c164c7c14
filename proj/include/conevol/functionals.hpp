#pragma once

#include "conevol/polytope.hpp"
#include "conevol/weights.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace conevol {

/// How theta_E is derived from the dihedral angle delta_E of an edge.
///   Exterior:     theta = pi - delta (angle between the two outer normals)
///   Reflex: theta = 2 pi - delta
enum class AngleConvention { Exterior, Reflex };

std::string_view to_string(AngleConvention c);
double edge_angle(const Edge& e, AngleConvention conv);

/// S_w(Q) = sum_j w(h_j) vol(F_j), heights measured from the origin.
double s_weighted(const Polytope& q, const WeightFunction& w);

/// S^in_w(Q) = sum_j dist(i_Q, F_j) w(vol(F_j)). Throws NoInsphere.
double s_weighted_in(const Polytope& q, const WeightFunction& w);

/// L_p surface area: sum_j h_j^{1-p} vol(F_j). S_0 = n vol, S_1 = surface area.
double s_p(const Polytope& q, double p);

/// Orlicz surface area of a polytope: sum_j w(1/h_j) h_j vol(F_j).
double orlicz_surface_area(const Polytope& q, const WeightFunction& w);

/// T-functional sum over k-faces of dist(o, F)^a vol_k(F)^b with vol_0 := 1.
/// For k = n-1 the distance is the facet height (the quantity S_p uses); for
/// k < n-1 it is the distance to the closest point of the face.
/// Supports k in {0, 1, n-1}; throws UnsupportedFaceDim otherwise.
double t_functional(const Polytope& q, double a, double b, int k);

/// M(Q) = 1/2 sum_E vol_1(E) theta_E. Needs n == 3.
double edge_curvature(const Polytope& q, AngleConvention conv = AngleConvention::Exterior);

enum class EdgeWeighting {
  Angle,   ///< M_w  = 1/2 sum_E len_E w(theta_E)
  Length,  ///< M^in_w = 1/2 sum_E theta_E w(len_E)
};

double edge_curvature_weighted(const Polytope& q, const WeightFunction& w,
                               AngleConvention conv = AngleConvention::Exterior,
                               EdgeWeighting variant = EdgeWeighting::Angle);

/// Mean width from edge data: (1/(4 pi)) sum_E len_E (pi - delta_E).
double mean_width_exact(const Polytope& q);

struct MonteCarloEstimate {
  double value = 0.0;
  double standard_error = 0.0;
  std::uint64_t samples = 0;
};

/// 2 * mean over uniform directions u of max_v <v, u>. Directions come from a
/// counter-based stream, and partial sums are reduced in a fixed block order,
/// so the estimate is bit-identical for any thread count.
MonteCarloEstimate mean_width_monte_carlo(const Polytope& q, std::uint64_t samples, std::uint64_t seed);

/// Serial reference of mean_width_monte_carlo; same blocks, same result.
MonteCarloEstimate mean_width_monte_carlo_serial(const Polytope& q, std::uint64_t samples, std::uint64_t seed);

struct FunctionalSummary {
  std::optional<double> mean_height;        ///< needs origin interior
  double mean_facet_area = 0.0;
  std::optional<double> height_sum;         ///< needs an insphere
  std::optional<double> total_edge_length;  ///< n == 3
  std::optional<double> mean_edge_angle;    ///< n == 3, under `convention`
  AngleConvention convention = AngleConvention::Exterior;
};

FunctionalSummary summary(const Polytope& q, AngleConvention conv = AngleConvention::Exterior);

}  // namespace conevol
