#pragma once

#include "conevol/polytope.hpp"
#include "conevol/weights.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace conevol {

/// K points on S^2 as (azimuth, polar) pairs.
struct Configuration {
  std::vector<double> azimuth;
  std::vector<double> polar;

  int size() const { return static_cast<int>(polar.size()); }
  std::vector<Point> points() const;

  /// Rotates the points so that the first sits at the north pole and the
  /// second at azimuth zero, then stores their angles.
  static Configuration from_points(std::span<const Point> points);

  /// Gauge-fixed parameters: polar of point 1, then (azimuth, polar) of points
  /// 2..K-1. Length 2K - 3.
  std::vector<double> parameters() const;
  static Configuration from_parameters(int k, std::span<const double> x);
};

struct Objective {
  enum class Kind { Volume, Surface, Sp, Weighted };
  Kind kind = Kind::Volume;
  double p = 0.0;
  std::optional<WeightFunction> weight;

  static Objective volume() { return {Kind::Volume, 0.0, std::nullopt}; }
  static Objective surface() { return {Kind::Surface, 0.0, std::nullopt}; }
  static Objective sp(double p) { return {Kind::Sp, p, std::nullopt}; }
  static Objective weighted(WeightFunction w) { return {Kind::Weighted, 0.0, std::move(w)}; }

  /// volume | surface | sp:<p> | weighted:<weight spec>. Throws UsageError.
  static Objective parse(std::string_view text);
  std::string name() const;
};

/// Value of the functional on the hull of the points. Degenerate hulls give
/// -inf; when the origin is not interior, S_p with p != 0 and weighted
/// objectives give -inf too (S_0 = 3 vol needs no base point).
double objective(std::span<const Point> points, const Objective& obj);
double objective(const Configuration& c, const Objective& obj);

struct OptimizerConfig {
  int restarts = 20;
  std::uint64_t seed = 0;
  int max_iterations = 2000;
  double xtol = 1e-10;
  double ftol = 1e-12;
  /// Initial simplex edge, radians.
  double initial_step = 0.3;
};

struct RestartRecord {
  std::uint64_t seed = 0;
  int iterations = 0;
  double value = 0.0;
};

struct OptimizerResult {
  Configuration best;
  double value = 0.0;
  int restarts = 0;
  int best_restart = 0;
  std::vector<RestartRecord> trace;
  double start_value = 0.0;  ///< local_refine: objective at the starting configuration
  double wall_time = 0.0;  ///< seconds; not part of the deterministic output
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
};

/// Maximizes f from x0 with an axis-aligned initial simplex of edge `step`.
/// Stops when both the simplex diameter (max norm) is below xtol and the
/// value spread below ftol, or after max_iterations.
NelderMeadResult nelder_mead_maximize(const std::function<double(std::span<const double>)>& f,
                                      std::vector<double> x0, double step, int max_iterations, double xtol,
                                      double ftol);

/// Multistart search over gauge-fixed K-point configurations. Restart i
/// starts from uniform random points drawn with stream_seed(seed, i).
/// Restarts run in parallel; the best value wins, ties go to the lower index.
OptimizerResult optimize(int k, const Objective& obj, const OptimizerConfig& config = {});

/// Serial reference of optimize; identical result.
OptimizerResult optimize_serial(int k, const Objective& obj, const OptimizerConfig& config = {});

/// One search from c0 with a 0.01 rad initial simplex, repeated from its own
/// optimum until the value stops improving.
OptimizerResult local_refine(const Configuration& c0, const Objective& obj, const OptimizerConfig& config = {});

/// Whether two point sets agree up to a rotation, vertex by vertex within tol.
bool congruent_by_rotation(std::span<const Point> a, std::span<const Point> b, double tol);

enum class SweepFamily {
  BermanHanes,    ///< parameter is theta
  BipyramidApex,  ///< parameter is the polar angle of the upper apex; needs k
};

struct SweepTable {
  std::vector<std::string> columns;  ///< parameter name first
  std::vector<std::vector<double>> rows;
  /// Per functional column: grid index of the maximum and whether the column
  /// increases monotonically along the grid.
  std::vector<std::size_t> argmax;
  std::vector<bool> increasing;
};

std::vector<Point> sweep_points(SweepFamily family, double parameter, int k = 5);

SweepTable sweep(SweepFamily family, std::span<const double> grid, std::span<const Objective> functionals, int k = 5);

struct CounterexampleSummary {
  SweepTable table;
  double theta_star = 0.0;
  double surface_at_theta_star = 0.0;
  double surface_at_062 = 0.0;
  double volume_at_theta_star = 0.0;
  double volume_at_062 = 0.0;
  /// Central difference of volume at theta*, step 1e-5.
  double dvolume_dtheta = 0.0;
  double dsurface_dtheta = 0.0;
};

/// The 8-vertex family over theta in [0.58, 0.64] step 0.002 with columns
/// theta, volume, surface, s_p for p in {0.25, 0.5, 0.75}.
CounterexampleSummary counterexample();

}  // namespace conevol
