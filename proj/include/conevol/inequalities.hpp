#pragma once

#include "conevol/error.hpp"
#include "conevol/functionals.hpp"
#include "conevol/polytope.hpp"
#include "conevol/weights.hpp"

#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace conevol {

enum class Direction { LessEqual, GreaterEqual };

std::string_view to_string(Direction d);

/// Satisfaction is tested at 1e-9 * max(1, |rhs|), equality at
/// kEqualityTol * max(1, |rhs|).
inline constexpr double kSatisfyTol = 1e-9;

/// One evaluated inequality lhs <= rhs (or >=).
struct BoundReport {
  std::string tag;
  double lhs = 0.0;
  double rhs = 0.0;
  Direction direction = Direction::LessEqual;
  bool satisfied = false;
  double slack = 0.0;
  bool equality = false;
  bool expected_equality = false;
  /// Reports of uncorrected formula variants are kept for comparison
  /// but do not count as violations.
  bool gating = true;
  std::string notes;
};

BoundReport make_report(std::string tag, double lhs, double rhs, Direction dir, bool expected_equality,
                        std::string notes = {});

/// pi k / (6 (k - 2)), k >= 3.
double omega(int k);

/// Combinatorial and metric regularity of a 3-polytope: equal facet areas,
/// equal edge lengths and equal dihedral angles, each to relative spread
/// kEqualityTol.
bool is_regular_3d(const Polytope& q);

/// All pairwise vertex distances equal to relative spread kEqualityTol.
bool is_regular_simplex(const Polytope& q);

/// Insphere whose center is the origin within kEqualityTol.
bool incenter_at_origin(const Polytope& q);

bool is_equiareal(const Polytope& q);

enum class JensenVariant { Height, InFacet };

/// Jensen bound on the weighted cone-volume functional.
///   Height:  S_w(Q)    vs w(mean height) * S_1(Q)
///   InFacet: S^in_w(Q) vs w(mean facet area) * H_Q
/// The direction is <= for concave and >= for convex weights.
BoundReport check_jensen(const Polytope& q, const WeightFunction& w, JensenVariant variant);

/// Upper bounds for inscribed simplices and concave increasing weights, with
/// equality exactly for the regular simplex. Throws NotInscribed and
/// UsageError for a weight of the wrong class.
std::pair<BoundReport, BoundReport> check_simplex(const Polytope& t, const WeightFunction& w);

/// R/r >= n for simplices (any n); for n == 3 also the two shell bounds
/// R/r >= tan(pi f/2e) tan(pi v/2e) and R/r >= sqrt(3) tan(omega_v).
std::vector<BoundReport> check_euler_shell(const Polytope& q);

/// Planar bound S_w(Q) <= 2 K R sin(pi/K) w(R cos(pi/K)) for polygons with an
/// incircle. Throws NoInsphere.
BoundReport check_polygon(const Polytope& q, const WeightFunction& w);

enum class FejesToth {
  SurfaceLowerVef,
  SurfaceLowerF,
  SurfaceUpperV,
  SurfaceUpperFoot,
  VolumeUpperV,
  VolumeUpperVLiteral,
  VolumeUpperVef,
  VolumeLowerVef,
  VolumeLowerVefLiteral,
  VolumeLowerF,
};

inline constexpr FejesToth kAllFejesToth[] = {
    FejesToth::SurfaceLowerVef, FejesToth::SurfaceLowerF,         FejesToth::SurfaceUpperV,
    FejesToth::SurfaceUpperFoot, FejesToth::VolumeUpperV,         FejesToth::VolumeUpperVLiteral,
    FejesToth::VolumeUpperVef,  FejesToth::VolumeLowerVef,        FejesToth::VolumeLowerVefLiteral,
    FejesToth::VolumeLowerF,
};

std::string_view to_string(FejesToth which);

/// Classical surface and volume bounds in terms of v, e, f, r(Q) and R(Q).
/// The *Literal variants evaluate the uncorrected forms and are
/// non-gating. SurfaceUpperFoot throws FootConditionViolated.
BoundReport fejes_toth_bound(const Polytope& q, FejesToth which);

/// Every bound above; SurfaceUpperFoot is skipped when the foot condition
/// fails.
std::vector<BoundReport> fejes_toth_bounds(const Polytope& q);

enum class R3Weighted { UpperV, UpperFoot, LowerVef, LowerF };

std::string_view to_string(R3Weighted which);

/// Weighted surface bounds for 3-polytopes with an insphere. Upper variants
/// need a concave increasing weight, lower variants a convex one (UsageError
/// otherwise). Throws NoInsphere and FootConditionViolated.
BoundReport check_r3_weighted(const Polytope& q, const WeightFunction& w, R3Weighted which);

enum class CurvatureReading {
  Normalized,  ///< M_w vs (1/2) w(mean angle) Lambda, exact for affine w
  Literal,     ///< M_w vs w(mean angle) Lambda, non-gating
};

BoundReport check_edge_curvature_bound(const Polytope& q, const WeightFunction& w,
                                       AngleConvention conv = AngleConvention::Exterior,
                                       CurvatureReading reading = CurvatureReading::Normalized);

/// Hoelder interpolation S_p <= S_0^{1-p} S_1^p, p in [0, 1].
BoundReport check_littlewood(const Polytope& q, double p);

struct BipyramidShape {
  std::size_t apex_a = 0;
  std::size_t apex_b = 0;
  std::vector<std::size_t> equator;
};

/// Two non-adjacent vertices each joined to all K-2 others, all facets
/// triangles. Returns nothing for anything else.
std::optional<BipyramidShape> detect_bipyramid(const Polytope& q);

/// S_p(Q) <= 2m sin(pi/m) cos(pi/m)^{1-p} (1 + cos^2(pi/m))^{p/2}, m = K-2,
/// for inscribed bipyramids. Equality is expected for antipodal apexes over a
/// regular equatorial (K-2)-gon. Throws NotBipyramid and NotInscribed.
BoundReport check_bipyramid(const Polytope& q, double p);

double bipyramid_sp_bound(int k, double p);

enum class Check { Jensen, Simplex, EulerShell, Polygon, FejesToth, R3Weighted, EdgeCurvature, Littlewood, Bipyramid };

inline constexpr Check kAllChecks[] = {Check::Jensen,     Check::Simplex,       Check::EulerShell,
                                       Check::Polygon,    Check::FejesToth,     Check::R3Weighted,
                                       Check::EdgeCurvature, Check::Littlewood, Check::Bipyramid};

std::string_view to_string(Check c);

/// Comma-separated check names or "all". Throws UsageError.
struct CheckSelection {
  std::vector<Check> checks;
  bool all = false;
};
CheckSelection parse_checks(std::string_view text);

struct NamedPolytope {
  std::string name;
  Polytope polytope;
};

struct SuiteOptions {
  CheckSelection selection{{std::begin(kAllChecks), std::end(kAllChecks)}, true};
  AngleConvention convention = AngleConvention::Exterior;
  std::vector<double> littlewood_p{0.0, 0.25, 0.5, 0.75, 1.0};
};

struct SuiteEntry {
  std::size_t shape_index = 0;
  std::string shape;
  std::string weight;  ///< empty for weight-independent checks
  Check check = Check::Jensen;
  BoundReport report;
};

struct SuiteError {
  std::size_t shape_index = 0;
  std::string shape;
  std::string weight;
  Check check = Check::Jensen;
  ErrorCode code{};
  std::string message;
};

struct SuiteResult {
  std::vector<SuiteEntry> entries;
  std::vector<SuiteError> errors;

  /// Gating reports with satisfied == false.
  std::size_t violations() const;
};

/// Runs the selected checks over shapes x weights. With `selection.all` only
/// applicable checks run; explicitly requested checks run unconditionally and
/// their failures land in `errors`. Entries are ordered by (shape, weight,
/// check) whatever the execution order. The shapes x weights x checks tasks
/// are spread over OpenMP threads.
SuiteResult run_suite(std::span<const NamedPolytope> shapes, std::span<const WeightFunction> weights,
                      const SuiteOptions& options = {});

/// Serial reference of run_suite; identical output.
SuiteResult run_suite_serial(std::span<const NamedPolytope> shapes, std::span<const WeightFunction> weights,
                             const SuiteOptions& options = {});

}  // namespace conevol
