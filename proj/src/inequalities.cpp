#include "conevol/inequalities.hpp"

#include "conevol/balls.hpp"
#include "conevol/measures.hpp"
#include "conevol/shapes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <set>

namespace conevol {

std::string_view to_string(Direction d) { return d == Direction::LessEqual ? "<=" : ">="; }

BoundReport make_report(std::string tag, double lhs, double rhs, Direction dir, bool expected_equality,
                        std::string notes) {
  BoundReport r;
  r.tag = std::move(tag);
  r.lhs = lhs;
  r.rhs = rhs;
  r.direction = dir;
  const double scale = std::max(1.0, std::abs(rhs));
  r.satisfied = dir == Direction::LessEqual ? lhs <= rhs + kSatisfyTol * scale : lhs >= rhs - kSatisfyTol * scale;
  r.slack = std::abs(rhs - lhs);
  r.equality = r.slack <= kEqualityTol * scale;
  r.expected_equality = expected_equality;
  r.notes = std::move(notes);
  return r;
}

double omega(int k) {
  if (k < 3) throw Error(ErrorCode::InadmissibleParams, "omega needs k >= 3");
  return M_PI * k / (6.0 * (k - 2));
}

namespace {

template <class It, class F>
bool equal_spread(It first, It last, F value) {
  if (first == last) return true;
  double lo = value(*first), hi = lo;
  for (It it = first; it != last; ++it) {
    lo = std::min(lo, value(*it));
    hi = std::max(hi, value(*it));
  }
  return hi - lo <= kEqualityTol * std::max(std::abs(hi), 1e-300);
}

bool inscribed(const Polytope& q) {
  return std::all_of(q.vertices.begin(), q.vertices.end(),
                     [](const Point& v) { return std::abs(v.norm() - 1.0) <= 1e-9; });
}

void require_inscribed(const Polytope& q) {
  if (!inscribed(q)) throw Error(ErrorCode::NotInscribed, "vertices are not on the unit sphere");
}

void require_dim3(const Polytope& q, const char* what) {
  if (q.dim != 3) throw Error(ErrorCode::UnsupportedFaceDim, std::string(what) + " needs a 3-polytope");
}

Direction jensen_direction(const WeightFunction& w) {
  return w.shape() == Shape::Convex ? Direction::GreaterEqual : Direction::LessEqual;
}

bool concave_nondecreasing(const WeightFunction& w) {
  return w.is_concave() && (w.is_increasing() || (w.is_affine() && w.monotonicity() == Monotonicity::Neither));
}

double circumradius(const Polytope& q) { return circumball(q.vertices).radius; }

int num_v(const Polytope& q) { return static_cast<int>(q.vertices.size()); }
int num_e(const Polytope& q) { return static_cast<int>(q.edges.size()); }
int num_f(const Polytope& q) { return static_cast<int>(q.facets.size()); }

bool is_simple(const Polytope& q) { return 2 * num_e(q) == 3 * num_v(q); }
bool is_simplicial(const Polytope& q) { return 2 * num_e(q) == 3 * num_f(q); }

bool is_regular_polygon(const Polytope& q) {
  const Ball b = circumball(q.vertices);
  return equal_spread(q.facets.begin(), q.facets.end(), [](const Facet& f) { return f.area; }) &&
         equal_spread(q.vertices.begin(), q.vertices.end(), [&](const Point& v) { return (v - b.center).norm(); });
}

struct Vef {
  double v, e, f, x, y;
};

Vef vef(const Polytope& q) {
  Vef c{double(num_v(q)), double(num_e(q)), double(num_f(q)), 0.0, 0.0};
  c.x = M_PI * c.f / (2.0 * c.e);
  c.y = M_PI * c.v / (2.0 * c.e);
  return c;
}

double sq(double x) { return x * x; }
double cot(double x) { return 1.0 / std::tan(x); }

double surface_lower_vef_coeff(const Vef& c) {
  return c.e * std::sin(M_PI * c.f / c.e) * (sq(std::tan(c.x)) * sq(std::tan(c.y)) - 1.0);
}
double surface_lower_f_coeff(const Vef& c) {
  const double w = omega(static_cast<int>(c.f));
  return 6.0 * (c.f - 2.0) * std::tan(w) * (4.0 * sq(std::sin(w)) - 1.0);
}
double surface_upper_v_coeff(const Vef& c) {
  const double w = omega(static_cast<int>(c.v));
  return 1.5 * std::sqrt(3.0) * (c.v - 2.0) * (1.0 - sq(cot(w)) / 3.0);
}
double surface_upper_foot_coeff(const Vef& c) {
  return c.e * std::sin(M_PI * c.f / c.e) * (1.0 - sq(cot(c.x)) * sq(cot(c.y)));
}

}  // namespace

bool is_regular_3d(const Polytope& q) {
  if (q.dim != 3) return false;
  return equal_spread(q.facets.begin(), q.facets.end(), [](const Facet& f) { return f.area; }) &&
         equal_spread(q.edges.begin(), q.edges.end(), [](const Edge& e) { return e.length; }) &&
         equal_spread(q.edges.begin(), q.edges.end(), [](const Edge& e) { return e.dihedral; });
}

bool is_regular_simplex(const Polytope& q) {
  std::vector<double> d;
  for (std::size_t i = 0; i < q.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < q.vertices.size(); ++j) d.push_back((q.vertices[i] - q.vertices[j]).norm());
  return equal_spread(d.begin(), d.end(), [](double x) { return x; });
}

bool incenter_at_origin(const Polytope& q) {
  const ChebyshevBall in = chebyshev_center(q);
  return in.has_insphere && in.center.norm() <= kEqualityTol;
}

bool is_equiareal(const Polytope& q) {
  return equal_spread(q.facets.begin(), q.facets.end(), [](const Facet& f) { return f.area; });
}

BoundReport check_jensen(const Polytope& q, const WeightFunction& w, JensenVariant variant) {
  const Direction dir = jensen_direction(w);
  if (variant == JensenVariant::Height) {
    const auto hs = facet_heights(q);
    double area = 0.0, weighted = 0.0, lhs = 0.0;
    for (const auto& [h, a] : hs) {
      area += a;
      weighted += h * a;
      lhs += w(h) * a;
    }
    const double rhs = w(weighted / area) * area;
    return make_report("jensen-height", lhs, rhs, dir, w.is_affine() || incenter_at_origin(q));
  }
  const ChebyshevBall in = chebyshev_center(q);
  if (!in.has_insphere) throw Error(ErrorCode::NoInsphere, "polytope has no insphere");
  double area = 0.0, height_sum = 0.0, lhs = 0.0;
  for (const auto& f : q.facets) {
    const double d = f.offset - f.normal.dot(in.center);
    area += f.area;
    height_sum += d;
    lhs += d * w(f.area);
  }
  const double rhs = w(area / static_cast<double>(q.facets.size())) * height_sum;
  return make_report("jensen-in-facet", lhs, rhs, dir, w.is_affine() || is_equiareal(q));
}

std::pair<BoundReport, BoundReport> check_simplex(const Polytope& t, const WeightFunction& w) {
  const int n = t.dim;
  if (t.facets.size() != static_cast<std::size_t>(n) + 1 || t.vertices.size() != static_cast<std::size_t>(n) + 1) {
    throw Error(ErrorCode::InadmissibleParams, "polytope is not a simplex");
  }
  require_inscribed(t);
  if (!concave_nondecreasing(w)) throw Error(ErrorCode::UsageError, w.spec() + " is not concave increasing");

  const double smax = regular_simplex_surface(n);
  const double nn = n;
  const bool regular = is_regular_simplex(t);
  BoundReport height = make_report("simplex-height", s_weighted(t, w), smax * w(1.0 / nn), Direction::LessEqual,
                                   regular);
  const double in_arg = std::pow(nn + 1.0, (nn - 1.0) / 2.0) / (std::pow(nn, nn / 2.0 - 1.0) * std::tgamma(nn));
  BoundReport in = make_report("simplex-in-facet", s_weighted_in(t, w), (nn + 1.0) / nn * w(in_arg),
                               Direction::LessEqual, regular);
  return {std::move(height), std::move(in)};
}

std::vector<BoundReport> check_euler_shell(const Polytope& q) {
  const double big_r = circumradius(q);
  const double r = chebyshev_center(q).radius;
  const double ratio = big_r / r;
  std::vector<BoundReport> out;
  const bool simplex = q.facets.size() == static_cast<std::size_t>(q.dim) + 1;
  if (simplex) out.push_back(make_report("euler", ratio, q.dim, Direction::GreaterEqual, is_regular_simplex(q)));
  if (q.dim == 3) {
    const Vef c = vef(q);
    const bool regular = is_regular_3d(q);
    out.push_back(make_report("shell-vef", ratio, std::tan(c.x) * std::tan(c.y), Direction::GreaterEqual, regular));
    out.push_back(make_report("shell-v", ratio, std::sqrt(3.0) * std::tan(omega(num_v(q))), Direction::GreaterEqual,
                              regular && is_simplicial(q)));
  }
  return out;
}

BoundReport check_polygon(const Polytope& q, const WeightFunction& w) {
  if (q.dim != 2) throw Error(ErrorCode::UnsupportedFaceDim, "planar bound needs a polygon");
  if (!concave_nondecreasing(w)) throw Error(ErrorCode::UsageError, w.spec() + " is not concave increasing");
  const ChebyshevBall in = chebyshev_center(q);
  if (!in.has_insphere) throw Error(ErrorCode::NoInsphere, "polygon has no incircle");
  const double k = num_v(q);
  const double big_r = circumradius(q);
  const double rhs = 2.0 * k * big_r * std::sin(M_PI / k) * w(big_r * std::cos(M_PI / k));
  const bool expected = is_regular_polygon(q) && in.center.norm() <= kEqualityTol;
  return make_report("polygon", s_weighted(q, w), rhs, Direction::LessEqual, expected);
}

std::string_view to_string(FejesToth which) {
  switch (which) {
    case FejesToth::SurfaceLowerVef: return "surface-lower-vef";
    case FejesToth::SurfaceLowerF: return "surface-lower-f";
    case FejesToth::SurfaceUpperV: return "surface-upper-v";
    case FejesToth::SurfaceUpperFoot: return "surface-upper-foot";
    case FejesToth::VolumeUpperV: return "volume-upper-v";
    case FejesToth::VolumeUpperVLiteral: return "volume-upper-v-uncorrected";
    case FejesToth::VolumeUpperVef: return "volume-upper-vef";
    case FejesToth::VolumeLowerVef: return "volume-lower-vef";
    case FejesToth::VolumeLowerVefLiteral: return "volume-lower-vef-uncorrected";
    case FejesToth::VolumeLowerF: return "volume-lower-f";
  }
  return "?";
}

BoundReport fejes_toth_bound(const Polytope& q, FejesToth which) {
  require_dim3(q, "this bound");
  const Vef c = vef(q);
  const double big_r = circumradius(q);
  const double r = chebyshev_center(q).radius;
  const bool regular = is_regular_3d(q);
  const bool simple_regular = regular && is_simple(q);
  const bool simplicial_regular = regular && is_simplicial(q);
  const std::string tag(to_string(which));
  const auto S = [&] { return surface_area(q); };
  const auto V = [&] { return volume(q); };
  using D = Direction;

  switch (which) {
    case FejesToth::SurfaceLowerVef:
      return make_report(tag, S(), surface_lower_vef_coeff(c) * r * r, D::GreaterEqual, regular);
    case FejesToth::SurfaceLowerF:
      return make_report(tag, S(), surface_lower_f_coeff(c) * r * r, D::GreaterEqual, simple_regular);
    case FejesToth::SurfaceUpperV:
      return make_report(tag, S(), surface_upper_v_coeff(c) * big_r * big_r, D::LessEqual, simplicial_regular);
    case FejesToth::SurfaceUpperFoot:
      if (!foot_condition(q)) throw Error(ErrorCode::FootConditionViolated, "foot condition fails");
      return make_report(tag, S(), surface_upper_foot_coeff(c) * big_r * big_r, D::LessEqual, regular);
    case FejesToth::VolumeUpperV: {
      const double ct = cot(omega(num_v(q)));
      return make_report(tag, V(), (c.v - 2.0) * ct * (3.0 - ct * ct) / 6.0 * std::pow(big_r, 3), D::LessEqual,
                         simplicial_regular);
    }
    case FejesToth::VolumeUpperVLiteral: {
      const double ct = cot(omega(num_v(q)));
      BoundReport rep = make_report(tag, V(), 0.5 * (c.v - 2.0) * ct * (1.0 - ct * ct) * std::pow(big_r, 3),
                                    D::LessEqual, simplicial_regular,
                                    "uncorrected form; volume-upper-v is the calibrated one");
      rep.gating = false;
      return rep;
    }
    case FejesToth::VolumeUpperVef: {
      const double rhs = 2.0 * c.e / 3.0 * sq(std::cos(c.x)) * cot(c.y) *
                         (1.0 - sq(cot(c.x)) * sq(cot(c.y))) * std::pow(big_r, 3);
      return make_report(tag, V(), rhs, D::LessEqual, regular);
    }
    case FejesToth::VolumeLowerVef:
      return make_report(tag, V(), surface_lower_vef_coeff(c) / 3.0 * std::pow(r, 3), D::GreaterEqual, regular);
    case FejesToth::VolumeLowerVefLiteral: {
      const double rhs = c.e / 3.0 * std::sin(M_PI * c.e / c.f) * (sq(std::tan(c.x)) * sq(std::tan(c.y)) - 1.0) *
                         std::pow(r, 3);
      BoundReport rep = make_report(tag, V(), rhs, D::GreaterEqual, regular,
                                    "uncorrected form; volume-lower-vef is the calibrated one");
      rep.gating = false;
      return rep;
    }
    case FejesToth::VolumeLowerF: {
      const double w = omega(num_f(q));
      return make_report(tag, V(), (c.f - 2.0) * std::sin(2.0 * w) * (3.0 * sq(std::tan(w)) - 1.0) * std::pow(r, 3),
                         D::GreaterEqual, simple_regular);
    }
  }
  throw Error(ErrorCode::InadmissibleParams, "unknown bound");
}

std::vector<BoundReport> fejes_toth_bounds(const Polytope& q) {
  require_dim3(q, "these bounds");
  const bool foot = foot_condition(q);
  std::vector<BoundReport> out;
  for (FejesToth which : kAllFejesToth) {
    if (which == FejesToth::SurfaceUpperFoot && !foot) continue;
    out.push_back(fejes_toth_bound(q, which));
  }
  return out;
}

std::string_view to_string(R3Weighted which) {
  switch (which) {
    case R3Weighted::UpperV: return "weighted-upper-v";
    case R3Weighted::UpperFoot: return "weighted-upper-foot";
    case R3Weighted::LowerVef: return "weighted-lower-vef";
    case R3Weighted::LowerF: return "weighted-lower-f";
  }
  return "?";
}

BoundReport check_r3_weighted(const Polytope& q, const WeightFunction& w, R3Weighted which) {
  require_dim3(q, "this bound");
  const bool upper = which == R3Weighted::UpperV || which == R3Weighted::UpperFoot;
  if (upper && !concave_nondecreasing(w)) {
    throw Error(ErrorCode::UsageError, w.spec() + " is not concave increasing; upper bounds need one");
  }
  if (!upper && !w.is_convex()) throw Error(ErrorCode::UsageError, w.spec() + " is not convex; lower bounds need one");

  const ChebyshevBall in = chebyshev_center(q);
  if (!in.has_insphere) throw Error(ErrorCode::NoInsphere, "polytope has no insphere");
  const Vef c = vef(q);
  const double big_r = circumradius(q);
  const double r = in.radius;
  const double lhs = s_weighted(q, w);
  const bool regular = is_regular_3d(q);
  const bool centred = w.is_affine() || in.center.norm() <= kEqualityTol;
  const std::string tag(to_string(which));

  switch (which) {
    case R3Weighted::UpperV: {
      const double ct = cot(omega(num_v(q)));
      const double rhs = surface_upper_v_coeff(c) * big_r * big_r * w(big_r * ct / std::sqrt(3.0));
      return make_report(tag, lhs, rhs, Direction::LessEqual, regular && is_simplicial(q) && centred);
    }
    case R3Weighted::UpperFoot: {
      if (!foot_condition(q)) throw Error(ErrorCode::FootConditionViolated, "foot condition fails");
      const double rhs = surface_upper_foot_coeff(c) * big_r * big_r * w(big_r * cot(c.x) * cot(c.y));
      return make_report(tag, lhs, rhs, Direction::LessEqual, regular && centred);
    }
    case R3Weighted::LowerVef:
      return make_report(tag, lhs, surface_lower_vef_coeff(c) * r * r * w(r), Direction::GreaterEqual,
                         regular && centred);
    case R3Weighted::LowerF:
      return make_report(tag, lhs, surface_lower_f_coeff(c) * r * r * w(r), Direction::GreaterEqual,
                         regular && is_simple(q) && centred);
  }
  throw Error(ErrorCode::InadmissibleParams, "unknown bound");
}

BoundReport check_edge_curvature_bound(const Polytope& q, const WeightFunction& w, AngleConvention conv,
                                       CurvatureReading reading) {
  require_dim3(q, "edge curvature");
  const auto& edges = edges_with_angles(q);
  double total = 0.0, weighted = 0.0;
  for (const auto& e : edges) {
    total += e.length;
    weighted += e.length * edge_angle(e, conv);
  }
  const double lhs = edge_curvature_weighted(q, w, conv, EdgeWeighting::Angle);
  const double factor = reading == CurvatureReading::Normalized ? 0.5 : 1.0;
  const double rhs = factor * w(weighted / total) * total;
  const bool equal_angles = equal_spread(edges.begin(), edges.end(), [](const Edge& e) { return e.dihedral; });
  std::string notes = "convention=" + std::string(to_string(conv));
  if (reading == CurvatureReading::Literal) notes += "; rhs without the 1/2 of the weighted sum";
  BoundReport rep = make_report(reading == CurvatureReading::Normalized ? "edge-curvature" : "edge-curvature-unhalved",
                                lhs, rhs, jensen_direction(w), w.is_affine() || equal_angles, std::move(notes));
  if (reading == CurvatureReading::Literal) {
    rep.gating = false;
    rep.expected_equality = false;
  }
  return rep;
}

BoundReport check_littlewood(const Polytope& q, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::InadmissibleParams, "p must lie in [0, 1]");
  const double s0 = s_p(q, 0.0);
  const double s1 = s_p(q, 1.0);
  const double rhs = std::pow(s0, 1.0 - p) * std::pow(s1, p);
  const bool expected = p == 0.0 || p == 1.0 || incenter_at_origin(q);
  char buf[32];
  std::snprintf(buf, sizeof buf, "p=%.17g", p);
  return make_report("littlewood", s_p(q, p), rhs, Direction::LessEqual, expected, buf);
}

std::optional<BipyramidShape> detect_bipyramid(const Polytope& q) {
  const std::size_t k = q.vertices.size();
  if (q.dim != 3 || k < 5 || q.facets.size() != 2 * (k - 2)) return std::nullopt;
  for (const auto& f : q.facets)
    if (f.vertex_indices.size() != 3) return std::nullopt;
  std::vector<std::set<std::size_t>> adj(k);
  for (const auto& e : q.edges) {
    adj[e.a].insert(e.b);
    adj[e.b].insert(e.a);
  }
  for (std::size_t a = 0; a < k; ++a) {
    if (adj[a].size() != k - 2) continue;
    for (std::size_t b = a + 1; b < k; ++b) {
      if (adj[b].size() != k - 2 || adj[a].count(b)) continue;
      BipyramidShape s{a, b, {}};
      for (std::size_t i = 0; i < k; ++i)
        if (i != a && i != b) s.equator.push_back(i);
      if (std::all_of(s.equator.begin(), s.equator.end(), [&](std::size_t i) { return adj[b].count(i) > 0; })) {
        return s;
      }
    }
  }
  return std::nullopt;
}

double bipyramid_sp_bound(int k, double p) {
  if (k < 5) throw Error(ErrorCode::InadmissibleParams, "bipyramid needs K >= 5");
  const double m = k - 2;
  const double c = std::cos(M_PI / m);
  return 2.0 * m * std::sin(M_PI / m) * std::pow(c, 1.0 - p) * std::pow(1.0 + c * c, p / 2.0);
}

BoundReport check_bipyramid(const Polytope& q, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::InadmissibleParams, "p must lie in [0, 1]");
  const auto shape = detect_bipyramid(q);
  if (!shape) throw Error(ErrorCode::NotBipyramid, "polytope is not a bipyramid");
  require_inscribed(q);

  const Point& a = q.vertices[shape->apex_a];
  const Point& b = q.vertices[shape->apex_b];
  bool expected = (a + b).norm() <= kEqualityTol;
  if (expected) {
    const Eigen::Vector3d axis = a;
    const Eigen::Vector3d u = axis.unitOrthogonal();
    const Eigen::Vector3d v = axis.cross(u);
    std::vector<double> angles;
    for (std::size_t i : shape->equator) {
      const Eigen::Vector3d x = q.vertices[i];
      if (std::abs(x.dot(axis)) > kEqualityTol) expected = false;
      angles.push_back(std::atan2(x.dot(v), x.dot(u)));
    }
    std::sort(angles.begin(), angles.end());
    std::vector<double> gaps;
    for (std::size_t i = 0; i < angles.size(); ++i) {
      const double next = i + 1 < angles.size() ? angles[i + 1] : angles[0] + 2.0 * M_PI;
      gaps.push_back(next - angles[i]);
    }
    expected = expected && equal_spread(gaps.begin(), gaps.end(), [](double g) { return g; });
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "p=%.17g", p);
  return make_report("bipyramid", s_p(q, p), bipyramid_sp_bound(num_v(q), p), Direction::LessEqual, expected, buf);
}

std::string_view to_string(Check c) {
  switch (c) {
    case Check::Jensen: return "jensen";
    case Check::Simplex: return "simplex";
    case Check::EulerShell: return "euler-shell";
    case Check::Polygon: return "polygon";
    case Check::FejesToth: return "fejes-toth";
    case Check::R3Weighted: return "r3-weighted";
    case Check::EdgeCurvature: return "edge-curvature";
    case Check::Littlewood: return "littlewood";
    case Check::Bipyramid: return "bipyramid";
  }
  return "?";
}

CheckSelection parse_checks(std::string_view text) {
  if (text == "all") return {{std::begin(kAllChecks), std::end(kAllChecks)}, true};
  CheckSelection sel;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const std::string_view name = text.substr(start, comma - start);
    const auto it = std::find_if(std::begin(kAllChecks), std::end(kAllChecks),
                                 [&](Check c) { return to_string(c) == name; });
    if (it == std::end(kAllChecks)) throw Error(ErrorCode::UsageError, "unknown check '" + std::string(name) + "'");
    if (std::find(sel.checks.begin(), sel.checks.end(), *it) == sel.checks.end()) sel.checks.push_back(*it);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  std::sort(sel.checks.begin(), sel.checks.end());
  return sel;
}

std::size_t SuiteResult::violations() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const SuiteEntry& e) {
    return e.report.gating && !e.report.satisfied;
  }));
}

namespace {

bool weight_dependent(Check c) {
  return c == Check::Jensen || c == Check::Simplex || c == Check::Polygon || c == Check::R3Weighted ||
         c == Check::EdgeCurvature;
}

struct Task {
  std::size_t shape = 0;
  std::optional<std::size_t> weight;
  Check check = Check::Jensen;
};

struct TaskOutput {
  std::vector<BoundReport> reports;
  std::vector<std::pair<ErrorCode, std::string>> errors;
};

// Geometric facts a task needs for applicability, computed lazily so that a
// failing predicate (e.g. an LP failure) is reported as that task's error.
struct Facts {
  const Polytope& q;
  bool origin_interior() const { return is_strictly_interior(q, Point::Zero(q.dim)); }
  bool insphere() const { return chebyshev_center(q).has_insphere; }
  bool simplex() const { return q.facets.size() == static_cast<std::size_t>(q.dim) + 1; }
};

TaskOutput run_task(const Polytope& q, const WeightFunction* w, Check check, const SuiteOptions& opt) {
  TaskOutput out;
  const bool all = opt.selection.all;
  auto attempt = [&](const std::function<void()>& fn) {
    try {
      fn();
    } catch (const Error& e) {
      out.errors.emplace_back(e.code(), e.what());
    }
  };
  auto push = [&](BoundReport r) { out.reports.push_back(std::move(r)); };
  const Facts facts{q};

  switch (check) {
    case Check::Jensen:
      attempt([&] {
        if (!all || facts.origin_interior()) push(check_jensen(q, *w, JensenVariant::Height));
      });
      attempt([&] {
        if (facts.insphere()) push(check_jensen(q, *w, JensenVariant::InFacet));
      });
      break;
    case Check::Simplex:
      attempt([&] {
        if (all && !(facts.simplex() && inscribed(q) && concave_nondecreasing(*w) && facts.origin_interior())) return;
        auto [a, b] = check_simplex(q, *w);
        push(std::move(a));
        push(std::move(b));
      });
      break;
    case Check::EulerShell:
      attempt([&] {
        if (all && !(facts.simplex() || q.dim == 3)) return;
        for (auto& r : check_euler_shell(q)) push(std::move(r));
      });
      break;
    case Check::Polygon:
      attempt([&] {
        if (all && !(q.dim == 2 && concave_nondecreasing(*w) && facts.insphere() && facts.origin_interior())) return;
        push(check_polygon(q, *w));
      });
      break;
    case Check::FejesToth:
      attempt([&] {
        if (all && q.dim != 3) return;
        for (auto& r : fejes_toth_bounds(q)) push(std::move(r));
      });
      break;
    case Check::R3Weighted:
      attempt([&] {
        if (all && !(q.dim == 3 && facts.insphere() && facts.origin_interior())) return;
        const bool foot = foot_condition(q);
        if (concave_nondecreasing(*w)) {
          push(check_r3_weighted(q, *w, R3Weighted::UpperV));
          if (foot) push(check_r3_weighted(q, *w, R3Weighted::UpperFoot));
        }
        if (w->is_convex()) {
          push(check_r3_weighted(q, *w, R3Weighted::LowerVef));
          push(check_r3_weighted(q, *w, R3Weighted::LowerF));
        }
        if (!all && !concave_nondecreasing(*w) && !w->is_convex()) {
          throw Error(ErrorCode::UsageError, w->spec() + " fits neither the upper nor the lower bounds");
        }
      });
      break;
    case Check::EdgeCurvature:
      attempt([&] {
        if (all && q.dim != 3) return;
        push(check_edge_curvature_bound(q, *w, opt.convention, CurvatureReading::Normalized));
        push(check_edge_curvature_bound(q, *w, opt.convention, CurvatureReading::Literal));
      });
      break;
    case Check::Littlewood:
      attempt([&] {
        if (all && !facts.origin_interior()) return;
        for (double p : opt.littlewood_p) push(check_littlewood(q, p));
      });
      break;
    case Check::Bipyramid:
      attempt([&] {
        if (all && !(detect_bipyramid(q) && inscribed(q) && facts.origin_interior())) return;
        for (double p : opt.littlewood_p) push(check_bipyramid(q, p));
      });
      break;
  }
  return out;
}

std::vector<Task> plan(std::size_t shapes, std::size_t weights, const SuiteOptions& opt) {
  std::vector<Task> tasks;
  for (std::size_t s = 0; s < shapes; ++s) {
    for (Check c : opt.selection.checks)
      if (!weight_dependent(c)) tasks.push_back({s, std::nullopt, c});
    for (std::size_t w = 0; w < weights; ++w)
      for (Check c : opt.selection.checks)
        if (weight_dependent(c)) tasks.push_back({s, w, c});
  }
  return tasks;
}

SuiteResult collect(std::span<const NamedPolytope> shapes, std::span<const WeightFunction> weights,
                    const std::vector<Task>& tasks, std::vector<TaskOutput>& outputs) {
  SuiteResult result;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const Task& t = tasks[i];
    const std::string& shape = shapes[t.shape].name;
    const std::string weight = t.weight ? weights[*t.weight].spec() : std::string();
    for (auto& r : outputs[i].reports) result.entries.push_back({t.shape, shape, weight, t.check, std::move(r)});
    for (auto& [code, msg] : outputs[i].errors) result.errors.push_back({t.shape, shape, weight, t.check, code, msg});
  }
  return result;
}

}  // namespace

SuiteResult run_suite_serial(std::span<const NamedPolytope> shapes, std::span<const WeightFunction> weights,
                             const SuiteOptions& options) {
  const auto tasks = plan(shapes.size(), weights.size(), options);
  std::vector<TaskOutput> outputs(tasks.size());
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const Task& t = tasks[i];
    outputs[i] = run_task(shapes[t.shape].polytope, t.weight ? &weights[*t.weight] : nullptr, t.check, options);
  }
  return collect(shapes, weights, tasks, outputs);
}

SuiteResult run_suite(std::span<const NamedPolytope> shapes, std::span<const WeightFunction> weights,
                      const SuiteOptions& options) {
  const auto tasks = plan(shapes.size(), weights.size(), options);
  std::vector<TaskOutput> outputs(tasks.size());
  const auto n = static_cast<std::int64_t>(tasks.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < n; ++i) {
    const Task& t = tasks[static_cast<std::size_t>(i)];
    outputs[static_cast<std::size_t>(i)] =
        run_task(shapes[t.shape].polytope, t.weight ? &weights[*t.weight] : nullptr, t.check, options);
  }
  return collect(shapes, weights, tasks, outputs);
}

}  // namespace conevol
