#include <doctest.h>

#include "conevol/balls.hpp"
#include "conevol/error.hpp"
#include "conevol/functionals.hpp"
#include "conevol/hull.hpp"
#include "conevol/inequalities.hpp"
#include "conevol/measures.hpp"
#include "conevol/shapes.hpp"

#include <cmath>
#include <numbers>

using namespace conevol;
using std::numbers::pi;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::UsageError;
}

Point p3(double x, double y, double z) {
  Point p(3);
  p << x, y, z;
  return p;
}

Point sph(double polar, double azimuth) {
  return p3(std::sin(polar) * std::cos(azimuth), std::sin(polar) * std::sin(azimuth), std::cos(polar));
}

Polytope platonic(Platonic s) { return generate(ShapeSpec::platonic(s)); }

constexpr Platonic kSolids[] = {Platonic::Tetrahedron, Platonic::Cube, Platonic::Octahedron, Platonic::Dodecahedron,
                                Platonic::Icosahedron};

Polytope box() {
  std::vector<Point> pts;
  for (int i = 0; i < 8; ++i) pts.push_back(p3(i & 1 ? 0.5 : -0.5, i & 2 ? 0.5 : -0.5, i & 4 ? 1.0 : -1.0));
  return convex_hull(pts, 3);
}

// Pentagon circumscribed about the unit circle, tangent at the given angles.
Polytope tangential_polygon(const std::vector<double>& tangents) {
  std::vector<Point> pts;
  const std::size_t k = tangents.size();
  for (std::size_t i = 0; i < k; ++i) {
    double a = tangents[i], b = tangents[(i + 1) % k];
    if (b < a) b += 2 * pi;
    const double mid = 0.5 * (a + b);
    const double d = 1.0 / std::cos(0.5 * (b - a));
    Point p(2);
    p << d * std::cos(mid), d * std::sin(mid);
    pts.push_back(p);
  }
  return convex_hull(pts, 2);
}

}  // namespace

TEST_CASE("omega") {
  CHECK(omega(3) == doctest::Approx(pi / 2));
  CHECK(omega(4) == doctest::Approx(pi / 3));
  CHECK(omega(6) == doctest::Approx(pi / 4));
  CHECK(omega(12) == doctest::Approx(pi / 5));
  for (int k = 3; k < 30; ++k) CHECK(omega(k + 1) < omega(k));
}

TEST_CASE("report bookkeeping") {
  auto r = make_report("x", 1.0, 1.0 + 5e-10, Direction::LessEqual, false);
  CHECK(r.satisfied);
  CHECK(r.equality);
  r = make_report("x", 1.0 + 2e-9, 1.0, Direction::LessEqual, false);
  CHECK_FALSE(r.satisfied);
  r = make_report("x", 2.0, 1.0, Direction::GreaterEqual, false);
  CHECK(r.satisfied);
  CHECK_FALSE(r.equality);
  CHECK(r.slack == doctest::Approx(1.0));
  r = make_report("x", 100.0, 100.0 + 5e-6, Direction::LessEqual, false);
  CHECK(r.equality);
}

TEST_CASE("jensen examples") {
  auto cube = platonic(Platonic::Cube);
  auto rep = check_jensen(cube, make_weight(weight::Power{0.5}), JensenVariant::Height);
  CHECK(rep.direction == Direction::LessEqual);
  CHECK(rep.slack < 1e-9);
  CHECK(rep.equality);
  CHECK(rep.expected_equality);

  auto q = random_inscribed(3, 10, 17);
  auto w = make_weight(weight::Power{0.5});
  rep = check_jensen(q, w, JensenVariant::Height);
  // brute-force oracle
  double lhs = 0, area = 0, hsum = 0;
  for (const auto& f : q.facets) {
    const double h = f.offset;
    lhs += std::sqrt(h) * f.area;
    area += f.area;
    hsum += h * f.area;
  }
  CHECK(rep.lhs == doctest::Approx(lhs).epsilon(1e-12));
  CHECK(rep.rhs == doctest::Approx(std::sqrt(hsum / area) * area).epsilon(1e-12));
  CHECK(rep.satisfied);
  CHECK_FALSE(rep.equality);

  auto conv = check_jensen(q, make_weight(weight::Exp{1}), JensenVariant::Height);
  CHECK(conv.direction == Direction::GreaterEqual);
  CHECK(conv.satisfied);
  CHECK(conv.lhs > conv.rhs);

  for (auto s : kSolids) {
    auto solid = platonic(s);
    for (const auto& wt : registry_weights()) {
      auto h = check_jensen(solid, wt, JensenVariant::Height);
      auto in = check_jensen(solid, wt, JensenVariant::InFacet);
      CHECK(h.expected_equality);
      CHECK(h.equality);
      CHECK(in.expected_equality);
      CHECK(in.equality);
    }
  }
  CHECK(code_of([] { check_jensen(box(), make_weight(weight::Power{0.5}), JensenVariant::InFacet); }) ==
        ErrorCode::NoInsphere);
}

TEST_CASE("jensen with power weights reproduces S_p") {
  auto q = random_inscribed(3, 14, 3);
  const double hbar = *summary(q).mean_height;
  for (double p : {0.0, 0.25, 0.5, 1.0}) {
    auto rep = check_jensen(q, make_weight(weight::Power{1 - p}), JensenVariant::Height);
    CHECK(rep.lhs == doctest::Approx(s_p(q, p)).epsilon(1e-12));
    CHECK(rep.rhs == doctest::Approx(std::pow(hbar, 1 - p) * surface_area(q)).epsilon(1e-12));
  }
}

TEST_CASE("simplex bounds") {
  auto t = generate(ShapeSpec::regular_simplex(3));
  auto [a, b] = check_simplex(t, make_weight(weight::Power{0.5}));
  CHECK(a.rhs == doctest::Approx(8.0 / 3.0).epsilon(1e-12));
  CHECK(a.equality);
  CHECK(b.equality);
  CHECK(a.expected_equality);

  auto pts = shape_points(ShapeSpec::regular_simplex(3));
  Eigen::Vector3d axis = Eigen::Vector3d(pts[1]).cross(Eigen::Vector3d(pts[0])).normalized();
  pts[0] = Eigen::AngleAxisd(0.1, axis) * Eigen::Vector3d(pts[0]);
  auto [c, d] = check_simplex(build_polytope(pts), make_weight(weight::Power{0.5}));
  CHECK(c.satisfied);
  CHECK(d.satisfied);
  CHECK_FALSE(c.equality);
  CHECK_FALSE(d.equality);
  CHECK_FALSE(c.expected_equality);

  auto t5 = build_polytope(shape_points(ShapeSpec::regular_simplex(5)));
  auto [e, f] = check_simplex(t5, make_weight(weight::Power{0.3}));
  CHECK(e.equality);
  CHECK(f.equality);

  auto scaled = shape_points(ShapeSpec::regular_simplex(3));
  for (auto& p : scaled) p *= 0.9;
  CHECK(code_of([&] { check_simplex(build_polytope(scaled), make_weight(weight::Power{0.5})); }) ==
        ErrorCode::NotInscribed);
  CHECK(code_of([&] { check_simplex(t, make_weight(weight::Exp{1})); }) == ErrorCode::UsageError);
}

TEST_CASE("euler and shell bounds") {
  auto t4 = build_polytope(shape_points(ShapeSpec::regular_simplex(4)));
  auto r = check_euler_shell(t4);
  REQUIRE(r.size() == 1);
  CHECK(r[0].lhs == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(r[0].equality);

  auto cube = check_euler_shell(platonic(Platonic::Cube));
  REQUIRE(cube.size() == 2);
  CHECK(cube[0].tag == "shell-vef");
  CHECK(cube[0].lhs == doctest::Approx(std::sqrt(3.0)));
  CHECK(cube[0].equality);

  auto ico = check_euler_shell(platonic(Platonic::Icosahedron));
  CHECK(ico[1].tag == "shell-v");
  CHECK(ico[1].lhs == doctest::Approx(1.258408).epsilon(1e-6));
  CHECK(ico[1].equality);

  for (int i = 0; i < 200; ++i)
    for (const auto& rep : check_euler_shell(random_inscribed(3, 4 + i % 20, 300 + i))) CHECK(rep.satisfied);
}

TEST_CASE("planar bound") {
  auto hex = generate(ShapeSpec::regular_polygon(6));
  auto rep = check_polygon(hex, make_weight(weight::Power{0.5}));
  CHECK(rep.rhs == doctest::Approx(6 * std::sqrt(std::sqrt(3.0) / 2)).epsilon(1e-12));
  CHECK(rep.equality);
  CHECK(rep.expected_equality);

  auto tri = check_polygon(generate(ShapeSpec::regular_polygon(3)), make_weight(weight::Power{0}));
  CHECK(tri.lhs == doctest::Approx(3 * std::sqrt(3.0)));
  CHECK(tri.rhs == doctest::Approx(3 * std::sqrt(3.0)));
  CHECK(tri.equality);

  auto pent = tangential_polygon({0.0, 1.1, 2.5, 3.6, 5.0});
  auto strict = check_polygon(pent, make_weight(weight::Power{0.5}));
  CHECK(strict.satisfied);
  CHECK_FALSE(strict.equality);
  CHECK_FALSE(strict.expected_equality);

  std::vector<Point> rect{Point(Eigen::Vector2d(-2, -1)), Point(Eigen::Vector2d(2, -1)), Point(Eigen::Vector2d(2, 1)),
                          Point(Eigen::Vector2d(-2, 1))};
  CHECK(code_of([&] { check_polygon(convex_hull(rect, 2), make_weight(weight::Power{0.5})); }) ==
        ErrorCode::NoInsphere);
}

TEST_CASE("Fejes Toth calibration") {
  const double s = 2.0 / std::sqrt(3.0);
  auto cube = platonic(Platonic::Cube);
  auto lower = fejes_toth_bound(cube, FejesToth::SurfaceLowerVef);
  CHECK(lower.rhs == doctest::Approx(24 * (s / 2) * (s / 2)).epsilon(1e-12));
  CHECK(lower.equality);

  auto ico = fejes_toth_bound(platonic(Platonic::Icosahedron), FejesToth::SurfaceUpperV);
  CHECK(ico.rhs == doctest::Approx(std::sqrt(3.0) * (10 - 2 * std::sqrt(5.0))).epsilon(1e-12));
  CHECK(ico.equality);

  auto octa = fejes_toth_bound(platonic(Platonic::Octahedron), FejesToth::VolumeUpperV);
  CHECK(octa.rhs == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK(octa.equality);
  auto literal = fejes_toth_bound(platonic(Platonic::Octahedron), FejesToth::VolumeUpperVLiteral);
  CHECK_FALSE(literal.gating);
  CHECK_FALSE(literal.satisfied);
  CHECK(std::abs(literal.rhs) < 1e-12);

  const std::vector<std::pair<FejesToth, std::vector<Platonic>>> designated{
      {FejesToth::SurfaceLowerVef, {kSolids, kSolids + 5}},
      {FejesToth::SurfaceLowerF, {Platonic::Tetrahedron, Platonic::Cube, Platonic::Dodecahedron}},
      {FejesToth::SurfaceUpperV, {Platonic::Tetrahedron, Platonic::Octahedron, Platonic::Icosahedron}},
      {FejesToth::SurfaceUpperFoot, {kSolids, kSolids + 5}},
      {FejesToth::VolumeUpperV, {Platonic::Tetrahedron, Platonic::Octahedron, Platonic::Icosahedron}},
      {FejesToth::VolumeUpperVef, {kSolids, kSolids + 5}},
      {FejesToth::VolumeLowerVef, {kSolids, kSolids + 5}},
      {FejesToth::VolumeLowerF, {Platonic::Tetrahedron, Platonic::Cube, Platonic::Dodecahedron}},
  };
  for (const auto& [which, solids] : designated)
    for (auto s : solids) {
      auto rep = fejes_toth_bound(platonic(s), which);
      CAPTURE(rep.tag);
      CAPTURE(static_cast<int>(s));
      CHECK(rep.expected_equality);
      CHECK(std::abs(rep.lhs - rep.rhs) <= 1e-9 * std::max(1.0, std::abs(rep.rhs)));
    }
}

TEST_CASE("Fejes Toth bounds hold on random hulls") {
  for (int i = 0; i < 300; ++i) {
    auto q = random_inscribed(3, 4 + i % 25, 900 + i);
    for (const auto& rep : fejes_toth_bounds(q)) {
      CAPTURE(rep.tag);
      if (rep.gating) CHECK(rep.satisfied);
    }
  }
}

TEST_CASE("foot-condition bound refuses a sliver") {
  std::vector<Point> sliver{sph(pi / 2 - 0.05, 0.0), sph(pi / 2 + 0.05, 2.0), sph(pi / 2 - 0.05, 4.0),
                            sph(pi / 2 + 0.05, 1.0)};
  auto q = convex_hull(sliver, 3);
  REQUIRE_FALSE(foot_condition(q));
  CHECK(code_of([&] { fejes_toth_bound(q, FejesToth::SurfaceUpperFoot); }) == ErrorCode::FootConditionViolated);
  for (const auto& rep : fejes_toth_bounds(q)) CHECK(rep.tag != "surface-upper-foot");
}

TEST_CASE("weighted surface bounds") {
  auto octa = platonic(Platonic::Octahedron);
  auto rep = check_r3_weighted(octa, make_weight(weight::Power{0.5}), R3Weighted::UpperV);
  CHECK(rep.rhs == doctest::Approx(4 * std::sqrt(3.0) * std::pow(1 / std::sqrt(3.0), 0.5)).epsilon(1e-12));
  CHECK(rep.equality);
  CHECK(rep.expected_equality);

  auto cube = check_r3_weighted(platonic(Platonic::Cube), make_weight(weight::Exp{1}), R3Weighted::LowerF);
  CHECK(cube.equality);
  CHECK(cube.direction == Direction::GreaterEqual);

  int strict = 0;
  for (int i = 0; i < 50; ++i) {
    auto q = random_inscribed(3, 4, 40 + i);  // every simplex has an insphere
    auto r = check_r3_weighted(q, make_weight(weight::Power{0.5}), R3Weighted::UpperV);
    CHECK(r.satisfied);
    if (!r.equality) ++strict;
  }
  CHECK(strict == 50);

  CHECK(code_of([&] { check_r3_weighted(octa, make_weight(weight::Exp{1}), R3Weighted::UpperV); }) ==
        ErrorCode::UsageError);
  CHECK(code_of([&] { check_r3_weighted(octa, make_weight(weight::Power{0.5}), R3Weighted::LowerVef); }) ==
        ErrorCode::UsageError);
  CHECK(code_of([] { check_r3_weighted(box(), make_weight(weight::Power{0.5}), R3Weighted::UpperV); }) ==
        ErrorCode::NoInsphere);
}

TEST_CASE("edge curvature bound") {
  auto cube = check_edge_curvature_bound(platonic(Platonic::Cube), make_weight(weight::Power{0.5}));
  CHECK(cube.equality);
  CHECK(cube.expected_equality);

  auto bp = check_edge_curvature_bound(generate(ShapeSpec::bipyramid(5)), make_weight(weight::Power{0.5}));
  CHECK(bp.satisfied);
  CHECK_FALSE(bp.equality);
  CHECK_FALSE(bp.expected_equality);

  for (int i = 0; i < 30; ++i) {
    auto q = random_inscribed(3, 12, 60 + i);
    auto id = check_edge_curvature_bound(q, make_weight(weight::Power{1}));
    CHECK(id.equality);
    CHECK(id.lhs == doctest::Approx(edge_curvature(q)).epsilon(1e-12));
    auto lit = check_edge_curvature_bound(q, make_weight(weight::Power{1}), AngleConvention::Exterior,
                                          CurvatureReading::Literal);
    CHECK_FALSE(lit.gating);
    CHECK(lit.rhs == doctest::Approx(2 * id.lhs).epsilon(1e-12));
    for (const auto& w : registry_weights())
      for (auto conv : {AngleConvention::Exterior, AngleConvention::Reflex})
        CHECK(check_edge_curvature_bound(q, w, conv).satisfied);
  }
}

TEST_CASE("littlewood") {
  auto t = random_inscribed(3, 9, 5);
  for (double p : {0.0, 1.0}) CHECK(check_littlewood(t, p).equality);
  CHECK(check_littlewood(generate(ShapeSpec::platonic(Platonic::Dodecahedron)), 0.5).equality);

  auto pts = shape_points(ShapeSpec::platonic(Platonic::Tetrahedron));
  for (auto& p : pts) p += p3(0.1, 0.05, -0.07);
  auto off = convex_hull(pts, 3);
  REQUIRE(is_strictly_interior(off, Point::Zero(3)));
  auto rep = check_littlewood(off, 0.5);
  CHECK(rep.satisfied);
  CHECK_FALSE(rep.equality);
  CHECK_FALSE(rep.expected_equality);
  CHECK(code_of([&] { check_littlewood(off, 1.5); }) == ErrorCode::InadmissibleParams);
}

TEST_CASE("bipyramid bound") {
  auto q = generate(ShapeSpec::bipyramid(5));
  auto r0 = check_bipyramid(q, 0.0);
  CHECK(r0.rhs == doctest::Approx(3 * std::sqrt(3.0) / 2).epsilon(1e-12));
  CHECK(r0.equality);
  CHECK(r0.expected_equality);
  auto r1 = check_bipyramid(q, 1.0);
  CHECK(r1.rhs == doctest::Approx(3 * std::sqrt(15.0) / 2).epsilon(1e-12));
  CHECK(r1.equality);

  std::vector<Point> pts{sph(0.3, 0.0), sph(pi, 0.0), sph(pi / 2, 0.0), sph(pi / 2, 2 * pi / 3),
                         sph(pi / 2, 4 * pi / 3)};
  auto squashed = convex_hull(pts, 3);
  REQUIRE(detect_bipyramid(squashed).has_value());
  auto rs = check_bipyramid(squashed, 0.5);
  CHECK(rs.satisfied);
  CHECK_FALSE(rs.equality);
  CHECK_FALSE(rs.expected_equality);

  // a rotated canonical bipyramid is still the extremal one
  auto rot = shape_points(ShapeSpec::bipyramid(7));
  Eigen::Matrix3d m = Eigen::AngleAxisd(0.7, Eigen::Vector3d(1, 2, 3).normalized()).toRotationMatrix();
  for (auto& p : rot) p = m * Eigen::Vector3d(p);
  auto rr = check_bipyramid(convex_hull(rot, 3), 0.5);
  CHECK(rr.equality);
  CHECK(rr.expected_equality);

  CHECK(code_of([] { check_bipyramid(generate(ShapeSpec::platonic(Platonic::Cube)), 0.5); }) ==
        ErrorCode::NotBipyramid);
  CHECK_FALSE(detect_bipyramid(generate(ShapeSpec::platonic(Platonic::Icosahedron))).has_value());
  auto octa = detect_bipyramid(generate(ShapeSpec::platonic(Platonic::Octahedron)));
  CHECK(octa.has_value());
}

TEST_CASE("equality flags imply small slack") {
  for (int i = 0; i < 100; ++i) {
    auto q = random_inscribed(3, 4 + i % 20, 4000 + i);
    for (const auto& w : registry_weights()) {
      auto rep = check_jensen(q, w, JensenVariant::Height);
      if (rep.equality) CHECK(rep.slack <= kEqualityTol * std::max(1.0, std::abs(rep.rhs)));
      if (rep.expected_equality) CHECK(rep.equality);
    }
  }
}

TEST_CASE("suite") {
  std::vector<NamedPolytope> shapes;
  for (auto s : kSolids) {
    ShapeSpec spec = ShapeSpec::platonic(s);
    shapes.push_back({spec.name(), generate(spec)});
  }
  auto res = run_suite(shapes, registry_weights());
  CHECK(res.violations() == 0);
  CHECK(res.errors.empty());
  CHECK(res.entries.size() > 100);
  for (const auto& e : res.entries)
    if (e.report.expected_equality && e.report.gating) {
      CAPTURE(e.shape);
      CAPTURE(e.report.tag);
      CHECK(e.report.equality);
    }

  for (std::size_t i = 1; i < res.entries.size(); ++i) CHECK(res.entries[i - 1].shape_index <= res.entries[i].shape_index);

  SuiteOptions opts;
  opts.selection = parse_checks("simplex");
  auto forced = run_suite(std::span(shapes).first(1), std::vector<WeightFunction>{make_weight(weight::Exp{1})}, opts);
  bool usage = false;
  for (const auto& e : forced.errors) usage = usage || e.code == ErrorCode::UsageError;
  CHECK(usage);

  CHECK(parse_checks("all").all);
  CHECK(parse_checks("jensen,littlewood").checks.size() == 2);
  CHECK(code_of([] { parse_checks("jensen,nope"); }) == ErrorCode::UsageError);
  CHECK(code_of([] { parse_checks(""); }) == ErrorCode::UsageError);
}
