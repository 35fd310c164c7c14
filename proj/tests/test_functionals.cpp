#include <doctest.h>

#include "conevol/balls.hpp"
#include "conevol/error.hpp"
#include "conevol/functionals.hpp"
#include "conevol/hull.hpp"
#include "conevol/measures.hpp"
#include "conevol/shapes.hpp"

#include <cmath>
#include <numbers>

using namespace conevol;
using std::numbers::pi;

namespace {

Polytope cube(double s) {
  std::vector<Point> pts;
  for (int i = 0; i < 8; ++i) {
    Point p(3);
    p << (i & 1 ? 0.5 : -0.5) * s, (i & 2 ? 0.5 : -0.5) * s, (i & 4 ? 0.5 : -0.5) * s;
    pts.push_back(p);
  }
  return convex_hull(pts, 3);
}

Polytope box() {
  std::vector<Point> pts;
  for (int i = 0; i < 8; ++i) {
    Point p(3);
    p << (i & 1 ? 0.5 : -0.5), (i & 2 ? 0.5 : -0.5), (i & 4 ? 1.0 : -1.0);
    pts.push_back(p);
  }
  return convex_hull(pts, 3);
}

Polytope tetra() { return generate(ShapeSpec::platonic(Platonic::Tetrahedron)); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::UsageError;
}

bool close(double a, double b, double rel) { return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b)); }

}  // namespace

TEST_CASE("weighted cone-volume functional") {
  auto t = tetra();
  CHECK(s_weighted(t, make_weight(weight::Power{1})) == doctest::Approx(8.0 / (3.0 * std::sqrt(3.0))).epsilon(1e-12));
  CHECK(s_weighted(t, make_weight(weight::Power{0})) == doctest::Approx(surface_area(t)).epsilon(1e-12));
  auto o = generate(ShapeSpec::platonic(Platonic::Octahedron));
  CHECK(s_weighted(o, make_weight(weight::Power{0.5})) ==
        doctest::Approx(4.0 * std::sqrt(3.0) * std::pow(1.0 / std::sqrt(3.0), 0.5)).epsilon(1e-12));

  Polytope shifted = cube(1.0);
  Point off = Point::Constant(3, 2.0);
  for (auto& v : shifted.vertices) v += off;
  shifted = convex_hull(shifted.vertices, 3);
  CHECK(code_of([&] { s_weighted(shifted, make_weight(weight::Power{0.5})); }) == ErrorCode::PointNotInterior);
}

TEST_CASE("in-facet functional") {
  auto t = tetra();
  CHECK(s_weighted_in(t, make_weight(weight::Power{1})) == doctest::Approx(8.0 / (3.0 * std::sqrt(3.0))).epsilon(1e-12));
  CHECK(s_weighted_in(t, make_weight(weight::Power{0})) == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK(code_of([] { s_weighted_in(box(), make_weight(weight::Power{0.5})); }) == ErrorCode::NoInsphere);
}

TEST_CASE("L_p surface area") {
  auto t = tetra();
  CHECK(s_p(t, 0) == doctest::Approx(8.0 / (3.0 * std::sqrt(3.0))).epsilon(1e-12));
  CHECK(s_p(t, 1) == doctest::Approx(8.0 / std::sqrt(3.0)).epsilon(1e-12));
  for (auto s : {Platonic::Tetrahedron, Platonic::Cube, Platonic::Octahedron, Platonic::Dodecahedron,
                 Platonic::Icosahedron}) {
    auto q = generate(ShapeSpec::platonic(s));
    const double r = chebyshev_center(q).radius;
    for (double p : {-1.0, 0.0, 0.3, 0.5, 1.0, 2.0})
      CHECK(close(s_p(q, p), std::pow(r, 1 - p) * surface_area(q), 1e-12));
  }
}

TEST_CASE("Orlicz surface area") {
  for (int seed = 0; seed < 20; ++seed) {
    auto q = random_inscribed(3, 12, seed);
    CHECK(close(orlicz_surface_area(q, make_weight(weight::Power{1})), surface_area(q), 1e-12));
    CHECK(close(orlicz_surface_area(q, make_weight(weight::Power{0})), 3 * volume(q, Point::Zero(3)), 1e-12));
    for (double p : {-1.0, 0.25, 0.5, 2.0})
      CHECK(close(orlicz_surface_area(q, make_weight(weight::Power{p})), s_p(q, p), 1e-12));
  }
}

TEST_CASE("T-functional") {
  auto q = random_inscribed(3, 15, 3);
  CHECK(t_functional(q, 0, 2.5, 0) == doctest::Approx(q.num_vertices()));
  CHECK(t_functional(q, 1, 1, 0) == doctest::Approx(q.num_vertices()).epsilon(1e-12));
  CHECK(t_functional(q, 0, 1, 1) == doctest::Approx(*summary(q).total_edge_length).epsilon(1e-12));
  CHECK(code_of([&] { t_functional(q, 1, 1, 5); }) == ErrorCode::UnsupportedFaceDim);

  auto t4 = build_polytope(shape_points(ShapeSpec::regular_simplex(4)));
  CHECK(close(t_functional(t4, 0.5, 1, 3), s_p(t4, 0.5), 1e-12));
  CHECK(code_of([&] { t_functional(t4, 1, 1, 2); }) == ErrorCode::UnsupportedFaceDim);
}

TEST_CASE("edge curvature") {
  const double s = 1.3;
  auto c = cube(s);
  CHECK(edge_curvature(c) == doctest::Approx(3 * pi * s));
  CHECK(edge_curvature(c, AngleConvention::Reflex) == doctest::Approx(9 * pi * s));
  auto t = tetra();
  CHECK(edge_curvature(t) == doctest::Approx(0.5 * 6 * std::sqrt(8.0 / 3.0) * (pi - std::acos(1.0 / 3.0))));

  CHECK(edge_curvature_weighted(c, make_weight(weight::Power{1})) == doctest::Approx(edge_curvature(c)));
  CHECK(edge_curvature_weighted(c, make_weight(weight::Power{0})) == doctest::Approx(6 * s));
  CHECK(edge_curvature_weighted(c, make_weight(weight::Power{2})) == doctest::Approx(0.5 * 12 * s * pi * pi / 4));
  CHECK(edge_curvature_weighted(c, make_weight(weight::Power{2}), AngleConvention::Exterior, EdgeWeighting::Length) ==
        doctest::Approx(0.5 * 12 * (pi / 2) * s * s));
}

TEST_CASE("mean width") {
  const double s = 1.3;
  auto c = cube(s);
  CHECK(std::abs(mean_width_exact(c) - 1.5 * s) < 1e-12);
  CHECK(mean_width_exact(c) == doctest::Approx(edge_curvature(c) / (2 * pi)));
  auto mc = mean_width_monte_carlo(c, 200000, 11);
  CHECK(mc.samples == 200000);
  CHECK(std::abs(mc.value - 1.5 * s) < 3 * mc.standard_error);

  for (const char* name : {"tetra", "cube", "octa", "dodeca", "icosa", "bipyramid:7", "bh", "random:3,20,4"}) {
    auto q = generate(ShapeSpec::parse(name));
    auto est = mean_width_monte_carlo(q, 200000, 3);
    CAPTURE(name);
    CHECK(std::abs(est.value - mean_width_exact(q)) < 3 * est.standard_error);
  }

  // inclusion: hull of a subset has smaller mean width
  auto pts = random_inscribed_points(3, 30, 8);
  auto outer = convex_hull(pts, 3);
  std::vector<Point> sub(pts.begin(), pts.begin() + 12);
  for (auto& p : sub) p *= 0.99;
  auto inner = convex_hull(sub, 3);
  CHECK(mean_width_exact(inner) > 0.0);
  CHECK(mean_width_exact(inner) <= mean_width_exact(outer));
}

TEST_CASE("summary") {
  const double s = 1.3;
  auto sm = summary(cube(s));
  CHECK(*sm.mean_height == doctest::Approx(s / 2));
  CHECK(sm.mean_facet_area == doctest::Approx(s * s));
  CHECK(*sm.height_sum == doctest::Approx(3 * s));
  CHECK(*sm.total_edge_length == doctest::Approx(12 * s));
  CHECK(*sm.mean_edge_angle == doctest::Approx(pi / 2));

  auto st = summary(tetra());
  CHECK(*st.mean_height == doctest::Approx(1.0 / 3.0));
  CHECK(*st.height_sum == doctest::Approx(4.0 / 3.0));
  CHECK_FALSE(summary(box()).height_sum.has_value());
}

TEST_CASE("random corpus identities") {
  for (int i = 0; i < 500; ++i) {
    auto q = random_inscribed(3, 4 + i % 27, 7000 + i);
    const double v = volume(q, Point::Zero(3));
    CHECK(close(s_p(q, 0), 3 * v, 1e-12));
    CHECK(close(s_p(q, 1), surface_area(q), 1e-12));
    for (double p : {-1.0, 0.0, 0.3, 1.0, 2.0}) CHECK(close(s_p(q, p), t_functional(q, 1 - p, 1, 2), 1e-12));
    for (double a : {0.5, 2.0}) {
      auto w = make_weight(weight::Power{a});
      CHECK(close(s_weighted(q, w), w(1.0) * t_functional(q, a, 1, 2), 1e-12));
    }
    auto sm = summary(q);
    double lo = 1e9, hi = 0;
    for (const auto& fh : facet_heights(q)) {
      lo = std::min(lo, fh.height);
      hi = std::max(hi, fh.height);
    }
    CHECK(*sm.mean_height > lo * (1 - 1e-12));
    CHECK(*sm.mean_height <= hi * (1 + 1e-12));
    CHECK(*sm.mean_edge_angle > 0.0);
    CHECK(*sm.mean_edge_angle < pi);
  }
}

TEST_CASE("Monte Carlo is reproducible") {
  auto q = generate(ShapeSpec::parse("icosa"));
  auto a = mean_width_monte_carlo(q, 50000, 42);
  auto b = mean_width_monte_carlo(q, 50000, 42);
  auto c = mean_width_monte_carlo(q, 50000, 43);
  CHECK(a.value == b.value);
  CHECK(a.standard_error == b.standard_error);
  CHECK(a.value != c.value);
}
