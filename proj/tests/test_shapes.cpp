#include <doctest.h>

#include "conevol/balls.hpp"
#include "conevol/error.hpp"
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

bool close(double a, double b, double rel) { return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b)); }

void check_against_metadata(const ShapeSpec& spec) {
  CAPTURE(spec.name());
  auto pts = shape_points(spec);
  for (const auto& p : pts) CHECK(std::abs(p.norm() - 1.0) < 1e-12);
  auto q = generate(spec);
  CHECK(is_strictly_interior(q, Point::Zero(q.dim)));
  auto md = metadata(spec);
  auto info = ball_info(q);
  if (md.circumradius) CHECK(close(info.circumradius, *md.circumradius, 1e-9));
  if (md.inradius) CHECK(close(info.chebyshev_radius, *md.inradius, 1e-9));
  if (md.surface_area) CHECK(close(surface_area(q), *md.surface_area, 1e-9));
  if (md.volume) CHECK(close(volume(q), *md.volume, 1e-9));
  if (md.vertices) CHECK(static_cast<int>(q.num_vertices()) == *md.vertices);
  if (q.dim == 3) {
    if (md.edges) CHECK(static_cast<int>(q.num_edges()) == *md.edges);
    if (md.facets) CHECK(static_cast<int>(q.num_facets()) == *md.facets);
    CHECK(static_cast<long>(q.num_vertices()) - static_cast<long>(q.num_edges()) + static_cast<long>(q.num_facets()) ==
          2);
  }
}

}  // namespace

TEST_CASE("theta star") { CHECK(berman_hanes_theta() == doctest::Approx(0.6055020726772147).epsilon(1e-15)); }

TEST_CASE("named shapes agree with their closed forms") {
  for (int n = 2; n <= 8; ++n) check_against_metadata(ShapeSpec::regular_simplex(n));
  for (auto s : {Platonic::Tetrahedron, Platonic::Cube, Platonic::Octahedron, Platonic::Dodecahedron,
                 Platonic::Icosahedron})
    check_against_metadata(ShapeSpec::platonic(s));
  for (int k = 3; k <= 12; ++k) check_against_metadata(ShapeSpec::regular_polygon(k));
  for (int k = 5; k <= 12; ++k) check_against_metadata(ShapeSpec::bipyramid(k));
  check_against_metadata(ShapeSpec::bipyramid(6, {0.0, 1.0, 2.5, 4.0}));
  check_against_metadata(ShapeSpec::berman_hanes());
}

TEST_CASE("spec examples") {
  CHECK(surface_area(generate(ShapeSpec::regular_simplex(3))) == doctest::Approx(8.0 / std::sqrt(3.0)).epsilon(1e-12));
  auto bp = generate(ShapeSpec::bipyramid(5));
  CHECK(volume(bp) == doctest::Approx(std::sin(2 * pi / 3)).epsilon(1e-12));
  auto bh = generate(ShapeSpec::berman_hanes());
  CHECK(bh.num_vertices() == 8);
  CHECK(bh.num_facets() == 12);
  CHECK(bh.num_edges() == 18);
  CHECK(surface_area(bh) == doctest::Approx(8.11757).epsilon(5e-4 / 8.11757));

  auto octa = metadata(ShapeSpec::platonic(Platonic::Octahedron));
  CHECK(*octa.inradius == doctest::Approx(1.0 / std::sqrt(3.0)));
  CHECK(*octa.surface_area == doctest::Approx(4.0 * std::sqrt(3.0)));
  CHECK(*octa.volume == doctest::Approx(4.0 / 3.0));
  for (int n = 2; n <= 8; ++n) {
    auto md = metadata(ShapeSpec::regular_simplex(n));
    CHECK(*md.inradius == doctest::Approx(1.0 / n));
    CHECK(*md.surface_area == doctest::Approx(regular_simplex_surface(n)));
  }
  CHECK(*metadata(ShapeSpec::bipyramid(5)).inradius == doctest::Approx(1.0 / std::sqrt(5.0)));
  CHECK(code_of([] { metadata(ShapeSpec::random_inscribed(3, 10, 1)); }) == ErrorCode::NoClosedForm);
}

TEST_CASE("regular simplex surface formula") {
  CHECK(regular_simplex_surface(2) == doctest::Approx(3 * std::sqrt(3.0)));
  CHECK(regular_simplex_surface(3) == doctest::Approx(8 / std::sqrt(3.0)));
  CHECK(regular_simplex_surface(4) == doctest::Approx(std::pow(5.0, 2.5) / 24.0));
}

TEST_CASE("berman-hanes combinatorics near theta star") {
  for (double th = 0.55; th <= 0.66; th += 0.01) {
    auto q = generate(ShapeSpec::berman_hanes(th));
    CAPTURE(th);
    CHECK(q.num_vertices() == 8);
    CHECK(q.num_edges() == 18);
    CHECK(q.num_facets() == 12);
  }
}

TEST_CASE("random inscribed") {
  auto t = random_inscribed(3, 4, 1);
  CHECK(t.num_vertices() == 4);
  CHECK(is_strictly_interior(t, Point::Zero(3), 1e-6));
  auto h = random_inscribed(2, 7, 7);
  CHECK(h.dim == 2);
  CHECK(h.num_vertices() == 7);
  for (const auto& v : h.vertices) CHECK(std::abs(v.norm() - 1.0) < 1e-12);
  CHECK(code_of([] { random_inscribed(3, 3, 5); }) == ErrorCode::InvalidSpec);

  auto a = random_inscribed_points(3, 20, 123);
  auto b = random_inscribed_points(3, 20, 123);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK((a[i] - b[i]).norm() == 0.0);
  auto c = random_inscribed_points(3, 20, 124);
  CHECK((a[0] - c[0]).norm() > 0.0);
}

TEST_CASE("spec parsing") {
  CHECK(ShapeSpec::parse("tetra").solid == Platonic::Tetrahedron);
  CHECK(ShapeSpec::parse("simplex:5").dim == 5);
  CHECK(ShapeSpec::parse("polygon:7").count == 7);
  CHECK(ShapeSpec::parse("bipyramid:9").count == 9);
  CHECK(ShapeSpec::parse("bh").theta == berman_hanes_theta());
  CHECK(ShapeSpec::parse("bh:0.62").theta == 0.62);
  auto r = ShapeSpec::parse("random:3,12,77");
  CHECK(r.kind == ShapeSpec::Kind::RandomInscribed);
  CHECK(r.count == 12);
  CHECK(r.seed == 77);
  for (const char* name : {"tetra", "cube", "octa", "dodeca", "icosa", "simplex:4", "polygon:6", "bipyramid:7",
                           "bh:0.62", "random:3,12,77"})
    CHECK(ShapeSpec::parse(ShapeSpec::parse(name).name()).name() == ShapeSpec::parse(name).name());
  for (const char* bad : {"", "sphere", "simplex", "simplex:1", "polygon:2", "bipyramid:4", "bh:0", "bh:0.8",
                          "bh:abc", "random:3,3,1", "random:4,10,1", "random:3,10", "cube:1"})
    CHECK(code_of([&] { generate(ShapeSpec::parse(bad)); }) == ErrorCode::InvalidSpec);
  CHECK(code_of([] { generate(ShapeSpec::bipyramid(6, {0.0, 1.0})); }) == ErrorCode::InvalidSpec);
}
