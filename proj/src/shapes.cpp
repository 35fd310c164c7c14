#include "conevol/shapes.hpp"

#include "conevol/error.hpp"
#include "conevol/hull.hpp"
#include "conevol/measures.hpp"
#include "conevol/random.hpp"

#include <charconv>
#include <cmath>

namespace conevol {

double berman_hanes_theta() { return std::acos(std::sqrt((15.0 + std::sqrt(145.0)) / 40.0)); }

double regular_simplex_surface(int n) {
  const double nn = n;
  return std::pow(nn + 1.0, (nn + 1.0) / 2.0) / (std::pow(nn, nn / 2.0 - 1.0) * std::tgamma(nn));
}

ShapeSpec ShapeSpec::regular_simplex(int n) {
  ShapeSpec s;
  s.kind = Kind::RegularSimplex;
  s.dim = n;
  return s;
}

ShapeSpec ShapeSpec::platonic(Platonic p) {
  ShapeSpec s;
  s.kind = Kind::Platonic;
  s.solid = p;
  return s;
}

ShapeSpec ShapeSpec::regular_polygon(int k) {
  ShapeSpec s;
  s.kind = Kind::RegularPolygon;
  s.dim = 2;
  s.count = k;
  return s;
}

ShapeSpec ShapeSpec::bipyramid(int k, std::vector<double> equator_angles) {
  ShapeSpec s;
  s.kind = Kind::Bipyramid;
  s.count = k;
  s.equator_angles = std::move(equator_angles);
  return s;
}

ShapeSpec ShapeSpec::berman_hanes(double theta) {
  ShapeSpec s;
  s.kind = Kind::BermanHanes;
  s.theta = theta;
  return s;
}

ShapeSpec ShapeSpec::random_inscribed(int n, int k, std::uint64_t seed) {
  ShapeSpec s;
  s.kind = Kind::RandomInscribed;
  s.dim = n;
  s.count = k;
  s.seed = seed;
  return s;
}

namespace {

template <class T>
T parse_value(std::string_view s, std::string_view text) {
  T v{};
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw Error(ErrorCode::InvalidSpec, "bad parameter in shape spec '" + std::string(text) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::string fmt(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

Point p3(double x, double y, double z) {
  Point p(3);
  p << x, y, z;
  return p;
}

std::vector<Point> platonic_points(Platonic solid) {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Point> pts;
  switch (solid) {
    case Platonic::Tetrahedron:
      pts = {p3(1, 1, 1), p3(1, -1, -1), p3(-1, 1, -1), p3(-1, -1, 1)};
      break;
    case Platonic::Cube:
      for (int sx : {-1, 1})
        for (int sy : {-1, 1})
          for (int sz : {-1, 1}) pts.push_back(p3(sx, sy, sz));
      break;
    case Platonic::Octahedron:
      pts = {p3(1, 0, 0), p3(-1, 0, 0), p3(0, 1, 0), p3(0, -1, 0), p3(0, 0, 1), p3(0, 0, -1)};
      break;
    case Platonic::Icosahedron:
      for (int s1 : {-1, 1})
        for (int s2 : {-1, 1}) {
          pts.push_back(p3(0, s1, s2 * phi));
          pts.push_back(p3(s1, s2 * phi, 0));
          pts.push_back(p3(s2 * phi, 0, s1));
        }
      break;
    case Platonic::Dodecahedron:
      for (int sx : {-1, 1})
        for (int sy : {-1, 1})
          for (int sz : {-1, 1}) pts.push_back(p3(sx, sy, sz));
      for (int s1 : {-1, 1})
        for (int s2 : {-1, 1}) {
          pts.push_back(p3(0, s1 / phi, s2 * phi));
          pts.push_back(p3(s1 / phi, s2 * phi, 0));
          pts.push_back(p3(s2 * phi, 0, s1 / phi));
        }
      break;
  }
  for (auto& p : pts) p.normalize();
  return pts;
}

// Vertices of the regular simplex inscribed in S^{n-1}: the standard basis of
// R^{n+1}, centred and expressed in the Helmert basis of the hyperplane
// sum(x) = 0, then scaled to unit norm.
std::vector<Point> simplex_points(int n) {
  const double scale = std::sqrt((n + 1.0) / n);
  std::vector<Point> pts(static_cast<std::size_t>(n) + 1, Point::Zero(n));
  for (int k = 1; k <= n; ++k) {
    const double norm = std::sqrt(static_cast<double>(k) * (k + 1));
    for (int i = 0; i <= n; ++i) {
      double h = 0.0;
      if (i < k) h = 1.0 / norm;
      else if (i == k) h = -static_cast<double>(k) / norm;
      pts[static_cast<std::size_t>(i)][k - 1] = scale * h;
    }
  }
  return pts;
}

std::vector<Point> berman_hanes_points(double t) {
  const double s3 = std::sin(3 * t), c3 = std::cos(3 * t), s = std::sin(t), c = std::cos(t);
  return {p3(s3, 0, c3),   p3(s, 0, c),   p3(-s, 0, c),   p3(-s3, 0, c3),
          p3(0, -s3, -c3), p3(0, -s, -c), p3(0, s, -c),   p3(0, s3, -c3)};
}

void validate(const ShapeSpec& spec) {
  using K = ShapeSpec::Kind;
  switch (spec.kind) {
    case K::RegularSimplex:
      if (spec.dim < 2) throw Error(ErrorCode::InvalidSpec, "simplex dimension must be >= 2");
      break;
    case K::Platonic:
      break;
    case K::RegularPolygon:
      if (spec.count < 3) throw Error(ErrorCode::InvalidSpec, "polygon needs K >= 3");
      break;
    case K::Bipyramid:
      if (spec.count < 5) throw Error(ErrorCode::InvalidSpec, "bipyramid needs K >= 5");
      if (!spec.equator_angles.empty() && spec.equator_angles.size() != static_cast<std::size_t>(spec.count - 2)) {
        throw Error(ErrorCode::InvalidSpec, "bipyramid needs K-2 equator angles");
      }
      break;
    case K::BermanHanes:
      if (!(spec.theta > 0.0 && spec.theta < M_PI / 4.0)) {
        throw Error(ErrorCode::InvalidSpec, "berman_hanes theta must lie in (0, pi/4)");
      }
      break;
    case K::RandomInscribed:
      if (spec.dim != 2 && spec.dim != 3) throw Error(ErrorCode::InvalidSpec, "random shapes need n in {2, 3}");
      if (spec.count < spec.dim + 1) throw Error(ErrorCode::InvalidSpec, "random shapes need K >= n+1");
      break;
  }
}

}  // namespace

ShapeSpec ShapeSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const std::string_view args = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  const bool has_args = colon != std::string_view::npos;

  auto no_args = [&](ShapeSpec s) {
    if (has_args) throw Error(ErrorCode::InvalidSpec, "'" + std::string(head) + "' takes no parameters");
    return s;
  };
  auto need_args = [&]() {
    if (!has_args) throw Error(ErrorCode::InvalidSpec, "'" + std::string(head) + "' needs parameters");
  };

  ShapeSpec s;
  if (head == "tetra") s = no_args(platonic(Platonic::Tetrahedron));
  else if (head == "cube") s = no_args(platonic(Platonic::Cube));
  else if (head == "octa") s = no_args(platonic(Platonic::Octahedron));
  else if (head == "dodeca") s = no_args(platonic(Platonic::Dodecahedron));
  else if (head == "icosa") s = no_args(platonic(Platonic::Icosahedron));
  else if (head == "simplex") need_args(), s = regular_simplex(parse_value<int>(args, text));
  else if (head == "polygon") need_args(), s = regular_polygon(parse_value<int>(args, text));
  else if (head == "bipyramid") need_args(), s = bipyramid(parse_value<int>(args, text));
  else if (head == "bh") s = has_args ? berman_hanes(parse_value<double>(args, text)) : berman_hanes();
  else if (head == "random") {
    need_args();
    const auto parts = split(args, ',');
    if (parts.size() != 3) throw Error(ErrorCode::InvalidSpec, "random takes n,K,seed");
    s = random_inscribed(parse_value<int>(parts[0], text), parse_value<int>(parts[1], text),
                         parse_value<std::uint64_t>(parts[2], text));
  } else {
    throw Error(ErrorCode::InvalidSpec, "unknown shape '" + std::string(text) + "'");
  }
  validate(s);
  return s;
}

std::string ShapeSpec::name() const {
  switch (kind) {
    case Kind::RegularSimplex: return "simplex:" + std::to_string(dim);
    case Kind::Platonic: {
      static constexpr const char* names[] = {"tetra", "cube", "octa", "dodeca", "icosa"};
      return names[static_cast<int>(solid)];
    }
    case Kind::RegularPolygon: return "polygon:" + std::to_string(count);
    case Kind::Bipyramid: return "bipyramid:" + std::to_string(count);
    case Kind::BermanHanes: return "bh:" + fmt(theta);
    case Kind::RandomInscribed:
      return "random:" + std::to_string(dim) + "," + std::to_string(count) + "," + std::to_string(seed);
  }
  return "?";
}

std::vector<Point> random_inscribed_points(int n, int k, std::uint64_t seed) {
  validate(ShapeSpec::random_inscribed(n, k, seed));
  Rng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pts.push_back(rng.on_sphere(n));
    try {
      const Polytope q = convex_hull(pts, n);
      if (is_strictly_interior(q, Point::Zero(n), 1e-6)) return pts;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateInput) throw;
    }
  }
  throw Error(ErrorCode::RetriesExhausted, "no draw contained the origin");
}

Polytope random_inscribed(int n, int k, std::uint64_t seed) {
  return convex_hull(random_inscribed_points(n, k, seed), n);
}

std::vector<Point> shape_points(const ShapeSpec& spec) {
  validate(spec);
  using K = ShapeSpec::Kind;
  switch (spec.kind) {
    case K::RegularSimplex: return simplex_points(spec.dim);
    case K::Platonic: return platonic_points(spec.solid);
    case K::RegularPolygon: {
      std::vector<Point> pts;
      for (int i = 0; i < spec.count; ++i) {
        const double a = 2.0 * M_PI * i / spec.count;
        Point p(2);
        p << std::cos(a), std::sin(a);
        pts.push_back(p);
      }
      return pts;
    }
    case K::Bipyramid: {
      const int m = spec.count - 2;
      std::vector<Point> pts{p3(0, 0, 1), p3(0, 0, -1)};
      for (int i = 0; i < m; ++i) {
        const double a = spec.equator_angles.empty() ? 2.0 * M_PI * i / m : spec.equator_angles[static_cast<std::size_t>(i)];
        pts.push_back(p3(std::cos(a), std::sin(a), 0.0));
      }
      return pts;
    }
    case K::BermanHanes: return berman_hanes_points(spec.theta);
    case K::RandomInscribed: return random_inscribed_points(spec.dim, spec.count, spec.seed);
  }
  throw Error(ErrorCode::InvalidSpec, "unknown shape kind");
}

Polytope generate(const ShapeSpec& spec) { return build_polytope(shape_points(spec)); }

ShapeMetadata metadata(const ShapeSpec& spec) {
  validate(spec);
  using K = ShapeSpec::Kind;
  ShapeMetadata m;
  m.circumradius = 1.0;
  switch (spec.kind) {
    case K::RegularSimplex: {
      const int n = spec.dim;
      m.inradius = 1.0 / n;
      m.surface_area = regular_simplex_surface(n);
      m.volume = *m.inradius * *m.surface_area / n;
      m.vertices = n + 1;
      m.facets = n + 1;
      m.edges = n * (n + 1) / 2;
      return m;
    }
    case K::Platonic: {
      const double s3 = std::sqrt(3.0), s5 = std::sqrt(5.0);
      switch (spec.solid) {
        case Platonic::Tetrahedron:
          m.inradius = 1.0 / 3.0, m.surface_area = 8.0 / s3, m.volume = 8.0 / (9.0 * s3);
          m.vertices = 4, m.edges = 6, m.facets = 4;
          break;
        case Platonic::Cube:
          m.inradius = 1.0 / s3, m.surface_area = 8.0, m.volume = 8.0 / (3.0 * s3);
          m.vertices = 8, m.edges = 12, m.facets = 6;
          break;
        case Platonic::Octahedron:
          m.inradius = 1.0 / s3, m.surface_area = 4.0 * s3, m.volume = 4.0 / 3.0;
          m.vertices = 6, m.edges = 12, m.facets = 8;
          break;
        case Platonic::Dodecahedron: {
          const double a = 4.0 / (s3 * (1.0 + s5));
          m.inradius = a / 2.0 * std::sqrt((25.0 + 11.0 * s5) / 10.0);
          m.surface_area = 3.0 * std::sqrt(25.0 + 10.0 * s5) * a * a;
          m.volume = (15.0 + 7.0 * s5) / 4.0 * a * a * a;
          m.vertices = 20, m.edges = 30, m.facets = 12;
          break;
        }
        case Platonic::Icosahedron: {
          const double a = 4.0 / std::sqrt(10.0 + 2.0 * s5);
          m.inradius = s3 / 12.0 * (3.0 + s5) * a;
          m.surface_area = s3 * (10.0 - 2.0 * s5);
          m.volume = 5.0 * (3.0 + s5) / 12.0 * a * a * a;
          m.vertices = 12, m.edges = 30, m.facets = 20;
          break;
        }
      }
      return m;
    }
    case K::RegularPolygon: {
      const int k = spec.count;
      m.inradius = std::cos(M_PI / k);
      m.surface_area = 2.0 * k * std::sin(M_PI / k);
      m.volume = 0.5 * k * std::sin(2.0 * M_PI / k);
      m.vertices = k;
      m.facets = k;
      return m;
    }
    case K::Bipyramid: {
      const int k = spec.count;
      const int eq = k - 2;
      m.vertices = k;
      m.edges = 3 * eq;
      m.facets = 2 * eq;
      if (spec.equator_angles.empty()) {
        const double c = std::cos(M_PI / eq);
        m.inradius = c / std::sqrt(1.0 + c * c);
        m.surface_area = 2.0 * eq * std::sin(M_PI / eq) * std::sqrt(1.0 + c * c);
        m.volume = eq / 3.0 * std::sin(2.0 * M_PI / eq);
      }
      return m;
    }
    case K::BermanHanes:
      m.vertices = 8, m.edges = 18, m.facets = 12;
      return m;
    case K::RandomInscribed:
      throw Error(ErrorCode::NoClosedForm, "random shapes have no closed form");
  }
  return m;
}

}  // namespace conevol
