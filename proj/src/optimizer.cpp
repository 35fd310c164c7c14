#include "conevol/optimizer.hpp"

#include "conevol/error.hpp"
#include "conevol/functionals.hpp"
#include "conevol/hull.hpp"
#include "conevol/measures.hpp"
#include "conevol/random.hpp"
#include "conevol/shapes.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>

namespace conevol {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

Point unit(double azimuth, double polar) {
  Point p(3);
  p << std::sin(polar) * std::cos(azimuth), std::sin(polar) * std::sin(azimuth), std::cos(polar);
  return p;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::vector<Point> Configuration::points() const {
  std::vector<Point> pts;
  pts.reserve(polar.size());
  for (std::size_t i = 0; i < polar.size(); ++i) pts.push_back(unit(azimuth[i], polar[i]));
  return pts;
}

Configuration Configuration::from_points(std::span<const Point> points) {
  if (points.size() < 2) throw Error(ErrorCode::InadmissibleParams, "a configuration needs at least two points");
  const Eigen::Vector3d z = Eigen::Vector3d(points[0]).normalized();
  Eigen::Vector3d x = Eigen::Vector3d(points[1]) - Eigen::Vector3d(points[1]).dot(z) * z;
  x = x.norm() > 1e-12 ? x.normalized() : z.unitOrthogonal();
  const Eigen::Vector3d y = z.cross(x);

  Configuration c;
  for (const auto& p : points) {
    const Eigen::Vector3d v = Eigen::Vector3d(p).normalized();
    const double px = v.dot(x), py = v.dot(y), pz = v.dot(z);
    c.azimuth.push_back(std::atan2(py, px));
    c.polar.push_back(std::acos(std::clamp(pz, -1.0, 1.0)));
  }
  c.azimuth[0] = 0.0;
  c.polar[0] = 0.0;
  c.azimuth[1] = 0.0;
  return c;
}

std::vector<double> Configuration::parameters() const {
  std::vector<double> x{polar.at(1)};
  for (std::size_t i = 2; i < polar.size(); ++i) {
    x.push_back(azimuth[i]);
    x.push_back(polar[i]);
  }
  return x;
}

Configuration Configuration::from_parameters(int k, std::span<const double> x) {
  if (k < 2 || x.size() != static_cast<std::size_t>(2 * k - 3)) {
    throw Error(ErrorCode::InadmissibleParams, "parameter vector must have length 2K-3");
  }
  Configuration c;
  c.azimuth = {0.0, 0.0};
  c.polar = {0.0, x[0]};
  for (int i = 2; i < k; ++i) {
    c.azimuth.push_back(x[static_cast<std::size_t>(2 * i - 3)]);
    c.polar.push_back(x[static_cast<std::size_t>(2 * i - 2)]);
  }
  return c;
}

Objective Objective::parse(std::string_view text) {
  if (text == "volume") return volume();
  if (text == "surface") return surface();
  if (text.starts_with("sp:")) {
    const std::string_view num = text.substr(3);
    double p = 0.0;
    const auto res = std::from_chars(num.data(), num.data() + num.size(), p);
    if (res.ec != std::errc() || res.ptr != num.data() + num.size() || !std::isfinite(p)) {
      throw Error(ErrorCode::UsageError, "bad exponent in objective '" + std::string(text) + "'");
    }
    return sp(p);
  }
  if (text.starts_with("weighted:")) return weighted(WeightFunction::parse(text.substr(9)));
  throw Error(ErrorCode::UsageError, "unknown objective '" + std::string(text) + "'");
}

std::string Objective::name() const {
  switch (kind) {
    case Kind::Volume: return "volume";
    case Kind::Surface: return "surface";
    case Kind::Sp: {
      char buf[32];
      const auto res = std::to_chars(buf, buf + sizeof buf, p);
      return "sp:" + std::string(buf, res.ptr);
    }
    case Kind::Weighted: return "weighted:" + weight->spec();
  }
  return "?";
}

double objective(std::span<const Point> points, const Objective& obj) {
  try {
    const Polytope q = convex_hull(points, 3);
    switch (obj.kind) {
      case Objective::Kind::Volume: return volume(q);
      case Objective::Kind::Surface: return surface_area(q);
      case Objective::Kind::Sp:
        if (obj.p == 0.0) return 3.0 * volume(q);
        if (!is_strictly_interior(q, Point::Zero(3))) return kNegInf;
        return s_p(q, obj.p);
      case Objective::Kind::Weighted:
        if (!is_strictly_interior(q, Point::Zero(3))) return kNegInf;
        return s_weighted(q, *obj.weight);
    }
  } catch (const Error&) {
    return kNegInf;
  }
  return kNegInf;
}

double objective(const Configuration& c, const Objective& obj) {
  const auto pts = c.points();
  return objective(pts, obj);
}

NelderMeadResult nelder_mead_maximize(const std::function<double(std::span<const double>)>& f,
                                      std::vector<double> x0, double step, int max_iterations, double xtol,
                                      double ftol) {
  const std::size_t n = x0.size();
  // Minimize g = -f; NaN counts as the worst possible value.
  auto g = [&](const std::vector<double>& x) {
    const double v = -f(x);
    return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
  };

  std::vector<std::vector<double>> xs(n + 1, x0);
  for (std::size_t i = 0; i < n; ++i) xs[i + 1][i] += step;
  std::vector<double> gs(n + 1);
  for (std::size_t i = 0; i <= n; ++i) gs[i] = g(xs[i]);

  std::vector<std::size_t> order(n + 1);
  int it = 0;
  auto combine = [&](const std::vector<double>& a, const std::vector<double>& b, double t) {
    std::vector<double> out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = a[j] + t * (b[j] - a[j]);
    return out;
  };

  for (; it < max_iterations; ++it) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return gs[a] < gs[b]; });
    const std::size_t best = order.front(), worst = order.back(), second = order[n - 1];

    double diameter = 0.0;
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; j < n; ++j) diameter = std::max(diameter, std::abs(xs[i][j] - xs[best][j]));
    const double spread = gs[worst] - gs[best];
    if (diameter <= xtol && spread <= ftol) break;

    std::vector<double> c(n, 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t j = 0; j < n; ++j) c[j] += xs[i][j] / static_cast<double>(n);
    }

    const auto xr = combine(c, xs[worst], -1.0);
    const double gr = g(xr);
    if (gr < gs[best]) {
      const auto xe = combine(c, xs[worst], -2.0);
      const double ge = g(xe);
      if (ge < gr) {
        xs[worst] = xe, gs[worst] = ge;
      } else {
        xs[worst] = xr, gs[worst] = gr;
      }
      continue;
    }
    if (gr < gs[second]) {
      xs[worst] = xr, gs[worst] = gr;
      continue;
    }
    if (gr < gs[worst]) {
      const auto xc = combine(c, xr, 0.5);
      const double gc = g(xc);
      if (gc <= gr) {
        xs[worst] = xc, gs[worst] = gc;
        continue;
      }
    } else {
      const auto xc = combine(c, xs[worst], 0.5);
      const double gc = g(xc);
      if (gc < gs[worst]) {
        xs[worst] = xc, gs[worst] = gc;
        continue;
      }
    }
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      xs[i] = combine(xs[best], xs[i], 0.5);
      gs[i] = g(xs[i]);
    }
  }

  const auto best = static_cast<std::size_t>(std::min_element(gs.begin(), gs.end()) - gs.begin());
  return {xs[best], -gs[best], it};
}

namespace {

struct RunOutcome {
  std::vector<double> x;
  double value = kNegInf;
  int iterations = 0;
};

// Nelder-Mead from x0, restarted from its own optimum with a fresh simplex of
// edge `polish` until the value stops improving.
RunOutcome run_from(int k, const Objective& obj, std::vector<double> x0, double step, double polish,
                    const OptimizerConfig& cfg) {
  const auto f = [&](std::span<const double> x) { return objective(Configuration::from_parameters(k, x), obj); };
  auto res = nelder_mead_maximize(f, std::move(x0), step, cfg.max_iterations, cfg.xtol, cfg.ftol);
  RunOutcome out{res.x, res.value, res.iterations};
  for (int round = 0; round < 8; ++round) {
    auto again = nelder_mead_maximize(f, out.x, polish, cfg.max_iterations, cfg.xtol, cfg.ftol);
    out.iterations += again.iterations;
    const bool better = again.value > out.value + cfg.ftol;
    if (again.value > out.value) {
      out.x = std::move(again.x);
      out.value = again.value;
    }
    if (!better) break;
  }
  return out;
}

RunOutcome restart(int k, const Objective& obj, const OptimizerConfig& cfg, int index) {
  Rng rng(stream_seed(cfg.seed, static_cast<std::uint64_t>(index)));
  std::vector<Point> pts;
  for (int i = 0; i < k; ++i) pts.push_back(rng.on_sphere(3));
  return run_from(k, obj, Configuration::from_points(pts).parameters(), cfg.initial_step, 0.05, cfg);
}

OptimizerResult assemble(int k, const Objective& obj, const OptimizerConfig& cfg, const std::vector<RunOutcome>& runs,
                         std::chrono::steady_clock::time_point t0) {
  OptimizerResult r;
  r.restarts = static_cast<int>(runs.size());
  for (std::size_t i = 0; i < runs.size(); ++i) {
    r.trace.push_back({stream_seed(cfg.seed, i), runs[i].iterations, runs[i].value});
    if (i == 0 || runs[i].value > runs[static_cast<std::size_t>(r.best_restart)].value) {
      r.best_restart = static_cast<int>(i);
    }
  }
  r.best = Configuration::from_parameters(k, runs[static_cast<std::size_t>(r.best_restart)].x);
  r.value = objective(r.best, obj);
  r.wall_time = seconds_since(t0);
  return r;
}

void validate(int k, const OptimizerConfig& cfg) {
  if (k < 4) throw Error(ErrorCode::InadmissibleParams, "optimization needs K >= 4");
  if (cfg.restarts < 1) throw Error(ErrorCode::InadmissibleParams, "need at least one restart");
}

}  // namespace

OptimizerResult optimize_serial(int k, const Objective& obj, const OptimizerConfig& config) {
  validate(k, config);
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<RunOutcome> runs(static_cast<std::size_t>(config.restarts));
  for (int i = 0; i < config.restarts; ++i) runs[static_cast<std::size_t>(i)] = restart(k, obj, config, i);
  return assemble(k, obj, config, runs, t0);
}

OptimizerResult optimize(int k, const Objective& obj, const OptimizerConfig& config) {
  validate(k, config);
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<RunOutcome> runs(static_cast<std::size_t>(config.restarts));
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < config.restarts; ++i) runs[static_cast<std::size_t>(i)] = restart(k, obj, config, i);
  return assemble(k, obj, config, runs, t0);
}

OptimizerResult local_refine(const Configuration& c0, const Objective& obj, const OptimizerConfig& config) {
  const int k = c0.size();
  if (k < 4) throw Error(ErrorCode::InadmissibleParams, "optimization needs K >= 4");
  const auto t0 = std::chrono::steady_clock::now();
  const double start = objective(c0, obj);
  if (!std::isfinite(start)) throw Error(ErrorCode::DegenerateInput, "starting configuration is degenerate");
  const auto pts = c0.points();
  const Configuration gauged = Configuration::from_points(pts);
  std::vector<RunOutcome> runs{run_from(k, obj, gauged.parameters(), 0.01, 0.01, config)};
  OptimizerResult r = assemble(k, obj, config, runs, t0);
  r.trace.front().seed = 0;
  r.start_value = start;
  return r;
}

bool congruent_by_rotation(std::span<const Point> a, std::span<const Point> b, double tol) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  const Eigen::Vector3d a0 = a[0];
  std::size_t j1 = 0;
  double best = -1.0;
  for (std::size_t j = 1; j < a.size(); ++j) {
    const double s = a0.cross(Eigen::Vector3d(a[j])).norm();
    if (s > best) best = s, j1 = j;
  }
  const Eigen::Vector3d a1 = a[j1];

  auto frame = [](const Eigen::Vector3d& p, const Eigen::Vector3d& q) {
    Eigen::Matrix3d m;
    const Eigen::Vector3d e0 = p.normalized();
    const Eigen::Vector3d e1 = (q - q.dot(e0) * e0).normalized();
    m.col(0) = e0;
    m.col(1) = e1;
    m.col(2) = e0.cross(e1);
    return m;
  };

  const Eigen::Matrix3d fa = frame(a0, a1);
  for (std::size_t i = 0; i < b.size(); ++i) {
    const Eigen::Vector3d b0 = b[i];
    if (std::abs(b0.norm() - a0.norm()) > tol) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Eigen::Vector3d b1 = b[j];
      if (j == i || (b1 - b0).norm() - (a1 - a0).norm() > tol || (a1 - a0).norm() - (b1 - b0).norm() > tol ||
          std::abs(b1.norm() - a1.norm()) > tol) {
        continue;
      }
      const Eigen::Matrix3d rot = frame(b0, b1) * fa.transpose();
      std::vector<bool> used(b.size(), false);
      bool ok = true;
      for (const auto& p : a) {
        const Eigen::Vector3d image = rot * Eigen::Vector3d(p);
        std::size_t hit = b.size();
        for (std::size_t m = 0; m < b.size(); ++m) {
          if (!used[m] && (Eigen::Vector3d(b[m]) - image).norm() <= tol) {
            hit = m;
            break;
          }
        }
        if (hit == b.size()) {
          ok = false;
          break;
        }
        used[hit] = true;
      }
      if (ok) return true;
    }
  }
  return false;
}

std::vector<Point> sweep_points(SweepFamily family, double parameter, int k) {
  if (family == SweepFamily::BermanHanes) return shape_points(ShapeSpec::berman_hanes(parameter));
  if (k < 5) throw Error(ErrorCode::InvalidSpec, "bipyramid needs K >= 5");
  const int m = k - 2;
  std::vector<Point> pts{unit(0.0, parameter), unit(0.0, M_PI)};
  for (int i = 0; i < m; ++i) pts.push_back(unit(2.0 * M_PI * i / m, M_PI / 2.0));
  return pts;
}

SweepTable sweep(SweepFamily family, std::span<const double> grid, std::span<const Objective> functionals, int k) {
  SweepTable t;
  t.columns.push_back(family == SweepFamily::BermanHanes ? "theta" : "apex_polar");
  for (const auto& f : functionals) t.columns.push_back(f.name());
  for (double x : grid) {
    const auto pts = sweep_points(family, x, k);
    std::vector<double> row{x};
    for (const auto& f : functionals) row.push_back(objective(pts, f));
    t.rows.push_back(std::move(row));
  }
  for (std::size_t c = 1; c < t.columns.size(); ++c) {
    std::size_t arg = 0;
    bool inc = true;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      if (t.rows[r][c] > t.rows[arg][c]) arg = r;
      if (r > 0 && !(t.rows[r][c] > t.rows[r - 1][c])) inc = false;
    }
    t.argmax.push_back(arg);
    t.increasing.push_back(inc);
  }
  return t;
}

CounterexampleSummary counterexample() {
  std::vector<double> grid;
  for (int i = 0; i <= 30; ++i) grid.push_back((580.0 + 2.0 * i) / 1000.0);
  const Objective functionals[] = {Objective::volume(), Objective::surface(), Objective::sp(0.25),
                                   Objective::sp(0.5), Objective::sp(0.75)};
  CounterexampleSummary s;
  s.table = sweep(SweepFamily::BermanHanes, grid, functionals);
  s.theta_star = berman_hanes_theta();

  const auto value = [](double theta, const Objective& obj) {
    return objective(sweep_points(SweepFamily::BermanHanes, theta), obj);
  };
  const double h = 1e-5;
  s.surface_at_theta_star = value(s.theta_star, Objective::surface());
  s.surface_at_062 = value(0.62, Objective::surface());
  s.volume_at_theta_star = value(s.theta_star, Objective::volume());
  s.volume_at_062 = value(0.62, Objective::volume());
  s.dvolume_dtheta =
      (value(s.theta_star + h, Objective::volume()) - value(s.theta_star - h, Objective::volume())) / (2.0 * h);
  s.dsurface_dtheta =
      (value(s.theta_star + h, Objective::surface()) - value(s.theta_star - h, Objective::surface())) / (2.0 * h);
  return s;
}

}  // namespace conevol
