#include "conevol/cli.hpp"

#include "conevol/balls.hpp"
#include "conevol/error.hpp"
#include "conevol/hull.hpp"
#include "conevol/inequalities.hpp"
#include "conevol/measures.hpp"
#include "conevol/optimizer.hpp"
#include "conevol/polytope_io.hpp"
#include "conevol/shapes.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace conevol::cli {

namespace {

std::string num(double x, Format f = Format::Records) {
  char buf[40];
  std::snprintf(buf, sizeof buf, f == Format::Table ? "%.10g" : "%.17g", x);
  return buf;
}

Error usage(const std::string& what) { return Error(ErrorCode::UsageError, what); }

void add_source(CLI::App* sub, CommandPlan& plan) {
  sub->add_option("--shape", plan.shape, "generator spec: tetra|cube|octa|dodeca|icosa|simplex:n|polygon:K|"
                                         "bipyramid:K|bh|bh:theta|random:n,K,seed");
  sub->add_option("--input", plan.input, "polytope point file");
}

void add_format(CLI::App* sub, CommandPlan& plan) {
  sub->add_option_function<std::string>(
         "--format",
         [&plan](const std::string& v) {
           if (v == "table") plan.format = Format::Table;
           else if (v == "records") plan.format = Format::Records;
           else throw usage("--format must be table or records");
         },
         "table|records")
      ->default_str("table");
}

void add_convention(CLI::App* sub, CommandPlan& plan) {
  sub->add_option_function<std::string>(
      "--convention",
      [&plan](const std::string& v) {
        if (v == "exterior") plan.convention = AngleConvention::Exterior;
        else if (v == "reflex") plan.convention = AngleConvention::Reflex;
        else throw usage("--convention must be exterior or reflex");
      },
      "edge angle convention: exterior|reflex");
}

void require_one_source(const CommandPlan& plan) {
  if (plan.shape && plan.input) throw usage("--shape and --input are mutually exclusive");
  if (!plan.shape && !plan.input) throw usage("one of --shape or --input is required");
}

void header(std::ostream& out, const CommandPlan& plan) {
  out << "# conevol " << plan.subcommand << " seed=" << plan.seed << '\n';
}

std::vector<Point> source_points(const CommandPlan& plan) {
  if (plan.shape) return shape_points(ShapeSpec::parse(*plan.shape));
  return read_points_file(*plan.input);
}

std::string source_name(const CommandPlan& plan) { return plan.shape ? ShapeSpec::parse(*plan.shape).name() : *plan.input; }

std::vector<WeightFunction> parse_weights(const std::vector<std::string>& specs) {
  std::vector<WeightFunction> ws;
  for (const auto& s : specs) ws.push_back(WeightFunction::parse(s));
  return ws;
}

// Runs fn, mapping the "functional undefined here" errors to an empty value.
std::optional<double> maybe(const std::function<double()>& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::PointNotInterior:
      case ErrorCode::NoInsphere:
      case ErrorCode::DomainError:
      case ErrorCode::UnsupportedFaceDim:
        return std::nullopt;
      default:
        throw;
    }
  }
}

class Fields {
 public:
  explicit Fields(Format f) : format_(f) {}
  void add(std::string key, std::optional<double> v) { rows_.emplace_back(std::move(key), v ? num(*v, format_) : "absent"); }
  void add(std::string key, std::string v) { rows_.emplace_back(std::move(key), std::move(v)); }
  void write(std::ostream& out) const {
    std::size_t width = 0;
    for (const auto& [k, v] : rows_) width = std::max(width, k.size());
    for (const auto& [k, v] : rows_) {
      if (format_ == Format::Records) out << k << '=' << v << '\n';
      else out << k << std::string(width + 2 - k.size(), ' ') << v << '\n';
    }
  }

 private:
  Format format_;
  std::vector<std::pair<std::string, std::string>> rows_;
};

int do_generate(const CommandPlan& plan, std::ostream& out) {
  const auto pts = shape_points(ShapeSpec::parse(*plan.shape));
  build_polytope(pts);
  if (plan.output) {
    std::ofstream f(*plan.output);
    if (!f) throw Error(ErrorCode::ParseError, "cannot write '" + *plan.output + "'");
    header(f, plan);
    write_points(f, pts);
  } else {
    header(out, plan);
    write_points(out, pts);
  }
  return kOk;
}

int do_compute(const CommandPlan& plan, std::ostream& out) {
  const auto weights = parse_weights(plan.weights);
  const Polytope q = build_polytope(source_points(plan));
  const BallInfo balls = ball_info(q);
  const Format f = plan.format;
  Fields fields(f);

  fields.add("dim", std::to_string(q.dim));
  fields.add("vertices", std::to_string(q.num_vertices()));
  if (q.dim == 3) fields.add("edges", std::to_string(q.num_edges()));
  fields.add("facets", std::to_string(q.num_facets()));
  fields.add("volume", volume(q));
  fields.add("surface_area", surface_area(q));
  fields.add("circumradius", balls.circumradius);
  fields.add("inradius", balls.chebyshev_radius);
  fields.add("has_insphere", balls.has_insphere ? "true" : "false");

  const FunctionalSummary s = summary(q, plan.convention);
  fields.add("mean_height", s.mean_height);
  fields.add("mean_facet_area", s.mean_facet_area);
  fields.add("height_sum", s.height_sum);
  if (q.dim == 3) {
    fields.add("convention", std::string(to_string(plan.convention)));
    fields.add("total_edge_length", s.total_edge_length);
    fields.add("mean_edge_angle", s.mean_edge_angle);
    fields.add("edge_curvature", edge_curvature(q, plan.convention));
    fields.add("mean_width", mean_width_exact(q));
    if (plan.samples > 0) {
      const auto mc = mean_width_monte_carlo(q, plan.samples, plan.seed);
      fields.add("mean_width_mc", mc.value);
      fields.add("mean_width_mc_stderr", mc.standard_error);
      fields.add("mean_width_mc_samples", std::to_string(mc.samples));
    }
  }
  const std::vector<double> ps = plan.p_values.empty() ? std::vector<double>{0.0, 0.5, 1.0} : plan.p_values;
  for (double p : ps) fields.add("s_p[" + num(p) + "]", maybe([&] { return s_p(q, p); }));
  for (const auto& w : weights) {
    const std::string tag = "[" + w.spec() + "]";
    fields.add("s_weighted" + tag, maybe([&] { return s_weighted(q, w); }));
    fields.add("s_weighted_in" + tag, maybe([&] { return s_weighted_in(q, w); }));
    fields.add("orlicz" + tag, maybe([&] { return orlicz_surface_area(q, w); }));
    if (q.dim == 3) {
      fields.add("edge_curvature_weighted" + tag,
                 maybe([&] { return edge_curvature_weighted(q, w, plan.convention, EdgeWeighting::Angle); }));
      fields.add("edge_curvature_weighted_in" + tag,
                 maybe([&] { return edge_curvature_weighted(q, w, plan.convention, EdgeWeighting::Length); }));
    }
  }
  header(out, plan);
  fields.write(out);
  return kOk;
}

int do_verify(const CommandPlan& plan, std::ostream& out) {
  const auto weights = plan.weights.empty() ? registry_weights() : parse_weights(plan.weights);
  SuiteOptions opt;
  opt.selection = parse_checks(plan.checks);
  opt.convention = plan.convention;
  const std::vector<NamedPolytope> shapes{{source_name(plan), build_polytope(source_points(plan))}};
  const SuiteResult res = run_suite(shapes, weights, opt);

  header(out, plan);
  const Format f = plan.format;
  if (f == Format::Table) {
    char line[1024];
    std::snprintf(line, sizeof line, "%-14s %-16s %-30s %18s %2s %18s %4s %4s %4s\n", "check", "weight", "tag", "lhs",
                  "", "rhs", "ok", "eq", "exp");
    out << line;
    for (const auto& e : res.entries) {
      const auto& r = e.report;
      std::snprintf(line, sizeof line, "%-14s %-16s %-30s %18.10g %2s %18.10g %4s %4s %4s%s%s%s\n",
                    std::string(to_string(e.check)).c_str(), e.weight.empty() ? "-" : e.weight.c_str(), r.tag.c_str(),
                    r.lhs, std::string(to_string(r.direction)).c_str(), r.rhs, r.satisfied ? "yes" : "NO",
                    r.equality ? "yes" : "no", r.expected_equality ? "yes" : "no",
                    r.gating ? "" : "  (non-gating)", r.notes.empty() ? "" : "  ", r.notes.c_str());
      out << line;
    }
  } else {
    for (const auto& e : res.entries) {
      const auto& r = e.report;
      out << "shape=" << e.shape << " weight=" << (e.weight.empty() ? "-" : e.weight) << " check=" << to_string(e.check)
          << " tag=" << r.tag << " lhs=" << num(r.lhs) << " rhs=" << num(r.rhs) << " direction=" << to_string(r.direction)
          << " satisfied=" << r.satisfied << " slack=" << num(r.slack) << " equality=" << r.equality
          << " expected_equality=" << r.expected_equality << " gating=" << r.gating << " notes=" << r.notes << '\n';
    }
  }
  for (const auto& e : res.errors) {
    out << "error check=" << to_string(e.check) << " weight=" << (e.weight.empty() ? "-" : e.weight)
        << " code=" << to_string(e.code) << " message=" << e.message << '\n';
  }
  out << "reports=" << res.entries.size() << "\nviolations=" << res.violations() << "\nerrors=" << res.errors.size()
      << '\n';

  if (res.violations() > 0) return kViolation;
  if (std::any_of(res.errors.begin(), res.errors.end(), [](const SuiteError& e) { return e.code == ErrorCode::UsageError; }))
    return kUsage;
  return res.errors.empty() ? kOk : kComputation;
}

int do_optimize(const CommandPlan& plan, std::ostream& out, std::ostream& err) {
  const Objective obj = Objective::parse(plan.objective);
  OptimizerConfig cfg;
  cfg.seed = plan.seed;
  cfg.restarts = plan.restarts;
  cfg.max_iterations = plan.max_iterations;

  OptimizerResult res;
  const bool refine = plan.shape || plan.input;
  if (refine) {
    const auto pts = source_points(plan);
    if (pts.empty() || pts.front().size() != 3) throw usage("refinement needs points in R^3");
    res = local_refine(Configuration::from_points(pts), obj, cfg);
  } else {
    if (plan.k < 4) throw usage("--k must be at least 4");
    res = optimize(plan.k, obj, cfg);
  }

  header(out, plan);
  Fields fields(Format::Records);
  fields.add("mode", std::string(refine ? "local_refine" : "multistart"));
  fields.add("k", std::to_string(res.best.size()));
  fields.add("objective", obj.name());
  fields.add("value", res.value);
  if (refine) {
    fields.add("start_value", res.start_value);
    fields.add("improvement", res.value - res.start_value);
  }
  fields.add("restarts", std::to_string(res.restarts));
  fields.add("best_restart", std::to_string(res.best_restart));
  for (std::size_t i = 0; i < res.trace.size(); ++i) {
    const auto& t = res.trace[i];
    const std::string pre = "restart[" + std::to_string(i) + "].";
    fields.add(pre + "seed", std::to_string(t.seed));
    fields.add(pre + "iterations", std::to_string(t.iterations));
    fields.add(pre + "value", t.value);
  }
  fields.write(out);
  out << "# best configuration\n";
  write_points(out, res.best.points());
  if (plan.output) write_points_file(*plan.output, res.best.points());
  err << "wall_time=" << res.wall_time << "s\n";
  return kOk;
}

int do_counterexample(const CommandPlan& plan, std::ostream& out) {
  const CounterexampleSummary s = counterexample();
  std::ostringstream csv;
  csv << "theta,volume,surface,s_p_0.25,s_p_0.5,s_p_0.75\n";
  for (const auto& row : s.table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) csv << (i ? "," : "") << num(row[i]);
    csv << '\n';
  }
  header(out, plan);
  if (plan.output) {
    std::ofstream f(*plan.output);
    if (!f) throw Error(ErrorCode::ParseError, "cannot write '" + *plan.output + "'");
    f << csv.str();
  } else {
    out << csv.str();
  }
  const std::size_t vol_col = 0, surf_col = 1;
  out << "theta_star=" << num(s.theta_star) << '\n'
      << "surface_at_theta_star=" << num(s.surface_at_theta_star) << '\n'
      << "surface_at_0.62=" << num(s.surface_at_062) << '\n'
      << "volume_at_theta_star=" << num(s.volume_at_theta_star) << '\n'
      << "volume_at_0.62=" << num(s.volume_at_062) << '\n'
      << "dvolume_dtheta_at_theta_star=" << num(s.dvolume_dtheta) << '\n'
      << "dsurface_dtheta_at_theta_star=" << num(s.dsurface_dtheta) << '\n'
      << "volume_grid_argmax_theta=" << num(s.table.rows[s.table.argmax[vol_col]][0]) << '\n'
      << "surface_increasing_on_grid=" << (s.table.increasing[surf_col] ? "true" : "false") << '\n';
  return kOk;
}

void apply_thread_cap() {
#ifdef _OPENMP
  if (const char* v = std::getenv("CONEVOL_THREADS")) {
    const int n = std::atoi(v);
    if (n > 0) omp_set_num_threads(n);
  }
#endif
}

}  // namespace

CommandPlan parse(std::span<const std::string> args) {
  CommandPlan plan;
  CLI::App app{"Weighted cone-volume functionals and inequalities on convex polytopes", "conevol"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("generate", "write a named or random shape as a point file");
  gen->add_option("--spec", plan.shape, "generator spec")->required();
  gen->add_option("-o,--output", plan.output, "output file (default stdout)");
  gen->add_option("--seed", plan.seed, "echoed in the header");

  auto* compute = app.add_subcommand("compute", "evaluate the functionals of one polytope");
  add_source(compute, plan);
  compute->add_option("--weight", plan.weights, "weight spec, e.g. power:0.5 (repeatable)");
  compute->add_option("--p", plan.p_values, "L_p exponents (default 0 0.5 1)");
  compute->add_option("--samples", plan.samples, "Monte Carlo mean-width directions (0 = off)");
  compute->add_option("--seed", plan.seed, "Monte Carlo seed");
  add_format(compute, plan);
  add_convention(compute, plan);

  auto* verify = app.add_subcommand("verify", "check the inequalities on one polytope");
  add_source(verify, plan);
  verify->add_option("--weight", plan.weights, "weight spec (repeatable; default: the registry)");
  verify->add_option("--checks", plan.checks, "comma list or all");
  verify->add_option("--seed", plan.seed, "echoed in the header");
  add_format(verify, plan);
  add_convention(verify, plan);

  auto* opt = app.add_subcommand("optimize", "maximize a functional over K points on the sphere");
  opt->add_option("--k", plan.k, "number of points");
  opt->add_option("--objective", plan.objective, "volume|surface|sp:p|weighted:<weight>");
  opt->add_option("--restarts", plan.restarts, "multistart count")->check(CLI::PositiveNumber);
  opt->add_option("--seed", plan.seed, "base seed");
  opt->add_option("--max-iterations", plan.max_iterations, "Nelder-Mead iterations per run")->check(CLI::PositiveNumber);
  opt->add_option("--shape", plan.shape, "refine locally from this shape instead of a global search");
  opt->add_option("--input", plan.input, "refine locally from this point file");
  opt->add_option("-o,--output", plan.output, "also write the best configuration here");

  auto* ce = app.add_subcommand("counterexample", "sweep the 8-vertex maximum-volume family");
  ce->add_option("-o,--output", plan.output, "write the CSV here instead of stdout");
  ce->add_option("--seed", plan.seed, "echoed in the header");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    plan.help = app.help();
    return plan;
  } catch (const CLI::CallForAllHelp&) {
    plan.help = app.help("", CLI::AppFormatMode::All);
    return plan;
  } catch (const CLI::ParseError& e) {
    throw usage(e.what());
  }

  for (auto* sub : app.get_subcommands()) plan.subcommand = sub->get_name();
  if (plan.subcommand == "compute" || plan.subcommand == "verify") require_one_source(plan);
  if (plan.subcommand == "optimize") {
    if (plan.shape && plan.input) throw usage("--shape and --input are mutually exclusive");
    if (!plan.shape && !plan.input && plan.k == 0) throw usage("--k is required");
    Objective::parse(plan.objective);
  }
  if (plan.subcommand == "verify") parse_checks(plan.checks);
  if (plan.shape) ShapeSpec::parse(*plan.shape);
  parse_weights(plan.weights);
  return plan;
}

int execute(const CommandPlan& plan, std::ostream& out, std::ostream& err) {
  if (plan.help) {
    out << *plan.help;
    return kOk;
  }
  apply_thread_cap();
  if (plan.subcommand == "generate") return do_generate(plan, out);
  if (plan.subcommand == "compute") return do_compute(plan, out);
  if (plan.subcommand == "verify") return do_verify(plan, out);
  if (plan.subcommand == "optimize") return do_optimize(plan, out, err);
  if (plan.subcommand == "counterexample") return do_counterexample(plan, out);
  throw usage("unknown subcommand '" + plan.subcommand + "'");
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  try {
    return execute(parse(args), out, err);
  } catch (const Error& e) {
    err << "conevol: " << e.what() << '\n';
    const bool is_usage = e.code() == ErrorCode::UsageError || e.code() == ErrorCode::InvalidSpec;
    return is_usage ? kUsage : kComputation;
  } catch (const std::exception& e) {
    err << "conevol: " << e.what() << '\n';
    return kComputation;
  }
}

}  // namespace conevol::cli
