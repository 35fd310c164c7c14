#include <doctest.h>

#include "conevol/functionals.hpp"
#include "conevol/inequalities.hpp"
#include "conevol/optimizer.hpp"
#include "conevol/shapes.hpp"

#include <omp.h>

using namespace conevol;

namespace {

struct ThreadGuard {
  int saved = omp_get_max_threads();
  explicit ThreadGuard(int n) { omp_set_num_threads(n); }
  ~ThreadGuard() { omp_set_num_threads(saved); }
};

bool same(const BoundReport& a, const BoundReport& b) {
  return a.tag == b.tag && a.lhs == b.lhs && a.rhs == b.rhs && a.direction == b.direction &&
         a.satisfied == b.satisfied && a.equality == b.equality && a.expected_equality == b.expected_equality &&
         a.gating == b.gating && a.notes == b.notes;
}

}  // namespace

TEST_CASE("Monte Carlo mean width does not depend on the thread count") {
  auto q = generate(ShapeSpec::parse("random:3,40,9"));
  auto ref = mean_width_monte_carlo_serial(q, 300001, 5);
  for (int threads : {1, 2, 3, 8}) {
    ThreadGuard g(threads);
    auto par = mean_width_monte_carlo(q, 300001, 5);
    CAPTURE(threads);
    CHECK(par.value == ref.value);
    CHECK(par.standard_error == ref.standard_error);
    CHECK(par.samples == ref.samples);
  }
}

TEST_CASE("suite output does not depend on the thread count") {
  std::vector<NamedPolytope> shapes;
  for (const char* name : {"tetra", "cube", "octa", "dodeca", "icosa", "bipyramid:6", "bh", "polygon:5", "simplex:4"}) {
    auto spec = ShapeSpec::parse(name);
    shapes.push_back({spec.name(), generate(spec)});
  }
  for (int i = 0; i < 20; ++i) {
    auto spec = ShapeSpec::random_inscribed(3, 5 + i, 70 + i);
    shapes.push_back({spec.name(), generate(spec)});
  }
  auto weights = registry_weights();
  auto ref = run_suite_serial(shapes, weights);
  for (int threads : {1, 2, 4}) {
    ThreadGuard g(threads);
    auto par = run_suite(shapes, weights);
    CAPTURE(threads);
    REQUIRE(par.entries.size() == ref.entries.size());
    REQUIRE(par.errors.size() == ref.errors.size());
    for (std::size_t i = 0; i < ref.entries.size(); ++i) {
      CHECK(par.entries[i].shape_index == ref.entries[i].shape_index);
      CHECK(par.entries[i].weight == ref.entries[i].weight);
      CHECK(par.entries[i].check == ref.entries[i].check);
      CHECK(same(par.entries[i].report, ref.entries[i].report));
    }
    for (std::size_t i = 0; i < ref.errors.size(); ++i) {
      CHECK(par.errors[i].shape_index == ref.errors[i].shape_index);
      CHECK(par.errors[i].message == ref.errors[i].message);
    }
  }
}

TEST_CASE("optimizer result does not depend on the thread count") {
  OptimizerConfig cfg;
  cfg.seed = 11;
  cfg.restarts = 8;
  auto ref = optimize_serial(5, Objective::surface(), cfg);
  for (int threads : {1, 3}) {
    ThreadGuard g(threads);
    auto par = optimize(5, Objective::surface(), cfg);
    CHECK(par.value == ref.value);
    CHECK(par.best_restart == ref.best_restart);
    CHECK(par.best.parameters() == ref.best.parameters());
    REQUIRE(par.trace.size() == ref.trace.size());
    for (std::size_t i = 0; i < ref.trace.size(); ++i) {
      CHECK(par.trace[i].seed == ref.trace[i].seed);
      CHECK(par.trace[i].iterations == ref.trace[i].iterations);
      CHECK(par.trace[i].value == ref.trace[i].value);
    }
  }
}
