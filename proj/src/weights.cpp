#include "conevol/weights.hpp"

#include "conevol/error.hpp"

#include <charconv>
#include <cmath>
#include <string>

namespace conevol {

std::string_view to_string(Shape s) {
  switch (s) {
    case Shape::Concave: return "concave";
    case Shape::Convex: return "convex";
    case Shape::Affine: return "affine";
  }
  return "?";
}

std::string_view to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::Increasing: return "increasing";
    case Monotonicity::Decreasing: return "decreasing";
    case Monotonicity::Neither: return "neither";
  }
  return "?";
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::InadmissibleParams, what);
}

std::string fmt(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

double parse_number(std::string_view s, std::string_view spec) {
  double x = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw Error(ErrorCode::UsageError, "bad number in weight spec '" + std::string(spec) + "'");
  }
  return x;
}

}  // namespace

WeightFunction WeightFunction::make(WeightFamily family) {
  return std::visit(
      overloaded{
          [&](const weight::Power& p) {
            require(std::isfinite(p.exponent), "power exponent must be finite");
            const double q = p.exponent;
            if (q == 0.0) return WeightFunction(family, Shape::Affine, Monotonicity::Neither);
            if (q == 1.0) return WeightFunction(family, Shape::Affine, Monotonicity::Increasing);
            if (q > 0.0 && q < 1.0) return WeightFunction(family, Shape::Concave, Monotonicity::Increasing);
            if (q > 1.0) return WeightFunction(family, Shape::Convex, Monotonicity::Increasing);
            return WeightFunction(family, Shape::Convex, Monotonicity::Decreasing);
          },
          [&](const weight::Affine& a) {
            require(std::isfinite(a.a) && std::isfinite(a.b), "affine coefficients must be finite");
            require(a.a >= 0.0 && a.b >= 0.0 && a.a + a.b > 0.0,
                    "affine a + b t needs a >= 0, b >= 0, not both zero");
            return WeightFunction(family, Shape::Affine,
                                  a.b > 0.0 ? Monotonicity::Increasing : Monotonicity::Neither);
          },
          [&](const weight::Log1p& l) {
            require(std::isfinite(l.scale) && l.scale > 0.0, "log1p scale must be > 0");
            return WeightFunction(family, Shape::Concave, Monotonicity::Increasing);
          },
          [&](const weight::SqrtShift& s) {
            require(std::isfinite(s.c) && s.c >= 0.0, "sqrtshift c must be >= 0");
            return WeightFunction(family, Shape::Concave, Monotonicity::Increasing);
          },
          [&](const weight::Exp& e) {
            require(std::isfinite(e.rate) && e.rate > 0.0, "exp rate must be > 0");
            return WeightFunction(family, Shape::Convex, Monotonicity::Increasing);
          },
          [&](const weight::Reciprocal& r) {
            require(std::isfinite(r.shift) && r.shift >= 0.0, "reciprocal shift must be >= 0");
            return WeightFunction(family, Shape::Convex, Monotonicity::Decreasing);
          },
      },
      family);
}

WeightFunction WeightFunction::parse(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::UsageError, "weight spec '" + std::string(spec) + "' needs family:params");
  }
  const std::string_view name = spec.substr(0, colon);
  const std::string_view params = spec.substr(colon + 1);

  std::vector<double> values;
  std::size_t start = 0;
  while (true) {
    const auto comma = params.find(',', start);
    values.push_back(parse_number(params.substr(start, comma - start), spec));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }

  auto expect = [&](std::size_t n) {
    if (values.size() != n) {
      throw Error(ErrorCode::UsageError, "weight '" + std::string(name) + "' takes " + std::to_string(n) + " parameter(s)");
    }
  };
  try {
    if (name == "power") return expect(1), make(weight::Power{values[0]});
    if (name == "affine") return expect(2), make(weight::Affine{values[0], values[1]});
    if (name == "log1p") return expect(1), make(weight::Log1p{values[0]});
    if (name == "sqrtshift") return expect(1), make(weight::SqrtShift{values[0]});
    if (name == "exp") return expect(1), make(weight::Exp{values[0]});
    if (name == "reciprocal") return expect(1), make(weight::Reciprocal{values[0]});
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InadmissibleParams) throw Error(ErrorCode::UsageError, e.what());
    throw;
  }
  throw Error(ErrorCode::UsageError, "unknown weight family '" + std::string(name) + "'");
}

double WeightFunction::operator()(double t) const {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw Error(ErrorCode::DomainError, "weight evaluated at t = " + fmt(t));
  }
  return std::visit(overloaded{
                        [t](const weight::Power& p) { return std::pow(t, p.exponent); },
                        [t](const weight::Affine& a) { return a.a + a.b * t; },
                        [t](const weight::Log1p& l) { return std::log1p(l.scale * t); },
                        [t](const weight::SqrtShift& s) { return std::sqrt(t + s.c); },
                        [t](const weight::Exp& e) { return std::exp(e.rate * t); },
                        [t](const weight::Reciprocal& r) { return 1.0 / (t + r.shift); },
                    },
                    family_);
}

std::string WeightFunction::spec() const {
  return std::visit(overloaded{
                        [](const weight::Power& p) { return "power:" + fmt(p.exponent); },
                        [](const weight::Affine& a) { return "affine:" + fmt(a.a) + "," + fmt(a.b); },
                        [](const weight::Log1p& l) { return "log1p:" + fmt(l.scale); },
                        [](const weight::SqrtShift& s) { return "sqrtshift:" + fmt(s.c); },
                        [](const weight::Exp& e) { return "exp:" + fmt(e.rate); },
                        [](const weight::Reciprocal& r) { return "reciprocal:" + fmt(r.shift); },
                    },
                    family_);
}

Classification classify(const WeightFunction& w, double lo, double hi, int samples) {
  if (!(lo > 0.0) || !(hi > lo) || samples < 16) {
    throw Error(ErrorCode::InadmissibleParams, "classify needs 0 < lo < hi and samples >= 16");
  }
  std::vector<double> f(static_cast<std::size_t>(samples));
  const double step = (hi - lo) / (samples - 1);
  for (int i = 0; i < samples; ++i) f[static_cast<std::size_t>(i)] = w(lo + i * step);

  bool concave = true;
  bool convex = true;
  for (std::size_t i = 1; i + 1 < f.size(); ++i) {
    const double d2 = f[i - 1] - 2.0 * f[i] + f[i + 1];
    const double tol = 1e-10 * (std::abs(f[i - 1]) + 2.0 * std::abs(f[i]) + std::abs(f[i + 1]));
    if (d2 > tol) concave = false;
    if (d2 < -tol) convex = false;
  }
  bool increasing = true;
  bool decreasing = true;
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    const double d1 = f[i + 1] - f[i];
    const double tol = 1e-12 * (std::abs(f[i]) + std::abs(f[i + 1]));
    if (!(d1 > tol)) increasing = false;
    if (!(d1 < -tol)) decreasing = false;
  }

  if (!concave && !convex) throw Error(ErrorCode::ShapeMismatch, w.spec() + " is neither concave nor convex");
  Classification c{};
  c.shape = concave && convex ? Shape::Affine : (concave ? Shape::Concave : Shape::Convex);
  c.monotonicity = increasing ? Monotonicity::Increasing
                              : (decreasing ? Monotonicity::Decreasing : Monotonicity::Neither);
  if (c.shape != w.shape() || c.monotonicity != w.monotonicity()) {
    throw Error(ErrorCode::ShapeMismatch, w.spec() + " declared " + std::string(to_string(w.shape())) + "/" +
                                              std::string(to_string(w.monotonicity())) + " but measured " +
                                              std::string(to_string(c.shape)) + "/" +
                                              std::string(to_string(c.monotonicity)));
  }
  return c;
}

std::vector<WeightFunction> registry_weights() {
  return {
      make_weight(weight::Power{0.5}),   make_weight(weight::Affine{1.0, 2.0}),
      make_weight(weight::Log1p{1.0}),   make_weight(weight::SqrtShift{0.5}),
      make_weight(weight::Exp{1.0}),     make_weight(weight::Reciprocal{1.0}),
  };
}

}  // namespace conevol
