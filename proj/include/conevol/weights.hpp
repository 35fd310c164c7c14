#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace conevol {

enum class Shape { Concave, Convex, Affine };
enum class Monotonicity { Increasing, Decreasing, Neither };

std::string_view to_string(Shape s);
std::string_view to_string(Monotonicity m);

namespace weight {
/// t^exponent
struct Power { double exponent; };
/// a + b t, with a, b >= 0 and a + b > 0
struct Affine { double a; double b; };
/// log(1 + scale t), scale > 0
struct Log1p { double scale; };
/// sqrt(t + c), c >= 0
struct SqrtShift { double c; };
/// exp(rate t), rate > 0
struct Exp { double rate; };
/// 1 / (t + shift), shift >= 0
struct Reciprocal { double shift; };
}  // namespace weight

using WeightFamily =
    std::variant<weight::Power, weight::Affine, weight::Log1p, weight::SqrtShift, weight::Exp, weight::Reciprocal>;

/// A positive weight on (0, inf) from a closed registry. The shape class and
/// monotonicity are declared by the family and checked numerically by
/// classify(), which is what lets the inequality checks choose a direction.
class WeightFunction {
 public:
  /// Throws InadmissibleParams when the parameters leave the family's range.
  static WeightFunction make(WeightFamily family);

  /// Parses the CLI syntax `power:0.5`, `affine:1,2`, `log1p:1`,
  /// `sqrtshift:0.5`, `exp:1`, `reciprocal:1`. Throws UsageError.
  static WeightFunction parse(std::string_view spec);

  /// Throws DomainError for t <= 0 (or non-finite t).
  double operator()(double t) const;

  const WeightFamily& family() const { return family_; }
  Shape shape() const { return shape_; }
  Monotonicity monotonicity() const { return monotonicity_; }

  bool is_concave() const { return shape_ != Shape::Convex; }
  bool is_convex() const { return shape_ != Shape::Concave; }
  bool is_affine() const { return shape_ == Shape::Affine; }
  bool is_increasing() const { return monotonicity_ == Monotonicity::Increasing; }

  /// Canonical spec string, parseable by parse().
  std::string spec() const;

 private:
  WeightFunction(WeightFamily f, Shape s, Monotonicity m) : family_(f), shape_(s), monotonicity_(m) {}

  WeightFamily family_;
  Shape shape_;
  Monotonicity monotonicity_;
};

inline WeightFunction make_weight(WeightFamily family) { return WeightFunction::make(family); }

inline double evaluate(const WeightFunction& w, double t) { return w(t); }

struct Classification {
  Shape shape;
  Monotonicity monotonicity;
};

/// Second- and first-difference classification on an equispaced grid of
/// `samples` points in [lo, hi]. Throws ShapeMismatch when the result
/// disagrees with the declared metadata.
Classification classify(const WeightFunction& w, double lo, double hi, int samples = 64);

/// One representative per family: power:0.5, affine:1,2, log1p:1,
/// sqrtshift:0.5, exp:1, reciprocal:1.
std::vector<WeightFunction> registry_weights();

}  // namespace conevol
