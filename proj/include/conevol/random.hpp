#pragma once

#include "conevol/polytope.hpp"

#include <cstdint>
#include <random>

namespace conevol {

/// SplitMix64 finalizer; also used as a counter-based generator.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Uniform double in [0, 1) from the top 53 bits.
constexpr double to_unit(std::uint64_t x) { return static_cast<double>(x >> 11) * 0x1.0p-53; }

/// Derives an independent stream seed from (seed, index).
constexpr std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

/// Uniform direction on S^2 for draw number `index` of stream `seed`. Pure
/// function of its arguments, so any partition of the index range gives the
/// same directions.
Eigen::Vector3d direction_at(std::uint64_t seed, std::uint64_t index);

/// Sequential generator with a portable Gaussian (Box-Muller over mt19937_64),
/// so seeded streams are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return to_unit(engine_()); }
  double gaussian();
  /// Uniform point on S^{n-1} via a normalised Gaussian vector.
  Point on_sphere(int n);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace conevol
