#include "conevol/random.hpp"

#include <cmath>

namespace conevol {

Eigen::Vector3d direction_at(std::uint64_t seed, std::uint64_t index) {
  const std::uint64_t s = stream_seed(seed, index);
  const double z = 2.0 * to_unit(s) - 1.0;
  const double phi = 2.0 * M_PI * to_unit(splitmix64(s));
  const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {rho * std::cos(phi), rho * std::sin(phi), z};
}

double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = 0.0;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  const double u2 = uniform();
  const double mag = std::sqrt(-2.0 * std::log(u1));
  spare_ = mag * std::sin(2.0 * M_PI * u2);
  has_spare_ = true;
  return mag * std::cos(2.0 * M_PI * u2);
}

Point Rng::on_sphere(int n) {
  Point p(n);
  double norm = 0.0;
  do {
    for (int i = 0; i < n; ++i) p[i] = gaussian();
    norm = p.norm();
  } while (norm < 1e-12);
  return p / norm;
}

}  // namespace conevol
