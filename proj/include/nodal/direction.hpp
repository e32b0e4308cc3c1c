#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace nodal {

// A direction zeta on the unit circle, identified with -zeta: theta lives in
// [0, pi). Rationality is an input declaration (a primitive integer vector),
// never inferred from the float angle.
struct Direction {
  double theta = 0.0;
  std::optional<std::array<std::int64_t, 2>> rational;

  static Direction from_angle(double theta) {
    Direction d;
    const double pi = 3.14159265358979323846264338327950288;
    double t = std::fmod(theta, pi);
    if (t < 0.0) t += pi;
    if (t >= pi) t = 0.0;  // fmod rounding at the seam
    d.theta = t;
    return d;
  }

  static Direction from_integers(std::int64_t k1, std::int64_t k2) {
    if (k1 == 0 && k2 == 0)
      throw std::invalid_argument("Direction: (0,0) is not a direction");
    const std::int64_t g = std::gcd(std::llabs(k1), std::llabs(k2));
    k1 /= g;
    k2 /= g;
    if (k1 < 0 || (k1 == 0 && k2 < 0)) {  // canonical representative of {±k}
      k1 = -k1;
      k2 = -k2;
    }
    Direction d = from_angle(std::atan2(static_cast<double>(k2),
                                        static_cast<double>(k1)));
    d.rational = {{k1, k2}};
    return d;
  }

  std::int64_t height() const {
    if (!rational) throw std::logic_error("Direction: height needs a rational direction");
    return std::max(std::llabs((*rational)[0]), std::llabs((*rational)[1]));
  }

  // Unit vector along zeta and its rotate xi = zeta^perp. For rational
  // directions these come from the integer vector, avoiding atan2 round trips.
  std::array<double, 2> zeta_unit() const {
    if (rational) {
      const double k1 = static_cast<double>((*rational)[0]);
      const double k2 = static_cast<double>((*rational)[1]);
      const double norm = std::hypot(k1, k2);
      return {k1 / norm, k2 / norm};
    }
    return {std::cos(theta), std::sin(theta)};
  }

  std::array<double, 2> xi_unit() const {
    const auto z = zeta_unit();
    return {-z[1], z[0]};
  }
};

}  // namespace nodal
