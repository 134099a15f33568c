#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "errors.hpp"

namespace wirecut {

/// A regular n-gon (n >= 3) or the circle, its n -> infinity limit.
///
/// The circle is kept as its own variant rather than a very large n so that
/// its half angle is exactly pi/2 and its area kernel avoids the tan blow-up.
class Shape {
public:
  static Shape regular(long sides) {
    if (sides < 3) {
      throw argument_error("a regular polygon needs at least 3 sides, got " +
                           std::to_string(sides));
    }
    return Shape(sides);
  }

  static Shape circle() noexcept { return Shape(0); }

  bool is_circle() const noexcept { return sides_ == 0; }

  /// Side count; 0 for the circle.
  long sides() const noexcept { return sides_; }

  std::string name() const {
    return is_circle() ? std::string("circle") : std::to_string(sides_);
  }

  friend bool operator==(const Shape&, const Shape&) = default;

private:
  explicit Shape(long sides) noexcept : sides_(sides) {}

  long sides_;
};

/// Half of the interior angle, (1/2 - 1/n) pi; pi/2 for the circle.
inline double half_angle(const Shape& shape) noexcept {
  if (shape.is_circle()) {
    return std::numbers::pi / 2.0;
  }
  return (0.5 - 1.0 / static_cast<double>(shape.sides())) * std::numbers::pi;
}

// tan(theta_n) = cot(pi/n). Evaluating tan((1/2 - 1/n) pi) directly amplifies
// the rounding of theta by roughly n/pi, which swamps the gap between
// neighbouring n long before n = 1e6.
inline double tan_half_angle(long sides) noexcept {
  return 1.0 / std::tan(std::numbers::pi / static_cast<double>(sides));
}

/// Center-to-side distance of the shape bent from a wire of this perimeter.
/// For the circle this is the radius.
inline double apothem(const Shape& shape, double perimeter) noexcept {
  if (shape.is_circle()) {
    return perimeter / (2.0 * std::numbers::pi);
  }
  const auto n = static_cast<double>(shape.sides());
  return perimeter / (2.0 * n) * tan_half_angle(shape.sides());
}

/// 1 - 4 pi A / P^2: the fraction by which the shape falls short of the
/// circle enclosing the same perimeter. Zero for the circle.
///
/// Adjacent large n give areas that round to the same double, while this
/// quantity stays well resolved (series in x = pi/n for small x).
inline double isoperimetric_deficit(const Shape& shape) noexcept {
  if (shape.is_circle()) {
    return 0.0;
  }
  const double x = std::numbers::pi / static_cast<double>(shape.sides());
  if (x >= 0.1) {
    return 1.0 - x / std::tan(x);
  }
  // 1 - x cot x = x^2/3 + x^4/45 + 2x^6/945 + x^8/4725 + 2x^10/93555 + ...
  const double x2 = x * x;
  return x2 * (1.0 / 3.0 +
               x2 * (1.0 / 45.0 +
                     x2 * (2.0 / 945.0 + x2 * (1.0 / 4725.0 + x2 * (2.0 / 93555.0)))));
}

/// Weight n / tan(theta_n), whose reciprocal is the area per squared
/// perimeter times 4. Tends to pi as n grows.
inline double sigma(const Shape& shape) noexcept {
  if (shape.is_circle()) {
    return std::numbers::pi;
  }
  return std::numbers::pi / (1.0 - isoperimetric_deficit(shape));
}

/// Enclosed area, P^2 tan(theta_n) / (4n); P^2 / (4 pi) for the circle.
inline double area(const Shape& shape, double perimeter) noexcept {
  if (shape.is_circle()) {
    return perimeter * perimeter / (4.0 * std::numbers::pi);
  }
  // Same value as P^2 tan(theta_n) / (4n), routed through the deficit so
  // that areas never decrease with n even where neighbours round together.
  return perimeter * perimeter / (4.0 * std::numbers::pi) * (1.0 - isoperimetric_deficit(shape));
}

}  // namespace wirecut
