#pragma once

#include <cstdint>
#include <vector>

#include "wcurve/numeric.hpp"

namespace wcurve {

/// Primitive reduced binary quadratic form a x^2 + b xy + c y^2 of
/// negative discriminant b^2 - 4ac.
struct QuadraticForm {
  std::int64_t a = 0, b = 0, c = 0;

  std::int64_t disc() const { return b * b - 4 * a * c; }
  bool operator==(const QuadraticForm&) const = default;
};

/// All reduced primitive forms of discriminant C < 0.
std::vector<QuadraticForm> reduced_forms(std::int64_t C);

/// h(C): number of reduced primitive forms of discriminant C < 0.
std::int64_t class_number(std::int64_t C);

/// h(C) weighted by the unit group: h/3 at C = -3, h/2 at C = -4.
Rational weighted_class_number(std::int64_t C);

}  // namespace wcurve
