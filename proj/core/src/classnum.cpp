#include "wcurve/classnum.hpp"

#include <numeric>

#include "wcurve/arith.hpp"

namespace wcurve {

std::vector<QuadraticForm> reduced_forms(std::int64_t C) {
  if (C >= 0) throw domain_error("reduced_forms: discriminant must be negative");
  std::int64_t r = ((C % 4) + 4) % 4;
  if (r == 2 || r == 3)
    throw domain_error("reduced_forms: discriminant must be 0 or 1 mod 4");

  std::vector<QuadraticForm> forms;
  // Reduced: |b| <= a <= c, b = C mod 2, c = (b^2 - C)/(4a).
  for (std::int64_t a = 1; 3 * a * a <= -C; ++a) {
    for (std::int64_t b = -a; b <= a; ++b) {
      if (((b - C) % 2 + 2) % 2 != 0) continue;
      std::int64_t num = b * b - C;
      if (num % (4 * a) != 0) continue;
      std::int64_t c = num / (4 * a);
      if (c < a) continue;
      if (b < 0 && (c == a || -b == a)) continue;  // b >= 0 on the boundary
      if (std::gcd(std::gcd(a, b), c) != 1) continue;
      forms.push_back({a, b, c});
    }
  }
  return forms;
}

std::int64_t class_number(std::int64_t C) {
  return static_cast<std::int64_t>(reduced_forms(C).size());
}

Rational weighted_class_number(std::int64_t C) {
  std::int64_t h = class_number(C);
  if (C == -3) return Rational(h, 3);
  if (C == -4) return Rational(h, 2);
  return Rational(h);
}

}  // namespace wcurve
