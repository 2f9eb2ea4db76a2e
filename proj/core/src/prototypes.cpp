#include "wcurve/prototypes.hpp"

#include <algorithm>

#include "wcurve/classnum.hpp"

namespace wcurve {

std::vector<PinwheelPrototype> enumerate_prototypes_all(const Discriminant& D) {
  const std::int64_t d = D.value;
  std::vector<PinwheelPrototype> out;
  const std::int64_t parity = ((d % 2) + 2) % 2;
  for (std::int64_t c = 1; c * c <= d; ++c) {
    if (c % 2 != parity) continue;
    for (std::int64_t e = -c; e <= c; ++e) {
      if (((e % 2) + 2) % 2 != parity) continue;
      std::int64_t num = d + e * e;
      if (num % (2 * c) != 0) continue;
      std::int64_t b = num / (2 * c);
      if (b % 2 != parity) continue;
      if (b < c) continue;
      if (e > 0 && (e == c || b == c)) continue;  // boundary: e <= 0
      out.push_back({e, c, b, d});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PinwheelPrototype> enumerate_prototypes(const Discriminant& D) {
  const std::int64_t d = D.value;
  auto all = enumerate_prototypes_all(D);
  std::vector<PinwheelPrototype> proper;
  for (const auto& p : all) {
    bool improper = false;
    for (std::int64_t g = 2; g * g <= d && !improper; ++g) {
      if (d % (g * g) != 0) continue;
      if (p.e % g != 0 || p.c % g != 0 || p.b % g != 0) continue;
      // The reduced triple is a prototype of D/g^2 (which may be as
      // small as 1) iff the common parity survives; the ordering and
      // boundary conditions are scale invariant.
      std::int64_t d_small = d / (g * g);
      std::int64_t parity = ((d_small % 2) + 2) % 2;
      improper = (((p.e / g) % 2 + 2) % 2 == parity) &&
                 ((p.c / g) % 2 + 2) % 2 == parity &&
                 ((p.b / g) % 2 + 2) % 2 == parity;
    }
    if (!improper) proper.push_back(p);
  }
  return proper;
}

Rational e2_closed_form(const Discriminant& D) {
  const std::int64_t d = D.value;
  auto h = [](std::int64_t C) { return weighted_class_number(C); };
  switch (((d % 16) + 16) % 16) {
    case 1: case 5: case 9: case 13:
      return h(-4 * d) / 2;
    case 0:
      return (h(-d) + 2 * h(-d / 4)) / 2;
    case 4:
      return Rational(0);
    case 8:
      return h(-d) / 2;
    case 12:
      return (h(-d) + 3 * h(-d / 4)) / 2;
    default:
      throw domain_error("e2_closed_form: D must be 0 or 1 mod 4");
  }
}

OrbifoldSignature orbifold_signature(const Discriminant& D) {
  if (D.value == 5) return {1, 0, 1};
  if (D.value == 8) return {0, 1, 0};
  std::int64_t count = static_cast<std::int64_t>(enumerate_prototypes(D).size());
  Rational closed = e2_closed_form(D);
  if (closed != Rational(count))
    throw internal_error("orbifold_signature: #E(" + std::to_string(D.value) +
                         ") = " + std::to_string(count) +
                         " disagrees with closed form " + to_string(closed));
  return {count, 0, 0};
}

int spin_of_prototype(const PinwheelPrototype& p) {
  if (((p.D % 8) + 8) % 8 != 1 || p.D < 9)
    throw domain_error("spin_of_prototype: requires D = 1 mod 8, D >= 9");
  const std::int64_t f = discriminant_split(p.D).conductor;
  return static_cast<int>((((p.c + f) / 2) % 2 + 2) % 2);
}

int epsilon0_of_prototype(const PinwheelPrototype& p) {
  if (((p.D % 8) + 8) % 8 != 1)
    throw domain_error("epsilon0_of_prototype: requires D = 1 mod 8");
  std::int64_t n = 2 * p.c;
  while (n % 2 == 0) n /= 2;
  return static_cast<int>(((n - 1) / 2) % 2);
}

std::pair<std::int64_t, std::int64_t> e2_by_spin(const Discriminant& D) {
  if (((D.value % 8) + 8) % 8 != 1 || D.value <= 9)
    throw domain_error("e2_by_spin: requires D = 1 mod 8, D > 9");
  std::int64_t n0 = 0, n1 = 0;
  for (const auto& p : enumerate_prototypes(D))
    (spin_of_prototype(p) == 0 ? n0 : n1)++;
  if (D.is_square) {
    int comp = static_cast<int>(((D.conductor + 1) / 2) % 2);
    if ((comp == 0 && n1 != 0) || (comp == 1 && n0 != 0))
      throw internal_error("e2_by_spin: square discriminant spin law violated");
  } else if (n0 != n1) {
    throw internal_error("e2_by_spin: spin counts unequal for non-square D=" +
                         std::to_string(D.value));
  }
  return {n0, n1};
}

}  // namespace wcurve
