#pragma once

#include <cstdint>
#include <vector>

#include "wcurve/numeric.hpp"

namespace wcurve {

/// A real quadratic discriminant D >= 5, D = 0 or 1 mod 4, split as
/// D = f^2 * D0 with D0 fundamental.  Square discriminants use the
/// convention D0 = 1.
struct Discriminant {
  std::int64_t value = 0;
  std::int64_t conductor = 1;    // f
  std::int64_t fundamental = 0;  // D0
  bool is_square = false;

  bool operator==(const Discriminant&) const = default;
};

std::vector<std::int64_t> divisors(std::int64_t n);
std::int64_t sigma1(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);
int moebius(std::int64_t n);
std::int64_t gcd64(std::int64_t a, std::int64_t b);

/// Kronecker symbol (a|p) for prime p, including p = 2 by the mod-8 rule.
int kronecker(std::int64_t a, std::int64_t p);

bool is_prime(std::int64_t n);

/// True iff D >= 5 and D = 0 or 1 mod 4.
bool is_valid_discriminant(std::int64_t d);

/// Split D into conductor and fundamental part.
Discriminant discriminant_split(std::int64_t d);

}  // namespace wcurve
