#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wcurve/arith.hpp"
#include "wcurve/numeric.hpp"

namespace wcurve {

/// Pinwheel prototype (e,c,b) with D = -e^2 + 2bc, D = e = c = b mod 2,
/// |e| <= c <= b, and e <= 0 on the boundary (|e| = c or b = c).
struct PinwheelPrototype {
  std::int64_t e = 0, c = 0, b = 0;
  std::int64_t D = 0;

  auto operator<=>(const PinwheelPrototype&) const = default;
};

/// Counts of orbifold points by order.  e4 and e5 are nonzero only for
/// D = 8 and D = 5 respectively.
struct OrbifoldSignature {
  std::int64_t e2 = 0;
  std::int64_t e4 = 0;
  std::int64_t e5 = 0;

  bool operator==(const OrbifoldSignature&) const = default;
};

/// E0(D): all prototypes of discriminant D, sorted by (e,c,b).
std::vector<PinwheelPrototype> enumerate_prototypes_all(const Discriminant& D);

/// E(D): proper prototypes, i.e. E0(D) minus multiples of prototypes
/// for smaller discriminants.
std::vector<PinwheelPrototype> enumerate_prototypes(const Discriminant& D);

/// Closed-form count of order-two orbifold points by D mod 16
/// (weighted class numbers).  Integer for D > 8.
Rational e2_closed_form(const Discriminant& D);

/// Full signature; cross-checks #E(D) against the closed form for D > 8.
OrbifoldSignature orbifold_signature(const Discriminant& D);

/// Spin (c+f)/2 mod 2.  Requires D = 1 mod 8, D >= 9.
int spin_of_prototype(const PinwheelPrototype& p);

/// epsilon_0 of the associated ideal of norm 2c: (n-1)/2 mod 2 with n
/// the odd part of 2c.
int epsilon0_of_prototype(const PinwheelPrototype& p);

/// Orbifold point counts per spin component (spin 0 first).
/// Requires D = 1 mod 8, D > 9.
std::pair<std::int64_t, std::int64_t> e2_by_spin(const Discriminant& D);

}  // namespace wcurve
