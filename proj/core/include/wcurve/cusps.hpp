#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wcurve/arith.hpp"

namespace wcurve {

/// Component of the product locus: D = e^2 + 4 l^2 m with e >= 0,
/// l, m > 0 and gcd(e, l) = 1.  The (e,l,m) and (-e,l,m) components are
/// glued; e = 0 is glued to itself.
struct PDComponent {
  std::int64_t e = 0, l = 0, m = 0;

  auto operator<=>(const PDComponent&) const = default;
};

/// Cusp p/q of the level-N modular curve, gcd(p,q) = 1, infinity = 1/0.
struct Cusp {
  std::int64_t p = 1, q = 0;

  auto operator<=>(const Cusp&) const = default;
};

/// All components with e >= 0, sorted.
std::vector<PDComponent> pd_components(const Discriminant& D);

/// Number of cusps of Y_0(m): sum over d | m of phi(gcd(d, m/d)).
std::int64_t y0_cusp_count(std::int64_t m);

/// Complete set of canonical cusp representatives for Y_0(N).
std::vector<Cusp> cusp_representatives(std::int64_t N);

/// Gamma_0(N)-equivalence of cusps.
bool cusps_equivalent(std::int64_t N, const Cusp& a, const Cusp& b);

/// Lexicographically least equivalent representative; idempotent.
Cusp cusp_canonicalize(std::int64_t N, const Cusp& c);

/// Image of a cusp under the Fricke involution z -> -1/(mz).
Cusp fricke_image(std::int64_t m, const Cusp& c);

/// Number of orbits of the Fricke involution on cusp classes of Y_0(m).
std::int64_t fricke_orbits(std::int64_t m);

/// C(W_D) for non-square D: sum over P_D components of Y_0(m) cusps,
/// with Fricke orbits on the self-glued e = 0 components.
std::int64_t cusp_count_wd(const Discriminant& D);

/// Even split (C/2, C/2); requires non-square D = 1 mod 8, D > 9.
std::pair<std::int64_t, std::int64_t> cusp_split(const Discriminant& D);

/// One-cylinder cusps of W_{f^2}: cyclic classes of positive triples
/// summing to f with gcd 1.
std::int64_t one_cylinder_count(std::int64_t f);

/// C_2(W^0) - C_2(W^1) for square D = f^2, f odd:
/// sum over b+c = f, 0 < c < b of phi(gcd(b,c)).
std::int64_t two_cyl_spin_difference(std::int64_t f);

/// h_0(P_D) with the bound h_0 <= D^{3/4} + 150 asserted.
std::int64_t count_pd_components(const Discriminant& D);

}  // namespace wcurve
