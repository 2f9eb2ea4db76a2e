#pragma once

#include <optional>
#include <utility>

#include "wcurve/arith.hpp"
#include "wcurve/numeric.hpp"

namespace wcurve {

/// Exact Euler characteristics attached to a discriminant.
struct ChiRecord {
  Rational chi_XD;   // meaningful for non-square D only
  Rational chi_WD;
  Rational chi_PD;   // non-square D only
  Rational chi_SD;
  std::optional<std::pair<Rational, Rational>> components;  // (W^0, W^1)
};

/// zeta_{D0}(-1) by Siegel's formula: (1/60) sum over e = D0 mod 2,
/// e^2 < D0, of sigma((D0 - e^2)/4), counting e and -e separately.
Rational zeta_minus1(std::int64_t D0);

/// F(D) = prod over primes p | f of (1 - (D0|p) p^-2).
Rational conductor_factor(const Discriminant& D);

/// chi(X_D) = 2 f^3 zeta_{D0}(-1) F(D); non-square D only.
Rational chi_XD(const Discriminant& D);

/// chi(W_D): -(9/2) chi(X_D) for non-square D; -f^2 (f-2) F(D)/16 for
/// D = f^2.
Rational chi_WD(const Discriminant& D);

/// Spin components of chi(W_D); requires D = 1 mod 8, D > 9.
std::pair<Rational, Rational> chi_WD_components(const Discriminant& D);

/// chi(P_D) = -(5/2) chi(X_D); non-square D only.
Rational chi_PD(const Discriminant& D);

/// chi(S_D): 0 for non-square D, -f^2 F(D)/12 for D = f^2.
Rational chi_SD(const Discriminant& D);

/// Assemble the full record.
ChiRecord chi_record(const Discriminant& D);

}  // namespace wcurve
