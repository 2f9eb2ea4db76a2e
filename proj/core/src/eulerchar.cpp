#include "wcurve/eulerchar.hpp"

namespace wcurve {

Rational zeta_minus1(std::int64_t D0) {
  if (D0 <= 1) throw domain_error("zeta_minus1: D0 must be a fundamental discriminant > 1");
  std::int64_t sqrt_check = 1;
  while (sqrt_check * sqrt_check < D0) ++sqrt_check;
  if (sqrt_check * sqrt_check == D0)
    throw domain_error("zeta_minus1: D0 must be non-square");

  std::int64_t parity = D0 % 2;
  std::int64_t sum = 0;
  for (std::int64_t e = -sqrt_check; e <= sqrt_check; ++e) {
    if (e * e >= D0) continue;
    if (((e % 2) + 2) % 2 != parity) continue;
    sum += sigma1((D0 - e * e) / 4);
  }
  return Rational(sum, 60);
}

Rational conductor_factor(const Discriminant& D) {
  Rational F(1);
  std::int64_t f = D.conductor;
  for (std::int64_t p = 2; p * p <= f; ++p) {
    if (f % p != 0) continue;
    while (f % p == 0) f /= p;
    F *= Rational(p * p - kronecker(D.fundamental, p), p * p);
  }
  if (f > 1) F *= Rational(f * f - kronecker(D.fundamental, f), f * f);
  return F;
}

Rational chi_XD(const Discriminant& D) {
  if (D.is_square) throw domain_error("chi_XD: not defined for square discriminants here");
  std::int64_t f = D.conductor;
  return Rational(2 * f * f * f) * zeta_minus1(D.fundamental) * conductor_factor(D);
}

Rational chi_WD(const Discriminant& D) {
  if (D.is_square) {
    // The per-component values -f^2(f-1)F/32 and -f^2(f-3)F/32 force the
    // total -f^2 (f-2) F(D)/16.
    std::int64_t f = D.conductor;
    return Rational(-f * f * (f - 2), 16) * conductor_factor(D);
  }
  return Rational(-9, 2) * chi_XD(D);
}

std::pair<Rational, Rational> chi_WD_components(const Discriminant& D) {
  if (((D.value % 8) + 8) % 8 != 1 || D.value <= 9)
    throw domain_error("chi_WD_components: requires D = 1 mod 8, D > 9");
  if (D.is_square) {
    std::int64_t f = D.conductor;
    Rational F = conductor_factor(D);
    return {Rational(-f * f * (f - 1), 32) * F, Rational(-f * f * (f - 3), 32) * F};
  }
  Rational half = chi_WD(D) / 2;
  return {half, half};
}

Rational chi_PD(const Discriminant& D) {
  if (D.is_square) throw domain_error("chi_PD: not defined for square discriminants");
  return Rational(-5, 2) * chi_XD(D);
}

Rational chi_SD(const Discriminant& D) {
  if (!D.is_square) return Rational(0);
  std::int64_t f = D.conductor;
  return Rational(-f * f, 12) * conductor_factor(D);
}

ChiRecord chi_record(const Discriminant& D) {
  ChiRecord r;
  r.chi_WD = chi_WD(D);
  r.chi_SD = chi_SD(D);
  if (!D.is_square) {
    r.chi_XD = chi_XD(D);
    r.chi_PD = chi_PD(D);
  }
  if (((D.value % 8) + 8) % 8 == 1 && D.value > 9)
    r.components = chi_WD_components(D);
  return r;
}

}  // namespace wcurve
