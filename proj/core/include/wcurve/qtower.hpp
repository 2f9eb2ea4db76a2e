#pragma once

#include <array>
#include <cstdint>

#include "wcurve/numeric.hpp"

namespace wcurve {

/// Element u + v*sqrt(d) of the real quadratic field Q(sqrt(d)).
struct QuadElem {
  Rational u, v;
  std::int64_t d = 0;

  bool is_rational() const { return v == 0; }
};

QuadElem quad_add(const QuadElem& a, const QuadElem& b);
QuadElem quad_sub(const QuadElem& a, const QuadElem& b);
QuadElem quad_mul(const QuadElem& a, const QuadElem& b);
QuadElem quad_div(const QuadElem& a, const QuadElem& b);

/// Element of the biquadratic field Q(sqrt(d1), sqrt(d2)) with exact
/// rational coordinates in the basis {1, sqrt(d1), sqrt(d2), sqrt(d1 d2)}.
/// d1 > 0 and d2 < 0 squarefree, so conj2 is complex conjugation.
class QTowerElem {
public:
  QTowerElem() = default;
  QTowerElem(std::int64_t d1, std::int64_t d2,
             Rational c0, Rational c1, Rational c2, Rational c3);

  static QTowerElem rational(std::int64_t d1, std::int64_t d2, const Rational& r);
  /// sqrt(n) for n with squarefree kernel d1, d2 or d1*d2 (or n square).
  static QTowerElem sqrt_of(std::int64_t d1, std::int64_t d2, std::int64_t n);

  const std::array<Rational, 4>& coeffs() const { return c_; }
  std::int64_t d1() const { return d1_; }
  std::int64_t d2() const { return d2_; }

  QTowerElem operator+(const QTowerElem& o) const;
  QTowerElem operator-(const QTowerElem& o) const;
  QTowerElem operator-() const;
  QTowerElem operator*(const QTowerElem& o) const;
  QTowerElem operator/(const QTowerElem& o) const;
  bool operator==(const QTowerElem& o) const;

  /// Conjugation sqrt(d1) -> -sqrt(d1).
  QTowerElem conj1() const;
  /// Conjugation sqrt(d2) -> -sqrt(d2) (complex conjugation for d2 < 0).
  QTowerElem conj2() const;

  bool is_rational() const;
  Rational as_rational() const;

  /// Im(z) as an element of Q(sqrt(d1)), in units of sqrt(|d2|):
  /// Im(z) = (u + v sqrt(d1)) * sqrt(|d2|).
  QuadElem imag_over_sqrt() const;
  /// Sign of the true imaginary part (requires d2 < 0).
  int imag_sign() const;

private:
  std::int64_t d1_ = 0, d2_ = 0;
  std::array<Rational, 4> c_{};
};

}  // namespace wcurve
