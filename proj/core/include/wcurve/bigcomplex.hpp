#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include "wcurve/numeric.hpp"
#include "wcurve/qtower.hpp"

namespace wcurve {

using BigFloat = boost::multiprecision::mpfr_float;

struct BigComplex {
  BigFloat re, im;

  BigComplex operator+(const BigComplex& o) const { return {re + o.re, im + o.im}; }
  BigComplex operator-(const BigComplex& o) const { return {re - o.re, im - o.im}; }
  BigComplex operator-() const { return {-re, -im}; }
  BigComplex operator*(const BigComplex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  BigComplex operator/(const BigComplex& o) const;
};

BigFloat complex_abs(const BigComplex& z);
BigComplex complex_exp(const BigComplex& z);
BigComplex complex_pow(const BigComplex& z, std::int64_t n);

/// Sets the working mpfr precision for its lifetime.
class BigComplexCtx {
public:
  explicit BigComplexCtx(unsigned precision_bits = 256);

  unsigned precision_bits() const { return precision_bits_; }

  BigFloat to_float(const Rational& r) const;
  BigFloat to_float(const Integer& n) const;
  /// Embedding with sqrt(d1) > 0 and sqrt(d2) = i sqrt(|d2|).
  BigComplex to_complex(const QTowerElem& z) const;

  /// Nearest rational with denominator <= den_cap, by continued
  /// fractions.  Throws internal_error if the residual exceeds
  /// 2^(-precision_bits/4).
  Rational reconstruct_rational(const BigFloat& x) const;

  // The model coefficients are dyadic; their denominators already pass
  // 2^24 at D=92, so the cap leaves ample room below the residual guard.
  static constexpr std::int64_t kDenominatorCap = std::int64_t(1) << 48;

private:
  unsigned precision_bits_;
};

}  // namespace wcurve
