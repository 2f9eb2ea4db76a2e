#include "wcurve/bigcomplex.hpp"

#include <cmath>

namespace wcurve {

BigComplex BigComplex::operator/(const BigComplex& o) const {
  BigFloat n = o.re * o.re + o.im * o.im;
  return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
}

BigFloat complex_abs(const BigComplex& z) {
  return sqrt(z.re * z.re + z.im * z.im);
}

BigComplex complex_exp(const BigComplex& z) {
  BigFloat r = exp(z.re);
  return {r * cos(z.im), r * sin(z.im)};
}

BigComplex complex_pow(const BigComplex& z, std::int64_t n) {
  if (n < 0) throw domain_error("complex_pow: negative exponent");
  BigComplex acc{BigFloat(1), BigFloat(0)};
  BigComplex base = z;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

BigComplexCtx::BigComplexCtx(unsigned precision_bits)
    : precision_bits_(precision_bits) {
  if (precision_bits < 64) throw domain_error("precision must be at least 64 bits");
  unsigned digits = static_cast<unsigned>(precision_bits * 0.30103) + 4;
  BigFloat::default_precision(digits);
}

BigFloat BigComplexCtx::to_float(const Integer& n) const {
  return BigFloat(n.str());
}

BigFloat BigComplexCtx::to_float(const Rational& r) const {
  return to_float(Integer(numerator(r))) / to_float(Integer(denominator(r)));
}

BigComplex BigComplexCtx::to_complex(const QTowerElem& z) const {
  if (z.d2() >= 0) throw domain_error("to_complex: requires d2 < 0");
  BigFloat s1 = sqrt(BigFloat(z.d1()));
  BigFloat s2 = sqrt(BigFloat(-z.d2()));
  const auto& c = z.coeffs();
  BigFloat re = to_float(c[0]) + to_float(c[1]) * s1;
  BigFloat im = to_float(c[2]) * s2 + to_float(c[3]) * s1 * s2;
  return {re, im};
}

Rational BigComplexCtx::reconstruct_rational(const BigFloat& x) const {
  // Continued fraction convergents of x until the denominator cap.
  BigFloat rem = x;
  Integer p0 = 1, q0 = 0, p1 = 0, q1 = 1;  // (p0,q0) is the latest convergent
  Rational best;
  for (int step = 0; step < 256; ++step) {
    BigFloat fl = floor(rem);
    Integer a = fl.convert_to<Integer>();
    Integer p2 = a * p0 + p1, q2 = a * q0 + q1;
    if (q2 > kDenominatorCap && step > 0) break;
    p1 = p0; q1 = q0; p0 = p2; q0 = q2;
    best = Rational(p0, q0);
    BigFloat frac = rem - fl;
    if (frac < pow(BigFloat(2), -static_cast<int>(precision_bits_) / 2)) break;
    rem = 1 / frac;
  }
  BigFloat residual = abs(x - to_float(best));
  if (residual > pow(BigFloat(2), -static_cast<int>(precision_bits_) / 4))
    throw internal_error("reconstruct_rational: residual too large; raise precision");
  return best;
}

}  // namespace wcurve
