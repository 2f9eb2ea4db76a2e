#include "wcurve/qtower.hpp"

#include <cmath>
#include <numeric>

namespace wcurve {

namespace {
// Exact sign of u + v*sqrt(d), d > 0 non-square.
int quad_sign(const QuadElem& x) {
  int su = x.u > 0 ? 1 : (x.u < 0 ? -1 : 0);
  int sv = x.v > 0 ? 1 : (x.v < 0 ? -1 : 0);
  if (su == 0) return sv;
  if (sv == 0 || su == sv) return su;
  return (x.u * x.u > Rational(x.d) * x.v * x.v) ? su : sv;
}
}  // namespace

QuadElem quad_add(const QuadElem& a, const QuadElem& b) {
  return {a.u + b.u, a.v + b.v, a.d};
}

QuadElem quad_sub(const QuadElem& a, const QuadElem& b) {
  return {a.u - b.u, a.v - b.v, a.d};
}

QuadElem quad_mul(const QuadElem& a, const QuadElem& b) {
  return {a.u * b.u + Rational(a.d) * a.v * b.v, a.u * b.v + a.v * b.u, a.d};
}

QuadElem quad_div(const QuadElem& a, const QuadElem& b) {
  Rational norm = b.u * b.u - Rational(b.d) * b.v * b.v;
  if (norm == 0) throw domain_error("quad_div: division by zero");
  QuadElem conj{b.u, -b.v, b.d};
  QuadElem num = quad_mul(a, conj);
  return {num.u / norm, num.v / norm, a.d};
}

QTowerElem::QTowerElem(std::int64_t d1, std::int64_t d2,
                       Rational c0, Rational c1, Rational c2, Rational c3)
    : d1_(d1), d2_(d2), c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

QTowerElem QTowerElem::rational(std::int64_t d1, std::int64_t d2, const Rational& r) {
  return QTowerElem(d1, d2, r, 0, 0, 0);
}

QTowerElem QTowerElem::sqrt_of(std::int64_t d1, std::int64_t d2, std::int64_t n) {
  // Factor n = k^2 * kernel with kernel squarefree.
  std::int64_t k = 1, kernel = n;
  for (std::int64_t p = 2; p * p <= std::llabs(kernel); ++p) {
    while (kernel % (p * p) == 0) {
      kernel /= p * p;
      k *= p;
    }
  }
  if (kernel == 1) return rational(d1, d2, Rational(k));
  if (kernel == d1) return QTowerElem(d1, d2, 0, Rational(k), 0, 0);
  if (kernel == d2) return QTowerElem(d1, d2, 0, 0, Rational(k), 0);
  // sqrt(d1 d2) = sqrt(d1)*sqrt(d2); its square is d1*d2 whose kernel is
  // d1*d2 / g^2 with g = gcd(d1, d2).
  std::int64_t g = std::llabs(std::gcd(d1, d2));
  if (kernel == d1 * d2 / (g * g))
    return QTowerElem(d1, d2, 0, 0, 0, Rational(k, g));
  throw domain_error("sqrt_of: " + std::to_string(n) +
                     " has no square root in this tower");
}

QTowerElem QTowerElem::operator+(const QTowerElem& o) const {
  return QTowerElem(d1_, d2_, c_[0] + o.c_[0], c_[1] + o.c_[1],
                    c_[2] + o.c_[2], c_[3] + o.c_[3]);
}

QTowerElem QTowerElem::operator-(const QTowerElem& o) const {
  return QTowerElem(d1_, d2_, c_[0] - o.c_[0], c_[1] - o.c_[1],
                    c_[2] - o.c_[2], c_[3] - o.c_[3]);
}

QTowerElem QTowerElem::operator-() const {
  return QTowerElem(d1_, d2_, -c_[0], -c_[1], -c_[2], -c_[3]);
}

QTowerElem QTowerElem::operator*(const QTowerElem& o) const {
  // Basis products: with g = sqrt(d1), h = sqrt(d2), gh = sqrt(d1 d2):
  // g*g = d1, h*h = d2, g*h = gh, g*gh = d1*h, h*gh = d2*g, gh*gh = d1*d2.
  const Rational D1(d1_), D2(d2_);
  const auto& a = c_;
  const auto& b = o.c_;
  Rational r0 = a[0] * b[0] + D1 * a[1] * b[1] + D2 * a[2] * b[2] +
                D1 * D2 * a[3] * b[3];
  Rational r1 = a[0] * b[1] + a[1] * b[0] + D2 * (a[2] * b[3] + a[3] * b[2]);
  Rational r2 = a[0] * b[2] + a[2] * b[0] + D1 * (a[1] * b[3] + a[3] * b[1]);
  Rational r3 = a[0] * b[3] + a[3] * b[0] + a[1] * b[2] + a[2] * b[1];
  return QTowerElem(d1_, d2_, r0, r1, r2, r3);
}

QTowerElem QTowerElem::conj1() const {
  return QTowerElem(d1_, d2_, c_[0], -c_[1], c_[2], -c_[3]);
}

QTowerElem QTowerElem::conj2() const {
  return QTowerElem(d1_, d2_, c_[0], c_[1], -c_[2], -c_[3]);
}

QTowerElem QTowerElem::operator/(const QTowerElem& o) const {
  QTowerElem adj = o.conj1() * o.conj2() * o.conj1().conj2();
  QTowerElem norm_elem = o * adj;
  if (!norm_elem.is_rational())
    throw internal_error("qtower: norm is not rational");
  Rational norm = norm_elem.as_rational();
  if (norm == 0) throw domain_error("qtower: division by zero");
  QTowerElem num = *this * adj;
  return QTowerElem(d1_, d2_, num.c_[0] / norm, num.c_[1] / norm,
                    num.c_[2] / norm, num.c_[3] / norm);
}

bool QTowerElem::operator==(const QTowerElem& o) const {
  return c_ == o.c_;
}

bool QTowerElem::is_rational() const {
  return c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

Rational QTowerElem::as_rational() const {
  if (!is_rational()) throw internal_error("qtower: element is not rational");
  return c_[0];
}

QuadElem QTowerElem::imag_over_sqrt() const {
  if (d2_ >= 0) throw domain_error("imag_over_sqrt: requires d2 < 0");
  // Real part lives in c_[0], c_[1]; imaginary part is
  // (c_[2] + c_[3] sqrt(d1)) * sqrt(|d2|).
  return {c_[2], c_[3], d1_};
}

int QTowerElem::imag_sign() const {
  return quad_sign(imag_over_sqrt());
}

}  // namespace wcurve
