#include "wcurve/modular.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <cmath>

#include "wcurve/lattice.hpp"

namespace wcurve {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

std::int64_t theta_terms(const BigComplexCtx& ctx, const BigComplex& tau) {
  double imt = tau.im.convert_to<double>();
  if (imt <= 0) throw domain_error("theta: Im tau must be positive");
  double need = (ctx.precision_bits() + 48) * 0.6931471805599453;
  return static_cast<std::int64_t>(std::sqrt(need / (kPi * imt))) + 3;
}

}  // namespace

BigComplex theta3(const BigComplexCtx& ctx, const BigComplex& tau) {
  std::int64_t N = theta_terms(ctx, tau);
  BigFloat pi = 4 * atan(BigFloat(1));
  BigComplex w = complex_exp({-pi * tau.im, pi * tau.re});
  BigComplex sum{BigFloat(1), BigFloat(0)};
  BigComplex w2 = w * w;
  BigComplex odd = w;      // w^(2n-1)
  BigComplex pw = w;       // w^(n^2)
  for (std::int64_t n = 1; n <= N; ++n) {
    sum = sum + pw + pw;
    odd = odd * w2;
    pw = pw * odd;         // w^(n^2) * w^(2n+1) = w^((n+1)^2)
  }
  return sum;
}

BigComplex theta2(const BigComplexCtx& ctx, const BigComplex& tau) {
  std::int64_t N = theta_terms(ctx, tau);
  BigFloat pi = 4 * atan(BigFloat(1));
  BigComplex w = complex_exp({-pi * tau.im, pi * tau.re});
  BigComplex quarter = complex_exp({-pi * tau.im / 4, pi * tau.re / 4});
  BigComplex sum{BigFloat(1), BigFloat(0)};
  BigComplex w2 = w * w;
  BigComplex even = w2;    // w^(2n)
  BigComplex pw = w2;      // w^(n(n+1))
  for (std::int64_t n = 1; n <= N; ++n) {
    sum = sum + pw;
    even = even * w2;
    pw = pw * even;        // w^(n(n+1)) * w^(2(n+1)) = w^((n+1)(n+2))
  }
  BigComplex half = quarter * sum;
  return half + half;
}

BigComplex lambda_std(const BigComplexCtx& ctx, const BigComplex& tau) {
  BigComplex r = theta2(ctx, tau) / theta3(ctx, tau);
  return complex_pow(r, 4);
}

BigComplex a_of_tau(const BigComplexCtx& ctx, const BigComplex& tau) {
  BigComplex lam = lambda_std(ctx, tau);
  BigComplex one{BigFloat(1), BigFloat(0)};
  BigComplex two{BigFloat(2), BigFloat(0)};
  return (lam * lam) / (lam - one) - two;
}

BigComplex j_of_tau(const BigComplexCtx& ctx, const BigComplex& tau) {
  BigComplex lam = lambda_std(ctx, tau);
  BigComplex one{BigFloat(1), BigFloat(0)};
  BigComplex c256{BigFloat(256), BigFloat(0)};
  BigComplex num = one - lam + lam * lam;
  BigComplex den = (lam * lam) * complex_pow(one - lam, 2);
  return c256 * complex_pow(num, 3) / den;
}

namespace {

void poly_trim(RationalPoly& p) {
  while (!p.coeffs.empty() && p.coeffs.back() == 0) p.coeffs.pop_back();
}

bool poly_is_zero(const RationalPoly& p) { return p.coeffs.empty(); }

RationalPoly poly_monic(RationalPoly p) {
  poly_trim(p);
  if (poly_is_zero(p)) return p;
  Rational lead = p.coeffs.back();
  for (auto& c : p.coeffs) c /= lead;
  return p;
}

// Returns the remainder of a by b, destroying a.
RationalPoly poly_mod(RationalPoly a, const RationalPoly& b) {
  poly_trim(a);
  if (poly_is_zero(b)) throw domain_error("poly_mod: division by zero polynomial");
  Rational lead = b.coeffs.back();
  while (a.coeffs.size() >= b.coeffs.size() && !poly_is_zero(a)) {
    Rational q = a.coeffs.back() / lead;
    std::size_t shift = a.coeffs.size() - b.coeffs.size();
    for (std::size_t i = 0; i < b.coeffs.size(); ++i)
      a.coeffs[shift + i] -= q * b.coeffs[i];
    a.coeffs.pop_back();
    poly_trim(a);
  }
  return a;
}

}  // namespace

RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b) {
  if (a.coeffs.empty() || b.coeffs.empty()) return {};
  RationalPoly out;
  out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  poly_trim(out);
  return out;
}

RationalPoly poly_derivative(const RationalPoly& p) {
  RationalPoly out;
  for (std::size_t i = 1; i < p.coeffs.size(); ++i)
    out.coeffs.push_back(p.coeffs[i] * static_cast<std::int64_t>(i));
  poly_trim(out);
  return out;
}

RationalPoly poly_gcd(RationalPoly a, RationalPoly b) {
  poly_trim(a);
  poly_trim(b);
  while (!poly_is_zero(b)) {
    RationalPoly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(a);
}

RationalPoly poly_divexact(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly rem = a;
  poly_trim(rem);
  if (poly_is_zero(b)) throw domain_error("poly_divexact: division by zero polynomial");
  RationalPoly quot;
  if (rem.coeffs.size() >= b.coeffs.size())
    quot.coeffs.assign(rem.coeffs.size() - b.coeffs.size() + 1, Rational(0));
  Rational lead = b.coeffs.back();
  while (rem.coeffs.size() >= b.coeffs.size() && !poly_is_zero(rem)) {
    Rational q = rem.coeffs.back() / lead;
    std::size_t shift = rem.coeffs.size() - b.coeffs.size();
    quot.coeffs[shift] = q;
    for (std::size_t i = 0; i < b.coeffs.size(); ++i)
      rem.coeffs[shift + i] -= q * b.coeffs[i];
    rem.coeffs.pop_back();
    poly_trim(rem);
  }
  if (!poly_is_zero(rem)) throw internal_error("poly_divexact: nonzero remainder");
  poly_trim(quot);
  return quot;
}

RationalPoly poly_radical(const RationalPoly& p) {
  RationalPoly t = p;
  poly_trim(t);
  if (t.degree() < 1) return {{Rational(1)}};
  RationalPoly g = poly_gcd(t, poly_derivative(t));
  return poly_monic(poly_divexact(t, g));
}

std::vector<Integer> poly_primitive(const RationalPoly& p) {
  RationalPoly t = p;
  poly_trim(t);
  if (poly_is_zero(t)) return {};
  Integer den = 1;
  for (const auto& c : t.coeffs) den = lcm(den, Integer(denominator(c)));
  std::vector<Integer> out;
  Integer content = 0;
  for (const auto& c : t.coeffs) {
    Rational scaled = c * Rational(den);
    out.push_back(Integer(numerator(scaled)));
    content = gcd(content, out.back());
  }
  if (out.back() < 0) content = -content;
  for (auto& c : out) c /= content;
  return out;
}

namespace {

std::string term_string(const Rational& mag, int i, bool leading) {
  std::string s = leading ? (std::string()) : " + ";
  bool unit = (mag == 1) && i > 0;
  if (!unit) s += to_string(mag);
  if (i > 0) {
    s += "t";
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s;
}

}  // namespace

std::string poly_to_string(const RationalPoly& p) {
  RationalPoly t = p;
  poly_trim(t);
  if (poly_is_zero(t)) return "0";
  std::string out;
  for (int i = t.degree(); i >= 0; --i) {
    const Rational& c = t.coeffs[i];
    if (c == 0) continue;
    bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (out.empty())
      out += (neg ? "-" : "") + term_string(mag, i, true);
    else {
      out += neg ? " - " : " + ";
      out += term_string(mag, i, true);
    }
  }
  return out;
}

std::string poly_to_string(const std::vector<Integer>& p) {
  RationalPoly t;
  for (const auto& c : p) t.coeffs.push_back(Rational(c));
  return poly_to_string(t);
}

namespace {

// tau = (x + sqrt(-D))/(2c) is a root of 4c^2 t^2 - 4cx t + (x^2 + D);
// the discriminant of the primitive form is -16 c^2 D / g^2 where g is
// the content.
std::int64_t cm_discriminant(std::int64_t D, std::int64_t x, std::int64_t c) {
  std::int64_t g = std::gcd(std::gcd(4 * c * c, 4 * c * x), x * x + D);
  return -16 * c * c * D / (g * g);
}

RationalPoly monic_product(const std::vector<BigComplex>& roots,
                           const BigComplexCtx& ctx) {
  std::vector<BigComplex> pc{BigComplex{BigFloat(1), BigFloat(0)}};
  for (const auto& r : roots) {
    std::vector<BigComplex> next(pc.size() + 1, BigComplex{BigFloat(0), BigFloat(0)});
    for (std::size_t i = 0; i < pc.size(); ++i) {
      next[i + 1] = next[i + 1] + pc[i];
      next[i] = next[i] - r * pc[i];
    }
    pc = std::move(next);
  }
  BigFloat tol = pow(BigFloat(2), -static_cast<int>(ctx.precision_bits()) / 4);
  RationalPoly out;
  for (std::size_t i = 0; i + 1 < pc.size(); ++i) {
    if (abs(pc[i].im) > tol)
      throw internal_error("fd_polynomial: coefficient has large imaginary part");
    out.coeffs.push_back(ctx.reconstruct_rational(pc[i].re));
  }
  out.coeffs.push_back(Rational(1));
  return out;
}

}  // namespace

std::vector<FDTouchpoint> fd_touchpoints(const Discriminant& D, const BigComplexCtx& ctx) {
  std::vector<FDTouchpoint> out;
  std::size_t idx = 0;
  for (const auto& p : enumerate_prototypes(D)) {
    QTowerElem tau_c = make_tau(p.D, p.e, p.c);
    QTowerElem tau_b = make_tau(p.D, -p.e, p.b);
    out.push_back({a_of_tau(ctx, ctx.to_complex(tau_c)),
                   cm_discriminant(p.D, p.e, p.c), idx});
    out.push_back({a_of_tau(ctx, ctx.to_complex(tau_b)),
                   cm_discriminant(p.D, -p.e, p.b), idx});
    ++idx;
  }
  return out;
}

FDPolynomial fd_polynomial(const Discriminant& D, const BigComplexCtx& ctx) {
  auto points = fd_touchpoints(D, ctx);
  if (points.empty())
    throw domain_error("fd_polynomial: no orbifold points for D=" +
                       std::to_string(D.value) +
                       " (D = 4 mod 16), so f_D is an empty product");
  const std::size_t n_proto = points.size() / 2;

  std::vector<BigComplex> all_roots;
  for (const auto& p : points) all_roots.push_back(p.a);
  FDPolynomial fd;
  fd.defining = monic_product(all_roots, ctx);
  fd.radical = poly_radical(fd.defining);
  fd.primitive = poly_primitive(fd.radical);

  // Group the touchpoints by CM discriminant.  A selection of one
  // touchpoint per prototype is Galois stable exactly when the classes
  // split that way; then each class subproduct is rational.
  std::map<std::int64_t, std::vector<const FDTouchpoint*>> classes;
  for (const auto& p : points) classes[p.cm_disc].push_back(&p);
  bool clean_split = classes.size() >= 2;
  for (const auto& [disc, pts] : classes) {
    if (pts.size() != n_proto) { clean_split = false; break; }
    std::set<std::size_t> protos;
    for (const auto* p : pts) protos.insert(p->prototype);
    if (protos.size() != n_proto) { clean_split = false; break; }
  }
  if (clean_split) {
    auto best = std::max_element(classes.begin(), classes.end(),
                                 [](const auto& a, const auto& b) {
                                   return a.first < b.first;  // least |disc|, discs < 0
                                 });
    std::vector<BigComplex> sel;
    for (const auto* p : best->second) sel.push_back(p->a);
    fd.label = monic_product(sel, ctx);
  } else {
    fd.label = fd.radical;
  }
  return fd;
}

}  // namespace wcurve
