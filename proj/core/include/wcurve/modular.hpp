#pragma once

#include <string>
#include <vector>

#include "wcurve/bigcomplex.hpp"
#include "wcurve/prototypes.hpp"

namespace wcurve {

/// Jacobi theta null values in the nome q = exp(pi i tau), Im tau > 0.
BigComplex theta2(const BigComplexCtx& ctx, const BigComplex& tau);
BigComplex theta3(const BigComplexCtx& ctx, const BigComplex& tau);

/// lambda = theta2^4 / theta3^4, the degree-6 cover of the j-line.
BigComplex lambda_std(const BigComplexCtx& ctx, const BigComplex& tau);

/// Hauptmodul a with q-expansion -2 - 256 q - 6144 q^2 - ... in
/// q = exp(2 pi i tau); a = -2 + lambda^2/(lambda - 1).
BigComplex a_of_tau(const BigComplexCtx& ctx, const BigComplex& tau);

/// Klein j, normalized so j(i) = 1728.
BigComplex j_of_tau(const BigComplexCtx& ctx, const BigComplex& tau);

/// Polynomial with exact rational coefficients, ascending order,
/// coeffs.back() != 0 unless the polynomial is zero.
struct RationalPoly {
  std::vector<Rational> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool operator==(const RationalPoly& o) const = default;
};

RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b);
RationalPoly poly_derivative(const RationalPoly& p);
/// Monic gcd over Q.
RationalPoly poly_gcd(RationalPoly a, RationalPoly b);
/// Exact quotient; throws internal_error on nonzero remainder.
RationalPoly poly_divexact(const RationalPoly& a, const RationalPoly& b);
/// Squarefree part p / gcd(p, p'), monic.
RationalPoly poly_radical(const RationalPoly& p);
/// Integer coefficients, content 1, positive leading coefficient.
std::vector<Integer> poly_primitive(const RationalPoly& p);
/// Human-readable form, descending powers of t.
std::string poly_to_string(const RationalPoly& p);
std::string poly_to_string(const std::vector<Integer>& p);

/// The algebraic model of W_D on the (a-line)^2 quotient.
struct FDPolynomial {
  RationalPoly defining;             // prod over prototypes of (t - a(tau_c))(t - a(tau_b))
  RationalPoly radical;              // squarefree part, monic
  RationalPoly label;                // one root per orbifold point, see fd_polynomial
  std::vector<Integer> primitive;    // primitive integer form of the radical
};

/// One evaluation point of the model: the value a(tau) together with the
/// discriminant of the CM order Z[tau] and the index of the prototype
/// contributing tau.
struct FDTouchpoint {
  BigComplex a;
  std::int64_t cm_disc;
  std::size_t prototype;
};

/// Touchpoints a(tau_c), a(tau_b) for each prototype of D.  Complex in
/// general; the +e / -e prototypes contribute conjugate values, so the
/// product polynomial is real.
std::vector<FDTouchpoint> fd_touchpoints(const Discriminant& D, const BigComplexCtx& ctx);

/// Computes the defining product, its squarefree part, and the label
/// polynomial.  The two touchpoints of a prototype are identified by the
/// regluing involution, so each orbifold point is labeled by either one.
/// When the touchpoints split by CM discriminant into classes that each
/// pick exactly one touchpoint per prototype, the class of smallest |disc|
/// is a Galois-stable selection and its subproduct is the label polynomial
/// (for D=76 this is the cubic factor at discriminant -19).  Otherwise no
/// rational selection exists and the label equals the radical.
FDPolynomial fd_polynomial(const Discriminant& D, const BigComplexCtx& ctx);

}  // namespace wcurve
