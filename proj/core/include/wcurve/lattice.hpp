#pragma once

#include <array>
#include <cstdint>

#include "wcurve/prototypes.hpp"
#include "wcurve/qtower.hpp"

namespace wcurve {

using RationalMatrix4 = std::array<std::array<Rational, 4>, 4>;

/// 2-vector over the tower field.
struct TowerVec2 {
  QTowerElem x, y;
};

/// Rank-4 lattice in C^2 given by tau and four basis vectors, polarized
/// by <(a,b),(c,d)> = -Im(a conj(c) + b conj(d)) / (2 Im tau).
struct PolarizedLattice {
  QTowerElem tau;
  std::array<TowerVec2, 4> basis;
};

/// tau = (e + k sqrt(-D)) / (2c) as an exact tower element.
QTowerElem make_tau(std::int64_t D, std::int64_t e, std::int64_t c, std::int64_t k = 1);

/// Order-four family: basis (1,1), (1,-1), (tau,tau+1), (tau,-tau-1).
PolarizedLattice d8_lattice(const QTowerElem& tau);

/// Order-six family: basis (1,1/sqrt3), (tau,sqrt3 tau), (1,-1/sqrt3), (tau,-sqrt3 tau).
PolarizedLattice d12_lattice(const QTowerElem& tau);

/// Gram matrix of the symplectic form; every entry is exactly rational.
RationalMatrix4 gram_matrix(const PolarizedLattice& L);

enum class Automorphism { J, R, Z };

/// Matrix of the 2x2 complex-linear map in the lattice basis.  Throws
/// internal_error if the map does not preserve the lattice.
RationalMatrix4 automorphism_matrix(const PolarizedLattice& L, Automorphism which);

/// Generator S = (D + phi T)/2 of real multiplication in the basis
/// v1..v4, for tau = (e + k sqrt(-D))/(2c).  Exact rational entries.
RationalMatrix4 real_mult_generator(std::int64_t D, std::int64_t e,
                                    std::int64_t k, std::int64_t c);

bool is_integral(const RationalMatrix4& m);

/// Quadratic refinement on (Z/2)^4 in the basis x1, xi, xb, xbi.
int spin_q(int k1, int k2, int k3, int k4);

using Mod2Vec = std::array<int, 4>;

int spin_q(const Mod2Vec& v);

/// Intersection pairing reconstructed from q(x+y) = q(x)+q(y)+<x,y>.
int spin_pairing(const Mod2Vec& x, const Mod2Vec& y);

/// Arf invariant of q restricted to the span of a, b; requires <a,b> = 1.
int arf(const Mod2Vec& a, const Mod2Vec& b);

/// Action of the order-four automorphism on the mod-2 basis.
Mod2Vec j_action_mod2(const Mod2Vec& v);

/// Spin via the quadratic form: q(v) with v determined by the prototype.
/// Must agree with spin_of_prototype.
int spin_via_structure(const PinwheelPrototype& p);

}  // namespace wcurve
