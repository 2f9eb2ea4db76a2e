#include "wcurve/lattice.hpp"

namespace wcurve {

namespace {

constexpr std::int64_t kTowerD1 = 3;

std::int64_t squarefree_kernel(std::int64_t n) {
  std::int64_t kernel = n;
  for (std::int64_t p = 2; p * p <= std::llabs(kernel); ++p)
    while (kernel % (p * p) == 0) kernel /= p * p;
  return kernel;
}

}  // namespace

QTowerElem make_tau(std::int64_t D, std::int64_t e, std::int64_t c, std::int64_t k) {
  if (c <= 0 || k <= 0) throw domain_error("make_tau: need c > 0 and k > 0");
  std::int64_t d2 = squarefree_kernel(-D);
  QTowerElem root = QTowerElem::sqrt_of(kTowerD1, d2, -D);
  QTowerElem num = QTowerElem::rational(kTowerD1, d2, Rational(e)) +
                   root * QTowerElem::rational(kTowerD1, d2, Rational(k));
  return num / QTowerElem::rational(kTowerD1, d2, Rational(2 * c));
}

PolarizedLattice d8_lattice(const QTowerElem& tau) {
  if (tau.imag_sign() <= 0) throw domain_error("d8_lattice: Im tau must be positive");
  auto r = [&](std::int64_t n) {
    return QTowerElem::rational(tau.d1(), tau.d2(), Rational(n));
  };
  QTowerElem one = r(1);
  QTowerElem tp1 = tau + one;
  PolarizedLattice L;
  L.tau = tau;
  L.basis = {TowerVec2{one, one}, TowerVec2{one, -one},
             TowerVec2{tau, tp1}, TowerVec2{tau, -tp1}};
  return L;
}

PolarizedLattice d12_lattice(const QTowerElem& tau) {
  if (tau.imag_sign() <= 0) throw domain_error("d12_lattice: Im tau must be positive");
  auto r = [&](std::int64_t n) {
    return QTowerElem::rational(tau.d1(), tau.d2(), Rational(n));
  };
  QTowerElem one = r(1);
  QTowerElem sqrt3 = QTowerElem::sqrt_of(tau.d1(), tau.d2(), 3);
  QTowerElem inv_sqrt3 = one / sqrt3;
  PolarizedLattice L;
  L.tau = tau;
  L.basis = {TowerVec2{one, inv_sqrt3}, TowerVec2{tau, sqrt3 * tau},
             TowerVec2{one, -inv_sqrt3}, TowerVec2{tau, -(sqrt3 * tau)}};
  return L;
}

namespace {

Rational symplectic_pairing(const PolarizedLattice& L, const TowerVec2& a,
                            const TowerVec2& b) {
  QTowerElem u = a.x * b.x.conj2() + a.y * b.y.conj2();
  QuadElem num = u.imag_over_sqrt();
  QuadElem den = L.tau.imag_over_sqrt();
  QuadElem ratio = quad_div(num, den);
  if (!ratio.is_rational())
    throw internal_error("gram_matrix: pairing is not rational");
  return -ratio.u / 2;
}

}  // namespace

RationalMatrix4 gram_matrix(const PolarizedLattice& L) {
  RationalMatrix4 g;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      g[i][j] = symplectic_pairing(L, L.basis[i], L.basis[j]);
  return g;
}

namespace {

// Solve B n = w where the columns of B are the lattice basis vectors
// viewed as 8-dim rational vectors.  The system is consistent and has a
// unique solution because the basis is Q-linearly independent.
std::array<Rational, 4> coords_in_basis(const PolarizedLattice& L, const TowerVec2& w) {
  auto flatten = [](const TowerVec2& v) {
    std::array<Rational, 8> out;
    for (int i = 0; i < 4; ++i) out[i] = v.x.coeffs()[i];
    for (int i = 0; i < 4; ++i) out[4 + i] = v.y.coeffs()[i];
    return out;
  };
  // Augmented 8x5 system.
  std::array<std::array<Rational, 5>, 8> m;
  for (int j = 0; j < 4; ++j) {
    auto col = flatten(L.basis[j]);
    for (int i = 0; i < 8; ++i) m[i][j] = col[i];
  }
  auto rhs = flatten(w);
  for (int i = 0; i < 8; ++i) m[i][4] = rhs[i];

  int row = 0;
  std::array<int, 4> pivot_row{-1, -1, -1, -1};
  for (int col = 0; col < 4 && row < 8; ++col) {
    int p = -1;
    for (int i = row; i < 8; ++i)
      if (m[i][col] != 0) { p = i; break; }
    if (p < 0) throw internal_error("coords_in_basis: basis is degenerate");
    std::swap(m[row], m[p]);
    Rational inv = m[row][col];
    for (int j = col; j < 5; ++j) m[row][j] /= inv;
    for (int i = 0; i < 8; ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rational factor = m[i][col];
      for (int j = col; j < 5; ++j) m[i][j] -= factor * m[row][j];
    }
    pivot_row[col] = row;
    ++row;
  }
  // Remaining rows must be consistent.
  for (int i = row; i < 8; ++i)
    if (m[i][4] != 0)
      throw internal_error("coords_in_basis: vector outside the basis span");
  std::array<Rational, 4> n;
  for (int col = 0; col < 4; ++col) n[col] = m[pivot_row[col]][4];
  return n;
}

TowerVec2 apply_map(const std::array<QTowerElem, 4>& M, const TowerVec2& v) {
  // M = (m00 m01; m10 m11) acting on column vectors.
  return {M[0] * v.x + M[1] * v.y, M[2] * v.x + M[3] * v.y};
}

}  // namespace

RationalMatrix4 automorphism_matrix(const PolarizedLattice& L, Automorphism which) {
  const auto& tau = L.tau;
  auto r = [&](const Rational& q) {
    return QTowerElem::rational(tau.d1(), tau.d2(), q);
  };
  std::array<QTowerElem, 4> M;
  switch (which) {
    case Automorphism::J:
      M = {r(0), r(1), r(-1), r(0)};
      break;
    case Automorphism::R:
      M = {r(1), r(0), r(0), r(-1)};
      break;
    case Automorphism::Z: {
      QTowerElem half = r(Rational(1, 2));
      QTowerElem s3 = QTowerElem::sqrt_of(tau.d1(), tau.d2(), 3);
      M = {half, -(half * s3), half * s3, half};
      break;
    }
  }
  RationalMatrix4 out;
  for (int j = 0; j < 4; ++j) {
    auto coords = coords_in_basis(L, apply_map(M, L.basis[j]));
    for (int i = 0; i < 4; ++i) {
      if (denominator(coords[i]) != 1)
        throw internal_error("automorphism_matrix: map does not preserve the lattice");
      out[i][j] = coords[i];
    }
  }
  return out;
}

RationalMatrix4 real_mult_generator(std::int64_t D, std::int64_t e,
                                    std::int64_t k, std::int64_t c) {
  if (c <= 0 || k <= 0) throw domain_error("real_mult_generator: need c > 0, k > 0");
  std::int64_t num = k * k * D + e * e;
  if (num % (2 * c) != 0)
    throw domain_error("real_mult_generator: b = (k^2 D + e^2)/(2c) is not integral");
  std::int64_t b = num / (2 * c);
  const Rational s(1, 2 * k);
  auto E = [&](std::int64_t v) { return s * v; };
  RationalMatrix4 m;
  m[0] = {E(D * k + c), E(-e - c), E(0), E(2 * c)};
  m[1] = {E(c + e), E(D * k - c), E(-2 * c), E(0)};
  m[2] = {E(0), E(-e - b), E(D * k + c), E(c + e)};
  m[3] = {E(b + e), E(0), E(-e - c), E(D * k - c)};
  return m;
}

bool is_integral(const RationalMatrix4& m) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (denominator(x) != 1) return false;
  return true;
}

int spin_q(int k1, int k2, int k3, int k4) {
  return (k1 * k1 + k2 * k2 + k1 * k3 + k2 * k4 + k3 * k4) % 2;
}

int spin_q(const Mod2Vec& v) { return spin_q(v[0] & 1, v[1] & 1, v[2] & 1, v[3] & 1); }

int spin_pairing(const Mod2Vec& x, const Mod2Vec& y) {
  Mod2Vec sum;
  for (int i = 0; i < 4; ++i) sum[i] = (x[i] + y[i]) & 1;
  return (spin_q(sum) + spin_q(x) + spin_q(y)) % 2;
}

int arf(const Mod2Vec& a, const Mod2Vec& b) {
  if (spin_pairing(a, b) != 1)
    throw domain_error("arf: subspace is degenerate for the pairing");
  return (spin_q(a) * spin_q(b)) % 2;
}

Mod2Vec j_action_mod2(const Mod2Vec& v) {
  // Multiplication by i on periods swaps x1 <-> xi and xb <-> xbi mod 2.
  return {v[1], v[0], v[3], v[2]};
}

int spin_via_structure(const PinwheelPrototype& p) {
  if (((p.D % 8) + 8) % 8 != 1)
    throw domain_error("spin_via_structure: requires D = 1 mod 8");
  std::int64_t x = 2 * p.c;
  if (((x % 4) + 4) % 4 != 2)
    throw internal_error("spin_via_structure: x = 2c must be 2 mod 4");
  const std::int64_t f = discriminant_split(p.D).conductor;
  int k1 = static_cast<int>((((f + p.c) / 2) % 2 + 2) % 2);
  int k2 = static_cast<int>((((p.c + p.e) / 2) % 2 + 2) % 2);
  return spin_q(k1, k2, 0, 1);
}

}  // namespace wcurve
