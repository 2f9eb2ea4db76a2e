#include "wcurve/cusps.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace wcurve {

std::vector<PDComponent> pd_components(const Discriminant& D) {
  std::vector<PDComponent> out;
  const std::int64_t d = D.value;
  for (std::int64_t e = d % 2; e * e < d; e += 2) {
    std::int64_t n = (d - e * e) / 4;
    for (std::int64_t l = 1; l * l <= n; ++l) {
      if (n % (l * l) != 0) continue;
      if (std::gcd(e, l) != 1) continue;
      out.push_back({e, l, n / (l * l)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t y0_cusp_count(std::int64_t m) {
  if (m <= 0) throw domain_error("y0_cusp_count: m must be positive");
  std::int64_t total = 0;
  for (std::int64_t d : divisors(m)) total += euler_phi(std::gcd(d, m / d));
  return total;
}

namespace {

Cusp normalize(std::int64_t p, std::int64_t q) {
  if (p == 0 && q == 0) throw domain_error("cusp: 0/0 is not a cusp");
  std::int64_t g = std::gcd(std::llabs(p), std::llabs(q));
  p /= g;
  q /= g;
  if (q < 0) { p = -p; q = -q; }
  if (q == 0) return {1, 0};
  p %= q;
  if (p < 0) p += q;
  return {p, q};
}

// s with s*p = 1 mod q; s = 1 when q = 0.
std::int64_t modinv(std::int64_t p, std::int64_t q) {
  if (q == 0) return 1;
  std::int64_t a = ((p % q) + q) % q, b = q, x0 = 0, x1 = 1;
  // extended euclid on (a, q)
  std::int64_t r0 = b, r1 = a;
  while (r1 != 0) {
    std::int64_t k = r0 / r1;
    std::int64_t r2 = r0 - k * r1;
    std::int64_t x2 = x0 - k * x1;
    r0 = r1; r1 = r2; x0 = x1; x1 = x2;
  }
  std::int64_t s = ((x0 % q) + q) % q;
  return q == 1 ? 0 : s;
}

}  // namespace

bool cusps_equivalent(std::int64_t N, const Cusp& a, const Cusp& b) {
  Cusp c1 = normalize(a.p, a.q), c2 = normalize(b.p, b.q);
  std::int64_t s1 = modinv(c1.p, c1.q);
  std::int64_t s2 = modinv(c2.p, c2.q);
  std::int64_t g = std::gcd(c1.q * c2.q, N);
  if (g == 0) g = N;
  std::int64_t lhs = ((s1 * c2.q - s2 * c1.q) % g + g) % g;
  return lhs == 0;
}

std::vector<Cusp> cusp_representatives(std::int64_t N) {
  if (N <= 0) throw domain_error("cusp_representatives: N must be positive");
  std::vector<Cusp> reps;
  for (std::int64_t d : divisors(N)) {
    std::int64_t g = std::gcd(d, N / d);
    for (std::int64_t u = 0; u < std::max<std::int64_t>(g, 1); ++u) {
      if (std::gcd(u, g) != 1 && g > 1) continue;
      if (g == 1 && u != 0) continue;
      // Lift u mod g to x coprime to d.
      std::int64_t x = (g == 1) ? 1 : u;
      while (std::gcd(x, d) != 1) x += g;
      reps.push_back(normalize(x, d));
    }
  }
  std::sort(reps.begin(), reps.end(), [](const Cusp& a, const Cusp& b) {
    return std::tie(a.q, a.p) < std::tie(b.q, b.p);
  });
  return reps;
}

Cusp cusp_canonicalize(std::int64_t N, const Cusp& c) {
  Cusp n = normalize(c.p, c.q);
  for (const Cusp& rep : cusp_representatives(N))
    if (cusps_equivalent(N, n, rep)) return rep;
  throw internal_error("cusp_canonicalize: no representative matched");
}

Cusp fricke_image(std::int64_t m, const Cusp& c) {
  Cusp n = normalize(c.p, c.q);
  return normalize(-n.q, m * n.p);
}

std::int64_t fricke_orbits(std::int64_t m) {
  auto reps = cusp_representatives(m);
  std::int64_t fixed = 0;
  for (const Cusp& r : reps) {
    Cusp image = cusp_canonicalize(m, fricke_image(m, r));
    if (image == r) ++fixed;
  }
  return fixed + (static_cast<std::int64_t>(reps.size()) - fixed) / 2;
}

std::int64_t cusp_count_wd(const Discriminant& D) {
  if (D.is_square)
    throw domain_error("cusp_count_wd: square discriminants are not computable here");
  std::int64_t total = 0;
  for (const auto& comp : pd_components(D))
    total += (comp.e == 0) ? fricke_orbits(comp.m) : y0_cusp_count(comp.m);
  return total;
}

std::pair<std::int64_t, std::int64_t> cusp_split(const Discriminant& D) {
  if (D.is_square || ((D.value % 8) + 8) % 8 != 1 || D.value <= 9)
    throw domain_error("cusp_split: requires non-square D = 1 mod 8, D > 9");
  std::int64_t total = cusp_count_wd(D);
  if (total % 2 != 0)
    throw internal_error("cusp_split: odd total cusp count at D=" +
                         std::to_string(D.value));
  return {total / 2, total / 2};
}

std::int64_t one_cylinder_count(std::int64_t f) {
  if (f < 3) return 0;
  // Burnside over cyclic rotation of ordered triples (a,b,c), a+b+c = f,
  // gcd(a,b,c) = 1; only f = 3 has rotation-fixed triples (1,1,1).
  std::int64_t T = 0;
  for (std::int64_t d : divisors(f)) {
    std::int64_t k = f / d - 1;
    T += moebius(d) * (k * (k - 1) / 2);
  }
  return (T + (f == 3 ? 2 : 0)) / 3;
}

std::int64_t two_cyl_spin_difference(std::int64_t f) {
  if (f < 3 || f % 2 == 0)
    throw domain_error("two_cyl_spin_difference: f must be odd and >= 3");
  std::int64_t sum = 0;
  for (std::int64_t c = 1; 2 * c < f; ++c)
    sum += euler_phi(std::gcd(f - c, c));
  return sum;
}

std::int64_t count_pd_components(const Discriminant& D) {
  auto comps = pd_components(D);
  auto count = static_cast<std::int64_t>(comps.size());
  double bound = std::pow(static_cast<double>(D.value), 0.75) + 150.0;
  if (static_cast<double>(count) > bound)
    throw internal_error("count_pd_components: bound h0 <= D^{3/4}+150 violated");
  return count;
}

}  // namespace wcurve
