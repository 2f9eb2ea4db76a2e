#include "wcurve/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace wcurve {

namespace {
void require_positive(std::int64_t n, const char* fn) {
  if (n <= 0) throw domain_error(std::string(fn) + ": argument must be positive");
}
}  // namespace

std::vector<std::int64_t> divisors(std::int64_t n) {
  require_positive(n, "divisors");
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::int64_t sigma1(std::int64_t n) {
  require_positive(n, "sigma1");
  std::int64_t s = 0;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      s += d;
      if (d != n / d) s += n / d;
    }
  }
  return s;
}

std::int64_t euler_phi(std::int64_t n) {
  require_positive(n, "euler_phi");
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

int moebius(std::int64_t n) {
  require_positive(n, "moebius");
  int factors = 0;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;  // square factor
      ++factors;
    }
  }
  if (n > 1) ++factors;
  return (factors % 2 == 0) ? 1 : -1;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  return std::gcd(a, b);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t p = 3; p * p <= n; p += 2)
    if (n % p == 0) return false;
  return true;
}

int kronecker(std::int64_t a, std::int64_t p) {
  if (p <= 0 || !is_prime(p)) throw domain_error("kronecker: p must be prime");
  if (p == 2) {
    std::int64_t r = ((a % 8) + 8) % 8;
    if (r % 2 == 0) return 0;
    return (r == 1 || r == 7) ? 1 : -1;
  }
  std::int64_t r = ((a % p) + p) % p;
  if (r == 0) return 0;
  // Euler's criterion via fast modular exponentiation.
  std::int64_t result = 1, base = r, exp = (p - 1) / 2;
  while (exp > 0) {
    if (exp & 1) result = static_cast<std::int64_t>((__int128)result * base % p);
    base = static_cast<std::int64_t>((__int128)base * base % p);
    exp >>= 1;
  }
  return result == 1 ? 1 : -1;
}

bool is_valid_discriminant(std::int64_t d) {
  if (d < 5) return false;
  std::int64_t r = d % 4;
  return r == 0 || r == 1;
}

namespace {
bool is_fundamental_or_one(std::int64_t d0) {
  if (d0 == 1) return true;
  auto squarefree = [](std::int64_t n) {
    for (std::int64_t p = 2; p * p <= n; ++p)
      if (n % (p * p) == 0) return false;
    return true;
  };
  if (d0 % 4 == 1) return squarefree(d0);
  if (d0 % 4 == 0) {
    std::int64_t m = d0 / 4;
    return (m % 4 == 2 || m % 4 == 3) && squarefree(m);
  }
  return false;
}
}  // namespace

Discriminant discriminant_split(std::int64_t d) {
  if (!is_valid_discriminant(d))
    throw domain_error("discriminant must be >= 5 and 0 or 1 mod 4, got " +
                       std::to_string(d));
  // Largest f with d/f^2 still a discriminant (or 1).
  std::int64_t best_f = 1;
  for (std::int64_t f = 1; f * f <= d; ++f) {
    if (d % (f * f) != 0) continue;
    std::int64_t d0 = d / (f * f);
    if (is_fundamental_or_one(d0)) best_f = f;
  }
  Discriminant out;
  out.value = d;
  out.conductor = best_f;
  out.fundamental = d / (best_f * best_f);
  out.is_square = out.fundamental == 1;
  return out;
}

}  // namespace wcurve
