#include "ecpairs/quadform.hpp"

#include <stdexcept>
#include <string>

namespace ecpairs {

namespace {

// Euclidean descent on (modulus, root) until the remainder drops to or
// below `stop`.
u64 descend(u64 modulus, u64 root, u64 stop) {
  u64 r0 = modulus, r1 = root;
  while (r1 > stop) {
    const u64 t = r0 % r1;
    r0 = r1;
    r1 = t;
  }
  return r1;
}

}  // namespace

std::optional<CmDecomposition> decompose(u64 p, u64 d) {
  if (d <= 3 || d % 8 != 3 || !is_squarefree(d)) {
    throw std::invalid_argument("decompose: d must be squarefree, d = 3 (mod 8), d > 3");
  }
  if (p <= 3 || !is_prime(p)) throw std::invalid_argument("decompose: p must be a prime > 3");
  if (p >= (u64{1} << 61)) throw std::invalid_argument("decompose: p too large");
  if (d > 4 * p) return std::nullopt;
  if (d % p == 0) return std::nullopt;

  auto root = mod_sqrt(-static_cast<i64>(d), p);
  if (!root) return std::nullopt;
  // Cornacchia for x^2 + d y^2 = 4p: lift the root to one modulo 4p with
  // x = d (mod 2), then descend from 2p.
  u64 x0 = *root;
  if ((x0 & 1) != (d & 1)) x0 = p - x0;
  const u64 four_p = 4 * p;
  const u64 a = descend(2 * p, x0, isqrt(four_p));
  const u64 rest = four_p - a * a;
  if (rest % d != 0) return std::nullopt;
  auto b = is_square(static_cast<i64>(rest / d));
  if (!b || *b == 0) return std::nullopt;
  return CmDecomposition{p, d, static_cast<i64>(a), static_cast<i64>(*b)};
}

CmDecomposition decompose3(u64 p) {
  if (p <= 3 || !is_prime(p) || p % 3 != 1) {
    throw std::domain_error("decompose3: p must be a prime > 3 with p = 1 (mod 3), got " +
                            std::to_string(p));
  }
  const u64 root = *mod_sqrt(-3, p);
  const u64 r = descend(p, root, isqrt(p));
  const u64 rest = p - r * r;
  const auto b = is_square(static_cast<i64>(rest / 3));
  if (rest % 3 != 0 || !b) {
    throw std::logic_error("decompose3: Cornacchia failed for " + std::to_string(p));
  }
  // 3 does not divide r, so exactly one of +-r is -1 (mod 3).
  const i64 a = (r % 3 == 2) ? static_cast<i64>(r) : -static_cast<i64>(r);
  return CmDecomposition{p, 3, a, static_cast<i64>(*b)};
}

u64 class_number(u64 d) {
  if (d % 4 != 3 || !is_squarefree(d)) {
    throw std::invalid_argument("class_number: d must be squarefree with d = 3 (mod 4)");
  }
  // Reduced forms (A, B, C): B^2 - 4AC = -d, |B| <= A <= C, B >= 0 when
  // |B| = A or A = C.  A <= sqrt(d / 3).
  u64 h = 0;
  for (i64 A = 1; static_cast<u64>(3 * A * A) <= d; ++A) {
    for (i64 B = -A + 1; B <= A; ++B) {
      if (((B - static_cast<i64>(d)) & 1) != 0) continue;
      const i64 num = B * B + static_cast<i64>(d);
      if (num % (4 * A) != 0) continue;
      const i64 C = num / (4 * A);
      if (C < A) continue;
      if (B < 0 && A == C) continue;
      ++h;
    }
  }
  return h;
}

u64 max_allowable(u64 d) {
  if (d % 8 != 3) return 1;
  const i64 neg = -static_cast<i64>(d);
  for (u64 z = 2;; ++z) {
    if (is_prime(z) && kronecker(neg, static_cast<i64>(z)) != -1) return z;
  }
}

}  // namespace ecpairs
