#pragma once

// Exact 64-bit integer arithmetic: primality, Kronecker symbols, square
// detection, squarefree decomposition, modular square roots and CRT.
//
// Products that can leave the 64-bit range go through 128-bit integers.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ecpairs {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using u32 = std::uint32_t;
using i128 = __int128;
using u128 = unsigned __int128;

/// n = d * f^2 with d squarefree.
struct SquarefreeSplit {
  u64 d = 1;
  u64 f = 1;

  friend bool operator==(const SquarefreeSplit&, const SquarefreeSplit&) = default;
};

struct Congruence {
  i64 residue = 0;
  u64 modulus = 1;
};

inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m);

/// Inverse of a modulo m; requires gcd(a, m) = 1.
u64 inv_mod(u64 a, u64 m);

/// Least nonnegative residue of a modulo m.
inline u64 reduce(i64 a, u64 m) {
  i128 r = static_cast<i128>(a) % static_cast<i128>(m);
  if (r < 0) r += m;
  return static_cast<u64>(r);
}

/// floor(sqrt(n)).
u64 isqrt(u64 n);

/// Deterministic for all n < 2^64 (Miller-Rabin over the first twelve
/// prime bases).
bool is_prime(u64 n);

/// Kronecker symbol (a / n) for arbitrary integers.
int kronecker(i64 a, i64 n);

/// Root r >= 0 with r^2 = n, or nothing.
std::optional<u64> is_square(i64 n);

bool is_squarefree(u64 n);

/// Splits n >= 1 as d * f^2 with d squarefree.  Trial division up to the
/// cube root of n, then a square test on the cofactor.
SquarefreeSplit squarefree_part(u64 n);

/// Smaller root x in [0, p) of x^2 = a (mod p), or nothing for a
/// non-residue.  p must be prime.
std::optional<u64> mod_sqrt(i64 a, u64 p);

/// Unique x in [0, prod m_i).  Throws std::invalid_argument for moduli
/// below 2, for moduli sharing a factor, and when the product of moduli
/// does not fit in 127 bits.
u128 crt(std::span<const Congruence> congruences);

std::string to_string(u128 v);

}  // namespace ecpairs
