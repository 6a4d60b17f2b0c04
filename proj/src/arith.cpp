#include "ecpairs/arith.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace ecpairs {

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 inv_mod(u64 a, u64 m) {
  i128 old_r = a % m, r = m;
  i128 old_s = 1, s = 0;
  while (r != 0) {
    i128 q = old_r / r;
    i128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw std::invalid_argument("inv_mod: argument not invertible");
  old_s %= static_cast<i128>(m);
  if (old_s < 0) old_s += m;
  return static_cast<u64>(old_s);
}

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

namespace {

bool strong_probable_prime(u64 n, u64 odd_part, int twos, u64 base) {
  u64 x = pow_mod(base, odd_part, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < twos; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(u64 n) {
  static constexpr std::array<u64, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  for (u64 b : kBases) {
    if (n % b == 0) return n == b;
  }
  if (n < 37 * 37) return true;
  u64 odd = n - 1;
  int twos = 0;
  while ((odd & 1) == 0) {
    odd >>= 1;
    ++twos;
  }
  for (u64 b : kBases) {
    if (!strong_probable_prime(n, odd, twos, b)) return false;
  }
  return true;
}

int kronecker(i64 a, i64 n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  // Sign of n.
  u64 m;
  if (n < 0) {
    m = static_cast<u64>(-(n + 1)) + 1;
    if (a < 0) result = -result;
  } else {
    m = static_cast<u64>(n);
  }
  // Factors of two in n.
  if ((m & 1) == 0) {
    if ((a & 1) == 0) return 0;
    int twos = std::countr_zero(m);
    m >>= twos;
    const u64 a8 = reduce(a, 8);
    if ((twos & 1) && (a8 == 3 || a8 == 5)) result = -result;
  }
  // Jacobi symbol (a / m) for odd m.
  u64 x = reduce(a, m);
  while (x != 0) {
    int twos = std::countr_zero(x);
    x >>= twos;
    const u64 m8 = m & 7;
    if ((twos & 1) && (m8 == 3 || m8 == 5)) result = -result;
    if ((x & 3) == 3 && (m & 3) == 3) result = -result;
    std::swap(x, m);
    x %= m;
  }
  return m == 1 ? result : 0;
}

std::optional<u64> is_square(i64 n) {
  if (n < 0) return std::nullopt;
  // Quadratic residues modulo 64 reject most non-squares without a root.
  static constexpr u64 kSquaresMod64 = 0x0202021202030213ULL;
  const u64 u = static_cast<u64>(n);
  if (((kSquaresMod64 >> (u & 63)) & 1) == 0) return std::nullopt;
  const u64 r = isqrt(u);
  if (r * r != u) return std::nullopt;
  return r;
}

bool is_squarefree(u64 n) {
  if (n == 0) return false;
  return squarefree_part(n).f == 1;
}

SquarefreeSplit squarefree_part(u64 n) {
  if (n == 0) throw std::invalid_argument("squarefree_part: n must be positive");
  SquarefreeSplit out;
  u64 m = n;
  auto strip = [&](u64 p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) out.f *= p;
    if (e & 1) out.d *= p;
  };
  strip(2);
  strip(3);
  // Trial division by 6k +- 1 up to the cube root of the remaining cofactor.
  for (u64 p = 5; p * p * p <= m; p += 6) {
    strip(p);
    strip(p + 2);
  }
  // What remains has at most two prime factors, all above the cube root.
  if (m > 1) {
    if (auto r = is_square(static_cast<i64>(m)); r && *r > 1) {
      out.f *= *r;
    } else {
      out.d *= m;
    }
  }
  return out;
}

std::optional<u64> mod_sqrt(i64 a, u64 p) {
  const u64 x = reduce(a, p);
  if (x == 0) return 0;
  if (p == 2) return x;
  if (pow_mod(x, (p - 1) / 2, p) != 1) return std::nullopt;

  u64 root;
  if ((p & 3) == 3) {
    root = pow_mod(x, (p + 1) / 4, p);
  } else {
    // Tonelli-Shanks.
    u64 q = p - 1;
    int s = 0;
    while ((q & 1) == 0) {
      q >>= 1;
      ++s;
    }
    u64 z = 2;
    while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
    u64 c = pow_mod(z, q, p);
    u64 t = pow_mod(x, q, p);
    root = pow_mod(x, (q + 1) / 2, p);
    int m = s;
    while (t != 1) {
      int i = 0;
      u64 t2 = t;
      while (t2 != 1) {
        t2 = mul_mod(t2, t2, p);
        ++i;
      }
      u64 b = c;
      for (int j = 0; j < m - i - 1; ++j) b = mul_mod(b, b, p);
      m = i;
      c = mul_mod(b, b, p);
      t = mul_mod(t, c, p);
      root = mul_mod(root, b, p);
    }
  }
  return std::min(root, p - root);
}

u128 crt(std::span<const Congruence> congruences) {
  if (congruences.empty()) throw std::invalid_argument("crt: no congruences");
  u128 x = 0;
  u128 modulus = 1;
  for (const auto& c : congruences) {
    if (c.modulus < 2) throw std::invalid_argument("crt: modulus below 2");
    u128 g = modulus, h = c.modulus;
    while (h != 0) {
      const u128 t = g % h;
      g = h;
      h = t;
    }
    if (g != 1) throw std::invalid_argument("crt: moduli are not pairwise coprime");
    if (modulus > (static_cast<u128>(1) << 127) / c.modulus) {
      throw std::invalid_argument("crt: product of moduli exceeds 127 bits");
    }
    // x' = x + modulus * t with t = (r - x) / modulus (mod m).
    const u64 m = c.modulus;
    const u64 r = reduce(c.residue, m);
    const u64 x_mod = static_cast<u64>(x % m);
    const u64 diff = (r + m - x_mod) % m;
    const u64 t = mul_mod(diff, inv_mod(static_cast<u64>(modulus % m), m), m);
    x += modulus * t;
    modulus *= m;
  }
  return x;
}

std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace ecpairs
