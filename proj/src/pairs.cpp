#include "ecpairs/pairs.hpp"

#include <algorithm>
#include <stdexcept>

namespace ecpairs {

namespace {

bool usable_prime(u64 n) { return n > 3 && is_prime(n); }

}  // namespace

i64 pair_numerator(u64 p, u64 q) {
  constexpr u64 kMax = u64{1} << 31;
  if (p >= kMax || q >= kMax) throw std::invalid_argument("pair_numerator: argument too large");
  const i64 t = static_cast<i64>(p) + 1 - static_cast<i64>(q);
  return 4 * static_cast<i64>(p) - t * t;
}

std::optional<PairCertificate> find_d(u64 p, u64 q) {
  if (!usable_prime(p) || !usable_prime(q)) return std::nullopt;
  const i64 num = pair_numerator(p, q);
  if (num <= 0) return std::nullopt;
  const auto split = squarefree_part(static_cast<u64>(num));
  return PairCertificate{split.d, split.f};
}

bool is_pair(u64 p, u64 q, u64 d) {
  const auto cert = find_d(p, q);
  return cert && cert->d == d;
}

std::optional<i64> a_pq(u64 p, u64 q, u64 d) {
  const auto cert = find_d(p, q);
  if (!cert || cert->d != d) return std::nullopt;
  i64 A = static_cast<i64>(cert->abs_A);
  if (d == 3) {
    // A is odd and p + q + 1 is odd, so exactly one sign matches mod 4.
    const i64 target = static_cast<i64>((p + q + 1) % 4);
    if (reduce(A, 4) != static_cast<u64>(target)) A = -A;
  }
  return A;
}

std::optional<EllipticPair> make_pair(u64 p, u64 q) {
  const auto cert = find_d(p, q);
  if (!cert) return std::nullopt;
  return EllipticPair{p, q, cert->d, *a_pq(p, q, cert->d)};
}

std::array<u64, 6> orders_from_A(u64 p, u64 q) {
  const auto A = a_pq(p, q, 3);
  if (!A) throw std::invalid_argument("orders_from_A: (p, q) is not an elliptic pair over 3");
  const i64 P = static_cast<i64>(p), Q = static_cast<i64>(q), a3 = 3 * *A;
  return {
      static_cast<u64>((P + Q + 1 + a3) / 2),       // m = 0
      static_cast<u64>(P),                          // m = 1
      static_cast<u64>((P + Q + 1 - a3) / 2),       // m = 2
      static_cast<u64>((-P + 3 * Q + 3 - a3) / 2),  // m = 3
      static_cast<u64>(2 * Q + 2 - P),              // m = 4
      static_cast<u64>((-P + 3 * Q + 3 + a3) / 2),  // m = 5
  };
}

std::vector<u64> anomalous_primes(u64 d, u64 X) {
  if (d % 8 != 3 || !is_squarefree(d)) {
    throw std::invalid_argument("anomalous_primes: d must be squarefree with d = 3 (mod 8)");
  }
  std::vector<u64> out;
  if (d == 3) {
    // 12b^2 - 6b + 1 over b = +-1, +-2, ...; the +b branch is the smaller.
    for (u64 b = 1;; ++b) {
      const u64 lo = 12 * b * b - 6 * b + 1;
      if (lo >= X) break;
      if (usable_prime(lo)) out.push_back(lo);
      const u64 hi = 12 * b * b + 6 * b + 1;
      if (hi < X && usable_prime(hi)) out.push_back(hi);
    }
  } else {
    // d c^2 + d c + (1 + d) / 4, c >= 0.
    for (u64 c = 0;; ++c) {
      const u64 v = d * c * c + d * c + (1 + d) / 4;
      if (v >= X) break;
      if (usable_prime(v)) out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ecpairs
