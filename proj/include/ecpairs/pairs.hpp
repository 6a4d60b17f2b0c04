#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ecpairs/arith.hpp"

namespace ecpairs {

/// (p, q)_d with its certificate A: A^2 d = 2pq + 2p + 2q - p^2 - q^2 - 1.
/// For d = 3, A = p + q + 1 (mod 4); for d > 3, A = b_p > 0.
struct EllipticPair {
  u64 p = 0;
  u64 q = 0;
  u64 d = 0;
  i64 A = 0;

  friend bool operator==(const EllipticPair&, const EllipticPair&) = default;
};

/// Squarefree d with |A| such that the numerator equals d A^2.
struct PairCertificate {
  u64 d = 0;
  u64 abs_A = 0;

  friend bool operator==(const PairCertificate&, const PairCertificate&) = default;
};

/// 2pq + 2p + 2q - p^2 - q^2 - 1 = 4p - (p + 1 - q)^2.  p, q < 2^31.
i64 pair_numerator(u64 p, u64 q);

/// The unique squarefree d making (p, q) an elliptic pair, if the
/// numerator is positive.  Empty for non-primes and primes <= 3.
std::optional<PairCertificate> find_d(u64 p, u64 q);

bool is_pair(u64 p, u64 q, u64 d);

/// Signed certificate A_pq; empty when (p, q)_d is not a pair.
std::optional<i64> a_pq(u64 p, u64 q, u64 d);

std::optional<EllipticPair> make_pair(u64 p, u64 q);

/// The six orders over F_q of y^2 = x^3 + g^m, indexed by m mod 6, as
/// functions of (p, q, A) for a pair (p, q)_3.  Throws
/// std::invalid_argument if (p, q) is not a pair over 3.
std::array<u64, 6> orders_from_A(u64 p, u64 q);

/// Primes 3 < p < X with (p, p)_d a pair, ascending.  d = 3 (mod 8)
/// squarefree, otherwise std::invalid_argument.
std::vector<u64> anomalous_primes(u64 d, u64 X);

}  // namespace ecpairs
