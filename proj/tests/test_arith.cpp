#include <doctest.h>

#include <array>
#include <random>
#include <stdexcept>

#include "ecpairs/arith.hpp"
#include "oracles.hpp"

using namespace ecpairs;

TEST_CASE("is_prime: small values agree with trial division") {
  for (u64 n = 0; n < 1000000; ++n) {
    if (is_prime(n) != oracle::is_prime(n)) FAIL("mismatch at " << n);
  }
}

TEST_CASE("is_prime: fixed values") {
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(275269));
  CHECK_FALSE(is_prime(91));
  CHECK(is_prime((u64{1} << 61) - 1));
  CHECK(is_prime(18446744073709551557ULL));  // largest 64-bit prime
  // Strong pseudoprimes to several small bases.
  CHECK_FALSE(is_prime(3215031751ULL));
  CHECK_FALSE(is_prime(3825123056546413051ULL));
  CHECK_FALSE(is_prime(4294967297ULL));  // 641 * 6700417
}

TEST_CASE("is_prime: random 40-bit values against trial division") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const u64 n = (rng() >> 24) | 1;
    CHECK(is_prime(n) == oracle::is_prime(n));
  }
}

TEST_CASE("kronecker") {
  CHECK(kronecker(-11, 3) == 1);
  CHECK(kronecker(-3, 3) == 0);
  CHECK(kronecker(-3, 2) == -1);
  for (u64 p = 3; p < 1000; p += 2) {
    if (!oracle::is_prime(p)) continue;
    for (i64 a = 0; a < static_cast<i64>(p); ++a) {
      REQUIRE(kronecker(a, static_cast<i64>(p)) == oracle::legendre(a, p));
    }
  }
  for (i64 a = -60; a <= 60; ++a) {
    for (u64 n = 1; n <= 200; ++n) {
      REQUIRE(kronecker(a, static_cast<i64>(n)) == oracle::kronecker(a, n));
    }
  }
}

TEST_CASE("squarefree_part") {
  CHECK(squarefree_part(3) == SquarefreeSplit{3, 1});
  CHECK(squarefree_part(48) == SquarefreeSplit{3, 4});
  CHECK(squarefree_part(99) == SquarefreeSplit{11, 3});
  CHECK_THROWS_AS(squarefree_part(0), std::invalid_argument);
  for (u64 n = 1; n <= 1000000; ++n) {
    const auto s = squarefree_part(n);
    const auto [d, f] = oracle::squarefree_part(n);
    if (s.d != d || s.f != f) FAIL("mismatch at " << n);
  }
}

TEST_CASE("squarefree_part: large inputs with big square factors") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const u64 d = oracle::squarefree_part((rng() >> 44) + 1).first;
    const u64 f = (rng() >> 44) + 1;
    const auto s = squarefree_part(d * f * f);
    CHECK(s.d == d);
    CHECK(s.f == f);
  }
  // Square of a prime above the cube root.
  const u64 big = 2147483647;
  CHECK(squarefree_part(3 * big * big) == SquarefreeSplit{3, big});
}

TEST_CASE("is_square") {
  CHECK(is_square(1) == std::optional<u64>{1});
  CHECK(is_square(9) == std::optional<u64>{3});
  CHECK_FALSE(is_square(5));
  CHECK_FALSE(is_square(-4));
  CHECK(is_square(0) == std::optional<u64>{0});
  for (u64 r = 0; r < 3000; ++r) {
    REQUIRE(is_square(static_cast<i64>(r * r)) == std::optional<u64>{r});
    if (r > 0) REQUIRE_FALSE(is_square(static_cast<i64>(r * r + 1)));
  }
  const u64 r = 3037000499ULL;  // floor(sqrt(2^63))
  CHECK(is_square(static_cast<i64>(r * r)) == std::optional<u64>{r});
  CHECK_FALSE(is_square(static_cast<i64>(r * r - 1)));
}

TEST_CASE("isqrt") {
  for (u64 n = 0; n < 100000; ++n) {
    const u64 r = isqrt(n);
    REQUIRE(r * r <= n);
    REQUIRE((r + 1) * (r + 1) > n);
  }
  CHECK(isqrt(~u64{0}) == 4294967295ULL);
}

TEST_CASE("mod_sqrt") {
  CHECK(mod_sqrt(-3, 7) == std::optional<u64>{2});
  CHECK(mod_sqrt(0, 5) == std::optional<u64>{0});
  CHECK_FALSE(mod_sqrt(2, 5));
  for (u64 p = 3; p < 500; p += 2) {
    if (!oracle::is_prime(p)) continue;
    for (i64 a = -static_cast<i64>(p); a < static_cast<i64>(p); ++a) {
      const auto r = mod_sqrt(a, p);
      REQUIRE(r.has_value() == (oracle::legendre(a, p) != -1));
      if (!r) continue;
      REQUIRE(*r <= p - *r);
      REQUIRE((*r * *r) % p == static_cast<u64>(oracle::mod(a, static_cast<i64>(p))));
    }
  }
  // Tonelli-Shanks path: p - 1 divisible by a large power of two.
  const u64 p = 998244353;
  for (u64 x : {2ULL, 3ULL, 12345ULL, 998244352ULL}) {
    const auto r = mod_sqrt(static_cast<i64>(x * x % p), p);
    REQUIRE(r);
    CHECK((*r == x || *r == p - x));
  }
}

TEST_CASE("crt") {
  const std::array<Congruence, 2> a{{{1, 3}, {2, 5}}};
  CHECK(crt(a) == 7);
  const std::array<Congruence, 1> b{{{0, 7}}};
  CHECK(crt(b) == 0);
  const std::array<Congruence, 3> c{{{2, 3}, {3, 5}, {2, 7}}};
  CHECK(crt(c) == 23);
  const std::array<Congruence, 2> neg{{{-1, 4}, {-1, 9}}};
  CHECK(crt(neg) == 35);
  const std::array<Congruence, 2> bad{{{1, 6}, {1, 4}}};
  CHECK_THROWS_AS(crt(bad), std::invalid_argument);
  const std::array<Congruence, 1> tiny{{{0, 1}}};
  CHECK_THROWS_AS(crt(tiny), std::invalid_argument);
  CHECK_THROWS_AS(crt(std::span<const Congruence>{}), std::invalid_argument);

  // Six primes near 2^18: product above 2^64.
  const std::array<u64, 6> m{274723, 275269, 276319, 276823, 276277, 275227};
  std::array<Congruence, 6> six;
  for (std::size_t i = 0; i < 6; ++i) six[i] = {static_cast<i64>(i + 15), m[i]};
  const u128 x = crt(six);
  for (std::size_t i = 0; i < 6; ++i) CHECK(static_cast<u64>(x % m[i]) == i + 15);
  CHECK(to_string(x).size() > 20);
}

TEST_CASE("inv_mod and pow_mod") {
  CHECK(pow_mod(2, 10, 1000) == 24);
  CHECK(pow_mod(5, 0, 7) == 1);
  for (u64 a = 1; a < 101; ++a) CHECK(mul_mod(a, inv_mod(a, 101), 101) == 1);
  CHECK_THROWS(inv_mod(6, 9));
}
