#include <doctest.h>

#include <vector>

#include "ecpairs/sieve.hpp"
#include "oracles.hpp"

using namespace ecpairs;

namespace {

// Plain sieve of Eratosthenes over the whole range.
std::vector<bool> flat_sieve(u64 limit) {
  std::vector<bool> composite(limit, false);
  std::vector<bool> prime(limit, false);
  for (u64 i = 2; i < limit; ++i) {
    if (composite[i]) continue;
    prime[i] = true;
    for (u64 j = i * i; j < limit; j += i) composite[j] = true;
  }
  return prime;
}

}  // namespace

TEST_CASE("primes_up_to: small bounds") {
  CHECK(primes_up_to(10) == std::vector<u64>{2, 3, 5, 7});
  CHECK(primes_up_to(100).size() == 25);
  CHECK(primes_up_to(2).empty());
  CHECK(primes_up_to(3) == std::vector<u64>{2});
  CHECK(primes_up_to(0).empty());
}

TEST_CASE("primes_up_to: every bound below 2000") {
  for (u64 limit = 0; limit < 2000; ++limit) {
    std::vector<u64> want;
    for (u64 n = 0; n < limit; ++n) {
      if (oracle::is_prime(n)) want.push_back(n);
    }
    REQUIRE(primes_up_to(limit) == want);
  }
}

TEST_CASE("primes_up_to: 10^7 matches a flat sieve") {
  const u64 X = 10000000;
  const auto flat = flat_sieve(X);
  const auto primes = primes_up_to(X);
  u64 count = 0;
  for (u64 n = 0; n < X; ++n) count += flat[n];
  CHECK(primes.size() == count);
  CHECK(primes.size() == 664579);
  for (u64 p : primes) REQUIRE(flat[p]);
}

TEST_CASE("sieve_segments: result independent of segment size") {
  const u64 X = 200003;
  const auto ref = primes_up_to(X);
  for (std::size_t bytes : {std::size_t{1}, std::size_t{8}, std::size_t{100}, std::size_t{4096}}) {
    std::vector<u64> got;
    sieve_segments(
        X, [&](std::span<const u64> seg) { got.insert(got.end(), seg.begin(), seg.end()); }, bytes);
    CHECK(got == ref);
  }
}

TEST_CASE("PrimeBitmap agrees with trial division") {
  const PrimeBitmap bm(300001);
  CHECK(bm.limit() == 300001);
  for (u64 n = 0; n < bm.limit(); ++n) {
    if (bm.test(n) != oracle::is_prime(n)) FAIL("mismatch at " << n);
  }
}
