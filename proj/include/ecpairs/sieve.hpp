#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "ecpairs/arith.hpp"

namespace ecpairs {

inline constexpr std::size_t kDefaultSegmentBytes = std::size_t{1} << 18;

/// Streams the primes below `limit` in ascending order, one segment at a
/// time.  Memory is O(sqrt(limit) + segment_bytes).
void sieve_segments(u64 limit, const std::function<void(std::span<const u64>)>& sink,
                    std::size_t segment_bytes = kDefaultSegmentBytes);

/// All primes p < limit, ascending.
std::vector<u64> primes_up_to(u64 limit);

/// One bit per odd integer below `limit`; test() answers primality by
/// table lookup.  Built by the segmented sieve.
class PrimeBitmap {
 public:
  PrimeBitmap() = default;
  explicit PrimeBitmap(u64 limit);

  u64 limit() const { return limit_; }

  /// n must be below limit().
  bool test(u64 n) const {
    if ((n & 1) == 0) return n == 2;
    const u64 bit = n >> 1;
    return (words_[bit >> 5] >> (bit & 31)) & 1u;
  }

  /// Raw words: bit (n >> 1) is set iff odd n is prime.  Padded by one
  /// trailing zero word.
  std::span<const u32> words() const { return words_; }

 private:
  u64 limit_ = 0;
  std::vector<u32> words_;
};

}  // namespace ecpairs
