#include "ecpairs/sieve.hpp"

#include <algorithm>
#include <stdexcept>

namespace ecpairs {

void sieve_segments(u64 limit, const std::function<void(std::span<const u64>)>& sink,
                    std::size_t segment_bytes) {
  if (limit <= 2) return;
  if (segment_bytes == 0) throw std::invalid_argument("sieve_segments: empty segment");

  const u64 root = isqrt(limit - 1);
  // Base primes up to sqrt(limit) by a plain sieve.
  std::vector<char> small(root + 1, 1);
  std::vector<u64> base;
  for (u64 i = 2; i <= root; ++i) {
    if (!small[i]) continue;
    base.push_back(i);
    for (u64 j = i * i; j <= root; j += i) small[j] = 0;
  }

  // Odd-only segments: byte j of a segment starting at odd `lo` stands for
  // lo + 2j.
  std::vector<char> seg(segment_bytes);
  std::vector<u64> out;
  out.reserve(segment_bytes / 4);
  const u64 span_len = 2 * static_cast<u64>(segment_bytes);

  {
    const u64 two = 2;
    sink(std::span<const u64>(&two, 1));
  }

  for (u64 lo = 3; lo < limit; lo += span_len) {
    const u64 hi = std::min<u64>(lo + span_len, limit);  // exclusive
    const std::size_t n = static_cast<std::size_t>((hi - lo + 1) / 2);
    std::fill(seg.begin(), seg.begin() + static_cast<std::ptrdiff_t>(n), 1);
    for (std::size_t bi = 1; bi < base.size(); ++bi) {
      const u64 p = base[bi];
      if (p * p >= hi) break;
      u64 start = std::max(p * p, (lo + p - 1) / p * p);
      if ((start & 1) == 0) start += p;
      for (u64 j = (start - lo) / 2; j < n; j += p) seg[j] = 0;
    }
    out.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (seg[j]) out.push_back(lo + 2 * j);
    }
    // 1 never appears: lo starts at 3.
    if (!out.empty()) sink(out);
  }
}

std::vector<u64> primes_up_to(u64 limit) {
  std::vector<u64> primes;
  sieve_segments(limit, [&](std::span<const u64> chunk) {
    primes.insert(primes.end(), chunk.begin(), chunk.end());
  });
  return primes;
}

PrimeBitmap::PrimeBitmap(u64 limit) : limit_(limit) {
  const u64 bits = (limit + 1) / 2;
  words_.assign(static_cast<std::size_t>(bits / 32 + 2), 0u);
  sieve_segments(limit, [&](std::span<const u64> chunk) {
    for (u64 p : chunk) {
      if (p == 2) continue;
      const u64 bit = p >> 1;
      words_[bit >> 5] |= 1u << (bit & 31);
    }
  });
}

}  // namespace ecpairs
