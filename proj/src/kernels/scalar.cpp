#include "ecpairs/kernels.hpp"

namespace ecpairs::kernels {

std::vector<std::int8_t> quadratic_character_table(u32 p) {
  std::vector<std::int8_t> chi(p + kChiPadding, 0);
  for (u32 x = 1; x < p; ++x) chi[x] = -1;
  for (u64 y = 1; y <= p / 2; ++y) chi[y * y % p] = 1;
  return chi;
}

namespace scalar {

u64 point_count_sum(std::span<const std::int8_t> chi, u32 p, u32 k) {
  i64 total = 0;
  for (u64 x = 0; x < p; ++x) {
    const u64 v = (x * x % p * x + k) % p;
    total += 1 + chi[v];
  }
  return static_cast<u64>(total);
}

u64 count_row_pairs(const PrimeBitmap& primes, const PairRow& row) {
  u64 hits = 0;
  for (u64 a = row.a_first; a <= row.a_last; a += 2) {
    const u64 p = (a * a + row.db2) >> 2;
    const u64 q = p + 1 + a;
    if (p <= 3 || q >= row.bound) continue;
    if (primes.test(p) && primes.test(q)) ++hits;
  }
  return hits;
}

}  // namespace scalar
}  // namespace ecpairs::kernels
