// Built with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <bit>

#include "ecpairs/kernels.hpp"

namespace ecpairs::kernels::avx2 {

namespace {

// v mod p for 0 <= v < 2^50, four lanes, exact in double precision.
inline __m256d reduce_pd(__m256d v, __m256d p, __m256d inv_p) {
  const __m256d q = _mm256_floor_pd(_mm256_mul_pd(v, inv_p));
  __m256d r = _mm256_sub_pd(v, _mm256_mul_pd(q, p));
  // The quotient estimate is off by at most one in either direction.
  const __m256d zero = _mm256_setzero_pd();
  r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), p));
  r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, p, _CMP_GE_OQ), p));
  return r;
}

}  // namespace

u64 point_count_sum(std::span<const std::int8_t> chi, u32 p, u32 k) {
  const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
  const __m256d inv_p = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d vk = _mm256_set1_pd(static_cast<double>(k));
  const __m256d step = _mm256_set1_pd(4.0);
  __m256d xs = _mm256_setr_pd(0.0, 1.0, 2.0, 3.0);
  __m128i acc = _mm_setzero_si128();
  const int* base = reinterpret_cast<const int*>(chi.data());

  u32 x = 0;
  for (; x + 4 <= p; x += 4) {
    const __m256d x2 = reduce_pd(_mm256_mul_pd(xs, xs), vp, inv_p);
    const __m256d x3 = reduce_pd(_mm256_mul_pd(x2, xs), vp, inv_p);
    const __m256d v = reduce_pd(_mm256_add_pd(x3, vk), vp, inv_p);
    const __m128i idx = _mm256_cvttpd_epi32(v);
    // Four bytes are read at chi + idx; keep only the low one, signed.
    __m128i c = _mm_i32gather_epi32(base, idx, 1);
    c = _mm_srai_epi32(_mm_slli_epi32(c, 24), 24);
    acc = _mm_add_epi32(acc, c);
    xs = _mm256_add_pd(xs, step);
  }
  alignas(16) std::int32_t lanes[4];
  _mm_store_si128(reinterpret_cast<__m128i*>(lanes), acc);
  i64 total = static_cast<i64>(lanes[0]) + lanes[1] + lanes[2] + lanes[3];
  for (; x < p; ++x) {
    const u64 v = (u64{x} * x % p * x + k) % p;
    total += chi[v];
  }
  return static_cast<u64>(total + p);
}

u64 count_row_pairs(const PrimeBitmap& primes, const PairRow& row) {
  const int* words = reinterpret_cast<const int*>(primes.words().data());
  const u32 n = (row.a_last - row.a_first) / 2 + 1;

  const __m256i one = _mm256_set1_epi32(1);
  const __m256i three = _mm256_set1_epi32(3);
  const __m256i thirty_one = _mm256_set1_epi32(31);
  const __m256i bound = _mm256_set1_epi32(static_cast<int>(row.bound));
  const __m256i db2 = _mm256_set1_epi32(static_cast<int>(row.db2));
  const __m256i stride = _mm256_set1_epi32(16);
  __m256i a = _mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(row.a_first)),
                               _mm256_setr_epi32(0, 2, 4, 6, 8, 10, 12, 14));

  u64 hits = 0;
  u32 i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i p = _mm256_srli_epi32(_mm256_add_epi32(_mm256_mullo_epi32(a, a), db2), 2);
    const __m256i q = _mm256_add_epi32(_mm256_add_epi32(p, one), a);

    __m256i live = _mm256_and_si256(_mm256_cmpgt_epi32(p, three), _mm256_cmpgt_epi32(bound, q));
    live = _mm256_and_si256(live, _mm256_cmpeq_epi32(_mm256_and_si256(p, one), one));
    live = _mm256_and_si256(live, _mm256_cmpeq_epi32(_mm256_and_si256(q, one), one));

    if (!_mm256_testz_si256(live, live)) {
      const __m256i wp = _mm256_mask_i32gather_epi32(_mm256_setzero_si256(), words,
                                                     _mm256_srli_epi32(p, 6), live, 4);
      const __m256i wq = _mm256_mask_i32gather_epi32(_mm256_setzero_si256(), words,
                                                     _mm256_srli_epi32(q, 6), live, 4);
      const __m256i bp = _mm256_srlv_epi32(
          wp, _mm256_and_si256(_mm256_srli_epi32(p, 1), thirty_one));
      const __m256i bq = _mm256_srlv_epi32(
          wq, _mm256_and_si256(_mm256_srli_epi32(q, 1), thirty_one));
      const __m256i both = _mm256_and_si256(_mm256_and_si256(bp, bq), one);
      const __m256i hit = _mm256_and_si256(_mm256_cmpeq_epi32(both, one), live);
      hits += static_cast<u64>(std::popcount(
          static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(hit)))));
    }
    a = _mm256_add_epi32(a, stride);
  }
  if (i < n) {
    PairRow tail = row;
    tail.a_first = row.a_first + 2 * i;
    hits += scalar::count_row_pairs(primes, tail);
  }
  return hits;
}

}  // namespace ecpairs::kernels::avx2
