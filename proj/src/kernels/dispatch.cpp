#include <atomic>
#include <stdexcept>
#include <string>

#include "ecpairs/kernels.hpp"

namespace ecpairs::kernels {

namespace {

// -1 means "no override".
std::atomic<int> g_override{-1};

Backend detect() {
#if defined(ECPAIRS_HAVE_AVX2)
  if (__builtin_cpu_supports("avx2")) return Backend::avx2;
#endif
  return Backend::scalar;
}

}  // namespace

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
  }
  return "unknown";
}

bool backend_supported(Backend b) {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if defined(ECPAIRS_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Backend active_backend() {
  const int o = g_override.load(std::memory_order_relaxed);
  if (o >= 0) return static_cast<Backend>(o);
  static const Backend detected = detect();
  return detected;
}

void set_backend(Backend b) {
  if (!backend_supported(b)) {
    throw std::invalid_argument("kernel backend not supported here: " +
                                std::string(backend_name(b)));
  }
  g_override.store(static_cast<int>(b), std::memory_order_relaxed);
}

void reset_backend() { g_override.store(-1, std::memory_order_relaxed); }

u64 point_count_sum(std::span<const std::int8_t> chi, u32 p, u32 k) {
  if (p >= kPointCountMaxP || chi.size() < p + kChiPadding || k >= p) {
    throw std::invalid_argument("point_count_sum: bad table or arguments");
  }
#if defined(ECPAIRS_HAVE_AVX2)
  if (active_backend() == Backend::avx2) return avx2::point_count_sum(chi, p, k);
#endif
  return scalar::point_count_sum(chi, p, k);
}

u64 count_row_pairs(const PrimeBitmap& primes, const PairRow& row) {
  if (row.a_last < row.a_first) return 0;
  if (primes.limit() < row.bound) {
    throw std::invalid_argument("count_row_pairs: prime table too small");
  }
#if defined(ECPAIRS_HAVE_AVX2)
  const u64 top = u64{row.a_last} * row.a_last + row.db2;
  if (active_backend() == Backend::avx2 && row.bound <= kRowMaxBound && top < (u64{1} << 31)) {
    return avx2::count_row_pairs(primes, row);
  }
#endif
  return scalar::count_row_pairs(primes, row);
}

}  // namespace ecpairs::kernels
