#pragma once

// Data-parallel inner loops.  Every kernel has a scalar reference in
// kernels::scalar and, on x86-64 builds, an AVX2 variant in kernels::avx2.
// The unqualified entry points dispatch on the CPU at runtime; tests pin
// the variants against each other.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "ecpairs/arith.hpp"
#include "ecpairs/sieve.hpp"

namespace ecpairs::kernels {

enum class Backend { scalar, avx2 };

std::string_view backend_name(Backend b);

/// True when the variant was compiled in and the CPU can run it.
bool backend_supported(Backend b);

/// Best supported backend unless overridden by set_backend().
Backend active_backend();

/// Throws std::invalid_argument for an unsupported backend.
void set_backend(Backend b);

/// Clears any override and returns to CPU detection.
void reset_backend();

/// Quadratic character table for an odd prime p: chi[x] = (x / p) for
/// 0 <= x < p, followed by kChiPadding zero bytes so vector loads may
/// read past the last entry.
inline constexpr std::size_t kChiPadding = 4;
std::vector<std::int8_t> quadratic_character_table(u32 p);

/// Largest p accepted by point_count_sum.
inline constexpr u32 kPointCountMaxP = 1u << 24;

/// Sum over x in [0, p) of (1 + chi(x^3 + k mod p)), i.e. the number of
/// affine points on y^2 = x^3 + k over F_p.  chi comes from
/// quadratic_character_table(p); 0 <= k < p.
u64 point_count_sum(std::span<const std::int8_t> chi, u32 p, u32 k);

/// Parameters of one census row: fixed b, odd stride over a.
struct PairRow {
  u64 db2 = 0;      // d * b^2
  u32 a_first = 0;  // first a of the row; same parity as b
  u32 a_last = 0;   // last a of the row (inclusive), a_last >= a_first
  u64 bound = 0;    // X: both primes must be below it
};

/// Largest X the vector path of count_row_pairs handles; larger rows use
/// the scalar path in every backend.
inline constexpr u64 kRowMaxBound = u64{1} << 29;

/// Number of a in {a_first, a_first + 2, ..., a_last} for which
/// p = (a^2 + db2) / 4 and q = p + 1 + a are both prime, 3 < p, q < bound.
/// `primes` must cover every q tested (limit >= bound).
u64 count_row_pairs(const PrimeBitmap& primes, const PairRow& row);

namespace scalar {
u64 point_count_sum(std::span<const std::int8_t> chi, u32 p, u32 k);
u64 count_row_pairs(const PrimeBitmap& primes, const PairRow& row);
}  // namespace scalar

#if defined(ECPAIRS_HAVE_AVX2)
namespace avx2 {
u64 point_count_sum(std::span<const std::int8_t> chi, u32 p, u32 k);
u64 count_row_pairs(const PrimeBitmap& primes, const PairRow& row);
}  // namespace avx2
#endif

}  // namespace ecpairs::kernels
