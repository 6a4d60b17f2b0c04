#pragma once

// Elliptic lists over d > 3 and elliptic 6-cycles over d = 3.

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ecpairs/arith.hpp"
#include "ecpairs/curves.hpp"

namespace ecpairs {

/// Raised when a bounded search ends without a result.
class NotFoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ascending chain over d > 3: 4 p_i = (a1 + 2i - 2)^2 + d b^2.
struct EllipticList {
  u64 d = 0;
  std::vector<u64> primes;
  i64 a1 = 0;
  i64 b = 0;
};

/// Maximal list starting at p1: q = p + 1 + a, a += 2, while q is prime.
/// std::domain_error for d = 3; std::invalid_argument when p1 has no
/// representation 4 p1 = a^2 + d b^2.
EllipticList build_list(u64 p1, u64 d);

struct LongestList {
  std::size_t length = 0;
  u64 start = 0;
};

/// Longest build_list over all starts 3 < p1 < bound; ties go to the
/// smallest start.  length 0 when no start has a representation.
LongestList longest_list(u64 d, u64 bound, unsigned threads = 1);

/// max_allowable(d) - longest_list(d, bound).length.
i64 discrepancy(u64 d, u64 bound, unsigned threads = 1);

/// Six values generated by (a, b) over d = 3, in generator order.
struct SixCycle {
  i64 a = 0;
  i64 b = 0;
  std::array<u64, 6> values{};
  bool proper = false;     // six distinct primes, all links are pairs
  bool anomalous = false;  // p1 = p2, p4 = p5, p3 = p6, all links are pairs

  /// Lexicographically smallest rotation or reflection of values.
  std::array<u64, 6> canonical() const;
  u64 min_value() const;
  u64 max_value() const;
};

/// Requires a = -1 (mod 3) and a + b odd (std::invalid_argument).
SixCycle cycle_from_ab(i64 a, i64 b);

/// Every generator (a, b) whose cycle is a rotation or reflection of c.
std::vector<std::pair<i64, i64>> cycle_generators(const SixCycle& c);

/// The generator with a > 0, b > 0 and the least a (then least b); c
/// itself when no generator is in that quadrant.
SixCycle representative(const SixCycle& c);

struct Mod7Row {
  int a = 0;
  int b = 0;
  std::array<int, 6> residues{};
  int product = 0;
};

/// The six generator formulas reduced modulo 7 for residues a, b.
Mod7Row mod7_row(int a, int b);
int mod7_product(int a, int b);
std::vector<Mod7Row> mod7_table();

enum class CycleKind { proper, anomalous };

struct CycleSearch {
  u64 bound = 0;  // smallest member below this
  CycleKind kind = CycleKind::proper;
  // Restrict generators to a = -1 (mod 7), 7 | b.
  bool mod7_filter = true;
  unsigned threads = 1;
};

/// Verified cycles of the requested kind with min_value() < bound, one
/// per canonical form, each reported through representative(), sorted
/// by smallest member.
std::vector<SixCycle> find_6cycles(const CycleSearch& search);

inline constexpr u64 kDefaultAliquotLimit = 1000000;

/// Least k >= 1 such that y^2 = x^3 + k has N_{p_i} = p_{i+1} for every i,
/// cyclically.  NotFoundError when no k <= limit works.
u64 aliquot_k(std::span<const u64> primes, u64 limit = kDefaultAliquotLimit,
              u64 seed = kDefaultSeed);

/// Cycle order starting at values[rotation], walking backwards when
/// `reversed`.
std::array<u64, 6> rotate_cycle(const SixCycle& c, std::size_t rotation, bool reversed);

}  // namespace ecpairs
