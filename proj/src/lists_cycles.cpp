#include "ecpairs/lists_cycles.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <unordered_map>

#include "ecpairs/pairs.hpp"
#include "ecpairs/parallel.hpp"
#include "ecpairs/quadform.hpp"
#include "ecpairs/sieve.hpp"

namespace ecpairs {

namespace {

bool usable_prime(u64 n) { return n > 3 && is_prime(n); }

// Values are later fed to pair_numerator, which takes operands below 2^31.
constexpr i128 kCycleValueMax = i128{1} << 31;

i128 half(i128 v) { return v / 2; }

std::array<i128, 6> cycle_values(i128 a, i128 b) {
  const auto form = [](i128 x, i128 y) { return x * x + 3 * y * y; };
  return {
      form(a, b),
      form(half(a + 3 * b - 1), half(a - b + 1)),
      form(half(-a + 3 * b - 3), half(a + b + 1)),
      form(-a - 2, b),
      form(half(-a - 3 * b - 3), half(a - b + 1)),
      form(half(a - 3 * b - 1), half(a + b + 1)),
  };
}

bool links_are_pairs(const std::array<u64, 6>& v) {
  for (std::size_t i = 0; i < 6; ++i) {
    if (!is_pair(v[i], v[(i + 1) % 6], 3)) return false;
  }
  return true;
}

int mod7(i64 v) { return static_cast<int>(reduce(v, 7)); }

}  // namespace

EllipticList build_list(u64 p1, u64 d) {
  if (d == 3) throw std::domain_error("build_list: d = 3 is not supported");
  const auto dec = decompose(p1, d);
  if (!dec) {
    throw std::invalid_argument("build_list: " + std::to_string(p1) +
                                " has no representation 4p = a^2 + " + std::to_string(d) + " b^2");
  }
  EllipticList list{d, {p1}, dec->a, dec->b};
  u64 p = p1;
  u64 a = static_cast<u64>(dec->a);
  for (;;) {
    const u64 q = p + 1 + a;
    if (!is_prime(q)) break;
    list.primes.push_back(q);
    p = q;
    a += 2;
  }
  return list;
}

LongestList longest_list(u64 d, u64 bound, unsigned threads) {
  if (d == 3) throw std::domain_error("longest_list: d = 3 is not supported");
  const auto primes = primes_up_to(bound);
  constexpr std::size_t kBlock = 4096;
  const std::size_t blocks = (primes.size() + kBlock - 1) / kBlock;
  std::vector<LongestList> best(blocks);
  parallel_for(blocks, threads, [&](std::size_t blk) {
    const std::size_t end = std::min(primes.size(), (blk + 1) * kBlock);
    for (std::size_t i = blk * kBlock; i < end; ++i) {
      const u64 p = primes[i];
      if (p <= 3 || p % d == 0 || !decompose(p, d)) continue;
      const std::size_t len = build_list(p, d).primes.size();
      if (len > best[blk].length) best[blk] = {len, p};
    }
  });
  LongestList out;
  for (const auto& b : best) {
    if (b.length > out.length) out = b;
  }
  return out;
}

i64 discrepancy(u64 d, u64 bound, unsigned threads) {
  return static_cast<i64>(max_allowable(d)) -
         static_cast<i64>(longest_list(d, bound, threads).length);
}

std::array<u64, 6> SixCycle::canonical() const {
  std::array<u64, 6> best = values;
  for (int reversed = 0; reversed < 2; ++reversed) {
    for (std::size_t r = 0; r < 6; ++r) {
      std::array<u64, 6> cand;
      for (std::size_t i = 0; i < 6; ++i) {
        cand[i] = reversed ? values[(r + 6 - i) % 6] : values[(r + i) % 6];
      }
      best = std::min(best, cand);
    }
  }
  return best;
}

u64 SixCycle::min_value() const { return *std::min_element(values.begin(), values.end()); }

u64 SixCycle::max_value() const { return *std::max_element(values.begin(), values.end()); }

SixCycle cycle_from_ab(i64 a, i64 b) {
  if (reduce(a, 3) != 2) throw std::invalid_argument("cycle_from_ab: a must be -1 (mod 3)");
  if (reduce(a + b, 2) != 1) throw std::invalid_argument("cycle_from_ab: a + b must be odd");
  const auto raw = cycle_values(a, b);
  SixCycle c{a, b, {}, false, false};
  for (std::size_t i = 0; i < 6; ++i) {
    if (raw[i] >= kCycleValueMax) throw std::invalid_argument("cycle_from_ab: values exceed 2^31");
    c.values[i] = static_cast<u64>(raw[i]);
  }
  const auto& v = c.values;
  if (!std::all_of(v.begin(), v.end(), usable_prime)) return c;

  std::array<u64, 6> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  const bool pattern = v[0] == v[1] && v[3] == v[4] && v[2] == v[5];
  if ((distinct || pattern) && links_are_pairs(v)) {
    c.proper = distinct;
    c.anomalous = pattern;
  }
  return c;
}

std::vector<std::pair<i64, i64>> cycle_generators(const SixCycle& c) {
  const auto target = c.canonical();
  std::set<std::pair<i64, i64>> found;
  for (u64 m : c.values) {
    if (!usable_prime(m) || m % 3 != 1) continue;
    const auto dec = decompose3(m);
    for (i64 b : {dec.b, -dec.b}) {
      if (reduce(dec.a + b, 2) != 1) continue;
      if (cycle_from_ab(dec.a, b).canonical() == target) found.emplace(dec.a, b);
    }
  }
  return {found.begin(), found.end()};
}

SixCycle representative(const SixCycle& c) {
  std::optional<std::pair<i64, i64>> pick;
  for (const auto& g : cycle_generators(c)) {
    if (g.first <= 0 || g.second <= 0) continue;
    if (!pick || g < *pick) pick = g;
  }
  return pick ? cycle_from_ab(pick->first, pick->second) : c;
}

Mod7Row mod7_row(int a, int b) {
  Mod7Row row;
  row.a = mod7(a);
  row.b = mod7(b);
  // 2^-1 = 4 (mod 7).
  const auto h = [](i64 v) { return mod7(4 * v); };
  const auto form = [](i64 x, i64 y) { return mod7(x * x + 3 * y * y); };
  const i64 A = row.a, B = row.b;
  row.residues = {
      form(A, B),
      form(h(A + 3 * B - 1), h(A - B + 1)),
      form(h(-A + 3 * B - 3), h(A + B + 1)),
      form(-A - 2, B),
      form(h(-A - 3 * B - 3), h(A - B + 1)),
      form(h(A - 3 * B - 1), h(A + B + 1)),
  };
  int prod = 1;
  for (int r : row.residues) prod = prod * r % 7;
  row.product = prod;
  return row;
}

int mod7_product(int a, int b) { return mod7_row(a, b).product; }

std::vector<Mod7Row> mod7_table() {
  std::vector<Mod7Row> rows;
  for (int a = 0; a < 7; ++a) {
    for (int b = 0; b < 7; ++b) rows.push_back(mod7_row(a, b));
  }
  return rows;
}

std::vector<SixCycle> find_6cycles(const CycleSearch& search) {
  const u64 bound = search.bound;
  if (bound < 7) return {};
  // Generators with p1 = a^2 + 3b^2 < bound reach every cycle whose least
  // member is below bound.
  const i64 b_max = static_cast<i64>(isqrt((bound - 1) / 3));
  const i64 a_max = static_cast<i64>(isqrt(bound - 1));
  const PrimeBitmap bitmap(std::min<u64>(4 * bound + 64, u64{1} << 31));
  const auto prime = [&](u64 n) {
    return n > 3 && (n < bitmap.limit() ? bitmap.test(n) : is_prime(n));
  };
  const auto candidate = [&](i64 a, i64 b, std::vector<SixCycle>& out) {
    if (b == 0 || reduce(a + b, 2) != 1) return;
    if (static_cast<u64>(a * a + 3 * b * b) >= bound) return;
    const auto raw = cycle_values(a, b);
    for (i128 v : raw) {
      if (v >= kCycleValueMax || !prime(static_cast<u64>(v))) return;
    }
    SixCycle c = cycle_from_ab(a, b);
    const bool want =
        search.kind == CycleKind::proper ? c.proper : c.anomalous;
    if (want) out.push_back(c);
  };

  std::vector<i64> rows;  // a for proper, b for anomalous
  if (search.kind == CycleKind::proper) {
    const i64 step = search.mod7_filter ? 21 : 3;
    i64 a = -a_max;
    while (reduce(a, static_cast<u64>(step)) != static_cast<u64>(step - 1)) ++a;
    for (; a <= a_max; a += step) rows.push_back(a);
  } else {
    // p1 = p2 forces a = 3b - 1.
    for (i64 b = -b_max; b <= b_max; ++b) {
      if (b != 0 && (!search.mod7_filter || b % 7 == 0)) rows.push_back(b);
    }
  }

  std::vector<std::vector<SixCycle>> hits(rows.size());
  parallel_for(rows.size(), search.threads, [&](std::size_t i) {
    if (search.kind == CycleKind::anomalous) {
      candidate(3 * rows[i] - 1, rows[i], hits[i]);
      return;
    }
    const i64 a = rows[i];
    const i64 b_step = search.mod7_filter ? 7 : 1;
    for (i64 b = -(b_max / b_step) * b_step; b <= b_max; b += b_step) candidate(a, b, hits[i]);
  });

  std::set<std::array<u64, 6>> seen;
  std::vector<SixCycle> out;
  for (const auto& row : hits) {
    for (const auto& c : row) {
      if (seen.insert(c.canonical()).second) out.push_back(representative(c));
    }
  }
  std::sort(out.begin(), out.end(), [](const SixCycle& x, const SixCycle& y) {
    if (x.min_value() != y.min_value()) return x.min_value() < y.min_value();
    return x.canonical() < y.canonical();
  });
  return out;
}

std::array<u64, 6> rotate_cycle(const SixCycle& c, std::size_t rotation, bool reversed) {
  std::array<u64, 6> out;
  for (std::size_t i = 0; i < 6; ++i) {
    out[i] = reversed ? c.values[(rotation % 6 + 6 - i) % 6] : c.values[(rotation + i) % 6];
  }
  return out;
}

u64 aliquot_k(std::span<const u64> primes, u64 limit, u64 seed) {
  if (primes.empty()) throw std::invalid_argument("aliquot_k: empty prime list");
  for (u64 p : primes) {
    if (!usable_prime(p)) throw std::invalid_argument("aliquot_k: " + std::to_string(p) + " is not a prime > 3");
  }
  const std::size_t n = primes.size();
  std::vector<std::optional<SixOrders>> six(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (primes[i] % 3 == 1) six[i] = six_orders(primes[i]);
  }
  std::mt19937_64 rng(seed);
  std::vector<std::unordered_map<u64, u64>> memo(n);

  const auto matches = [&](std::size_t i, u64 k) {
    const u64 p = primes[i];
    const u64 target = primes[(i + 1) % n];
    const u64 r = k % p;
    if (r == 0) return false;
    if (!six[i]) return target == p + 1;
    const SixOrders& s = *six[i];
    switch (classify(p, r)) {
      case ResidueClass::sixth_power:
        return target == s.sixth_power;
      case ResidueClass::cubic_not_quadratic:
        return target == s.cubic_not_quadratic;
      case ResidueClass::quadratic_not_cubic:
        if (target != s.quadratic_not_cubic[0] && target != s.quadratic_not_cubic[1]) return false;
        break;
      case ResidueClass::neither:
        if (target != s.neither[0] && target != s.neither[1]) return false;
        break;
    }
    auto it = memo[i].find(r);
    if (it == memo[i].end()) it = memo[i].emplace(r, curve_order(p, r, rng)).first;
    return it->second == target;
  };

  for (u64 k = 1; k <= limit; ++k) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = matches(i, k);
    if (ok) return k;
  }
  throw NotFoundError("aliquot_k: no k <= " + std::to_string(limit));
}

}  // namespace ecpairs
