#include "ecpairs/census.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "ecpairs/curves.hpp"
#include "ecpairs/kernels.hpp"
#include "ecpairs/pairs.hpp"
#include "ecpairs/parallel.hpp"
#include "ecpairs/quadform.hpp"
#include "ecpairs/sieve.hpp"

namespace ecpairs {

namespace {

void require_census_d(u64 d) {
  if (d % 8 != 3 || !is_squarefree(d)) {
    throw std::invalid_argument("census: d must be squarefree with d = 3 (mod 8)");
  }
}

u64 count_pairs_d3(u64 X, unsigned threads) {
  const PrimeBitmap bitmap(X);
  std::vector<u64> primes;
  for (u64 p : primes_up_to(X)) {
    if (p > 3 && p % 3 == 1) primes.push_back(p);
  }
  constexpr std::size_t kBlock = 8192;
  const std::size_t blocks = (primes.size() + kBlock - 1) / kBlock;
  std::vector<u64> partial(blocks, 0);
  parallel_for(blocks, threads, [&](std::size_t blk) {
    const std::size_t end = std::min(primes.size(), (blk + 1) * kBlock);
    u64 local = 0;
    for (std::size_t i = blk * kBlock; i < end; ++i) {
      const u64 p = primes[i];
      auto v = six_orders(p).values();
      std::sort(v.begin(), v.end());
      const auto last = std::unique(v.begin(), v.end());
      for (auto it = v.begin(); it != last; ++it) {
        if (*it >= p && *it < X && bitmap.test(*it)) ++local;
      }
    }
    partial[blk] = local;
  });
  return std::accumulate(partial.begin(), partial.end(), u64{0});
}

u64 count_pairs_rows(u64 d, u64 X, unsigned threads) {
  const PrimeBitmap bitmap(X);
  // p = (a^2 + d b^2) / 4 < X.
  const u64 b_max = isqrt((4 * X - 1) / d);
  std::vector<u64> partial(b_max + 1, 0);
  parallel_for(b_max, threads, [&](std::size_t i) {
    const u64 b = i + 1;
    const u64 db2 = d * b * b;
    if (db2 + 1 > 4 * X - 1) return;
    u64 a_last = isqrt(4 * X - 1 - db2);
    const u64 a_first = (b & 1) ? 1 : 2;
    if ((a_last & 1) != (a_first & 1)) --a_last;
    u64 local = 0;
    if (a_last >= a_first) {
      local = kernels::count_row_pairs(
          bitmap, {db2, static_cast<u32>(a_first), static_cast<u32>(a_last), X});
    }
    // a = 1 also gives the anomalous pair (p, p).
    if (b & 1) {
      const u64 p = (1 + db2) / 4;
      if (p > 3 && p < X && bitmap.test(p)) ++local;
    }
    partial[b] = local;
  });
  return std::accumulate(partial.begin(), partial.end(), u64{0});
}

}  // namespace

u64 count_pairs(u64 d, u64 X, unsigned threads) {
  require_census_d(d);
  if (X <= 5) return 0;
  if (X >= (u64{1} << 31)) throw std::invalid_argument("count_pairs: X must be below 2^31");
  return d == 3 ? count_pairs_d3(X, threads) : count_pairs_rows(d, X, threads);
}

std::map<u64, u64> scan_census(u64 X) {
  if (X >= (u64{1} << 31)) throw std::invalid_argument("scan_census: X must be below 2^31");
  std::map<u64, u64> hist;
  const auto primes = primes_up_to(X);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const u64 p = primes[i];
    if (p <= 3) continue;
    for (std::size_t j = i; j < primes.size(); ++j) {
      const u64 q = primes[j];
      if (pair_numerator(p, q) <= 0) break;  // past the Hasse interval
      if (const auto cert = find_d(p, q)) ++hist[cert->d];
    }
  }
  return hist;
}

double cd_estimate(u64 X, u64 Y) {
  const double lx = std::log(static_cast<double>(X));
  return static_cast<double>(Y) * lx * lx / static_cast<double>(X);
}

std::vector<u64> table2_discriminants(u64 h_max, u64 d_max) {
  std::vector<u64> out;
  for (u64 d = 3; d <= d_max; d += 8) {
    if (is_squarefree(d) && class_number(d) <= h_max) out.push_back(d);
  }
  return out;
}

LineFit fit_census(const std::vector<CensusRecord>& rows) {
  LineFit fit;
  double n = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& r : rows) {
    if (r.outlier) continue;
    n += 1;
    sx += r.xi;
    sy += r.c_hat;
    sxx += r.xi * r.xi;
    sxy += r.xi * r.c_hat;
  }
  const double den = n * sxx - sx * sx;
  if (n < 2 || den == 0) return fit;
  fit.slope = (n * sxy - sx * sy) / den;
  fit.intercept = (sy - fit.slope * sx) / n;
  for (const auto& r : rows) {
    if (r.d == 3) fit.d3_ratio = r.c_hat / (fit.slope * r.xi);
  }
  return fit;
}

Table2 table2(u64 X, u64 h_max, u64 d_max, unsigned threads) {
  Table2 t;
  for (u64 d : table2_discriminants(h_max, d_max)) {
    CensusRecord r;
    r.d = d;
    r.h = class_number(d);
    r.xi = std::sqrt(static_cast<double>(d)) / static_cast<double>(r.h * r.h);
    r.Y = count_pairs(d, X, threads);
    r.c_hat = cd_estimate(X, r.Y);
    r.X = X;
    r.outlier = d == 3;
    t.rows.push_back(r);
  }
  std::sort(t.rows.begin(), t.rows.end(), [](const CensusRecord& x, const CensusRecord& y) {
    return x.h != y.h ? x.h < y.h : x.d < y.d;
  });

  t.fit = fit_census(t.rows);
  return t;
}

void write_census_csv(std::ostream& out, const std::vector<CensusRecord>& rows) {
  out << "d,h,sqrt_d_over_h2,Y,c_hat\n";
  char buf[128];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%llu,%llu,%.6f,%llu,%.6f\n",
                  static_cast<unsigned long long>(r.d), static_cast<unsigned long long>(r.h), r.xi,
                  static_cast<unsigned long long>(r.Y), r.c_hat);
    out << buf;
  }
}

}  // namespace ecpairs
