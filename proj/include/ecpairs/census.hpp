#pragma once

// Counts of elliptic pairs (p, q)_d with 3 < p <= q < X.

#include <map>
#include <optional>
#include <ostream>
#include <vector>

#include "ecpairs/arith.hpp"

namespace ecpairs {

/// Unordered pairs counted once; anomalous (p, p) counted once.  d must be
/// squarefree with d = 3 (mod 8) (std::invalid_argument).  Result does not
/// depend on `threads`.
u64 count_pairs(u64 d, u64 X, unsigned threads = 1);

/// Histogram of find_d over every prime pair 3 < p <= q < X.  Quadratic in
/// the Hasse width; meant for X up to about 10^6.
std::map<u64, u64> scan_census(u64 X);

/// Y ln^2 X / X.
double cd_estimate(u64 X, u64 Y);

struct CensusRecord {
  u64 d = 0;
  u64 h = 0;
  double xi = 0;  // sqrt(d) / h^2
  u64 Y = 0;
  double c_hat = 0;
  u64 X = 0;
  bool outlier = false;  // excluded from the slope fit
};

struct LineFit {
  double slope = 0;
  double intercept = 0;
  // c_hat / (slope * xi) for the d = 3 row, when present.
  std::optional<double> d3_ratio;
};

/// Least-squares line c_hat ~ slope * xi + intercept over the rows not
/// flagged as outliers.
LineFit fit_census(const std::vector<CensusRecord>& rows);

struct Table2 {
  std::vector<CensusRecord> rows;  // sorted by (h, d)
  LineFit fit;
};

/// Every squarefree d = 3 (mod 8), d <= d_max, with h(-d) <= h_max.
std::vector<u64> table2_discriminants(u64 h_max, u64 d_max);

/// Census rows for table2_discriminants(h_max, d_max); d = 3 is the
/// outlier.
Table2 table2(u64 X, u64 h_max, u64 d_max, unsigned threads = 1);

/// Header `d,h,sqrt_d_over_h2,Y,c_hat`, reals with 6 decimals.
void write_census_csv(std::ostream& out, const std::vector<CensusRecord>& rows);

}  // namespace ecpairs
