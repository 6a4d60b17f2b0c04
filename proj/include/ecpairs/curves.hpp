#pragma once

// Curves y^2 = x^3 + k over F_p (j-invariant 0) and their group orders.
//
// Three independent routes to #E(F_p):
//   curve_order   residue class of k selects among the six orders, point
//                 tests resolve the +-3b ambiguity
//   naive_order   direct count with a quadratic-character table
//   jacobi_order  N = p + 1 - alpha - conj(alpha) with
//                 alpha = -chi6(k)^-1 J(chi2, chi3), by character sums

#include <array>
#include <optional>
#include <random>
#include <vector>

#include "ecpairs/arith.hpp"

namespace ecpairs {

struct CurvePoint {
  u64 x = 0;
  u64 y = 0;
  bool infinity = true;

  static CurvePoint identity() { return {}; }
  static CurvePoint affine(u64 x, u64 y) { return {x, y, false}; }

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

bool on_curve(u64 p, u64 k, const CurvePoint& P);

CurvePoint ec_add(u64 p, u64 k, const CurvePoint& P, const CurvePoint& Q);

/// [n]P.  Throws std::invalid_argument when P is not on y^2 = x^3 + k.
CurvePoint ec_mul(u64 p, u64 k, const CurvePoint& P, u64 n);

/// Point counting by enumeration of x.  Intended for p < 10^5; refuses
/// p >= 2^24.
u64 naive_order(u64 p, u64 k);

/// naive_order(p, k) for every k in [0, p); entry 0 is unused (0).
std::vector<u64> naive_orders_all(u64 p);

enum class ResidueClass { sixth_power, cubic_not_quadratic, quadratic_not_cubic, neither };

/// Sextic class of k for p = 1 (mod 3), by Euler-criterion exponentiation.
ResidueClass classify(u64 p, u64 k);

/// The six possible orders for p = 1 (mod 3), labelled by residue class.
struct SixOrders {
  u64 p = 0;
  i64 a = 0;  // p = a^2 + 3b^2, a = -1 (mod 3)
  i64 b = 0;  // b > 0
  u64 sixth_power = 0;                     // p + 1 + 2a
  u64 cubic_not_quadratic = 0;             // p + 1 - 2a
  std::array<u64, 2> quadratic_not_cubic{};  // p + 1 - a +- 3b
  std::array<u64, 2> neither{};              // p + 1 + a +- 3b

  std::array<u64, 6> values() const;
  bool contains(u64 n) const;
};

SixOrders six_orders(u64 p);

inline constexpr u64 kDefaultSeed = 0x5eed5eedULL;
inline constexpr u64 kNaiveFallbackBelow = 100000;

/// Exact group order of y^2 = x^3 + k over F_p.  Point samples come from
/// `rng`, so a fixed seed gives a reproducible run.
u64 curve_order(u64 p, u64 k, std::mt19937_64& rng);
u64 curve_order(u64 p, u64 k);

/// J(chi2, chi3) = a + i b sqrt(3), characters based at the least
/// primitive root.
struct JacobiSum {
  i64 a = 0;
  i64 b = 0;
};

JacobiSum jacobi_sum(u64 p);

u64 primitive_root(u64 p);

/// Group order through the Jacobi-sum identity; O(p) time and memory.
u64 jacobi_order(u64 p, u64 k);

/// Least k in [1, p) with curve_order(p, k) = target.
std::optional<u64> find_k(u64 p, u64 target);

/// (N - p - 1)^2 <= 4p.
bool in_hasse_interval(u64 p, u64 n);

}  // namespace ecpairs
