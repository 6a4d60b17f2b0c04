#include "ecpairs/curves.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ecpairs/kernels.hpp"
#include "ecpairs/quadform.hpp"

namespace ecpairs {

namespace {

void require_curve(u64 p, u64 k) {
  if (p <= 3 || !is_prime(p)) {
    throw std::invalid_argument("curve: p must be a prime > 3, got " + std::to_string(p));
  }
  if (k % p == 0) throw std::invalid_argument("curve: p divides k");
}

u64 add_mod(u64 a, u64 b, u64 p) {
  const u64 s = a + b;
  return s >= p ? s - p : s;
}

u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

// Eisenstein integers u + v*w with w^2 = -1 - w.
struct Eisenstein {
  i64 u = 0;
  i64 v = 0;
};

Eisenstein operator*(Eisenstein x, Eisenstein y) {
  return {x.u * y.u - x.v * y.v, x.u * y.v + x.v * y.u - x.v * y.v};
}

// Discrete logarithms to base g for every nonzero residue.
std::vector<u32> log_table(u64 p, u64 g) {
  std::vector<u32> lg(p, 0);
  u64 cur = 1;
  for (u64 e = 0; e + 1 < p; ++e) {
    lg[cur] = static_cast<u32>(e);
    cur = cur * g % p;
  }
  return lg;
}

// sum_{x != 0, 1} chi2(x) chi3(1 - x), with chi6(g) = e^{i pi / 3}.
Eisenstein jacobi_eisenstein(u64 p, const std::vector<u32>& lg) {
  Eisenstein j;
  for (u64 x = 2; x < p; ++x) {
    const i64 s2 = (lg[x] & 1) ? -1 : 1;
    switch (lg[p + 1 - x] % 3) {
      case 0:
        j.u += s2;
        break;
      case 1:
        j.v += s2;
        break;
      default:
        j.u -= s2;
        j.v -= s2;
        break;
    }
  }
  return j;
}

CurvePoint sample_point(u64 p, u64 k, std::mt19937_64& rng) {
  std::uniform_int_distribution<u64> coord(0, p - 1);
  for (;;) {
    const u64 x = coord(rng);
    const u64 rhs = add_mod(mul_mod(mul_mod(x, x, p), x, p), k, p);
    auto y = mod_sqrt(static_cast<i64>(rhs), p);
    if (!y) continue;
    const u64 yy = (rng() & 1) ? *y : (p - *y) % p;
    return CurvePoint::affine(x, yy);
  }
}

// Hasse upper end p + 1 + 2 sqrt(p) is below 2n, so a point of prime
// order n forces #E = n.
bool prime_order_certifies(u64 p, u64 n) {
  if (2 * n <= p + 1) return false;
  const u128 gap = 2 * n - p - 1;
  return gap * gap > static_cast<u128>(4) * p;
}

u64 resolve_pair(u64 p, u64 k, std::array<u64, 2> candidates, std::mt19937_64& rng) {
  constexpr int kMaxSamples = 64;
  if (candidates[0] == candidates[1]) return candidates[0];

  std::vector<u64> live(candidates.begin(), candidates.end());
  for (int sample = 1; sample <= kMaxSamples; ++sample) {
    const CurvePoint P = sample_point(p, k, rng);
    std::erase_if(live, [&](u64 n) { return !ec_mul(p, k, P, n).infinity; });
    if (live.empty()) {
      throw std::logic_error("curve_order: no candidate order annihilates a point");
    }
    for (u64 n : live) {
      if (is_prime(n) && prime_order_certifies(p, n)) return n;
    }
    // The true order annihilates every point, so a lone survivor is it.
    if (live.size() == 1) return live.front();
  }
  // Every sampled point had order dividing both candidates.
  if (p < kNaiveFallbackBelow) return naive_order(p, k);
  return jacobi_order(p, k);
}

}  // namespace

bool on_curve(u64 p, u64 k, const CurvePoint& P) {
  if (P.infinity) return true;
  if (P.x >= p || P.y >= p) return false;
  const u64 lhs = mul_mod(P.y, P.y, p);
  const u64 rhs = add_mod(mul_mod(mul_mod(P.x, P.x, p), P.x, p), k % p, p);
  return lhs == rhs;
}

CurvePoint ec_add(u64 p, u64 /*k*/, const CurvePoint& P, const CurvePoint& Q) {
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  u64 lambda;
  if (P.x == Q.x) {
    if (add_mod(P.y, Q.y, p) == 0) return CurvePoint::identity();
    // Tangent: lambda = 3x^2 / 2y (a = 0).
    const u64 num = mul_mod(3, mul_mod(P.x, P.x, p), p);
    lambda = mul_mod(num, inv_mod(add_mod(P.y, P.y, p), p), p);
  } else {
    lambda = mul_mod(sub_mod(Q.y, P.y, p), inv_mod(sub_mod(Q.x, P.x, p), p), p);
  }
  const u64 x3 = sub_mod(sub_mod(mul_mod(lambda, lambda, p), P.x, p), Q.x, p);
  const u64 y3 = sub_mod(mul_mod(lambda, sub_mod(P.x, x3, p), p), P.y, p);
  return CurvePoint::affine(x3, y3);
}

CurvePoint ec_mul(u64 p, u64 k, const CurvePoint& P, u64 n) {
  if (!on_curve(p, k, P)) throw std::invalid_argument("ec_mul: point is not on the curve");
  CurvePoint result = CurvePoint::identity();
  CurvePoint addend = P;
  while (n > 0) {
    if (n & 1) result = ec_add(p, k, result, addend);
    n >>= 1;
    if (n > 0) addend = ec_add(p, k, addend, addend);
  }
  return result;
}

u64 naive_order(u64 p, u64 k) {
  require_curve(p, k);
  if (p >= kernels::kPointCountMaxP) throw std::invalid_argument("naive_order: p too large");
  const auto chi = kernels::quadratic_character_table(static_cast<u32>(p));
  return 1 + kernels::point_count_sum(chi, static_cast<u32>(p), static_cast<u32>(k % p));
}

std::vector<u64> naive_orders_all(u64 p) {
  require_curve(p, 1);
  if (p >= kernels::kPointCountMaxP) throw std::invalid_argument("naive_orders_all: p too large");
  const auto chi = kernels::quadratic_character_table(static_cast<u32>(p));
  std::vector<u64> out(p, 0);
  for (u64 k = 1; k < p; ++k) {
    out[k] = 1 + kernels::point_count_sum(chi, static_cast<u32>(p), static_cast<u32>(k));
  }
  return out;
}

ResidueClass classify(u64 p, u64 k) {
  const bool qr = pow_mod(k, (p - 1) / 2, p) == 1;
  const bool cr = pow_mod(k, (p - 1) / 3, p) == 1;
  if (qr && cr) return ResidueClass::sixth_power;
  if (cr) return ResidueClass::cubic_not_quadratic;
  if (qr) return ResidueClass::quadratic_not_cubic;
  return ResidueClass::neither;
}

std::array<u64, 6> SixOrders::values() const {
  return {sixth_power,         cubic_not_quadratic, quadratic_not_cubic[0],
          quadratic_not_cubic[1], neither[0],       neither[1]};
}

bool SixOrders::contains(u64 n) const {
  const auto v = values();
  return std::find(v.begin(), v.end(), n) != v.end();
}

SixOrders six_orders(u64 p) {
  if (p <= 3 || !is_prime(p) || p % 3 != 1) {
    throw std::domain_error("six_orders: p must be a prime > 3 with p = 1 (mod 3)");
  }
  const auto dec = decompose3(p);
  const i64 base = static_cast<i64>(p) + 1;
  const i64 a = dec.a, b = dec.b;
  SixOrders s;
  s.p = p;
  s.a = a;
  s.b = b;
  s.sixth_power = static_cast<u64>(base + 2 * a);
  s.cubic_not_quadratic = static_cast<u64>(base - 2 * a);
  s.quadratic_not_cubic = {static_cast<u64>(base - a + 3 * b), static_cast<u64>(base - a - 3 * b)};
  s.neither = {static_cast<u64>(base + a + 3 * b), static_cast<u64>(base + a - 3 * b)};
  return s;
}

u64 curve_order(u64 p, u64 k, std::mt19937_64& rng) {
  require_curve(p, k);
  k %= p;
  if (p % 3 == 2) return p + 1;
  const SixOrders six = six_orders(p);
  switch (classify(p, k)) {
    case ResidueClass::sixth_power:
      return six.sixth_power;
    case ResidueClass::cubic_not_quadratic:
      return six.cubic_not_quadratic;
    case ResidueClass::quadratic_not_cubic:
      return resolve_pair(p, k, six.quadratic_not_cubic, rng);
    case ResidueClass::neither:
      return resolve_pair(p, k, six.neither, rng);
  }
  throw std::logic_error("curve_order: unreachable");
}

u64 curve_order(u64 p, u64 k) {
  std::mt19937_64 rng(kDefaultSeed);
  return curve_order(p, k, rng);
}

u64 primitive_root(u64 p) {
  if (p < 2 || !is_prime(p)) throw std::invalid_argument("primitive_root: p must be prime");
  if (p == 2) return 1;
  std::vector<u64> factors;
  u64 m = p - 1;
  for (u64 f = 2; f * f <= m; ++f) {
    if (m % f == 0) {
      factors.push_back(f);
      while (m % f == 0) m /= f;
    }
  }
  if (m > 1) factors.push_back(m);
  for (u64 g = 2;; ++g) {
    bool generator = true;
    for (u64 f : factors) {
      if (pow_mod(g, (p - 1) / f, p) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return g;
  }
}

JacobiSum jacobi_sum(u64 p) {
  if (p <= 3 || !is_prime(p) || p % 3 != 1) {
    throw std::domain_error("jacobi_sum: p must be a prime > 3 with p = 1 (mod 3)");
  }
  const auto lg = log_table(p, primitive_root(p));
  const Eisenstein j = jacobi_eisenstein(p, lg);
  // u + v w = (u - v/2) + i (v/2) sqrt(3); J = -1 (mod 2) makes v even.
  if (j.v % 2 != 0) throw std::logic_error("jacobi_sum: odd w-coefficient");
  return {j.u - j.v / 2, j.v / 2};
}

u64 jacobi_order(u64 p, u64 k) {
  require_curve(p, k);
  k %= p;
  if (p % 3 == 2) return p + 1;
  const auto lg = log_table(p, primitive_root(p));
  const Eisenstein j = jacobi_eisenstein(p, lg);
  // chi6(k)^-1 = (1 + w)^-e = (-w)^e with e = log k mod 6.
  Eisenstein unit{1, 0};
  for (u32 e = 0; e < lg[k] % 6; ++e) unit = unit * Eisenstein{0, -1};
  Eisenstein alpha = unit * j;
  alpha = {-alpha.u, -alpha.v};
  // alpha + conj(alpha) = 2u - v.
  return static_cast<u64>(static_cast<i64>(p) + 1 - (2 * alpha.u - alpha.v));
}

std::optional<u64> find_k(u64 p, u64 target) {
  if (p <= 3 || !is_prime(p)) throw std::invalid_argument("find_k: p must be a prime > 3");
  if (p % 3 == 2) {
    if (target == p + 1) return 1;
    return std::nullopt;
  }
  if (!six_orders(p).contains(target)) return std::nullopt;
  std::mt19937_64 rng(kDefaultSeed);
  for (u64 k = 1; k < p; ++k) {
    if (curve_order(p, k, rng) == target) return k;
  }
  return std::nullopt;
}

bool in_hasse_interval(u64 p, u64 n) {
  const i128 t = static_cast<i128>(n) - static_cast<i128>(p) - 1;
  return t * t <= static_cast<i128>(4) * p;
}

}  // namespace ecpairs
