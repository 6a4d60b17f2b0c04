#pragma once

#include <optional>

#include "ecpairs/arith.hpp"

namespace ecpairs {

/// A prime split in Q(sqrt(-d)).
///
/// For d > 3: 4p = a^2 + d b^2 with a, b > 0 (unique).
/// For d = 3: p = a^2 + 3 b^2 with b > 0 and a = -1 (mod 3); a may be
/// negative.  Callers that need the other sign of b flip it themselves.
struct CmDecomposition {
  u64 p = 0;
  u64 d = 0;
  i64 a = 0;
  i64 b = 0;

  friend bool operator==(const CmDecomposition&, const CmDecomposition&) = default;
};

/// Cornacchia on 4p = a^2 + d b^2.  Requires p prime > 3 and d > 3
/// squarefree with d = 3 (mod 8), otherwise std::invalid_argument.  Empty
/// when p has no such representation.
std::optional<CmDecomposition> decompose(u64 p, u64 d);

/// p = a^2 + 3 b^2 with the sign conventions above.  Throws
/// std::domain_error unless p is a prime > 3 with p = 1 (mod 3).
CmDecomposition decompose3(u64 p);

/// h(-d) by counting reduced forms of discriminant -d.  d must be
/// squarefree with d = 3 (mod 4).
u64 class_number(u64 d);

/// Maximum allowable list length: for d = 3 (mod 8), the least prime z
/// with (-d / z) != -1; 1 otherwise.
u64 max_allowable(u64 d);

}  // namespace ecpairs
