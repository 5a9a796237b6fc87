#pragma once

#include <optional>
#include <vector>

#include "pglcat/catalog.hpp"

namespace pglcat {

struct SearchQuery {
  FactoredInteger divisor_target;
  std::optional<Int> max_order;
  bool include_cyclic = false;  // abelian simple C_p, off by default
};

/// Every canonical non-abelian simple group of order <= bound, each exactly
/// once, ordered by (order, group code). Family scans terminate through
/// order monotonicity in rank and field size.
std::vector<SimpleGroupId> enumerate_up_to(const Int& bound);

/// Exactly the canonical simple groups whose order divides the target and is
/// at most min(value(target), max_order). Scans draw candidate field sizes
/// from the primes of the target, so very smooth targets stay fast.
std::vector<SimpleGroupId> groups_with_order_dividing(const SearchQuery& query);

/// Cyclic C_p entries for the include_cyclic flag, reported as raw primes.
std::vector<Int> cyclic_divisors(const SearchQuery& query);

}  // namespace pglcat
