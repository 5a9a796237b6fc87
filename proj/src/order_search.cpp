#include "pglcat/order_search.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "pglcat/errors.hpp"

namespace pglcat {

namespace {

bool is_prime_power_int(const Int& q) { return q >= 2 && prime_power(q).has_value(); }

// Total degree of the order polynomial in q (the dimension of the ambient
// algebraic group); |G(q)| >= q^degree / 2^12 for every family, which gives
// a complete field-size cap for bounded-order scans.
unsigned order_poly_degree(Family f, unsigned dim) {
  switch (f) {
    case Family::PSL:
    case Family::PSU:
      return dim * dim - 1;
    case Family::PSp: {
      unsigned m = dim / 2;
      return 2 * m * m + m;
    }
    case Family::POmega: {
      unsigned m = (dim - 1) / 2;
      return 2 * m * m + m;
    }
    case Family::POmegaPlus:
    case Family::POmegaMinus: {
      unsigned m = dim / 2;
      return 2 * m * m - m;
    }
    case Family::G2:
      return 14;
    case Family::F4:
      return 52;
    case Family::E6:
    case Family::TwE6:
      return 78;
    case Family::E7:
      return 133;
    case Family::E8:
      return 248;
    case Family::Tw3D4:
      return 28;
    case Family::Sz:
      return 5;
    case Family::Ree2G2:
      return 7;
    case Family::Ree2F4:
      return 26;
    default:
      return 0;
  }
}

// Exponent of q in the order formula (the defining-characteristic part);
// the argument is the matrix dimension for classical families.
unsigned q_exponent(Family f, unsigned dim) {
  switch (f) {
    case Family::PSL:
    case Family::PSU:
      return dim * (dim - 1) / 2;
    case Family::PSp:
      return (dim / 2) * (dim / 2);
    case Family::POmega: {
      unsigned m = (dim - 1) / 2;
      return m * m;
    }
    case Family::POmegaPlus:
    case Family::POmegaMinus: {
      unsigned m = dim / 2;
      return m * (m - 1);
    }
    case Family::G2:
      return 6;
    case Family::F4:
      return 24;
    case Family::E6:
    case Family::TwE6:
      return 36;
    case Family::E7:
      return 63;
    case Family::E8:
      return 120;
    case Family::Tw3D4:
      return 12;
    case Family::Sz:
      return 2;
    case Family::Ree2G2:
      return 3;
    case Family::Ree2F4:
      return 12;
    default:
      return 0;
  }
}

// Visits every simple-group id whose order can still fit; visit returns
// false once the order passed the bound (orders are strictly increasing in
// q at fixed dimension and in dimension at fixed q, so loops terminate).
void walk_families(const std::function<std::vector<Int>(Family, unsigned)>& q_candidates,
                   const std::function<bool(const SimpleGroupId&)>& visit) {
  for (unsigned n = 5;; ++n)
    if (!visit(SimpleGroupId::alt(n))) break;

  // Orders are not monotone across the even/odd field-size boundary (the
  // center divisor changes), so every candidate q is visited; the candidate
  // lists themselves are finite. The dimension loop may stop once nothing
  // fits, because orders do grow with the dimension at fixed q and the
  // candidate lists only shrink.
  auto classical = [&](Family f, unsigned dim_start, unsigned dim_step, auto maker) {
    for (unsigned dim = dim_start;; dim += dim_step) {
      bool any_fit = false;
      bool any_candidate = false;
      for (const Int& q : q_candidates(f, dim)) {
        any_candidate = true;
        SimpleGroupId id;
        try {
          id = maker(dim, q);
        } catch (const DomainError&) {
          continue;  // invalid or non-simple parameters
        }
        if (visit(id)) any_fit = true;
      }
      if (!any_fit || !any_candidate) break;
    }
  };
  classical(Family::PSL, 2, 1, [](unsigned d, const Int& q) { return SimpleGroupId::psl(d, q); });
  classical(Family::PSU, 3, 1, [](unsigned d, const Int& q) { return SimpleGroupId::psu(d, q); });
  classical(Family::PSp, 4, 2, [](unsigned d, const Int& q) { return SimpleGroupId::psp(d, q); });
  classical(Family::POmega, 7, 2,
            [](unsigned d, const Int& q) { return SimpleGroupId::pomega(d, q); });
  classical(Family::POmegaPlus, 8, 2,
            [](unsigned d, const Int& q) { return SimpleGroupId::pomega_plus(d, q); });
  classical(Family::POmegaMinus, 8, 2,
            [](unsigned d, const Int& q) { return SimpleGroupId::pomega_minus(d, q); });

  for (Family f : {Family::G2, Family::F4, Family::E6, Family::TwE6, Family::E7, Family::E8,
                   Family::Tw3D4, Family::Sz, Family::Ree2G2, Family::Ree2F4}) {
    for (const Int& q : q_candidates(f, 0)) {
      SimpleGroupId id;
      try {
        id = SimpleGroupId::exceptional(f, q);
      } catch (const DomainError&) {
        continue;
      }
      visit(id);
    }
  }

  visit(SimpleGroupId::tits());
  for (const auto& name : sporadic_names()) visit(SimpleGroupId::sporadic_group(name));
}

// Increasing prime powers valid for the family's field-size shape.
std::vector<Int> all_prime_powers_up_to(Family f, const Int& qmax) {
  std::vector<Int> out;
  for (Int q = 2; q <= qmax; ++q) {
    if (!is_prime_power_int(q)) continue;
    if (f == Family::POmega && q % 2 == 0) continue;  // even q folds into PSp
    if (f == Family::Sz || f == Family::Ree2F4 || f == Family::Ree2G2) {
      auto pp = prime_power(q);
      unsigned long base = f == Family::Ree2G2 ? 3 : 2;
      if (pp->first != base || pp->second % 2 == 0) continue;
    }
    out.push_back(q);
  }
  return out;
}

void sort_result(std::vector<SimpleGroupId>& v) {
  std::sort(v.begin(), v.end(), [](const SimpleGroupId& a, const SimpleGroupId& b) {
    Int oa = order_value(a), ob = order_value(b);
    if (oa != ob) return oa < ob;
    return render_code(a) < render_code(b);
  });
}

}  // namespace

std::vector<SimpleGroupId> enumerate_up_to(const Int& bound) {
  if (bound < 1) throw DomainError("enumerate_up_to requires bound >= 1");
  std::set<SimpleGroupId> seen;
  if (bound >= 60) {
    // Candidate field sizes per family and dimension, capped through the
    // order-polynomial degree.
    auto candidates = [&](Family f, unsigned dim) -> std::vector<Int> {
      unsigned deg = order_poly_degree(f, dim);
      if (deg == 0) return {};
      Int cap;
      Int slack_bound = bound << 12;
      mpz_root(cap.get_mpz_t(), slack_bound.get_mpz_t(), deg);  // floor root
      if (cap < 2) return {};
      return all_prime_powers_up_to(f, cap);
    };
    walk_families(candidates, [&](const SimpleGroupId& id) {
      if (order_value(id) > bound) return false;
      seen.insert(canonical(id));
      return true;
    });
  }
  std::vector<SimpleGroupId> out(seen.begin(), seen.end());
  sort_result(out);
  return out;
}

std::vector<SimpleGroupId> groups_with_order_dividing(const SearchQuery& query) {
  Int bound = query.divisor_target.value();
  if (query.max_order && *query.max_order < bound) bound = *query.max_order;
  const FactoredInteger& target = query.divisor_target;

  unsigned max_exp = 0;
  for (const auto& [p, e] : target.factors()) max_exp = std::max(max_exp, e);

  // Candidate field sizes: powers of primes dividing the target, capped by
  // the exponent budget of the defining characteristic. Any group whose
  // order divides the target must satisfy these caps.
  auto q_candidates = [&](Family f, unsigned dim) {
    std::vector<Int> out;
    unsigned qe = q_exponent(f, dim);
    if (qe == 0 || qe > max_exp) return out;
    for (const auto& [p, e] : target.factors()) {
      if (f == Family::POmega && p == 2) continue;
      if ((f == Family::Sz || f == Family::Ree2F4) && p != 2) continue;
      if (f == Family::Ree2G2 && p != 3) continue;
      Int q = p;
      for (unsigned k = 1; k * qe <= e; ++k, q *= p) {
        if ((f == Family::Sz || f == Family::Ree2F4 || f == Family::Ree2G2) && k % 2 == 0)
          continue;
        out.push_back(q);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  };

  std::set<SimpleGroupId> seen;
  if (bound >= 60) {
    walk_families(q_candidates, [&](const SimpleGroupId& id) {
      if (order_value(id) > bound) return false;
      if (divides(order(id), target)) seen.insert(canonical(id));
      return true;
    });
  }
  std::vector<SimpleGroupId> out(seen.begin(), seen.end());
  sort_result(out);
  return out;
}

std::vector<Int> cyclic_divisors(const SearchQuery& query) {
  Int bound = query.divisor_target.value();
  if (query.max_order && *query.max_order < bound) bound = *query.max_order;
  std::vector<Int> out;
  for (const auto& [p, e] : query.divisor_target.factors())
    if (p <= bound) out.push_back(p);
  return out;
}

}  // namespace pglcat
