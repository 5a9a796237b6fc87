#include "pglcat/bounds.hpp"

#include "pglcat/errors.hpp"

namespace pglcat {

PrimeVerdict admissible_prime(unsigned n, const Int& p) {
  if (n < 2) throw DomainError("degree must be >= 2");
  if (!is_prime(p)) throw DomainError("not a prime: " + p.get_str());
  if (p > 2 * n + 1)
    return {PrimeVerdictKind::Forbidden,
            "no prime above 2n+1 may divide the central quotient order"};
  if (p == 2 * n + 1)
    return {PrimeVerdictKind::ExceptionalPSL2p,
            "p = 2n+1 forces the central quotient to be PSL(2," + p.get_str() + ")"};
  if (p > n + 1)
    return {PrimeVerdictKind::LargePrimeUniqueSquareFree,
            "p is the unique prime above n+1 and its square cannot divide the order"};
  return {PrimeVerdictKind::Unrestricted, ""};
}

unsigned blichfeldt_exponent_bound(unsigned n, const Int& p, BlichfeldtOptions opts) {
  if (n < 2) throw DomainError("degree must be >= 2");
  if (!is_prime(p)) throw DomainError("not a prime: " + p.get_str());

  // General bound: p^k <= (n!)_p * C^(n-1).
  unsigned np = factorial_prime_exponent(n, p);
  Int limit;
  mpz_pow_ui(limit.get_mpz_t(), p.get_mpz_t(), np);
  Int c(opts.constant_five ? 5 : 6);
  Int cpow;
  mpz_pow_ui(cpow.get_mpz_t(), c.get_mpz_t(), n - 1);
  limit *= cpow;
  unsigned general = 0;
  Int pk = p;
  while (pk <= limit) {
    ++general;
    pk *= p;
  }

  if (Int(n) % p != 0) {
    // p does not divide n: also p^k | n! * p^(n-1).
    unsigned coprime_degree = np + (n - 1);
    return std::min(general, coprime_degree);
  }
  return general;
}

std::optional<FactoredInteger> collins_index_bound(unsigned n, BoundContext context) {
  if (n < 2) throw DomainError("degree must be >= 2");
  if (context == BoundContext::PrimitiveInGL) {
    if (n > 12 || n == 10 || n == 11) return factorial_factored(n + 1);
    return std::nullopt;
  }
  if (n >= 71 || n == 63 || n == 65 || n == 67 || n == 69) return factorial_factored(n + 1);
  if (n >= 20) {
    unsigned r = n / 2;  // n = 2r or 2r+1
    FactoredInteger sixty = parse_factored("2^2*3*5");
    return sixty.power(r).times(factorial_factored(r));
  }
  return std::nullopt;
}

QuasiprimitivityVerdict can_be_quasiprimitive(unsigned n, const FactoredInteger& order,
                                              BlichfeldtOptions opts) {
  QuasiprimitivityVerdict v{true, {}};
  unsigned primes_above_n1 = 0;
  for (const auto& [p, e] : order.factors()) {
    PrimeVerdict pv = admissible_prime(n, p);
    if (pv.kind == PrimeVerdictKind::Forbidden) {
      v.violations.push_back("prime " + p.get_str() + " exceeds 2n+1 = " +
                             std::to_string(2 * n + 1));
    }
    if (p > n + 1) ++primes_above_n1;
    if (pv.kind == PrimeVerdictKind::LargePrimeUniqueSquareFree && e >= 2) {
      v.violations.push_back("prime " + p.get_str() + " between n+1 and 2n+1 appears squared");
    }
    unsigned k = blichfeldt_exponent_bound(n, p, opts);
    if (e > k) {
      v.violations.push_back("exponent of " + p.get_str() + " is " + std::to_string(e) +
                             ", above the admissible " + std::to_string(k));
    }
  }
  if (primes_above_n1 > 1)
    v.violations.push_back("more than one prime exceeds n+1 = " + std::to_string(n + 1));
  if (auto bound = collins_index_bound(n, BoundContext::PrimitiveInGL)) {
    if (order.value() > bound->value())
      v.violations.push_back("order exceeds the primitive index bound (n+1)!");
  }
  v.admissible = v.violations.empty();
  return v;
}

}  // namespace pglcat
