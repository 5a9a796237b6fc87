#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pglcat {

using Int = mpz_class;
using Rat = mpq_class;

/// Positive integer kept as its prime factorization. The empty list is 1.
/// Primes are strictly increasing and certified by a deterministic
/// Miller-Rabin test; exponents are >= 1.
class FactoredInteger {
public:
  FactoredInteger() = default;

  /// Validates ordering, primality and positivity of exponents.
  static FactoredInteger from_factors(std::vector<std::pair<Int, unsigned>> factors);
  static FactoredInteger one() { return FactoredInteger(); }

  const std::vector<std::pair<Int, unsigned>>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  Int value() const;
  unsigned exponent_of(const Int& p) const;
  std::vector<Int> primes() const;

  FactoredInteger times(const FactoredInteger& other) const;
  FactoredInteger power(unsigned e) const;

  /// Renders as "2^6*3^4*5"; "1" for the empty product.
  std::string str() const;

  bool operator==(const FactoredInteger& other) const { return factors_ == other.factors_; }

private:
  std::vector<std::pair<Int, unsigned>> factors_;
};

/// Deterministic Miller-Rabin with the standard 12-witness set for all
/// n < 3.3e24 (every desk-scale parameter scan stays far below this);
/// larger inputs fall back to GMP's BPSW-based test.
bool is_prime(const Int& n);

/// Trial division up to a small bound, then Pollard rho on the cofactors.
FactoredInteger factorize(const Int& n);

/// n >= 2 -> (l, k) with l prime and l^k == n, or nullopt.
std::optional<std::pair<Int, unsigned>> prime_power(const Int& n);

bool divides(const FactoredInteger& a, const FactoredInteger& b);

FactoredInteger factorial_factored(unsigned n);

/// Exponent of prime p in n! (Legendre's formula).
unsigned factorial_prime_exponent(unsigned n, const Int& p);

/// Accepts "2^3*3^2*5*7" or a plain decimal integer (auto-factorized).
FactoredInteger parse_factored(const std::string& text);

}  // namespace pglcat
