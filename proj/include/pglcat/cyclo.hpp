#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pglcat/factored.hpp"

namespace pglcat {

unsigned euler_phi(unsigned n);

/// Coefficients of the n-th cyclotomic polynomial Phi_n (monic, integral),
/// lowest degree first. Cached per modulus.
const std::vector<Int>& cyclotomic_polynomial(unsigned n);

/// Exact element of Q(zeta_N), stored in the power basis
/// 1, zeta, ..., zeta^{phi(N)-1} after reduction modulo Phi_N. The reduced
/// form is unique, so structural equality is field equality.
class CycloNumber {
public:
  CycloNumber() : modulus_(1), coeffs_(1) {}
  explicit CycloNumber(const Rat& r, unsigned modulus = 1);
  explicit CycloNumber(long v, unsigned modulus = 1) : CycloNumber(Rat(v), modulus) {}

  static CycloNumber zeta(unsigned modulus, long exponent = 1);
  /// Sum of coeff * zeta^exponent terms; exponents taken mod N.
  static CycloNumber from_terms(unsigned modulus, const std::vector<std::pair<long, Rat>>& terms);

  unsigned modulus() const { return modulus_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  Rat rational_value() const;  // throws DomainError unless is_rational()

  /// Image under zeta_N -> zeta_M^{M/N}; requires N | M.
  CycloNumber embedded(unsigned new_modulus) const;

  CycloNumber operator-() const;
  CycloNumber inverse() const;    // throws DomainError on zero
  CycloNumber conjugate() const;  // complex conjugation zeta -> zeta^{-1}

  friend CycloNumber operator+(const CycloNumber& a, const CycloNumber& b);
  friend CycloNumber operator-(const CycloNumber& a, const CycloNumber& b);
  friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b);
  CycloNumber& operator+=(const CycloNumber& b) { return *this = *this + b; }
  CycloNumber& operator*=(const CycloNumber& b) { return *this = *this * b; }

  /// Semantic equality; operands with different moduli are embedded into the
  /// lcm first.
  bool operator==(const CycloNumber& other) const;

  /// Polynomial in z, highest power first, e.g. "-z^12-z^18+1/2".
  std::string str() const;
  void append_key(std::string& out) const;  // canonical bytes, for hashing

private:
  unsigned modulus_;
  std::vector<Rat> coeffs_;  // size phi(modulus_)

  void reduce_from_poly(std::vector<Rat> poly);  // poly in zeta_N, any degree
  friend struct CycloOps;
};

/// Parses a polynomial in `z` over Q, e.g. "1", "-z^12-z^18", "2*z^3 + 1/2".
/// `z` denotes zeta_modulus.
CycloNumber parse_cyclo(const std::string& text, unsigned modulus);

}  // namespace pglcat
