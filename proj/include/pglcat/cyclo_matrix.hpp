#pragma once

#include <string>
#include <vector>

#include "pglcat/cyclo.hpp"

namespace pglcat {

/// Dense square matrix over Q(zeta_N); all entries share one modulus.
class CycloMatrix {
public:
  CycloMatrix() : size_(0), modulus_(1) {}
  CycloMatrix(unsigned size, unsigned modulus);

  static CycloMatrix identity(unsigned size, unsigned modulus);

  unsigned size() const { return size_; }
  unsigned modulus() const { return modulus_; }

  const CycloNumber& at(unsigned row, unsigned col) const;
  void set(unsigned row, unsigned col, CycloNumber value);

  CycloMatrix embedded(unsigned new_modulus) const;
  CycloMatrix scaled(const CycloNumber& c) const;
  CycloMatrix kron(const CycloMatrix& other) const;

  CycloNumber determinant() const;  // exact Gaussian elimination
  bool is_zero() const;

  friend CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b);
  friend CycloMatrix operator-(const CycloMatrix& a, const CycloMatrix& b);
  bool operator==(const CycloMatrix& other) const;

  std::string key() const;  // canonical bytes for hashing

  /// Dump format: "N=<modulus>" header, then one row per line with entries
  /// as cyclotomic polynomials in z, separated by " | ".
  std::string dump() const;

private:
  unsigned size_;
  unsigned modulus_;
  std::vector<CycloNumber> entries_;  // row-major
};

/// Scalar-normalized class of an invertible matrix: the representative is
/// scaled so its first nonzero entry in row-major order equals 1.
struct ProjectiveMatrix {
  CycloMatrix rep;
  static ProjectiveMatrix normalize(const CycloMatrix& m);  // throws on zero matrix
  bool operator==(const ProjectiveMatrix& other) const { return rep == other.rep; }
};

/// Null space basis of m - lambda*I, exact.
std::vector<std::vector<CycloNumber>> eigenvectors(const CycloMatrix& m, const CycloNumber& lambda);

}  // namespace pglcat
