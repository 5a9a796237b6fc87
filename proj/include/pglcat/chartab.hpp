#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pglcat/cyclo.hpp"

namespace pglcat {

struct ConjClass {
  std::string name;
  Int size;
  Int centralizer;
  unsigned element_order;
};

/// Values of a class function, one CycloNumber per class, in table order.
using ClassFunction = std::vector<CycloNumber>;

class CharacterTable {
public:
  /// Parses the table file format and validates it: class sizes sum to the
  /// order, size * centralizer = order per class, row orthogonality and the
  /// degree sum of squares.
  static CharacterTable parse(std::istream& in);
  static CharacterTable parse_text(const std::string& text);

  const std::string& label() const { return label_; }
  const Int& group_order() const { return order_; }
  unsigned exponent() const { return exponent_; }
  const std::vector<ConjClass>& classes() const { return classes_; }
  const std::vector<ClassFunction>& irreducibles() const { return irreducibles_; }

  size_t class_index(const std::string& name) const;  // throws DataError
  const ClassFunction& irreducible(size_t index) const;
  ClassFunction trivial_character() const;

private:
  std::string label_;
  Int order_;
  unsigned exponent_ = 1;
  std::vector<ConjClass> classes_;
  std::vector<ClassFunction> irreducibles_;
  void validate() const;
};

/// Class fusion of a subgroup table into an ambient table.
class Fusion {
public:
  /// Format: "fusion,<sub>,<ambient>,<index>" then "subclass,ambientclass"
  /// pairs. Validation: every subgroup class mapped, element orders
  /// preserved, subgroup centralizer orders divide the ambient ones, and
  /// the declared index equals the order ratio.
  static Fusion parse(std::istream& in, const CharacterTable& sub, const CharacterTable& ambient);
  static Fusion parse_text(const std::string& text, const CharacterTable& sub,
                           const CharacterTable& ambient);

  /// Test-only: skips validation (negative controls).
  static Fusion unchecked(const CharacterTable& sub, const CharacterTable& ambient,
                          std::vector<size_t> map);

  const CharacterTable& sub() const { return *sub_; }
  const CharacterTable& ambient() const { return *ambient_; }
  size_t image_of(size_t sub_class) const { return map_[sub_class]; }
  const Int& index() const { return index_; }

private:
  const CharacterTable* sub_ = nullptr;
  const CharacterTable* ambient_ = nullptr;
  std::vector<size_t> map_;
  Int index_;
};

/// Induced class function: chi^G(g) = |C_G(g)| * sum over fused subgroup
/// classes of chi(h)/|C_H(h)|. The degree multiplies by the index.
ClassFunction induce(const ClassFunction& chi, const Fusion& fusion);

/// Restriction along the fusion (pullback).
ClassFunction restrict_through(const ClassFunction& phi, const Fusion& fusion);

/// Exact Hermitian inner product (1/|G|) sum size * phi * conj(psi).
Rat inner_product(const CharacterTable& table, const ClassFunction& phi,
                  const ClassFunction& psi);

/// Checks <Ind(tau), phi>_G = <tau, Res(phi)>_H as exact rationals.
bool frobenius_check(const ClassFunction& tau, const ClassFunction& phi, const Fusion& fusion);

/// Multiplicities of phi against the table's irreducibles; throws
/// DomainError if any multiplicity is negative or non-integral (then phi is
/// not a character).
std::vector<unsigned> decompose(const CharacterTable& table, const ClassFunction& phi);

/// True iff phi is a character with <phi,phi> = 1.
bool is_irreducible(const CharacterTable& table, const ClassFunction& phi);

/// Embedded tables: "A4", "A5", "S4", "PSL(2,7)".
const CharacterTable& embedded_table(const std::string& name);
/// Embedded fusions: "A4<A5", "S4<PSL(2,7)".
const Fusion& embedded_fusion(const std::string& name);

}  // namespace pglcat
