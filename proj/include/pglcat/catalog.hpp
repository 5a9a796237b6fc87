#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "pglcat/factored.hpp"

namespace pglcat {

enum class Family {
  Alt,
  PSL,          // A_{n-1}(q), dimension n >= 2
  PSU,          // 2A_{n-1}(q), dimension n >= 3
  PSp,          // C_n(q), dimension 2n >= 4
  POmega,       // B_n(q), dimension 2n+1 >= 5 (even q folds into PSp)
  POmegaPlus,   // D_n(q), dimension 2n >= 8
  POmegaMinus,  // 2D_n(q), dimension 2n >= 8
  G2,
  F4,
  E6,
  TwE6,
  E7,
  E8,
  Tw3D4,
  Sz,      // 2B2(q), q = 2^(2k+1)
  Ree2G2,  // 2G2(q), q = 3^(2k+1)
  Ree2F4,  // 2F4(q), q = 2^(2k+1)
  Tits,    // 2F4(2)'
  Sporadic,
};

/// Identifier of a finite simple group (or, with the explicit allow flag at
/// construction, one of the standard non-simple boundary cases needed by
/// table data: A_n n<5, PSL(2,2), PSL(2,3), PSU(3,2), PSp(4,2), G2(2),
/// Sz(2), 2G2(3), 2F4(2)).
struct SimpleGroupId {
  Family family = Family::Alt;
  unsigned n = 0;        // Alt: points; classical families: matrix dimension
  Int q = 0;             // field size, prime power, where applicable
  std::string sporadic;  // sporadic name, canonical upper case

  static SimpleGroupId alt(unsigned n, bool allow_nonsimple = false);
  static SimpleGroupId psl(unsigned n, const Int& q, bool allow_nonsimple = false);
  static SimpleGroupId psu(unsigned n, const Int& q, bool allow_nonsimple = false);
  static SimpleGroupId psp(unsigned dim, const Int& q, bool allow_nonsimple = false);
  static SimpleGroupId pomega(unsigned dim, const Int& q, bool allow_nonsimple = false);
  static SimpleGroupId pomega_plus(unsigned dim, const Int& q);
  static SimpleGroupId pomega_minus(unsigned dim, const Int& q);
  static SimpleGroupId exceptional(Family f, const Int& q, bool allow_nonsimple = false);
  static SimpleGroupId tits();
  static SimpleGroupId sporadic_group(const std::string& name);

  bool operator==(const SimpleGroupId&) const = default;
  bool operator<(const SimpleGroupId& other) const {
    if (family != other.family) return family < other.family;
    if (n != other.n) return n < other.n;
    int c = cmp(q, other.q);
    if (c != 0) return c < 0;
    return sporadic < other.sporadic;
  }
};

/// Exact order as a factored integer; formulas per family, sporadic orders
/// embedded.
FactoredInteger order(const SimpleGroupId& id);

/// Order as a plain integer, no factorization work; used by enumeration
/// loops.
Int order_value(const SimpleGroupId& id);

bool is_simple(const SimpleGroupId& id);

/// Fixed representative of the isomorphism class (exceptional isomorphisms
/// and the B_n = C_n fold for even q).
SimpleGroupId canonical(const SimpleGroupId& id);

enum class MultiplierProvenance { GenericFormula, EmbeddedException, Unknown };

/// Schur multiplier as abelian invariants d1 | d2 | ... (empty = trivial).
struct SchurMultiplierDescriptor {
  std::vector<Int> invariants;
  MultiplierProvenance provenance = MultiplierProvenance::Unknown;
  Int size() const;
  std::string str() const;  // "1", "C2", "C4xC12", "unknown"
};

SchurMultiplierDescriptor schur_multiplier(const SimpleGroupId& id);

/// Group code grammar:
///   ALT-<n>, CA-<n>-<q>, CB-<n>-<q>, CC-<n>-<q>, CD-<n>-<q>,
///   T2A-<n>-<q>, T2D-<n>-<q>, T2E6-<q>, T3D4-<q>, E6-<q>, E7-<q>, E8-<q>,
///   F4-<q>, G2-<q>, SZ-<q>, R2G2-<q>, R2F4-<q>, TITS, SPOR-<name>
/// Chevalley codes use the Lie rank: CA-1-13 is PSL(2,13).
std::string render_code(const SimpleGroupId& id);
SimpleGroupId parse_code(const std::string& code);  // case-insensitive

/// Conventional display name, e.g. "A5", "PSL(2,7)", "PSp(6,2)", "M12".
std::string display_name(const SimpleGroupId& id);

/// Resolves a display-style name ("A5", "PSL(2,7)", "M12", ...) or a group
/// code to an id; used by table data.
std::optional<SimpleGroupId> resolve_name(const std::string& name);

const std::vector<std::string>& sporadic_names();  // the fixed 26, Tits excluded

}  // namespace pglcat
