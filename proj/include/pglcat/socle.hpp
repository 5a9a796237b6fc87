#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pglcat/catalog.hpp"

namespace pglcat {

enum class SocleKind { PrimitiveSocle, ImprimitiveSocle };

struct SocleWitness {
  std::optional<Int> n, q, ell, k, s;
  std::string str() const;
};

struct SocleCandidate {
  SimpleGroupId group;  // canonical
  SocleKind kind;
  std::vector<std::string> clauses;  // e.g. "1(b)(ii)"; merged across clauses
  SocleWitness witness;
  std::vector<std::string> notes;
};

struct SocleEnumeration {
  Int p;
  std::vector<SocleCandidate> primitive;    // sorted by (order, code)
  std::vector<SocleCandidate> imprimitive;  // socles of imprimitive simple groups
  std::vector<std::string> notes;
};

struct SocleOptions {
  // The symplectic clause is solved with s >= 1; the printed statement has
  // s >= 2, which contradicts the degree-5 tables (it would drop PSU(4,2)).
  // strict_s2 restores the printed reading.
  bool strict_s2 = false;
};

/// All candidate socles of primitive subgroups of PGL(p,C) with non-abelian
/// socle, obtained by exactly solving the parametric clauses; side
/// conditions (primality, prime-power shapes) enforced, exceptional cases
/// emitted from embedded data, duplicates merged under canonical().
SocleEnumeration nonabelian_socles(const Int& p, SocleOptions options = {});

struct SL2Subgroup {
  unsigned index;    // K_i numbering from the table observations
  std::string name;  // "C4", "Q8", "SL(2,3)", ...
  Int order;
  std::string note;  // e.g. non-conjugate copy markers
};

struct AbelianSocleStructure {
  Int p;
  Int extraspecial_order;       // p^3
  Int full_group_order;         // p^4(p^2-1), the unimodular normalizer
  Int projective_group_order;   // p^3(p^2-1)
  bool options_exact;           // true for p in {3,5,7}
  std::vector<SL2Subgroup> sl2_subgroup_options;  // exact list when available
  std::vector<std::string> generic_families;      // otherwise: family shapes
};

/// The abelian-socle branch: extraspecial p^3 normal subgroup, with the top
/// either the full normalizer or a semidirect product with an SL(2,p)
/// subgroup of order coprime to p. p = 2 is rejected.
AbelianSocleStructure abelian_socle_structure(const Int& p);

struct SmallPrimeGroup {
  std::string description;               // central quotient, e.g. "S6", "PGL(2,7)"
  std::optional<SimpleGroupId> socle;    // absent for the solvable p=2 cases
  std::string socle_note;
};

/// Embedded full-group lists for p in {2,3,5,7,11} (classification oracle,
/// corrections already applied: A5 and PSL(2,7) are not listed as primitive).
std::vector<SmallPrimeGroup> small_p_overrides(const Int& p);

}  // namespace pglcat
