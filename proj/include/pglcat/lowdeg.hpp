#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pglcat/catalog.hpp"

namespace pglcat {

/// One admissible (group, prime, degree) triple: some covering group of
/// `group` has an irreducible complex representation of dimension d, with
/// r a prime divisor of the order and d <= 2r.
struct RepDegreeRecord {
  SimpleGroupId group;  // canonical
  Int r;
  Int d;
  std::optional<unsigned> count;     // number of representations, when recorded
  std::vector<std::string> clauses;  // contributing clause tags
  std::string provenance;            // "derived" (family formula), "embedded", "external"
  std::vector<std::string> notes;
};

/// All records the classification produces for the given group: family
/// clauses instantiated at its parameters plus the embedded exception rows.
std::vector<RepDegreeRecord> tz_triples_for_group(const SimpleGroupId& group);

struct ExternalDegreeRecord {
  SimpleGroupId group;
  unsigned cover;  // m-fold covering, 1 = the simple group itself
  Int degree;
  std::optional<unsigned> count;
  unsigned characteristic;  // 0 = complex
  std::string source;
};

/// Every record of degree d, obtained by exact clause inversion; optional
/// externally loaded degree tables are merged with provenance "external".
std::vector<RepDegreeRecord> tz_groups_for_degree(
    const Int& d, const std::vector<ExternalDegreeRecord>* external = nullptr);

/// Minimal degree of a nontrivial projective irreducible representation of
/// PSL(n,q) in characteristic coprime to q: (q^n-1)/(q-1) - n with the four
/// embedded exceptions.
Int min_degree_psl(unsigned n, const Int& q);

/// Loads the external degree-table CSV
/// (header: group_code,cover,degree,count,characteristic,source).
/// Unknown group codes and malformed rows are rejected with line numbers.
std::vector<ExternalDegreeRecord> load_degree_csv(std::istream& in);

}  // namespace pglcat
