#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pglcat/catalog.hpp"

namespace pglcat {

/// One row of a degree table. Names, GAP identifiers and structure strings
/// are opaque data copied from the source classification tables; orders are
/// cross-checked against the catalog only for simple rows.
struct TableEntry {
  unsigned degree = 0;
  std::string name;
  std::optional<SimpleGroupId> simple_id;  // set when the row is a simple group
  std::string order_text;                  // as printed ("25920" or "2^6*3^4*5"); empty for markers
  std::optional<Int> order_value;
  std::vector<std::string> origins;        // "C" / "L" per representation source
  std::string gap_id;                      // opaque
  std::string gap_db;                      // "S", "P" or empty
  std::string structure;                   // opaque StructureDescription
  std::vector<unsigned> fi_counts;         // faithful-irreducible counts, possibly empty
  std::string obs;
};

struct StatusRecord {
  unsigned degree = 0;
  bool complete = false;
  std::vector<std::string> missing;
};

struct TablesResult {
  std::optional<std::vector<TableEntry>> rows;  // set for 2 <= n <= 7
  std::optional<StatusRecord> status;           // set instead when not classified here
};

/// Embedded degree table for 2 <= n <= 7; outside that range the result
/// carries the classification status instead.
TablesResult primitive_groups(unsigned n);

StatusRecord classification_status(unsigned n);  // 2 <= n <= 11

/// Parameter instantiations of the composite-degree structure theorem.
struct CompositeCase {
  int case_index;  // 1..4
  std::string description;
  std::optional<Int> p, s, m;  // case 3: n = p^s; case 4: n = s^m
};

/// Cases for composite n >= 4: the two unconditional structural clauses and
/// the exact solutions of n = p^s (case 3) and n = s^m (case 4). Prime n is
/// rejected (use the socle enumeration instead).
std::vector<CompositeCase> composite_cases(unsigned n);

struct StructureClause {
  std::string tag;   // clause label, e.g. "(i)"
  std::string kind;  // quasisimple-list | extension-list | product | abelian-normal |
                     // tensor-placeholder | order-shape
  std::vector<std::string> groups;  // group names involved (opaque)
  std::string note;
};

struct StructureStatement {
  unsigned degree;
  std::vector<StructureClause> clauses;
  std::optional<StatusRecord> unclassified;  // set for n = 10
};

/// Clause lists of the quasi-primitive structure theorems for n in
/// {4,6,8,9}; n = 10 reports the unclassified status.
StructureStatement quasiprimitive_structures(unsigned n);

}  // namespace pglcat
