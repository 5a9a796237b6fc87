#include "pglcat/tables.hpp"

#include <map>
#include <sstream>

#include "pglcat/csv.hpp"
#include "pglcat/embedded_data.hpp"
#include "pglcat/errors.hpp"

namespace pglcat {

namespace {

std::vector<TableEntry> parse_table(unsigned degree, const char* text) {
  std::vector<TableEntry> rows;
  std::istringstream in(text);
  std::string line;
  unsigned lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto cols = parse_csv_line(line);
    if (cols.size() != 9)
      throw DataError("degree-" + std::to_string(degree) + " table line " +
                      std::to_string(lineno) + ": expected 9 columns, got " +
                      std::to_string(cols.size()));
    TableEntry e;
    e.degree = degree;
    e.name = cols[0];
    if (!cols[1].empty()) {
      e.simple_id = canonical(parse_code(cols[1]));
      // The stored order must agree with the catalog for simple rows; this
      // is re-checked here so a bad data edit cannot load.
      if (!cols[2].empty() && parse_factored(cols[2]).value() != order_value(*e.simple_id))
        throw DataError("degree-" + std::to_string(degree) + " table: order mismatch for " +
                        e.name);
    }
    e.order_text = cols[2];
    if (!cols[2].empty()) e.order_value = parse_factored(cols[2]).value();
    for (const auto& o : split_nonempty(cols[3], ',')) e.origins.push_back(o);
    e.gap_id = cols[4];
    e.gap_db = cols[5];
    e.structure = cols[6];
    for (const auto& c : split_nonempty(cols[7], ',')) e.fi_counts.push_back(std::stoul(c));
    e.obs = cols[8];
    rows.push_back(std::move(e));
  }
  return rows;
}

const std::map<unsigned, std::vector<TableEntry>>& degree_tables() {
  static const std::map<unsigned, std::vector<TableEntry>> tables = [] {
    std::map<unsigned, std::vector<TableEntry>> m;
    m.emplace(2u, parse_table(2, embedded::tables_pgl2_csv));
    m.emplace(3u, parse_table(3, embedded::tables_pgl3_csv));
    m.emplace(4u, parse_table(4, embedded::tables_pgl4_csv));
    m.emplace(5u, parse_table(5, embedded::tables_pgl5_csv));
    m.emplace(6u, parse_table(6, embedded::tables_pgl6_csv));
    m.emplace(7u, parse_table(7, embedded::tables_pgl7_csv));
    return m;
  }();
  return tables;
}

const std::vector<StatusRecord>& status_records() {
  static const std::vector<StatusRecord> records = [] {
    std::vector<StatusRecord> out;
    std::istringstream in(embedded::tables_status_csv);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      auto cols = parse_csv_line(line);
      if (cols.size() != 3) throw DataError("bad status row: " + line);
      StatusRecord r;
      r.degree = static_cast<unsigned>(std::stoul(cols[0]));
      r.complete = cols[1] == "yes";
      r.missing = split_nonempty(cols[2], ';');
      out.push_back(std::move(r));
    }
    return out;
  }();
  return records;
}

}  // namespace

TablesResult primitive_groups(unsigned n) {
  TablesResult res;
  auto it = degree_tables().find(n);
  if (it != degree_tables().end()) {
    res.rows = it->second;
    return res;
  }
  res.status = classification_status(n);
  return res;
}

StatusRecord classification_status(unsigned n) {
  for (const auto& r : status_records())
    if (r.degree == n) return r;
  throw DomainError("classification status is recorded for 2 <= n <= 11");
}

std::vector<CompositeCase> composite_cases(unsigned n) {
  if (n < 4) throw DomainError("composite-case analysis needs n >= 4");
  if (is_prime(Int(n)))
    throw DomainError("n is prime; use the prime-degree socle enumeration");
  std::vector<CompositeCase> out;
  out.push_back({1, "reducible or not quasi-primitive", {}, {}, {}});
  out.push_back({2, "subgroup of a Kronecker product of two smaller-degree representations",
                 {}, {}, {}});
  // Case 3: n = p^s, normal abelian C_p^(2s) with quotient inside Sp(2s,p).
  for (Int p = 2; p * p <= n; ++p) {
    if (!is_prime(p)) continue;
    Int v = p * p;
    unsigned s = 2;
    while (v < n) {
      v *= p;
      ++s;
    }
    if (v == n) {
      CompositeCase c{3,
                      "normal abelian C_p^(2s) socle, quotient inside Sp(2s,p), degree p^s",
                      p, Int(s), {}};
      out.push_back(std::move(c));
    }
  }
  // Case 4: n = s^m, m conjugate simple factors acting as an m-fold
  // Kronecker power of a degree-s representation.
  for (unsigned m = 1; (1u << m) <= n; ++m) {
    Int root;
    if (mpz_root(root.get_mpz_t(), Int(n).get_mpz_t(), m) != 0 && root >= 2)
      out.push_back({4, "product of m conjugate simple normal factors, degree s^m",
                     {}, root, Int(m)});
  }
  return out;
}

StructureStatement quasiprimitive_structures(unsigned n) {
  StructureStatement st;
  st.degree = n;
  switch (n) {
    case 4:
      st.clauses = {
          {"(i)", "quasisimple-list",
           {"A5", "A6", "A7", "PSL(2,7)", "PSU(4,2)"},
           "quasisimple central quotients"},
          {"(ii)", "extension-list", {"S5", "S6"}, ""},
          {"(iii)", "product",
           {"S4", "A4", "A5"},
           "A x B for any combination, with index-2 extensions when A = B and an index-4 "
           "extension over A4 x A4"},
          {"(iv)", "abelian-normal",
           {"C5", "D5", "Sz(2)", "A5", "S5", "A6", "S6"},
           "normal abelian subgroup C2^4 with the listed quotients"},
      };
      return st;
    case 6:
      st.clauses = {
          {"(i)", "product",
           {"A5", "A4", "S4", "PSL(2,7)", "A6", "H1", "H2", "H3"},
           "A x B with A in {A5, A4, S4} and B in {PSL(2,7), A5, A6, H1, H2, H3}; H3 is the "
           "Hessian group, H2 and H1 of index 3 and 6 in it"},
          {"(ii)", "extension-list",
           {"S4xH1", "S4xH2", "A4xH3"},
           "index-2 subgroups of S4 x H_i (i = 1, 2); index-3, -12 or -24 subgroups of A4 x H3"},
          {"(iii)", "quasisimple-list",
           {"A5", "A6", "A7", "PSL(2,7)", "PSL(2,11)", "PSL(2,13)", "PSU(4,2)", "PSU(3,3)",
            "PSU(4,3)", "PSL(3,4)", "J2"},
           ""},
          {"(iv)", "extension-list",
           {"S5", "S7", "A6.2", "PSL(3,4).2", "PSU(3,3).2", "PSU(4,2).2"},
           "split degree-2 extensions for the last four"},
      };
      return st;
    case 8:
      st.clauses = {
          {"(i)", "quasisimple-list",
           {"A6", "A8", "A9", "PSL(2,7)", "PSL(2,17)", "PSL(2,8)", "PSp(6,2)", "POmega+(8,2)"},
           "POmega+(8,2) is the derived Weyl group of type E8 modulo center"},
          {"(ii)", "extension-list",
           {"S8", "S9", "PGL(2,7)", "A6.2", "POmega+(8,2).2", "PSL(2,8).3"},
           ""},
          {"(iii)", "product", {"deg2 x deg4"},
           "A x B with quasi-primitive projective representations of degrees 2 and 4; see the "
           "Kronecker-product operation"},
          {"(iv)", "abelian-normal", {"Sp(6,2)"},
           "nontrivial maximal normal 2-subgroup with quotient inside Sp(6,2)"},
          {"(v)", "extension-list", {"A5^3.C3", "A5^3.S3"}, "extensions of A5 x A5 x A5"},
      };
      return st;
    case 9:
      st.clauses = {
          {"(1)", "order-shape", {},
           "|G| = 2^a 3^b 5^c for some a, b, c >= 0; no further description is known"},
          {"(2)", "quasisimple-list", {"A10", "PSL(2,7)", "PSL(2,19)"}, "as printed"},
          {"(3)", "extension-list",
           {"S10", "PSL(2,7) x (deg3)", "PSL(2,7)^2.2"},
           "PSL(2,7) times a quasi-primitive group of degree 3, and a degree-2 extension of "
           "PSL(2,7) x PSL(2,7)"},
      };
      return st;
    case 10:
      st.unclassified = classification_status(10);
      return st;
    default:
      throw DomainError("structure statements cover n in {4,6,8,9(,10)}");
  }
}

}  // namespace pglcat
