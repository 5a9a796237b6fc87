#include "pglcat/lowdeg.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>

#include "pglcat/embedded_data.hpp"
#include "pglcat/errors.hpp"

namespace pglcat {

namespace {

constexpr const char* kClause5cNote =
    "clause reconstructed from garbled source text as q=5, n an odd prime, r=(5^n-1)/4, d=2r";

struct Accumulator {
  std::map<std::tuple<SimpleGroupId, Int, Int>, RepDegreeRecord> records;

  void add(const SimpleGroupId& raw, const Int& r, const Int& d, std::optional<unsigned> count,
           const std::string& clause, const std::string& provenance, std::string note = "") {
    SimpleGroupId id = canonical(raw);
    auto key = std::make_tuple(id, r, d);
    auto it = records.find(key);
    if (it == records.end()) {
      RepDegreeRecord rec{id, r, d, count, {clause}, provenance, {}};
      if (!note.empty()) rec.notes.push_back(std::move(note));
      records.emplace(std::move(key), std::move(rec));
      return;
    }
    RepDegreeRecord& rec = it->second;
    if (std::find(rec.clauses.begin(), rec.clauses.end(), clause) == rec.clauses.end())
      rec.clauses.push_back(clause);
    if (count) {
      if (!rec.count)
        rec.count = count;
      else if (*rec.count != *count)
        rec.notes.push_back("conflicting representation counts across clauses");
    }
    if (!note.empty() && std::find(rec.notes.begin(), rec.notes.end(), note) == rec.notes.end())
      rec.notes.push_back(std::move(note));
  }

  std::vector<RepDegreeRecord> sorted() const {
    std::vector<RepDegreeRecord> out;
    for (const auto& [k, rec] : records) out.push_back(rec);
    std::sort(out.begin(), out.end(), [](const RepDegreeRecord& a, const RepDegreeRecord& b) {
      if (a.d != b.d) return a.d < b.d;
      if (a.r != b.r) return a.r < b.r;
      return render_code(a.group) < render_code(b.group);
    });
    return out;
  }
};

struct ExceptionRow {
  std::string clause;
  SimpleGroupId group;
  Int r, d;
  std::optional<unsigned> count;
};

const std::vector<ExceptionRow>& exception_rows() {
  static const std::vector<ExceptionRow> rows = [] {
    std::vector<ExceptionRow> out;
    std::istringstream in(embedded::lowdeg_tz_exceptions_csv);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::stringstream ss(line);
      std::string clause, code, r, d, count;
      std::getline(ss, clause, ',');
      std::getline(ss, code, ',');
      std::getline(ss, r, ',');
      std::getline(ss, d, ',');
      std::getline(ss, count, ',');
      ExceptionRow row{clause, canonical(parse_code(code)), Int(r), Int(d), std::nullopt};
      if (!count.empty()) row.count = static_cast<unsigned>(std::stoul(count));
      out.push_back(std::move(row));
    }
    return out;
  }();
  return rows;
}

bool is_prime_power_int(const Int& q) { return q >= 2 && prime_power(q).has_value(); }

// q a prime >= lo, or q = base^n with n an odd prime.
bool prime_or_odd_prime_power_of(const Int& q, long lo, unsigned long base) {
  if (q >= lo && is_prime(q)) return true;
  auto pp = prime_power(q);
  return pp && pp->first == base && pp->second >= 3 && is_prime(Int(pp->second));
}

void family_records_psl2(const Int& q, Accumulator& acc) {
  if (q == 5 || q == 7 || q == 9) return;  // excluded; covered by exceptions
  auto pp = prime_power(q);
  // 2(a): q = 2^a, a >= 3; r a Fermat or Mersenne prime next to q.
  if (pp->first == 2 && pp->second >= 3) {
    if (is_prime(Int(q + 1)))
      for (long off : {0, -1, -2}) acc.add(SimpleGroupId::psl(2, q), q + 1, q + 1 + off,
                                           std::nullopt, "2(a)", "derived");
    if (is_prime(Int(q - 1)))
      for (long off : {0, 1, 2}) acc.add(SimpleGroupId::psl(2, q), q - 1, q - 1 + off,
                                         std::nullopt, "2(a)", "derived");
  }
  // 2(b): q = r >= 11 prime.
  if (q >= 11 && is_prime(q)) {
    for (const Int& d : std::vector<Int>{Int(q), Int((q - 1) / 2), Int((q + 1) / 2), Int(q - 1), Int(q + 1)})
      acc.add(SimpleGroupId::psl(2, q), q, d, std::nullopt, "2(b)", "derived");
  }
  // 2(c): r = (q-1)/2; q >= 11 prime or q = 3^(odd prime).
  if (q % 2 == 1 && prime_or_odd_prime_power_of(q, 11, 3)) {
    Int r = (q - 1) / 2;
    if (is_prime(r))
      for (const Int& d : std::vector<Int>{r, Int(r + 1), Int(2 * r)})
        acc.add(SimpleGroupId::psl(2, q), r, d, std::nullopt, "2(c)", "derived");
  }
  // 2(d): r = (q-1)/4; q >= 13 prime or q = 5^(odd prime).
  if ((q - 1) % 4 == 0 && prime_or_odd_prime_power_of(q, 13, 5)) {
    Int r = (q - 1) / 4;
    if (is_prime(r))
      acc.add(SimpleGroupId::psl(2, q), r, 2 * r, std::nullopt, "2(d)", "derived");
  }
  // 2(e): r = (q+1)/2, q >= 13.
  if (q >= 13 && q % 2 == 1) {
    Int r = (q + 1) / 2;
    if (is_prime(r))
      for (const Int& d : std::vector<Int>{Int(r - 1), r, Int(2 * r - 2), Int(2 * r - 1), Int(2 * r)})
        acc.add(SimpleGroupId::psl(2, q), r, d, std::nullopt, "2(e)", "derived");
  }
  // 2(f): r = (q+1)/4; q >= 11 prime or q = 3^(odd prime).
  if ((q + 1) % 4 == 0 && prime_or_odd_prime_power_of(q, 11, 3)) {
    Int r = (q + 1) / 4;
    if (is_prime(r))
      for (const Int& d : std::vector<Int>{Int(2 * r - 1), Int(2 * r)})
        acc.add(SimpleGroupId::psl(2, q), r, d, std::nullopt, "2(f)", "derived");
  }
}

void family_records(const SimpleGroupId& id, Accumulator& acc) {
  switch (id.family) {
    case Family::Alt: {
      // Clause 1: d = n-1 for n >= 9, with max{9,r} <= n <= 2r+1.
      unsigned n = id.n;
      if (n < 9) return;
      for (unsigned long r = 2; r <= n; ++r) {
        if (!is_prime(Int(r))) continue;
        if (2 * r + 1 < n) continue;
        acc.add(id, Int(r), Int(n - 1), std::nullopt, "1", "derived");
      }
      return;
    }
    case Family::PSL: {
      if (id.n == 2) {
        family_records_psl2(id.q, acc);
        return;
      }
      const Int& q = id.q;
      unsigned n = id.n;
      // 3(a)
      if (q == 2 && n >= 5) {
        Int r1 = (Int(1) << (n - 1)) - 1, r2 = (Int(1) << n) - 1;
        if (is_prime(r1)) acc.add(id, r1, Int(2 * n - 2), 1u, "3(a)", "derived");
        if (is_prime(r2)) acc.add(id, r2, Int(2 * n - 2), 1u, "3(a)", "derived");
      }
      // 3(b)
      if (q >= 3 && is_prime(Int(n)) && n % 2 == 1) {
        Int qn;
        mpz_pow_ui(qn.get_mpz_t(), q.get_mpz_t(), n);
        Int r = (qn - 1) / (q - 1);
        if (is_prime(r)) {
          acc.add(id, r, r - 1, 1u, "3(b)", "derived");
          unsigned reps = static_cast<unsigned>(Int(q - 2).get_ui());
          acc.add(id, r, r, reps, "3(b)", "derived");
        }
      }
      return;
    }
    case Family::PSU: {
      const Int& q = id.q;
      unsigned n = id.n;
      // 4(a)
      if (q == 2 && n >= 6 && is_prime(Int(n - 1)) && (n - 1) % 2 == 1) {
        Int r = ((Int(1) << (n - 1)) + 1) / 3;
        if (is_prime(r)) {
          acc.add(id, r, 2 * r - 1, 2u, "4(a)", "derived");
          acc.add(id, r, 2 * r, 1u, "4(a)", "derived");
        }
      }
      // 4(b)
      if (is_prime(Int(n)) && n % 2 == 1) {
        Int qn;
        mpz_pow_ui(qn.get_mpz_t(), q.get_mpz_t(), n);
        Int r = (qn + 1) / (q + 1);
        if (is_prime(r)) {
          acc.add(id, r, r - 1, 1u, "4(b)", "derived");
          unsigned reps = static_cast<unsigned>(q.get_ui());
          acc.add(id, r, r, reps, "4(b)", "derived");
        }
      }
      return;
    }
    case Family::PSp: {
      const Int& q = id.q;
      unsigned n = id.n / 2;
      bool n_odd_prime = n % 2 == 1 && is_prime(Int(n));
      if (q == 3 && n_odd_prime) {
        Int t;
        mpz_ui_pow_ui(t.get_mpz_t(), 3, n);
        Int r = (t - 1) / 2;
        if (is_prime(r)) {
          acc.add(id, r, r, 2u, "5(a)", "derived");
          acc.add(id, r, r + 1, 2u, "5(a)", "derived");
        }
        if ((t + 1) % 4 == 0) {
          Int r2 = (t + 1) / 4;
          if (is_prime(r2)) {
            acc.add(id, r2, 2 * r2 - 2, 2u, "5(b)", "derived");
            acc.add(id, r2, 2 * r2, 2u, "5(b)", "derived");
          }
        }
      }
      if (q == 5 && n_odd_prime) {
        Int t;
        mpz_ui_pow_ui(t.get_mpz_t(), 5, n);
        Int r = (t - 1) / 4;
        if (is_prime(r)) acc.add(id, r, 2 * r, 2u, "5(c)", "derived", kClause5cNote);
      }
      // 5(d): n = 2^m, q odd, r = (q^n+1)/2.
      if ((n & (n - 1)) == 0 && q % 2 == 1) {
        Int qn;
        mpz_pow_ui(qn.get_mpz_t(), q.get_mpz_t(), n);
        Int r = (qn + 1) / 2;
        if (is_prime(r)) {
          acc.add(id, r, r - 1, 2u, "5(d)", "derived");
          acc.add(id, r, r, 2u, "5(d)", "derived");
        }
      }
      return;
    }
    default:
      return;  // other families appear only through the embedded exceptions
  }
}

void exception_records_for(const SimpleGroupId& id, Accumulator& acc) {
  for (const auto& row : exception_rows())
    if (row.group == id) acc.add(id, row.r, row.d, row.count, row.clause, "embedded");
}

}  // namespace

std::vector<RepDegreeRecord> tz_triples_for_group(const SimpleGroupId& group) {
  SimpleGroupId id = canonical(group);
  if (!is_simple(id)) throw DomainError("low-degree query requires a simple group");
  Accumulator acc;
  family_records(id, acc);
  exception_records_for(id, acc);
  return acc.sorted();
}

namespace {

// Exact inversion per clause; every candidate is re-validated through the
// forward conditions before it is emitted.
void invert_family_clauses(const Int& d, Accumulator& acc) {
  // Clause 1: n = d+1 >= 9.
  if (d + 1 >= 9 && d + 1 <= 1000000) {
    unsigned n = static_cast<unsigned>(Int(d + 1).get_ui());
    for (unsigned long r = (n - 1) / 2 + ((n - 1) % 2 ? 1 : 0); r <= n; ++r) {
      if (!is_prime(Int(r))) continue;
      if (2 * r + 1 < n) continue;
      acc.add(SimpleGroupId::alt(n), Int(r), d, std::nullopt, "1", "derived");
    }
  }

  auto try_psl2 = [&](const Int& q) {
    if (q < 4 || !is_prime_power_int(q)) return;
    Accumulator local;
    family_records_psl2(q, local);
    for (const auto& [k, rec] : local.records)
      if (rec.d == d)
        acc.add(rec.group, rec.r, rec.d, rec.count, rec.clauses.front(), rec.provenance);
  };
  // 2(a): q = 2^a with r = q+1 or q-1; candidate r from each d-offset.
  for (long off : {0, 1, 2}) {
    try_psl2(d + off - 1);  // r = d+off, q = r-1
    try_psl2(d - off + 1);  // r = d-off, q = r+1
  }
  // 2(b): q = r from d in {r, (r-1)/2, (r+1)/2, r-1, r+1}.
  for (const Int& q : std::vector<Int>{d, Int(2 * d + 1), Int(2 * d - 1), Int(d + 1), Int(d - 1)}) try_psl2(q);
  // 2(c): q = 2r+1, r in {d, d-1, d/2}.
  for (const Int& r : std::vector<Int>{d, Int(d - 1), Int(d / 2)}) try_psl2(2 * r + 1);
  // 2(d): q = 4r+1, r = d/2.
  try_psl2(4 * (d / 2) + 1);
  // 2(e): q = 2r-1, r in {d+1, d, (d+2)/2, (d+1)/2, d/2}.
  for (const Int& r : std::vector<Int>{Int(d + 1), d, Int((d + 2) / 2), Int((d + 1) / 2), Int(d / 2)}) try_psl2(2 * r - 1);
  // 2(f): q = 4r-1, r in {(d+1)/2, d/2}.
  for (const Int& r : std::vector<Int>{Int((d + 1) / 2), Int(d / 2)}) try_psl2(4 * r - 1);

  auto emit_matching = [&](const SimpleGroupId& id) {
    Accumulator local;
    family_records(id, local);
    for (const auto& [k, rec] : local.records)
      if (rec.d == d)
        acc.add(rec.group, rec.r, rec.d, rec.count, rec.clauses.front(), rec.provenance,
                rec.notes.empty() ? "" : rec.notes.front());
  };

  // 3(a): d = 2n-2.
  if (d % 2 == 0 && d >= 8) {
    unsigned n = static_cast<unsigned>(Int(d / 2 + 1).get_ui());
    if (n >= 5) emit_matching(SimpleGroupId::psl(n, 2));
  }
  // 3(b): r in {d, d+1}; solve (q^n-1)/(q-1) = r.
  for (const Int& r : std::vector<Int>{d, Int(d + 1)}) {
    if (r < 7 || !is_prime(r)) continue;
    for (unsigned n = 3;; n += 2) {
      if ((Int(1) << n) - 1 > r) break;
      if (!is_prime(Int(n))) continue;
      for (Int q = 3;; ++q) {
        Int qn;
        mpz_pow_ui(qn.get_mpz_t(), q.get_mpz_t(), n);
        Int val = (qn - 1) / (q - 1);
        if (val > r) break;
        if (val == r && is_prime_power_int(q)) emit_matching(SimpleGroupId::psl(n, q));
      }
    }
  }
  // 4(a): r in {(d+1)/2, d/2}; 2^(n-1) = 3r-1.
  for (const Int& r : std::vector<Int>{Int((d + 1) / 2), Int(d / 2)}) {
    if (r < 2) continue;
    Int t = 3 * r - 1;
    auto pp = prime_power(t);
    if (pp && pp->first == 2) {
      unsigned n = pp->second + 1;
      if (n >= 6) emit_matching(SimpleGroupId::psu(n, 2));
    }
  }
  // 4(b): r in {d, d+1}; solve (q^n+1)/(q+1) = r.
  for (const Int& r : std::vector<Int>{d, Int(d + 1)}) {
    if (r < 3 || !is_prime(r)) continue;
    for (unsigned n = 3;; n += 2) {
      if (((Int(1) << n) + 1) / 3 > r) break;
      if (!is_prime(Int(n))) continue;
      for (Int q = 2;; ++q) {
        Int qn;
        mpz_pow_ui(qn.get_mpz_t(), q.get_mpz_t(), n);
        Int val = (qn + 1) / (q + 1);
        if (val > r) break;
        if (val == r && is_prime_power_int(q)) {
          try {
            emit_matching(SimpleGroupId::psu(n, q));
          } catch (const DomainError&) {
          }
        }
      }
    }
  }
  // 5(a): 3^n = 2r+1, r in {d, d-1}.
  // 5(b): 3^n = 4r-1, r in {(d+2)/2, d/2}.
  // 5(c): 5^n = 4r+1, r = d/2.
  // 5(d): q^n = 2r-1, n = 2^m, r in {d+1, d}.
  auto psp_from = [&](unsigned long base, const Int& target) {
    auto pp = prime_power(target);
    if (pp && pp->first == base && pp->second >= 3 && is_prime(Int(pp->second)))
      emit_matching(SimpleGroupId::psp(2 * pp->second, base));
  };
  for (const Int& r : std::vector<Int>{d, Int(d - 1)})
    if (r >= 2) psp_from(3, 2 * r + 1);
  for (const Int& r : std::vector<Int>{Int((d + 2) / 2), Int(d / 2)})
    if (r >= 2) psp_from(3, 4 * r - 1);
  if (d / 2 >= 2) psp_from(5, 4 * (d / 2) + 1);
  for (const Int& r : std::vector<Int>{Int(d + 1), d}) {
    if (r < 3) continue;
    Int target = 2 * r - 1;
    for (unsigned n = 2; Int(1) << n <= target + 1; n *= 2) {
      Int root;
      if (mpz_root(root.get_mpz_t(), target.get_mpz_t(), n) == 0) continue;
      if (root % 2 == 1 && is_prime_power_int(root)) {
        try {
          emit_matching(SimpleGroupId::psp(2 * n, root));
        } catch (const DomainError&) {
        }
      }
    }
  }
}

}  // namespace

std::vector<RepDegreeRecord> tz_groups_for_degree(
    const Int& d, const std::vector<ExternalDegreeRecord>* external) {
  if (d < 2) throw DomainError("degree must be >= 2");
  Accumulator acc;
  invert_family_clauses(d, acc);
  for (const auto& row : exception_rows())
    if (row.d == d) acc.add(row.group, row.r, row.d, row.count, row.clause, "embedded");
  if (external) {
    for (const auto& row : *external) {
      if (row.degree != d || row.characteristic != 0) continue;
      acc.add(row.group, Int(0), row.degree, row.count, "external:" + row.source, "external",
              "cover " + std::to_string(row.cover));
    }
  }
  return acc.sorted();
}

Int min_degree_psl(unsigned n, const Int& q) {
  if (n < 3) throw DomainError("the minimal-degree formula applies for n >= 3");
  SimpleGroupId id = SimpleGroupId::psl(n, q);  // validates simplicity
  (void)id;
  if (n == 3 && q == 2) return 2;
  if (n == 3 && q == 4) return 4;
  if (n == 4 && q == 2) return 7;
  if (n == 4 && q == 3) return 26;
  Int qn;
  mpz_pow_ui(qn.get_mpz_t(), q.get_mpz_t(), n);
  return (qn - 1) / (q - 1) - n;
}

std::vector<ExternalDegreeRecord> load_degree_csv(std::istream& in) {
  std::vector<ExternalDegreeRecord> out;
  std::string line;
  unsigned lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::stringstream ss(line);
    std::vector<std::string> cols;
    std::string col;
    while (std::getline(ss, col, ',')) cols.push_back(col);
    if (!header_seen) {
      if (cols.size() != 6 || cols[0] != "group_code" || cols[1] != "cover" ||
          cols[2] != "degree" || cols[3] != "count" || cols[4] != "characteristic" ||
          cols[5] != "source")
        throw DataError("line " + std::to_string(lineno) +
                        ": expected header group_code,cover,degree,count,characteristic,source");
      header_seen = true;
      continue;
    }
    if (cols.size() < 6) cols.resize(6);
    ExternalDegreeRecord rec;
    try {
      rec.group = canonical(parse_code(cols[0]));
    } catch (const DomainError& e) {
      throw DataError("line " + std::to_string(lineno) + ": unknown group code '" + cols[0] +
                      "' (" + e.what() + ")");
    }
    try {
      rec.cover = static_cast<unsigned>(std::stoul(cols[1]));
      rec.degree = Int(cols[2]);
      if (!cols[3].empty()) rec.count = static_cast<unsigned>(std::stoul(cols[3]));
      rec.characteristic = static_cast<unsigned>(std::stoul(cols[4]));
    } catch (const std::exception&) {
      throw DataError("line " + std::to_string(lineno) + ": malformed numeric field");
    }
    if (rec.cover < 1)
      throw DataError("line " + std::to_string(lineno) + ": cover must be >= 1");
    if (rec.degree < 1)
      throw DataError("line " + std::to_string(lineno) + ": degree must be >= 1");
    rec.source = cols[5];
    out.push_back(std::move(rec));
  }
  if (!header_seen) throw DataError("empty degree table: missing header");
  return out;
}

}  // namespace pglcat
