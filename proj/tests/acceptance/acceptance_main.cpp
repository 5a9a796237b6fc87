// Acceptance suite: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion. Exit code 0 iff everything passed.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "pglcat/bounds.hpp"
#include "pglcat/catalog.hpp"
#include "pglcat/chartab.hpp"
#include "pglcat/cyclo.hpp"
#include "pglcat/errors.hpp"
#include "pglcat/extraspecial.hpp"
#include "pglcat/factored.hpp"
#include "pglcat/lowdeg.hpp"
#include "pglcat/order_search.hpp"
#include "pglcat/socle.hpp"
#include "pglcat/tables.hpp"

using namespace pglcat;

namespace {

struct Harness {
  int failures = 0;
  void run(int number, const std::string& label, double budget_seconds,
           const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > budget_seconds) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + std::string("time budget exceeded");
    }
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << label << " ["
         << std::fixed;
    line.precision(2);
    line << secs << "s]";
    if (!ok && !detail.empty()) line << " -- " << detail;
    std::cout << line.str() << std::endl;
    if (!ok) ++failures;
  }
};

std::set<std::string> candidate_codes(const std::vector<SocleCandidate>& v) {
  std::set<std::string> out;
  for (const auto& c : v) out.insert(render_code(c.group));
  return out;
}

std::set<std::string> id_codes(const std::vector<SimpleGroupId>& v) {
  std::set<std::string> out;
  for (const auto& id : v) out.insert(render_code(id));
  return out;
}

// Criterion 3 oracle: a brute-force scan over the full (n, q) grid with the
// clause equations restated directly, written independently of the
// production solver.
void brute_socles_23(std::set<std::string>& primitive, std::set<std::string>& imprimitive) {
  const long p = 23;
  auto is_pp = [](long q) { return q >= 2 && prime_power(Int(q)).has_value(); };
  auto prime = [](long x) { return x >= 2 && is_prime(Int(x)); };
  auto put = [&](std::set<std::string>& dst, SimpleGroupId id) {
    dst.insert(render_code(canonical(id)));
  };

  if (p >= 7) put(primitive, SimpleGroupId::alt(p + 1));
  for (long q = 2; q <= 2 * p + 1; ++q) {
    if (!is_pp(q)) continue;
    if (q == p && p >= 11) put(primitive, SimpleGroupId::psl(2, q));
    if ((q - 1) == 2 * p) {
      bool shape = prime(q);
      auto pp = prime_power(Int(q));
      if (!shape && pp->first == 3 && prime(pp->second) && pp->second % 2 == 1) shape = true;
      if (shape) put(primitive, SimpleGroupId::psl(2, q));
    }
    if ((q + 1) == 2 * p && q >= 5) {
      auto pp = prime_power(Int(q));
      if (pp && pp->first != 2) {
        unsigned e = pp->second;
        while (e % 2 == 0) e /= 2;
        if (e == 1) put(primitive, SimpleGroupId::psl(2, q));
      }
    }
    {
      auto pp = prime_power(Int(q));
      if (pp && pp->first == 2 && prime(pp->second) && pp->second % 2 == 1 && q - 1 == p)
        put(primitive, SimpleGroupId::psl(2, q));
    }
  }
  // symplectic and unitary grids
  for (long q = 2; q <= 2 * p + 1; ++q) {
    if (!is_pp(q)) continue;
    for (unsigned n = 2; n <= 40; ++n) {
      Int qn;
      mpz_pow_ui(qn.get_mpz_t(), Int(q).get_mpz_t(), n);
      if ((n & (n - 1)) == 0 && n >= 2 && q % 2 == 1) {
        auto pp = prime_power(Int(q));
        unsigned e = pp->second;
        while (e % 2 == 0) e /= 2;
        if (e == 1 && pp->first != 2 && (qn + 1) % 2 == 0 && (qn + 1) / 2 == p)
          put(primitive, SimpleGroupId::psp(2 * n, q, true));
      }
      if (q == 3 && prime(n) && n % 2 == 1 && (qn - 1) / 2 == p)
        put(primitive, SimpleGroupId::psp(2 * n, 3, true));
      if (prime(n) && n % 2 == 1 && (qn + 1) % (q + 1) == 0 && (qn + 1) / (q + 1) == p) {
        SimpleGroupId u = SimpleGroupId::psu(n, q, true);
        if (is_simple(u)) put(primitive, u);
      }
      // imprimitive clause
      if ((qn - 1) / (q - 1) == p) {
        bool parity = n == 2 ? q % 2 == 0 : (q % 2 == 1 || (n == 3 && q == 2));
        SimpleGroupId l = SimpleGroupId::psl(n, q, true);
        if (parity && is_simple(l)) put(imprimitive, l);
      }
    }
  }
  for (const char* s : {"M24", "CO2", "CO3"}) put(primitive, SimpleGroupId::sporadic_group(s));
}

}  // namespace

int main() {
  Harness h;

  h.run(1, "order oracle reproduces every printed table order", 1.0, [](std::string& detail) {
    const std::vector<std::pair<const char*, long>> anchors = {
        {"CA-1-7", 168},   {"CA-1-11", 660},  {"CA-1-13", 1092},   {"ALT-7", 2520},
        {"T2A-2-3", 6048}, {"CA-2-4", 20160}, {"T2A-3-2", 25920},  {"CC-3-2", 1451520},
        {"SPOR-J2", 604800}};
    for (const auto& [code, value] : anchors) {
      if (order(parse_code(code)).value() != value) {
        detail = std::string("anchor mismatch at ") + code;
        return false;
      }
    }
    if (order(parse_code("T2A-3-2")).str() != "2^6*3^4*5" ||
        order(parse_code("CC-3-2")).str() != "2^9*3^4*5*7" ||
        order(parse_code("SPOR-J2")).str() != "2^7*3^3*5^2*7") {
      detail = "factored-form mismatch";
      return false;
    }
    int checked = 0;
    for (unsigned n = 2; n <= 7; ++n) {
      auto res = primitive_groups(n);
      if (!res.rows) return false;
      for (const auto& row : *res.rows) {
        if (!row.simple_id) continue;
        if (order(*row.simple_id).value() != *row.order_value) {
          detail = "table order mismatch for " + row.name;
          return false;
        }
        ++checked;
      }
    }
    detail = "checked " + std::to_string(checked) + " simple table rows";
    return checked >= 25;
  });

  h.run(2, "socle enumeration matches the small-prime oracle (p = 5, 7, 11)", 3.0,
        [](std::string& detail) {
          auto e5 = nonabelian_socles(5);
          if (candidate_codes(e5.primitive) !=
                  std::set<std::string>{"ALT-6", "CA-1-11", "T2A-3-2"} ||
              candidate_codes(e5.imprimitive) != std::set<std::string>{"ALT-5"}) {
            detail = "p=5 mismatch";
            return false;
          }
          auto e7 = nonabelian_socles(7);
          if (candidate_codes(e7.primitive) !=
                  std::set<std::string>{"ALT-8", "CA-1-13", "CC-3-2", "CA-1-8", "T2A-2-3"} ||
              candidate_codes(e7.imprimitive) != std::set<std::string>{"CA-1-7"}) {
            detail = "p=7 mismatch";
            return false;
          }
          auto e11 = nonabelian_socles(11);
          if (candidate_codes(e11.primitive) !=
                  std::set<std::string>{"ALT-12", "SPOR-M12", "CA-1-11", "CA-1-23", "T2A-4-2"} ||
              !e11.imprimitive.empty()) {
            detail = "p=11 mismatch";
            return false;
          }
          SocleOptions strict;
          strict.strict_s2 = true;
          auto s5 = nonabelian_socles(5, strict);
          if (candidate_codes(s5.primitive) != std::set<std::string>{"ALT-6", "CA-1-11"}) {
            detail = "strict-s2 flag failed to drop PSU(4,2)";
            return false;
          }
          return true;
        });

  h.run(3, "p = 23 socles equal an independent brute-force grid scan", 5.0,
        [](std::string& detail) {
          std::set<std::string> brute_prim, brute_impr;
          brute_socles_23(brute_prim, brute_impr);
          auto e = nonabelian_socles(23);
          if (candidate_codes(e.primitive) != brute_prim) {
            detail = "primitive sets differ";
            return false;
          }
          if (candidate_codes(e.imprimitive) != brute_impr) {
            detail = "imprimitive sets differ";
            return false;
          }
          std::set<std::string> expected{"ALT-24", "CA-1-23", "CA-1-47",
                                         "SPOR-M24", "SPOR-CO2", "SPOR-CO3"};
          if (brute_prim != expected || !brute_impr.empty()) {
            detail = "brute scan disagrees with the frozen expectation";
            return false;
          }
          return true;
        });

  h.run(4, "low-degree duality for |L| <= 1e7 and d <= 50", 60.0, [](std::string& detail) {
    auto a5 = tz_triples_for_group(SimpleGroupId::alt(5));
    std::set<std::pair<long, long>> a5_pairs;
    for (const auto& r : a5) a5_pairs.insert({r.r.get_si(), r.d.get_si()});
    std::set<std::pair<long, long>> a5_expected{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3},
                                                {3, 4}, {3, 5}, {3, 6}, {5, 2}, {5, 3},
                                                {5, 4}, {5, 5}, {5, 6}};
    if (a5_pairs != a5_expected) {
      detail = "A5 pairs are not the thirteen verbatim ones";
      return false;
    }
    auto suz = tz_triples_for_group(SimpleGroupId::sporadic_group("Suz"));
    if (suz.size() != 3) {
      detail = "Suz record count";
      return false;
    }
    for (const auto& r : suz)
      if (r.d != 12 || !r.count || *r.count != 2) {
        detail = "Suz records differ";
        return false;
      }

    auto groups = enumerate_up_to(10000000);
    std::vector<std::vector<RepDegreeRecord>> by_degree(51);
    for (long d = 2; d <= 50; ++d) by_degree[d] = tz_groups_for_degree(d);
    long checked = 0;
    for (const auto& L : groups) {
      auto triples = tz_triples_for_group(L);
      for (const auto& rec : triples) {
        if (rec.d > 50) continue;
        bool found = false;
        for (const auto& other : by_degree[rec.d.get_si()])
          if (other.group == L && other.r == rec.r) found = true;
        if (!found) {
          detail = "forward direction fails at " + display_name(L);
          return false;
        }
        ++checked;
      }
    }
    for (long d = 2; d <= 50; ++d) {
      for (const auto& rec : by_degree[d]) {
        if (order_value(rec.group) > 10000000) continue;
        bool found = false;
        for (const auto& other : tz_triples_for_group(rec.group))
          if (other.r == rec.r && other.d == rec.d) found = true;
        if (!found) {
          detail = "reverse direction fails at degree " + std::to_string(d);
          return false;
        }
        ++checked;
      }
    }
    detail = "checked " + std::to_string(checked) + " memberships";
    return checked > 300;
  });

  h.run(5, "minimal projective degree of PSL(n,q)", 1.0, [](std::string& detail) {
    if (min_degree_psl(3, 2) != 2 || min_degree_psl(3, 4) != 4 || min_degree_psl(4, 2) != 7 ||
        min_degree_psl(4, 3) != 26) {
      detail = "embedded exception mismatch";
      return false;
    }
    if (min_degree_psl(3, 3) != 10 || min_degree_psl(5, 2) != 26 ||
        min_degree_psl(3, 5) != 28 || min_degree_psl(4, 4) != 81) {
      detail = "closed form mismatch";
      return false;
    }
    return true;
  });

  h.run(6, "extraspecial normalizer: closures, Heisenberg relation, polygons", 310.0,
        [](std::string& detail) {
          for (unsigned p : {3u, 5u, 7u}) {
            auto socle = projective_closure({make_sigma(p), make_tau(p)}, 1000);
            if (!socle.complete || socle.classes.size() != p * p) {
              detail = "socle closure at p=" + std::to_string(p);
              return false;
            }
          }
          auto g3 = normalizer_group_orders(3);
          if (g3.unimodular_order != 648) {
            detail = "p=3 unimodular order " + g3.unimodular_order.get_str();
            return false;
          }
          auto g5 = normalizer_group_orders(5);
          if (g5.unimodular_order != 15000) {
            detail = "p=5 unimodular order " + g5.unimodular_order.get_str();
            return false;
          }
          for (unsigned p : {3u, 5u, 7u, 11u, 13u}) {
            CycloMatrix sigma = make_sigma(p), tau = make_tau(p);
            if (!(tau * sigma == sigma.scaled(CycloNumber::zeta(p)) * tau)) {
              detail = "Heisenberg relation at p=" + std::to_string(p);
              return false;
            }
          }
          for (unsigned p : {3u, 5u}) {
            if (polygons(p).polygons.size() != p + 1 || search_polygons(p).size() != p + 1) {
              detail = "polygon count at p=" + std::to_string(p);
              return false;
            }
          }
          return true;
        });

  h.run(7, "character toolkit mechanizes the imprimitivity corrections", 1.0,
        [](std::string& detail) {
          const CharacterTable& a5 = embedded_table("A5");
          ClassFunction chi = induce(embedded_table("A4").irreducible(1), embedded_fusion("A4<A5"));
          if (chi[0].rational_value() != 5 ||
              inner_product(a5, chi, a5.trivial_character()) != Rat(0) ||
              inner_product(a5, chi, chi) != Rat(1)) {
            detail = "A4 -> A5 induction";
            return false;
          }
          const CharacterTable& psl = embedded_table("PSL(2,7)");
          ClassFunction chi7 =
              induce(embedded_table("S4").irreducible(1), embedded_fusion("S4<PSL(2,7)"));
          if (chi7[0].rational_value() != 7 || !is_irreducible(psl, chi7)) {
            detail = "S4 -> PSL(2,7) induction";
            return false;
          }
          for (const char* which : {"A4<A5", "S4<PSL(2,7)"}) {
            const Fusion& fus = embedded_fusion(which);
            for (const auto& tau : fus.sub().irreducibles())
              for (const auto& phi : fus.ambient().irreducibles())
                if (!frobenius_check(tau, phi, fus)) {
                  detail = std::string("Frobenius reciprocity fails for ") + which;
                  return false;
                }
          }
          return true;
        });

  h.run(8, "bound filters accept the tables and reject forbidden primes", 1.0,
        [](std::string& detail) {
          for (unsigned n = 2; n <= 7; ++n) {
            auto res = primitive_groups(n);
            for (const auto& row : *res.rows) {
              if (!row.order_value) continue;
              if (!can_be_quasiprimitive(n, parse_factored(row.order_text)).admissible) {
                detail = "table group rejected: " + row.name;
                return false;
              }
            }
          }
          for (unsigned n = 2; n <= 9; ++n) {
            Int p = 2 * n + 3;
            while (!is_prime(p)) ++p;
            FactoredInteger f = FactoredInteger::from_factors({{Int(2), 2}, {p, 1}});
            if (can_be_quasiprimitive(n, f).admissible) {
              detail = "forbidden prime accepted at n=" + std::to_string(n);
              return false;
            }
          }
          if (admissible_prime(5, 11).kind != PrimeVerdictKind::ExceptionalPSL2p) {
            detail = "(n=5, p=11) verdict";
            return false;
          }
          return true;
        });

  h.run(9, "order search for 2520 agrees with the enumeration oracle", 1.0,
        [](std::string& detail) {
          SearchQuery q;
          q.divisor_target = factorize(2520);
          auto result = groups_with_order_dividing(q);
          std::vector<std::string> got;
          for (const auto& id : result) got.push_back(render_code(id));
          std::vector<std::string> expected{"ALT-5", "CA-1-7", "ALT-6", "CA-1-8", "ALT-7"};
          if (got != expected) {
            detail = "result list differs";
            return false;
          }
          std::set<std::string> oracle;
          for (const auto& id : enumerate_up_to(2520))
            if (divides(order(id), q.divisor_target)) oracle.insert(render_code(id));
          if (oracle != id_codes(result)) {
            detail = "oracle disagrees";
            return false;
          }
          return true;
        });

  h.run(10, "property suites: field axioms, round-trips, orthogonality", 120.0,
        [](std::string& detail) {
          std::mt19937_64 rng(20260810);
          auto random_cyclo = [&](unsigned modulus) {
            std::vector<std::pair<long, Rat>> terms;
            unsigned nterms = 1 + rng() % 4;
            for (unsigned t = 0; t < nterms; ++t)
              terms.emplace_back(static_cast<long>(rng() % modulus),
                                 Rat(static_cast<long>(rng() % 19) - 9,
                                     1 + static_cast<long>(rng() % 7)));
            return CycloNumber::from_terms(modulus, terms);
          };
          for (int iter = 0; iter < 10000; ++iter) {
            unsigned n = 1 + rng() % 60;
            CycloNumber x = random_cyclo(n), y = random_cyclo(n);
            if (!(x * y == y * x) || !((x + y).conjugate() == x.conjugate() + y.conjugate())) {
              detail = "field axiom failure";
              return false;
            }
            if (!x.is_zero() && !(x * x.inverse() == CycloNumber(1, n))) {
              detail = "inverse failure";
              return false;
            }
          }
          for (int i = 0; i < 2000; ++i) {
            unsigned long v = rng() % 1000000 + 1;
            if (factorize(Int(v)).value() != Int(v)) {
              detail = "factorization round-trip";
              return false;
            }
          }
          for (const auto& id : enumerate_up_to(10000000))
            if (!(parse_code(render_code(id)) == id)) {
              detail = "code round-trip";
              return false;
            }
          for (const auto& name : sporadic_names()) {
            SimpleGroupId id = SimpleGroupId::sporadic_group(name);
            if (!(parse_code(render_code(id)) == id)) {
              detail = "sporadic code round-trip";
              return false;
            }
          }
          for (const char* name : {"A4", "A5", "S4", "PSL(2,7)"}) {
            const CharacterTable& t = embedded_table(name);
            for (size_t i = 0; i < t.irreducibles().size(); ++i)
              for (size_t j = 0; j < t.irreducibles().size(); ++j) {
                Rat ip = inner_product(t, t.irreducible(i), t.irreducible(j));
                if (ip != (i == j ? Rat(1) : Rat(0))) {
                  detail = std::string("orthogonality failure in ") + name;
                  return false;
                }
              }
          }
          return true;
        });

  if (h.failures == 0) {
    std::cout << "all acceptance criteria passed" << std::endl;
    return 0;
  }
  std::cout << h.failures << " acceptance criteria failed" << std::endl;
  return 1;
}
