#include "pglcat/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pglcat/bounds.hpp"
#include "pglcat/catalog.hpp"
#include "pglcat/chartab.hpp"
#include "pglcat/errors.hpp"
#include "pglcat/extraspecial.hpp"
#include "pglcat/json_schema.hpp"
#include "pglcat/lowdeg.hpp"
#include "pglcat/order_search.hpp"
#include "pglcat/socle.hpp"
#include "pglcat/tables.hpp"

namespace pglcat {

namespace {

using nlohmann::json;

struct Envelope {
  std::string command;
  std::string provenance = "derived";
  std::vector<std::string> notes;
  json result = json::object();
  std::string text;  // human-readable form
};

void emit(const Envelope& env, bool as_json, std::ostream& out) {
  if (as_json) {
    json payload{{"command", env.command},
                 {"provenance", env.provenance},
                 {"notes", env.notes},
                 {"result", env.result}};
    validate_cli_payload(payload);
    out << payload.dump(2) << "\n";
  } else {
    out << env.text;
    for (const auto& n : env.notes) out << "note: " << n << "\n";
  }
}

// Honors the external data directory variable for relative paths.
std::string resolve_data_path(const std::string& path) {
  namespace fs = std::filesystem;
  if (fs::exists(path)) return path;
  if (const char* base = std::getenv("PGLCAT_DATA_DIR")) {
    fs::path alt = fs::path(base) / path;
    if (fs::exists(alt)) return alt.string();
  }
  return path;
}

json group_json(const SimpleGroupId& id) {
  return json{{"code", render_code(id)},
              {"name", display_name(id)},
              {"order", order_value(id).get_str()}};
}

std::string verdict_name(PrimeVerdictKind k) {
  switch (k) {
    case PrimeVerdictKind::Forbidden:
      return "forbidden";
    case PrimeVerdictKind::ExceptionalPSL2p:
      return "exceptional-psl2p";
    case PrimeVerdictKind::LargePrimeUniqueSquareFree:
      return "large-prime-unique-square-free";
    case PrimeVerdictKind::Unrestricted:
      return "unrestricted";
  }
  return "?";
}

json socle_candidate_json(const SocleCandidate& c) {
  json j = group_json(c.group);
  j["clauses"] = c.clauses;
  j["witness"] = c.witness.str();
  j["notes"] = c.notes;
  return j;
}

void print_candidates(std::ostringstream& os, const std::vector<SocleCandidate>& cs) {
  for (const auto& c : cs) {
    os << "  " << render_code(c.group) << "  " << display_name(c.group) << "  order "
       << order_value(c.group).get_str() << "  clauses";
    for (const auto& cl : c.clauses) os << " " << cl;
    if (!c.witness.str().empty()) os << "  [" << c.witness.str() << "]";
    os << "\n";
  }
  if (cs.empty()) os << "  none\n";
}

json rep_record_json(const RepDegreeRecord& rec) {
  json j{{"code", render_code(rec.group)}, {"name", display_name(rec.group)},
         {"r", rec.r.get_str()},          {"d", rec.d.get_str()},
         {"clauses", rec.clauses},        {"provenance", rec.provenance},
         {"notes", rec.notes}};
  if (rec.count) j["count"] = *rec.count;
  return j;
}

void print_records(std::ostringstream& os, const std::vector<RepDegreeRecord>& recs) {
  for (const auto& rec : recs) {
    os << "  " << render_code(rec.group) << "  " << display_name(rec.group) << "  r="
       << rec.r.get_str() << "  d=" << rec.d.get_str();
    if (rec.count) os << "  (" << *rec.count << " reps)";
    os << "  clauses";
    for (const auto& c : rec.clauses) os << " " << c;
    os << " [" << rec.provenance << "]\n";
  }
  if (recs.empty()) os << "  none\n";
}

Int parse_prime_arg(const std::string& text) {
  Int p;
  if (mpz_set_str(p.get_mpz_t(), text.c_str(), 10) != 0)
    throw DomainError("expected an integer, got '" + text + "'");
  if (!is_prime(p)) throw DomainError(text + " is not prime");
  return p;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"pglcat: classification queries for finite simple groups inside PGL(n,C)"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit a schema-validated JSON envelope");

  // order <code>
  std::string order_code;
  auto* cmd_order = app.add_subcommand("order", "order and basic data of a simple group");
  cmd_order->add_option("code", order_code, "group code, e.g. CA-1-13 or SPOR-M12")->required();

  // search-order <factored-N> [--max M] [--include-cyclic]
  std::string search_target, search_max;
  bool include_cyclic = false;
  auto* cmd_search = app.add_subcommand("search-order",
                                        "all simple groups whose order divides N");
  cmd_search->add_option("N", search_target, "factored (2^3*3^2*5*7) or decimal")->required();
  cmd_search->add_option("--max", search_max, "absolute order bound");
  cmd_search->add_flag("--include-cyclic", include_cyclic, "also report cyclic C_p");

  // socles <p> [--abelian] [--strict-s2]
  std::string socle_p;
  bool socle_abelian = false, socle_strict = false;
  auto* cmd_socles = app.add_subcommand("socles",
                                        "candidate socles of primitive groups of prime degree");
  cmd_socles->add_option("p", socle_p, "prime degree")->required();
  cmd_socles->add_flag("--abelian", socle_abelian, "describe the abelian-socle branch");
  cmd_socles->add_flag("--strict-s2", socle_strict,
                       "restore the printed s >= 2 reading of the symplectic clause");

  // bounds <n> [--prime p] [--order <factored>] [--blichfeldt-5]
  unsigned bounds_n = 0;
  std::string bounds_prime, bounds_order;
  bool blichfeldt5 = false;
  auto* cmd_bounds = app.add_subcommand("bounds", "prime and order bounds at degree n");
  cmd_bounds->add_option("n", bounds_n, "degree")->required();
  cmd_bounds->add_option("--prime", bounds_prime, "prime to classify");
  cmd_bounds->add_option("--order", bounds_order, "candidate central-quotient order (factored)");
  cmd_bounds->add_flag("--blichfeldt-5", blichfeldt5,
                       "use the older constant 5 in the general bound");

  // lowdeg --degree d | --group <code>  [--external <csv>]
  std::string lowdeg_degree, lowdeg_group, lowdeg_external;
  auto* cmd_lowdeg = app.add_subcommand("lowdeg",
                                        "low-degree projective representation records");
  cmd_lowdeg->add_option("--degree", lowdeg_degree, "representation degree");
  cmd_lowdeg->add_option("--group", lowdeg_group, "group code");
  cmd_lowdeg->add_option("--external", lowdeg_external, "external degree-table CSV to merge");

  // mindeg-psl <n> <q>
  unsigned mindeg_n = 0;
  std::string mindeg_q;
  auto* cmd_mindeg = app.add_subcommand("mindeg-psl",
                                        "minimal projective degree of PSL(n,q), n >= 3");
  cmd_mindeg->add_option("n", mindeg_n, "dimension")->required();
  cmd_mindeg->add_option("q", mindeg_q, "field size")->required();

  // tables <n> / status <n> / composite <n>
  unsigned tables_n = 0, status_n = 0, composite_n = 0;
  auto* cmd_tables = app.add_subcommand("tables", "embedded degree table (2 <= n <= 7)");
  cmd_tables->add_option("n", tables_n, "degree")->required();
  auto* cmd_status = app.add_subcommand("status", "classification status (2 <= n <= 11)");
  cmd_status->add_option("n", status_n, "degree")->required();
  auto* cmd_composite = app.add_subcommand("composite", "composite-degree case analysis");
  cmd_composite->add_option("n", composite_n, "composite degree >= 4")->required();

  // construct <p> [--verify-closure] [--polygons] [--dump] [--force] [--unimodular]
  unsigned construct_p = 0;
  bool verify_closure = false, show_polygons = false, dump_matrices = false, force_closure = false,
       dump_unimodular = false;
  auto* cmd_construct = app.add_subcommand("construct",
                                           "extraspecial normalizer matrices at odd prime p");
  cmd_construct->add_option("p", construct_p, "odd prime degree")->required();
  cmd_construct->add_flag("--verify-closure", verify_closure,
                          "run the projective closures and derive the unimodular order");
  cmd_construct->add_flag("--polygons", show_polygons, "construct and search invariant polygons");
  cmd_construct->add_flag("--dump", dump_matrices, "dump the generator matrices");
  cmd_construct->add_flag("--force", force_closure, "allow closure runs for p >= 11");
  cmd_construct->add_flag("--unimodular", dump_unimodular,
                          "dump determinant-one scaled generators");

  // induce --ambient <file> --sub <file> --fusion <file> --char <i>
  std::string induce_ambient, induce_sub, induce_fusion;
  unsigned induce_chi = 0;
  auto* cmd_induce = app.add_subcommand("induce", "induce a subgroup character along a fusion");
  cmd_induce->add_option("--ambient", induce_ambient, "ambient character table file")->required();
  cmd_induce->add_option("--sub", induce_sub, "subgroup character table file")->required();
  cmd_induce->add_option("--fusion", induce_fusion, "fusion file")->required();
  cmd_induce->add_option("--char", induce_chi, "1-based index of the subgroup character")
      ->required();

  // load-degrees <csv>
  std::string load_file;
  auto* cmd_load = app.add_subcommand("load-degrees", "validate an external degree-table CSV");
  cmd_load->add_option("csv", load_file, "CSV path")->required();

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  std::vector<std::string> argv_vec = args;
  std::vector<const char*> argv;
  argv.push_back("pglcat");
  for (const auto& a : argv_vec) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  Envelope env;
  try {
    if (cmd_order->parsed()) {
      env.command = "order " + order_code;
      SimpleGroupId id = parse_code(order_code);
      FactoredInteger f = order(id);
      SimpleGroupId canon = canonical(id);
      bool simple = is_simple(id);
      json mult;
      std::string mult_text = "n/a (not simple)";
      if (simple) {
        SchurMultiplierDescriptor m = schur_multiplier(id);
        const char* prov = m.provenance == MultiplierProvenance::GenericFormula
                               ? "generic-formula"
                               : (m.provenance == MultiplierProvenance::EmbeddedException
                                      ? "embedded-exception"
                                      : "unknown");
        mult = json{{"description", m.str()}, {"provenance", prov}};
        mult_text = m.str();
        env.provenance =
            m.provenance == MultiplierProvenance::EmbeddedException ? "embedded" : "derived";
      } else {
        mult = json{{"description", "n/a"}, {"provenance", "unknown"}};
        env.notes.push_back("the requested parameters give a non-simple group");
      }
      env.result = json{{"code", render_code(id)},
                        {"name", display_name(id)},
                        {"order", f.value().get_str()},
                        {"order_factored", f.str()},
                        {"simple", simple},
                        {"canonical_code", render_code(canon)},
                        {"schur_multiplier", mult}};
      std::ostringstream os;
      os << display_name(id) << " (" << render_code(id) << ")\n"
         << "order: " << f.value().get_str() << " = " << f.str() << "\n"
         << "simple: " << (simple ? "yes" : "no") << "\n"
         << "canonical: " << render_code(canon) << "\n"
         << "Schur multiplier: " << mult_text << "\n";
      env.text = os.str();
    } else if (cmd_search->parsed()) {
      env.command = "search-order " + search_target;
      SearchQuery q;
      q.divisor_target = parse_factored(search_target);
      if (!search_max.empty()) q.max_order = parse_factored(search_max).value();
      q.include_cyclic = include_cyclic;
      auto groups = groups_with_order_dividing(q);
      Int bound = q.divisor_target.value();
      if (q.max_order && *q.max_order < bound) bound = *q.max_order;
      json arr = json::array();
      std::ostringstream os;
      os << "simple groups with order dividing " << q.divisor_target.str() << " (bound "
         << bound.get_str() << "):\n";
      for (const auto& g : groups) {
        arr.push_back(group_json(g));
        os << "  " << render_code(g) << "  " << display_name(g) << "  order "
           << order_value(g).get_str() << "\n";
      }
      if (groups.empty()) os << "  none\n";
      env.result = json{{"target", q.divisor_target.str()},
                        {"bound", bound.get_str()},
                        {"groups", arr}};
      if (include_cyclic) {
        json cyc = json::array();
        os << "cyclic groups C_p:\n ";
        for (const auto& p : cyclic_divisors(q)) {
          cyc.push_back(p.get_str());
          os << " C" << p.get_str();
        }
        os << "\n";
        env.result["cyclic"] = cyc;
      }
      env.text = os.str();
    } else if (cmd_socles->parsed()) {
      Int p = parse_prime_arg(socle_p);
      if (socle_abelian) {
        env.command = "socles " + socle_p + " --abelian";
        AbelianSocleStructure s = abelian_socle_structure(p);
        env.provenance = s.options_exact ? "embedded" : "derived";
        json opts = json::array();
        std::ostringstream os;
        os << "abelian-socle branch at p = " << p.get_str() << ":\n"
           << "  normal extraspecial subgroup of order p^3 = "
           << s.extraspecial_order.get_str() << "\n"
           << "  full normalizer: unimodular order p^4(p^2-1) = "
           << s.full_group_order.get_str() << ", projective order p^3(p^2-1) = "
           << s.projective_group_order.get_str() << "\n"
           << "  otherwise a semidirect product with a subgroup of SL(2," << p.get_str()
           << ") of order coprime to p\n";
        if (s.options_exact) {
          os << "  subgroup options:\n";
          for (const auto& k : s.sl2_subgroup_options) {
            opts.push_back(json{{"index", k.index},
                                {"name", k.name},
                                {"order", k.order.get_str()},
                                {"note", k.note}});
            os << "    K" << k.index << " = " << k.name << " (order " << k.order.get_str()
               << ")" << (k.note.empty() ? "" : "  " + k.note) << "\n";
          }
        } else {
          os << "  subgroup families (exact list embedded only for p in {3,5,7}):\n";
          for (const auto& fam : s.generic_families) os << "    " << fam << "\n";
        }
        env.result = json{{"p", p.get_str()},
                          {"extraspecial_order", s.extraspecial_order.get_str()},
                          {"full_group_order", s.full_group_order.get_str()},
                          {"projective_group_order", s.projective_group_order.get_str()},
                          {"options_exact", s.options_exact},
                          {"options", opts},
                          {"generic_families", s.generic_families}};
        env.text = os.str();
      } else {
        env.command = "socles " + socle_p + (socle_strict ? " --strict-s2" : "");
        SocleOptions opt;
        opt.strict_s2 = socle_strict;
        SocleEnumeration e = nonabelian_socles(p, opt);
        env.notes = e.notes;
        json prim = json::array(), impr = json::array();
        for (const auto& c : e.primitive) prim.push_back(socle_candidate_json(c));
        for (const auto& c : e.imprimitive) impr.push_back(socle_candidate_json(c));
        env.result = json{{"p", p.get_str()},
                          {"strict_s2", socle_strict},
                          {"primitive", prim},
                          {"imprimitive", impr}};
        std::ostringstream os;
        os << "candidate socles at prime degree p = " << p.get_str() << ":\n";
        os << "primitive-socle candidates:\n";
        print_candidates(os, e.primitive);
        os << "imprimitive-socle candidates:\n";
        print_candidates(os, e.imprimitive);
        env.text = os.str();
      }
    } else if (cmd_bounds->parsed()) {
      env.command = "bounds " + std::to_string(bounds_n);
      BlichfeldtOptions opts;
      opts.constant_five = blichfeldt5;
      auto cp = collins_index_bound(bounds_n, BoundContext::PrimitiveInGL);
      auto ca = collins_index_bound(bounds_n, BoundContext::AnyFiniteInGL);
      env.result = json{{"n", bounds_n},
                        {"collins_primitive", cp ? json(cp->str()) : json(nullptr)},
                        {"collins_any_finite", ca ? json(ca->str()) : json(nullptr)}};
      std::ostringstream os;
      os << "bounds at degree n = " << bounds_n << (blichfeldt5 ? " (constant 5)" : "") << ":\n";
      os << "  index bound (primitive): " << (cp ? cp->str() : "not determined") << "\n";
      os << "  index bound (any finite): " << (ca ? ca->str() : "not determined") << "\n";
      if (!bounds_prime.empty()) {
        Int p = parse_prime_arg(bounds_prime);
        PrimeVerdict v = admissible_prime(bounds_n, p);
        unsigned k = blichfeldt_exponent_bound(bounds_n, p, opts);
        env.result["prime"] = json{{"p", p.get_str()},
                                   {"verdict", verdict_name(v.kind)},
                                   {"note", v.note},
                                   {"blichfeldt_exponent", k}};
        os << "  prime " << p.get_str() << ": " << verdict_name(v.kind)
           << (v.note.empty() ? "" : " (" + v.note + ")") << "\n"
           << "  max admissible exponent of " << p.get_str() << ": " << k << "\n";
      }
      if (!bounds_order.empty()) {
        FactoredInteger f = parse_factored(bounds_order);
        QuasiprimitivityVerdict v = can_be_quasiprimitive(bounds_n, f, opts);
        env.result["order_check"] = json{{"order", f.str()},
                                         {"admissible", v.admissible},
                                         {"violations", v.violations}};
        os << "  order " << f.str() << ": "
           << (v.admissible ? "passes every bound" : "ruled out") << "\n";
        for (const auto& viol : v.violations) os << "    - " << viol << "\n";
      }
      env.text = os.str();
    } else if (cmd_lowdeg->parsed()) {
      if (lowdeg_degree.empty() == lowdeg_group.empty())
        throw DomainError("lowdeg needs exactly one of --degree or --group");
      std::vector<ExternalDegreeRecord> external;
      bool have_external = false;
      if (!lowdeg_external.empty()) {
        std::ifstream in(resolve_data_path(lowdeg_external));
        if (!in) throw DataError("cannot open " + lowdeg_external);
        external = load_degree_csv(in);
        have_external = true;
      }
      std::vector<RepDegreeRecord> records;
      std::ostringstream os;
      if (!lowdeg_group.empty()) {
        env.command = "lowdeg --group " + lowdeg_group;
        SimpleGroupId id = parse_code(lowdeg_group);
        records = tz_triples_for_group(id);
        env.result["group"] = render_code(canonical(id));
        os << "low-degree records for " << display_name(canonical(id)) << ":\n";
      } else {
        env.command = "lowdeg --degree " + lowdeg_degree;
        Int d(lowdeg_degree);
        records = tz_groups_for_degree(d, have_external ? &external : nullptr);
        env.result["degree"] = d.get_str();
        os << "groups with a projective irreducible representation of degree "
           << d.get_str() << ":\n";
      }
      json arr = json::array();
      for (const auto& rec : records) arr.push_back(rep_record_json(rec));
      env.result["records"] = arr;
      print_records(os, records);
      env.provenance = have_external ? "mixed" : "derived";
      env.text = os.str();
    } else if (cmd_mindeg->parsed()) {
      env.command = "mindeg-psl " + std::to_string(mindeg_n) + " " + mindeg_q;
      Int q(mindeg_q);
      Int v = min_degree_psl(mindeg_n, q);
      bool exceptional = (mindeg_n == 3 && (q == 2 || q == 4)) ||
                         (mindeg_n == 4 && (q == 2 || q == 3));
      env.result = json{{"n", mindeg_n},
                        {"q", q.get_str()},
                        {"value", v.get_str()},
                        {"exception", exceptional}};
      std::ostringstream os;
      os << "l(PSL(" << mindeg_n << "," << q.get_str() << ")) = " << v.get_str()
         << (exceptional ? " (embedded exception)" : " ((q^n-1)/(q-1) - n)") << "\n";
      env.text = os.str();
    } else if (cmd_tables->parsed()) {
      env.command = "tables " + std::to_string(tables_n);
      TablesResult res = primitive_groups(tables_n);
      env.provenance = "embedded";
      std::ostringstream os;
      if (res.rows) {
        json arr = json::array();
        os << "groups of degree " << tables_n << ":\n";
        for (const auto& e : *res.rows) {
          json row{{"name", e.name},
                   {"order", e.order_text},
                   {"origins", e.origins},
                   {"gap_id", e.gap_id},
                   {"gap_db", e.gap_db},
                   {"structure", e.structure},
                   {"fi", e.fi_counts},
                   {"obs", e.obs}};
          if (e.simple_id) row["code"] = render_code(*e.simple_id);
          arr.push_back(row);
          os << "  " << e.name;
          if (!e.order_text.empty()) os << "  order " << e.order_text;
          if (!e.structure.empty()) os << "  [" << e.structure << "]";
          if (!e.obs.empty()) os << "  (" << e.obs << ")";
          os << "\n";
        }
        env.result = json{{"n", tables_n}, {"rows", arr}};
      } else {
        const StatusRecord& st = *res.status;
        env.result = json{{"n", tables_n},
                          {"status", json{{"complete", st.complete}, {"missing", st.missing}}}};
        os << "degree " << tables_n << " is not classified here; status:\n";
        os << "  complete: " << (st.complete ? "yes" : "no") << "\n";
        for (const auto& m : st.missing) os << "  missing: " << m << "\n";
      }
      env.text = os.str();
    } else if (cmd_status->parsed()) {
      env.command = "status " + std::to_string(status_n);
      StatusRecord st = classification_status(status_n);
      env.provenance = "embedded";
      env.result = json{{"n", status_n}, {"complete", st.complete}, {"missing", st.missing}};
      std::ostringstream os;
      os << "classification status at degree " << status_n << ": "
         << (st.complete ? "complete" : "incomplete") << "\n";
      for (const auto& m : st.missing) os << "  missing: " << m << "\n";
      env.text = os.str();
    } else if (cmd_composite->parsed()) {
      env.command = "composite " + std::to_string(composite_n);
      auto cases = composite_cases(composite_n);
      json arr = json::array();
      std::ostringstream os;
      os << "composite-degree cases at n = " << composite_n << ":\n";
      for (const auto& c : cases) {
        json j{{"case", c.case_index}, {"description", c.description}};
        os << "  case " << c.case_index << ": " << c.description;
        if (c.p) {
          j["p"] = c.p->get_str();
          os << "  p=" << c.p->get_str();
        }
        if (c.s) {
          j["s"] = c.s->get_str();
          os << "  s=" << c.s->get_str();
        }
        if (c.m) {
          j["m"] = c.m->get_str();
          os << "  m=" << c.m->get_str();
        }
        os << "\n";
        arr.push_back(std::move(j));
      }
      env.result = json{{"n", composite_n}, {"cases", arr}};
      env.text = os.str();
    } else if (cmd_construct->parsed()) {
      std::string cmd = "construct " + std::to_string(construct_p);
      if (verify_closure) cmd += " --verify-closure";
      if (show_polygons) cmd += " --polygons";
      if (dump_matrices) cmd += " --dump";
      env.command = cmd;
      unsigned p = construct_p;
      CycloMatrix sigma = make_sigma(p), tau = make_tau(p);
      CycloNumber zeta = CycloNumber::zeta(p);
      bool heis = tau * sigma == sigma.scaled(zeta) * tau;
      env.result = json{{"p", p}, {"heisenberg_ok", heis}};
      std::ostringstream os;
      os << "extraspecial normalizer construction at p = " << p << "\n";
      os << "Heisenberg relation tau sigma = zeta sigma tau: " << (heis ? "holds" : "FAILS")
         << "\n";
      if (verify_closure) {
        NormalizerOrders orders = normalizer_group_orders(p, std::nullopt, force_closure);
        env.result["socle_classes"] = orders.socle_classes.get_str();
        env.result["projective_classes"] = orders.projective_classes.get_str();
        env.result["unimodular_order"] = orders.unimodular_order.get_str();
        for (const auto& n : orders.notes) env.notes.push_back(n);
        os << "projective classes of <sigma,tau>: " << orders.socle_classes.get_str()
           << " (socle p^2)\n";
        os << "projective classes of full generator set: "
           << orders.projective_classes.get_str() << "\n";
        os << "cardinality of the unimodular matrix group: "
           << orders.unimodular_order.get_str() << " (p^4(p^2-1))\n";
      }
      if (show_polygons) {
        PolygonSet ps = polygons(p);
        auto found = search_polygons(p);
        env.result["polygon_count"] = static_cast<int>(ps.polygons.size());
        env.result["polygon_search_count"] = static_cast<int>(found.size());
        os << "constructed polygons: " << ps.polygons.size()
           << "; found by eigenbasis search: " << found.size() << "\n";
      }
      if (dump_matrices) {
        json dumps = json::array();
        std::vector<std::pair<std::string, CycloMatrix>> mats;
        unsigned m = default_multiplicative_generator(p);
        mats.emplace_back("sigma", sigma);
        mats.emplace_back("tau", tau);
        mats.emplace_back("f1", make_f1(p, dump_unimodular));
        mats.emplace_back("f2", make_f2(p, dump_unimodular));
        mats.emplace_back("f3", make_f3(p, m, dump_unimodular));
        for (const auto& [name, mat] : mats) {
          dumps.push_back(name + "\n" + mat.dump());
          os << name << ":\n" << mat.dump();
        }
        env.result["dump"] = dumps;
      }
      env.text = os.str();
    } else if (cmd_induce->parsed()) {
      env.command = "induce --char " + std::to_string(induce_chi);
      std::ifstream amb_in(resolve_data_path(induce_ambient));
      if (!amb_in) throw DataError("cannot open " + induce_ambient);
      std::ifstream sub_in(resolve_data_path(induce_sub));
      if (!sub_in) throw DataError("cannot open " + induce_sub);
      std::ifstream fus_in(resolve_data_path(induce_fusion));
      if (!fus_in) throw DataError("cannot open " + induce_fusion);
      CharacterTable ambient = CharacterTable::parse(amb_in);
      CharacterTable sub = CharacterTable::parse(sub_in);
      Fusion fusion = Fusion::parse(fus_in, sub, ambient);
      if (induce_chi < 1 || induce_chi > sub.irreducibles().size())
        throw DomainError("character index out of range 1.." +
                          std::to_string(sub.irreducibles().size()));
      ClassFunction chi = sub.irreducible(induce_chi - 1);
      ClassFunction ind = induce(chi, fusion);
      Rat norm = inner_product(ambient, ind, ind);
      Rat with_trivial = inner_product(ambient, ind, ambient.trivial_character());
      bool irred = is_irreducible(ambient, ind);
      json values = json::array();
      for (const auto& v : ind) values.push_back(v.str());
      env.provenance = "external";
      env.result = json{{"sub", sub.label()},
                        {"ambient", ambient.label()},
                        {"index", fusion.index().get_str()},
                        {"chi", induce_chi},
                        {"degree", ind[0].rational_value().get_str()},
                        {"values", values},
                        {"norm", norm.get_str()},
                        {"inner_with_trivial", with_trivial.get_str()},
                        {"irreducible", irred}};
      std::ostringstream os;
      os << "Ind from " << sub.label() << " to " << ambient.label() << " (index "
         << fusion.index().get_str() << ") of character #" << induce_chi << ":\n";
      os << "  degree " << ind[0].rational_value().get_str() << "\n  values:";
      for (const auto& v : ind) os << "  " << v.str();
      os << "\n  <chi,chi> = " << norm.get_str() << ", <chi,1> = " << with_trivial.get_str()
         << ", irreducible: " << (irred ? "yes" : "no") << "\n";
      env.text = os.str();
    } else if (cmd_load->parsed()) {
      env.command = "load-degrees " + load_file;
      std::ifstream in(resolve_data_path(load_file));
      if (!in) throw DataError("cannot open " + load_file);
      auto rows = load_degree_csv(in);
      std::set<std::string> codes;
      for (const auto& r : rows) codes.insert(render_code(r.group));
      env.provenance = "external";
      env.result = json{{"file", load_file},
                        {"rows", static_cast<int>(rows.size())},
                        {"distinct_groups", static_cast<int>(codes.size())}};
      std::ostringstream os;
      os << "loaded " << rows.size() << " degree rows covering " << codes.size()
         << " groups from " << load_file << "\n";
      env.text = os.str();
    }
    emit(env, as_json, out);
    return 0;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << "\n";
    return 4;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace pglcat
