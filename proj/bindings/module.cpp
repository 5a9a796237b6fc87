#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pglcat/bounds.hpp"
#include "pglcat/catalog.hpp"
#include "pglcat/chartab.hpp"
#include "pglcat/cli.hpp"
#include "pglcat/errors.hpp"
#include "pglcat/extraspecial.hpp"
#include "pglcat/lowdeg.hpp"
#include "pglcat/order_search.hpp"
#include "pglcat/socle.hpp"
#include "pglcat/tables.hpp"

namespace py = pybind11;
using namespace pglcat;

namespace {

py::int_ to_py(const Int& v) {
  PyObject* obj = PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

Int to_int(const py::object& obj) {
  return Int(py::str(obj).cast<std::string>());
}

py::dict group_dict(const SimpleGroupId& id) {
  py::dict d;
  d["code"] = render_code(id);
  d["name"] = display_name(id);
  d["order"] = to_py(order_value(id));
  return d;
}

py::dict record_dict(const RepDegreeRecord& rec) {
  py::dict d = group_dict(rec.group);
  d["r"] = to_py(rec.r);
  d["d"] = to_py(rec.d);
  d["count"] = rec.count ? py::object(py::int_(*rec.count)) : py::object(py::none());
  d["clauses"] = rec.clauses;
  d["provenance"] = rec.provenance;
  d["notes"] = rec.notes;
  return d;
}

py::dict candidate_dict(const SocleCandidate& c) {
  py::dict d = group_dict(c.group);
  d["clauses"] = c.clauses;
  d["witness"] = c.witness.str();
  d["notes"] = c.notes;
  return d;
}

}  // namespace

PYBIND11_MODULE(_pglcat, m) {
  m.doc() = "classification queries for finite simple groups inside PGL(n,C)";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<DataError>(m, "DataError", PyExc_RuntimeError);

  m.def("factorize", [](const py::object& n) {
    FactoredInteger f = factorize(to_int(n));
    py::list out;
    for (const auto& [p, e] : f.factors()) out.append(py::make_tuple(to_py(p), e));
    return out;
  });

  m.def("order", [](const std::string& code) { return to_py(order(parse_code(code)).value()); });
  m.def("order_factored",
        [](const std::string& code) { return order(parse_code(code)).str(); });
  m.def("is_simple", [](const std::string& code) { return is_simple(parse_code(code)); });
  m.def("canonical", [](const std::string& code) { return render_code(canonical(parse_code(code))); });
  m.def("display_name", [](const std::string& code) { return display_name(parse_code(code)); });
  m.def("schur_multiplier", [](const std::string& code) {
    auto d = schur_multiplier(parse_code(code));
    py::dict out;
    out["description"] = d.str();
    py::list inv;
    for (const auto& x : d.invariants) inv.append(to_py(x));
    out["invariants"] = inv;
    out["provenance"] = d.provenance == MultiplierProvenance::GenericFormula
                            ? "generic-formula"
                            : (d.provenance == MultiplierProvenance::EmbeddedException
                                   ? "embedded-exception"
                                   : "unknown");
    return out;
  });

  m.def("enumerate_up_to", [](const py::object& bound) {
    py::list out;
    for (const auto& id : enumerate_up_to(to_int(bound))) out.append(group_dict(id));
    return out;
  });
  m.def(
      "groups_with_order_dividing",
      [](const py::object& target, const py::object& max_order, bool include_cyclic) {
        SearchQuery q;
        q.divisor_target = parse_factored(py::str(target).cast<std::string>());
        if (!max_order.is_none()) q.max_order = to_int(max_order);
        q.include_cyclic = include_cyclic;
        py::list out;
        for (const auto& id : groups_with_order_dividing(q)) out.append(group_dict(id));
        return out;
      },
      py::arg("target"), py::arg("max_order") = py::none(), py::arg("include_cyclic") = false);

  m.def("admissible_prime", [](unsigned n, const py::object& p) {
    auto v = admissible_prime(n, to_int(p));
    const char* kind = v.kind == PrimeVerdictKind::Forbidden ? "forbidden"
                       : v.kind == PrimeVerdictKind::ExceptionalPSL2p
                           ? "exceptional-psl2p"
                           : v.kind == PrimeVerdictKind::LargePrimeUniqueSquareFree
                                 ? "large-prime-unique-square-free"
                                 : "unrestricted";
    py::dict d;
    d["kind"] = kind;
    d["note"] = v.note;
    return d;
  });
  m.def(
      "blichfeldt_exponent_bound",
      [](unsigned n, const py::object& p, bool constant_five) {
        BlichfeldtOptions o;
        o.constant_five = constant_five;
        return blichfeldt_exponent_bound(n, to_int(p), o);
      },
      py::arg("n"), py::arg("p"), py::arg("constant_five") = false);
  m.def("collins_index_bound", [](unsigned n, const std::string& context) {
    BoundContext c = context == "any-finite" ? BoundContext::AnyFiniteInGL
                                             : BoundContext::PrimitiveInGL;
    auto b = collins_index_bound(n, c);
    return b ? py::object(to_py(b->value())) : py::object(py::none());
  });
  m.def("can_be_quasiprimitive", [](unsigned n, const std::string& order_text) {
    auto v = can_be_quasiprimitive(n, parse_factored(order_text));
    py::dict d;
    d["admissible"] = v.admissible;
    d["violations"] = v.violations;
    return d;
  });

  m.def(
      "socles",
      [](const py::object& p, bool strict_s2) {
        SocleOptions o;
        o.strict_s2 = strict_s2;
        auto e = nonabelian_socles(to_int(p), o);
        py::dict d;
        py::list prim, impr;
        for (const auto& c : e.primitive) prim.append(candidate_dict(c));
        for (const auto& c : e.imprimitive) impr.append(candidate_dict(c));
        d["p"] = to_py(e.p);
        d["primitive"] = prim;
        d["imprimitive"] = impr;
        d["notes"] = e.notes;
        return d;
      },
      py::arg("p"), py::arg("strict_s2") = false);
  m.def("abelian_socle_structure", [](const py::object& p) {
    auto s = abelian_socle_structure(to_int(p));
    py::dict d;
    d["p"] = to_py(s.p);
    d["extraspecial_order"] = to_py(s.extraspecial_order);
    d["full_group_order"] = to_py(s.full_group_order);
    d["projective_group_order"] = to_py(s.projective_group_order);
    d["options_exact"] = s.options_exact;
    py::list opts;
    for (const auto& k : s.sl2_subgroup_options) {
      py::dict o;
      o["index"] = k.index;
      o["name"] = k.name;
      o["order"] = to_py(k.order);
      o["note"] = k.note;
      opts.append(o);
    }
    d["options"] = opts;
    d["generic_families"] = s.generic_families;
    return d;
  });

  m.def("tz_for_group", [](const std::string& code) {
    py::list out;
    for (const auto& rec : tz_triples_for_group(parse_code(code))) out.append(record_dict(rec));
    return out;
  });
  m.def("tz_for_degree", [](const py::object& d) {
    py::list out;
    for (const auto& rec : tz_groups_for_degree(to_int(d))) out.append(record_dict(rec));
    return out;
  });
  m.def("min_degree_psl",
        [](unsigned n, const py::object& q) { return to_py(min_degree_psl(n, to_int(q))); });

  m.def("tables", [](unsigned n) {
    auto res = primitive_groups(n);
    py::dict d;
    if (res.rows) {
      py::list rows;
      for (const auto& e : *res.rows) {
        py::dict r;
        r["name"] = e.name;
        r["code"] = e.simple_id ? py::object(py::str(render_code(*e.simple_id)))
                                : py::object(py::none());
        r["order"] = e.order_text;
        r["origins"] = e.origins;
        r["gap_id"] = e.gap_id;
        r["structure"] = e.structure;
        r["fi"] = e.fi_counts;
        r["obs"] = e.obs;
        rows.append(r);
      }
      d["rows"] = rows;
    } else {
      d["status_missing"] = res.status->missing;
    }
    return d;
  });
  m.def("classification_status", [](unsigned n) {
    auto s = classification_status(n);
    py::dict d;
    d["complete"] = s.complete;
    d["missing"] = s.missing;
    return d;
  });
  m.def("composite_cases", [](unsigned n) {
    py::list out;
    for (const auto& c : composite_cases(n)) {
      py::dict d;
      d["case"] = c.case_index;
      d["description"] = c.description;
      if (c.p) d["p"] = to_py(*c.p);
      if (c.s) d["s"] = to_py(*c.s);
      if (c.m) d["m"] = to_py(*c.m);
      out.append(d);
    }
    return out;
  });

  m.def(
      "normalizer_group_orders",
      [](unsigned p, bool force) {
        auto o = normalizer_group_orders(p, std::nullopt, force);
        py::dict d;
        d["p"] = o.p;
        d["socle_classes"] = to_py(o.socle_classes);
        d["projective_classes"] = to_py(o.projective_classes);
        d["unimodular_order"] = to_py(o.unimodular_order);
        d["notes"] = o.notes;
        return d;
      },
      py::arg("p"), py::arg("force") = false);
  m.def("polygon_count", [](unsigned p) { return polygons(p).polygons.size(); });

  m.def("induced_character",
        [](const std::string& sub, const std::string& ambient, unsigned chi_index) {
          const Fusion& fus = embedded_fusion(sub + "<" + ambient);
          ClassFunction chi = embedded_table(sub).irreducible(chi_index - 1);
          ClassFunction ind = induce(chi, fus);
          const CharacterTable& g = embedded_table(ambient);
          py::dict d;
          py::list values;
          for (const auto& v : ind) values.append(v.str());
          d["values"] = values;
          d["degree"] = to_py(Int(ind[0].rational_value().get_num()));
          d["norm"] = inner_product(g, ind, ind).get_str();
          d["inner_with_trivial"] = inner_product(g, ind, g.trivial_character()).get_str();
          d["irreducible"] = is_irreducible(g, ind);
          return d;
        });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
