"""Smoke tests for the python bindings; the exhaustive checks live in the
C++ unit and acceptance suites."""

import pglcat
import pytest


def test_orders():
    assert pglcat.order("CA-1-13") == 1092
    assert pglcat.order("SPOR-M12") == 95040
    assert pglcat.order_factored("CC-3-2") == "2^9*3^4*5*7"
    assert pglcat.order("E8-2") == 337804753143634806261388190614085595079991692242467651576160959909068800000


def test_factorize():
    assert pglcat.factorize(660) == [(2, 2), (3, 1), (5, 1), (11, 1)]
    assert pglcat.factorize(1) == []


def test_canonical_and_names():
    assert pglcat.canonical("CA-1-5") == "ALT-5"
    assert pglcat.canonical("CC-2-3") == "T2A-3-2"
    assert pglcat.display_name("T2A-3-2") == "PSU(4,2)"
    assert pglcat.is_simple("ALT-5")


def test_schur_multiplier():
    m = pglcat.schur_multiplier("ALT-6")
    assert m["description"] == "C6"
    assert m["invariants"] == [6]


def test_socles():
    e = pglcat.socles(11)
    prim = {c["name"] for c in e["primitive"]}
    assert prim == {"A12", "M12", "PSL(2,11)", "PSL(2,23)", "PSU(5,2)"}
    assert e["imprimitive"] == []
    strict = pglcat.socles(5, strict_s2=True)
    assert {c["name"] for c in strict["primitive"]} == {"A6", "PSL(2,11)"}
    with pytest.raises(ValueError):
        pglcat.socles(6)


def test_abelian_socle():
    s = pglcat.abelian_socle_structure(5)
    assert s["full_group_order"] == 15000
    assert [k["name"] for k in s["options"]][:3] == ["C3", "C6", "Q8"]


def test_order_search():
    groups = pglcat.groups_with_order_dividing("2^3*3^2*5*7")
    assert [g["name"] for g in groups] == ["A5", "PSL(2,7)", "A6", "PSL(2,8)", "A7"]
    assert pglcat.enumerate_up_to(59) == []


def test_bounds():
    assert pglcat.admissible_prime(5, 13)["kind"] == "forbidden"
    assert pglcat.admissible_prime(5, 11)["kind"] == "exceptional-psl2p"
    assert pglcat.blichfeldt_exponent_bound(4, 2) == 10
    assert pglcat.can_be_quasiprimitive(5, "2^2*3*5*11")["admissible"]
    assert not pglcat.can_be_quasiprimitive(5, "13")["admissible"]


def test_lowdeg():
    recs = pglcat.tz_for_degree(2)
    assert {r["name"] for r in recs} == {"A5"}
    a5 = pglcat.tz_for_group("ALT-5")
    assert len(a5) == 13
    assert pglcat.min_degree_psl(4, 3) == 26
    assert pglcat.min_degree_psl(3, 3) == 10


def test_tables_and_status():
    t5 = pglcat.tables(5)
    assert len(t5["rows"]) == 11
    assert t5["rows"][-1]["name"] == "G6"
    s = pglcat.classification_status(10)
    assert not s["complete"]
    cases = pglcat.composite_cases(4)
    assert any(c["case"] == 3 for c in cases)


def test_extraspecial():
    o = pglcat.normalizer_group_orders(3)
    assert o["socle_classes"] == 9
    assert o["projective_classes"] == 216
    assert o["unimodular_order"] == 648
    assert pglcat.polygon_count(5) == 6


def test_induced_character():
    ind = pglcat.induced_character("A4", "A5", 2)
    assert ind["degree"] == 5
    assert ind["norm"] == "1"
    assert ind["inner_with_trivial"] == "0"
    assert ind["irreducible"]


def test_cli_roundtrip():
    code, out, err = pglcat.run_cli(["order", "SPOR-M12", "--json"])
    assert code == 0
    assert '"order": "95040"' in out
    code, _, err = pglcat.run_cli(["socles", "6"])
    assert code == 3
    assert "prime" in err
