import json

import pytest

import catalog
import reports
from exact import QQ


def test_matches_constrains_named_keys_only():
    assert reports.matches({"a": 1, "b": 2}, {"a": 1})
    assert not reports.matches({"a": 1}, {"a": 1, "b": 2})
    assert reports.matches({"x": {"y": [1, 2], "z": 0}}, {"x": {"y": [1, 2]}})
    assert not reports.matches([1, 2], [2, 1])
    assert reports.matches(6, 6)


def test_rational_text():
    assert reports.rational_text(QQ(3, 2)) == "3/2"
    assert reports.rational_text(QQ(-4)) == "-4"
    assert reports.rational_text("6/4") == "3/2"


def test_report_record_is_flat():
    row = reports.Report("p1", "cohomology", {}, {"dim": 0}, {"item": "h1", "value": 0}, "cite", True)
    record = row.to_record()
    assert json.loads(record["outputs"]) == {"dim": 0}
    assert record["expected"] == '{"item":"h1","value":0}'
    assert record["match"] is True


def test_generic_l_values_are_seeded_and_generic():
    values = reports.generic_l_values(5)
    assert values == reports.generic_l_values(5)
    assert len(values) == reports.SCAN_SAMPLES == len(set(values))
    assert not {reports.rational_text(l) for l in values} & set(catalog.EXCEPTIONAL_L)


def test_h1_scan_records():
    records = reports.h1_scan(seed=0, count=2)
    assert len(records) == len(catalog.EXCEPTIONAL_L) + 2
    by_l = {r["l"]: r for r in records}
    assert by_l["3/2"]["dim_h1"] == 6
    assert by_l["-3/10"]["exceptional"]
    assert all(r["dim_h1"] == r["expected_dim"] for r in records)
    assert sum(not r["exceptional"] for r in records) == 2


def test_cohomology_rows():
    (row,) = reports.cohomology_rows(catalog.s2_case("1"))
    assert row.match
    assert row.outputs["dim"] == 0
    assert row.inputs == {"l": "1"}
    (row,) = reports.cohomology_rows(catalog.get_case("sl2r2"))
    assert row.match and row.outputs["dim"] == 1


def test_sl2r2_has_one_invariant_hyperplane():
    rows = reports.bracket_rows(catalog.get_case("sl2r2"))
    (row,) = [row for row in rows if row.expected["item"] == "subspaces"]
    assert row.match
    assert row.outputs["lines"] == 1
    # the annihilated vector of V, seen in m and in m*
    assert row.outputs["found"]["lines"] == [["1/1", "0/1", "0/1", "0/1", "0/1", "0/1"]]
    assert row.outputs["dual_found"]["lines"] == [["0/1", "0/1", "0/1", "1/1", "0/1", "0/1"]]


def test_identify_rows_report_the_sign_of_t():
    for sign in ("neg", "null", "pos"):
        (row,) = reports.identify_rows(catalog.get_case(f"zt-{sign}"))
        assert row.match
        assert row.expected["item"] == "killing_sign_t"


def test_twisted_radical_span_row():
    rows = reports.identify_rows(catalog.sl2r2_twisted_case(), seed=3)
    assert {row.expected["item"] for row in rows} == {"levi", "radical_span"}
    assert all(row.match for row in rows)
    (span,) = [row for row in rows if row.expected["item"] == "radical_span"]
    assert span.outputs["spans"] and span.outputs["radical"] == 3
    assert span.outputs["point"]["a7"] != "0"
    again = reports.identify_rows(catalog.sl2r2_twisted_case(), seed=3)
    assert [row.outputs for row in again] == [row.outputs for row in rows]


def test_sl3_jacobi_rows():
    rows = reports.jacobi_rows(catalog.sl3_case())
    assert {row.expected["item"] for row in rows} == {"ideal", "nilpotent-1", "nilpotent-2"}
    assert all(row.match for row in rows)
    (ideal,) = [row for row in rows if row.expected["item"] == "ideal"]
    assert ideal.outputs["equal"]


def test_twisted_printed_generators_are_compared_only():
    with pytest.warns(RuntimeWarning):
        rows = reports.jacobi_rows(catalog.sl2r2_twisted_case())
    (info,) = [row for row in rows if row.expected is None]
    assert info.match
    assert "3*a2 - 4*a7" not in info.outputs["printed_contained"]
    assert not info.outputs["printed_family_solves"]
    checked = [row for row in rows if row.expected is not None]
    assert {row.expected["item"] for row in checked} == {"relations", "derived"}
    assert all(row.match for row in checked)


def test_su2_einstein_row():
    (row,) = reports.geometry_rows(catalog.get_case("su2"))
    assert row.match
    assert row.outputs == {"einstein": True, "factor": "1/4"}


def test_su2cubed_row():
    (row,) = reports.geometry_rows(catalog.get_case("su2cubed", {"r": "0", "t": "3"}))
    assert row.match
    assert row.inputs == {"r": "0", "t": "3"}
    assert row.outputs["nk"] == "no" and row.outputs["einstein"] is False
    assert row.outputs["nondegenerate"] is True
    (row,) = reports.geometry_rows(catalog.get_case("su2cubed", {"r": "1", "t": "3"}))
    assert row.match
    assert row.outputs == {"family": "degenerate-nonintegrable", "nondegenerate": False}


def test_su2cubed_points():
    trichotomy, grid = reports.su2cubed_points(seed=1)
    assert len(trichotomy) == reports.SU2CUBED_TRICHOTOMY
    assert len(grid) == reports.SU2CUBED_GRID
    families = {catalog.su2cubed_expected(r, t)[0].value["family"] for r, t in trichotomy}
    assert families == {"integrable", "degenerate-nonintegrable", "nondegenerate"}
    for r, t in grid:
        assert catalog.su2cubed_expected(r, t)[0].value["family"] == "nondegenerate"


def test_borel_row():
    (row,) = reports.borel_rows(catalog.get_case("borel-bound"))
    assert row.match
    assert row.outputs["dims"] == [5, 4, 3]


def test_symbol_samples():
    out = reports.symbol_samples(seed=2, count=5)
    assert out["g2_zero"] and out["g1_bounded"]
    assert out["zero_xi_g1"] == 18


def test_rows_sort_by_case_then_operation():
    a = reports.Report("zb2r", "brackets", {}, {}, None, "", True)
    b = reports.Report("p1", "jacobi", {}, {}, None, "", True)
    c = reports.Report("p1", "cohomology", {"n": 1}, {}, None, "", True)
    d = reports.Report("p1", "cohomology", {"n": 2}, {}, None, "", True)
    assert reports.sort_rows([a, b, c, d]) == [c, d, b, a]


def test_report_units_cover_the_catalog():
    units = reports.report_units()
    names = {name for _, name, _ in units}
    assert names == set(catalog.CASE_NAMES)
    s2 = [params["l"] for kind, name, params in units if kind == "case" and name == "s2-semidirect"]
    assert tuple(s2) == catalog.S2_VALUES
    assert ("scan", "s2-semidirect", {}) in units and ("sweep", "su2cubed", {}) in units
