import pytest

import catalog
import exact
import extend
import liealg
import repthy
from exact import QQ


def h1(case):
    return repthy.ce_cohomology(extend.hom_module(case.module), 1).dim


def test_every_subalgebra_sits_in_sl3():
    sl3 = catalog.sl3()
    for name in catalog.EXTENSION_BUILDERS:
        case = catalog.get_case(name)
        span = case.embedding_span()
        assert len(span) == case.h.dim
        assert liealg.is_subalgebra(sl3, span)
        assert case.module.dim == 6


def test_p2_is_the_transpose_image_of_p1():
    p1, p2 = catalog.get_case("p1"), catalog.get_case("p2")
    for a, b in zip(p1.embedding, p2.embedding):
        assert exact.same_matrix(b, -a.transpose())
    assert p1.h.table == p2.h.table


@pytest.mark.parametrize(
    "name, expected",
    [("p1", 0), ("p12", 0), ("zb2r", 0), ("zt-neg", 0), ("zt-null", 0), ("zt-pos", 0),
     ("gl2", 0), ("sl2r2", 1), ("sl2r2-twisted", 1)],
)
def test_first_cohomology(name, expected):
    case = catalog.get_case(name)
    assert h1(case) == expected
    assert case.expected_for("cohomology")[0].value == expected


@pytest.mark.parametrize("l, expected", [("3/2", 6), ("9/2", 1), ("-3/10", 1), ("1", 0), ("-1/2", 0)])
def test_first_cohomology_over_l(l, expected):
    assert catalog.expected_h1(l) == expected
    assert h1(catalog.s2_case(l)) == expected


def test_killing_sign_of_t():
    for sign, value in (("neg", -1), ("null", 0), ("pos", 1)):
        case = catalog.get_case(f"zt-{sign}")
        norm = catalog.killing_norm(case.embedding[1])
        assert (norm > 0) - (norm < 0) == value
    assert catalog.killing_norm(catalog.diag(1, 1, -2)) == 36


def test_g2_point_is_split_g2():
    case = catalog.sl3_case()
    g = catalog.extend_reconstruct(case, "g2", case.families["g2"].solutions["g2"])
    assert liealg.jacobi_defect(g) == {}
    ident = liealg.identify_simple(g)
    assert (ident.label, ident.signature, ident.rank) == ("g2_split", (8, 6), 2)


@pytest.mark.parametrize("branch", ["nilpotent-1", "nilpotent-2"])
def test_g2_nilpotent_branches(branch):
    case = catalog.sl3_case()
    bindings = dict(case.families["g2"].solutions[branch])
    free = ({"alpha1", "alpha2"} - set(bindings)).pop()
    bindings[free] = "1"
    g = catalog.extend_reconstruct(case, "g2", bindings)
    assert liealg.jacobi_defect(g) == {}
    m = [tuple(QQ.one if k == i else QQ.zero for k in range(14)) for i in range(8, 14)]
    assert liealg.is_ideal(g, m)
    mm = liealg.bracket_of_spans(g, m, m)
    assert mm
    assert liealg.bracket_of_spans(g, m, mm) == []


def test_gl2_point_is_sp4():
    case = catalog.gl2_case()
    g = catalog.extend_reconstruct(case, "gl2", catalog.GL2_POINT)
    assert liealg.jacobi_defect(g) == {}
    ident = liealg.identify_simple(g)
    assert (ident.signature, ident.rank, ident.label) == ((6, 4), 2, "sp4_R/so23 class")


def test_twisted_origin_is_sl3_on_its_standard_module():
    case = catalog.sl2r2_twisted_case()
    family = case.families["twisted"]
    g = catalog.extend_reconstruct(case, "twisted", family.solutions["origin"])
    assert liealg.jacobi_defect(g) == {}
    basis = g.basis
    units = {n: tuple(QQ.one if k == i else QQ.zero for k in range(g.dim)) for i, n in enumerate(basis)}
    radical = liealg.radical(g)
    assert radical.dim == 3
    assert exact.span_basis(radical.span) == exact.span_basis([units[n] for n in catalog.TWISTED_RADICAL])
    levi = liealg.Subalgebra(g, tuple(units[n] for n in catalog.TWISTED_LEVI))
    assert liealg.identify_simple(levi.as_algebra(catalog.TWISTED_LEVI)).label == "sl3_R"


def test_twisted_radical_moves_with_a7():
    case = catalog.sl2r2_twisted_case()
    point = catalog.twisted_point(1, 2, QQ(1, 2))
    assert [point[f"a{i}"] for i in range(1, 5)] == [QQ(-3, 4), QQ(2), QQ(-3, 8), QQ(-13, 4)]
    g = catalog.extend_reconstruct(case, "twisted", {k: exact.scalar_to_json(v) for k, v in point.items()})
    assert liealg.jacobi_defect(g) == {}
    radical = liealg.radical(g)
    assert radical.dim == 3
    expected = catalog.twisted_radical_span(g.basis, QQ(1, 2))
    assert expected[0][g.basis.index("x1")] == QQ(1, 2)
    assert expected[2][g.basis.index("w3")] == QQ(-3, 2)
    assert exact.span_basis(radical.span) == exact.span_basis(expected)


def test_borel_bound():
    bound = catalog.borel_bound_case()
    assert bound.representation and bound.matches_display and bound.closed
    assert bound.dims == (5, 4, 3)


def test_case_lookup():
    assert "s2-semidirect" in catalog.list_cases()
    with pytest.raises(catalog.UnknownCaseError):
        catalog.get_case("so5")
    with pytest.raises(catalog.UnknownCaseError):
        catalog.get_case("s2-semidirect")
    with pytest.raises(catalog.UnknownCaseError):
        catalog.get_case("p1", {"l": "1"})
    case = catalog.get_case("s2-semidirect", {"l": "3/2"})
    assert case.params == {"l": QQ(3, 2)}
    assert set(case.families) == {"c1", "c2"}


def test_s2_realization_tracks_l():
    t, e, x1, x2 = catalog.s2_matrices("3/2")
    assert exact.trace(t) == 0
    assert exact.same_matrix(exact.commutator(t, e), e)
    assert exact.same_matrix(exact.commutator(t, x1), x1)
    assert exact.same_matrix(exact.commutator(t, x2), exact.scale(x2, 2))
    assert exact.same_matrix(exact.commutator(e, x1), x2)


def test_case_export():
    data = catalog.get_case("gl2").to_json()
    assert data["name"] == "gl2"
    assert len(data["embedding"]) == 4
    assert data["families"]["gl2"]["solutions"]["main"]["a1"] == "a3*a2/a4"
    assert {e["operation"] for e in data["expected"]} >= {"cohomology", "brackets", "jacobi"}
