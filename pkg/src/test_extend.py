import numpy as np
import pytest

import catalog
import exact
import extend
import liealg
import repthy
from extend import Cocycle
from liealg import LieAlgebra
from repthy import Representation


def p(text):
    return exact.parse_poly(text)


def sl2():
    return LieAlgebra.from_brackets(
        ("e", "f", "h"), ["[h, e] = 2*e", "[h, f] = -2*f", "[e, f] = h"], "sl2"
    )


def standard(L):
    return Representation(
        L,
        (
            exact.matrix([[0, 1], [0, 0]]),
            exact.matrix([[0, 0], [1, 0]]),
            exact.matrix([[1, 0], [0, -1]]),
        ),
        "V",
    )


def jacobi_values(datum):
    return list(dict.fromkeys(liealg.jacobi_defect(extend.reconstruct(datum)).values()))


def member(poly, ideal):
    return exact.same_ideal(list(ideal), list(ideal) + [poly], extend.JACOBI_LIMITS)


def test_gauge_moves_within_the_class():
    rng = np.random.default_rng(7)
    V = standard(sl2())
    zero = Cocycle.zero(V)
    for _ in range(50):
        A = exact.random_matrix(rng, 3, 2)
        phi = extend.gauge(zero, A)
        assert extend.cocycle_defects(phi) == {}
        assert repthy.is_coboundary(extend.hom_module(V), 1, phi.flat()).feasible
        P = extend.change_of_complement(phi, A)
        twisted, plain = extend.twisted_module(phi), extend.twisted_module(zero)
        for a, b in zip(twisted.matrices, plain.matrices):
            assert exact.same_matrix(P * a, b * P)


def test_non_cocycle_is_rejected():
    V = standard(sl2())
    # phi(e) sends v1 to h, which breaks the cocycle condition on (e, h)
    broken = (exact.sparse({2: {0: 1}}, (3, 2)), exact.zeros(3, 2), exact.zeros(3, 2))
    with pytest.raises(extend.CocycleError) as err:
        Cocycle(V, broken)
    assert err.value.defects
    unchecked = Cocycle(V, broken, check=False)
    with pytest.raises(extend.CocycleError):
        extend.twisted_module(unchecked)


def test_cocycle_needs_matching_shapes():
    with pytest.raises(extend.CocycleError):
        Cocycle(standard(sl2()), (exact.zeros(3, 2),))


def test_coboundaries_satisfy_both_steps():
    rng = np.random.default_rng(3)
    V = standard(sl2())
    verdict = extend.check_extension_constraints(Cocycle.zero(V))
    assert verdict.satisfiable and verdict.failed_step == 0
    phi = extend.gauge(Cocycle.zero(V), exact.random_matrix(rng, 3, 2))
    assert extend.check_extension_constraints(phi).satisfiable


def test_datum_rejects_brackets_with_h():
    V = standard(sl2())
    with pytest.raises(extend.ConstraintError):
        extend.ExtensionDatum.from_brackets(Cocycle.zero(V), ("u1", "u2"), ["[e, u1] = u2"])


def test_reconstruct_with_trivial_brackets_is_semidirect():
    V = standard(sl2())
    datum = extend.ExtensionDatum.from_brackets(Cocycle.zero(V), ("u1", "u2"), [])
    g = extend.reconstruct(datum)
    assert g.dim == 5
    assert liealg.jacobi_defect(g) == {}
    assert liealg.radical(g).dim == 2


@pytest.mark.parametrize(
    "name, counts",
    [
        ("sl3", {"total": 3, "horizontal": 2, "vertical": 1}),
        ("gl2", {"total": 7, "horizontal": 4, "vertical": 3}),
        ("sl2r2", {"total": 9, "horizontal": 7, "vertical": 2}),
        ("p1", {"total": 2, "horizontal": 2, "vertical": 0}),
    ],
)
def test_bracket_space_counts(name, counts):
    case = catalog.get_case(name)
    assert extend.bracket_space(case.module).counts() == counts


@pytest.mark.parametrize("l, counts", sorted(catalog.S2_COUNTS.items()))
def test_exceptional_l_bracket_counts(l, counts):
    case = catalog.s2_case(l)
    space = extend.bracket_space(case.module)
    assert (len(space.horizontal), len(space.vertical)) == counts


def test_g2_ideal_is_principal():
    case = catalog.sl3_case()
    ideal = extend.m_jacobi_ideal(case.datum("g2"))
    assert exact.same_ideal(ideal, [p("alpha1*alpha2 - 4/3*beta")])


def test_jacobi_split_separates_mixed_triples():
    case = catalog.sl3_case()
    g = extend.reconstruct(case.datum("g2").substitute({"beta": 0}))
    mixed, pure = extend.jacobi_split(g, 8)
    assert mixed == {}
    assert pure
    assert all(key[0] >= 8 for key in pure)


def test_printed_sl2r2_relation_lies_in_the_ideal():
    case = catalog.sl2r2_case()
    ideal = extend.m_jacobi_ideal(case.datum("sl2r2"))
    assert member(p("a1*a2"), ideal)


@pytest.mark.parametrize("l", ["0", "-3/10", "-3/4", "-3/2", "-1/2"])
def test_exceptional_l_ideals_contain_a1_a2(l):
    case = catalog.s2_case(l)
    ideal = extend.m_jacobi_ideal(case.datum(l))
    assert ideal
    assert member(p("a1*a2"), ideal)


def test_exceptional_l_classes_fail_the_first_step():
    rng = np.random.default_rng(11)
    case = catalog.s2_case("0")
    h1 = repthy.ce_cohomology(extend.hom_module(case.module), 1)
    assert h1.dim == 1
    phi = Cocycle.from_cochain(case.module, h1.representatives[0])
    verdict = extend.check_extension_constraints(phi)
    assert (verdict.satisfiable, verdict.failed_step) == (False, 1)
    moved = extend.gauge(phi, exact.random_matrix(rng, case.h.dim, case.module.dim))
    assert extend.check_extension_constraints(moved).failed_step == 1


def test_l32_cocycle_family():
    case = catalog.s2_case("3/2")
    phi = case.cocycle
    assert extend.cocycle_defects(phi) == {}
    assert phi.parameters() == ("c1", "c2", "c3", "c4", "c5", "c6")
    verdict = extend.check_extension_constraints(phi)
    assert verdict.satisfiable
    assert exact.same_ideal(verdict.step1, [p("c3"), p("c4"), p("c5"), p("c6")])
    assert exact.in_radical(p("c1*c2"), verdict.residual)
    assert not exact.in_radical(p("c1"), verdict.residual)


@pytest.mark.parametrize("family", ["c1", "c2"])
def test_l32_alpha_families_satisfy_jacobi(family):
    case = catalog.s2_case("3/2")
    datum = case.datum(family)
    assert datum.parameters() == ("alpha",)
    assert jacobi_values(datum) == []


def test_twisted_class_is_nontrivial_and_extends():
    case = catalog.sl2r2_twisted_case()
    phi = case.cocycle
    assert not repthy.is_coboundary(extend.hom_module(case.module), 1, phi.flat()).feasible
    assert extend.check_extension_constraints(phi).satisfiable


def test_twisted_jacobi_relations_and_family():
    case = catalog.sl2r2_twisted_case()
    datum = case.datum("twisted")
    values = jacobi_values(datum)
    family = case.families["twisted"]
    for relation in family.relations:
        assert member(p(relation), values)
    solved = datum.substitute(family.solutions["derived"])
    assert jacobi_values(solved) == []
    assert jacobi_values(datum.substitute(family.solutions["origin"])) == []


def test_gl2_families_solve_the_jacobi_identities():
    case = catalog.gl2_case()
    datum = case.datum("gl2")
    values = jacobi_values(datum)
    family = case.families["gl2"]
    for relation in family.relations:
        assert member(p(relation), values)
    main = {k: exact.parse_ratio(v) for k, v in family.solutions["main"].items()}
    assert all(exact.substitute_ratios(v, main)[0] == 0 for v in values)
    for name in ("nilpotent-v", "nilpotent-w", "point"):
        assert jacobi_values(datum.substitute(family.solutions[name])) == []
