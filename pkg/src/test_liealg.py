import numpy as np
import pytest

import catalog
import exact
import liealg
from exact import QQ
from liealg import LieAlgebra


def sl2():
    return LieAlgebra.from_brackets(
        ("e", "f", "h"), ["[h, e] = 2*e", "[h, f] = -2*f", "[e, f] = h"], "sl2"
    )


def sl3():
    matrices = []
    names = []
    for i in range(3):
        for j in range(3):
            if i != j:
                names.append(f"e{i + 1}{j + 1}")
                matrices.append(exact.sparse({i: {j: 1}}, (3, 3)))
    names += ["h1", "h2"]
    matrices += [exact.sparse({0: {0: 1}, 1: {1: -1}}, (3, 3)), exact.sparse({1: {1: 1}, 2: {2: -1}}, (3, 3))]
    return LieAlgebra.from_matrices(names, matrices, "sl3")


def two_dim():
    return LieAlgebra.from_brackets(("x", "y"), ["[x, y] = y"], "aff1")


def vec(*xs):
    return tuple(QQ(x) for x in xs)


def form(K, u, v):
    return sum(u[i] * exact.entry(K, i, j) * v[j] for i in range(len(u)) for j in range(len(v)))


def test_brackets_are_antisymmetric():
    L = sl2()
    assert L.coeffs(2, 0) == {0: 2}
    assert L.coeffs(0, 2) == {0: -2}
    assert L.coeffs(1, 1) == {}
    assert L.describe() == ["[e, f] = h", "[e, h] = -2*e", "[f, h] = 2*f"]


def test_nonlinear_bracket_text_is_rejected():
    with pytest.raises(liealg.LieAlgebraError):
        LieAlgebra.from_brackets(("x", "y"), ["[x, y] = x*y"])


def test_jacobi_defect():
    assert liealg.jacobi_defect(liealg.abelian(("x", "y", "z"))) == {}
    assert liealg.jacobi_defect(sl2()) == {}
    assert liealg.jacobi_defect(sl3()) == {}
    broken = LieAlgebra.from_brackets(("x", "y", "z"), ["[x, y] = z", "[y, z] = y"])
    assert liealg.jacobi_defect(broken) == {(0, 1, 2, 2): -1}
    family = LieAlgebra.from_brackets(("x", "y", "z"), ["[x, y] = z", "[y, z] = alpha*y"])
    assert liealg.jacobi_defect(family) == {(0, 1, 2, 2): -exact.parse_poly("alpha")}
    assert liealg.jacobi_defect(family.substitute({"alpha": 0})) == {}


def test_killing_form_of_sl2():
    K = liealg.killing_form(sl2())
    assert exact.rows_of(K) == [[0, 4, 0], [4, 0, 0], [0, 0, 8]]
    assert exact.signature(K) == (2, 1, 0)


def test_killing_form_of_abelian_is_zero():
    assert exact.is_zero(liealg.killing_form(liealg.abelian(("x", "y"))))


def test_killing_form_needs_constants():
    family = LieAlgebra.from_brackets(("x", "y"), ["[x, y] = a1*y"])
    with pytest.raises(liealg.LieAlgebraError):
        liealg.killing_form(family)


def test_killing_ad_invariance():
    rng = np.random.default_rng(4)
    algebras = [sl2(), sl3(), two_dim()] + [case.h for case in catalog.all_cases()]
    while len(algebras) < 60:
        algebras.append(catalog.s2_case(exact.random_rational(rng)).h)
    for L in algebras:
        K = liealg.killing_form(L)
        for _ in range(3):
            x, y, z = (tuple(exact.random_rational(rng) for _ in range(L.dim)) for _ in range(3))
            xy = tuple(exact.ground(c) for c in L.bracket(x, y))
            xz = tuple(exact.ground(c) for c in L.bracket(x, z))
            assert form(K, xy, z) + form(K, y, xz) == 0, L.name


def test_identify_simple():
    ident = liealg.identify_simple(sl2())
    assert (ident.label, ident.dim, ident.signature, ident.rank) == ("other", 3, (2, 1), 1)
    ident = liealg.identify_simple(sl3())
    assert (ident.label, ident.signature, ident.rank) == ("sl3_R", (5, 3), 2)
    with pytest.raises(liealg.NotSemisimpleError):
        liealg.identify_simple(two_dim())


def test_identification_survives_change_of_basis():
    rng = np.random.default_rng(5)
    L = sl3()
    for _ in range(3):
        s = exact.random_unimodular(rng, L.dim)
        vectors = [tuple(row) for row in exact.rows_of(s)]
        conjugated = L.change_basis(vectors, tuple(f"y{i}" for i in range(L.dim)))
        assert liealg.jacobi_defect(conjugated) == {}
        assert liealg.identify_simple(conjugated, seed=1).label == "sl3_R"


def test_derived_and_radical():
    L = liealg.abelian(("x", "y", "z"))
    assert liealg.derived_subalgebra(L).dim == 0
    assert liealg.radical(L).dim == 3
    assert liealg.derived_subalgebra(sl2()).dim == 3
    assert liealg.radical(sl2()).dim == 0
    assert liealg.radical(sl3()).dim == 0
    A = two_dim()
    assert liealg.derived_subalgebra(A).span == (vec(0, 1),)
    assert liealg.radical(A).dim == 2


def test_radical_is_an_ideal():
    # sl2 + a trivially acting line
    L = LieAlgebra.from_brackets(
        ("e", "f", "h", "z"), ["[h, e] = 2*e", "[h, f] = -2*f", "[e, f] = h"]
    )
    rad = liealg.radical(L)
    assert rad.span == (vec(0, 0, 0, 1),)
    assert liealg.is_ideal(L, rad.span)


def test_subalgebra_checks():
    L = sl2()
    e, f, h = vec(1, 0, 0), vec(0, 1, 0), vec(0, 0, 1)
    assert liealg.is_subalgebra(L, [e])
    assert liealg.is_subalgebra(L, [e, h])
    assert not liealg.is_subalgebra(L, [e, f])
    with pytest.raises(liealg.LieAlgebraError):
        liealg.is_subalgebra(L, [e, vec(2, 0, 0)])
    with pytest.raises(liealg.LieAlgebraError):
        liealg.Subalgebra(L, (e, f))
    borel = liealg.Subalgebra(L, (e, h)).as_algebra(("e", "h"))
    assert borel.coeffs(0, 1) == {0: -2}


def test_centralizer_and_ideals():
    L = sl2()
    assert liealg.centralizer(L, vec(0, 0, 1)).span == (vec(0, 0, 1),)
    assert not liealg.is_ideal(L, [vec(1, 0, 0)])
    assert liealg.is_ideal(two_dim(), [vec(0, 1)])
    assert liealg.bracket_of_spans(L, [vec(1, 0, 0)], [vec(0, 1, 0)]) == [vec(0, 0, 1)]


def test_json_round_trip():
    L = LieAlgebra.from_brackets(("x", "y", "z"), ["[x, y] = alpha*z - 1/2*y"])
    data = L.to_json()
    assert data["brackets"] == [{"i": 0, "j": 1, "coeffs": {"y": "-1/2", "z": exact.poly_to_json(exact.parse_poly("alpha"))}}]
    assert LieAlgebra.from_json(data).table == L.table
