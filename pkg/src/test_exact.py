import numpy as np
import pytest
from sympy import groebner, symbols

import exact
from exact import QQ


def p(text):
    return exact.parse_poly(text)


def random_poly(rng, names=("a1", "a2", "a3"), terms=4):
    out = exact.PARAMS.zero
    for _ in range(terms):
        term = exact.PARAMS(exact.random_rational(rng))
        for name in names:
            term *= exact.PARAM_GENS[name] ** int(rng.integers(0, 3))
        out += term
    return out


def test_kernel_trivial_cases():
    assert exact.kernel(exact.identity(3)) == []
    basis = exact.kernel(exact.zeros(2, 3))
    assert len(basis) == 3
    assert exact.rank(exact.matrix(basis)) == 3


def test_kernel_rejects_parametric():
    m = exact.matrix([[p("a1"), 1], [0, 1]])
    with pytest.raises(exact.ParametricMatrixError):
        exact.kernel(m)


def test_rank_nullity_on_random_matrices():
    rng = np.random.default_rng(0)
    for _ in range(200):
        rows, cols = (int(x) for x in rng.integers(1, 7, size=2))
        m = exact.random_matrix(rng, rows, cols, bound=2)
        basis = exact.kernel(m)
        assert exact.rank(m) + len(basis) == cols
        for v in basis:
            assert not any(exact.apply(m, v))


def test_signature_examples():
    assert exact.signature(exact.identity(3)) == (3, 0, 0)
    assert exact.signature(exact.matrix([[1, 0, 0], [0, -2, 0], [0, 0, 0]])) == (1, 1, 1)
    # zero diagonal forces the pair congruence step
    assert exact.signature(exact.matrix([[0, 1], [1, 0]])) == (1, 1, 0)


def test_signature_rejects_nonsymmetric():
    with pytest.raises(exact.NotSymmetricError):
        exact.signature(exact.matrix([[0, 1], [0, 0]]))


def test_signature_congruence_invariance():
    rng = np.random.default_rng(1)
    for _ in range(30):
        n = int(rng.integers(2, 6))
        m = exact.random_matrix(rng, n, n)
        a = m + m.transpose()
        s = exact.random_unimodular(rng, n)
        assert exact.determinant(s) == 1
        assert exact.signature(s.transpose() * a * s) == exact.signature(a)


def test_solve_affine_trivial_cases():
    solution = exact.solve_affine(exact.identity(3), (QQ(1), QQ(2), QQ(-1, 3)))
    assert solution.feasible
    assert solution.particular == (QQ(1), QQ(2), QQ(-1, 3))
    assert solution.homogeneous == ()

    solution = exact.solve_affine(exact.zeros(2, 2), (QQ(1), QQ(0)))
    assert not solution.feasible
    assert solution.certificate[0] != 0


def test_solve_affine_solutions_are_exact():
    rng = np.random.default_rng(2)
    for _ in range(40):
        m = exact.random_matrix(rng, 3, 5)
        x0 = tuple(exact.random_rational(rng) for _ in range(5))
        rhs = exact.apply(m, x0)
        solution = exact.solve_affine(m, rhs)
        assert solution.feasible
        assert exact.apply(m, solution.particular) == rhs
        for h in solution.homogeneous:
            assert not any(exact.apply(m, h))
        assert len(solution.homogeneous) == 5 - exact.rank(m)


def test_buchberger_small_ideals():
    gb = exact.buchberger([p("a1*a2")])
    assert [exact.to_params(g) for g in gb.polys] == [p("a1*a2")]

    gb = exact.buchberger([p("a1**2 - 1"), p("a1*a2 - a2")])
    assert {exact.to_params(g) for g in gb.polys} == {p("a1**2 - 1"), p("a1*a2 - a2")}
    assert gb.contains(p("a2*(a1 - 1)"))
    assert not gb.contains(p("a2"))
    assert exact.is_groebner(list(gb.polys))


def test_buchberger_agrees_with_sympy():
    a1, a2, a3 = symbols("a1 a2 a3")
    gens = [a1**2 * a2 - a3, a1 * a2**2 - a1, a3**2 - a2]
    expected = groebner(gens, a1, a2, a3, order="grevlex")
    gb = exact.buchberger([exact.PARAMS.from_expr(g) for g in gens])
    assert {g.as_expr() for g in gb.polys} == set(expected.exprs)


def test_buchberger_cap_is_named():
    limits = exact.GroebnerLimits(max_variables=1)
    with pytest.raises(exact.ResourceCapError) as err:
        exact.buchberger([p("a1*a2")], limits=limits)
    assert err.value.cap == "max_variables"


def test_reduce_examples():
    assert not exact.reduce(p("a1*a2"), [p("a1")])
    assert exact.reduce(exact.PARAMS.one, [p("a1")]) == 1
    gb = exact.buchberger([p("a1**2 - a2"), p("a2**2 - 1")])
    r = exact.reduce(p("a1**5 + a2"), gb)
    assert exact.reduce(r, gb) == r


def test_ideal_helpers():
    assert exact.same_ideal([p("a1"), p("a2")], [p("a1 + a2"), p("a1 - a2")])
    assert not exact.same_ideal([p("a1")], [p("a1**2")])
    assert exact.in_radical(p("c1*c2"), [p("c1**2*c2**2")])
    assert not exact.in_radical(p("a1"), [p("a1*a2")])


def test_scalar_json():
    assert exact.scalar_to_json(QQ(-3, 10)) == "-3/10"
    assert exact.scalar_to_json(4) == "4/1"
    assert exact.scalar_from_json("-3/10") == QQ(-3, 10)


def test_poly_json():
    data = exact.poly_to_json(p("3*a7**2 - 1/2*a5"))
    assert data["vars"] == ["a5", "a7"]
    assert {(tuple(t["exp"]), t["coef"]) for t in data["terms"]} == {((0, 2), "3/1"), ((1, 0), "-1/2")}
    assert exact.poly_from_json(data) == p("3*a7**2 - 1/2*a5")
    assert exact.value_to_json(exact.PARAMS(QQ(2, 3))) == "2/3"


def test_polynomial_ring_laws_and_substitution():
    rng = np.random.default_rng(3)
    for _ in range(25):
        f, g, h = (random_poly(rng) for _ in range(3))
        assert (f + g) * h == f * h + g * h
        bindings = {"a1": random_poly(rng, ("a2", "a4"), 2), "a3": random_poly(rng, ("a5",), 2)}
        assert exact.substitute(f * g, bindings) == exact.substitute(f, bindings) * exact.substitute(g, bindings)
        assert exact.substitute(f + g, bindings) == exact.substitute(f, bindings) + exact.substitute(g, bindings)


def test_substitute_ratios():
    numer, denom = exact.substitute_ratios(p("a1*a2 + a2"), {"a1": (p("a3"), p("a4"))})
    assert numer == p("a3*a2 + a2*a4")
    assert denom == p("a4")


def test_variables_of_uses_natural_order():
    assert exact.variables_of([p("a9*a2 + c1"), p("b3")]) == ("a2", "a9", "b3", "c1")
