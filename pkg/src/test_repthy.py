import numpy as np
import pytest

import catalog
import exact
import liealg
import repthy
from exact import QQ
from liealg import LieAlgebra
from repthy import Representation


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


def vec(*xs):
    return tuple(QQ(x) for x in xs)


def test_adjoint_is_a_representation():
    L = sl2()
    ad = repthy.adjoint(L)
    assert ad.dim == 3
    assert ad.homomorphism_defects() == []


def test_broken_action_reports_defects():
    L = sl2()
    with pytest.raises(repthy.RepresentationError) as err:
        Representation(
            L,
            (
                exact.matrix([[0, 1], [0, 0]]),
                exact.matrix([[0, 0], [1, 0]]),
                exact.matrix([[2, 0], [0, -2]]),
            ),
        )
    assert (0, 1) in err.value.defects


def test_wrong_number_of_matrices():
    with pytest.raises(repthy.RepresentationError):
        Representation(sl2(), (exact.identity(2),))


def test_functors_give_representations():
    L = sl2()
    V, ad = standard(L), repthy.adjoint(L)
    built = [
        repthy.dual(V),
        repthy.tensor(V, ad),
        repthy.hom(V, ad),
        repthy.direct_sum(V, ad),
        repthy.exterior(ad, 2),
        repthy.sym2(V),
    ]
    assert [r.dim for r in built] == [2, 6, 6, 5, 3, 3]
    for r in built:
        # re-running the check validates the homomorphism property
        Representation(L, r.matrices)


def test_top_exterior_power_of_adjoint_is_trivial():
    top = repthy.exterior(repthy.adjoint(sl2()), 3)
    assert top.dim == 1
    assert all(exact.is_zero(m) for m in top.matrices)


def test_invariants():
    L = sl2()
    assert len(repthy.invariants(repthy.trivial(L, 2))) == 2
    assert repthy.invariants(repthy.adjoint(L)) == []
    # the Killing form spans the invariant quadratic forms
    killing = repthy.invariants(repthy.sym2(repthy.dual(repthy.adjoint(L))))
    assert len(killing) == 1


def test_equivariant_maps_of_standard_module():
    V = standard(sl2())
    maps = repthy.equivariant_maps(V, V)
    assert len(maps) == 1
    (m,) = maps
    assert exact.entry(m, 0, 1) == 0 and exact.entry(m, 1, 0) == 0
    assert exact.entry(m, 0, 0) == exact.entry(m, 1, 1) != 0
    assert repthy.equivariant_maps(V, repthy.adjoint(sl2())) == []


def test_functors_accept_equal_algebras_built_twice():
    V, ad = standard(sl2()), repthy.adjoint(sl2())
    assert V.algebra is not ad.algebra
    assert repthy.hom(V, ad).dim == 6
    other = repthy.trivial(liealg.abelian(("e", "f", "h")))
    with pytest.raises(repthy.RepresentationError):
        repthy.tensor(V, other)


def test_differential_squares_to_zero():
    family = LieAlgebra.from_brackets(("x", "y"), ["[x, y] = a1*y"], "aff")
    for r in (repthy.adjoint(sl2()), standard(sl2()), repthy.adjoint(family)):
        d0, d1 = repthy.differential(r, 0), repthy.differential(r, 1)
        assert exact.is_zero(d1 * d0)
    r = repthy.adjoint(sl2())
    assert exact.is_zero(repthy.differential(r, 2) * repthy.differential(r, 1))
    with pytest.raises(ValueError):
        repthy.differential(r, 3)


def test_differential_squares_to_zero_on_conjugated_catalog_modules():
    rng = np.random.default_rng(9)
    modules = [case.module for case in catalog.all_cases() if case.module is not None]
    for _ in range(50):
        module = modules[int(rng.integers(len(modules)))]
        P = exact.random_unimodular(rng, module.dim)
        Pinv = P.inv()
        moved = Representation(
            module.algebra, tuple(Pinv * exact.to_scalar(m).to_dense() * P for m in module.matrices)
        )
        d0, d1, d2 = (repthy.differential(moved, k) for k in range(3))
        assert exact.is_zero(d1 * d0)
        assert exact.is_zero(d2 * d1)


def test_cohomology_of_sl2_vanishes():
    L = sl2()
    for r in (repthy.adjoint(L), standard(L), repthy.trivial(L)):
        h1 = repthy.ce_cohomology(r, 1)
        assert h1.dim == 0
        assert h1.representatives == ()
    h1 = repthy.ce_cohomology(repthy.adjoint(L), 1)
    assert (h1.cocycle_dim, h1.coboundary_dim) == (3, 3)
    assert repthy.ce_cohomology(repthy.adjoint(L), 2).dim == 0


def test_cohomology_of_abelian_plane():
    r = repthy.trivial(liealg.abelian(("x", "y")))
    assert repthy.ce_cohomology(r, 1).dim == 2
    h2 = repthy.ce_cohomology(r, 2)
    assert h2.dim == 1
    (c,) = h2.representatives
    assert c.value(1, 0) == tuple(-x for x in c.value(0, 1))
    assert c.value(0, 0) == (QQ(0),)


def test_cohomology_of_affine_line():
    r = repthy.trivial(LieAlgebra.from_brackets(("x", "y"), ["[x, y] = y"]))
    h1 = repthy.ce_cohomology(r, 1)
    assert h1.dim == 1
    (c,) = h1.representatives
    assert c.value(1) == (QQ(0),)
    assert repthy.ce_cohomology(r, 2).dim == 0
    assert h1.to_json() == {"degree": 1, "dim": 1, "cocycles": 1, "coboundaries": 0}


def test_is_coboundary():
    r = repthy.adjoint(sl2())
    cochain = exact.apply(repthy.differential(r, 0), vec(1, 0, 0))
    assert repthy.is_coboundary(r, 1, cochain).feasible
    z = repthy.trivial(liealg.abelian(("x", "y")))
    assert not repthy.is_coboundary(z, 1, vec(1, 0)).feasible


def test_restriction_to_borel():
    L = sl2()
    borel = liealg.Subalgebra(L, (vec(1, 0, 0), vec(0, 0, 1)))
    r = repthy.restrict(repthy.adjoint(L), borel, ("e", "h"))
    Representation(r.algebra, r.matrices)
    found = repthy.invariant_lines(r)
    assert found.lines == (vec(1, 0, 0),)
    assert found.families == ()
    assert found.undecided == ()


def test_invariant_lines_of_standard_borel():
    A = LieAlgebra.from_brackets(("e", "h"), ["[h, e] = 2*e"])
    r = Representation(A, (exact.matrix([[0, 1], [0, 0]]), exact.matrix([[1, 0], [0, -1]])))
    assert repthy.invariant_lines(r).lines == (vec(1, 0),)


def test_invariant_lines_with_a_plane_of_eigenvectors():
    A = liealg.abelian(("x",))
    r = Representation(A, (exact.matrix([[1, 0, 0], [0, 1, 0], [0, 0, 2]]),))
    found = repthy.invariant_lines(r)
    assert found.lines == (vec(0, 0, 1),)
    assert found.families == ((vec(1, 0, 0), vec(0, 1, 0)),)
    assert found.to_json()["lines"] == [["0/1", "0/1", "1/1"]]


def test_invariant_lines_branch_on_every_rational_root():
    A = liealg.abelian(("x",))
    swap = Representation(A, (exact.matrix([[0, 1], [1, 0]]),))
    found = repthy.invariant_lines(swap)
    assert set(found.lines) == {vec(1, 1), vec(1, -1)}
    assert found.families == ()
    assert found.undecided == ()


def test_invariant_lines_on_two_planes():
    # eigenvalue 1 on span(e1, e2) and 2 on span(e3, e4)
    A = liealg.abelian(("x",))
    r = Representation(A, (exact.matrix([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 2, 0], [0, 0, 0, 2]]),))
    found = repthy.invariant_lines(r)
    assert found.undecided == ()
    spans = {tuple(exact.span_basis(list(f), 4)) for f in found.families}
    assert spans == {
        tuple(exact.span_basis([vec(1, 0, 0, 0), vec(0, 1, 0, 0)], 4)),
        tuple(exact.span_basis([vec(0, 0, 1, 0), vec(0, 0, 0, 1)], 4)),
    }


def test_irrational_lines_are_omitted():
    A = liealg.abelian(("x",))
    r = Representation(A, (exact.matrix([[0, 2], [1, 0]]),))
    with pytest.warns(RuntimeWarning):
        found = repthy.invariant_lines(r)
    assert found.lines == () and found.undecided == ()


def test_scalar_action_fixes_every_line():
    assert repthy.invariant_lines(repthy.trivial(sl2(), 3)).everything
    A = liealg.abelian(("x",))
    r = Representation(A, (exact.matrix([[2, 0], [0, 2]]),))
    assert repthy.invariant_lines(r).to_json() == {"lines": "all"}


def test_substitute_specializes_a_family():
    A = liealg.abelian(("x",))
    r = Representation(A, (exact.matrix([["a1", 1], [0, 0]]),))
    assert not r.is_scalar
    nilpotent = r.substitute({"a1": 0})
    assert nilpotent.is_scalar
    assert repthy.invariant_lines(nilpotent).lines == (vec(1, 0),)


def test_json_round_trip():
    L = sl2()
    V = standard(L)
    back = repthy.from_json(V.to_json(), L)
    assert all(exact.same_matrix(a, b) for a, b in zip(V.matrices, back.matrices))
