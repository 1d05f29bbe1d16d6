"""
Every case as exact data.

Subalgebras ``h`` of ``sl3`` come with explicit 3x3 realizations; ``m = V + V*`` is
always the restriction of the standard action (``X`` on ``V``, ``-X^T`` on ``V*``).
Bracket families keep the parameter names of the source tables (``a1..``, ``b1..``,
``c1..``, ``alpha``) so that reports can be read against them line by line.

Expected values live in ``CatalogCase.expected`` and are only ever compared with, never
fed into a computation.
"""

from dataclasses import dataclass, field
from functools import cached_property

import exact
import geometry
import liealg
import repthy
from exact import QQ
from extend import Cocycle, ExtensionDatum, reconstruct
from liealg import LieAlgebra
from repthy import Representation


class UnknownCaseError(ValueError):
    pass


## Realizations


def E(i, j):
    """Elementary 3x3 matrix, 1-indexed."""
    return exact.sparse({i - 1: {j - 1: 1}}, (3, 3)).to_dense()


def diag(*xs):
    return exact.sparse({i: {i: x} for i, x in enumerate(xs)}, (3, 3)).to_dense()


SL3_NAMES = ("e12", "e13", "e21", "e23", "e31", "e32", "h1", "h2")
SL3_MATRICES = (
    E(1, 2), E(1, 3), E(2, 1), E(2, 3), E(3, 1), E(3, 2), diag(1, -1, 0), diag(0, 1, -1),
)
GRADING = diag(2, -1, -1)


def sl3():
    return LieAlgebra.from_matrices(SL3_NAMES, SL3_MATRICES, "sl3")


def _flat(m):
    return tuple(x for row in exact.rows_of(m) for x in row)


def sl3_coordinates(m):
    """Coordinates of a traceless 3x3 matrix in the ``SL3_NAMES`` basis."""
    coords = exact.coordinates(_flat(m), [_flat(b) for b in SL3_MATRICES])
    if coords is None:
        raise UnknownCaseError("matrix is not in sl3")
    return coords


def standard_module(h, matrices):
    """``V + V*`` restricted to ``h``."""
    return Representation(
        h, tuple(exact.block_diag(X, -X.transpose()) for X in matrices), "V + V*"
    )


def killing_norm(m):
    """``K(X, X) = 6 tr(X^2)`` on ``sl3``."""
    return 6 * exact.trace(m * m)


## Case records


@dataclass(frozen=True)
class Expected:
    operation: str
    item: str
    value: object
    citation: str

    def to_json(self):
        return {"operation": self.operation, "item": self.item, "value": self.value,
                "citation": self.citation}


@dataclass(frozen=True, eq=False)
class Family:
    """A bracket family on ``m`` with named solutions.

    ``solutions`` maps a name to ``{parameter: text}``; texts may be rational functions
    (``"a3*a2/a4"``). ``relations`` are polynomials expected in the Jacobi ideal.
    """

    lines: tuple
    solutions: dict = field(default_factory=dict)
    relations: tuple = ()
    printed: tuple = ()
    cocycle_bindings: dict = field(default_factory=dict)


@dataclass(frozen=True, eq=False)
class CatalogCase:
    name: str
    label: str
    h: LieAlgebra
    embedding: tuple = ()
    m_names: tuple = ()
    cocycle: object = None
    families: dict = field(default_factory=dict)
    expected: tuple = ()
    params: dict = field(default_factory=dict)
    model: object = None
    notes: str = ""

    @cached_property
    def module(self):
        if not self.embedding:
            return None
        return standard_module(self.h, self.embedding)

    def embedding_span(self):
        return tuple(sl3_coordinates(m) for m in self.embedding)

    def expected_for(self, operation):
        return [e for e in self.expected if e.operation == operation]

    def datum(self, family):
        """The extension datum of one bracket family (free parameters)."""
        fam = self.families[family]
        cocycle = self.cocycle if self.cocycle is not None else Cocycle.zero(self.module)
        if fam.cocycle_bindings:
            cocycle = cocycle.substitute(fam.cocycle_bindings)
        return ExtensionDatum.from_brackets(cocycle, self.m_names, fam.lines, f"{self.name}:{family}")

    def to_json(self):
        return {
            "name": self.name,
            "label": self.label,
            "params": {k: exact.scalar_to_json(v) for k, v in self.params.items()},
            "h": self.h.to_json(),
            "embedding": [[[exact.scalar_to_json(x) for x in row] for row in exact.rows_of(m)]
                          for m in self.embedding],
            "module": self.module.to_json() if self.module is not None else None,
            "cocycle": self.cocycle.to_json() if self.cocycle is not None else None,
            "families": {
                name: {"lines": list(f.lines), "solutions": f.solutions,
                       "relations": list(f.relations), "printed": list(f.printed)}
                for name, f in self.families.items()
            },
            "expected": [e.to_json() for e in self.expected],
        }


def _subalgebra(names, matrices, label):
    return LieAlgebra.from_matrices(names, matrices, label)


def _cases_with(name, label, names, matrices, expected, **kwargs):
    h = _subalgebra(names, matrices, label)
    return CatalogCase(name, label, h, tuple(matrices), expected=tuple(expected), **kwargs)


VW_NAMES = ("v1", "v2", "v3", "w1", "w2", "w3")

NO_COHOMOLOGY = "H^1(h, Hom(m,h)) = 0 for p1, p12, (Rz+b2)xR, gl2 and all (Rz+Rt)xR2"
ONLY_INVARIANT = "B(h,g) = (Lambda^2 m* (x) m)^sl3, dim B(h,g) = 2"


def _split_case(name, label, names, matrices, extra=()):
    expected = [
        Expected("cohomology", "h1", 0, NO_COHOMOLOGY),
        Expected("brackets", "counts", {"total": 2, "horizontal": 2, "vertical": 0}, ONLY_INVARIANT),
        *extra,
    ]
    return _cases_with(name, label, names, matrices, expected, m_names=VW_NAMES)


## sl3 and the maximal model


def _g2_lines():
    eps = {(0, 1): (2, 1), (0, 2): (1, -1), (1, 2): (0, 1)}
    lines = []
    for (i, j), (k, sign) in eps.items():
        s = "" if sign > 0 else "-"
        lines.append(f"[v{i + 1}, v{j + 1}] = {s}alpha1*th{k + 1}")
        lines.append(f"[th{i + 1}, th{j + 1}] = {s}alpha2*v{k + 1}")
    traceless = {1: "2/3*h1 + 1/3*h2", 2: "-1/3*h1 + 1/3*h2", 3: "-1/3*h1 - 2/3*h2"}
    for j in range(1, 4):
        for i in range(1, 4):
            # [th_i, v_j] = beta * (E_ji - delta_ij / 3)
            value = traceless[i] if i == j else f"e{j}{i}"
            lines.append(f"[v{j}, th{i}] = -beta*({value})")
    return tuple(lines)


G2_NAMES = ("v1", "v2", "v3", "th1", "th2", "th3")


def sl3_case():
    family = Family(
        _g2_lines(),
        solutions={
            "g2": {"alpha1": "2", "alpha2": "2", "beta": "3"},
            "nilpotent-1": {"beta": "0", "alpha1": "0"},
            "nilpotent-2": {"beta": "0", "alpha2": "0"},
        },
        relations=("alpha1*alpha2 - 4/3*beta",),
        printed=("alpha1*alpha2 - 4/3*beta",),
    )
    expected = (
        Expected("cohomology", "h1", 0, "h = sl3 is semisimple, g = h + m as an h-module"),
        Expected("brackets", "counts", {"total": 3, "horizontal": 2, "vertical": 1},
                 "horizontal and vertical brackets are 2 and 1"),
        Expected("jacobi", "ideal", ["alpha1*alpha2 - 4/3*beta"],
                 "Jac(v1,v2,th1) = alpha1 alpha2 v2 - 4/3 beta v2 yields beta = 3/4 alpha1 alpha2"),
        Expected("jacobi", "nilpotent-1", {"ideal": True, "two_step": True},
                 "beta = alpha1 = 0, m is a two-step nilpotent ideal"),
        Expected("jacobi", "nilpotent-2", {"ideal": True, "two_step": True},
                 "beta = alpha2 = 0, m is a two-step nilpotent ideal"),
        Expected("identify", "g2", {"dim": 14, "signature": [8, 6], "rank": 2, "label": "g2_split"},
                 "normalized alpha1 = alpha2 = 2, beta = 3, g is isomorphic to g2*"),
    )
    return CatalogCase("sl3", "sl3", sl3(), SL3_MATRICES, G2_NAMES, families={"g2": family},
                       expected=expected)


## Parabolics and their subalgebras


P1_NAMES = ("h1", "h2", "e12", "e13", "e23", "e32")
P1_MATRICES = (diag(1, -1, 0), diag(0, 1, -1), E(1, 2), E(1, 3), E(2, 3), E(3, 2))


def p1_case():
    # stabilizer of the line through the first basis vector
    subspaces = Expected("brackets", "subspaces", None,
                         "m has no invariant subspace of dimension 4 or 5")
    return _split_case("p1", "p1", P1_NAMES, P1_MATRICES, (subspaces,))


def p2_case():
    matrices = tuple(-m.transpose() for m in P1_MATRICES)
    names = ("h1", "h2", "e21", "e31", "e32", "e23")
    case = _split_case("p2", "p2", names, matrices)
    return CatalogCase(case.name, case.label, case.h, case.embedding, case.m_names,
                       expected=case.expected,
                       notes="image of p1 under the outer automorphism X -> -X^T")


def p12_case():
    names = ("z", "h", "e", "x1", "x2")
    matrices = (GRADING, diag(0, 1, -1), E(2, 3), E(1, 2), E(1, 3))
    return _split_case("p12", "(Rz+b2)xR2", names, matrices)


def zt_case(sign):
    t = {"neg": E(2, 3) - E(3, 2), "null": E(2, 3), "pos": diag(0, 1, -1)}[sign]
    value = {"neg": -1, "null": 0, "pos": 1}[sign]
    extra = (
        Expected("identify", "killing_sign_t", value, "(Rz+Rt)xR2 with ||t|| <0, =0, >0"),
    )
    return _split_case(f"zt-{sign}", "(Rz+Rt)xR2", ("z", "t", "x1", "x2"),
                       (GRADING, t, E(1, 2), E(1, 3)), extra)


def zb2r_case():
    # b2 = <h, e> fixes the line spanned by E13 in the ideal <E12, E13>
    return _split_case("zb2r", "(Rz+b2)xR", ("z", "h", "e", "x"),
                       (GRADING, diag(0, 1, -1), E(2, 3), E(1, 3)))


## gl2 and the submaximal model


GL2_NAMES = ("v1", "v2", "r", "th1", "th2", "vs")
GL2_LINES = (
    "[v1, v2] = a1*vs",
    "[v1, r] = -a3*th2",
    "[v2, r] = a3*th1",
    "[r, vs] = b1*s",
    "[v1, th1] = -b2*h + b3*s",
    "[v1, th2] = -2*b2*e",
    "[v2, th1] = -2*b2*f",
    "[v2, th2] = b2*h + b3*s",
    "[th1, th2] = a2*r",
    "[th1, vs] = -a4*v2",
    "[th2, vs] = a4*v1",
)
GL2_POINT = {"a1": "1", "a2": "1", "a3": "1", "a4": "1", "b1": "1", "b2": "1/2", "b3": "-1/2"}


def gl2_case():
    family = Family(
        GL2_LINES,
        solutions={
            "main": {"a1": "a3*a2/a4", "b1": "a3*a4", "b2": "a3*a2/2", "b3": "-a3*a2/2"},
            "nilpotent-v": {"a2": "0", "a4": "0", "b1": "0", "b2": "0", "b3": "0"},
            "nilpotent-w": {"a1": "0", "a3": "0", "b1": "0", "b2": "0", "b3": "0"},
            "point": GL2_POINT,
        },
        relations=("b1 - a3*a4", "a1*a4 - 3*b2 - b3", "a2*a3 - 3*b2 - b3"),
    )
    cite = "three families, the first two nilpotent, the last with a1 = a3 a2 / a4"
    expected = (
        Expected("cohomology", "h1", 0, NO_COHOMOLOGY),
        Expected("brackets", "counts", {"total": 7, "horizontal": 4, "vertical": 3},
                 "dim B(h,g) = 7, 4 horizontal and 3 vertical"),
        Expected("jacobi", "relations", list(family.relations),
                 "Jacobi identities give b1 = a3 a4 and a1 a4 = a2 a3 = 3 b2 + b3"),
        Expected("jacobi", "main", True, cite),
        Expected("jacobi", "nilpotent-v", True, cite),
        Expected("jacobi", "nilpotent-w", True, cite),
        Expected("identify", "point", {"dim": 10, "signature": [6, 4], "rank": 2,
                                        "label": "sp4_R/so23 class"},
                 "signature of the Killing form is (6,4), g = sp(4,R)"),
        Expected("geometry", "nondegenerate", {"point": True, "nilpotent-v": False, "nilpotent-w": False},
                 "non-degenerate J on the main family; one distribution has vanishing curvature"),
    )
    names = ("s", "h", "e", "f")
    matrices = (diag(1, 1, -2), diag(1, -1, 0), E(1, 2), E(2, 1))
    return _cases_with("gl2", "gl2", names, matrices, expected, m_names=GL2_NAMES,
                       families={"gl2": family})


## sl2 x R2


SL2R2_LINES = (
    "[v1, v2] = a1*w3",
    "[v1, v3] = -a1*w2",
    "[v2, v3] = a4*v1 + a1*w1",
    "[v2, w2] = a6*v1",
    "[w2, w3] = a2*v1",
    "[v1, w1] = (a7 + a6)*v1",
    "[v2, w1] = b1*x2 + a3*w3 + a7*v2",
    "[v3, w1] = -b1*x1 - a3*w2 + a7*v3",
    "[v3, w3] = a6*v1",
    "[w1, w2] = b2*x1 + a5*w2 + a2*v3",
    "[w1, w3] = b2*x2 + a5*w3 - a2*v2",
)


def sl2r2_case():
    # x1 = E12, x2 = E13 span the ideal; sl2 acts on the last two coordinates
    names = ("e", "f", "h", "x1", "x2")
    matrices = (E(2, 3), E(3, 2), diag(0, 1, -1), E(1, 2), E(1, 3))
    family = Family(SL2R2_LINES, relations=("a1*a2",), printed=("a1*a2",))
    expected = (
        Expected("cohomology", "h1", 1, "dim H^1(h, Hom(m,h)) = 1 for sl2 x R2"),
        Expected("brackets", "counts", {"total": 9, "horizontal": 7, "vertical": 2},
                 "dim B(h,g) = 9, 7 horizontal and 2 vertical"),
        Expected("jacobi", "sl2r2", ["a1*a2"], "Jac(v2,w2,w3) = a1 a2 w3"),
        Expected("brackets", "subspaces", {"dual_lines": 1, "dual_families": 0},
                 "unique 5-dimensional invariant subspace o = U + Delta-"),
    )
    return _cases_with("sl2r2", "sl2xR2", names, matrices, expected, m_names=VW_NAMES,
                       families={"sl2r2": family})


TWISTED_LINES = (
    "[v1, v3] = a1*x1 + a2*v1",
    "[v1, w1] = -2/3*v3 - a7*w3 + a7*h",
    "[v1, w2] = 2*a7*e",
    "[v1, w3] = 1/3*v1 + 2*a7*x1",
    "[v2, v3] = a1*x2 + a2*v2",
    "[v2, w1] = 2*a7*f",
    "[v2, w2] = -2/3*v3 - a7*w3 - a7*h",
    "[v2, w3] = 1/3*v2 + 2*a7*x2",
    "[v3, w1] = -a3*x2 - a4*v2 + 3*a7*w1",
    "[v3, w2] = a3*x1 + a4*v1 + 3*a7*w2",
    "[v3, w3] = -2/3*v3 + 2*a7*w3",
    "[w1, w2] = a5*v3 + a6*w3",
    "[w1, w3] = -a5*v2 - a6*x2 - w1",
    "[w2, w3] = a5*v1 + a6*x1 - w2",
)
TWISTED_PRINTED = (
    "3*a2 - 4*a7",
    "a7**2 + 3*a1",
    "3*a5*a7 + 2*a4 + a6",
    "a1*a4 + 2*a1*a6 + a3*a7",
    "a4*a7 + 2*a6*a7 - 3*a3",
    "6*a1*a5 - a4*a7 - a3",
    "9*a3*a5 + 2*a4**2 + 5*a4*a6 + 2*a6**2",
)
TWISTED_RELATIONS = (
    "a2 - 4*a7",
    "a1 + 3*a7**2",
    "a3 + a4*a7 + 2*a6*a7",
    "2*a4 + 9*a5*a7 + a6",
)
TWISTED_SOLUTIONS = {
    "derived": {
        "a1": "-3*a7**2",
        "a2": "4*a7",
        "a3": "9/2*a5*a7**2 - 3/2*a6*a7",
        "a4": "-9/2*a5*a7 - 1/2*a6",
    },
    "printed": {
        "a1": "3*a7**2",
        "a2": "4*a7",
        "a3": "-3/10*a6*a7**2 + 3/4*a5*a7",
        "a4": "-3/5*a7*a6 - 1/2*a5",
    },
    "origin": {f"a{i}": "0" for i in range(1, 8)},
}
# Levi factor and radical at a5 = a6 = a7 = 0 (coordinates in the basis h + m)
TWISTED_LEVI = ("e", "f", "h", "x1", "x2", "w1", "w2", "w3")
TWISTED_RADICAL = ("v1", "v2", "v3")

# Radical along the derived family, linear in a7
TWISTED_RADICAL_SPAN = (
    {"x1": "a7", "v1": "-1/3"},
    {"x2": "a7", "v2": "-1/3"},
    {"v3": "1", "w3": "-3*a7"},
)


def twisted_point(a5, a6, a7):
    """All of ``a1..a7`` on the derived family at the given free values."""
    free = {"a5": exact.qq(a5), "a6": exact.qq(a6), "a7": exact.qq(a7)}
    point = {k: exact.ground(exact.substitute(exact.parse_poly(v), free))
             for k, v in TWISTED_SOLUTIONS["derived"].items()}
    point.update(free)
    return point


def twisted_radical_span(names, a7):
    index = {n: i for i, n in enumerate(names)}
    out = []
    for vector in TWISTED_RADICAL_SPAN:
        coords = [QQ.zero] * len(names)
        for name, text in vector.items():
            coords[index[name]] = exact.ground(exact.substitute(exact.parse_poly(text), {"a7": a7}))
        out.append(tuple(coords))
    return tuple(out)


def _twisted_cocycle(h, module):
    dh, dm = h.dim, module.dim
    idx = {n: i for i, n in enumerate(h.basis)}
    col = {n: i for i, n in enumerate(VW_NAMES)}
    values = {
        # phi(x1) = 2/3 s2 (x) e + 1/3 s1 (x) h + s3 (x) x1, s_i dual to w_i
        "x1": {("w2", "e"): QQ(2, 3), ("w1", "h"): QQ(1, 3), ("w3", "x1"): QQ(1)},
        "x2": {("w1", "f"): QQ(2, 3), ("w2", "h"): QQ(-1, 3), ("w3", "x2"): QQ(1)},
    }
    maps = []
    for name in h.basis:
        dod = {}
        for (u, y), c in values.get(name, {}).items():
            dod.setdefault(idx[y], {})[col[u]] = c
        maps.append(exact.sparse(dod, (dh, dm)).to_dense())
    return Cocycle(module, tuple(maps))


def sl2r2_twisted_case():
    names = ("e", "f", "h", "x1", "x2")
    matrices = (E(1, 2), E(2, 1), diag(1, -1, 0), E(1, 3), E(2, 3))
    h = _subalgebra(names, matrices, "sl2xR2")
    module = standard_module(h, matrices)
    family = Family(TWISTED_LINES, solutions=TWISTED_SOLUTIONS, relations=TWISTED_RELATIONS,
                    printed=TWISTED_PRINTED)
    expected = (
        Expected("cohomology", "h1", 1, "dim H^1(h, Hom(m,h)) = 1 for sl2 x R2"),
        Expected("extend", "verdict", {"satisfiable": True},
                 "[phi] != 0 gives g = sl3 x V"),
        Expected("jacobi", "relations", list(TWISTED_RELATIONS),
                 "Groebner basis of the Jacobi identities on a1..a7"),
        Expected("jacobi", "derived", True, "a family parametrized by a5, a6, a7"),
        Expected("identify", "levi", {"radical": 3, "levi": "sl3_R"},
                 "g = sl3 x V with V the standard module"),
        Expected("identify", "radical_span", {"radical": 3, "spans": True},
                 "the radical is spanned by a7 x1 - v1/3, a7 x2 - v2/3 and v3 - 3 a7 w3"),
    )
    case = CatalogCase("sl2r2-twisted", "sl2xR2", h, matrices, VW_NAMES,
                       _twisted_cocycle(h, module), {"twisted": family}, expected)
    return case


## s2 x R2 (l)


EXCEPTIONAL_L = ("9/2", "3", "3/2", "9/10", "3/4", "0", "-3/10", "-3/4", "-3/2")

S2_LINES = {
    "0": (
        "[v1, v2] = a1*w3",
        "[v1, v3] = a8*x1 + a3*v1 - a1*w2",
        "[v2, v3] = a8*x2 + a3*v2 + a1*w1",
        "[v1, w1] = (a7 - a9)*w3",
        "[v2, w2] = (a7 - a9)*w3",
        "[v3, w3] = a7*w3",
        "[v3, w1] = -a4*x2 - a5*v2 + a9*w1",
        "[v3, w2] = a4*x1 + a5*v1 + a9*w2",
        "[w1, w2] = a6*w3 + a2*v3",
        "[w1, w3] = -a2*v2",
        "[w2, w3] = a2*v1",
    ),
    "-3/10": (
        "[v1, v2] = a1*w3",
        "[v1, v3] = -a1*w2",
        "[v2, v3] = a1*w1",
        "[v3, w2] = a3*w3",
        "[w1, w2] = a4*x2 + a2*v3",
        "[w1, w3] = -a2*v2",
        "[w2, w3] = a2*v1",
    ),
    "-3/4": (
        "[v1, v2] = a1*w3",
        "[v1, v3] = a3*x2 - a1*w2",
        "[v2, v3] = a1*w1",
        "[v3, w2] = a4*v2",
        "[w1, w2] = a2*v3",
        "[w1, w3] = -a2*v2",
        "[w2, w3] = a2*v1",
    ),
    "-3/2": (
        "[v1, v2] = a1*w3",
        "[v1, v3] = a6*v2 - a1*w2",
        "[v1, w1] = a7*v2",
        "[v1, w2] = -a9*x2 - a3*w3 + a8*v1",
        "[v2, v3] = a1*w1",
        "[v2, w2] = (a7 + a8)*v2",
        "[v3, w2] = a9*e + a3*w1 + a8*v3",
        "[v3, w3] = a7*v2",
        "[w1, w2] = -a4*e - a5*w1 + a2*v3",
        "[w1, w3] = -a2*v2",
        "[w2, w3] = a4*x2 + a5*w3 + a2*v1",
    ),
    "-1/2": (
        "[v1, v2] = a1*w3",
        "[v1, v3] = a4*w3 - a1*w2",
        "[v2, v3] = a1*w1",
        "[v1, w1] = (a5 - a7)*x2",
        "[v1, w2] = a7*x1",
        "[v2, w2] = a5*x2",
        "[v3, w1] = a7*e",
        "[v3, w2] = a6*x2 + a7*t",
        "[v3, w3] = a5*x2",
        "[w1, w2] = a3*v2 + a2*v3",
        "[w1, w3] = -a2*v2",
        "[w2, w3] = a2*v1",
    ),
}
S2_COUNTS = {
    "0": (7, 2), "-3/10": (3, 1), "-3/4": (3, 1), "-3/2": (7, 2), "-1/2": (4, 3),
}

# top-right 4x6 blocks of the displayed 10x10 matrices: rows t, e, x1, x2; columns v1..w3
L32_COCYCLE = {
    "e": (
        ("0", "0", "-3*c4", "0", "11*c1", "0"),
        ("14*c2", "0", "0", "29*c1", "0", "0"),
        ("4*c4", "0", "0", "c3", "0", "0"),
        ("0", "5*c4", "0", "0", "0", "17*c1"),
    ),
    "x1": (
        ("0", "0", "11*c2", "0", "3*c5", "0"),
        ("c6", "0", "0", "4*c5", "0", "0"),
        ("-29*c2", "0", "0", "-14*c1", "0", "0"),
        ("0", "-17*c2", "0", "0", "0", "5*c5"),
    ),
    "x2": (
        ("0", "0", "0", "0", "0", "0"),
        ("0", "0", "3*c2", "0", "c5", "0"),
        ("0", "0", "c4", "0", "-3*c1", "0"),
        ("2*c2", "0", "0", "-2*c1", "0", "0"),
    ),
}
L32_FAMILIES = {
    "c2": (
        "[v1, v2] = alpha*w3 - 51*e - 28*v2",
        "[v1, v3] = -alpha*w2 - 29*v3",
        "[v2, v3] = alpha*w1",
        "[v1, w1] = -20*w1",
        "[v1, w2] = 11*w2",
        "[v1, w3] = 9*w3",
        "[v2, w2] = -17*w1",
        "[v3, w3] = -20*w1",
    ),
    "c1": (
        "[v1, w1] = -20*v1",
        "[v2, w1] = 9*v2",
        "[v2, w2] = -20*v1",
        "[v3, w1] = 11*v3",
        "[v3, w3] = -17*v1",
        "[w1, w2] = alpha*v3 + 29*w2",
        "[w1, w3] = -alpha*v2 + 51*x1 + 28*w3",
        "[w2, w3] = alpha*v1",
    ),
}
L32_BINDINGS = {
    "c2": {"c1": "0", "c2": "1", "c3": "0", "c4": "0", "c5": "0", "c6": "0"},
    "c1": {"c1": "1", "c2": "0", "c3": "0", "c4": "0", "c5": "0", "c6": "0"},
}


def s2_matrices(l):
    l = exact.qq(l)
    t = diag(l / 3 - QQ(1, 2), l / 3 + QQ(1, 2), -2 * l / 3)
    return (t, E(2, 1), E(1, 3), E(2, 3))


def _l_key(l):
    l = exact.qq(l)
    return str(l.numerator) if l.denominator == 1 else f"{l.numerator}/{l.denominator}"


def expected_h1(l):
    key = _l_key(l)
    if key == "3/2":
        return 6
    return 1 if key in EXCEPTIONAL_L else 0


def _l32_cocycle(h, module):
    maps = []
    for name in h.basis:
        rows = L32_COCYCLE.get(name)
        if rows is None:
            maps.append(exact.zeros(h.dim, module.dim))
        else:
            maps.append(exact.matrix([[exact.parse_poly(x) for x in row] for row in rows]))
    return Cocycle(module, tuple(maps))


def s2_case(l):
    l = exact.qq(l)
    key = _l_key(l)
    matrices = s2_matrices(l)
    h = _subalgebra(("t", "e", "x1", "x2"), matrices, f"s2xR2(l={key})")
    module = standard_module(h, matrices)
    h1 = expected_h1(l)
    magic = "H^1 = 0 unless l in {9/2, 3, 3/2, 9/10, 3/4, 0, -3/10, -3/4, -3/2}; 6 at l = 3/2"
    expected = [Expected("cohomology", "h1", h1, magic)]
    families = {}
    cocycle = None
    if key in S2_COUNTS:
        horizontal, vertical = S2_COUNTS[key]
        expected.append(Expected(
            "brackets", "counts",
            {"total": horizontal + vertical, "horizontal": horizontal, "vertical": vertical},
            f"for l = {key} the space of equivariant brackets has dimension {horizontal + vertical}",
        ))
        families[key] = Family(S2_LINES[key], relations=("a1*a2",), printed=("a1*a2",))
        expected.append(Expected("jacobi", key, ["a1*a2"], "Jac(v1,v2,w1) = a1 a2 w3"))
    elif key != "3/2":
        expected.append(Expected("brackets", "counts", {"total": 2, "horizontal": 2, "vertical": 0},
                                 "no additional equivariant brackets for l != 3/2 outside the factors"))
    if key == "3/2":
        cocycle = _l32_cocycle(h, module)
        for name, lines in L32_FAMILIES.items():
            families[name] = Family(lines, cocycle_bindings=L32_BINDINGS[name])
            expected.append(Expected(
                "jacobi", name, {"jacobi": True, "abelian": "w" if name == "c2" else "v"},
                f"case {name} = 1, brackets depend on alpha and satisfy the Jacobi identities",
            ))
        expected.append(Expected(
            "extend", "verdict",
            {"satisfiable": True, "step1": ["c3", "c4", "c5", "c6"], "radical": "c1*c2"},
            "[delta phi] = 0 forces c3 = c4 = c5 = c6 = 0; a Groebner basis implies c1 c2 = 0",
        ))
    elif h1:
        expected.append(Expected("extend", "verdict", {"satisfiable": False, "failed_step": 1},
                                 "if l != 3/2 then [delta phi] = 0 iff [phi] = 0"))
    return CatalogCase("s2-semidirect", "s2xR2", h, matrices, VW_NAMES, cocycle, families,
                       tuple(expected), params={"l": l})


## Geometry models


def g2_model():
    case = sl3_case()
    g = extend_reconstruct(case, "g2", case.families["g2"].solutions["g2"])
    return geometry.HomogeneousModel.from_split(g, 8, geometry.product_structure(3), "g2star/sl3")


def sp4_model():
    case = gl2_case()
    g = extend_reconstruct(case, "gl2", GL2_POINT)
    return geometry.HomogeneousModel.from_split(g, 4, geometry.product_structure(3), "sp4/gl2")


def extend_reconstruct(case, family, bindings):
    datum = case.datum(family).substitute({k: exact.parse_poly(v) for k, v in bindings.items()})
    return reconstruct(datum)


MODEL_EXPECTED = {
    "g2star": (
        Expected("geometry", "model",
                 {"nondegenerate": True, "metrics": 1, "signature": [3, 3], "nk": "strict",
                  "p_identity": True, "trivial_summands": [2, 2]},
                 "G2*/SL3 is strictly nearly para-Kahler; 2 trivial summands each"),
        Expected("symbol", "dims", {"g1": 8, "g2": 0, "family": "real-diagonalizable"},
                 "the symbol of E is g1 in sl3; g2 = 0"),
        Expected("symbol", "samples", {"g2_zero": True, "g1_bounded": True, "zero_xi_g1": 18},
                 "g2 = 0 for every non-degenerate Xi; g1 has dimension at most 8"),
        Expected("identify", "g", {"dim": 14, "signature": [8, 6], "rank": 2, "label": "g2_split"},
                 "g is isomorphic to g2*"),
    ),
    "sp4": (
        Expected("geometry", "model",
                 {"nondegenerate": True, "metrics": 2, "signature": [3, 3], "nk": "strict",
                  "p_identity": True, "trivial_summands": [4, 2]},
                 "Sp(4,R)/(SL2 x R) is strictly nearly para-Kahler; trivial summands 4 and 2"),
        Expected("symbol", "dims", {"g2": 0}, "g2 = 0 for non-degenerate Xi"),
        Expected("identify", "g", {"dim": 10, "signature": [6, 4], "rank": 2,
                                    "label": "sp4_R/so23 class"},
                 "g = sp(4,R)"),
    ),
    "su2": (
        Expected("geometry", "einstein", {"einstein": True, "factor": "1/4"},
                 "SU(2) with g = -Killing is Einstein with factor 1/4"),
    ),
}


def su2cubed_expected(r, t):
    r, t = exact.qq(r), exact.qq(t)
    first, second = r in (1, -1), (r - t) in (1, -1)
    if first and second:
        verdict = "integrable"
    elif first or second:
        verdict = "degenerate-nonintegrable"
    else:
        verdict = "nondegenerate"
    value = {"family": verdict, "nondegenerate": verdict == "nondegenerate"}
    if verdict == "nondegenerate":
        value.update({"metrics": 1, "nk": "no", "einstein": False})
    return (Expected("geometry", "su2cubed", value,
                     "integrable if r = +-1 and r - t = +-1; not nearly para-Kahler, not Einstein"),)


def geometry_case(name, params=None):
    params = dict(params or {})
    if name == "g2star":
        model, expected = g2_model(), MODEL_EXPECTED["g2star"]
    elif name == "sp4":
        model, expected = sp4_model(), MODEL_EXPECTED["sp4"]
    elif name == "su2":
        model, expected = geometry.su2_model(), MODEL_EXPECTED["su2"]
    elif name == "su2cubed":
        r = exact.qq(params.get("r", 0))
        t = exact.qq(params.get("t", 3))
        params = {"r": r, "t": t}
        model, expected = geometry.su2cubed_model(r, t), su2cubed_expected(r, t)
    else:
        raise UnknownCaseError(f"unknown geometry case {name!r}")
    return CatalogCase(name, model.name, model.algebra, expected=tuple(expected),
                       params={k: exact.qq(v) for k, v in params.items()}, model=model)


## Borel bound


@dataclass(frozen=True)
class BorelBound:
    representation: bool
    matches_display: bool
    dims: tuple
    closed: bool

    def to_json(self):
        return {"representation": self.representation, "matches_display": self.matches_display,
                "dims": list(self.dims), "closed": self.closed}


BOREL_NAMES = ("a1", "a2", "a3", "a4", "a5")
BOREL_MATRICES = (diag(1, -1, 0), E(1, 2), E(1, 3), E(2, 3), diag(0, -1, 1))


def _borel_display():
    block = [["a1", "a2", "a3"], ["0", "-a1 - a5", "a4"], ["0", "0", "a5"]]
    X = exact.matrix([[exact.parse_poly(x) for x in row] for row in block])
    return exact.block_diag(X, -X.transpose())


def borel_bound_case():
    """Dimension count for an isotropy preserving a flag in both distributions.

    The trivial-row conditions (last row of the ``Delta_+`` block, first row of the
    ``Delta_-`` block) cut the 5-dimensional family down to 3.
    """
    h = LieAlgebra.from_matrices(("y1", "y2", "y3", "y4", "y5"), BOREL_MATRICES, "borel")
    try:
        rep = standard_module(h, BOREL_MATRICES)
        valid = True
    except repthy.RepresentationError:
        rep, valid = None, False
    generic = rep.act([exact.PARAM_GENS[n] for n in BOREL_NAMES]) if rep is not None else None
    matches = generic is not None and exact.same_matrix(generic, _borel_display())
    dims = [len(BOREL_NAMES)]
    rows = []
    for row in (2, 3):
        for col in range(6):
            x = exact.entry(_borel_display(), row, col)
            if x:
                rows.append(tuple(exact.poly(x).coeff(exact.PARAM_GENS[n]) for n in BOREL_NAMES))
        dims.append(len(exact.kernel(exact.matrix(rows, (len(rows), 5)))))
    remaining = exact.kernel(exact.matrix(rows, (len(rows), 5)))
    closed = liealg.is_subalgebra(h, remaining)
    return BorelBound(valid, matches, tuple(dims), closed)


## Lookup


CASE_NAMES = (
    "sl3", "p1", "p2", "p12", "sl2r2", "sl2r2-twisted", "gl2",
    "zt-neg", "zt-null", "zt-pos", "zb2r", "s2-semidirect",
    "g2star", "sp4", "su2cubed", "su2", "borel-bound",
)
EXTENSION_BUILDERS = {
    "sl3": sl3_case,
    "p1": p1_case,
    "p2": p2_case,
    "p12": p12_case,
    "sl2r2": sl2r2_case,
    "sl2r2-twisted": sl2r2_twisted_case,
    "gl2": gl2_case,
    "zt-neg": lambda: zt_case("neg"),
    "zt-null": lambda: zt_case("null"),
    "zt-pos": lambda: zt_case("pos"),
    "zb2r": zb2r_case,
}
GEOMETRY_CASES = ("g2star", "sp4", "su2cubed", "su2")
ALLOWED_PARAMS = {"s2-semidirect": {"l"}, "su2cubed": {"r", "t"}}
S2_VALUES = EXCEPTIONAL_L + ("-1/2",)


def list_cases():
    return CASE_NAMES


def get_case(name, params=None):
    params = dict(params or {})
    unknown = set(params) - ALLOWED_PARAMS.get(name, set())
    if name not in CASE_NAMES:
        raise UnknownCaseError(f"unknown case {name!r}; choose from {', '.join(CASE_NAMES)}")
    if unknown:
        raise UnknownCaseError(f"case {name!r} takes no parameter {sorted(unknown)}")
    if name == "s2-semidirect":
        if "l" not in params:
            raise UnknownCaseError("s2-semidirect needs a value for l")
        return s2_case(params["l"])
    if name in GEOMETRY_CASES:
        return geometry_case(name, params)
    if name == "borel-bound":
        return CatalogCase("borel-bound", "borel", LieAlgebra.from_matrices(
            ("y1", "y2", "y3", "y4", "y5"), BOREL_MATRICES, "borel"), BOREL_MATRICES,
            expected=(Expected("borel", "dims", {"dims": [5, 4, 3], "representation": True,
                                                 "matches_display": True},
                               "a5 = 0 and a1 = 0, therefore dim h <= 3"),))
    return EXTENSION_BUILDERS[name]()


def all_cases():
    """Every case instance with its default parameters; s2-semidirect once per stored l."""
    for name in CASE_NAMES:
        if name == "s2-semidirect":
            for l in S2_VALUES:
                yield get_case(name, {"l": l})
        else:
            yield get_case(name)
