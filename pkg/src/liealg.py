"""
Lie algebras as structure-constant tables with polynomial entries.

``[b_i, b_j] = sum_k c[i][j][k] b_k``; only pairs ``i < j`` with a nonzero bracket are
stored. Killing form, rank, identification, derived algebra and radical need constant
structure constants.
"""

import re
import warnings
from dataclasses import dataclass
from itertools import combinations

import numpy as np
from sympy import Symbol
from sympy.parsing.sympy_parser import parse_expr

import exact
from exact import PARAMS

BRACKET_LINE = re.compile(r"^\s*\[\s*(\w+)\s*,\s*(\w+)\s*\]\s*=\s*(.+?)\s*$")

LABELS = {
    (14, (8, 6), 2): "g2_split",
    (10, (6, 4), 2): "sp4_R/so23 class",
    (8, (5, 3), 2): "sl3_R",
}


class LieAlgebraError(ValueError):
    pass


class NotSemisimpleError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    basis: tuple
    table: dict
    name: str = ""

    @classmethod
    def from_structure(cls, basis, brackets, name=""):
        """Normalize ``{(i, j): {k: value}}`` (names or indices) into an antisymmetric table."""
        basis = tuple(basis)
        position = {b: i for i, b in enumerate(basis)}

        def idx(x):
            return position[x] if isinstance(x, str) else x

        table = {}
        for (a, b), coeffs in brackets.items():
            i, j = idx(a), idx(b)
            sign = 1
            if i == j:
                if any(exact.poly(v) for v in coeffs.values()):
                    raise LieAlgebraError(f"[{basis[i]}, {basis[i]}] must vanish")
                continue
            if i > j:
                i, j, sign = j, i, -1
            row = table.setdefault((i, j), {})
            for k, v in coeffs.items():
                k = idx(k)
                row[k] = row.get(k, PARAMS.zero) + sign * exact.poly(v)
        table = {
            pair: {k: v for k, v in sorted(row.items()) if v}
            for pair, row in sorted(table.items())
        }
        return cls(basis, {pair: row for pair, row in table.items() if row}, name)

    @classmethod
    def from_brackets(cls, basis, lines, name=""):
        """Parse lines such as ``"[v1, v2] = a1*w3 - 2/3*v3"``; unlisted brackets are zero."""
        basis = tuple(basis)
        local = dict(exact.PARAM_SYMBOLS)
        local.update({b: Symbol(b) for b in basis})
        symbols = [local[b] for b in basis]
        brackets = {}
        for line in lines:
            match = BRACKET_LINE.match(line)
            if not match:
                raise LieAlgebraError(f"cannot parse bracket line {line!r}")
            left, right, rhs = match.groups()
            expr = parse_expr(rhs, local_dict=local).expand()
            coeffs = {}
            rest = expr
            for k, s in enumerate(symbols):
                c = expr.coeff(s)
                if c.free_symbols & set(symbols):
                    raise LieAlgebraError(f"bracket {line!r} is not linear in the basis")
                if c != 0:
                    coeffs[k] = PARAMS.from_expr(c)
                    rest -= c * s
            if rest.expand() != 0:
                raise LieAlgebraError(f"bracket {line!r} is not linear in the basis")
            brackets[(left, right)] = coeffs
        return cls.from_structure(basis, brackets, name)

    @classmethod
    def from_matrices(cls, basis, matrices, name=""):
        """Structure constants of a matrix Lie algebra spanned by independent matrices."""
        flat = [tuple(x for row in exact.rows_of(exact.to_scalar(m)) for x in row) for m in matrices]
        if exact.rank(exact.matrix(flat)) < len(flat):
            raise LieAlgebraError("dependent matrices")
        brackets = {}
        for i, j in combinations(range(len(matrices)), 2):
            c = exact.commutator(matrices[i], matrices[j])
            coords = exact.coordinates(tuple(x for row in exact.rows_of(c) for x in row), flat)
            if coords is None:
                raise LieAlgebraError(f"[{basis[i]}, {basis[j]}] leaves the span")
            brackets[(i, j)] = dict(enumerate(coords))
        return cls.from_structure(basis, brackets, name)

    @property
    def dim(self):
        return len(self.basis)

    def index(self, name):
        return self.basis.index(name)

    def same_structure(self, other):
        """Same basis names and structure constants."""
        return self is other or (self.basis == other.basis and self.table == other.table)

    def coeffs(self, i, j):
        """``{k: c[i][j][k]}`` for any ordered pair."""
        if i < j:
            return self.table.get((i, j), {})
        if i > j:
            return {k: -v for k, v in self.table.get((j, i), {}).items()}
        return {}

    def parameters(self):
        return exact.variables_of([v for row in self.table.values() for v in row.values()])

    @property
    def is_scalar(self):
        return all(v.is_ground for row in self.table.values() for v in row.values())

    def bracket(self, x, y):
        """Bracket of two coordinate vectors."""
        out = [PARAMS.zero] * self.dim
        xs = [(i, exact.poly(a)) for i, a in enumerate(x) if a]
        ys = [(j, exact.poly(b)) for j, b in enumerate(y) if b]
        for i, a in xs:
            for j, b in ys:
                for k, c in self.coeffs(i, j).items():
                    out[k] += a * b * c
        return tuple(out)

    def unit(self, i):
        return tuple(PARAMS.one if k == i else PARAMS.zero for k in range(self.dim))

    def ad(self, i):
        """Matrix of ``ad b_i``: column ``j`` holds the coordinates of ``[b_i, b_j]``."""
        n = self.dim
        dod = {}
        for j in range(n):
            for k, c in self.coeffs(i, j).items():
                dod.setdefault(k, {})[j] = c
        return exact.sparse(dod, (n, n), parametric=not self.is_scalar).to_dense()

    def ad_vector(self, x):
        n = self.dim
        out = exact.zeros(n, n, parametric=not self.is_scalar)
        for i, a in enumerate(x):
            if a:
                out = out + exact.scale(self.ad(i), a)
        return out

    def substitute(self, bindings):
        table = {
            pair: {k: exact.substitute(v, bindings) for k, v in row.items()}
            for pair, row in self.table.items()
        }
        return LieAlgebra.from_structure(self.basis, table, self.name)

    def change_basis(self, vectors, names):
        """The same algebra written in a new (scalar) basis given by coordinate vectors."""
        vectors = [tuple(exact.qq(x) for x in v) for v in vectors]
        if exact.rank(exact.matrix(vectors)) < self.dim:
            raise LieAlgebraError("change of basis must be invertible")
        brackets = {}
        for a, b in combinations(range(self.dim), 2):
            value = tuple(exact.ground(x) for x in self.bracket(vectors[a], vectors[b]))
            brackets[(a, b)] = dict(enumerate(exact.coordinates(value, vectors)))
        return LieAlgebra.from_structure(names, brackets, self.name)

    def describe(self):
        """Nonzero brackets as text lines in basis order."""
        lines = []
        for (i, j), row in self.table.items():
            expr = sum(v.as_expr() * Symbol(self.basis[k]) for k, v in row.items())
            lines.append(f"[{self.basis[i]}, {self.basis[j]}] = {expr}")
        return lines

    def to_json(self):
        return {
            "dim": self.dim,
            "basis": list(self.basis),
            "brackets": [
                {
                    "i": i,
                    "j": j,
                    "coeffs": {self.basis[k]: exact.value_to_json(v) for k, v in row.items()},
                }
                for (i, j), row in self.table.items()
            ],
        }

    @classmethod
    def from_json(cls, data, name=""):
        basis = tuple(data["basis"])
        brackets = {
            (b["i"], b["j"]): {basis.index(k): exact.value_from_json(v) for k, v in b["coeffs"].items()}
            for b in data["brackets"]
        }
        return cls.from_structure(basis, brackets, name)


def abelian(names, name="abelian"):
    return LieAlgebra.from_structure(names, {}, name)


def jacobi_defect(L, among=None):
    """Nonzero Jacobi residuals ``{(i, j, k, target): poly}`` over triples ``i < j < k``.

    ``among`` restricts the triples to a subset of basis indices.
    """
    indices = sorted(among) if among is not None else range(L.dim)
    residuals = {}
    for i, j, k in combinations(indices, 3):
        total = {}
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            for l, x in L.coeffs(a, b).items():
                for m, y in L.coeffs(l, c).items():
                    total[m] = total.get(m, PARAMS.zero) + x * y
        for target, value in sorted(total.items()):
            if value:
                residuals[(i, j, k, target)] = value
    return residuals


def _require_scalar(L):
    if not L.is_scalar:
        raise LieAlgebraError(f"{L.name or 'algebra'} has parametric structure constants")


def killing_form(L):
    _require_scalar(L)
    ads = [L.ad(i) for i in range(L.dim)]
    rows = [[exact.trace(ads[i] * ads[j]) for j in range(L.dim)] for i in range(L.dim)]
    return exact.matrix(rows)


def rank_estimate(L, seed=0, samples=20):
    """Minimum kernel dimension of ``ad x`` over seeded random rational ``x``."""
    _require_scalar(L)
    rng = np.random.default_rng(seed)
    best = L.dim
    for _ in range(samples):
        x = [exact.random_rational(rng) for _ in range(L.dim)]
        best = min(best, len(exact.kernel(L.ad_vector(x))))
    if best == L.dim and L.dim and any(L.table):
        warnings.warn("every sampled element was ad-nilpotent of full kernel", RuntimeWarning)
    return best


@dataclass(frozen=True)
class Identification:
    label: str
    dim: int
    signature: tuple
    rank: int

    def to_json(self):
        return {
            "dim": self.dim,
            "signature": list(self.signature),
            "rank": self.rank,
            "label": self.label,
        }


def identify_simple(L, seed=0, samples=20):
    K = killing_form(L)
    inertia = exact.signature(K)
    if inertia.nullity:
        raise NotSemisimpleError(f"Killing form has nullity {inertia.nullity}")
    rank = rank_estimate(L, seed, samples)
    signature = (inertia.positive, inertia.negative)
    label = LABELS.get((L.dim, signature, rank), "other")
    return Identification(label, L.dim, signature, rank)


@dataclass(frozen=True, eq=False)
class Subalgebra:
    parent: LieAlgebra
    span: tuple

    def __post_init__(self):
        span = tuple(tuple(exact.qq(x) for x in v) for v in self.span)
        if span and exact.rank(exact.matrix(span)) < len(span):
            raise LieAlgebraError("subalgebra span is linearly dependent")
        object.__setattr__(self, "span", span)
        if not _closed(self.parent, span):
            raise LieAlgebraError("span is not closed under the bracket")

    @property
    def dim(self):
        return len(self.span)

    def as_algebra(self, names=None, name=""):
        names = names or tuple(f"s{i + 1}" for i in range(self.dim))
        brackets = {}
        for a, b in combinations(range(self.dim), 2):
            value = tuple(exact.ground(x) for x in self.parent.bracket(self.span[a], self.span[b]))
            brackets[(a, b)] = dict(enumerate(exact.coordinates(value, self.span)))
        return LieAlgebra.from_structure(names, brackets, name)


def _closed(L, span):
    _require_scalar(L)
    for a, b in combinations(span, 2):
        value = tuple(exact.ground(x) for x in L.bracket(a, b))
        if exact.coordinates(value, list(span)) is None:
            return False
    return True


def is_subalgebra(parent, span):
    span = [tuple(exact.qq(x) for x in v) for v in span]
    if span and exact.rank(exact.matrix(span)) < len(span):
        raise LieAlgebraError("subalgebra span is linearly dependent")
    return _closed(parent, span)


def bracket_of_spans(L, first, second):
    """Canonical basis of ``span{[a, b]}`` for ``a`` in ``first``, ``b`` in ``second``."""
    _require_scalar(L)
    values = [tuple(exact.ground(x) for x in L.bracket(a, b)) for a in first for b in second]
    return exact.span_basis([v for v in values if any(v)], L.dim)


def is_ideal(L, span):
    units = [tuple(exact.ground(x) for x in L.unit(i)) for i in range(L.dim)]
    return all(
        exact.coordinates(v, list(span)) is not None for v in bracket_of_spans(L, units, span)
    )


def derived_subalgebra(L):
    units = [tuple(exact.ground(x) for x in L.unit(i)) for i in range(L.dim)]
    return Subalgebra(L, tuple(bracket_of_spans(L, units, units)))


def radical(L):
    """Killing-orthogonal complement of the derived algebra."""
    K = killing_form(L)
    derived = derived_subalgebra(L).span
    if not derived:
        return Subalgebra(L, tuple(exact.span_basis(
            [tuple(exact.ground(x) for x in L.unit(i)) for i in range(L.dim)], L.dim)))
    rows = [exact.apply(K.transpose(), d) for d in derived]
    return Subalgebra(L, tuple(exact.span_basis(exact.kernel(exact.matrix(rows)), L.dim)))


def centralizer(L, x):
    _require_scalar(L)
    return Subalgebra(L, tuple(exact.span_basis(exact.kernel(L.ad_vector(x)), L.dim)))
