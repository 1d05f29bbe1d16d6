"""
Representations of structure-constant Lie algebras and their cohomology.

A representation is one matrix per basis element of its algebra, acting on column
vectors. Functors build new representations out of old ones. Chevalley-Eilenberg
cochains of degree ``k`` are flat coordinate vectors over ``Lambda^k h* (x) V``, indexed
by ``(position of the increasing k-tuple) * dim V + a``.
"""

import warnings
from dataclasses import dataclass, field
from itertools import combinations

from sympy import factor_list

import exact
from exact import PARAM_GENS, PARAMS, QQ
from liealg import LieAlgebra


class RepresentationError(ValueError):
    def __init__(self, message, defects=()):
        self.defects = tuple(defects)
        super().__init__(message)


@dataclass(frozen=True, eq=False)
class Representation:
    algebra: LieAlgebra
    matrices: tuple
    name: str = ""
    check: bool = field(default=True, repr=False)

    def __post_init__(self):
        matrices = tuple(m.to_dense() for m in self.matrices)
        object.__setattr__(self, "matrices", matrices)
        if len(matrices) != self.algebra.dim:
            raise RepresentationError(
                f"{len(matrices)} matrices for an algebra of dimension {self.algebra.dim}"
            )
        shapes = {m.shape for m in matrices}
        if len(shapes) > 1 or any(r != c for r, c in shapes):
            raise RepresentationError(f"action matrices must be square of one size, got {shapes}")
        if self.check:
            defects = self.homomorphism_defects()
            if defects:
                raise RepresentationError(
                    f"{self.name or 'action'} is not a representation on {len(defects)} pairs",
                    defects,
                )

    @property
    def dim(self):
        if not self.matrices:
            return 0
        return self.matrices[0].shape[0]

    @property
    def is_scalar(self):
        return all(exact.is_scalar_matrix(m) for m in self.matrices)

    def act(self, x):
        """Matrix of a general element ``x`` given in algebra coordinates."""
        n = self.dim
        out = exact.zeros(n, n, parametric=not self.is_scalar)
        for i, a in enumerate(x):
            if a:
                out = out + exact.scale(self.matrices[i], a)
        return out

    def homomorphism_defects(self):
        """Pairs ``(i, j)`` where ``rho([b_i, b_j]) != [rho(b_i), rho(b_j)]``."""
        defects = []
        L = self.algebra
        for i, j in combinations(range(L.dim), 2):
            bracket = self.act([L.coeffs(i, j).get(k, 0) for k in range(L.dim)])
            if not exact.is_zero(exact.commutator(self.matrices[i], self.matrices[j]) - bracket):
                defects.append((i, j))
        return defects

    def substitute(self, bindings):
        matrices = [
            exact.sparse(
                {i: {j: exact.substitute(v, bindings) for j, v in row.items()}
                 for i, row in exact.to_params(m).to_dod().items()},
                m.shape, parametric=True,
            )
            for m in self.matrices
        ]
        matrices = [exact.to_scalar(m) if exact.is_scalar_matrix(m) else m for m in matrices]
        return Representation(self.algebra.substitute(bindings), tuple(matrices), self.name)

    def to_json(self):
        return {
            "algebra": self.algebra.name,
            "dim": self.dim,
            "matrices": [
                [[exact.value_to_json(x) for x in row] for row in exact.rows_of(m)]
                for m in self.matrices
            ],
        }


def from_json(data, algebra):
    matrices = [
        exact.matrix([[exact.value_from_json(x) for x in row] for row in m])
        for m in data["matrices"]
    ]
    return Representation(algebra, tuple(matrices))


def adjoint(L):
    return Representation(L, tuple(L.ad(i) for i in range(L.dim)), f"ad {L.name}")


def trivial(L, dim=1):
    zero = exact.zeros(dim, dim)
    return Representation(L, (zero,) * L.dim, "trivial")


## Functors


def _same_algebra(*reps):
    first = reps[0].algebra
    if any(not first.same_structure(r.algebra) for r in reps[1:]):
        raise RepresentationError("representations of different algebras")
    return reps[0].algebra


def dual(r):
    return Representation(r.algebra, tuple(-m.transpose() for m in r.matrices), f"{r.name}*", check=False)


def tensor(r1, r2):
    L = _same_algebra(r1, r2)
    e1, e2 = exact.identity(r1.dim), exact.identity(r2.dim)
    matrices = tuple(
        exact.kron(a, e2) + exact.kron(e1, b) for a, b in zip(r1.matrices, r2.matrices)
    )
    return Representation(L, matrices, f"{r1.name}(x){r2.name}", check=False)


def hom(r1, r2):
    """``Hom(V1, V2)`` on row-major flattened ``dim V2 x dim V1`` matrices."""
    L = _same_algebra(r1, r2)
    e1, e2 = exact.identity(r1.dim), exact.identity(r2.dim)
    matrices = tuple(
        exact.kron(b, e1) - exact.kron(e2, a.transpose()) for a, b in zip(r1.matrices, r2.matrices)
    )
    return Representation(L, matrices, f"Hom({r1.name}, {r2.name})", check=False)


def direct_sum(*reps):
    L = _same_algebra(*reps)
    matrices = tuple(exact.block_diag(*ms) for ms in zip(*(r.matrices for r in reps)))
    return Representation(L, matrices, " + ".join(r.name for r in reps), check=False)


def wedge_basis(n, p):
    return list(combinations(range(n), p))


def _sorted_sign(indices):
    """Sort a tuple of distinct indices, returning (sign, sorted) or (0, None) on repeats."""
    if len(set(indices)) < len(indices):
        return 0, None
    sign = 1
    items = list(indices)
    for i in range(len(items)):
        for j in range(len(items) - 1 - i):
            if items[j] > items[j + 1]:
                items[j], items[j + 1] = items[j + 1], items[j]
                sign = -sign
    return sign, tuple(items)


def exterior(r, p):
    """``Lambda^p V`` in the basis of increasing index tuples."""
    basis = wedge_basis(r.dim, p)
    position = {b: i for i, b in enumerate(basis)}
    parametric = not r.is_scalar
    matrices = []
    for m in r.matrices:
        dod = exact.to_params(m).to_dod() if parametric else m.to_dod()
        # column j of m: {row: value}
        by_column = {}
        for i, row in dod.items():
            for j, v in row.items():
                by_column.setdefault(j, {})[i] = v
        out = {}
        for c, tup in enumerate(basis):
            for slot, idx in enumerate(tup):
                for target, v in by_column.get(idx, {}).items():
                    sign, new = _sorted_sign(tup[:slot] + (target,) + tup[slot + 1:])
                    if sign:
                        row = out.setdefault(position[new], {})
                        row[c] = row.get(c, 0) + sign * v
        matrices.append(exact.sparse(out, (len(basis), len(basis)), parametric).to_dense())
    return Representation(r.algebra, tuple(matrices), f"L{p}({r.name})", check=False)


def sym2(r):
    """``S^2 V`` in the basis ``e_i e_j``, ``i <= j``."""
    basis = [(i, j) for i in range(r.dim) for j in range(i, r.dim)]
    position = {b: i for i, b in enumerate(basis)}
    parametric = not r.is_scalar
    matrices = []
    for m in r.matrices:
        dod = exact.to_params(m).to_dod() if parametric else m.to_dod()
        by_column = {}
        for i, row in dod.items():
            for j, v in row.items():
                by_column.setdefault(j, {})[i] = v
        out = {}
        for c, (i, j) in enumerate(basis):
            for slot, other in ((i, j), (j, i)):
                for target, v in by_column.get(slot, {}).items():
                    key = position[tuple(sorted((target, other)))]
                    row = out.setdefault(key, {})
                    row[c] = row.get(c, 0) + v
        matrices.append(exact.sparse(out, (len(basis), len(basis)), parametric).to_dense())
    return Representation(r.algebra, tuple(matrices), f"S2({r.name})", check=False)


def restrict(r, sub, names=None):
    """Restriction to a subalgebra (a ``Subalgebra`` of ``r.algebra``)."""
    if sub.parent is not r.algebra:
        raise RepresentationError("subalgebra of a different algebra")
    algebra = sub.as_algebra(names, name=f"{r.algebra.name}|{sub.dim}")
    return Representation(algebra, tuple(r.act(v) for v in sub.span), f"{r.name}|", check=False)


## Invariants


def _stacked(r):
    n = r.dim
    dod = {}
    for k, m in enumerate(exact.to_scalar(x) for x in r.matrices):
        for i, row in m.to_dod().items():
            dod[k * n + i] = row
    return exact.sparse(dod, (max(1, len(r.matrices)) * n, n))


def invariants(r):
    """Basis of the joint kernel of the action matrices."""
    if not r.matrices:
        return [tuple(QQ.one if j == i else QQ.zero for j in range(r.dim)) for i in range(r.dim)]
    return exact.kernel(_stacked(r))


def equivariant_maps(r1, r2):
    """Basis of ``Hom_h(V1, V2)`` as ``dim V2 x dim V1`` matrices."""
    rows, cols = r2.dim, r1.dim
    return [
        exact.matrix([v[i * cols:(i + 1) * cols] for i in range(rows)], (rows, cols))
        for v in invariants(hom(r1, r2))
    ]


## Chevalley-Eilenberg complex


def cochain_index(n, k):
    return {b: i for i, b in enumerate(wedge_basis(n, k))}


def differential(r, k):
    """Matrix of ``d: C^k(h, V) -> C^{k+1}(h, V)`` for ``k`` in 0, 1, 2."""
    if k not in (0, 1, 2):
        raise ValueError(f"Invalid cochain degree: {k}")
    L = r.algebra
    n, d = L.dim, r.dim
    parametric = not (r.is_scalar and L.is_scalar)
    mats = [exact.to_params(m).to_dod() if parametric else m.to_dod() for m in r.matrices]
    source = cochain_index(n, k)
    target = cochain_index(n, k + 1)
    out = {}

    def add(row, col, value):
        if value:
            entry = out.setdefault(row, {})
            entry[col] = entry.get(col, 0) + value

    def src(args):
        sign, key = _sorted_sign(args)
        return sign, (source[key] if sign else None)

    for tup, t in target.items():
        # action terms: sum_s (-1)^s x_{i_s} . c(..., omit i_s, ...)
        for s, i in enumerate(tup):
            rest = tup[:s] + tup[s + 1:]
            sign, col = src(rest) if k else (1, 0)
            if not sign:
                continue
            sign *= (-1) ** s
            for a, row in mats[i].items():
                for b, v in row.items():
                    add(t * d + a, col * d + b, sign * v)
        # bracket terms: sum_{s<u} (-1)^{s+u} c([x_s, x_u], rest)
        for s, u in combinations(range(len(tup)), 2):
            rest = tup[:s] + tup[s + 1:u] + tup[u + 1:]
            for l, c in L.coeffs(tup[s], tup[u]).items():
                sign, col = src((l,) + rest)
                if not sign:
                    continue
                sign *= (-1) ** (s + u)
                for a in range(d):
                    add(t * d + a, col * d + a, sign * c)
    rows = len(target) * d
    cols = len(source) * d
    return exact.sparse(out, (rows, cols), parametric)


@dataclass(frozen=True, eq=False)
class Cochain:
    degree: int
    module: Representation
    coefficients: tuple

    def value(self, *args):
        """Vector ``c(x_{args})`` in the module, antisymmetric in the arguments."""
        sign, key = _sorted_sign(tuple(args))
        d = self.module.dim
        if not sign:
            return (QQ.zero,) * d
        i = cochain_index(self.module.algebra.dim, self.degree)[key]
        return tuple(sign * x for x in self.coefficients[i * d:(i + 1) * d])


@dataclass(frozen=True)
class Cohomology:
    degree: int
    dim: int
    cocycle_dim: int
    coboundary_dim: int
    representatives: tuple = ()

    def to_json(self):
        return {
            "degree": self.degree,
            "dim": self.dim,
            "cocycles": self.cocycle_dim,
            "coboundaries": self.coboundary_dim,
        }


def coboundaries(r, k):
    """Canonical basis of ``B^k = im d^{k-1}``."""
    if k == 0:
        return []
    d = exact.to_scalar(differential(r, k - 1))
    return exact.span_basis(
        [tuple(row) for row in exact.rows_of(d.transpose())], d.shape[0]
    )


def ce_cohomology(r, k=1):
    """``H^k(h, V)`` with canonical representatives.

    Representatives are the cocycles from the canonical kernel basis of ``d^k`` that raise
    the rank over ``B^k`` when taken in order.
    """
    cocycles = exact.kernel(differential(r, k))
    boundary = coboundaries(r, k)
    chosen = []
    span = list(boundary)
    rank = len(span)
    for z in cocycles:
        if len(chosen) + len(boundary) == len(cocycles):
            break
        trial = exact.span_basis(span + [z], len(z))
        if len(trial) > rank:
            chosen.append(z)
            span, rank = trial, len(trial)
    return Cohomology(
        degree=k,
        dim=len(cocycles) - len(boundary),
        cocycle_dim=len(cocycles),
        coboundary_dim=len(boundary),
        representatives=tuple(Cochain(k, r, z) for z in chosen),
    )


def is_coboundary(r, k, cochain):
    """Whether a (possibly parametric) cochain lies in ``B^k``; returns the affine solution."""
    d = differential(r, k - 1)
    return exact.solve_affine(d, cochain)


## Invariant lines


@dataclass(frozen=True)
class InvariantLines:
    everything: bool = False
    lines: tuple = ()
    families: tuple = ()
    undecided: tuple = ()

    def to_json(self):
        if self.everything:
            return {"lines": "all"}
        return {
            "lines": [[exact.scalar_to_json(x) for x in v] for v in self.lines],
            "families": [[[exact.scalar_to_json(x) for x in v] for v in f] for f in self.families],
            "undecided": list(self.undecided),
        }


CHART_NAMES = ("a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8", "a9")


def _normalized(v):
    lead = next(x for x in v if x)
    return tuple(x / lead for x in v)


def _degree(p):
    return max(sum(m) for m in p.itermonoms())


def _linear_root(g, name):
    x = PARAM_GENS[name]
    slope = g.coeff(x)
    return -exact.ground(g - slope * x) / slope


def _proper_factors(g):
    """Irreducible factors of ``g`` over ``QQ`` when ``g`` is not itself irreducible."""
    _, factors = factor_list(g.as_expr())
    factors = [PARAMS.from_expr(f) for f, _ in factors]
    if len(factors) > 1 or _degree(factors[0]) < _degree(g):
        return factors
    return []


def _solve_chart(polys, free, fixed, limits):
    """Points and linear families of the chart system.

    Returns ``(points, families, undecided)`` with points as name->QQ dicts and families as
    ``(particular, homogeneous)`` pairs of such dicts. Reducible basis elements split the
    system into one branch per irreducible factor.
    """
    polys = [exact.substitute(p, fixed) for p in polys]
    polys = [p for p in polys if p]
    if not polys:
        if not free:
            return [dict(fixed)], [], False
        return [], [(dict(fixed), [{n: QQ.one} for n in free])], False
    if any(p.is_ground for p in polys):
        return [], [], False
    present = exact.variables_of(polys)
    gb = exact.buchberger(polys, exact.MonomialOrder("lex", present), limits)
    if gb.is_unit:
        return [], [], False
    basis = [exact.to_params(g) for g in gb.polys]
    if all(sum(m) <= 1 for g in basis for m in g.itermonoms()):
        rows = [[g.coeff(PARAM_GENS[n]) for n in free] for g in basis]
        rhs = [-exact.ground(g - sum((c * PARAM_GENS[n] for c, n in zip(row, free)), PARAMS.zero))
               for g, row in zip(basis, rows)]
        solution = exact.solve_affine(exact.matrix(rows, (len(rows), len(free))), rhs)
        particular = dict(fixed)
        particular.update(dict(zip(free, solution.particular)))
        if not solution.homogeneous:
            return [particular], [], False
        homogeneous = [dict(zip(free, h)) for h in solution.homogeneous]
        return [], [(particular, homogeneous)], False
    univariate = {}
    for g in basis:
        names = exact.variables_of([g])
        if len(names) == 1:
            univariate.setdefault(names[0], []).append(g)
    for name in reversed(present):
        linear = [g for g in univariate.get(name, []) if g.degree(PARAM_GENS[name]) == 1]
        if linear:
            nested = dict(fixed)
            nested[name] = _linear_root(linear[0], name)
            return _solve_chart(basis, [n for n in free if n != name], nested, limits)
    for g in basis:
        factors = _proper_factors(g)
        if factors:
            points, families, undecided = [], [], False
            for f in factors:
                found, spans, open_branch = _solve_chart(basis + [f], free, fixed, limits)
                points += found
                families += spans
                undecided = undecided or open_branch
            return points, families, undecided
    if univariate:
        # an irreducible univariate factor of degree > 1 has no rational root
        warnings.warn(f"invariant lines with irrational coordinates in {sorted(univariate)} are omitted",
                      RuntimeWarning)
        return [], [], False
    return [], [], True


def invariant_lines(r, limits=exact.GroebnerLimits()):
    """Lines fixed up to scale by every action matrix.

    Chart ``k`` normalizes ``v_k = 1`` and ``v_j = 0`` for ``j < k``; in each chart the
    conditions ``v ^ (rho(x) v) = 0`` are solved through a lex Groebner basis.
    """
    n = r.dim
    if n > 10:
        raise RepresentationError(f"invariant lines need dim <= 10, got {n}")
    matrices = [exact.to_scalar(m) for m in r.matrices]
    scalar_action = all(
        m.to_dod() == {} or (m.is_diagonal and len(set(m.diagonal())) == 1) for m in matrices
    )
    if scalar_action:
        return InvariantLines(everything=True)
    points, families, undecided = [], [], []
    for k in range(n):
        free = list(CHART_NAMES[: n - 1 - k])
        coords = [PARAMS.zero] * k + [PARAMS.one] + [PARAM_GENS[x] for x in free]
        polys = []
        for m in matrices:
            image = [sum((c * coords[j] for j, c in row.items()), PARAMS.zero)
                     for row in (m.to_dod().get(i, {}) for i in range(n))]
            polys += [coords[i] * image[j] - coords[j] * image[i] for i, j in combinations(range(n), 2)]
        try:
            found, spans, open_chart = _solve_chart(exact.span_reduce(polys, PARAMS), free, {}, limits)
        except exact.ResourceCapError as err:
            warnings.warn(f"invariant lines chart {k}: {err}", RuntimeWarning)
            undecided.append(k)
            continue
        if open_chart:
            warnings.warn(f"invariant lines chart {k} left undecided", RuntimeWarning)
            undecided.append(k)

        def lift(values, base=True):
            head = [QQ.zero] * k + [QQ.one if base else QQ.zero]
            return tuple(head + [values.get(x, QQ.zero) for x in free])

        points += [lift(p) for p in found]
        for particular, homogeneous in spans:
            span = [lift(particular)] + [lift(h, base=False) for h in homogeneous]
            families.append(tuple(exact.span_basis(span, n)))
    families = list(dict.fromkeys(families))
    lines = []
    for v in dict.fromkeys(_normalized(p) for p in points):
        if not any(exact.coordinates(v, list(f)) is not None for f in families):
            lines.append(v)
    return InvariantLines(False, tuple(lines), tuple(families), tuple(undecided))
