"""
Exact arithmetic core: rationals, parameter polynomials, matrices and Groebner bases.

Scalars are sympy ``QQ`` elements (gmpy2 ``mpq`` when gmpy2 is installed), parameter
polynomials live in the shared ring ``PARAMS`` and matrices are ``DomainMatrix`` objects
over ``QQ`` (scalar) or over ``PARAM_DOMAIN`` (parametric). Nothing in this module
rounds.
"""

import re
from dataclasses import dataclass
from typing import NamedTuple

from sympy import Symbol, fraction, together
from sympy.parsing.sympy_parser import parse_expr
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.orderings import grevlex, lex
from sympy.polys.rings import PolyElement, PolyRing

PARAM_NAMES = (
    "a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8", "a9",
    "b1", "b2", "b3",
    "c1", "c2", "c3", "c4", "c5", "c6",
    "l", "r", "t",
    "alpha", "alpha1", "alpha2", "beta",
    # auxiliary unknowns eliminated by the extension constraint check
    "n1", "n2", "n3", "n4", "n5", "n6", "n7", "n8", "n9", "n10", "n11", "n12",
)

PARAMS = PolyRing(PARAM_NAMES, QQ, grevlex)
PARAM_DOMAIN = PARAMS.to_domain()
PARAM_GENS = dict(zip(PARAM_NAMES, PARAMS.gens))
PARAM_SYMBOLS = {name: Symbol(name) for name in PARAM_NAMES}

ORDERS = {"grevlex": grevlex, "lex": lex}


class ParametricMatrixError(ValueError):
    """Raised when a scalar-only operation receives parameter-dependent entries."""


class NotSymmetricError(ValueError):
    pass


class ResourceCapError(RuntimeError):
    """A Groebner computation exceeded one of its caps."""

    def __init__(self, cap, value, limit):
        self.cap = cap
        self.value = value
        self.limit = limit
        super().__init__(f"groebner cap {cap} exceeded: {value} > {limit}")


## Scalars and polynomials


def qq(value):
    """Coerce ints, ``"p/q"`` strings, sympy rationals and ground polys to ``QQ``."""
    if isinstance(value, PolyElement):
        return ground(value)
    if isinstance(value, str):
        return scalar_from_json(value)
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, tuple):
        return QQ(*value)
    if hasattr(value, "is_Rational"):
        return QQ.from_sympy(value)
    return QQ.convert(value)


def poly(value):
    """Coerce a value to an element of ``PARAMS``."""
    if isinstance(value, PolyElement):
        if value.ring == PARAMS:
            return value
        return value.set_ring(PARAMS)
    if isinstance(value, str):
        return parse_poly(value)
    if hasattr(value, "is_Rational") and not value.is_Rational:
        return PARAMS.from_expr(value)
    return PARAMS(qq(value))


def parse_poly(text):
    """Parse ``"3*a7**2 - 1/2*a5"`` into ``PARAMS``."""
    expr = parse_expr(text, local_dict=dict(PARAM_SYMBOLS))
    return PARAMS.from_expr(expr)


def parse_ratio(text):
    """Parse a rational function into a (numerator, denominator) pair of polys."""
    expr = parse_expr(text, local_dict=dict(PARAM_SYMBOLS))
    numer, denom = fraction(together(expr))
    return PARAMS.from_expr(numer), PARAMS.from_expr(denom)


def is_ground(value):
    if isinstance(value, PolyElement):
        return value.is_ground
    return True


def ground(value):
    """Return the ``QQ`` value of a degree-0 polynomial."""
    if not isinstance(value, PolyElement):
        return QQ.convert(value)
    if not value.is_ground:
        raise ParametricMatrixError(f"expected a constant, got {value.as_expr()}")
    return value.get(value.ring.zero_monom, QQ.zero)


def variables_of(polys):
    """Names of the generators that actually occur, alphabetical with numeric suffixes."""
    names = set()
    for p in polys:
        symbols = p.ring.symbols
        for monom in p.itermonoms():
            names.update(str(symbols[i]) for i, e in enumerate(monom) if e)
    return tuple(sorted(names, key=natural_key))


def natural_key(name):
    return [int(part) if part.isdigit() else part for part in re.split(r"(\d+)", name)]


def substitute(p, bindings):
    """Substitute polynomial values for named parameters.

    ``bindings`` maps parameter names to anything ``poly`` accepts. The result stays in
    ``PARAMS``.
    """
    p = poly(p)
    if not bindings:
        return p
    pairs = [(PARAM_GENS[name], poly(value)) for name, value in bindings.items()]
    return p.compose(pairs)


def substitute_ratios(p, bindings):
    """Substitute rational functions, returning the numerator over a common denominator.

    ``bindings`` maps names to ``(numerator, denominator)`` pairs (see ``parse_ratio``).
    The returned pair ``(numer, denom)`` satisfies ``p(bindings) = numer / denom``; in
    particular the substitution vanishes identically iff ``numer == 0``.
    """
    p = poly(p)
    index = {PARAMS.gens.index(PARAM_GENS[name]): ratio for name, ratio in bindings.items()}
    top = {i: max((m[i] for m in p.itermonoms()), default=0) for i in index}
    denom = PARAMS.one
    for i, (_, den) in index.items():
        denom *= den ** top[i]
    numer = PARAMS.zero
    for monom, coeff in p.iterterms():
        term = PARAMS.term_new(
            tuple(0 if i in index else e for i, e in enumerate(monom)), coeff
        )
        for i, (num, den) in index.items():
            term *= num ** monom[i] * den ** (top[i] - monom[i])
        numer += term
    return numer, denom


def random_rational(rng, bound=6, max_denominator=5):
    """A small nonzero-denominator rational drawn from a numpy ``Generator``."""
    num = int(rng.integers(-bound, bound + 1))
    den = int(rng.integers(1, max_denominator + 1))
    return QQ(num, den)


## JSON codecs


def scalar_to_json(value):
    value = qq(value)
    return f"{value.numerator}/{value.denominator}"


def scalar_from_json(text):
    text = text.strip()
    if "/" in text:
        num, den = text.split("/")
        return QQ(int(num), int(den))
    return QQ(int(text))


def poly_to_json(p):
    p = poly(p)
    names = list(variables_of([p]))
    positions = [PARAM_NAMES.index(name) for name in names]
    terms = [
        {"exp": [monom[i] for i in positions], "coef": scalar_to_json(coeff)}
        for monom, coeff in p.terms()
    ]
    return {"vars": names, "terms": terms}


def poly_from_json(data):
    result = PARAMS.zero
    for term in data["terms"]:
        monom = [0] * len(PARAM_NAMES)
        for name, e in zip(data["vars"], term["exp"]):
            monom[PARAM_NAMES.index(name)] = e
        result += PARAMS.term_new(tuple(monom), scalar_from_json(term["coef"]))
    return result


def value_to_json(value):
    """Constants as ``"p/q"`` strings, everything else in the polynomial schema."""
    if is_ground(value):
        return scalar_to_json(ground(value))
    return poly_to_json(value)


def value_from_json(data):
    if isinstance(data, str):
        return PARAMS(scalar_from_json(data))
    return poly_from_json(data)


## Matrices


def matrix(rows, shape=None):
    """Build a DomainMatrix, over ``QQ`` when every entry is constant."""
    entries = [[poly(x) for x in row] for row in rows]
    if shape is None:
        shape = (len(entries), len(entries[0]) if entries else 0)
    if all(x.is_ground for row in entries for x in row):
        return DomainMatrix([[ground(x) for x in row] for row in entries], shape, QQ)
    return DomainMatrix(entries, shape, PARAM_DOMAIN)


def sparse(dod, shape, parametric=False):
    """Build a sparse matrix from ``{row: {col: value}}``."""
    if parametric:
        data = {i: {j: poly(v) for j, v in row.items() if v} for i, row in dod.items()}
        domain = PARAM_DOMAIN
    else:
        data = {i: {j: qq(v) for j, v in row.items() if v} for i, row in dod.items()}
        domain = QQ
    return DomainMatrix.from_dod({i: row for i, row in data.items() if row}, shape, domain)


def zeros(rows, cols, parametric=False):
    return DomainMatrix.zeros((rows, cols), PARAM_DOMAIN if parametric else QQ).to_dense()


def identity(n):
    return DomainMatrix.eye(n, QQ).to_dense()


def is_scalar_matrix(m):
    if m.domain == QQ:
        return True
    return all(v.is_ground for row in m.to_dod().values() for v in row.values())


def to_scalar(m):
    """Convert to a ``QQ`` matrix, raising on parameter-dependent entries."""
    if m.domain == QQ:
        return m
    if not is_scalar_matrix(m):
        raise ParametricMatrixError(f"parametric matrix of shape {m.shape}")
    return m.convert_to(QQ)


def entry(m, i, j):
    return m[i, j].element


def rows_of(m):
    return m.to_dense().to_list()


def same_matrix(a, b):
    if a.shape != b.shape:
        return False
    if a.domain != b.domain:
        a, b = to_params(a), to_params(b)
    return a.to_dense() == b.to_dense()


def is_zero(m):
    return m.is_zero_matrix


def scale(m, c):
    """``c * m`` for a constant or polynomial ``c``."""
    if m.domain == QQ and is_ground(c):
        return m * ground(c)
    return to_params(m) * poly(c)


def trace(m):
    return sum(m.diagonal(), m.domain.zero)


def commutator(a, b):
    return a * b - b * a


def kron(a, b):
    """Kronecker product, index ``(i, k), (j, l) -> i * rows(b) + k, j * cols(b) + l``."""
    a, b = a.unify(b)
    (ar, ac), (br, bc) = a.shape, b.shape
    da, db = a.to_dod(), b.to_dod()
    out = {}
    for i, arow in da.items():
        for j, x in arow.items():
            for k, brow in db.items():
                row = out.setdefault(i * br + k, {})
                for l, y in brow.items():
                    row[j * bc + l] = x * y
    return DomainMatrix.from_dod(out, (ar * br, ac * bc), a.domain).to_dense()


def block_diag(*blocks):
    domain = QQ if all(b.domain == QQ for b in blocks) else PARAM_DOMAIN
    n = sum(b.shape[0] for b in blocks)
    m = sum(b.shape[1] for b in blocks)
    out = {}
    r0 = c0 = 0
    for b in blocks:
        b = b if domain == QQ else to_params(b)
        for i, row in b.to_dod().items():
            out.setdefault(r0 + i, {}).update({c0 + j: v for j, v in row.items()})
        r0 += b.shape[0]
        c0 += b.shape[1]
    return DomainMatrix.from_dod(out, (n, m), domain).to_dense()


def apply(m, vector):
    """Matrix times a vector given as a tuple."""
    col = matrix([[x] for x in vector], (len(vector), 1))
    return tuple(row[0] for row in rows_of(m * col))


class Inertia(NamedTuple):
    positive: int
    negative: int
    nullity: int


def rref(m):
    """Reduced row echelon form of a scalar matrix as (rows dict-of-dicts, pivots)."""
    m = to_scalar(m).to_sparse()
    if m.shape[0] == 0 or m.shape[1] == 0:
        return {}, []
    reduced, pivots = m.rref()
    return reduced.to_dod(), list(pivots)


def rank(m):
    return len(rref(m)[1])


def kernel(m):
    """Canonical null-space basis read off the reduced row echelon form.

    One basis vector per free column ``f``: 1 at ``f``, minus the rref entries of that
    column at the pivot positions, 0 elsewhere.
    """
    cols = m.shape[1]
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(cols):
        if free in pivot_set:
            continue
        vec = [QQ.zero] * cols
        vec[free] = QQ.one
        for i, p in enumerate(pivots):
            c = reduced.get(i, {}).get(free)
            if c:
                vec[p] = -c
        basis.append(tuple(vec))
    return basis


def span_basis(vectors, length=None):
    """Canonical (reduced echelon) basis of the span of the given vectors."""
    vectors = [tuple(qq(x) for x in v) for v in vectors]
    if not vectors:
        return []
    n = length or len(vectors[0])
    m = sparse({i: dict(enumerate(v)) for i, v in enumerate(vectors)}, (len(vectors), n))
    reduced, pivots = rref(m)
    return [
        tuple(reduced.get(i, {}).get(j, QQ.zero) for j in range(n)) for i in range(len(pivots))
    ]


def complement_indices(vectors, length):
    """Standard basis indices completing the span of ``vectors`` to the whole space."""
    pivots = {next(j for j, x in enumerate(v) if x) for v in span_basis(vectors, length)}
    return [j for j in range(length) if j not in pivots]


def coordinates(vector, basis):
    """Coordinates of ``vector`` in the (independent) ``basis``; None if outside the span."""
    if not basis:
        return () if not any(vector) else None
    n = len(vector)
    m = sparse({j: {i: b[j] for i, b in enumerate(basis) if b[j]} for j in range(n)},
               (n, len(basis)))
    solution = solve_affine(m, vector)
    if not solution.feasible:
        return None
    return solution.particular


def signature(m):
    """Inertia of a symmetric scalar matrix by symmetric Gaussian elimination."""
    m = to_scalar(m)
    n = m.shape[0]
    a = [list(row) for row in rows_of(m)]
    if any(a[i][j] != a[j][i] for i in range(n) for j in range(i)):
        raise NotSymmetricError("signature needs a symmetric matrix")
    active = list(range(n))
    pos = neg = 0
    while active:
        pivot = next((i for i in active if a[i][i]), None)
        if pivot is None:
            pair = next(((i, j) for i in active for j in active if i < j and a[i][j]), None)
            if pair is None:
                break
            i, j = pair
            # congruence by row_i += row_j, col_i += col_j puts 2*a[i][j] on the diagonal
            for k in active:
                a[i][k] += a[j][k]
            for k in active:
                a[k][i] += a[k][j]
            pivot = i
        d = a[pivot][pivot]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(pivot)
        # Schur complement on the remaining indices
        for k in active:
            f = a[k][pivot] / d
            if f:
                for l in active:
                    a[k][l] -= f * a[pivot][l]
    return Inertia(pos, neg, n - pos - neg)


@dataclass(frozen=True)
class AffineSolution:
    """Solution set of ``m x = rhs``: ``particular + span(homogeneous)``, or a certificate."""

    feasible: bool
    particular: tuple = ()
    homogeneous: tuple = ()
    certificate: tuple = ()


def solve_affine(m, rhs):
    m = to_scalar(m)
    rows, cols = m.shape
    rhs = tuple(qq(x) for x in rhs)
    dod = m.to_dod()
    augmented = {i: dict(dod.get(i, {})) for i in range(rows)}
    for i, x in enumerate(rhs):
        if x:
            augmented[i][cols] = x
    reduced, pivots = rref(sparse(augmented, (rows, cols + 1)))
    if cols in pivots:
        for y in kernel(m.transpose()):
            if sum(a * b for a, b in zip(y, rhs)):
                return AffineSolution(False, certificate=y)
        return AffineSolution(False)
    particular = [QQ.zero] * cols
    for i, p in enumerate(pivots):
        particular[p] = reduced.get(i, {}).get(cols, QQ.zero)
    return AffineSolution(True, tuple(particular), tuple(kernel(m)))


def charpoly(m):
    """Characteristic polynomial coefficients, leading 1 first."""
    return list(to_scalar(m).to_dense().charpoly())


def determinant(m):
    m = m.to_dense()
    return m.det()


def random_matrix(rng, rows, cols, bound=3):
    return matrix([[int(rng.integers(-bound, bound + 1)) for _ in range(cols)] for _ in range(rows)])


def random_unimodular(rng, n, steps=12):
    """Product of integer elementary row operations; determinant 1."""
    a = [[QQ(int(i == j)) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = (int(x) for x in rng.choice(n, size=2, replace=False))
        k = int(rng.integers(-2, 3))
        a[i] = [x + k * y for x, y in zip(a[i], a[j])]
    return matrix(a)


## Groebner bases


@dataclass(frozen=True)
class MonomialOrder:
    kind: str = "grevlex"
    variables: tuple = ()

    def ring(self):
        if self.kind not in ORDERS:
            raise ValueError(f"Invalid monomial order: {self.kind}")
        return PolyRing(self.variables or ("_unit",), QQ, ORDERS[self.kind])


def default_order(polys, kind="grevlex", extra=()):
    """The order on the variables actually used, alphabetical priority."""
    polys = [p if isinstance(p, PolyElement) else poly(p) for p in polys]
    names = set(variables_of(polys)) | set(extra)
    return MonomialOrder(kind, tuple(sorted(names, key=natural_key)))


@dataclass(frozen=True)
class GroebnerLimits:
    max_generators: int = 32
    max_variables: int = 12
    max_degree: int = 16
    max_basis: int = 400
    max_pairs: int = 50000


@dataclass(frozen=True)
class GroebnerBasis:
    order: MonomialOrder
    polys: tuple

    @property
    def is_unit(self):
        return len(self.polys) == 1 and self.polys[0] == self.polys[0].ring.one

    def reduce(self, p):
        return reduce(p, self)

    def contains(self, p):
        return not reduce(p, self)


def _into(p, ring):
    if isinstance(p, PolyElement):
        return p.set_ring(ring)
    return ring(qq(p))


def span_reduce(polys, ring):
    """Echelonize the QQ-span of ``polys`` over their monomials (same ideal, fewer gens)."""
    polys = [p for p in polys if p]
    if not polys:
        return []
    monoms = sorted({m for p in polys for m in p.itermonoms()}, key=ring.order, reverse=True)
    index = {m: i for i, m in enumerate(monoms)}
    m = sparse({r: {index[mon]: c for mon, c in p.iterterms()} for r, p in enumerate(polys)},
               (len(polys), len(monoms)))
    reduced, pivots = rref(m)
    return [
        ring.from_dict({monoms[j]: c for j, c in reduced[i].items()}) for i in range(len(pivots))
    ]


def s_polynomial(p1, p2):
    ring = p1.ring
    p1, p2 = p1.monic(), p2.monic()
    lcm = ring.monomial_lcm(p1.LM, p2.LM)
    return p1.mul_monom(ring.monomial_div(lcm, p1.LM)) - p2.mul_monom(ring.monomial_div(lcm, p2.LM))


def buchberger(generators, order=None, limits=GroebnerLimits()):
    """Reduced Groebner basis with the product and chain criteria.

    Follows the GROEBNERNEWS2 scheme of sympy's ``groebnertools._buchberger`` (normal pair
    selection, critical-pair update, final inter-reduction), with resource caps added. The
    output is monic and sorted by decreasing leading monomial.
    """
    generators = [poly(g) if not isinstance(g, PolyElement) else g for g in generators]
    if order is None:
        order = default_order(generators)
    ring = order.ring()
    if len(order.variables) > limits.max_variables:
        raise ResourceCapError("max_variables", len(order.variables), limits.max_variables)
    f = span_reduce(list(dict.fromkeys(_into(g, ring) for g in generators if g)), ring)
    if len(f) > limits.max_generators:
        raise ResourceCapError("max_generators", len(f), limits.max_generators)
    degree = max((sum(m) for p in f for m in p.itermonoms()), default=0)
    if degree > limits.max_degree:
        raise ResourceCapError("max_degree", degree, limits.max_degree)
    return GroebnerBasis(order, tuple(_groebner_news(f, ring, limits)))


def _groebner_news(f, ring, limits):
    if not f:
        return []
    key = ring.order
    monomial_mul = ring.monomial_mul
    monomial_div = ring.monomial_div
    monomial_lcm = ring.monomial_lcm

    # inter-reduce the input until stable
    f1 = f[:]
    while True:
        f = f1[:]
        f1 = []
        for i, p in enumerate(f):
            r = p.rem(f[:i])
            if r:
                f1.append(r.monic())
        if f == f1:
            break

    index = {}
    for i, h in enumerate(f):
        index[h] = i

    def normal(g, basis):
        h = g.rem([f[j] for j in basis])
        if not h:
            return None
        h = h.monic()
        if h not in index:
            index[h] = len(f)
            f.append(h)
            if len(f) > limits.max_basis:
                raise ResourceCapError("max_basis", len(f), limits.max_basis)
        return h.LM, index[h]

    def update(G, B, ih):
        mh = f[ih].LM
        C = G.copy()
        D = set()
        while C:
            ig = C.pop()
            mg = f[ig].LM
            lcm_hg = monomial_lcm(mh, mg)

            def lcm_divides(ip):
                return monomial_div(lcm_hg, monomial_lcm(mh, f[ip].LM))

            if monomial_mul(mh, mg) == lcm_hg or (
                not any(lcm_divides(ipx) for ipx in C)
                and not any(lcm_divides(pr[1]) for pr in D)
            ):
                D.add((ih, ig))
        E = {(ih, ig) for ih, ig in D if monomial_mul(mh, f[ig].LM) != monomial_lcm(mh, f[ig].LM)}

        B_new = set()
        for ig1, ig2 in B:
            mg1, mg2 = f[ig1].LM, f[ig2].LM
            lcm12 = monomial_lcm(mg1, mg2)
            if (
                not monomial_div(lcm12, mh)
                or monomial_lcm(mg1, mh) == lcm12
                or monomial_lcm(mg2, mh) == lcm12
            ):
                B_new.add((ig1, ig2))
        B_new |= E

        G_new = {ig for ig in G if not monomial_div(f[ig].LM, mh)}
        G_new.add(ih)
        return G_new, B_new

    pending = set(range(len(f)))
    G = set()
    pairs = set()
    while pending:
        ih = min(pending, key=lambda i: key(f[i].LM))
        pending.remove(ih)
        G, pairs = update(G, pairs, ih)

    processed = 0
    while pairs:
        processed += 1
        if processed > limits.max_pairs:
            raise ResourceCapError("max_pairs", processed, limits.max_pairs)
        ig1, ig2 = min(pairs, key=lambda pr: key(monomial_lcm(f[pr[0]].LM, f[pr[1]].LM)))
        pairs.remove((ig1, ig2))
        h = s_polynomial(f[ig1], f[ig2])
        ht = normal(h, sorted(G, key=lambda g: key(f[g].LM)))
        if ht:
            G, pairs = update(G, pairs, ht[1])

    reduced = set()
    for ig in G:
        ht = normal(f[ig], G - {ig})
        if ht:
            reduced.add(ht[1])
    return sorted((f[i] for i in reduced), key=lambda p: key(p.LM), reverse=True)


def reduce(p, basis, order=None):
    """Normal form of ``p`` modulo ``basis`` (a GroebnerBasis or a list of polys)."""
    if isinstance(basis, GroebnerBasis):
        ring = basis.order.ring()
        polys = list(basis.polys)
    else:
        order = order or default_order(list(basis) + [p])
        ring = order.ring()
        polys = [_into(b, ring) for b in basis if b]
    p = _into(p, ring)
    if not polys:
        return p
    return p.rem(polys)


def is_groebner(polys):
    polys = [p for p in polys if p]
    return all(
        not s_polynomial(p, q).rem(polys)
        for i, p in enumerate(polys)
        for q in polys[i + 1:]
    )


def same_ideal(first, second, limits=GroebnerLimits()):
    """Ideal equality by mutual reduction against Groebner bases of both sides."""
    order = default_order(list(first) + list(second))
    gb_first = buchberger(first, order, limits)
    gb_second = buchberger(second, order, limits)
    return all(gb_first.contains(q) for q in gb_second.polys) and all(
        gb_second.contains(p) for p in gb_first.polys
    )


def in_radical(p, generators, limits=GroebnerLimits()):
    """Radical membership: ``1`` lies in ``I + (1 - y p)``."""
    base = default_order(list(generators) + [p])
    order = MonomialOrder("grevlex", base.variables + ("zz_radical",))
    ring = order.ring()
    y = ring.gens[-1]
    polys = [_into(g, ring) for g in generators] + [ring.one - y * _into(p, ring)]
    return buchberger(polys, order, limits).is_unit


def to_params(p_or_m):
    """Move a polynomial (or matrix) back into the shared parameter ring."""
    if isinstance(p_or_m, PolyElement):
        return p_or_m.set_ring(PARAMS)
    if p_or_m.domain == PARAM_DOMAIN:
        return p_or_m
    return p_or_m.convert_to(PARAM_DOMAIN)
