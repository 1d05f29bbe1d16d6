"""
Invariant para-complex structures on reductive homogeneous spaces ``G/H``.

A model is ``g = h + m`` with ``[h, m] in m`` and an ``h``-invariant ``J`` on ``m``
with ``J^2 = 1``. Everything is evaluated at the origin, so tensors are multilinear
algebra on ``m``:

- ``Xi_+-``: bracket of two vectors of ``Delta_+-`` projected to ``m`` and then to the
  other eigenspace,
- the Nijenhuis tensor of ``J``,
- the Levi-Civita connection ``Lambda`` of an invariant metric and its curvature.

Matrices are ``QQ`` DomainMatrices; vectors are tuples of ``QQ``.
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from sympy import integer_nthroot

import exact
import liealg
import repthy
from exact import QQ
from liealg import LieAlgebra
from repthy import Representation


class ModelError(ValueError):
    pass


def product_structure(k):
    """``J = +1`` on the first ``k`` basis vectors of ``m`` and ``-1`` on the next ``k``."""
    return exact.sparse({i: {i: 1 if i < k else -1} for i in range(2 * k)}, (2 * k, 2 * k)).to_dense()


def _unit(n, i):
    return tuple(QQ.one if k == i else QQ.zero for k in range(n))


def _ground(values):
    return tuple(exact.ground(x) for x in values)


@dataclass(frozen=True, eq=False)
class HomogeneousModel:
    algebra: LieAlgebra
    h_span: tuple
    m_span: tuple
    J: object = None
    name: str = ""

    def __post_init__(self):
        L = self.algebra
        if not L.is_scalar:
            raise ModelError("substitute the bracket parameters before building a model")
        h = tuple(tuple(exact.qq(x) for x in v) for v in self.h_span)
        m = tuple(tuple(exact.qq(x) for x in v) for v in self.m_span)
        object.__setattr__(self, "h_span", h)
        object.__setattr__(self, "m_span", m)
        if len(h) + len(m) != L.dim or exact.rank(exact.matrix(h + m)) < L.dim:
            raise ModelError("h and m must be complementary")
        if h and not liealg.is_subalgebra(L, h):
            raise ModelError("h is not a subalgebra")
        for a in range(len(h)):
            for b in range(len(m)):
                if any(self._split(L.bracket(h[a], m[b]))[0]):
                    raise ModelError("the decomposition is not reductive")
        if self.J is not None:
            J = exact.to_scalar(self.J).to_dense()
            object.__setattr__(self, "J", J)
            n = len(m)
            if J.shape != (n, n) or not exact.same_matrix(J * J, exact.identity(n)):
                raise ModelError("J must satisfy J^2 = 1 on m")
            if any(not exact.is_zero(exact.commutator(A, J)) for A in self.isotropy):
                raise ModelError("J is not invariant under the isotropy")

    @classmethod
    def from_split(cls, g, dh, J=None, name=""):
        """``h`` spanned by the first ``dh`` basis vectors of ``g`` and ``m`` by the rest."""
        n = g.dim
        return cls(g, tuple(_unit(n, i) for i in range(dh)),
                   tuple(_unit(n, i) for i in range(dh, n)), J, name or g.name)

    @property
    def dim_h(self):
        return len(self.h_span)

    @property
    def dim_m(self):
        return len(self.m_span)

    @cached_property
    def _inverse(self):
        columns = self.h_span + self.m_span
        n = self.algebra.dim
        basis = exact.sparse({i: {j: v[i] for j, v in enumerate(columns) if v[i]} for i in range(n)},
                             (n, n))
        return basis.to_dense().inv()

    def _split(self, x):
        c = exact.apply(self._inverse, _ground(x))
        return c[: self.dim_h], c[self.dim_h:]

    @cached_property
    def _table(self):
        L = self.algebra
        return {
            (a, b): self._split(L.bracket(self.m_span[a], self.m_span[b]))
            for a in range(self.dim_m) for b in range(self.dim_m)
        }

    def bracket_m(self, u, v):
        """``[u, v]_m`` for ``u``, ``v`` in ``m`` coordinates."""
        out = [QQ.zero] * self.dim_m
        for a, x in enumerate(u):
            for b, y in enumerate(v):
                if x and y:
                    for k, c in enumerate(self._table[(a, b)][1]):
                        out[k] += x * y * c
        return tuple(out)

    def bracket_h(self, u, v):
        out = [QQ.zero] * self.dim_h
        for a, x in enumerate(u):
            for b, y in enumerate(v):
                if x and y:
                    for k, c in enumerate(self._table[(a, b)][0]):
                        out[k] += x * y * c
        return tuple(out)

    @cached_property
    def isotropy(self):
        """Action matrices of the ``h`` basis on ``m``."""
        L = self.algebra
        n = self.dim_m
        matrices = []
        for x in self.h_span:
            dod = {}
            for j, u in enumerate(self.m_span):
                for i, c in enumerate(self._split(L.bracket(x, u))[1]):
                    if c:
                        dod.setdefault(i, {})[j] = c
            matrices.append(exact.sparse(dod, (n, n)).to_dense())
        return tuple(matrices)

    def isotropy_representation(self):
        names = tuple(f"y{i + 1}" for i in range(self.dim_h))
        h = liealg.Subalgebra(self.algebra, self.h_span).as_algebra(names, f"{self.name}|h")
        return Representation(h, self.isotropy, "m", check=False)

    @cached_property
    def eigenbases(self):
        """Canonical bases of ``Delta_+`` and ``Delta_-``."""
        if self.J is None:
            raise ModelError(f"{self.name or 'model'} carries no para-complex structure")
        n = self.dim_m
        plus = exact.kernel(self.J - exact.identity(n))
        minus = exact.kernel(self.J + exact.identity(n))
        return tuple(plus), tuple(minus)


## Curvature of the distributions


@dataclass(frozen=True, eq=False)
class CurvaturePair:
    """``Xi_+`` and ``Xi_-`` as ``dim Delta_-+ x #pairs`` matrices in eigenbasis coordinates.

    Column ``p`` of ``plus`` is ``Xi_+(e_i, e_j)`` for the ``p``-th pair ``i < j``.
    """

    plus: object
    minus: object
    pairs: tuple

    def xi(self, sign, a, b):
        m = self.plus if sign > 0 else self.minus
        out = [QQ.zero] * m.shape[0]
        for p, (i, j) in enumerate(self.pairs):
            w = a[i] * b[j] - a[j] * b[i]
            if w:
                for k in range(m.shape[0]):
                    out[k] += w * exact.entry(m, k, p)
        return tuple(out)

    def to_json(self):
        return {
            "pairs": [list(p) for p in self.pairs],
            "plus": [[exact.scalar_to_json(x) for x in row] for row in exact.rows_of(self.plus)],
            "minus": [[exact.scalar_to_json(x) for x in row] for row in exact.rows_of(self.minus)],
        }


def curvature_maps(model):
    plus, minus = model.eigenbases
    if len(plus) != len(minus):
        raise ModelError(f"Delta_+ and Delta_- have dimensions {len(plus)} and {len(minus)}")
    k = len(plus)
    frame = plus + minus
    pairs = tuple(combinations(range(k), 2))

    def project(u, v, first):
        w = model.bracket_m(u, v)
        coords = exact.coordinates(w, frame)
        return coords[k:] if first else coords[:k]

    def columns(basis, first):
        cols = [project(basis[i], basis[j], first) for i, j in pairs]
        dod = {r: {p: c[r] for p, c in enumerate(cols) if c[r]} for r in range(k)}
        return exact.sparse(dod, (k, len(pairs))).to_dense()

    return CurvaturePair(columns(plus, True), columns(minus, False), pairs)


def is_nondegenerate(xi):
    k = xi.plus.shape[0]
    return k == 3 and exact.rank(xi.plus) == 3 and exact.rank(xi.minus) == 3


## Nijenhuis tensor


def nijenhuis(model):
    """``N(X, Y) = [JX, JY] - J[JX, Y] - J[X, JY] + [X, Y]`` (brackets projected to ``m``).

    Returned as a ``dim m x #pairs`` matrix, pairs of basis vectors in lexicographic order.
    """
    if model.J is None:
        raise ModelError("no para-complex structure")
    n = model.dim_m
    J = model.J
    units = [_unit(n, i) for i in range(n)]
    images = [exact.apply(J, u) for u in units]
    columns = []
    for i, j in combinations(range(n), 2):
        X, Y, JX, JY = units[i], units[j], images[i], images[j]
        first = model.bracket_m(JX, JY)
        mixed = exact.apply(J, tuple(a + b for a, b in zip(model.bracket_m(JX, Y), model.bracket_m(X, JY))))
        last = model.bracket_m(X, Y)
        columns.append(tuple(a - b + c for a, b, c in zip(first, mixed, last)))
    return exact.matrix([[c[r] for c in columns] for r in range(n)], (n, len(columns)))


def is_integrable(model):
    return exact.is_zero(nijenhuis(model))


def nijenhuis_matches_curvature(model, xi=None):
    """``N = 4 Xi_+-`` on pairs inside one eigenspace."""
    xi = xi or curvature_maps(model)
    plus, minus = model.eigenbases
    k = len(plus)

    def N(u, v):
        J = model.J
        Ju, Jv = exact.apply(J, u), exact.apply(J, v)
        mixed = exact.apply(J, tuple(a + b for a, b in zip(model.bracket_m(Ju, v), model.bracket_m(u, Jv))))
        return tuple(a - b + c for a, b, c in
                     zip(model.bracket_m(Ju, Jv), mixed, model.bracket_m(u, v)))

    for sign, basis, other in ((1, plus, minus), (-1, minus, plus)):
        for i, j in xi.pairs:
            coords = xi.xi(sign, _unit(k, i), _unit(k, j))
            expected = tuple(4 * sum((c * w[r] for c, w in zip(coords, other)), QQ.zero)
                             for r in range(model.dim_m))
            if N(basis[i], basis[j]) != expected:
                return False
    return True


## Symbol and prolongation


def _g1_residual(xi, fp, fm):
    """Derivation defect of ``(f_+, f_-)`` against ``Xi_+`` and ``Xi_-``."""
    k = xi.plus.shape[0]
    out = []
    for sign, f, g in ((1, fp, fm), (-1, fm, fp)):
        for i, j in xi.pairs:
            ei, ej = _unit(k, i), _unit(k, j)
            lhs = tuple(
                a + b for a, b in zip(xi.xi(sign, exact.apply(f, ei), ej), xi.xi(sign, ei, exact.apply(f, ej)))
            )
            rhs = exact.apply(g, xi.xi(sign, ei, ej))
            out.extend(a - b for a, b in zip(lhs, rhs))
    return out


def _linear_system(unknowns, residual):
    """Matrix whose column ``u`` is ``residual`` evaluated on the ``u``-th unit input."""
    columns = [residual(_unit(unknowns, u)) for u in range(unknowns)]
    rows = len(columns[0]) if columns else 0
    return exact.sparse({r: {u: c[r] for u, c in enumerate(columns) if c[r]} for r in range(rows)},
                        (rows, unknowns))


def _as_pair(vector, k):
    fp = exact.matrix([vector[r * k:(r + 1) * k] for r in range(k)], (k, k))
    fm = exact.matrix([vector[k * k + r * k:k * k + (r + 1) * k] for r in range(k)], (k, k))
    return fp, fm


def symbol_g1(xi):
    """Basis of ``g1``: pairs ``(f_+, f_-)`` acting as derivations of both ``Xi``."""
    k = xi.plus.shape[0]
    system = _linear_system(2 * k * k, lambda v: _g1_residual(xi, *_as_pair(v, k)))
    return tuple(_as_pair(v, k) for v in exact.kernel(system))


def prolongation_g2(xi, g1=None):
    """Basis of ``g2 = {A: T -> g1 | A(u)v = A(v)u}`` with ``T = Delta_+ + Delta_-``.

    Elements are returned as coefficient vectors indexed ``(u, basis element of g1)``.
    """
    g1 = symbol_g1(xi) if g1 is None else g1
    k = xi.plus.shape[0]
    n = 2 * k
    if not g1:
        return ()
    actions = [exact.block_diag(fp, fm) for fp, fm in g1]
    units = [_unit(n, u) for u in range(n)]
    images = [[exact.apply(F, units[v]) for v in range(n)] for F in actions]

    def residual(c):
        out = []
        for u, v in combinations(range(n), 2):
            value = [QQ.zero] * n
            for b, F in enumerate(images):
                cu, cv = c[u * len(g1) + b], c[v * len(g1) + b]
                for r in range(n):
                    value[r] += cu * F[v][r] - cv * F[u][r]
            out.extend(value)
        return out

    return tuple(exact.kernel(_linear_system(n * len(g1), residual)))


def random_curvature_pair(rng, k=3):
    """A non-degenerate pair with small rational entries, redrawn until both are invertible."""
    pairs = tuple(combinations(range(k), 2))
    while True:
        plus = exact.random_matrix(rng, k, len(pairs))
        minus = exact.random_matrix(rng, k, len(pairs))
        xi = CurvaturePair(plus, minus, pairs)
        if is_nondegenerate(xi):
            return xi


def zero_curvature_pair(k=3):
    pairs = tuple(combinations(range(k), 2))
    return CurvaturePair(exact.zeros(k, len(pairs)), exact.zeros(k, len(pairs)), pairs)


## Volume normalization


@dataclass(frozen=True, eq=False)
class VolumeNormalization:
    psi: object
    det: object
    scale: object = None
    normalized: object = None
    invariants: tuple = ()

    def to_json(self):
        def rows(m):
            return [[exact.scalar_to_json(x) for x in row] for row in exact.rows_of(m)]

        return {
            "psi": rows(self.psi),
            "det": exact.scalar_to_json(self.det),
            "scale": exact.scalar_to_json(self.scale) if self.scale is not None else None,
            "normalized": rows(self.normalized) if self.normalized is not None else None,
            "invariants": [exact.scalar_to_json(x) for x in self.invariants],
        }


CYCLIC = ((0, 1, 2), (1, 2, 0), (2, 0, 1))


def psi_plus(xi):
    """``Psi_+(z) = sum over cyclic (i, j, k) of Xi_-(Xi_+(z, e_i), Xi_+(e_j, e_k))``."""
    k = xi.plus.shape[0]
    if k != 3:
        raise ModelError("Psi is defined for 3-dimensional distributions")
    columns = []
    for z in range(3):
        total = [QQ.zero] * 3
        for i, j, l in CYCLIC:
            a = xi.xi(1, _unit(3, z), _unit(3, i))
            b = xi.xi(1, _unit(3, j), _unit(3, l))
            total = [x + y for x, y in zip(total, xi.xi(-1, a, b))]
        columns.append(total)
    return exact.matrix([[c[r] for c in columns] for r in range(3)], (3, 3))


def _rational_cube_root(q):
    q = exact.qq(q)
    sign = -1 if q < 0 else 1
    num, exact_num = integer_nthroot(abs(int(q.numerator)), 3)
    den, exact_den = integer_nthroot(int(q.denominator), 3)
    if not (exact_num and exact_den):
        return None
    return QQ(sign * int(num), int(den))


def volume_normalize(xi):
    """Rescale ``Psi_+`` to determinant 1 when the cube root is rational.

    The scale-free invariants ``tr^3 / det`` and ``s2^3 / det^2`` are always returned;
    ``s2`` is the second elementary symmetric function of the eigenvalues.
    """
    if not is_nondegenerate(xi):
        raise ModelError("volume normalization needs non-degenerate curvature")
    psi = psi_plus(xi)
    det = exact.determinant(psi)
    if not det:
        raise ModelError("Psi_+ is singular")
    _, b, c, _ = exact.charpoly(psi)
    invariants = ((-b) ** 3 / det, c ** 3 / det ** 2)
    root = _rational_cube_root(det)
    if root is None:
        return VolumeNormalization(psi, det, invariants=invariants)
    scale = 1 / root
    return VolumeNormalization(psi, det, scale, exact.scale(psi, scale), invariants)


def classify_nijenhuis(m):
    """Real Jordan type of a 3x3 matrix up to scale.

    ``real-diagonalizable``, ``complex-pair``, ``jordan-2`` (a 2-block) or ``jordan-3``.
    """
    m = exact.to_scalar(m).to_dense()
    if m.shape != (3, 3):
        raise ModelError("expected a 3x3 matrix")
    _, b, c, d = exact.charpoly(m)
    disc = 18 * b * c * d - 4 * b ** 3 * d + b ** 2 * c ** 2 - 4 * c ** 3 - 27 * d ** 2
    if disc < 0:
        return "complex-pair"
    if disc > 0:
        return "real-diagonalizable"
    powers = [exact.identity(3)]
    for _ in range(3):
        powers.append(powers[-1] * m)
    minimal = next(
        k for k in range(1, 4)
        if exact.rank(exact.matrix([[x for row in exact.rows_of(p) for x in row] for p in powers[: k + 1]])) <= k
    )
    # distinct eigenvalues: 1 for a triple root, 2 when disc = 0 otherwise
    distinct = 1 if b ** 2 == 3 * c and b ** 3 == 27 * d else 2
    if minimal == distinct:
        return "real-diagonalizable"
    return "jordan-3" if minimal == 3 and distinct == 1 else "jordan-2"


## Metrics and the Levi-Civita connection


def _symmetric(n, v):
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    dod = {}
    for (i, j), x in zip(pairs, v):
        if x:
            dod.setdefault(i, {})[j] = x
            dod.setdefault(j, {})[i] = x
    return exact.sparse(dod, (n, n)).to_dense()


def _flat(m):
    return [x for row in exact.rows_of(m) for x in row]


def invariant_metrics(model):
    """Canonical basis of symmetric ``G`` with ``A^T G + G A = 0`` for the isotropy
    and, when ``J`` is present, ``J^T G J = -G``."""
    n = model.dim_m

    def residual(v):
        G = _symmetric(n, v)
        out = []
        for A in model.isotropy:
            out.extend(_flat(A.transpose() * G + G * A))
        if model.J is not None:
            out.extend(_flat(model.J.transpose() * G * model.J + G))
        return out or [QQ.zero]

    system = _linear_system(n * (n + 1) // 2, residual)
    return tuple(_symmetric(n, v) for v in exact.kernel(system))


def _form(G, u, v):
    return sum((u[i] * exact.entry(G, i, j) * v[j] for i in range(len(u)) for j in range(len(v))
                if u[i] and v[j]), QQ.zero)


def connection(model, G):
    """``Lambda(e_a)`` for every basis vector of ``m``: ``Lambda(X)Y = 1/2 [X,Y]_m + U(X,Y)``.

    ``2 g(U(X, Y), Z) = g([Z, X]_m, Y) + g(X, [Z, Y]_m)``.
    """
    n = model.dim_m
    G = exact.to_scalar(G).to_dense()
    if exact.rank(G) < n:
        raise ModelError("metric is degenerate")
    Ginv = G.inv()
    units = [_unit(n, i) for i in range(n)]
    lam = []
    for X in units:
        columns = []
        for Y in units:
            w = tuple(
                (_form(G, model.bracket_m(Z, X), Y) + _form(G, X, model.bracket_m(Z, Y))) / 2
                for Z in units
            )
            U = exact.apply(Ginv, w)
            half = model.bracket_m(X, Y)
            columns.append(tuple(h / 2 + u for h, u in zip(half, U)))
        lam.append(exact.matrix([[c[r] for c in columns] for r in range(n)], (n, n)))
    return tuple(lam)


def levi_civita_defects(model, G, lam=None):
    """Index triples where ``Lambda`` fails metric compatibility or torsion-freeness.

    ``("metric", a, b, c)`` when ``g(Lambda_a e_b, e_c) + g(e_b, Lambda_a e_c) != 0`` and
    ``("torsion", a, b)`` when ``Lambda_a e_b - Lambda_b e_a != [e_a, e_b]_m``.
    """
    n = model.dim_m
    lam = lam or connection(model, G)
    G = exact.to_scalar(G).to_dense()
    units = [_unit(n, i) for i in range(n)]
    images = [[exact.apply(lam[a], units[b]) for b in range(n)] for a in range(n)]
    out = []
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if _form(G, images[a][b], units[c]) + _form(G, units[b], images[a][c]):
                    out.append(("metric", a, b, c))
    for a, b in combinations(range(n), 2):
        difference = tuple(x - y for x, y in zip(images[a][b], images[b][a]))
        if difference != tuple(model.bracket_m(units[a], units[b])):
            out.append(("torsion", a, b))
    return out


def curvature(model, lam):
    """``R(e_a, e_b) = [Lambda_a, Lambda_b] - Lambda([e_a, e_b]_m) - rho([e_a, e_b]_h)``."""
    n = model.dim_m
    units = [_unit(n, i) for i in range(n)]
    out = {}
    for a, b in combinations(range(n), 2):
        R = exact.commutator(lam[a], lam[b])
        for k, c in enumerate(model.bracket_m(units[a], units[b])):
            if c:
                R = R - exact.scale(lam[k], c)
        for k, c in enumerate(model.bracket_h(units[a], units[b])):
            if c:
                R = R - exact.scale(model.isotropy[k], c)
        out[(a, b)] = R
        out[(b, a)] = -R
    zero = exact.zeros(n, n)
    for a in range(n):
        out[(a, a)] = zero
    return out


def ricci(model, G):
    """``Ric(Y, Z) = tr(X -> R(X, Y) Z)``."""
    n = model.dim_m
    R = curvature(model, connection(model, G))
    rows = [[sum((exact.entry(R[(a, y)], a, z) for a in range(n)), QQ.zero) for z in range(n)]
            for y in range(n)]
    return exact.matrix(rows, (n, n))


@dataclass(frozen=True)
class EinsteinVerdict:
    einstein: bool
    factor: object = None

    def to_json(self):
        factor = exact.scalar_to_json(self.factor) if self.factor is not None else None
        return {"einstein": self.einstein, "factor": factor}


def is_einstein(model, G):
    Ric = ricci(model, G)
    G = exact.to_scalar(G).to_dense()
    i, j = next((i, j) for i in range(model.dim_m) for j in range(model.dim_m) if exact.entry(G, i, j))
    factor = exact.entry(Ric, i, j) / exact.entry(G, i, j)
    if exact.same_matrix(Ric, exact.scale(G, factor)):
        return EinsteinVerdict(True, factor)
    return EinsteinVerdict(False)


## Nearly para-Kahler


def fundamental_form(model, G):
    """``omega(X, Y) = g(X, JY)`` as the matrix ``G J``.

    Equals ``-J^T G`` since ``J^T G J = -G``; the nearly para-Kahler verdict does not see the sign.
    """
    return exact.to_scalar(G).to_dense() * model.J


def nabla_omega(model, G, lam=None):
    """``T[a][b][c] = (nabla_{e_a} omega)(e_b, e_c) = -omega(Lambda_a e_b, e_c) - omega(e_b, Lambda_a e_c)``."""
    n = model.dim_m
    lam = lam or connection(model, G)
    omega = fundamental_form(model, G)
    # omega(Lambda_a e_b, e_c) = (Lambda_a^T Omega)[b][c]
    T = []
    for a in range(n):
        left = lam[a].transpose() * omega
        right = omega * lam[a]
        T.append([[-exact.entry(left, b, c) - exact.entry(right, b, c) for c in range(n)]
                  for b in range(n)])
    return T


def d_omega(model, omega):
    """``d omega(X,Y,Z) = -omega([X,Y]_m, Z) - omega([Y,Z]_m, X) - omega([Z,X]_m, Y)``."""
    n = model.dim_m
    units = [_unit(n, i) for i in range(n)]

    def value(x, y, z):
        return -(
            _form(omega, model.bracket_m(units[x], units[y]), units[z])
            + _form(omega, model.bracket_m(units[y], units[z]), units[x])
            + _form(omega, model.bracket_m(units[z], units[x]), units[y])
        )

    return [[[value(x, y, z) for z in range(n)] for y in range(n)] for x in range(n)]


def _is_zero_tensor(T):
    return not any(x for plane in T for row in plane for x in row)


def nearly_para_kahler(model, G):
    """``strict`` when ``nabla omega`` is totally skew and nonzero, ``non-strict`` when it
    vanishes, ``no`` otherwise."""
    T = nabla_omega(model, G)
    n = model.dim_m
    skew = all(T[a][b][c] == -T[b][a][c] for a in range(n) for b in range(n) for c in range(n))
    if not skew:
        return "no"
    return "non-strict" if _is_zero_tensor(T) else "strict"


def check_p_identity(model, G):
    """``Alt(nabla omega) = d omega / 3``, which holds for any torsion-free connection."""
    T = nabla_omega(model, G)
    domega = d_omega(model, fundamental_form(model, G))
    n = model.dim_m
    for x in range(n):
        for y in range(n):
            for z in range(n):
                alt = (T[x][y][z] + T[y][z][x] + T[z][x][y]) / 3
                if alt != domega[x][y][z] / 3:
                    return False
    return True


def trivial_summands(model):
    """Dimensions of the invariants in ``m* (x) Lambda^2 m*`` and ``Lambda^3 m*``."""
    rho = model.isotropy_representation()
    dual = repthy.dual(rho)
    mixed = repthy.tensor(dual, repthy.exterior(dual, 2))
    return len(repthy.invariants(mixed)), len(repthy.invariants(repthy.exterior(dual, 3)))


## Model summaries and the SU(2)^3 family


def summarize(model):
    """Every geometric verdict for a model with ``J``, as plain data."""
    xi = curvature_maps(model)
    metrics = invariant_metrics(model)
    out = {
        "nondegenerate": is_nondegenerate(xi),
        "integrable": is_integrable(model),
        "nijenhuis_curvature": nijenhuis_matches_curvature(model, xi),
        "metrics": len(metrics),
    }
    if metrics:
        try:
            G = preferred_metric(model, metrics)
        except ModelError:
            return out
        inertia = exact.signature(G)
        out["signature"] = [inertia.positive, inertia.negative]
        if not inertia.nullity:
            out["nk"] = nearly_para_kahler(model, G)
            out["p_identity"] = check_p_identity(model, G)
            out["einstein"] = is_einstein(model, G).einstein
    return out


def preferred_metric(model, metrics=None):
    """``-K`` on ``m`` when it is a nondegenerate invariant metric, else the unique one.

    Raises ``ModelError`` when neither applies.
    """
    n = model.dim_m
    G = killing_metric(model)
    anti = model.J is None or exact.same_matrix(model.J.transpose() * G * model.J, -G)
    if anti and exact.rank(G) == n:
        return G
    metrics = invariant_metrics(model) if metrics is None else metrics
    if len(metrics) == 1:
        return metrics[0]
    raise ModelError(f"{len(metrics)} invariant metrics and no nondegenerate Killing restriction")


def su2_model():
    """``SU(2)/{e}`` with the metric ``-Killing`` available through ``killing_metric``."""
    L = LieAlgebra.from_brackets(("e1", "e2", "e3"),
                                 ["[e1, e2] = e3", "[e2, e3] = e1", "[e3, e1] = e2"], "su2")
    return HomogeneousModel.from_split(L, 0, None, "SU(2)")


def killing_metric(model):
    """``-K`` restricted to ``m``."""
    K = liealg.killing_form(model.algebra)
    n = model.dim_m
    rows = [[-_form(K, u, v) for v in model.m_span] for u in model.m_span]
    return exact.matrix(rows, (n, n))


SU2_CUBED_NAMES = tuple(f"{p}{i}" for p in "xyz" for i in (1, 2, 3))


def su2cubed_algebra():
    brackets = {}
    for block in range(3):
        o = 3 * block
        brackets[(o, o + 1)] = {o + 2: 1}
        brackets[(o + 1, o + 2)] = {o: 1}
        brackets[(o, o + 2)] = {o + 1: -1}
    return LieAlgebra.from_structure(SU2_CUBED_NAMES, brackets, "su2+su2+su2")


def su2cubed_model(r, t):
    """``SU(2)^3 / diag``; ``m = {(a, b, 0)}`` and ``J = [[r, (1 - r^2)/t], [t, -r]]`` blockwise."""
    r, t = exact.qq(r), exact.qq(t)
    if not t:
        raise ModelError("t = 0 is outside the family")
    s = (1 - r * r) / t
    L = su2cubed_algebra()
    h = tuple(tuple(QQ.one if k % 3 == i else QQ.zero for k in range(9)) for i in range(3))
    m = tuple(_unit(9, i) for i in range(6))
    dod = {}
    for i in range(3):
        dod.setdefault(i, {})[i] = r
        dod.setdefault(i, {})[i + 3] = s
        dod.setdefault(i + 3, {})[i] = t
        dod.setdefault(i + 3, {})[i + 3] = -r
    J = exact.sparse(dod, (6, 6)).to_dense()
    return HomogeneousModel(L, h, m, J, f"SU(2)^3/SU(2) r={r} t={t}")


def nijenhuis_family_su2cubed(r, t):
    """``integrable``, ``degenerate-nonintegrable`` or ``nondegenerate``."""
    model = su2cubed_model(r, t)
    if is_integrable(model):
        return "integrable"
    return "nondegenerate" if is_nondegenerate(curvature_maps(model)) else "degenerate-nonintegrable"
