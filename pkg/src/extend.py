"""
Extensions of a Lie algebra ``h`` by an ``h``-module ``m`` on ``g = h + m``.

A cocycle ``phi`` gives the ``h``-part of the mixed bracket,
``[x, u] = phi(x, u) + x.u``; it is stored as one ``dim h x dim m`` matrix per basis
element of ``h`` (column ``i`` holds ``phi(x, e_i)``). Brackets on ``Lambda^2 m`` split as
``theta = theta_h + theta_m``. Forms ``Lambda^2 m -> W`` are flattened like
``repthy.hom(exterior(m, 2), W)``: entry ``(a, pair)`` sits at ``a * npairs + pair``.
"""

from dataclasses import dataclass, field
from functools import cached_property

import exact
import repthy
from exact import PARAM_GENS, PARAMS, QQ
from liealg import LieAlgebra, jacobi_defect
from repthy import Representation


class CocycleError(ValueError):
    def __init__(self, message, defects=None):
        self.defects = dict(defects or {})
        super().__init__(message)


class ConstraintError(ValueError):
    pass


def _poly_rows(m):
    return [[exact.poly(x) for x in row] for row in exact.rows_of(m)]


def _dot(y, values):
    return sum((exact.poly(v) * c for c, v in zip(y, values) if c and v), PARAMS.zero)


@dataclass(frozen=True, eq=False)
class Cocycle:
    module: Representation
    maps: tuple
    check: bool = field(default=True, repr=False)

    def __post_init__(self):
        L = self.module.algebra
        maps = tuple(m.to_dense() for m in self.maps)
        object.__setattr__(self, "maps", maps)
        if len(maps) != L.dim or any(m.shape != (L.dim, self.module.dim) for m in maps):
            raise CocycleError(f"phi needs {L.dim} matrices of shape {(L.dim, self.module.dim)}")
        if self.check:
            defects = cocycle_defects(self)
            if defects:
                raise CocycleError(f"d phi has {len(defects)} nonzero components", defects)

    @classmethod
    def zero(cls, module):
        L = module.algebra
        return cls(module, tuple(exact.zeros(L.dim, module.dim) for _ in range(L.dim)))

    @classmethod
    def from_cochain(cls, module, cochain, check=True):
        """A 1-cochain of ``hom_module(module)`` (as from ``repthy.ce_cohomology``)."""
        dh, dm = module.algebra.dim, module.dim
        maps = []
        for t in range(dh):
            flat = cochain.value(t)
            maps.append(exact.matrix([flat[k * dm:(k + 1) * dm] for k in range(dh)], (dh, dm)))
        return cls(module, tuple(maps), check)

    @property
    def algebra(self):
        return self.module.algebra

    @property
    def is_scalar(self):
        return all(exact.is_scalar_matrix(m) for m in self.maps)

    @cached_property
    def entries(self):
        """``entries[t][k][i]``: component ``k`` of ``phi(x_t, e_i)``."""
        return [_poly_rows(m) for m in self.maps]

    def flat(self):
        return tuple(x for rows in self.entries for row in rows for x in row)

    def value(self, y, u):
        """``phi(y, u)`` for ``y`` in ``h`` and ``u`` in ``m`` given by coordinates."""
        return _pairing(self.entries, y, u)

    def parameters(self):
        return exact.variables_of(list(self.flat()))

    def substitute(self, bindings):
        maps = [
            exact.matrix([[exact.substitute(x, bindings) for x in row] for row in rows], m.shape)
            for m, rows in zip(self.maps, self.entries)
        ]
        return Cocycle(self.module, tuple(maps), self.check)

    def to_json(self):
        return {
            "maps": [[[exact.value_to_json(x) for x in row] for row in rows] for rows in self.entries],
        }


def hom_module(module):
    """``Hom(m, h)`` with ``h`` acting by its adjoint representation."""
    return repthy.hom(module, repthy.adjoint(module.algebra))


def _pairing(entries, y, u):
    """Bilinear ``F(y, u) = sum y_t u_i F(x_t)[:, i]`` for per-basis matrices ``F``."""
    rows = len(entries[0]) if entries else 0
    out = [PARAMS.zero] * rows
    for t, a in enumerate(y):
        if not a:
            continue
        for i, b in enumerate(u):
            if not b:
                continue
            ab = exact.poly(a) * exact.poly(b)
            for k in range(rows):
                x = entries[t][k][i]
                if x:
                    out[k] += ab * x
    return tuple(out)


def _act(rho, y, u):
    """Module action ``rho(y) u``."""
    return _pairing(rho, y, u)


def _unit(n, i):
    return tuple(PARAMS.one if k == i else PARAMS.zero for k in range(n))


def cocycle_defects(cocycle):
    """Nonzero components ``{(t1, t2, k, i): value}`` of ``d_h phi``."""
    module = cocycle.module
    L = module.algebra
    dh, dm = L.dim, module.dim
    d = repthy.differential(hom_module(module), 1)
    values = exact.apply(d, cocycle.flat())
    pairs = repthy.wedge_basis(dh, 2)
    defects = {}
    for index, v in enumerate(values):
        if v:
            pair, rest = divmod(index, dh * dm)
            k, i = divmod(rest, dm)
            defects[pairs[pair] + (k, i)] = exact.poly(v)
    return defects


def twisted_module(cocycle):
    """``h`` acting on ``h + m`` by ``[[ad x, phi(x)], [0, rho(x)]]``."""
    defects = cocycle_defects(cocycle)
    if defects:
        raise CocycleError(f"d phi has {len(defects)} nonzero components", defects)
    module = cocycle.module
    L = module.algebra
    dh, dm = L.dim, module.dim
    parametric = not cocycle.is_scalar
    matrices = []
    for t in range(L.dim):
        base = exact.block_diag(L.ad(t), module.matrices[t])
        dod = {k: {dh + i: x for i, x in enumerate(row) if x} for k, row in enumerate(cocycle.entries[t])}
        corner = exact.sparse(dod, (dh + dm, dh + dm), parametric)
        matrices.append(base + corner)
    return Representation(L, tuple(matrices), f"{L.name} + {module.name}")


def gauge(cocycle, change):
    """``phi + d_h A`` for ``A: m -> h`` given as a ``dim h x dim m`` matrix."""
    module = cocycle.module
    L = module.algebra
    maps = tuple(
        phi + L.ad(t) * change - change * module.matrices[t]
        for t, phi in enumerate(cocycle.maps)
    )
    return Cocycle(module, maps, cocycle.check)


def change_of_complement(cocycle, change):
    """Block matrix ``[[1, A], [0, 1]]`` on ``h + m`` intertwining ``phi + d_h A`` with ``phi``."""
    dh, dm = cocycle.algebra.dim, cocycle.module.dim
    n = dh + dm
    dod = {i: {i: 1} for i in range(n)}
    for k, row in enumerate(exact.rows_of(change)):
        for i, x in enumerate(row):
            if x:
                dod[k][dh + i] = x
    return exact.sparse(dod, (n, n), not exact.is_scalar_matrix(change)).to_dense()


## Forms on m


def form_module(module, target):
    """``Hom(Lambda^2 m, target)``: antisymmetric forms on ``m`` with values in ``target``."""
    return repthy.hom(repthy.exterior(module, 2), target)


@dataclass(frozen=True, eq=False)
class FormCochain:
    """A 1-cochain on ``h`` with values in forms ``Lambda^2 m -> W``."""

    cochain: repthy.Cochain
    m_dim: int
    target_dim: int

    @property
    def coefficients(self):
        return self.cochain.coefficients

    @property
    def npairs(self):
        return self.m_dim * (self.m_dim - 1) // 2

    def __call__(self, t, i, j):
        return _form_entry(self.cochain.value(t), self.m_dim, self.target_dim, i, j)

    def is_zero(self):
        return not any(self.coefficients)

    def parameters(self):
        return exact.variables_of([exact.poly(x) for x in self.coefficients])


def _form_entry(vector, dm, target_dim, i, j):
    """``theta(e_i, e_j)`` of a flattened form."""
    if i == j:
        return (PARAMS.zero,) * target_dim
    sign = 1
    if i > j:
        i, j, sign = j, i, -1
    npairs = dm * (dm - 1) // 2
    p = repthy.cochain_index(dm, 2)[(i, j)]
    return tuple(sign * exact.poly(vector[a * npairs + p]) for a in range(target_dim))


def _form_cochain(module, target, value):
    """Build a FormCochain from ``value(t, i, j) -> target vector``."""
    L = module.algebra
    dm = module.dim
    pairs = repthy.wedge_basis(dm, 2)
    npairs = len(pairs)
    coeffs = []
    for t in range(L.dim):
        block = [PARAMS.zero] * (target.dim * npairs)
        for p, (i, j) in enumerate(pairs):
            for a, x in enumerate(value(t, i, j)):
                block[a * npairs + p] = x
        coeffs += block
    return FormCochain(repthy.Cochain(1, form_module(module, target), tuple(coeffs)), dm, target.dim)


def delta_op(cocycle):
    """``delta phi(x)(u1, u2) = phi(x, u1).u2 - phi(x, u2).u1`` in forms with values in ``m``."""
    module = cocycle.module
    dm = module.dim
    rho = [_poly_rows(m) for m in module.matrices]
    columns = _columns(cocycle)

    def value(t, i, j):
        a = _act(rho, columns[t][i], _unit(dm, j))
        b = _act(rho, columns[t][j], _unit(dm, i))
        return tuple(x - y for x, y in zip(a, b))

    return _form_cochain(module, module, value)


def _columns(cocycle):
    """``columns[t][i] = phi(x_t, e_i)`` as an ``h`` vector."""
    dh, dm = cocycle.algebra.dim, cocycle.module.dim
    return [
        [tuple(cocycle.entries[t][k][i] for k in range(dh)) for i in range(dm)]
        for t in range(dh)
    ]


def _require_theta_m(cocycle, theta_m):
    module = cocycle.module
    d = repthy.differential(form_module(module, module), 0)
    image = exact.apply(d, theta_m)
    delta = delta_op(cocycle).coefficients
    if any(exact.poly(a) - exact.poly(b) for a, b in zip(image, delta)):
        raise ConstraintError("theta_m does not solve delta phi = d theta_m")


def q_op(cocycle, theta_m, check=True):
    """``Q phi(x)(u1, u2) = phi(phi(x, u1), u2) - phi(phi(x, u2), u1) - phi(x, theta_m(u1, u2))``."""
    if check:
        _require_theta_m(cocycle, theta_m)
    module = cocycle.module
    dm = module.dim
    L = module.algebra
    columns = _columns(cocycle)

    def value(t, i, j):
        first = cocycle.value(columns[t][i], _unit(dm, j))
        second = cocycle.value(columns[t][j], _unit(dm, i))
        third = cocycle.value(_unit(L.dim, t), _form_entry(theta_m, dm, dm, i, j))
        return tuple(a - b - c for a, b, c in zip(first, second, third))

    return _form_cochain(module, repthy.adjoint(L), value)


def p_nu(cocycle, nu):
    """``p_nu(x)(u1, u2) = phi(x, nu(u1, u2))`` for an invariant form ``nu``."""
    module = cocycle.module
    forms = form_module(module, module)
    for m in forms.matrices:
        if any(exact.apply(m, nu)):
            raise ConstraintError("nu is not h-invariant")
    dm = module.dim
    L = module.algebra

    def value(t, i, j):
        return cocycle.value(_unit(L.dim, t), _form_entry(nu, dm, dm, i, j))

    return _form_cochain(module, repthy.adjoint(L), value)


def q_sigma(cocycle, sigma, theta_m):
    """The gauge operator ``q_sigma`` for ``sigma: m -> h`` (a ``dim h x dim m`` matrix)."""
    module = cocycle.module
    L = module.algebra
    dh, dm = L.dim, module.dim
    rho = [_poly_rows(m) for m in module.matrices]
    ds = [_poly_rows(L.ad(t) * sigma - sigma * module.matrices[t]) for t in range(dh)]
    sig = _poly_rows(sigma)
    columns = _columns(cocycle)

    def d_sigma(y, u):
        return _pairing(ds, y, u)

    def delta_sigma(i, j):
        a = _act(rho, tuple(sig[k][i] for k in range(dh)), _unit(dm, j))
        b = _act(rho, tuple(sig[k][j] for k in range(dh)), _unit(dm, i))
        return tuple(x - y for x, y in zip(a, b))

    def value(t, i, j):
        x = _unit(dh, t)
        ui, uj = _unit(dm, i), _unit(dm, j)
        ds_i, ds_j = d_sigma(x, ui), d_sigma(x, uj)
        dsig = delta_sigma(i, j)
        terms = [
            (1, d_sigma(columns[t][i], uj)),
            (-1, d_sigma(columns[t][j], ui)),
            (1, cocycle.value(ds_i, uj)),
            (-1, cocycle.value(ds_j, ui)),
            (1, d_sigma(ds_i, uj)),
            (-1, d_sigma(ds_j, ui)),
            (-1, cocycle.value(x, dsig)),
            (-1, d_sigma(x, _form_entry(theta_m, dm, dm, i, j))),
            (-1, d_sigma(x, dsig)),
        ]
        out = [PARAMS.zero] * dh
        for sign, vector in terms:
            for k, v in enumerate(vector):
                out[k] += sign * v
        return tuple(out)

    return _form_cochain(module, repthy.adjoint(L), value)


## Constraint check


@dataclass(frozen=True)
class ConstraintVerdict:
    satisfiable: bool
    failed_step: int = 0
    step1: tuple = ()
    theta_m: tuple = ()
    invariant_forms: int = 0
    residual: tuple = ()

    def to_json(self):
        return {
            "satisfiable": self.satisfiable,
            "failed_step": self.failed_step,
            "step1": [exact.value_to_json(p) for p in self.step1],
            "invariant_forms": self.invariant_forms,
            "residual": [exact.value_to_json(p) for p in self.residual],
        }


def _hstack(left, columns):
    rows, cols = left.shape
    dod = {i: dict(row) for i, row in exact.to_scalar(left).to_dod().items()}
    for c, column in enumerate(columns):
        for i, x in enumerate(column):
            if x:
                dod.setdefault(i, {})[cols + c] = exact.qq(x)
    return exact.sparse(dod, (rows, cols + len(columns)))


def _split_solve(d, values):
    """Polynomial ``theta`` with ``d theta = values``, solved monomial by monomial."""
    by_monomial = {}
    for index, v in enumerate(values):
        for monom, coeff in exact.poly(v).iterterms():
            by_monomial.setdefault(monom, {})[index] = coeff
    theta = [PARAMS.zero] * d.shape[1]
    for monom, entries in by_monomial.items():
        rhs = tuple(entries.get(i, QQ.zero) for i in range(len(values)))
        solution = exact.solve_affine(d, rhs)
        if not solution.feasible:
            raise ConstraintError("delta phi is not exact after the step (1) conditions")
        term = PARAMS.term_new(monom, QQ.one)
        for i, x in enumerate(solution.particular):
            if x:
                theta[i] += term * x
    return tuple(theta)


def _linear_bindings(gb):
    """Solve a reduced Groebner basis of linear polynomials for its leading variables."""
    bindings = {}
    for g in gb.polys:
        p = exact.to_params(g)
        if any(sum(m) > 1 for m in p.itermonoms()):
            raise ConstraintError("step (1) conditions are not linear in the cocycle parameters")
        lead = gb.order.variables[g.LM.index(1)]
        bindings[lead] = PARAM_GENS[lead] - p
    return bindings


AUXILIARY = tuple(f"n{i}" for i in range(1, 13))


def check_extension_constraints(cocycle, limits=exact.GroebnerLimits()):
    """Test both conditions on ``[phi]`` for a (possibly parametric) cocycle.

    Step (1) solves ``delta phi = d theta_m``. Step (2) asks for ``theta_h`` and an
    invariant ``nu`` with ``Q phi + p_nu = d theta_h``; for parametric cocycles the
    coordinates of ``nu`` are eliminated and the remaining ideal on the cocycle
    parameters is returned as ``residual``.
    """
    module = cocycle.module
    L = module.algebra
    if not (module.is_scalar and L.is_scalar):
        raise ConstraintError("substitute the algebra parameters before checking constraints")
    forms_m = form_module(module, module)
    forms_h = form_module(module, repthy.adjoint(L))
    d_m = exact.to_scalar(repthy.differential(forms_m, 0))
    d_h = exact.to_scalar(repthy.differential(forms_h, 0))
    delta = delta_op(cocycle).coefficients
    invariant = exact.kernel(d_m)

    if cocycle.is_scalar:
        step1 = exact.solve_affine(d_m, delta)
        if not step1.feasible:
            return ConstraintVerdict(False, 1, residual=(PARAMS.one,))
        theta = step1.particular
        q = q_op(cocycle, theta, check=False).coefficients
        columns = [p_nu(cocycle, nu).coefficients for nu in invariant]
        solution = exact.solve_affine(_hstack(d_h, columns), tuple(-exact.ground(x) for x in q))
        return ConstraintVerdict(
            solution.feasible,
            0 if solution.feasible else 2,
            theta_m=theta,
            invariant_forms=len(invariant),
            residual=() if solution.feasible else (PARAMS.one,),
        )

    conditions = [_dot(y, delta) for y in exact.kernel(d_m.transpose())]
    conditions = [c for c in conditions if c]
    step1_polys = []
    bindings = {}
    if conditions:
        gb1 = exact.buchberger(conditions, limits=limits)
        if gb1.is_unit:
            return ConstraintVerdict(False, 1, step1=(PARAMS.one,), residual=(PARAMS.one,))
        bindings = _linear_bindings(gb1)
        step1_polys = [exact.to_params(g) for g in gb1.polys]
    reduced = cocycle.substitute(bindings) if bindings else cocycle
    theta = _split_solve(d_m, delta_op(reduced).coefficients)
    q = q_op(reduced, theta, check=False).coefficients
    columns = [p_nu(reduced, nu).coefficients for nu in invariant]
    if len(columns) > len(AUXILIARY):
        raise exact.ResourceCapError("max_variables", len(columns), len(AUXILIARY))
    unknowns = [PARAM_GENS[n] for n in AUXILIARY[: len(columns)]]
    conditions = []
    for y in exact.kernel(d_h.transpose()):
        c = _dot(y, q) + sum((n * _dot(y, col) for n, col in zip(unknowns, columns)), PARAMS.zero)
        if c:
            conditions.append(c)
    eliminated = []
    if conditions:
        names = exact.variables_of(conditions)
        auxiliary = tuple(n for n in names if n in AUXILIARY)
        rest = tuple(n for n in names if n not in AUXILIARY)
        order = exact.MonomialOrder("lex", auxiliary + rest)
        gb2 = exact.buchberger(conditions, order, limits)
        eliminated = [
            exact.to_params(g) for g in gb2.polys
            if not set(exact.variables_of([exact.to_params(g)])) & set(AUXILIARY)
        ]
    residual_gens = step1_polys + eliminated
    residual = exact.buchberger(residual_gens, limits=limits).polys if residual_gens else ()
    residual = tuple(exact.to_params(g) for g in residual)
    unit = len(residual) == 1 and residual[0] == PARAMS.one
    return ConstraintVerdict(
        not unit,
        0 if not unit else 2,
        step1=tuple(step1_polys),
        theta_m=theta,
        invariant_forms=len(invariant),
        residual=residual,
    )


## Bracket spaces and reconstruction


@dataclass(frozen=True, eq=False)
class BracketSpace:
    """Equivariant maps ``Lambda^2 m -> h + m``; vertical ones land in ``h``."""

    vertical: tuple
    horizontal: tuple

    @property
    def dim(self):
        return len(self.vertical) + len(self.horizontal)

    def counts(self):
        return {"total": self.dim, "horizontal": len(self.horizontal), "vertical": len(self.vertical)}


def _flatten(m):
    return tuple(x for row in exact.rows_of(m) for x in row)


def bracket_space(module, target=None):
    """Basis of ``Hom_h(Lambda^2 m, target)`` split into vertical and horizontal parts.

    ``target`` defaults to ``adjoint(h) + m``; pass ``twisted_module(phi)`` for a
    nontrivial extension class.
    """
    L = module.algebra
    if target is None:
        target = repthy.direct_sum(repthy.adjoint(L), module)
    wedge = repthy.exterior(module, 2)
    total = repthy.equivariant_maps(wedge, target)
    npairs = wedge.dim
    vertical = []
    for m in repthy.equivariant_maps(wedge, repthy.adjoint(L)):
        dod = exact.to_scalar(m).to_dod()
        vertical.append(exact.sparse(dod, (target.dim, npairs)).to_dense())
    span = exact.span_basis([_flatten(v) for v in vertical], target.dim * npairs) if vertical else []
    horizontal = []
    for m in total:
        trial = exact.span_basis(list(span) + [_flatten(m)], target.dim * npairs)
        if len(trial) > len(span):
            horizontal.append(m)
            span = trial
    return BracketSpace(tuple(vertical), tuple(horizontal))


@dataclass(frozen=True, eq=False)
class ExtensionDatum:
    cocycle: Cocycle
    m_names: tuple
    theta: dict = field(default_factory=dict)
    name: str = ""

    def __post_init__(self):
        dm = self.cocycle.module.dim
        if len(self.m_names) != dm:
            raise ConstraintError(f"{len(self.m_names)} names for a module of dimension {dm}")
        for i, j in self.theta:
            if not 0 <= i < j < dm:
                raise ConstraintError(f"theta is stored on pairs i < j of m, got {(i, j)}")

    @classmethod
    def from_brackets(cls, cocycle, m_names, lines, name=""):
        """Parse ``[u1, u2] = ...`` lines on ``m`` in the basis of ``h`` followed by ``m``."""
        h = cocycle.algebra
        dh = h.dim
        parsed = LieAlgebra.from_brackets(tuple(h.basis) + tuple(m_names), lines)
        theta = {}
        for (i, j), row in parsed.table.items():
            if i < dh:
                raise ConstraintError(f"[{parsed.basis[i]}, {parsed.basis[j]}] is not a bracket on m")
            theta[(i - dh, j - dh)] = dict(row)
        return cls(cocycle, tuple(m_names), theta, name)

    @property
    def algebra(self):
        return self.cocycle.algebra

    @property
    def module(self):
        return self.cocycle.module

    def _vector(self, lo, hi):
        dm = self.module.dim
        npairs = dm * (dm - 1) // 2
        index = repthy.cochain_index(dm, 2)
        out = [PARAMS.zero] * ((hi - lo) * npairs)
        for pair, row in self.theta.items():
            for k, v in row.items():
                if lo <= k < hi:
                    out[(k - lo) * npairs + index[pair]] = v
        return tuple(out)

    @property
    def theta_h(self):
        return self._vector(0, self.algebra.dim)

    @property
    def theta_m(self):
        dh = self.algebra.dim
        return self._vector(dh, dh + self.module.dim)

    def parameters(self):
        values = [v for row in self.theta.values() for v in row.values()]
        return exact.variables_of(values + list(self.cocycle.flat()))

    def substitute(self, bindings):
        theta = {
            pair: {k: exact.substitute(v, bindings) for k, v in row.items()}
            for pair, row in self.theta.items()
        }
        theta = {pair: {k: v for k, v in row.items() if v} for pair, row in theta.items()}
        return ExtensionDatum(
            self.cocycle.substitute(bindings), self.m_names,
            {pair: row for pair, row in theta.items() if row}, self.name,
        )

    def to_json(self):
        names = tuple(self.algebra.basis) + tuple(self.m_names)
        dh = self.algebra.dim
        return {
            "name": self.name,
            "h": self.algebra.to_json(),
            "m": self.module.to_json(),
            "phi": self.cocycle.to_json(),
            "m_names": list(self.m_names),
            "theta": [
                {
                    "i": names[dh + i],
                    "j": names[dh + j],
                    "coeffs": {names[k]: exact.value_to_json(v) for k, v in row.items()},
                }
                for (i, j), row in sorted(self.theta.items())
            ],
        }


def reconstruct(datum):
    """The bracket on ``g = h + m`` assembled from the extension datum."""
    h = datum.algebra
    module = datum.module
    dh, dm = h.dim, module.dim
    rho = [_poly_rows(m) for m in module.matrices]
    brackets = {pair: dict(row) for pair, row in h.table.items()}
    for t in range(dh):
        for i in range(dm):
            row = {}
            for k in range(dh):
                if datum.cocycle.entries[t][k][i]:
                    row[k] = datum.cocycle.entries[t][k][i]
            for a in range(dm):
                if rho[t][a][i]:
                    row[dh + a] = rho[t][a][i]
            brackets[(t, dh + i)] = row
    for (i, j), row in datum.theta.items():
        brackets[(dh + i, dh + j)] = dict(row)
    basis = tuple(h.basis) + tuple(datum.m_names)
    return LieAlgebra.from_structure(basis, brackets, datum.name)


def jacobi_split(g, dh):
    """Jacobi residuals of ``g = h + m`` split into mixed triples and triples inside ``m``."""
    residuals = jacobi_defect(g)
    mixed = {key: v for key, v in residuals.items() if key[0] < dh}
    pure = {key: v for key, v in residuals.items() if key[0] >= dh}
    return mixed, pure


# residual systems of the larger bracket families exceed 32 independent generators
JACOBI_LIMITS = exact.GroebnerLimits(max_generators=64)


def m_jacobi_ideal(datum, limits=JACOBI_LIMITS):
    """Reduced Groebner basis (in ``PARAMS``) of the ``Lambda^3 m`` Jacobi residuals."""
    g = reconstruct(datum)
    _, pure = jacobi_split(g, datum.algebra.dim)
    polys = list(dict.fromkeys(pure.values()))
    if not polys:
        return ()
    return tuple(exact.to_params(p) for p in exact.buchberger(polys, limits=limits).polys)
