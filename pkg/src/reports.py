"""
Verification reports: catalog cases in, flat report rows out.

Every row carries the case, the operation, its inputs and outputs, the expected value
with its citation, and an exact ``match`` flag. Rows without an expected value are shown
for comparison only and always match.
"""

import json
import warnings
from dataclasses import dataclass

import numpy as np

import catalog
import exact
import extend
import geometry
import liealg
import repthy
from exact import QQ
from extend import Cocycle

OPERATIONS = ("cohomology", "brackets", "extend", "jacobi", "identify", "symbol", "geometry", "borel")

SYMBOL_SAMPLES = 100
SCAN_SAMPLES = 20
SU2CUBED_TRICHOTOMY = 11
SU2CUBED_GRID = 25


def canonical_json(value):
    return json.dumps(value, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def rational_text(value):
    value = exact.qq(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class Report:
    case: str
    operation: str
    inputs: dict
    outputs: dict
    expected: object
    citation: str
    match: bool

    def to_json(self):
        return {
            "case": self.case,
            "operation": self.operation,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "expected": self.expected,
            "citation": self.citation,
            "match": self.match,
        }

    def to_record(self):
        """Flat record for parquet: nested fields become canonical JSON strings."""
        record = self.to_json()
        for key in ("inputs", "outputs", "expected"):
            record[key] = canonical_json(record[key])
        return record


def matches(outputs, expected):
    """Exact comparison; a dict expectation only constrains the keys it names."""
    if isinstance(expected, dict) and isinstance(outputs, dict):
        return all(k in outputs and matches(outputs[k], v) for k, v in expected.items())
    return outputs == expected


def _inputs(case, **extra):
    inputs = {k: rational_text(v) for k, v in case.params.items()}
    if extra:
        inputs.update(extra)
    return inputs


def _row(case, expected, outputs, match=None, **extra):
    if match is None:
        match = matches(outputs, expected.value)
    return Report(case.name, expected.operation, _inputs(case, **extra), outputs,
                  {"item": expected.item, "value": expected.value}, expected.citation, bool(match))


def _units(g, lo, hi):
    return [tuple(QQ.one if k == i else QQ.zero for k in range(g.dim)) for i in range(lo, hi)]


## cohomology


def cohomology_rows(case, seed=0):
    rows = []
    for e in case.expected_for("cohomology"):
        h1 = repthy.ce_cohomology(extend.hom_module(case.module), 1)
        rows.append(_row(case, e, h1.to_json(), h1.dim == e.value))
    return rows


def generic_l_values(seed=0, count=SCAN_SAMPLES):
    """Seeded rationals outside the exceptional set, distinct, in draw order."""
    rng = np.random.default_rng(seed)
    exceptional = {exact.qq(l) for l in catalog.EXCEPTIONAL_L}
    values = []
    while len(values) < count:
        l = exact.random_rational(rng, bound=9, max_denominator=10)
        if l not in exceptional and l not in values:
            values.append(l)
    return values


def h1_scan(seed=0, count=SCAN_SAMPLES):
    """``dim H^1`` over the exceptional values of ``l`` and seeded generic ones."""
    values = [exact.qq(l) for l in catalog.EXCEPTIONAL_L] + generic_l_values(seed, count)
    records = []
    for l in values:
        case = catalog.s2_case(l)
        dim = repthy.ce_cohomology(extend.hom_module(case.module), 1).dim
        key = rational_text(l)
        records.append({
            "l": key,
            "l_float": float(l.numerator) / float(l.denominator),
            "dim_h1": dim,
            "exceptional": key in catalog.EXCEPTIONAL_L,
            "expected_dim": catalog.expected_h1(l),
        })
    return records


def scan_rows(seed=0, count=SCAN_SAMPLES):
    """Cohomology rows for the generic part of the ``l`` scan."""
    rows = []
    for l in generic_l_values(seed, count):
        rows.extend(cohomology_rows(catalog.s2_case(l), seed))
    return rows


## brackets


def _subspace_outputs(module):
    outputs = {}
    for side, r in (("", module), ("dual_", repthy.dual(module))):
        found = repthy.invariant_lines(r)
        outputs[f"{side}lines"] = len(found.lines)
        outputs[f"{side}families"] = len(found.families)
        outputs[f"{side}found"] = found.to_json()
    return outputs


def bracket_rows(case, seed=0):
    rows = []
    for e in case.expected_for("brackets"):
        if e.item == "subspaces":
            # lines of m* are the invariant hyperplanes of m
            rows.append(_row(case, e, _subspace_outputs(case.module), True if e.value is None else None))
        else:
            rows.append(_row(case, e, extend.bracket_space(case.module).counts()))
    return rows


## extension constraints


def _class_cocycle(case):
    if case.cocycle is not None:
        return case.cocycle
    h1 = repthy.ce_cohomology(extend.hom_module(case.module), 1)
    return Cocycle.from_cochain(case.module, h1.representatives[0])


def extend_rows(case, seed=0):
    rows = []
    for e in case.expected_for("extend"):
        phi = _class_cocycle(case)
        verdict = extend.check_extension_constraints(phi)
        outputs = {
            "satisfiable": verdict.satisfiable,
            "failed_step": verdict.failed_step,
            "step1": [str(p.as_expr()) for p in verdict.step1],
            "residual": [str(p.as_expr()) for p in verdict.residual],
        }
        ok = verdict.satisfiable == e.value["satisfiable"]
        if "failed_step" in e.value:
            ok = ok and verdict.failed_step == e.value["failed_step"]
        if "step1" in e.value:
            same = exact.same_ideal(verdict.step1, [exact.parse_poly(p) for p in e.value["step1"]])
            outputs["step1_equal"] = same
            ok = ok and same
        if "radical" in e.value:
            inside = exact.in_radical(exact.parse_poly(e.value["radical"]), verdict.residual)
            outputs["radical"] = inside
            ok = ok and inside
        if not verdict.satisfiable and phi.is_scalar:
            rng = np.random.default_rng(seed)
            moved = extend.gauge(phi, exact.random_matrix(rng, case.h.dim, case.module.dim))
            again = extend.check_extension_constraints(moved)
            outputs["gauge_invariant"] = (again.satisfiable, again.failed_step) == (
                verdict.satisfiable, verdict.failed_step)
            ok = ok and outputs["gauge_invariant"]
        rows.append(_row(case, e, outputs, ok))
    return rows


## Jacobi identities


def _jacobi_values(datum):
    g = extend.reconstruct(datum)
    mixed, pure = extend.jacobi_split(g, datum.algebra.dim)
    return list(dict.fromkeys([*mixed.values(), *pure.values()]))


def _groebner(values, extra=()):
    order = exact.default_order(list(values) + list(extra))
    return exact.buchberger(values, order, extend.JACOBI_LIMITS)


def _solves(values, solution):
    ratios = {k: exact.parse_ratio(v) for k, v in solution.items()}
    return all(not exact.substitute_ratios(p, ratios)[0] for p in values)


def _bound(case, family, solution):
    """A solution with every remaining parameter set to 1."""
    bindings = dict(solution)
    for name in case.datum(family).parameters():
        bindings.setdefault(name, "1")
    return bindings


def _two_step(case, family, solution):
    g = catalog.extend_reconstruct(case, family, _bound(case, family, solution))
    m = _units(g, case.h.dim, g.dim)
    mm = liealg.bracket_of_spans(g, m, m)
    return {
        "jacobi": not liealg.jacobi_defect(g),
        "ideal": liealg.is_ideal(g, m),
        "two_step": bool(mm) and not liealg.bracket_of_spans(g, m, mm),
    }


def _abelian_side(case, family):
    g = catalog.extend_reconstruct(case, family, _bound(case, family, {}))
    dh = case.h.dim
    for side, lo in (("v", dh), ("w", dh + 3)):
        span = _units(g, lo, lo + 3)
        if not liealg.bracket_of_spans(g, span, span):
            return side
    return ""


def jacobi_rows(case, seed=0):
    rows = []
    for name, family in case.families.items():
        items = [e for e in case.expected_for("jacobi")
                 if e.item in (name, "ideal", "relations") or e.item in family.solutions]
        if not items and not family.printed:
            continue
        values = _jacobi_values(case.datum(name))
        relations = [exact.parse_poly(r) for r in family.relations]
        printed = [exact.parse_poly(r) for r in family.printed]
        gb = _groebner(values, relations + printed)
        contained = [text for text, p in zip(family.relations, relations) if gb.contains(p)]
        generators = [str(p.as_expr()) for p in gb.polys]
        for e in items:
            if e.item == "ideal":
                wanted = [exact.parse_poly(p) for p in e.value]
                same = exact.same_ideal(values, wanted, extend.JACOBI_LIMITS)
                rows.append(_row(case, e, {"generators": generators, "equal": same}, same, family=name))
            elif e.item == "relations" or isinstance(e.value, list):
                rows.append(_row(case, e, {"relations": contained}, contained == e.value, family=name))
            elif e.item == name:
                outputs = {"jacobi": not values, "abelian": _abelian_side(case, name)}
                rows.append(_row(case, e, outputs, family=name))
            elif isinstance(e.value, dict):
                outputs = _two_step(case, name, family.solutions[e.item])
                rows.append(_row(case, e, outputs, family=name, solution=e.item))
            else:
                solved = _solves(values, family.solutions[e.item])
                rows.append(_row(case, e, {"solves": solved}, solved == e.value,
                                 family=name, solution=e.item))
        if family.printed and tuple(family.printed) != tuple(family.relations):
            outputs = {
                "generators": generators,
                "printed_contained": [t for t, p in zip(family.printed, printed) if gb.contains(p)],
            }
            if "printed" in family.solutions:
                outputs["printed_family_solves"] = _solves(values, family.solutions["printed"])
            if len(outputs["printed_contained"]) < len(printed):
                warnings.warn(f"{case.name}:{name}: printed generators are not in the Jacobi ideal",
                              RuntimeWarning)
            rows.append(Report(case.name, "jacobi", _inputs(case, family=name), outputs, None,
                               "printed Groebner basis and family, for comparison", True))
    return rows


## identification


def _identify_outputs(case, e, seed=0):
    if e.item == "killing_sign_t":
        norm = catalog.killing_norm(case.embedding[1])
        return {"sign": (norm > 0) - (norm < 0), "norm": rational_text(norm)}, "sign"
    if e.item == "levi":
        family = next(iter(case.families))
        g = catalog.extend_reconstruct(case, family, case.families[family].solutions["origin"])
        index = {n: i for i, n in enumerate(g.basis)}
        units = _units(g, 0, g.dim)
        levi = liealg.Subalgebra(g, tuple(units[index[n]] for n in catalog.TWISTED_LEVI))
        label = liealg.identify_simple(levi.as_algebra(catalog.TWISTED_LEVI)).label
        return {"radical": liealg.radical(g).dim, "levi": label}, None
    if e.item == "radical_span":
        rng = np.random.default_rng(seed)
        a7 = QQ.zero
        while not a7:
            a7 = exact.random_rational(rng)
        point = catalog.twisted_point(exact.random_rational(rng), exact.random_rational(rng), a7)
        family = next(iter(case.families))
        g = catalog.extend_reconstruct(case, family,
                                       {k: exact.scalar_to_json(v) for k, v in point.items()})
        found = liealg.radical(g).span
        expected = catalog.twisted_radical_span(g.basis, a7)
        spans = exact.span_basis(found, g.dim) == exact.span_basis(expected, g.dim)
        return {"radical": len(found), "spans": spans,
                "point": {k: rational_text(point[k]) for k in ("a5", "a6", "a7")}}, None
    if e.item == "g":
        return liealg.identify_simple(case.model.algebra).to_json(), None
    for name, family in case.families.items():
        if e.item in family.solutions:
            g = catalog.extend_reconstruct(case, name, family.solutions[e.item])
            return liealg.identify_simple(g).to_json(), None
    raise catalog.UnknownCaseError(f"no identification for {case.name}:{e.item}")


def identify_rows(case, seed=0):
    rows = []
    for e in case.expected_for("identify"):
        outputs, key = _identify_outputs(case, e, seed)
        if key is None:
            rows.append(_row(case, e, outputs))
        else:
            rows.append(_row(case, e, outputs, outputs[key] == e.value))
    return rows


## symbol and normal forms


def _symbol_outputs(model):
    xi = geometry.curvature_maps(model)
    g1 = geometry.symbol_g1(xi)
    g2 = geometry.prolongation_g2(xi, g1)
    outputs = {"g1": len(g1), "g2": len(g2), "nondegenerate": geometry.is_nondegenerate(xi)}
    if outputs["nondegenerate"]:
        norm = geometry.volume_normalize(xi)
        target = norm.normalized if norm.normalized is not None else norm.psi
        outputs["family"] = geometry.classify_nijenhuis(target)
        outputs["normalization"] = norm.to_json()
    return outputs


def symbol_samples(seed=0, count=SYMBOL_SAMPLES):
    rng = np.random.default_rng(seed)
    g1_dims, g2_dims = [], []
    for _ in range(count):
        xi = geometry.random_curvature_pair(rng)
        g1 = geometry.symbol_g1(xi)
        g1_dims.append(len(g1))
        g2_dims.append(len(geometry.prolongation_g2(xi, g1)))
    zero = len(geometry.symbol_g1(geometry.zero_curvature_pair()))
    return {
        "g2_zero": not any(g2_dims),
        "g1_bounded": max(g1_dims) <= 8,
        "g1_max": max(g1_dims),
        "zero_xi_g1": zero,
    }


def symbol_rows(case, seed=0):
    rows = []
    for e in case.expected_for("symbol"):
        if e.item == "samples":
            outputs = symbol_samples(seed)
            rows.append(_row(case, e, outputs, seed=seed, samples=SYMBOL_SAMPLES))
        else:
            rows.append(_row(case, e, _symbol_outputs(case.model)))
    return rows


## geometry


def _family_model(case, family, solution):
    g = catalog.extend_reconstruct(case, family, _bound(case, family, solution))
    return geometry.HomogeneousModel.from_split(g, case.h.dim, geometry.product_structure(3),
                                                f"{case.name}:{family}")


def _model_outputs(model):
    outputs = geometry.summarize(model)
    outputs["trivial_summands"] = list(geometry.trivial_summands(model))
    return outputs


def _su2cubed_outputs(r, t, full=True):
    model = geometry.su2cubed_model(r, t)
    family = geometry.nijenhuis_family_su2cubed(r, t)
    outputs = {"family": family,
               "nondegenerate": geometry.is_nondegenerate(geometry.curvature_maps(model))}
    if full and family == "nondegenerate":
        summary = geometry.summarize(model)
        outputs.update({k: summary[k] for k in ("metrics", "nk", "einstein") if k in summary})
    return outputs


def geometry_rows(case, seed=0):
    rows = []
    for e in case.expected_for("geometry"):
        if e.item == "model":
            rows.append(_row(case, e, _model_outputs(case.model)))
        elif e.item == "einstein":
            verdict = geometry.is_einstein(case.model, geometry.killing_metric(case.model))
            outputs = {"einstein": verdict.einstein,
                       "factor": rational_text(verdict.factor) if verdict.einstein else None}
            rows.append(_row(case, e, outputs))
        elif e.item == "su2cubed":
            rows.append(_row(case, e, _su2cubed_outputs(case.params["r"], case.params["t"])))
        elif e.item == "nondegenerate":
            family = next(iter(case.families))
            solutions = case.families[family].solutions
            outputs = {}
            for name in e.value:
                model = _family_model(case, family, solutions[name])
                outputs[name] = geometry.is_nondegenerate(geometry.curvature_maps(model))
            rows.append(_row(case, e, outputs))
    return rows


def _nondegenerate_point(rng):
    while True:
        r = exact.random_rational(rng)
        t = exact.random_rational(rng)
        if t and r not in (1, -1) and (r - t) not in (1, -1):
            return r, t


def su2cubed_points(seed=0):
    """Trichotomy samples (fixed degenerate loci plus seeded points) and the NK/Einstein grid."""
    rng = np.random.default_rng(seed)
    fixed = [(1, 2), (-1, -2), (1, 3), (1, QQ(1, 2)), (-1, 5), (2, 1), (3, 2), (QQ(1, 2), QQ(-1, 2))]
    trichotomy = [(exact.qq(r), exact.qq(t)) for r, t in fixed]
    while len(trichotomy) < SU2CUBED_TRICHOTOMY:
        trichotomy.append(_nondegenerate_point(rng))
    grid = [_nondegenerate_point(rng) for _ in range(SU2CUBED_GRID)]
    return trichotomy, grid


def su2cubed_sweep(seed=0):
    trichotomy, grid = su2cubed_points(seed)
    rows = []
    for r, t in trichotomy:
        case = catalog.get_case("su2cubed", {"r": r, "t": t})
        (e,) = case.expected_for("geometry")
        outputs = _su2cubed_outputs(r, t, full=False)
        match = all(outputs[k] == e.value[k] for k in ("family", "nondegenerate"))
        rows.append(_row(case, e, outputs, match, sample="trichotomy"))
    for r, t in grid:
        case = catalog.get_case("su2cubed", {"r": r, "t": t})
        (e,) = case.expected_for("geometry")
        rows.append(_row(case, e, _su2cubed_outputs(r, t), sample="grid"))
    return rows


## Borel bound


def borel_rows(case, seed=0):
    rows = []
    for e in case.expected_for("borel"):
        rows.append(_row(case, e, catalog.borel_bound_case().to_json()))
    return rows


RUNNERS = {
    "cohomology": cohomology_rows,
    "brackets": bracket_rows,
    "extend": extend_rows,
    "jacobi": jacobi_rows,
    "identify": identify_rows,
    "symbol": symbol_rows,
    "geometry": geometry_rows,
    "borel": borel_rows,
}


def case_rows(case, operations=OPERATIONS, seed=0):
    rows = []
    for operation in operations:
        rows.extend(RUNNERS[operation](case, seed))
    return rows


def sort_rows(rows):
    """Stable order by case, then operation."""
    return sorted(rows, key=lambda row: (row.case, row.operation))


def report_units(seed=0):
    """Independent units of work for the full report, as picklable tuples."""
    units = []
    for name in catalog.CASE_NAMES:
        if name == "s2-semidirect":
            units.extend(("case", name, {"l": l}) for l in catalog.S2_VALUES)
        else:
            units.append(("case", name, {}))
    units.append(("scan", "s2-semidirect", {}))
    units.append(("sweep", "su2cubed", {}))
    return units


def run_unit(unit, seed=0, operations=OPERATIONS):
    kind, name, params = unit
    if kind == "scan":
        return scan_rows(seed)
    if kind == "sweep":
        return su2cubed_sweep(seed)
    return case_rows(catalog.get_case(name, params), operations, seed)


def report_all(seed=0):
    rows = []
    for unit in report_units(seed):
        rows.extend(run_unit(unit, seed))
    return sort_rows(rows)
