"""The top-level module of a determinant ideal and its highest weight lab.

The image of the determinant power generates a finite-dimensional module
under the adjoint action; its zero-weight vectors act on a highest weight
vector v_lambda through their pure-Cartan parts, giving one polynomial
p_u(h_1..h_l) per basis vector u.  An irreducible highest weight module is
killed by the whole ideal exactly when all the p_u vanish at its weight, so
the common zero locus is a complete classification of the surviving simple
modules.  For sp_6 with the 3 x 3 determinant this locus is three parameter
lines plus six isolated weights; classify_sp6 recomputes everything and
checks it against that printed description.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction

from . import weights as weight_util
from .determinants import DeterminantSpec
from .linalg import SparseBasis
from .report import VerificationReport
from .scalars import ONE, ZERO, HPoly, UniPoly, coerce_rational, format_rational
from .zhu import UEnvElement, ad_action, finite_determinant, uenv_pow


def uelem_weight(table, u: UEnvElement):
    """Common adjoint weight of all words of u; raises when mixed."""
    if u.is_zero:
        raise ValueError("the zero element has no weight")
    found = None
    for word in sorted(u.terms):
        w = tuple(sum(col) for col in zip(*(table.weights[x] for x in word))) if word else (ZERO,) * table.rank
        if found is None:
            found = w
        elif w != found:
            raise ValueError("element mixes weights %s and %s" % (found, w))
    return found


@dataclass
class TopLevelModule:
    """Adjoint closure of a generator inside U(g), graded by weight."""

    table: object
    generator: UEnvElement
    highest_weight: tuple
    elements: list  # UEnvElement, in discovery order
    element_weights: list
    raising_closed: bool

    @property
    def dimension(self) -> int:
        return len(self.elements)

    def weight_space(self, w) -> list:
        w = tuple(coerce_rational(c) for c in w)
        return [u for u, uw in zip(self.elements, self.element_weights) if uw == w]


def adjoint_orbit_top(table, generator: UEnvElement, dim_cap: int = 2000) -> TopLevelModule:
    """Close the generator under the adjoint lowering operators.

    Elements are kept weight-homogeneous; independence is tested with exact
    row reduction inside each weight space.  Closure under the raising
    operators is then verified and recorded, certifying that the span is a
    module over the whole algebra.
    """
    top = uelem_weight(table, generator)
    spaces: dict = {top: SparseBasis()}
    spaces[top].insert(dict(generator.terms))
    elements = [generator]
    element_weights = [top]
    queue = [0]
    while queue:
        at = queue.pop(0)
        u = elements[at]
        uw = element_weights[at]
        for g in table.simple_lowering:
            image = ad_action(table, g, u)
            if image.is_zero:
                continue
            w = tuple(a + b for a, b in zip(uw, table.weights[g]))
            space = spaces.setdefault(w, SparseBasis())
            before = len(space)
            if space.insert(dict(image.terms)):
                elements.append(image)
                element_weights.append(w)
                queue.append(len(elements) - 1)
                if len(elements) > dim_cap:
                    raise RuntimeError("adjoint closure exceeded the cap of %d" % dim_cap)
            assert len(space) >= before
    raising_closed = True
    for u, uw in zip(elements, element_weights):
        for g in table.simple_raising:
            image = ad_action(table, g, u)
            if image.is_zero:
                continue
            w = tuple(a + b for a, b in zip(uw, table.weights[g]))
            space = spaces.get(w)
            if space is None or not space.contains(dict(image.terms)):
                raising_closed = False
    return TopLevelModule(table, generator, top, elements, element_weights, raising_closed)


def determinant_top_module(spec: DeterminantSpec, dim_cap: int = 2000) -> TopLevelModule:
    table = spec.table()
    gen = uenv_pow(table, finite_determinant(table, spec), spec.n)
    return adjoint_orbit_top(table, gen, dim_cap)


def zero_weight_subspace(module: TopLevelModule) -> list:
    return module.weight_space((0,) * module.table.rank)


def hc_projection(table, u: UEnvElement) -> HPoly:
    """Keep the pure-Cartan monomials of a PBW normal form as a polynomial.

    Every discarded monomial carries a positive factor on the right (the
    block order guarantees it), so this is exactly the action on a highest
    weight vector.
    """
    cartan = set(table.cartan_indices)
    total = HPoly.constant(table.rank, 0)
    for word, c in u.terms.items():
        if all(x in cartan for x in word):
            piece = HPoly.constant(table.rank, c)
            for x in word:
                piece = piece * table.cartan_hpoly(x)
            total = total + piece
    return total


def weight_convert(table, coefficients):
    """Level and finite weight of an affine weight sum(c_j Lambda_j).

    coefficients has rank+1 entries, numbers or polynomials in one parameter.
    The level is the plain coefficient sum and the finite part is the
    combination of fundamental weights, in epsilon coordinates.
    """
    coeffs = []
    for c in coefficients:
        if isinstance(c, UniPoly):
            coeffs.append(c)
        else:
            coeffs.append(UniPoly.constant(coerce_rational(c), "x"))
    if len(coeffs) != table.rank + 1:
        raise ValueError("expected %d coefficients" % (table.rank + 1))
    level = UniPoly({}, "x")
    for c in coeffs:
        level = level + c
    finite = [UniPoly({}, "x") for _ in range(table.rank)]
    for j in range(1, table.rank + 1):
        omega = table.fundamental_weight(j)
        for t in range(table.rank):
            if omega[t]:
                finite[t] = finite[t] + coeffs[j] * omega[t]
    return level, tuple(finite)


def _affine_pair(poly: UniPoly):
    """Split a degree <= 1 polynomial into (constant, slope)."""
    if poly.degree > 1:
        raise ValueError("weight coordinate %s is not affine" % poly)
    return poly.coeffs.get(0, ZERO), poly.coeffs.get(1, ZERO)


# printed classification data for the sp_6 check: three lines of affine
# weights (parameter x) and six isolated ones, all of level -1
SP6_LINES = [
    {"label": "(-x-1)L0 + xL1", "coefficients": ["-x-1", "x", "0", "0"]},
    {"label": "(-x-1)L1 + xL2", "coefficients": ["0", "-x-1", "x", "0"]},
    {"label": "(-x-1)L2 + xL3", "coefficients": ["0", "0", "-x-1", "x"]},
]

SP6_POINTS = [
    {"label": "-2L0 + L2", "coefficients": [-2, 0, 1, 0]},
    {"label": "L1 - 2L3", "coefficients": [0, 1, 0, -2]},
    {"label": "-1/2L0 - 1/2L3", "coefficients": [Fraction(-1, 2), 0, 0, Fraction(-1, 2)]},
    {"label": "-1/2L0 + L2 - 3/2L3", "coefficients": [Fraction(-1, 2), 0, 1, Fraction(-3, 2)]},
    {"label": "-3/2L0 + L1 - 1/2L3", "coefficients": [Fraction(-3, 2), 1, 0, Fraction(-1, 2)]},
    {"label": "-3/2L0 + L1 + L2 - 3/2L3", "coefficients": [Fraction(-3, 2), 1, 1, Fraction(-3, 2)]},
]


def _parse_line_coeff(text: str) -> UniPoly:
    if text == "x":
        return UniPoly({1: ONE}, "x")
    if text == "-x-1":
        return UniPoly({1: -ONE, 0: -ONE}, "x")
    return UniPoly.constant(Fraction(text), "x")


def sp6_printed_polynomials() -> list:
    """The four classification polynomials in the printed factored shapes."""
    h1 = HPoly.coordinate(3, 1)
    h2 = HPoly.coordinate(3, 2)
    h3 = HPoly.coordinate(3, 3)
    half = Fraction(1, 2)
    p1 = (h1 + 1) * (h2 + half) * h3
    p2 = (h1 + 1) * (4 * h3 + (h2 + h3) * (h2 + h3 - 1))
    p3 = h3 * (4 * (h2 + 1) + (h1 + h2 + 2) * (h1 + h2 - 1))
    p4 = 4 * h3 * (h2 + 1) + (h1 + h3 - 1) * (h2 + h3 + h2 * (h1 + h3))
    return [p1, p2, p3, p4]


def _on_printed_locus(point) -> bool:
    h1, h2, h3 = point
    if h2 == 0 and h3 == 0:
        return True
    if h1 == -1 and h3 == 0:
        return True
    if h1 == -1 and h2 == -1:
        return True
    finite_points = [tuple(weight_convert(DeterminantSpec("C", 3, 3, 1).table(),
                                          entry["coefficients"])[1]) for entry in SP6_POINTS]
    for coords in finite_points:
        if all(c.constant_value() == p for c, p in zip(coords, point)):
            return True
    return False


def classify_sp6(seed: int = 0, controls: int = 20, dim_cap: int = 2000) -> VerificationReport:
    """Recompute the sp_6 top-level classification and check the printed answer.

    Subchecks: module dimensions against the weight-formula oracles, the four
    printed polynomials against the computed zero-weight span, identical
    vanishing along the three printed lines and six printed weights, and
    seeded off-locus controls that must each violate some polynomial.
    """
    start = time.perf_counter()
    spec = DeterminantSpec("C", 3, 3, 1)
    table = spec.table()
    notes = []
    subchecks = {}

    module = determinant_top_module(spec, dim_cap)
    lam = module.highest_weight
    dim_expected = weight_util.weyl_dim(table, lam)
    zero_basis = zero_weight_subspace(module)
    zero_expected = weight_util.multiplicity(table, lam, (0, 0, 0))
    subchecks["highest_weight"] = lam == (2, 2, 2)
    subchecks["module_dimension"] = module.dimension == dim_expected
    subchecks["raising_closed"] = module.raising_closed
    subchecks["zero_weight_dimension"] = len(zero_basis) == zero_expected == 4

    computed = [hc_projection(table, u) for u in zero_basis]
    span = SparseBasis()
    for p in computed:
        span.insert(p.coefficient_vector())
    subchecks["projection_span_rank"] = len(span) == 4

    printed = sp6_printed_polynomials()
    in_span = [span.contains(p.coefficient_vector()) for p in printed]
    subchecks["printed_polynomials_in_span"] = all(in_span)
    if not all(in_span):
        notes.append("printed polynomial(s) outside the computed span: "
                     + ", ".join(str(t + 1) for t, ok in enumerate(in_span) if not ok))

    line_results = []
    for entry in SP6_LINES:
        coeffs = [_parse_line_coeff(c) for c in entry["coefficients"]]
        level, finite = weight_convert(table, coeffs)
        level_ok = level.degree <= 0 and level.constant_value() == spec.level
        assignment = [_affine_pair(c) for c in finite]
        residuals = [p.substitute_affine(assignment) for p in computed]
        vanish = all(r.is_zero for r in residuals)
        line_results.append({
            "line": entry["label"],
            "finite_weight": [str(c) for c in finite],
            "level_matches": level_ok,
            "all_polynomials_vanish": vanish,
        })
    subchecks["lines_vanish"] = all(r["level_matches"] and r["all_polynomials_vanish"] for r in line_results)

    point_results = []
    for entry in SP6_POINTS:
        level, finite = weight_convert(table, entry["coefficients"])
        coords = tuple(c.constant_value() for c in finite)
        level_ok = level.constant_value() == spec.level
        values = [p.evaluate(coords) for p in computed]
        vanish = all(v == 0 for v in values)
        point_results.append({
            "weight": entry["label"],
            "finite_weight": [format_rational(c) for c in coords],
            "level_matches": level_ok,
            "all_polynomials_vanish": vanish,
        })
    subchecks["points_vanish"] = all(r["level_matches"] and r["all_polynomials_vanish"] for r in point_results)

    rng = random.Random(seed)
    control_results = []
    rejected = 0
    while len(control_results) < controls:
        point = tuple(Fraction(rng.randint(-12, 12), rng.choice([1, 2, 3, 4])) for _ in range(3))
        if _on_printed_locus(point):
            rejected += 1
            continue
        violated = None
        for t, p in enumerate(computed):
            value = p.evaluate(point)
            if value != 0:
                violated = {"polynomial": t, "value": format_rational(value)}
                break
        control_results.append({
            "weight": [format_rational(c) for c in point],
            "violates": violated,
        })
    subchecks["controls_violate"] = all(r["violates"] is not None for r in control_results)

    verdict = all(subchecks.values())
    ms = int((time.perf_counter() - start) * 1000)
    return VerificationReport(
        claim="category O classification for the sp_6 top level",
        verdict=verdict,
        parameters={"algebra": "C_3", "m": 3, "n": 1, "level": format_rational(spec.level),
                    "controls": controls, "dim_cap": dim_cap},
        witness=None if verdict else {"subchecks": {k: v for k, v in subchecks.items() if not v}},
        timing_ms=ms,
        seed=seed,
        notes=notes,
        details={
            "module_dimension": module.dimension,
            "zero_weight_dimension": len(zero_basis),
            "polynomials": [repr(p) for p in computed],
            "subchecks": subchecks,
            "lines": line_results,
            "points": point_results,
            "negative_controls": control_results,
            "controls_rejected_on_locus": rejected,
        },
    )
