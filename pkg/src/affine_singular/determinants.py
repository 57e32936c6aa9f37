"""Determinant vectors in the vacuum module and their annihilation identities.

For kind "C" the m x m matrix has entries X[ei+ej] (1 <= i, j <= m); for
kind "A" the entry at (i, j) is X[ei-e(l-j+1)], which needs 2m <= l to keep
the index sets disjoint.  All entries commute pairwise, so the Leibniz
expansion of det at mode -1, raised to a power, is already in canonical
order after sorting its factors.

The two mechanical facts checked here: the n-th power of the determinant
applied to the vacuum is annihilated by the simple raising operators at
mode 0 and, exactly at one level depending on (m, n), by the lowest root
vector at mode 1; and away from that level the failure is a single minor
times the lower power, with a factor linear in the level.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from fractions import Fraction

from . import vacuum
from .liealg import BasisElement, StructureTable, build_algebra
from .report import VerificationReport
from .scalars import ONE, UniPoly, coerce_rational, format_rational
from .vacuum import VacuumState

EntryPoly = dict  # sorted index tuple -> Fraction, a polynomial in commuting entries


@dataclass(frozen=True)
class DeterminantSpec:
    """Size and power of one determinant vector, with its distinguished level."""

    kind: str
    rank: int
    m: int
    n: int

    def __post_init__(self):
        if self.kind not in ("C", "A"):
            raise ValueError("kind must be 'C' or 'A'")
        if self.rank < 2:
            raise ValueError("rank must be at least 2")
        if self.n < 1:
            raise ValueError("power must be at least 1")
        if self.m < 1:
            raise ValueError("size must be at least 1")
        if self.kind == "C" and self.m > self.rank:
            raise ValueError("size %d exceeds rank %d" % (self.m, self.rank))
        if self.kind == "A" and 2 * self.m > self.rank:
            raise ValueError("size %d needs 2m <= rank %d" % (self.m, self.rank))

    @property
    def level(self) -> Fraction:
        """The level at which the vector becomes singular."""
        if self.kind == "C":
            return Fraction(self.n) - Fraction(self.m + 1, 2)
        return Fraction(self.n - self.m)

    def table(self) -> StructureTable:
        return build_algebra(self.kind, self.rank)

    def label(self) -> str:
        return "%s%d m=%d n=%d" % (self.kind, self.rank, self.m, self.n)


def entry_element(kind: str, rank: int, i: int, j: int) -> BasisElement:
    """The (i, j) matrix entry; raises when the label is not a root."""
    if kind == "C":
        return BasisElement("plus", min(i, j), max(i, j))
    col = rank - j + 1
    if i == col:
        raise ValueError("entry (%d, %d) collides: e%d - e%d is not a root" % (i, j, i, col))
    return BasisElement("mixed", i, col)


def build_matrix(table: StructureTable, spec: DeterminantSpec):
    """The m x m matrix of basis indices."""
    return [
        [table.idx(entry_element(spec.kind, spec.rank, i, j)) for j in range(1, spec.m + 1)]
        for i in range(1, spec.m + 1)
    ]


def entries_commute_check(kind: str, rank: int, m: int) -> VerificationReport:
    """Pairwise-commutation scan over the would-be matrix entries.

    Deliberately does not enforce the size guard, so it can demonstrate what
    goes wrong for oversized "A" matrices: overlapping indices give entries
    with nonzero brackets (and possibly ill-formed diagonal labels).
    """
    start = time.perf_counter()
    table = build_algebra(kind, rank)
    entries = []
    bad_labels = []
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            try:
                entries.append(((i, j), table.idx(entry_element(kind, rank, i, j))))
            except ValueError:
                bad_labels.append("(%d,%d)" % (i, j))
    witness = None
    for ((pi, pj), x), ((qi, qj), y) in itertools.combinations(entries, 2):
        terms = table.bracket(x, y)
        if terms:
            body = " + ".join("(%s) %s" % (c, table.text(z)) for z, c in terms)
            witness = {
                "pair": ["entry(%d,%d) = %s" % (pi, pj, table.text(x)),
                         "entry(%d,%d) = %s" % (qi, qj, table.text(y))],
                "bracket": body,
            }
            break
    if witness is None and bad_labels:
        witness = {"undefined_entries": bad_labels}
    ms = int((time.perf_counter() - start) * 1000)
    return VerificationReport(
        claim="matrix entries commute %s%d m=%d" % (kind, rank, m),
        verdict=witness is None,
        parameters={"algebra": "%s_%d" % (kind, rank), "m": m},
        witness=witness,
        timing_ms=ms,
    )


# -- polynomials in the commuting entries -------------------------------


def _perm_sign(perm) -> int:
    sign = 1
    for a, b in itertools.combinations(range(len(perm)), 2):
        if perm[a] > perm[b]:
            sign = -sign
    return sign


def _ep_add_term(poly: EntryPoly, key, coeff):
    if key in poly:
        coeff = poly[key] + coeff
        if coeff:
            poly[key] = coeff
        else:
            del poly[key]
    elif coeff:
        poly[key] = coeff


def ep_mul(p: EntryPoly, q: EntryPoly) -> EntryPoly:
    out: EntryPoly = {}
    for k1, c1 in p.items():
        for k2, c2 in q.items():
            _ep_add_term(out, tuple(sorted(k1 + k2)), c1 * c2)
    return out


def ep_pow(p: EntryPoly, n: int) -> EntryPoly:
    out: EntryPoly = {(): ONE}
    for _ in range(n):
        out = ep_mul(out, p)
    return out


def det_entry_poly(table: StructureTable, spec: DeterminantSpec, rows=None, cols=None) -> EntryPoly:
    """Leibniz expansion of the determinant over the given rows and columns."""
    rows = list(rows) if rows is not None else list(range(1, spec.m + 1))
    cols = list(cols) if cols is not None else list(range(1, spec.m + 1))
    if len(rows) != len(cols):
        raise ValueError("determinant needs a square index set")
    out: EntryPoly = {}
    for perm in itertools.permutations(range(len(rows))):
        key = tuple(sorted(
            table.idx(entry_element(spec.kind, spec.rank, rows[t], cols[perm[t]]))
            for t in range(len(rows))))
        _ep_add_term(out, key, Fraction(_perm_sign(perm)))
    return out


def minor_entry_poly(table: StructureTable, spec: DeterminantSpec, i: int, j: int) -> EntryPoly:
    """The minor with row i and column j removed; the 1 x 1 case gives the scalar 1."""
    if not (1 <= i <= spec.m and 1 <= j <= spec.m):
        raise ValueError("minor index out of range")
    rows = [r for r in range(1, spec.m + 1) if r != i]
    cols = [c for c in range(1, spec.m + 1) if c != j]
    return det_entry_poly(table, spec, rows, cols)


def ep_state(poly: EntryPoly) -> VacuumState:
    """Place every entry at mode -1 and apply to the vacuum."""
    return VacuumState({tuple((-1, x) for x in key): c for key, c in poly.items()})


def ep_apply(table: StructureTable, poly: EntryPoly, state: VacuumState) -> VacuumState:
    """Left-multiply a state by the mode -1 entry polynomial as an operator."""
    out = VacuumState.zero()
    for key, c in poly.items():
        piece = state * c
        for x in reversed(key):
            piece = vacuum.apply_generator(table, x, -1, piece)
        out = out + piece
    return out


def determinant_vector(table: StructureTable, spec: DeterminantSpec) -> VacuumState:
    """The n-th power of the mode -1 determinant applied to the vacuum."""
    return ep_state(ep_pow(det_entry_poly(table, spec), spec.n))


def minor_vector(table: StructureTable, spec: DeterminantSpec, i: int, j: int) -> VacuumState:
    return ep_state(minor_entry_poly(table, spec, i, j))


# -- the two verifications ---------------------------------------------


def verify_singular(spec: DeterminantSpec, level="auto") -> VerificationReport:
    """Annihilation check for the determinant vector.

    level "auto" uses spec.level, the distinguished level; None keeps the
    level symbolic; any rational overrides it (the negative-control path).
    """
    table = spec.table()
    if level == "auto":
        level = spec.level
    state = determinant_vector(table, spec)
    level_text = "symbolic" if level is None else format_rational(level)
    report = vacuum.singular_check(
        table, state, level=level,
        claim="determinant vector singular: %s level=%s" % (spec.label(), level_text))
    report.parameters.update({"m": spec.m, "n": spec.n, "distinguished_level": format_rational(spec.level)})
    return report


def beta_constant(table: StructureTable) -> Fraction:
    """The pairing of the lowest and highest root vectors; it scales the
    residual of the mode 1 annihilation away from the distinguished level."""
    return table.form(table.theta_lowering, table.theta_raising)


def lowering_factor_check(spec: DeterminantSpec) -> VerificationReport:
    """Identity for the lowest root vector at mode 1, at the symbolic level:

        x(1) det^n |0> = beta n (k - level) minor(1,1) det^(n-1) |0>

    with beta the form pairing of the two extreme root vectors.
    """
    start = time.perf_counter()
    table = spec.table()
    det = det_entry_poly(table, spec)
    lhs = vacuum.apply_generator(table, table.theta_lowering, 1, ep_state(ep_pow(det, spec.n)))
    beta = beta_constant(table)
    factor = UniPoly({1: beta * spec.n, 0: -beta * spec.n * spec.level})
    rhs = ep_state(ep_mul(minor_entry_poly(table, spec, 1, 1), ep_pow(det, spec.n - 1))) * factor
    diff = lhs - rhs
    witness = None
    if not diff.is_zero:
        witness = {"difference": diff.text(table), "lhs": lhs.text(table)}
    notes = ["beta = (x_-theta, x_theta) = %s from the trace form" % format_rational(beta)]
    if spec.kind == "A":
        notes.append("beta for kind A is derived from the invariant form, not imposed")
    ms = int((time.perf_counter() - start) * 1000)
    return VerificationReport(
        claim="lowering factor identity: %s" % spec.label(),
        verdict=witness is None,
        parameters={
            "algebra": "%s_%d" % (spec.kind, spec.rank),
            "m": spec.m, "n": spec.n,
            "beta": format_rational(beta),
            "level": "symbolic",
            "distinguished_level": format_rational(spec.level),
        },
        witness=witness,
        timing_ms=ms,
        notes=notes,
    )


def coexisting_singulars(kind: str, rank: int, level) -> list[DeterminantSpec]:
    """All determinant vectors that become singular at the given level."""
    level = coerce_rational(level)
    found = []
    top = rank if kind == "C" else rank // 2
    for m in range(1, top + 1):
        n = level + (Fraction(m + 1, 2) if kind == "C" else Fraction(m))
        if n.denominator == 1 and n >= 1:
            found.append(DeterminantSpec(kind, rank, m, int(n)))
    return found
