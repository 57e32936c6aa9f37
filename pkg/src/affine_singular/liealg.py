"""Symplectic and special linear Lie algebras realised inside the oscillator algebra.

Kind "C" is sp_2l: the span of all normal-ordered quadratics on l oscillator
pairs.  Kind "A" is the sl_l subalgebra spanned by the mixed quadratics
a_i a*_j (i != j) and the traceless Cartan differences.  Root vectors carry
the labels

    X[ei+ej] = :a_i a_j:    X[-ei-ej] = :a*_i a*_j:    X[ei-ej] = :a_i a*_j:

and the Cartan elements are h_i = -:a_i a*_i: (differences h_i - h_(i+1)
for kind "A").  Every bracket is computed in the oscillator algebra and
re-expressed exactly in the basis, so no structure constant is entered by
hand.  The invariant form is the trace form of the natural action on the
2l-dimensional generator span, halved for kind "A"; this is the
normalisation the affine central terms are built on.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import weyl
from .scalars import ONE, ZERO, HPoly

Weight = tuple


@dataclass(frozen=True)
class BasisElement:
    """A label for one basis vector: a root vector or a Cartan element.

    kind "plus" is X[ei+ej] (i <= j, with i == j giving X[2ei]), "minus" is
    its opposite, "mixed" is X[ei-ej] (i != j), and "cartan" is the i-th
    Cartan basis element.
    """

    kind: str
    i: int
    j: int = 0

    def text(self, algebra_kind: str = "C") -> str:
        if self.kind == "cartan":
            if algebra_kind == "A":
                return "h%d-h%d" % (self.i, self.i + 1)
            return "h%d" % self.i
        if self.kind == "plus":
            if self.i == self.j:
                return "X[2e%d]" % self.i
            return "X[e%d+e%d]" % (self.i, self.j)
        if self.kind == "minus":
            if self.i == self.j:
                return "X[-2e%d]" % self.i
            return "X[-e%d-e%d]" % (self.i, self.j)
        return "X[e%d-e%d]" % (self.i, self.j)


_ELEMENT_PATTERNS = [
    (re.compile(r"^X\[2e(\d+)\]$"), lambda m: BasisElement("plus", int(m.group(1)), int(m.group(1)))),
    (re.compile(r"^X\[-2e(\d+)\]$"), lambda m: BasisElement("minus", int(m.group(1)), int(m.group(1)))),
    (re.compile(r"^X\[e(\d+)\+e(\d+)\]$"), lambda m: BasisElement("plus", *sorted((int(m.group(1)), int(m.group(2)))))),
    (re.compile(r"^X\[-e(\d+)-e(\d+)\]$"), lambda m: BasisElement("minus", *sorted((int(m.group(1)), int(m.group(2)))))),
    (re.compile(r"^X\[e(\d+)-e(\d+)\]$"), lambda m: BasisElement("mixed", int(m.group(1)), int(m.group(2)))),
    (re.compile(r"^h(\d+)-h(\d+)$"), lambda m: BasisElement("cartan", int(m.group(1)))),
    (re.compile(r"^h(\d+)$"), lambda m: BasisElement("cartan", int(m.group(1)))),
]


def parse_element(text: str) -> BasisElement:
    text = text.strip()
    for pattern, make in _ELEMENT_PATTERNS:
        m = pattern.match(text)
        if m:
            return make(m)
    raise ValueError("cannot parse basis element %r" % text)


def element_weight(elem: BasisElement, rank: int) -> Weight:
    w = [ZERO] * rank
    if elem.kind == "plus":
        w[elem.i - 1] += 1
        w[elem.j - 1] += 1
    elif elem.kind == "minus":
        w[elem.i - 1] -= 1
        w[elem.j - 1] -= 1
    elif elem.kind == "mixed":
        w[elem.i - 1] += 1
        w[elem.j - 1] -= 1
    return tuple(w)


class StructureTable:
    """Immutable bracket/form/weight data for one algebra.

    Basis order is negative root vectors, then Cartan elements, then positive
    root vectors (each block in a fixed deterministic order); this is also the
    tie-break order used by the straightening routines.
    """

    def __init__(self, kind, rank, basis, realizations, brackets, form, blocks):
        self.kind = kind
        self.rank = rank
        self.basis = tuple(basis)
        self.realizations = tuple(realizations)
        self._index = {elem: n for n, elem in enumerate(self.basis)}
        self._bracket = brackets
        self._form = form
        self.blocks = tuple(blocks)
        self.weights = tuple(element_weight(e, rank) for e in self.basis)
        self.dimension = len(self.basis)
        self.cartan_indices = tuple(n for n, e in enumerate(self.basis) if e.kind == "cartan")
        self._chevalley()

    # -- lookup ---------------------------------------------------------

    def idx(self, spec) -> int:
        """Resolve a basis index from an index, a BasisElement or its text form."""
        if isinstance(spec, int):
            if not 0 <= spec < self.dimension:
                raise ValueError("basis index out of range")
            return spec
        if isinstance(spec, str):
            spec = parse_element(spec)
        try:
            return self._index[spec]
        except KeyError:
            raise ValueError("%s is not a basis element of %s_%d" % (spec, self.kind, self.rank)) from None

    def element(self, n: int) -> BasisElement:
        return self.basis[n]

    def text(self, n: int) -> str:
        return self.basis[n].text(self.kind)

    def weight_of(self, spec) -> Weight:
        return self.weights[self.idx(spec)]

    def realization(self, spec) -> weyl.WeylElement:
        return self.realizations[self.idx(spec)]

    # -- structure ------------------------------------------------------

    def bracket(self, x, y):
        """[x, y] as a tuple of (basis index, coefficient) pairs."""
        return self._bracket[self.idx(x), self.idx(y)]

    def form(self, x, y) -> Fraction:
        return self._form[self.idx(x)][self.idx(y)]

    def _chevalley(self):
        rank = self.rank
        if self.kind == "C":
            raising = [BasisElement("mixed", i, i + 1) for i in range(1, rank)] + [BasisElement("plus", rank, rank)]
            lowering = [BasisElement("mixed", i + 1, i) for i in range(1, rank)] + [BasisElement("minus", rank, rank)]
            self.theta_raising = self.idx(BasisElement("plus", 1, 1))
            self.theta_lowering = self.idx(BasisElement("minus", 1, 1))
        else:
            raising = [BasisElement("mixed", i, i + 1) for i in range(1, rank)]
            lowering = [BasisElement("mixed", i + 1, i) for i in range(1, rank)]
            self.theta_raising = self.idx(BasisElement("mixed", 1, rank))
            self.theta_lowering = self.idx(BasisElement("mixed", rank, 1))
        self.simple_raising = tuple(self.idx(e) for e in raising)
        self.simple_lowering = tuple(self.idx(e) for e in lowering)
        self.simple_roots = tuple(self.weights[n] for n in self.simple_raising)
        self.theta = self.weights[self.theta_raising]
        self.positive_root_weights = tuple(
            self.weights[n] for n, block in enumerate(self.blocks) if block == "raise"
        )

    def fundamental_weight(self, m: int) -> Weight:
        if self.kind == "C":
            if not 1 <= m <= self.rank:
                raise ValueError("fundamental weight index out of range")
            return tuple(ONE if t < m else ZERO for t in range(self.rank))
        if not 1 <= m <= self.rank - 1:
            raise ValueError("fundamental weight index out of range")
        shift = Fraction(m, self.rank)
        return tuple((ONE if t < m else ZERO) - shift for t in range(self.rank))

    def rho(self) -> Weight:
        top = self.rank if self.kind == "C" else self.rank - 1
        total = [ZERO] * self.rank
        for m in range(1, top + 1):
            for t, c in enumerate(self.fundamental_weight(m)):
                total[t] += c
        return tuple(total)

    def cartan_hpoly(self, spec) -> HPoly:
        """A Cartan basis element as a polynomial in the coordinates h_1..h_l."""
        elem = self.basis[self.idx(spec)]
        if elem.kind != "cartan":
            raise ValueError("not a Cartan element")
        if self.kind == "C":
            return HPoly.coordinate(self.rank, elem.i)
        return HPoly.coordinate(self.rank, elem.i) - HPoly.coordinate(self.rank, elem.i + 1)

    # -- reporting ------------------------------------------------------

    def info_lines(self):
        yield "algebra %s_%d  dimension %d" % (self.kind, self.rank, self.dimension)
        yield "basis (negative block, Cartan block, positive block):"
        for n, elem in enumerate(self.basis):
            yield "  %2d  %-12s weight %s  realization %s" % (
                n, self.text(n), _weight_text(self.weights[n]), self.realizations[n])
        yield "brackets (nonzero, upper triangle):"
        for a in range(self.dimension):
            for b in range(a + 1, self.dimension):
                terms = self._bracket[a, b]
                if terms:
                    body = " + ".join(
                        "(%s) %s" % (c, self.text(z)) if c != 1 else self.text(z)
                        for z, c in terms)
                    yield "  [%s, %s] = %s" % (self.text(a), self.text(b), body)
        yield "invariant form (nonzero pairs):"
        for a in range(self.dimension):
            for b in range(a, self.dimension):
                value = self._form[a][b]
                if value:
                    yield "  (%s, %s) = %s" % (self.text(a), self.text(b), value)


def _weight_text(w: Weight) -> str:
    return "(" + ", ".join(str(c) for c in w) + ")"


def _realize(kind: str, rank: int, elem: BasisElement) -> weyl.WeylElement:
    a = lambda i: weyl.creation(rank, i)
    s = lambda i: weyl.annihilation(rank, i)
    if elem.kind == "plus":
        return weyl.normal_ordered(a(elem.i), a(elem.j))
    if elem.kind == "minus":
        return weyl.normal_ordered(s(elem.i), s(elem.j))
    if elem.kind == "mixed":
        return weyl.normal_ordered(a(elem.i), s(elem.j))
    if kind == "C":
        return -weyl.normal_ordered(a(elem.i), s(elem.i))
    return -weyl.normal_ordered(a(elem.i), s(elem.i)) + weyl.normal_ordered(a(elem.i + 1), s(elem.i + 1))


def _pivot(elem: BasisElement, rank: int):
    """A monomial held by this realization and by no later one in elimination order."""
    unit = lambda *idxs: tuple(sum(1 for t in idxs if t == p + 1) for p in range(rank))
    zero = (0,) * rank
    if elem.kind == "plus":
        return (unit(elem.i, elem.j), zero), ONE
    if elem.kind == "minus":
        return (zero, unit(elem.i, elem.j)), ONE
    if elem.kind == "mixed":
        return (unit(elem.i), unit(elem.j)), ONE
    return (unit(elem.i), unit(elem.i)), -ONE


class RealizationError(ArithmeticError):
    """A commutator fell outside the basis span; the table is inconsistent."""


@lru_cache(maxsize=None)
def build_algebra(kind: str, rank: int) -> StructureTable:
    """Construct the full structure table for sp_2l (kind "C") or sl_l (kind "A")."""
    if kind not in ("C", "A"):
        raise ValueError("kind must be 'C' or 'A'")
    if rank < 2:
        raise ValueError("rank must be at least 2")

    if kind == "C":
        lower = [BasisElement("minus", i, j) for i in range(1, rank + 1) for j in range(i, rank + 1)]
        lower += [BasisElement("mixed", i, j) for i in range(1, rank + 1) for j in range(1, rank + 1) if i > j]
        upper = [BasisElement("plus", i, j) for i in range(1, rank + 1) for j in range(i, rank + 1)]
        upper += [BasisElement("mixed", i, j) for i in range(1, rank + 1) for j in range(1, rank + 1) if i < j]
        expected = rank * (2 * rank + 1)
        cartan_count = rank
    else:
        lower = [BasisElement("mixed", i, j) for i in range(1, rank + 1) for j in range(1, rank + 1) if i > j]
        upper = [BasisElement("mixed", i, j) for i in range(1, rank + 1) for j in range(1, rank + 1) if i < j]
        expected = rank * rank - 1
        cartan_count = rank - 1

    weight_key = lambda e: element_weight(e, rank)
    lower.sort(key=weight_key)
    upper.sort(key=weight_key)
    cartans = [BasisElement("cartan", i) for i in range(1, cartan_count + 1)]
    basis = lower + cartans + upper
    blocks = ["lower"] * len(lower) + ["cartan"] * len(cartans) + ["raise"] * len(upper)
    if len(basis) != expected:
        raise AssertionError("basis size %d != %d" % (len(basis), expected))

    realizations = [_realize(kind, rank, e) for e in basis]

    # elimination order: root vectors first (disjoint pivots), then Cartans
    # ascending so each a_i a*_i pivot is settled before the next appears
    order = [n for n, e in enumerate(basis) if e.kind != "cartan"]
    order += [n for n in range(len(basis)) if basis[n].kind == "cartan"]
    pivots = [_pivot(e, rank) for e in basis]

    def to_basis(z: weyl.WeylElement) -> dict[int, Fraction]:
        coeffs = {}
        rem = z
        for n in order:
            mono, lead = pivots[n]
            c = rem.terms.get(mono, ZERO)
            if c:
                c = c / lead
                coeffs[n] = c
                rem = rem - realizations[n].scale(c)
        if not rem.is_zero:
            raise RealizationError("element %r is outside the basis span" % z)
        return coeffs

    brackets = {}
    dim = len(basis)
    for x in range(dim):
        rx = realizations[x]
        for y in range(dim):
            z = rx * realizations[y] - realizations[y] * rx
            terms = to_basis(z)
            brackets[x, y] = tuple(sorted(terms.items()))

    # matrices of the degree-1 action on span(a_1..a_l, a*_1..a*_l)
    gens = [weyl.creation(rank, i) for i in range(1, rank + 1)]
    gens += [weyl.annihilation(rank, i) for i in range(1, rank + 1)]
    gen_index = {}
    for g, gen in enumerate(gens):
        (mono,) = gen.terms
        gen_index[mono] = g
    matrices = []
    for n in range(dim):
        mat = [[ZERO] * (2 * rank) for _ in range(2 * rank)]
        for g, gen in enumerate(gens):
            image = weyl.degree1_action(realizations[n], gen)
            for mono, c in image.terms.items():
                mat[gen_index[mono]][g] = c
        matrices.append(mat)

    scale = ONE if kind == "C" else Fraction(1, 2)
    form = []
    for x in range(dim):
        row = []
        for y in range(dim):
            tr = ZERO
            for r in range(2 * rank):
                for t in range(2 * rank):
                    if matrices[x][r][t] and matrices[y][t][r]:
                        tr += matrices[x][r][t] * matrices[y][t][r]
            row.append(scale * tr)
        form.append(tuple(row))

    return StructureTable(kind, rank, basis, realizations, brackets, tuple(form), blocks)
