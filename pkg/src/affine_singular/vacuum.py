"""The vacuum module at a symbolic level over an affine Lie algebra.

States are finite sums of ordered monomials

    x_1(n_1) x_2(n_2) ... x_r(n_r) |0>,   n_1 <= n_2 <= ... <= n_r <= -1,

with ties between equal modes broken by the basis order of the structure
table.  Coefficients are polynomials in the formal level k, so the central
element can act symbolically.  The commutation rule is

    [x(n), y(m)] = [x,y](n+m) + n (x,y) delta_(n+m,0) k,

and any factor of nonnegative mode adjacent to the vacuum kills the term.
Straightening rewrites an arbitrary word to this normal form; it terminates
because a swap lowers the inversion count and every bracket or central
correction shortens the word.
"""

from __future__ import annotations

import time
from fractions import Fraction

from .report import VerificationReport
from .scalars import ONE, UniPoly, coerce_rational, format_rational

Letter = tuple  # (mode, basis index)
Monomial = tuple  # tuple of letters, canonically ordered

LEVEL = UniPoly.variable("k")


def _coerce_poly(value) -> UniPoly:
    if isinstance(value, UniPoly):
        return value
    return UniPoly.constant(coerce_rational(value))


class VacuumState:
    """A finite sum of canonical monomials applied to the vacuum."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: dict[Monomial, UniPoly] = {}
        if terms:
            for mono, c in terms.items():
                c = _coerce_poly(c)
                if not c.is_zero:
                    mono = tuple((int(n), int(x)) for n, x in mono)
                    if mono in clean:
                        c = clean[mono] + c
                        if c.is_zero:
                            del clean[mono]
                            continue
                    clean[mono] = c
        self.terms = clean

    @classmethod
    def vacuum(cls) -> "VacuumState":
        return cls({(): ONE})

    @classmethod
    def zero(cls) -> "VacuumState":
        return cls()

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "VacuumState") -> "VacuumState":
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out[mono] + c if mono in out else c
        return VacuumState(out)

    def __neg__(self) -> "VacuumState":
        return VacuumState({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "VacuumState") -> "VacuumState":
        return self + (-other)

    def __mul__(self, scalar) -> "VacuumState":
        scalar = _coerce_poly(scalar)
        return VacuumState({m: c * scalar for m, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, VacuumState):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def specialize(self, level) -> "VacuumState":
        """Evaluate every coefficient at a numeric level."""
        level = coerce_rational(level)
        return VacuumState({m: UniPoly.constant(c(level)) for m, c in self.terms.items()})

    def is_symbolic(self) -> bool:
        return any(c.degree > 0 for c in self.terms.values())

    def mode_degree(self) -> int:
        """Total mode of the state; raises if it is mixed."""
        degrees = {sum(n for n, _ in mono) for mono in self.terms}
        if not degrees:
            return 0
        if len(degrees) > 1:
            raise ValueError("state mixes mode degrees %s" % sorted(degrees))
        return degrees.pop()

    def text(self, table) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms):
            parts.append("(%s) %s" % (self.terms[mono], monomial_text(table, mono)))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return "VacuumState(%d terms)" % len(self.terms)


def monomial_text(table, mono: Monomial) -> str:
    if not mono:
        return "|0>"
    return " ".join("%s(%d)" % (table.text(x), n) for n, x in mono) + " |0>"


def _reduce_into(table, coeff: UniPoly, word, out: dict, strategy: str = "leftmost"):
    """Accumulate the canonical form of coeff * word |0> into out."""
    work = [(coeff, tuple(word))]
    while work:
        c, w = work.pop()
        if w and w[-1][0] >= 0:
            continue  # annihilates the vacuum
        defects = [i for i in range(len(w) - 1) if w[i] > w[i + 1]]
        if not defects:
            if w in out:
                total = out[w] + c
                if total.is_zero:
                    del out[w]
                else:
                    out[w] = total
            else:
                out[w] = c
            continue
        i = defects[0] if strategy == "leftmost" else defects[-1]
        (p, x), (q, y) = w[i], w[i + 1]
        head, tail = w[:i], w[i + 2:]
        work.append((c, head + ((q, y), (p, x)) + tail))
        for z, cz in table.bracket(x, y):
            work.append((c * cz, head + ((p + q, z),) + tail))
        if p + q == 0:
            g = table.form(x, y)
            if g:
                work.append((c * (p * g) * LEVEL, head + tail))


def straighten(table, word, coeff=1, strategy: str = "leftmost") -> VacuumState:
    """Canonical form of an ordered product of negative-mode generators.

    word is a sequence of (mode, element) pairs; elements may be given as
    indices, labels or BasisElement values.  All modes must be <= -1.
    """
    letters = []
    for mode, x in word:
        mode = int(mode)
        if mode > -1:
            raise ValueError("straighten expects modes <= -1, got %d" % mode)
        letters.append((mode, table.idx(x)))
    out: dict[Monomial, UniPoly] = {}
    _reduce_into(table, _coerce_poly(coeff), tuple(letters), out, strategy)
    return VacuumState(out)


def apply_generator(table, x, n: int, state: VacuumState) -> VacuumState:
    """Act with x(n) on a state, for any integer mode n."""
    xi = table.idx(x)
    n = int(n)
    out: dict[Monomial, UniPoly] = {}
    for mono, c in state.terms.items():
        _reduce_into(table, c, ((n, xi),) + mono, out)
    return VacuumState(out)


def state_weight(table, state: VacuumState):
    """The common weight of all monomials; raises with a witness pair if mixed."""
    if state.is_zero:
        raise ValueError("the zero state has no weight")
    seen = None
    seen_mono = None
    for mono in sorted(state.terms):
        w = [Fraction(0)] * table.rank
        for _, x in mono:
            for t, c in enumerate(table.weights[x]):
                w[t] += c
        w = tuple(w)
        if seen is None:
            seen, seen_mono = w, mono
        elif w != seen:
            raise ValueError(
                "state is not weight homogeneous: %s has %s, %s has %s"
                % (monomial_text(table, seen_mono), seen, monomial_text(table, mono), w))
    return seen


def annihilation_operators(table):
    """The generators whose vanishing action defines a singular vector:
    the simple raising operators at mode 0 and the lowest root vector at mode 1."""
    ops = [(e, 0) for e in table.simple_raising]
    ops.append((table.theta_lowering, 1))
    return ops


def singular_check(table, state: VacuumState, level=None, claim: str = "") -> VerificationReport:
    """Check that every defining annihilation operator kills the state.

    With level=None the check runs at the symbolic level and passes only if
    each residual vanishes identically in k.  The first nonvanishing residual
    is returned as the witness.
    """
    if state.is_zero:
        raise ValueError("singular_check expects a nonzero state")
    start = time.perf_counter()
    state_weight(table, state)  # reject inhomogeneous input
    v = state if level is None else state.specialize(level)
    params = {
        "algebra": "%s_%d" % (table.kind, table.rank),
        "level": "symbolic" if level is None else format_rational(level),
    }
    witness = None
    for x, n in annihilation_operators(table):
        residual = apply_generator(table, x, n, v)
        if level is not None:
            # the central element contributes symbolically inside the action
            residual = residual.specialize(level)
        if not residual.is_zero:
            witness = {
                "operator": "%s(%d)" % (table.text(x), n),
                "residual": residual.text(table),
            }
            break
    ms = int((time.perf_counter() - start) * 1000)
    return VerificationReport(
        claim=claim or "singular vector check",
        verdict=witness is None,
        parameters=params,
        witness=witness,
        timing_ms=ms,
    )
