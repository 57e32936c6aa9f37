"""The oscillator algebra on l creation/annihilation pairs.

Elements are finite Q-linear combinations of normal-ordered monomials
a^alpha (a*)^beta (creations to the left).  The defining relations are

    [a_i, a_j] = [a*_i, a*_j] = 0,      [a_i, a*_j] = delta_ij,

so a product is normalised pair by pair with the closed formula

    (a*)^b a^c = sum_t (-1)^t C(b,t) C(c,t) t!  a^(c-t) (a*)^(b-t).
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from .scalars import ONE, ZERO, coerce_rational, format_rational

Monomial = tuple[tuple[int, ...], tuple[int, ...]]  # (creation, annihilation) exponents


class WeylElement:
    """A normally ordered element of the oscillator algebra."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, c in terms.items():
                alpha, beta = mono
                alpha = tuple(int(e) for e in alpha)
                beta = tuple(int(e) for e in beta)
                if len(alpha) != nvars or len(beta) != nvars:
                    raise ValueError("monomial has wrong arity")
                if any(e < 0 for e in alpha + beta):
                    raise ValueError("negative exponent")
                c = coerce_rational(c)
                if c:
                    key = (alpha, beta)
                    clean[key] = clean.get(key, ZERO) + c
                    if not clean[key]:
                        del clean[key]
        self.nvars = nvars
        self.terms = clean

    @classmethod
    def constant(cls, nvars: int, value) -> "WeylElement":
        zero = (0,) * nvars
        return cls(nvars, {(zero, zero): coerce_rational(value)})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def max_degree(self) -> int:
        return max((sum(a) + sum(b) for a, b in self.terms), default=-1)

    def is_linear(self) -> bool:
        """True when every monomial has total degree exactly 1."""
        return bool(self.terms) and all(sum(a) + sum(b) == 1 for a, b in self.terms)

    def _lift(self, other) -> "WeylElement":
        if isinstance(other, WeylElement):
            if other.nvars != self.nvars:
                raise ValueError("mismatched oscillator counts")
            return other
        return WeylElement.constant(self.nvars, other)

    def __add__(self, other) -> "WeylElement":
        other = self._lift(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out.get(mono, ZERO) + c
        return WeylElement(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "WeylElement":
        return WeylElement(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "WeylElement":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "WeylElement":
        return (-self) + self._lift(other)

    def scale(self, value) -> "WeylElement":
        value = coerce_rational(value)
        return WeylElement(self.nvars, {m: value * c for m, c in self.terms.items()})

    def __mul__(self, other) -> "WeylElement":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._lift(other)
        out: dict[Monomial, Fraction] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                _accumulate_product(a1, b1, a2, b2, c1 * c2, out)
        return WeylElement(self.nvars, out)

    def __rmul__(self, other) -> "WeylElement":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return self._lift(other) * self

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = WeylElement.constant(self.nvars, other)
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms):
            parts.append("(%s) %s" % (format_rational(self.terms[mono]), monomial_text(mono) or "1"))
        return " + ".join(parts)


def _accumulate_product(a1, b1, a2, b2, coeff, out):
    # normalise (a*)^b1 a^a2 index by index; distinct indices commute
    ranges = [range(min(b1[i], a2[i]) + 1) for i in range(len(a1))]
    for ts in itertools.product(*ranges):
        c = coeff
        for i, t in enumerate(ts):
            if t:
                c *= (-1) ** t * math.comb(b1[i], t) * math.comb(a2[i], t) * math.factorial(t)
        alpha = tuple(a1[i] + a2[i] - ts[i] for i in range(len(a1)))
        beta = tuple(b1[i] + b2[i] - ts[i] for i in range(len(b1)))
        key = (alpha, beta)
        out[key] = out.get(key, ZERO) + c
        if not out[key]:
            del out[key]


def monomial_text(mono: Monomial) -> str:
    alpha, beta = mono
    pieces = []
    for i, e in enumerate(alpha):
        if e == 1:
            pieces.append("a%d" % (i + 1))
        elif e > 1:
            pieces.append("a%d^%d" % (i + 1, e))
    for i, e in enumerate(beta):
        if e == 1:
            pieces.append("a*%d" % (i + 1))
        elif e > 1:
            pieces.append("a*%d^%d" % (i + 1, e))
    return " ".join(pieces)


def creation(nvars: int, i: int) -> WeylElement:
    """The generator a_i, 1-based."""
    if not 1 <= i <= nvars:
        raise ValueError("oscillator index out of range")
    alpha = tuple(1 if t == i - 1 else 0 for t in range(nvars))
    return WeylElement(nvars, {(alpha, (0,) * nvars): ONE})


def annihilation(nvars: int, i: int) -> WeylElement:
    """The generator a*_i, 1-based."""
    if not 1 <= i <= nvars:
        raise ValueError("oscillator index out of range")
    beta = tuple(1 if t == i - 1 else 0 for t in range(nvars))
    return WeylElement(nvars, {((0,) * nvars, beta): ONE})


def weyl_mul(x: WeylElement, y: WeylElement) -> WeylElement:
    return x * y


def normal_ordered(x: WeylElement, y: WeylElement) -> WeylElement:
    """The symmetrised product (xy + yx)/2 of two linear elements."""
    if not (x.is_linear() and y.is_linear()):
        raise ValueError("normal_ordered expects linear arguments")
    return (x * y + y * x).scale(Fraction(1, 2))


def degree1_action(q: WeylElement, z: WeylElement) -> WeylElement:
    """The commutator [q, z] of a quadratic with a linear element.

    The result stays in the span of the generators; anything else means the
    inputs were malformed.
    """
    if q.max_degree() > 2:
        raise ValueError("degree1_action expects degree at most 2")
    if not z.is_linear():
        raise ValueError("degree1_action expects a linear second argument")
    result = q * z - z * q
    if not (result.is_zero or result.is_linear()):
        raise ValueError("commutator left the generator span")
    return result
