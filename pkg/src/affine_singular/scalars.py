"""Exact scalar arithmetic: rationals and sparse polynomials over them.

Every coefficient in the package lives in Q, in Q[k] (k the formal level,
kept symbolic so identities can be checked as polynomial statements and
specialised afterwards), or in Q[h_1..h_l] (Cartan coordinates).  Zero
coefficients are deleted eagerly, so structural equality of term maps is
semantic equality.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" (or plain "p") text into an exact rational."""
    return Fraction(text.strip())


def format_rational(value) -> str:
    """Render an exact rational as "p/q", or "p" when the denominator is 1."""
    return str(Fraction(value))


def coerce_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError("expected an exact rational or integer, got %r" % (value,))


def _format_term(coeff: Fraction, body: str) -> str:
    if not body:
        return format_rational(coeff)
    if coeff == 1:
        return body
    if coeff == -1:
        return "-" + body
    return "%s*%s" % (format_rational(coeff), body)


def _join_terms(parts: list[str]) -> str:
    if not parts:
        return "0"
    text = parts[0]
    for part in parts[1:]:
        if part.startswith("-"):
            text += " - " + part[1:]
        else:
            text += " + " + part
    return text


class UniPoly:
    """Sparse univariate polynomial over Q.

    The default variable is the formal level k; affine-substitution results
    reuse the class with variable "x".  Mixing distinct variables in one
    arithmetic expression is an error unless one side is constant.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=None, var: str = "k"):
        clean: dict[int, Fraction] = {}
        if coeffs:
            for deg, c in coeffs.items():
                c = coerce_rational(c)
                if c:
                    if deg < 0:
                        raise ValueError("negative exponent in polynomial")
                    clean[int(deg)] = c
        self.coeffs = clean
        self.var = var

    @classmethod
    def constant(cls, value, var: str = "k") -> "UniPoly":
        return cls({0: coerce_rational(value)}, var)

    @classmethod
    def variable(cls, var: str = "k") -> "UniPoly":
        return cls({1: ONE}, var)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with the convention that the zero polynomial has degree -1."""
        return max(self.coeffs, default=-1)

    def constant_value(self) -> Fraction:
        if self.degree > 0:
            raise ValueError("polynomial %s is not constant" % (self,))
        return self.coeffs.get(0, ZERO)

    def _merge_var(self, other: "UniPoly") -> str:
        if self.degree <= 0:
            return other.var
        if other.degree <= 0:
            return self.var
        if self.var != other.var:
            raise ValueError("mixed variables %r and %r" % (self.var, other.var))
        return self.var

    def _lift(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        return UniPoly.constant(coerce_rational(other), self.var)

    def __add__(self, other) -> "UniPoly":
        other = self._lift(other)
        var = self._merge_var(other)
        out = dict(self.coeffs)
        for deg, c in other.coeffs.items():
            out[deg] = out.get(deg, ZERO) + c
        return UniPoly(out, var)

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly({d: -c for d, c in self.coeffs.items()}, self.var)

    def __sub__(self, other) -> "UniPoly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "UniPoly":
        return (-self) + self._lift(other)

    def __mul__(self, other) -> "UniPoly":
        other = self._lift(other)
        var = self._merge_var(other)
        out: dict[int, Fraction] = {}
        for d1, c1 in self.coeffs.items():
            for d2, c2 in other.coeffs.items():
                d = d1 + d2
                out[d] = out.get(d, ZERO) + c1 * c2
        return UniPoly(out, var)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = UniPoly.constant(1, self.var)
        for _ in range(n):
            out = out * self
        return out

    def __call__(self, point) -> Fraction:
        point = coerce_rational(point)
        total = ZERO
        for deg, c in self.coeffs.items():
            total += c * point**deg
        return total

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = UniPoly.constant(other, self.var)
        if not isinstance(other, UniPoly):
            return NotImplemented
        if self.coeffs != other.coeffs:
            return False
        # constants compare equal across variables
        return self.degree <= 0 or other.degree <= 0 or self.var == other.var

    __hash__ = None

    def __repr__(self) -> str:
        parts = []
        for deg in sorted(self.coeffs, reverse=True):
            c = self.coeffs[deg]
            if deg == 0:
                body = ""
            elif deg == 1:
                body = self.var
            else:
                body = "%s^%d" % (self.var, deg)
            parts.append(_format_term(c, body))
        return _join_terms(parts)


def level_var() -> UniPoly:
    """The formal level as a polynomial."""
    return UniPoly.variable("k")


class HPoly:
    """Sparse polynomial in the Cartan coordinates h_1..h_n over Q."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        clean: dict[tuple, Fraction] = {}
        if terms:
            for expo, c in terms.items():
                expo = tuple(int(e) for e in expo)
                if len(expo) != nvars or any(e < 0 for e in expo):
                    raise ValueError("bad exponent vector %r" % (expo,))
                c = coerce_rational(c)
                if c:
                    clean[expo] = clean.get(expo, ZERO) + c
                    if not clean[expo]:
                        del clean[expo]
        self.nvars = nvars
        self.terms = clean

    @classmethod
    def constant(cls, nvars: int, value) -> "HPoly":
        return cls(nvars, {(0,) * nvars: coerce_rational(value)})

    @classmethod
    def coordinate(cls, nvars: int, i: int) -> "HPoly":
        """The coordinate function h_i, 1-based."""
        if not 1 <= i <= nvars:
            raise ValueError("coordinate index out of range")
        expo = tuple(1 if t == i - 1 else 0 for t in range(nvars))
        return cls(nvars, {expo: ONE})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def _lift(self, other) -> "HPoly":
        if isinstance(other, HPoly):
            if other.nvars != self.nvars:
                raise ValueError("mismatched variable counts")
            return other
        return HPoly.constant(self.nvars, coerce_rational(other))

    def __add__(self, other) -> "HPoly":
        other = self._lift(other)
        out = dict(self.terms)
        for expo, c in other.terms.items():
            out[expo] = out.get(expo, ZERO) + c
        return HPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "HPoly":
        return HPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "HPoly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "HPoly":
        return (-self) + self._lift(other)

    def __mul__(self, other) -> "HPoly":
        other = self._lift(other)
        out: dict[tuple, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, ZERO) + c1 * c2
        return HPoly(self.nvars, out)

    __rmul__ = __mul__

    def evaluate(self, point) -> Fraction:
        point = [coerce_rational(p) for p in point]
        if len(point) != self.nvars:
            raise ValueError("point has wrong length")
        total = ZERO
        for expo, c in self.terms.items():
            value = c
            for coord, e in zip(point, expo):
                if e:
                    value *= coord**e
            total += value
        return total

    def substitute_affine(self, assignment) -> UniPoly:
        """Substitute h_i -> a_i + b_i x and expand to a polynomial in x.

        assignment is a sequence of (constant, slope) pairs, one per variable.
        """
        pairs = [(coerce_rational(a), coerce_rational(b)) for a, b in assignment]
        if len(pairs) != self.nvars:
            raise ValueError("assignment has wrong length")
        lines = [UniPoly({0: a, 1: b}, "x") for a, b in pairs]
        total = UniPoly({}, "x")
        for expo, c in self.terms.items():
            term = UniPoly.constant(c, "x")
            for line, e in zip(lines, expo):
                for _ in range(e):
                    term = term * line
            total = total + term
        return total

    def coefficient_vector(self) -> dict[tuple, Fraction]:
        return dict(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = HPoly.constant(self.nvars, other)
        if not isinstance(other, HPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None

    def __repr__(self) -> str:
        parts = []
        for expo in sorted(self.terms, key=lambda e: (sum(e), e), reverse=True):
            pieces = []
            for t, e in enumerate(expo):
                if e == 1:
                    pieces.append("h%d" % (t + 1))
                elif e > 1:
                    pieces.append("h%d^%d" % (t + 1, e))
            parts.append(_format_term(self.terms[expo], "*".join(pieces)))
        return _join_terms(parts)
