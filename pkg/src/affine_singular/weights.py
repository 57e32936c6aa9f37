"""Weight-lattice utilities: pairings, the Weyl dimension formula, and
Freudenthal's multiplicity recursion.

These rely only on root data, never on enveloping-algebra computations, so
they serve as independent cross-checks for the module-theoretic results.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import ZERO, coerce_rational


def dot(u, v) -> Fraction:
    """Euclidean pairing of weights written in the epsilon basis."""
    return sum((coerce_rational(a) * coerce_rational(b) for a, b in zip(u, v)), ZERO)


def coroot_pairing(lam, alpha) -> Fraction:
    """<lam, alpha^vee> = 2 (lam, alpha) / (alpha, alpha)."""
    return 2 * dot(lam, alpha) / dot(alpha, alpha)


def _add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def weyl_dim(table, lam) -> int:
    """Dimension of the irreducible with highest weight lam (epsilon coordinates)."""
    lam = tuple(coerce_rational(c) for c in lam)
    rho = table.rho()
    num = Fraction(1)
    for alpha in table.positive_root_weights:
        num *= dot(_add(lam, rho), alpha) / dot(rho, alpha)
    if num.denominator != 1:
        raise ArithmeticError("Weyl dimension came out non-integral: %s" % num)
    return int(num)


def weight_multiplicities(table, lam) -> dict:
    """All weights of the irreducible with highest weight lam, with multiplicities.

    Freudenthal's recursion, processed level by level so the higher weights a
    step needs are always known already.  Correctness of the traversal rests
    on two standard facts: every weight below lam is reachable from lam by
    subtracting one simple root at a time through weights, and the weights on
    an alpha-string through a weight are contiguous, so the string sum can
    stop at the first multiplicity-zero point.
    """
    lam = tuple(coerce_rational(c) for c in lam)
    rho = table.rho()
    simple = table.simple_roots
    positive = table.positive_root_weights
    c2 = dot(_add(lam, rho), _add(lam, rho))

    mult = {lam: 1}
    frontier = [lam]
    while frontier:
        candidates = set()
        for mu in frontier:
            for alpha in simple:
                candidates.add(_sub(mu, alpha))
        frontier = []
        for mu in sorted(candidates):
            if mu in mult:
                continue
            total = ZERO
            for alpha in positive:
                j = 1
                while True:
                    nu = tuple(m + j * a for m, a in zip(mu, alpha))
                    m_nu = mult.get(nu, 0)
                    if m_nu == 0:
                        break
                    total += 2 * m_nu * dot(nu, alpha)
                    j += 1
            denom = c2 - dot(_add(mu, rho), _add(mu, rho))
            if denom == 0:
                # only Weyl reflections of lam itself pump the denominator to
                # zero and those are never weights below lam
                continue
            value = total / denom
            if value.denominator != 1:
                raise ArithmeticError("non-integral multiplicity at %s" % (mu,))
            value = int(value)
            if value > 0:
                mult[mu] = value
                frontier.append(mu)
    return mult


def multiplicity(table, lam, mu) -> int:
    mu = tuple(coerce_rational(c) for c in mu)
    return weight_multiplicities(table, lam).get(mu, 0)
