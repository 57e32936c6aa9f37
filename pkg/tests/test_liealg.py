from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from affine_singular.liealg import (BasisElement, build_algebra, element_weight,
                                    parse_element)
from affine_singular.linalg import det_dense
from affine_singular.weights import coroot_pairing


def combo_bracket(table, u: dict, v: dict) -> dict:
    """Bracket of two linear combinations, via the structure table."""
    out = {}
    for x, cx in u.items():
        for y, cy in v.items():
            for z, cz in table.bracket(x, y):
                out[z] = out.get(z, 0) + cx * cy * cz
    return {z: c for z, c in out.items() if c}


def test_dimensions_and_blocks(table_c2, table_c3, table_a3, table_a4):
    assert table_c2.dimension == 10
    assert table_c3.dimension == 21
    assert table_a3.dimension == 8
    assert table_a4.dimension == 15
    for table in (table_c2, table_c3, table_a3, table_a4):
        blocks = table.blocks
        lowers = blocks.count("lower")
        raisers = blocks.count("raise")
        assert lowers == raisers
        assert blocks == ("lower",) * lowers + ("cartan",) * len(table.cartan_indices) + ("raise",) * raisers
        # lowering block really carries the negative weights
        for n, block in enumerate(blocks):
            w = table.weights[n]
            if block == "cartan":
                assert all(c == 0 for c in w)
            else:
                nonzero = [c for c in w if c]
                assert (nonzero[0] < 0) == (block == "lower")


def test_parse_element_round_trip(table_c3, table_a3):
    for table in (table_c3, table_a3):
        for n in range(table.dimension):
            text = table.text(n)
            assert table.idx(parse_element(text)) == n
            assert table.idx(text) == n
    with pytest.raises(ValueError):
        parse_element("X[e1*e2]")
    with pytest.raises(ValueError):
        table_a3.idx("X[2e1]")  # not an sl_3 element
    with pytest.raises(ValueError):
        table_c3.idx("h4")


def test_element_weights():
    assert element_weight(BasisElement("plus", 1, 2), 3) == (1, 1, 0)
    assert element_weight(BasisElement("minus", 2, 2), 3) == (0, -2, 0)
    assert element_weight(BasisElement("mixed", 3, 1), 3) == (-1, 0, 1)
    assert element_weight(BasisElement("cartan", 2), 3) == (0, 0, 0)


def test_frozen_brackets_c2(table_c2):
    t = table_c2
    # [X[2e1], X[-2e1]] = -4 h1
    assert t.bracket("X[2e1]", "X[-2e1]") == ((t.idx("h1"), Fraction(-4)),)
    # [h1, X[2e1]] = 2 X[2e1]
    assert t.bracket("h1", "X[2e1]") == ((t.idx("X[2e1]"), Fraction(2)),)
    # [X[e1-e2], X[e2-e1]] = h1 - h2
    assert dict(t.bracket("X[e1-e2]", "X[e2-e1]")) == {t.idx("h1"): Fraction(1),
                                                       t.idx("h2"): Fraction(-1)}
    # [X[2e1], X[e2-e1]] = 2 X[e1+e2]
    assert t.bracket("X[2e1]", "X[e2-e1]") == ((t.idx("X[e1+e2]"), Fraction(2)),)
    assert t.bracket("X[2e1]", "X[2e2]") == ()


def test_frozen_brackets_a3(table_a3):
    t = table_a3
    assert dict(t.bracket("X[e1-e2]", "X[e2-e1]")) == {t.idx("h1-h2"): Fraction(1)}
    # with these oscillator conventions [X[e1-e2], X[e2-e3]] = -X[e1-e3]
    assert t.bracket("X[e1-e2]", "X[e2-e3]") == ((t.idx("X[e1-e3]"),
                                                  Fraction(-1)),)
    assert t.bracket("X[e1-e2]", "X[e1-e3]") == ()


def test_frozen_form_values(table_c2, table_c3, table_a3):
    assert table_c2.form("X[2e1]", "X[-2e1]") == -4
    assert table_c2.form("h1", "h1") == 2
    assert table_c2.form("h1", "h2") == 0
    assert table_c2.form("X[e1+e2]", "X[-e1-e2]") == -2
    assert table_c2.form("X[e1-e2]", "X[e2-e1]") == 2
    assert table_c3.form("X[2e1]", "X[-2e1]") == -4
    assert table_a3.form("X[e1-e3]", "X[e3-e1]") == 1
    assert table_a3.form("h1-h2", "h1-h2") == 2
    assert table_a3.form("h1-h2", "h2-h3") == -1
    # the form pairs opposite weights only
    for t in (table_c2, table_a3):
        for a in range(t.dimension):
            for b in range(t.dimension):
                wa, wb = t.weights[a], t.weights[b]
                if any(x + y for x, y in zip(wa, wb)):
                    assert t.form(a, b) == 0


def test_brackets_match_oscillator_commutators(table_c2, table_a3):
    """Re-expand every claimed bracket and compare with the raw commutator."""
    for t in (table_c2, table_a3):
        for a in range(t.dimension):
            for b in range(t.dimension):
                ra, rb = t.realizations[a], t.realizations[b]
                direct = ra * rb - rb * ra
                claimed = sum((t.realizations[z].scale(c) for z, c in t.bracket(a, b)),
                              ra - ra)
                assert direct == claimed, (t.text(a), t.text(b))


def test_antisymmetry_and_jacobi(table_c2, table_a3):
    for t in (table_c2, table_a3):
        dim = t.dimension
        for a in range(dim):
            for b in range(dim):
                left = dict(t.bracket(a, b))
                right = {z: -c for z, c in t.bracket(b, a)}
                assert left == right
        for a, b, c in itertools.product(range(dim), repeat=3):
            total = combo_bracket(t, combo_bracket(t, {a: 1}, {b: 1}), {c: 1})
            for z, cz in combo_bracket(t, combo_bracket(t, {b: 1}, {c: 1}), {a: 1}).items():
                total[z] = total.get(z, 0) + cz
            for z, cz in combo_bracket(t, combo_bracket(t, {c: 1}, {a: 1}), {b: 1}).items():
                total[z] = total.get(z, 0) + cz
            assert not any(total.values()), (a, b, c)


def test_form_invariance(table_c2, table_a3):
    """([x, y], z) + (y, [x, z]) = 0 for all basis triples."""
    for t in (table_c2, table_a3):
        dim = t.dimension
        for x, y, z in itertools.product(range(dim), repeat=3):
            first = sum((c * t.form(w, z) for w, c in t.bracket(x, y)), Fraction(0))
            second = sum((c * t.form(y, w) for w, c in t.bracket(x, z)), Fraction(0))
            assert first + second == 0, (x, y, z)


def test_form_nondegenerate(table_c2, table_c3, table_a3):
    for t in (table_c2, table_c3, table_a3):
        gram = [[t.form(a, b) for b in range(t.dimension)] for a in range(t.dimension)]
        assert det_dense(gram) != 0


def test_root_space_property(table_c3, table_a4):
    """[h, x] is x scaled by the weight coordinate h reads off."""
    for t in (table_c3, table_a4):
        for h in t.cartan_indices:
            elem = t.element(h)
            for n in range(t.dimension):
                w = t.weights[n]
                if t.kind == "C":
                    expected = w[elem.i - 1]
                else:
                    expected = w[elem.i - 1] - w[elem.i]
                terms = t.bracket(h, n)
                if expected == 0:
                    assert terms == ()
                else:
                    assert terms == ((n, Fraction(expected)),)


def test_chevalley_data(table_c2, table_c3, table_a4):
    t = table_c2
    assert [t.text(n) for n in t.simple_raising] == ["X[e1-e2]", "X[2e2]"]
    assert [t.text(n) for n in t.simple_lowering] == ["X[e2-e1]", "X[-2e2]"]
    assert t.text(t.theta_raising) == "X[2e1]"
    assert t.text(t.theta_lowering) == "X[-2e1]"
    assert t.theta == (2, 0)
    t = table_a4
    assert t.text(t.theta_raising) == "X[e1-e4]"
    assert t.text(t.theta_lowering) == "X[e4-e1]"
    assert t.theta == (1, 0, 0, -1)
    assert table_c3.theta == (2, 0, 0)
    # theta dominates: theta - alpha has nonnegative partial sums, which is
    # exactly membership in the nonnegative span of the simple roots here
    for t in (table_c2, table_c3, table_a4):
        for w in t.positive_root_weights:
            diff = tuple(a - b for a, b in zip(t.theta, w))
            partial = 0
            for c in diff:
                partial += c
                assert partial >= 0


def test_fundamental_weights_dual_to_simple_coroots(table_c2, table_c3, table_a3, table_a4):
    for t in (table_c2, table_c3, table_a3, table_a4):
        count = t.rank if t.kind == "C" else t.rank - 1
        for m in range(1, count + 1):
            omega = t.fundamental_weight(m)
            for i, alpha in enumerate(t.simple_roots):
                expected = 1 if i == m - 1 else 0
                assert coroot_pairing(omega, alpha) == expected
        with pytest.raises(ValueError):
            t.fundamental_weight(count + 1)


def test_rho(table_c2, table_c3, table_a3):
    assert table_c2.rho() == (2, 1)
    assert table_c3.rho() == (3, 2, 1)
    assert table_a3.rho() == (1, 0, -1)


def test_cartan_hpoly(table_c2, table_a3):
    assert repr(table_c2.cartan_hpoly("h1")) == "h1"
    assert repr(table_a3.cartan_hpoly("h1-h2")) == "h1 - h2"
    with pytest.raises(ValueError):
        table_c2.cartan_hpoly("X[2e1]")


def test_build_algebra_guards():
    with pytest.raises(ValueError):
        build_algebra("B", 2)
    with pytest.raises(ValueError):
        build_algebra("C", 1)
    # cached: same object on repeat calls
    assert build_algebra("C", 2) is build_algebra("C", 2)


def test_info_lines(table_c2):
    lines = list(table_c2.info_lines())
    assert lines[0] == "algebra C_2  dimension 10"
    assert any("[X[-2e1], X[2e1]] = (4) h1" in line for line in lines)
    assert any("(h1, h1) = 2" in line for line in lines)
