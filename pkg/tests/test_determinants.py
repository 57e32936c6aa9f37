from __future__ import annotations

from fractions import Fraction

import pytest

from affine_singular.determinants import (DeterminantSpec, beta_constant,
                                          build_matrix, coexisting_singulars,
                                          det_entry_poly, determinant_vector,
                                          entries_commute_check, entry_element,
                                          ep_apply, ep_mul, ep_pow, ep_state,
                                          lowering_factor_check,
                                          minor_entry_poly, minor_vector,
                                          verify_singular)
from affine_singular.scalars import UniPoly
from affine_singular.vacuum import VacuumState, state_weight, straighten


def test_spec_validation():
    with pytest.raises(ValueError):
        DeterminantSpec("B", 2, 1, 1)
    with pytest.raises(ValueError):
        DeterminantSpec("C", 2, 3, 1)  # size exceeds rank
    with pytest.raises(ValueError):
        DeterminantSpec("A", 3, 2, 1)  # needs 2m <= rank
    with pytest.raises(ValueError):
        DeterminantSpec("C", 2, 1, 0)
    with pytest.raises(ValueError):
        DeterminantSpec("C", 2, 0, 1)


def test_distinguished_levels():
    assert DeterminantSpec("C", 2, 1, 1).level == 0
    assert DeterminantSpec("C", 2, 2, 1).level == Fraction(-1, 2)
    assert DeterminantSpec("C", 2, 2, 2).level == Fraction(1, 2)
    assert DeterminantSpec("C", 3, 3, 1).level == -1
    assert DeterminantSpec("A", 4, 2, 1).level == -1
    assert DeterminantSpec("A", 4, 2, 2).level == 0
    assert DeterminantSpec("A", 2, 1, 3).level == 2


def test_entry_elements(table_c2, table_a4):
    assert entry_element("C", 2, 1, 1).text() == "X[2e1]"
    assert entry_element("C", 2, 1, 2).text() == "X[e1+e2]"
    assert entry_element("C", 2, 2, 1).text() == "X[e1+e2]"
    assert entry_element("A", 4, 1, 1).text() == "X[e1-e4]"
    assert entry_element("A", 4, 2, 1).text() == "X[e2-e4]"
    assert entry_element("A", 4, 1, 2).text() == "X[e1-e3]"
    with pytest.raises(ValueError):
        entry_element("A", 3, 2, 2)  # e2 - e2 is not a root


def test_build_matrix_display(table_c2, table_a4):
    spec = DeterminantSpec("C", 2, 2, 1)
    mat = build_matrix(table_c2, spec)
    texts = [[table_c2.text(x) for x in row] for row in mat]
    assert texts == [["X[2e1]", "X[e1+e2]"], ["X[e1+e2]", "X[2e2]"]]
    spec = DeterminantSpec("A", 4, 2, 1)
    mat = build_matrix(table_a4, spec)
    texts = [[table_a4.text(x) for x in row] for row in mat]
    assert texts == [["X[e1-e4]", "X[e1-e3]"], ["X[e2-e4]", "X[e2-e3]"]]


def test_entries_commute(table_c3):
    assert entries_commute_check("C", 3, 3).verdict
    assert entries_commute_check("A", 4, 2).verdict
    report = entries_commute_check("A", 3, 2)  # oversized on purpose
    assert not report.verdict
    assert report.witness is not None


def test_determinant_c2_frozen(table_c2):
    t = table_c2
    spec = DeterminantSpec("C", 2, 2, 1)
    state = determinant_vector(t, spec)
    expected = (straighten(t, [(-1, "X[2e1]"), (-1, "X[2e2]")])
                - straighten(t, [(-1, "X[e1+e2]"), (-1, "X[e1+e2]")]))
    assert state == expected
    assert state.text(t) == ("(1) X[2e2](-1) X[2e1](-1) |0> + "
                             "(-1) X[e1+e2](-1) X[e1+e2](-1) |0>")
    assert state_weight(t, state) == (2, 2)


def test_determinant_weights(table_c3, table_a4):
    spec = DeterminantSpec("C", 3, 3, 2)
    assert state_weight(table_c3, determinant_vector(table_c3, spec)) == (4, 4, 4)
    spec = DeterminantSpec("A", 4, 2, 1)
    assert state_weight(table_a4, determinant_vector(table_a4, spec)) == (1, 1, -1, -1)


def test_leibniz_matches_cofactor_expansion(table_c3, table_a4):
    """det = sum_j (-1)^(1+j) entry(1, j) minor(1, j), checked exactly."""
    for kind, rank, m in (("C", 3, 3), ("C", 2, 2), ("A", 4, 2)):
        spec = DeterminantSpec(kind, rank, m, 1)
        table = spec.table()
        full = det_entry_poly(table, spec)
        cofactor = {}
        for j in range(1, m + 1):
            entry = {(table.idx(entry_element(kind, rank, 1, j)),): Fraction(1)}
            piece = ep_mul(entry, minor_entry_poly(table, spec, 1, j))
            for key, c in piece.items():
                sign = Fraction(-1) ** (1 + j)
                cofactor[key] = cofactor.get(key, Fraction(0)) + sign * c
        cofactor = {key: c for key, c in cofactor.items() if c}
        assert full == cofactor, (kind, rank, m)


def test_power_is_iterated_product(table_c2):
    spec = DeterminantSpec("C", 2, 2, 3)
    det = det_entry_poly(table_c2, spec)
    assert ep_pow(det, 3) == ep_mul(det, ep_mul(det, det))
    assert ep_pow(det, 0) == {(): Fraction(1)}


def test_ep_apply_matches_ep_state(table_c2):
    spec = DeterminantSpec("C", 2, 2, 2)
    det = det_entry_poly(table_c2, spec)
    assert ep_apply(table_c2, det, ep_state(det)) == ep_state(ep_pow(det, 2))
    assert ep_apply(table_c2, det, VacuumState.vacuum()) == ep_state(det)


def test_minor_of_1x1(table_c2):
    spec = DeterminantSpec("C", 2, 1, 1)
    assert minor_entry_poly(table_c2, spec, 1, 1) == {(): Fraction(1)}
    assert minor_vector(table_c2, spec, 1, 1) == VacuumState.vacuum()
    with pytest.raises(ValueError):
        minor_entry_poly(table_c2, spec, 2, 1)


def test_verify_singular_grid():
    cases = [
        ("C", 2, 1, 1), ("C", 2, 1, 2), ("C", 2, 2, 1), ("C", 2, 2, 2),
        ("C", 3, 2, 1), ("C", 3, 3, 1),
        ("A", 2, 1, 1), ("A", 2, 1, 2), ("A", 4, 2, 1), ("A", 4, 2, 2),
    ]
    for kind, rank, m, n in cases:
        report = verify_singular(DeterminantSpec(kind, rank, m, n))
        assert report.verdict, (kind, rank, m, n, report.witness)


def test_verify_singular_fails_off_level():
    spec = DeterminantSpec("C", 2, 2, 1)
    report = verify_singular(spec, level=spec.level + 1)
    assert not report.verdict
    assert report.witness["operator"] == "X[-2e1](1)"
    # residual = beta * n * (k - level) minor(1,1) |0> at k = level + 1
    assert report.witness["residual"] == "(-4) X[2e2](-1) |0>"
    # symbolic check also fails, keeping the level factor visible
    symbolic = verify_singular(spec, level=None)
    assert not symbolic.verdict
    assert symbolic.witness["residual"] == "(-4*k - 2) X[2e2](-1) |0>"


def test_beta_constants(table_c2, table_c3, table_a4):
    assert beta_constant(table_c2) == -4
    assert beta_constant(table_c3) == -4
    assert beta_constant(table_a4) == 1


def test_lowering_factor_c_type(table_c2):
    t = table_c2
    spec = DeterminantSpec("C", 2, 1, 1)
    # x_-theta(1) X[2e1](-1) |0> = -4 k |0>
    from affine_singular.vacuum import apply_generator
    lhs = apply_generator(t, t.theta_lowering, 1, determinant_vector(t, spec))
    assert lhs == VacuumState.vacuum() * UniPoly({1: Fraction(-4)})
    report = lowering_factor_check(spec)
    assert report.verdict


def test_lowering_factor_a_type(table_a2):
    t = table_a2
    spec = DeterminantSpec("A", 2, 1, 2)
    # f(1) e(-1)^2 |0> = 2 (k - 1) e(-1) |0>
    from affine_singular.vacuum import apply_generator
    lhs = apply_generator(t, t.theta_lowering, 1, determinant_vector(t, spec))
    expected = straighten(t, [(-1, "X[e1-e2]")]) * UniPoly({1: Fraction(2), 0: Fraction(-2)})
    assert lhs == expected
    report = lowering_factor_check(spec)
    assert report.verdict
    assert any("derived" in note for note in report.notes)


def test_lowering_factor_grid():
    cases = [
        ("C", 2, 1, 3), ("C", 2, 2, 1), ("C", 2, 2, 2),
        ("C", 3, 2, 1), ("C", 3, 3, 1),
        ("A", 2, 1, 1), ("A", 4, 2, 1), ("A", 4, 2, 2),
    ]
    for kind, rank, m, n in cases:
        report = lowering_factor_check(DeterminantSpec(kind, rank, m, n))
        assert report.verdict, (kind, rank, m, n, report.witness)


def test_coexisting_singulars():
    found = coexisting_singulars("C", 3, 0)
    assert [(s.m, s.n) for s in found] == [(1, 1), (3, 2)]
    # both really are singular at level 0 and carry different weights
    weights = set()
    for spec in found:
        table = spec.table()
        assert verify_singular(spec, level=0).verdict
        weights.add(state_weight(table, determinant_vector(table, spec)))
    assert len(weights) == 2
    assert coexisting_singulars("C", 2, Fraction(-1, 2)) == [DeterminantSpec("C", 2, 2, 1)]
    assert coexisting_singulars("A", 4, -1) == [DeterminantSpec("A", 4, 2, 1)]
    assert coexisting_singulars("A", 4, Fraction(-1, 2)) == []
