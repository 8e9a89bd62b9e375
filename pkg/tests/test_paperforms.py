import math

import numpy as np
import pytest

from dmsteer.errors import UnsupportedPair
from dmsteer.netstate import NodePair
from dmsteer.paperforms import coefficients, discrepancy_report, paper_rho23, paper_rho24

GRID = [(dx, t) for dx in (0.0, 0.03, 0.5, 1.0) for t in (0.0, 0.4, math.pi / 4, 2.0, 17.0)]


def ketbra(i, j):
    m = np.zeros((4, 4))
    m[i, j] = 1
    return m


@pytest.mark.parametrize("dx,t", GRID)
def test_coefficient_identities(dx, t):
    c = coefficients(dx, t)
    x = dx * t
    assert c.b1 == pytest.approx(0.25 * (math.cos(x) ** 4 + math.sin(x) ** 4 + math.sin(2 * x)), abs=1e-14)
    assert c.b2 == pytest.approx(0.5 * math.cos(2 * x) ** 2, abs=1e-14)
    assert c.b3 == pytest.approx(0.125 * math.sin(2 * x) ** 2, abs=1e-14)
    assert c.t1 == pytest.approx(0.25 * (1 + math.sin(2 * x) ** 2), abs=1e-14)
    assert c.t2 == pytest.approx(0.375 * (1 + math.sin(2 * x) ** 2), abs=1e-14)


def test_rho23_at_t0():
    expected = np.eye(4) / 4 + 0.5 * (ketbra(1, 2) + ketbra(2, 1))
    np.testing.assert_allclose(paper_rho23(0.7, 0.0), expected, atol=1e-15)


def test_rho23_quarter_period_values():
    c = coefficients(1.0, math.pi / 4)
    assert c.b1 == pytest.approx(0.375, abs=1e-14)
    assert c.b2 == pytest.approx(0.0, abs=1e-14)
    assert c.b3 == pytest.approx(0.125, abs=1e-14)
    assert np.trace(paper_rho23(1.0, math.pi / 4)).real == pytest.approx(1.5, abs=1e-14)


def test_rho24_at_t0():
    off = ketbra(0, 3) + ketbra(1, 2) + ketbra(2, 1) + ketbra(3, 0)
    np.testing.assert_allclose(paper_rho24(0.2, 0.0), np.eye(4) / 4 + 0.375 * off, atol=1e-15)


def test_rho24_trace_at_quarter_period():
    assert np.trace(paper_rho24(1.0, math.pi / 4)).real == pytest.approx(2.0, abs=1e-14)


@pytest.mark.parametrize("dx,t", GRID)
def test_rho24_swap_symmetric(dx, t):
    m = paper_rho24(dx, t).reshape(2, 2, 2, 2)
    np.testing.assert_array_equal(m, m.transpose(1, 0, 3, 2))


def test_report_rho23_at_t0():
    rep = discrepancy_report(NodePair(2, 3), 0.4, 0.0)
    assert rep.trace_defect == pytest.approx(0.0, abs=1e-14)
    assert rep.max_entry_delta == pytest.approx(0.5, abs=1e-12)


def test_report_rho24_quarter_period():
    assert discrepancy_report(NodePair(2, 4), 1.0, math.pi / 4).trace_defect == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("t", [0.0, 1.0, 25.0])
def test_report_without_coupling(t):
    rep = discrepancy_report(NodePair(2, 3), 0.0, t)
    assert rep.trace_defect == pytest.approx(0.0, abs=1e-14)
    assert rep.max_entry_delta == pytest.approx(0.5, abs=1e-12)


@pytest.mark.parametrize("dx,t", GRID)
def test_rho24_trace_defect_identity(dx, t):
    rep = discrepancy_report(NodePair(2, 4), dx, t)
    assert abs(rep.trace_defect - math.sin(2 * dx * t) ** 2) <= 1e-12
    assert rep.max_entry_delta >= 0
    assert all(math.isfinite(v) for v in (rep.trace_defect, rep.max_entry_delta, rep.min_eigenvalue))


def test_rho24_closed_form_not_positive():
    # T2 > T1 always, so the |00>,|11> block has eigenvalue T1 - T2 < 0
    assert discrepancy_report(NodePair(2, 4), 0.3, 1.0).min_eigenvalue < 0


def test_report_does_not_modify_closed_form():
    before = paper_rho23(0.3, 2.0).copy()
    discrepancy_report(NodePair(2, 3), 0.3, 2.0)
    np.testing.assert_array_equal(paper_rho23(0.3, 2.0), before)


@pytest.mark.parametrize("pair", [NodePair(1, 2), NodePair(1, 4), NodePair(1, 3), NodePair(3, 4)])
def test_unsupported_pairs(pair):
    with pytest.raises(UnsupportedPair):
        discrepancy_report(pair, 1.0, 0.5)


def test_report_row():
    row = discrepancy_report(NodePair(2, 4), 0.5, 1.0).as_row()
    assert list(row) == ["pair", "dx", "t", "trace_defect", "max_entry_delta", "min_eigenvalue"]
    assert row["pair"] == "2-4"
