"""Closed-form (2,3) and (2,4) channel matrices, kept exactly as printed.

These matrices are *not* valid density operators in general: their trace
drifts away from one and the (2,4) form loses positivity.  They are never used
by the simulation pipeline; :func:`discrepancy_report` measures how far each one
sits from the exact reduced state.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .errors import UnsupportedPair
from .netstate import DmVector, NodePair, channel_state

_KET = {"00": 0, "01": 1, "10": 2, "11": 3}


def _ketbra(row: str, col: str) -> np.ndarray:
    m = np.zeros((4, 4), dtype=complex)
    m[_KET[row], _KET[col]] = 1.0
    return m


@dataclass(frozen=True)
class ClosedFormCoefficients:
    b1: float
    b2: float
    b3: float
    t1: float
    t2: float


def coefficients(dx: float, t: float) -> ClosedFormCoefficients:
    phase = dx * t
    s2 = math.sin(2 * phase) ** 2
    return ClosedFormCoefficients(
        b1=0.25 * (math.cos(phase) ** 4 + math.sin(phase) ** 4 + math.sin(2 * phase)),
        b2=0.5 * math.cos(2 * phase) ** 2,
        b3=0.125 * s2,
        t1=0.25 * (1 + s2),
        t2=0.375 * (1 + s2),
    )


def paper_rho23(dx: float, t: float) -> np.ndarray:
    # identity taken as 4x4; a 2x2 identity cannot enter a two-qubit sum
    c = coefficients(dx, t)
    return (
        c.b1 * np.eye(4, dtype=complex)
        + c.b2 * (_ketbra("01", "10") + _ketbra("10", "01"))
        + c.b3 * (_ketbra("11", "00") + _ketbra("00", "11"))
    )


def paper_rho24(dx: float, t: float) -> np.ndarray:
    c = coefficients(dx, t)
    off = _ketbra("00", "11") + _ketbra("01", "10") + _ketbra("10", "01") + _ketbra("11", "00")
    return c.t1 * np.eye(4, dtype=complex) + c.t2 * off


_CLOSED_FORMS = {NodePair(2, 3): paper_rho23, NodePair(2, 4): paper_rho24}


@dataclass(frozen=True)
class DiscrepancyReport:
    pair: NodePair
    dx: float
    t: float
    trace_defect: float
    max_entry_delta: float
    min_eigenvalue: float

    def as_row(self) -> dict:
        row = asdict(self)
        row["pair"] = str(self.pair)
        return row


def discrepancy_report(pair: NodePair, dx: float, t: float) -> DiscrepancyReport:
    """Compare a closed form against the exact channel state at ``(dx, t)``."""
    if not isinstance(pair, NodePair):
        pair = NodePair(*pair)
    try:
        form = _CLOSED_FORMS[pair]
    except KeyError:
        raise UnsupportedPair(f"no closed form for pair {pair}; use 2-3 or 2-4") from None
    closed = form(dx, t)
    exact = channel_state(pair, DmVector.along_x(dx), t).matrix
    herm = 0.5 * (closed + closed.conj().T)
    return DiscrepancyReport(
        pair=pair,
        dx=float(dx),
        t=float(t),
        trace_defect=float(abs(np.trace(closed) - 1)),
        max_entry_delta=float(np.max(np.abs(closed - exact))),
        min_eigenvalue=float(np.linalg.eigvalsh(herm)[0]),
    )
