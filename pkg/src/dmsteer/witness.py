"""Entropic steering parameter and negativity of two-qubit channels."""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass

import numpy as np

from . import qla
from .errors import NonHermitian, NotPositive, WrongDimension
from .qla import I2, DensityOperator

STEERING_BOUND = 2.0
# totals this close to the bound count as saturating it, not violating it
STEERING_TOL = 1e-12
NEGATIVITY_CLAMP_TOL = 1e-9


class PauliAxis(enum.Enum):
    X = "x"
    Y = "y"
    Z = "z"

    @property
    def eigenvectors(self) -> tuple[np.ndarray, np.ndarray]:
        s = 1 / math.sqrt(2)
        if self is PauliAxis.X:
            return np.array([s, s], dtype=complex), np.array([s, -s], dtype=complex)
        if self is PauliAxis.Y:
            return np.array([s, 1j * s]), np.array([s, -1j * s])
        return np.array([1, 0], dtype=complex), np.array([0, 1], dtype=complex)

    @property
    def projectors(self) -> tuple[np.ndarray, np.ndarray]:
        return tuple(np.outer(v, v.conj()) for v in self.eigenvectors)


@dataclass(frozen=True)
class SteeringBreakdown:
    per_axis: dict
    total: float
    steerable: bool

    def __getitem__(self, axis: PauliAxis) -> float:
        return self.per_axis[axis]


def _two_qubit(rho) -> np.ndarray:
    m = np.asarray(rho, dtype=complex)
    if m.shape[-2:] != (4, 4):
        raise WrongDimension(f"expected a two-qubit (4x4) state, got shape {m.shape}")
    return m


@functools.lru_cache(maxsize=None)
def _lifted_projectors(axis: PauliAxis, measured: int) -> tuple[np.ndarray, np.ndarray]:
    if measured not in (1, 2):
        raise ValueError(f"measured must be 1 or 2, got {measured}")
    lifted = []
    for p in axis.projectors:
        lp = qla.kron(p, I2) if measured == 1 else qla.kron(I2, p)
        lp.setflags(write=False)
        lifted.append(lp)
    return tuple(lifted)


def dephase(rho, axis: PauliAxis, measured: int = 1) -> np.ndarray:
    """Unvalidated post-measurement map; accepts stacked ``(..., 4, 4)`` input."""
    m = _two_qubit(rho)
    p0, p1 = _lifted_projectors(axis, measured)
    return p0 @ m @ p0 + p1 @ m @ p1


def post_measurement_state(rho, axis: PauliAxis, measured: int = 1) -> DensityOperator:
    """Dephase the ``measured`` qubit in the eigenbasis of the chosen Pauli.

    Returns ``sum_j (P_j x I) rho (P_j x I)`` for ``measured=1``.
    """
    return DensityOperator(dephase(rho, axis, measured))


def conditional_entropies(rhos, measured: int = 1) -> np.ndarray:
    """Per-axis conditional entropies of stacked states, shape ``(..., 3)``.

    Columns follow ``PauliAxis`` order (x, y, z).
    """
    m = _two_qubit(rhos)
    cols = []
    for ax in PauliAxis:
        post = dephase(m, ax, measured)
        marginal = qla.partial_trace(post, [measured])
        cols.append(qla.entropy_many(post) - qla.entropy_many(marginal))
    return np.stack(cols, axis=-1)


def conditional_entropy(rho, axis: PauliAxis, measured: int = 1) -> float:
    """``S(rho~) - S(rho~ restricted to the measured qubit)``, in bits."""
    post = post_measurement_state(rho, axis, measured)
    marginal = qla.partial_trace(post, [measured])
    return qla.von_neumann_entropy(post) - qla.von_neumann_entropy(marginal)


def is_steerable(total):
    return np.asarray(total) < STEERING_BOUND - STEERING_TOL


def steering_parameter(rho, measured: int = 1) -> SteeringBreakdown:
    """Sum of the conditional entropies over the three Pauli axes.

    The state counts as steerable when the sum lies strictly below 2 bits.
    """
    per_axis = {ax: conditional_entropy(rho, ax, measured) for ax in PauliAxis}
    total = math.fsum(per_axis.values())
    return SteeringBreakdown(per_axis, total, bool(is_steerable(total)))


def negativities(rhos) -> np.ndarray:
    """Negativity of stacked two-qubit states; see :func:`negativity`."""
    pt = qla.partial_transpose(_two_qubit(rhos), 2)
    if qla.hermiticity_defect(pt) > qla.HERMITIAN_TOL:
        raise NonHermitian("partial transpose is not Hermitian")
    value = np.sum(np.abs(np.linalg.eigvalsh(pt)), axis=-1) - 1.0
    if np.any(value < -NEGATIVITY_CLAMP_TOL) or np.any(value > 1 + NEGATIVITY_CLAMP_TOL):
        raise NotPositive("negativity outside [0, 1]; input is not a valid state")
    return np.clip(value, 0.0, 1.0)


def negativity(rho) -> float:
    """Trace norm of the partial transpose minus one.

    Raises
    ------
    NotPositive
        If the raw value falls outside ``[0, 1]`` by more than the clamp
        tolerance, which only happens for an invalid input state.
    """
    pt = qla.partial_transpose(_two_qubit(rho), 2)
    value = float(np.sum(np.abs(qla.eig_hermitian(pt).eigenvalues))) - 1.0
    if value < -NEGATIVITY_CLAMP_TOL or value > 1 + NEGATIVITY_CLAMP_TOL:
        raise NotPositive(f"negativity {value:.3e} outside [0, 1]")
    return min(max(value, 0.0), 1.0)
