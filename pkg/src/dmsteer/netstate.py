"""Four-node network: two Bell pairs (1,2) and (3,4) joined by a DM coupling on (2,3)."""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass

import numpy as np

from . import qla
from .errors import BadSubset
from .qla import I2, SIGMA_X, SIGMA_Y, SIGMA_Z, DensityOperator

NUM_NODES = 4
COUPLED_NODES = (2, 3)


class BellKind(enum.Enum):
    PHI_PLUS = "phi+"
    PHI_MINUS = "phi-"
    PSI_PLUS = "psi+"
    PSI_MINUS = "psi-"


# phi(+/-) = (|11> +/- |00>)/sqrt2, psi(+/-) = (|10> +/- |01>)/sqrt2
_BELL_AMPLITUDES = {
    BellKind.PHI_PLUS: (1, 0, 0, 1),
    BellKind.PHI_MINUS: (-1, 0, 0, 1),
    BellKind.PSI_PLUS: (0, 1, 1, 0),
    BellKind.PSI_MINUS: (0, -1, 1, 0),
}


@dataclass(frozen=True)
class DmVector:
    """DM coupling strengths along x, y, z (inverse time, hbar = 1)."""

    dx: float = 0.0
    dy: float = 0.0
    dz: float = 0.0

    def __post_init__(self):
        for name in ("dx", "dy", "dz"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise ValueError(f"{name} must be finite, got {v}")
            object.__setattr__(self, name, v)

    @classmethod
    def along_x(cls, dx: float) -> "DmVector":
        return cls(dx, 0.0, 0.0)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.dx, self.dy, self.dz)


@dataclass(frozen=True, order=True)
class NodePair:
    """Two distinct network nodes, stored with ``a < b``."""

    a: int
    b: int

    def __post_init__(self):
        a, b = int(self.a), int(self.b)
        if not (1 <= a <= NUM_NODES and 1 <= b <= NUM_NODES):
            raise BadSubset(f"nodes must lie in 1..{NUM_NODES}, got ({a},{b})")
        if a >= b:
            raise BadSubset(f"node pair must satisfy a < b, got ({a},{b})")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def parse(cls, text: str) -> "NodePair":
        """Parse ``"2,3"`` or ``"2-3"``."""
        parts = text.replace("-", ",").split(",")
        if len(parts) != 2:
            raise BadSubset(f"cannot parse node pair {text!r}")
        try:
            return cls(int(parts[0]), int(parts[1]))
        except ValueError as exc:
            raise BadSubset(f"cannot parse node pair {text!r}") from exc

    @property
    def direct(self) -> bool:
        return (self.a, self.b) == COUPLED_NODES

    def __str__(self):
        return f"{self.a}-{self.b}"


def _coerce_dm(d) -> DmVector:
    if isinstance(d, DmVector):
        return d
    return DmVector(*d)


def bell_state(kind: BellKind = BellKind.PHI_PLUS) -> DensityOperator:
    psi = np.array(_BELL_AMPLITUDES[kind], dtype=complex) / math.sqrt(2)
    return DensityOperator(np.outer(psi, psi.conj()))


def initial_network() -> DensityOperator:
    phi = bell_state(BellKind.PHI_PLUS).matrix
    return DensityOperator(qla.kron(phi, phi))


def dm_coupling_two_qubit(d) -> np.ndarray:
    """``D . (sigma x tau)`` on two qubits, before embedding into the network."""
    d = _coerce_dm(d)
    cross_x = qla.kron(SIGMA_Y, SIGMA_Z) - qla.kron(SIGMA_Z, SIGMA_Y)
    cross_y = qla.kron(SIGMA_Z, SIGMA_X) - qla.kron(SIGMA_X, SIGMA_Z)
    cross_z = qla.kron(SIGMA_X, SIGMA_Y) - qla.kron(SIGMA_Y, SIGMA_X)
    return d.dx * cross_x + d.dy * cross_y + d.dz * cross_z


def dm_hamiltonian(d) -> np.ndarray:
    """16x16 DM Hamiltonian coupling nodes 2 and 3, identity on nodes 1 and 4."""
    return qla.kron_all(I2, dm_coupling_two_qubit(d), I2)


@functools.lru_cache(maxsize=1024)
def _network_eigensystem(d: DmVector) -> qla.EigenSystem:
    es = qla.eig_hermitian(dm_hamiltonian(d))
    for arr in es:
        arr.setflags(write=False)
    return es


def network_unitary(d, t: float) -> np.ndarray:
    return qla.unitary_from_eigensystem(_network_eigensystem(_coerce_dm(d)), t)


def evolve_network(d, t: float) -> DensityOperator:
    """Global state ``U rho(0) U^dagger`` with ``U = exp(-i H_DM t)``."""
    if not math.isfinite(t):
        raise ValueError(f"t must be finite, got {t}")
    u = network_unitary(d, t)
    return DensityOperator(u @ initial_network().matrix @ u.conj().T)


def evolve_many(d, ts) -> np.ndarray:
    """Stack of global states ``(len(ts), 16, 16)``, unvalidated.

    Propagates the initial state vector instead of conjugating the density
    matrix, so it is an independent route to :func:`evolve_network`.
    """
    ts = np.asarray(ts, dtype=float)
    w, v = _network_eigensystem(_coerce_dm(d))
    phi = np.array(_BELL_AMPLITUDES[BellKind.PHI_PLUS], dtype=complex) / math.sqrt(2)
    coeff = v.conj().T @ np.kron(phi, phi)
    psi = (np.exp(-1j * np.outer(ts, w)) * coeff) @ v.T
    return psi[:, :, None] * psi[:, None, :].conj()


def channel_state(pair: NodePair, d, t: float) -> DensityOperator:
    """Reduced two-node state of ``pair`` after evolving for time ``t``."""
    if not isinstance(pair, NodePair):
        pair = NodePair(*pair)
    return qla.partial_trace(evolve_network(d, t), [pair.a, pair.b])
