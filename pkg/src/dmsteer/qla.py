"""Dense complex linear algebra for few-qubit density matrices.

Qubit 1 is the most significant tensor factor, so the basis label
``|b1 b2 ... bn>`` sits at index ``sum(b_k * 2**(n - k))``.  Qubit indices
are 1-based throughout the package.

Every function takes plain ``numpy`` arrays.  Functions that produce a state
from a state (``partial_trace``) hand back a :class:`DensityOperator` when
given one, and a bare array otherwise.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .errors import BadSubset, InvalidState, NonHermitian, NotPositive, WrongDimension

HERMITIAN_TOL = 1e-10
TRACE_TOL = 1e-10
PSD_TOL = 1e-9
ZERO_EIGENVALUE = 1e-12
NEGATIVE_CLAMP = 1e-10

I2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)


class EigenSystem(NamedTuple):
    """Eigenvalues sorted descending, eigenvectors as matching columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


@dataclass(frozen=True, eq=False)
class DensityOperator:
    """Validated density matrix on ``qubits`` qubits.

    The stored matrix is a read-only complex copy.  Construction fails with
    :class:`InvalidState` unless the matrix is Hermitian, has unit trace and
    no eigenvalue below ``-PSD_TOL``.
    """

    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        _num_qubits(m)
        if hermiticity_defect(m) > HERMITIAN_TOL:
            raise InvalidState("density matrix is not Hermitian")
        tr = np.trace(m)
        if abs(tr - 1) > TRACE_TOL:
            raise InvalidState(f"trace is {tr!r}, expected 1")
        lam = np.linalg.eigvalsh(m)[0]
        if lam < -PSD_TOL:
            raise InvalidState(f"minimum eigenvalue {lam:.3e} is negative")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def qubits(self) -> int:
        return _num_qubits(self.matrix)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self.matrix
        return self.matrix.astype(dtype)

    def __repr__(self):
        return f"DensityOperator(qubits={self.qubits})"


def _num_qubits(m: np.ndarray) -> int:
    if m.ndim < 2 or m.shape[-1] != m.shape[-2] or m.shape[-1] < 2:
        raise WrongDimension(f"expected a square 2**n matrix, got shape {m.shape}")
    n = int(m.shape[-1]).bit_length() - 1
    if 2**n != m.shape[-1]:
        raise WrongDimension(f"dimension {m.shape[-1]} is not a power of two")
    return n


def hermiticity_defect(m) -> float:
    """Return ``max |M - M^dagger|`` entrywise."""
    m = np.asarray(m)
    return float(np.max(np.abs(m - np.swapaxes(m, -1, -2).conj())))


def kron(a, b) -> np.ndarray:
    """Kronecker product with ``a`` as the more significant factor."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def kron_all(*factors) -> np.ndarray:
    out = np.ones((1, 1), dtype=complex)
    for f in factors:
        out = kron(out, f)
    return out


def eig_hermitian(m) -> EigenSystem:
    """Diagonalize a Hermitian matrix.

    Raises
    ------
    NonHermitian
        If ``max |M - M^dagger|`` exceeds ``HERMITIAN_TOL``.
    """
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise WrongDimension(f"expected a square matrix, got shape {m.shape}")
    if hermiticity_defect(m) > HERMITIAN_TOL:
        raise NonHermitian("matrix is not Hermitian within tolerance")
    w, v = np.linalg.eigh(m)
    return EigenSystem(w[::-1].copy(), v[:, ::-1].copy())


def unitary_from_hamiltonian(h, t: float) -> np.ndarray:
    """Propagator ``exp(-i h t)`` built from the exact eigendecomposition of ``h``."""
    return unitary_from_eigensystem(eig_hermitian(h), t)


def unitary_from_eigensystem(es: EigenSystem, t: float) -> np.ndarray:
    w, v = es
    return (v * np.exp(-1j * w * t)) @ v.conj().T


def _check_keep(keep: Sequence[int], n: int) -> list[int]:
    keep = [int(q) for q in keep]
    if not keep:
        raise BadSubset("keep must name at least one qubit")
    if any(q < 1 or q > n for q in keep):
        raise BadSubset(f"qubit index out of range 1..{n}: {keep}")
    if any(b <= a for a, b in zip(keep, keep[1:])):
        raise BadSubset(f"keep must be strictly increasing without duplicates: {keep}")
    return keep


def _wrap_like(rho, out: np.ndarray):
    if isinstance(rho, DensityOperator):
        return DensityOperator(out)
    return out


def partial_trace(rho, keep: Sequence[int]):
    """Reduce ``rho`` to the qubits in ``keep`` by summing over traced indices.

    ``keep`` holds 1-based, strictly increasing qubit labels.  Leading axes of
    a stacked ``(..., 2**n, 2**n)`` array are treated as batch dimensions.
    """
    m = np.asarray(rho, dtype=complex)
    n = _num_qubits(m)
    keep = _check_keep(keep, n)
    k = len(keep)
    batch = m.shape[:-2]
    t = m.reshape(batch + (2,) * (2 * n))
    row = list(range(n))
    col = list(range(n, 2 * n))
    for q in range(1, n + 1):
        if q not in keep:
            col[q - 1] = row[q - 1]
    out_idx = [Ellipsis] + [row[q - 1] for q in keep] + [col[q - 1] for q in keep]
    out = np.einsum(t, [Ellipsis] + row + col, out_idx).reshape(batch + (2**k, 2**k))
    return _wrap_like(rho, out)


def partial_trace_projector(rho, keep: Sequence[int]):
    """Same reduction as :func:`partial_trace`, via ``sum_k E_k^dagger rho E_k``.

    Each ``E_k`` is identity on kept qubits and the basis ket ``|k_q>`` on
    every traced qubit.  Kept as an independent route for cross-checking.
    """
    m = np.asarray(rho, dtype=complex)
    n = _num_qubits(m)
    keep = _check_keep(keep, n)
    traced = [q for q in range(1, n + 1) if q not in keep]
    kets = (np.array([[1], [0]], dtype=complex), np.array([[0], [1]], dtype=complex))
    out = np.zeros((2 ** len(keep),) * 2, dtype=complex)
    for bits in itertools.product((0, 1), repeat=len(traced)):
        which = dict(zip(traced, bits))
        e = kron_all(*(I2 if q in keep else kets[which[q]] for q in range(1, n + 1)))
        out += e.conj().T @ m @ e
    return _wrap_like(rho, out)


def partial_transpose(rho, subsystem: int = 2) -> np.ndarray:
    """Transpose one factor of a two-qubit operator.

    For ``subsystem=2`` this maps ``rho[ij, kl]`` to ``rho[il, kj]``.
    """
    m = np.asarray(rho, dtype=complex)
    if m.shape[-2:] != (4, 4):
        raise WrongDimension(f"partial transpose needs a 4x4 matrix, got {m.shape}")
    batch = m.shape[:-2]
    t = m.reshape(batch + (2, 2, 2, 2))
    nb = len(batch)
    axes = list(range(nb))
    if subsystem == 2:
        t = t.transpose(axes + [nb, nb + 3, nb + 2, nb + 1])
    elif subsystem == 1:
        t = t.transpose(axes + [nb + 2, nb + 1, nb, nb + 3])
    else:
        raise BadSubset(f"subsystem must be 1 or 2, got {subsystem}")
    return t.reshape(batch + (4, 4))


def clamp_spectrum(eigenvalues) -> np.ndarray:
    """Zero out roundoff-level eigenvalues, reject genuinely negative ones."""
    lam = np.asarray(eigenvalues, dtype=float).copy()
    if lam.size and lam.min() < -NEGATIVE_CLAMP:
        raise NotPositive(f"eigenvalue {lam.min():.3e} below -{NEGATIVE_CLAMP}")
    lam[lam < ZERO_EIGENVALUE] = 0.0
    return lam


def shannon_bits(probabilities):
    """``-sum p log2 p`` over the last axis, with ``0 log 0 = 0``."""
    p = np.asarray(probabilities, dtype=float)
    safe = np.where(p > 0, p, 1.0)
    h = -np.sum(p * np.log2(safe), axis=-1)
    return float(h) if h.ndim == 0 else h


def von_neumann_entropy(rho) -> float:
    """Entropy in bits, ``-sum lam log2 lam`` with ``0 log 0 = 0``."""
    return shannon_bits(clamp_spectrum(eig_hermitian(rho).eigenvalues))


def entropy_many(rhos) -> np.ndarray:
    """Von Neumann entropies of a stack of Hermitian matrices, in bits."""
    m = np.asarray(rhos, dtype=complex)
    if hermiticity_defect(m) > HERMITIAN_TOL:
        raise NonHermitian("matrix is not Hermitian within tolerance")
    return shannon_bits(clamp_spectrum(np.linalg.eigvalsh(m)))


def purity(rho) -> float:
    m = np.asarray(rho)
    return float(np.real(np.trace(m @ m)))


def random_density_matrix(qubits: int, rng: np.random.Generator, rank: int | None = None) -> np.ndarray:
    """Ginibre-distributed density matrix, full rank unless ``rank`` is given."""
    dim = 2**qubits
    g = rng.normal(size=(dim, rank or dim)) + 1j * rng.normal(size=(dim, rank or dim))
    m = g @ g.conj().T
    return m / np.trace(m).real


def random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random unitary from the QR decomposition of a Ginibre matrix."""
    z = (rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))) / math.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))
