"""Truncated single-mode Fock space: states, ladder operators, evolution.

Everything is dense and works in hbar = 1 units. Level ``n`` of a space of
dimension ``dim`` is the number state |n>, n = 0 .. dim-1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import DimensionError, HermiticityError, NormalizationError

HERMITIAN_TOL = 1e-12
NORM_TOL = 1e-12

LadderKind = Literal["lower", "raise", "number"]


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array, dtype=np.complex128)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class StateVector:
    """Complex amplitudes over |0> .. |dim-1>."""

    dim: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if self.dim < 1:
            raise DimensionError(f"dimension must be >= 1, got {self.dim}")
        amps = _frozen(self.amplitudes)
        if amps.shape != (self.dim,):
            raise DimensionError(
                f"amplitudes have shape {amps.shape}, expected ({self.dim},)"
            )
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def from_amplitudes(cls, amplitudes) -> StateVector:
        amps = np.asarray(amplitudes, dtype=np.complex128)
        return cls(amps.size, amps)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def is_normalized(self, tol: float = NORM_TOL) -> bool:
        return abs(float(np.vdot(self.amplitudes, self.amplitudes).real) - 1.0) <= tol

    def padded(self, dim: int) -> StateVector:
        """Embed into a larger truncation (zeros above the old top level)."""
        if dim < self.dim:
            raise DimensionError(f"cannot pad dimension {self.dim} down to {dim}")
        amps = np.zeros(dim, dtype=np.complex128)
        amps[: self.dim] = self.amplitudes
        return StateVector(dim, amps)


@dataclass(frozen=True, eq=False)
class FockOperator:
    """Dense operator on a truncated Fock space.

    When ``hermitian`` is set the matrix is checked against its conjugate
    transpose on construction.
    """

    dim: int
    entries: np.ndarray
    hermitian: bool = False

    def __post_init__(self):
        if self.dim < 1:
            raise DimensionError(f"dimension must be >= 1, got {self.dim}")
        entries = _frozen(self.entries)
        if entries.shape != (self.dim, self.dim):
            raise DimensionError(
                f"entries have shape {entries.shape}, expected ({self.dim}, {self.dim})"
            )
        if self.hermitian:
            asym = hermitian_defect(entries)
            if asym > HERMITIAN_TOL:
                raise HermiticityError(
                    f"operator flagged hermitian but max|H - H^dagger| = {asym:.3e}"
                )
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_matrix(cls, matrix, hermitian: bool = False) -> FockOperator:
        matrix = np.asarray(matrix, dtype=np.complex128)
        return cls(matrix.shape[0], matrix, hermitian)

    def dagger(self) -> FockOperator:
        return FockOperator(self.dim, self.entries.conj().T, self.hermitian)

    def __matmul__(self, other: FockOperator) -> FockOperator:
        _check_dims(self.dim, other.dim)
        return FockOperator(self.dim, self.entries @ other.entries)

    def element(self, j: int, k: int) -> complex:
        """Matrix element <j|op|k>."""
        return complex(self.entries[j, k])


def hermitian_defect(matrix: np.ndarray) -> float:
    """max |A - A^dagger| over all entries."""
    if matrix.size == 0:
        return 0.0
    return float(np.max(np.abs(matrix - matrix.conj().T)))


def _check_dims(a: int, b: int) -> None:
    if a != b:
        raise DimensionError(f"dimension mismatch: {a} != {b}")


def number_state(n: int, dim: int) -> StateVector:
    if not 0 <= n < dim:
        raise DimensionError(f"level {n} not representable with dim {dim}")
    amps = np.zeros(dim, dtype=np.complex128)
    amps[n] = 1.0
    return StateVector(dim, amps)


def vacuum(dim: int) -> StateVector:
    return number_state(0, dim)


def ladder_matrix(kind: LadderKind, dim: int) -> FockOperator:
    """Matrix of a, a^dagger or a^dagger a truncated to ``dim`` levels.

    >>> ladder_matrix("lower", 2).entries.real
    array([[0., 1.],
           [0., 0.]])
    """
    if dim < 1:
        raise DimensionError(f"dimension must be >= 1, got {dim}")
    if kind == "lower":
        return FockOperator(dim, np.diag(np.sqrt(np.arange(1, dim, dtype=float)), 1))
    if kind == "raise":
        return FockOperator(dim, np.diag(np.sqrt(np.arange(1, dim, dtype=float)), -1))
    if kind == "number":
        return FockOperator(dim, np.diag(np.arange(dim, dtype=float)), hermitian=True)
    raise ValueError(f"unknown ladder kind {kind!r}")


def identity(dim: int) -> FockOperator:
    return FockOperator(dim, np.eye(dim), hermitian=True)


def diagonal(values, hermitian: bool | None = None) -> FockOperator:
    """Operator diag(values); Hermitian iff the values are real (unless forced)."""
    values = np.asarray(values, dtype=np.complex128)
    if hermitian is None:
        hermitian = bool(np.all(values.imag == 0))
    return FockOperator(values.size, np.diag(values), hermitian)


def lower_power(m: int, dim: int) -> np.ndarray:
    """a^m as a dense array; entries <n-m|a^m|n> = sqrt(n!/(n-m)!) are exact
    on the truncated space because a only moves downwards."""
    out = np.zeros((dim, dim))
    for n in range(m, dim):
        out[n - m, n] = math.sqrt(math.perm(n, m))
    return out


def apply(op: FockOperator, s: StateVector) -> StateVector:
    """Matrix-vector product. The result is not renormalized."""
    _check_dims(op.dim, s.dim)
    return StateVector(s.dim, op.entries @ s.amplitudes)


def _eigh(h: FockOperator):
    if not h.hermitian:
        raise HermiticityError("time evolution needs an operator flagged hermitian")
    return np.linalg.eigh(h.entries)


def evolve(h: FockOperator, t: float, s: StateVector) -> StateVector:
    """exp(-i h t) s via the eigendecomposition of h."""
    _check_dims(h.dim, s.dim)
    w, v = _eigh(h)
    return StateVector(s.dim, v @ (np.exp(-1j * w * t) * (v.conj().T @ s.amplitudes)))


def evolve_many(h: FockOperator, times, s: StateVector) -> np.ndarray:
    """Rows are exp(-i h t) s for each t in ``times`` (one diagonalization)."""
    _check_dims(h.dim, s.dim)
    w, v = _eigh(h)
    coeffs = v.conj().T @ s.amplitudes
    phases = np.exp(-1j * np.outer(np.asarray(times, dtype=float), w))
    return (phases * coeffs) @ v.T


def fidelity(a: StateVector, b: StateVector, tol: float = 1e-10) -> float:
    """|<a|b>|^2 for normalized states, clipped to [0, 1]."""
    _check_dims(a.dim, b.dim)
    for name, s in (("first", a), ("second", b)):
        if not s.is_normalized(tol):
            raise NormalizationError(f"{name} state has squared norm {s.norm ** 2!r}")
    return float(np.clip(abs(np.vdot(a.amplitudes, b.amplitudes)) ** 2, 0.0, 1.0))


@dataclass(frozen=True, eq=False)
class FidelityTrace:
    times: np.ndarray
    fidelities: np.ndarray

    def __post_init__(self):
        times = np.array(self.times, dtype=float)
        fids = np.array(self.fidelities, dtype=float)
        if times.shape != fids.shape:
            raise DimensionError("times and fidelities differ in length")
        if fids.size and (fids.min() < -1e-12 or fids.max() > 1 + 1e-12):
            raise ValueError("fidelities outside [0, 1]")
        times.setflags(write=False)
        fids.setflags(write=False)
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "fidelities", fids)

    def __len__(self) -> int:
        return self.times.size
