"""Named target families and the number-state / coherent-state limits."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, TruncationError, UnsupportedError
from .fock import FockOperator, StateVector, apply, fidelity, lower_power, vacuum
from .generator import TargetState, build_generator, min_dim

COHERENT_TOL = 1e-10


@dataclass(frozen=True)
class BinomialSpec:
    p: float
    M: int

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p must lie in [0, 1], got {self.p}")
        if self.M < 1:
            raise ValueError(f"M must be >= 1, got {self.M}")


def binomial_target(spec: BinomialSpec) -> TargetState:
    """C_n = sqrt(binom(M, n) p^n (1-p)^(M-n)), with 0^0 = 1 at the endpoints."""
    p, M = spec.p, spec.M
    # python evaluates 0.0 ** 0 as 1.0, which is the convention needed here
    probs = [math.comb(M, n) * p**n * (1.0 - p) ** (M - n) for n in range(M + 1)]
    return TargetState(M, tuple(math.sqrt(w) for w in probs))


def coherent_amplitudes(alpha: float, dim: int) -> np.ndarray:
    """Untruncated-normalization amplitudes e^{-a^2/2} a^n / sqrt(n!)."""
    amps = np.empty(dim)
    amps[0] = math.exp(-alpha * alpha / 2)
    for n in range(1, dim):
        amps[n] = amps[n - 1] * alpha / math.sqrt(n)
    return amps


def coherent_cutoff(alpha: float, tol: float = COHERENT_TOL) -> int:
    """A dim whose truncated coherent state keeps weight >= 1 - tol.

    One level beyond the smallest such dim, so round-off in the weight
    cannot push the reference over the tolerance.
    """
    dim, weight, term = 1, math.exp(-alpha * alpha), math.exp(-alpha * alpha)
    while 1.0 - weight >= tol:
        term *= alpha * alpha / dim
        weight += term
        dim += 1
    return dim + 1


def coherent_reference(alpha: float, dim: int) -> StateVector:
    amps = coherent_amplitudes(alpha, dim)
    weight = float(amps @ amps)
    deficit = 1.0 - weight
    if deficit >= COHERENT_TOL:
        raise TruncationError(
            f"coherent state alpha={alpha} loses weight {deficit:.3e} at dim={dim}"
            f" (need dim >= {coherent_cutoff(alpha)})"
        )
    return StateVector(dim, amps / math.sqrt(weight))


def coherent_limit_fidelity(alpha: float, M: int, dim: int | None = None) -> float:
    """Fidelity of H|0> for the binomial target with p = alpha^2/M against |alpha>.

    The comparison runs on max(dim, coherent cutoff) levels so the Poisson
    tail is never silently dropped.
    """
    if alpha * alpha > M:
        raise UnsupportedError(f"alpha^2 = {alpha * alpha} exceeds M = {M}; p would exceed 1")
    if dim is None:
        dim = min_dim(M)
    if dim < min_dim(M):
        raise DimensionError(f"dim = {dim} too small; need at least 2M+1 = {min_dim(M)}")
    target = binomial_target(BinomialSpec(alpha * alpha / M, M))
    generated = apply(build_generator(target, dim), vacuum(dim))
    work = max(dim, coherent_cutoff(abs(alpha)))
    return fidelity(generated.padded(work), coherent_reference(alpha, work))


def kilin_horoshko_generator(M: int, dim: int) -> FockOperator:
    """(1/sqrt(M!)) [F a^M + a^dag^M F] with the linear F = 1 - n/M."""
    if M < 1:
        raise ValueError(f"M must be >= 1, got {M}")
    if dim < min_dim(M):
        raise DimensionError(f"dim = {dim} too small; need at least 2M+1 = {min_dim(M)}")
    F = 1.0 - np.arange(dim) / M
    block = (F[:, None] * lower_power(M, dim)) / math.sqrt(math.factorial(M))
    return FockOperator(dim, block + block.T, hermitian=True)
