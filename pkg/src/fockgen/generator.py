"""Generating Hamiltonians H with H|0> = |psi> and H|psi> = |0>.

For a real target |psi> = sum_{n<=M} C_n |n> the generator is

    H = f0(n) + sum_{m=1}^{M} C_m / sqrt(m!) [F(n) a^m + a^dag^m F(n)],
    f0(n) = C_0 [2 (1 - n) F(n) - 1],

with F the interpolation polynomial (F(0) = 1, F(1..M) = 0). Because H
squares to the identity on span{|0>, |psi>}, exp(-iHt)|0> reaches |psi>
exactly at t = (m + 1/2) pi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

import numpy as np

from .errors import DimensionError, NormalizationError, UnsupportedError
from .fock import (
    FidelityTrace,
    FockOperator,
    StateVector,
    evolve_many,
    lower_power,
    vacuum,
)
from .interpolation import InterpolationPolynomial, interpolation_values, solve_vandermonde

NORM_TOL = 1e-12
# sqrt(n!/(n-m)!) overflows a double past this
MAX_GENERATOR_M = 64
MAX_NORMAL_FORM_M = 10


@dataclass(frozen=True)
class TargetState:
    """Real amplitudes C_0..C_M of the state to generate.

    M is declared by the caller, so trailing zero amplitudes are allowed.
    """

    M: int
    coeffs: tuple[float, ...]

    def __post_init__(self):
        if isinstance(self.M, bool) or not isinstance(self.M, (int, np.integer)) or self.M < 0:
            raise ValueError(f"M must be a nonnegative integer, got {self.M!r}")
        values = np.asarray(self.coeffs)
        if np.iscomplexobj(values):
            raise TypeError("target amplitudes must be real; complex input is not supported")
        values = values.astype(float)
        if values.shape != (self.M + 1,):
            raise ValueError(
                f"M = {self.M} needs {self.M + 1} coefficients, got {values.size}"
            )
        if not np.all(np.isfinite(values)):
            raise ValueError("target amplitudes must be finite")
        total = float(np.sum(values**2))
        if abs(total - 1.0) > NORM_TOL:
            raise NormalizationError(f"sum of C_n^2 is {total!r}, expected 1")
        object.__setattr__(self, "M", int(self.M))
        object.__setattr__(self, "coeffs", tuple(float(c) for c in values))

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[float]) -> TargetState:
        return cls(len(coeffs) - 1, tuple(coeffs))

    def state(self, dim: int) -> StateVector:
        if dim < self.M + 1:
            raise DimensionError(f"dim {dim} cannot hold level M = {self.M}")
        amps = np.zeros(dim, dtype=np.complex128)
        amps[: self.M + 1] = self.coeffs
        return StateVector(dim, amps)


def normalize(coeffs: Sequence[float]) -> TargetState:
    """Rescale real amplitudes to unit norm and wrap them as a target."""
    values = np.asarray(coeffs, dtype=float)
    norm = float(np.linalg.norm(values))
    if norm == 0.0:
        raise NormalizationError("cannot normalize the zero vector")
    return TargetState.from_coeffs(values / norm)


def min_dim(M: int) -> int:
    return 2 * M + 1


@lru_cache(maxsize=None)
def _poly(M: int) -> InterpolationPolynomial:
    return solve_vandermonde(M)


@lru_cache(maxsize=None)
def _values(M: int, dim: int) -> tuple:
    return tuple(interpolation_values(M, range(dim)))


def _f0_poly(M: int) -> list[Fraction]:
    """Coefficients of 2 (1 - n) F(n) - 1 in powers of n."""
    F = list(_poly(M).coeffs)
    out = [Fraction(0)] * (M + 2)
    for l, a in enumerate(F):
        out[l] += 2 * a
        out[l + 1] -= 2 * a
    out[0] -= 1
    return out


def interpolation_diagonal(M: int, dim: int) -> np.ndarray:
    """F(n) for n = 0..dim-1, evaluated exactly before rounding."""
    return np.array([float(v) for v in _values(M, dim)])


def f0_diagonal(C0: float, M: int, dim: int) -> np.ndarray:
    return np.array([C0 * float(2 * (1 - n) * v - 1) for n, v in enumerate(_values(M, dim))])


def generator_matrix(coeffs: Sequence[float], dim: int) -> np.ndarray:
    """Dense generator for raw amplitudes; no normalization check.

    ``build_generator`` is the validated entry point. This one exists so the
    contracts can be probed with deliberately bad inputs.
    """
    M = len(coeffs) - 1
    if M > MAX_GENERATOR_M:
        raise UnsupportedError(f"M = {M} exceeds the supported maximum {MAX_GENERATOR_M}")
    if dim < min_dim(M):
        raise DimensionError(f"dim = {dim} too small; need at least 2M+1 = {min_dim(M)}")
    F = interpolation_diagonal(M, dim)
    H = np.diag(f0_diagonal(coeffs[0], M, dim))
    for m in range(1, M + 1):
        if coeffs[m] == 0:
            continue
        block = (coeffs[m] / math.sqrt(math.factorial(m))) * (F[:, None] * lower_power(m, dim))
        H += block + block.T
    return H


def build_generator(target: TargetState, dim: int | None = None) -> FockOperator:
    if dim is None:
        dim = min_dim(target.M)
    return FockOperator(dim, generator_matrix(target.coeffs, dim), hermitian=True)


def build_projector_form(target: TargetState, f_diag, dim: int) -> FockOperator:
    """H = sum_n C_n (|0><n| + |n><0|) - C_0 sum_{k<=M} |k><k| + P F P,
    with P the projector onto levels above M and F = diag(f_diag)."""
    M = target.M
    if dim < M + 1:
        raise DimensionError(f"dim = {dim} too small; need at least M+1 = {M + 1}")
    f_diag = np.asarray(f_diag, dtype=float)
    if f_diag.shape != (dim,):
        raise DimensionError(f"f_diag has shape {f_diag.shape}, expected ({dim},)")
    C = np.asarray(target.coeffs)
    H = np.zeros((dim, dim))
    H[0, : M + 1] += C
    H[: M + 1, 0] += C
    H[np.arange(M + 1), np.arange(M + 1)] -= C[0]
    H[np.arange(M + 1, dim), np.arange(M + 1, dim)] += f_diag[M + 1 :]
    return FockOperator(dim, H, hermitian=True)


def generation_residuals(h: FockOperator, target: TargetState) -> tuple[float, float]:
    """(||H|0> - |psi>||, ||H|psi> - |0>||)."""
    psi = target.state(h.dim).amplitudes
    vac = vacuum(h.dim).amplitudes
    return (
        float(np.linalg.norm(h.entries @ vac - psi)),
        float(np.linalg.norm(h.entries @ psi - vac)),
    )


# -- normal ordering ---------------------------------------------------------


@lru_cache(maxsize=None)
def stirling2(l: int, k: int) -> int:
    """Stirling numbers of the second kind."""
    if l == k:
        return 1
    if k == 0 or k > l:
        return 0
    return k * stirling2(l - 1, k) + stirling2(l - 1, k - 1)


def _normal_order_diagonal(poly):
    # (a^dag a)^l = sum_k S(l, k) a^dag^k a^k
    out: dict[int, object] = {}
    for l, c in enumerate(poly):
        for k in range(l + 1):
            s = stirling2(l, k)
            if s:
                out[k] = out.get(k, 0) + c * s
    return out


@dataclass(frozen=True)
class NormalForm:
    """sum over (p, q) of coefficient * a^dag^p a^q."""

    terms: Mapping[tuple[int, int], float] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (p, q), c in self.terms.items():
            if p < 0 or q < 0:
                raise ValueError(f"negative exponent in term {(p, q)}")
            if c != 0:
                clean[(int(p), int(q))] = float(c)
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    def coefficient(self, p: int, q: int) -> float:
        return self.terms.get((p, q), 0.0)

    def is_symmetric(self) -> bool:
        return all(self.coefficient(q, p) == c for (p, q), c in self.terms.items())

    def max_order(self) -> int:
        return max((p + q for p, q in self.terms), default=0)

    def to_matrix(self, dim: int) -> FockOperator:
        """Dense matrix of the expansion on ``dim`` levels.

        Monomial entries <n-q+p| a^dag^p a^q |n> = sqrt(n!/(n-q)! * (n-q+p)!/(n-q)!)
        use a single square root of an exact integer.
        """
        parts: dict[tuple[int, int], list[float]] = {}
        for (p, q), c in self.terms.items():
            for n in range(q, dim):
                j = n - q + p
                if j >= dim:
                    break
                parts.setdefault((j, n), []).append(c * math.sqrt(math.perm(n, q) * math.perm(j, p)))
        H = np.zeros((dim, dim))
        # alternating sums cancel heavily on high levels
        for (j, n), values in parts.items():
            H[j, n] = math.fsum(values)
        return FockOperator(dim, H, hermitian=self.is_symmetric())


def normal_order_number_poly(poly: Sequence[float]) -> NormalForm:
    """Normal-order sum_l poly[l] (a^dag a)^l into diagonal monomials."""
    if len(poly) - 1 > 20:
        raise UnsupportedError(f"degree {len(poly) - 1} exceeds 20")
    return NormalForm({(k, k): c for k, c in _normal_order_diagonal(poly).items()})


def normal_form_of_generator(target: TargetState) -> NormalForm:
    M = target.M
    if M > MAX_NORMAL_FORM_M:
        raise UnsupportedError(f"normal form supported for M <= {MAX_NORMAL_FORM_M}, got {M}")
    C = target.coeffs
    terms: dict[tuple[int, int], float] = {}
    if C[0] != 0:
        for k, d in _normal_order_diagonal(_f0_poly(M)).items():
            terms[(k, k)] = C[0] * float(d)
    # F(n) a^m = sum_k c_k a^dag^k a^(k+m)
    F_terms = _normal_order_diagonal(_poly(M).coeffs)
    for m in range(1, M + 1):
        if C[m] == 0:
            continue
        scale = C[m] / math.sqrt(math.factorial(m))
        for k, c in F_terms.items():
            value = scale * float(c)
            terms[(k, k + m)] = terms.get((k, k + m), 0.0) + value
            terms[(k + m, k)] = terms.get((k + m, k), 0.0) + value
    return NormalForm(terms)


# -- dynamics ----------------------------------------------------------------


def fidelity_trace(target: TargetState, dim: int, t_max: float, steps: int) -> FidelityTrace:
    """|<psi| exp(-iHt) |0>|^2 on a uniform grid over [0, t_max]."""
    if steps < 2:
        raise ValueError(f"steps must be >= 2, got {steps}")
    h = build_generator(target, dim)
    times = np.linspace(0.0, t_max, steps)
    states = evolve_many(h, times, vacuum(dim))
    overlaps = states @ target.state(dim).amplitudes.conj()
    return FidelityTrace(times, np.clip(np.abs(overlaps) ** 2, 0.0, 1.0))


def analytic_fidelity(target: TargetState, times) -> np.ndarray:
    """sin^2 t + C_0^2 cos^2 t, the closed form implied by H^2 = 1 on span{|0>, |psi>}."""
    t = np.asarray(times, dtype=float)
    return np.sin(t) ** 2 + target.coeffs[0] ** 2 * np.cos(t) ** 2
