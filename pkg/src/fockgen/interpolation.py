"""Exact coefficients of the interpolation polynomial F(n) = sum_l A_l n^l.

F is fixed by F(0) = 1 and F(k) = 0 for k = 1..M. Two independent routes
are provided: Gaussian elimination on the Vandermonde system and the
expansion of prod_k (1 - n/k). They must agree exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import UnsupportedError

MAX_DEGREE = 20


@dataclass(frozen=True)
class InterpolationPolynomial:
    M: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        if len(self.coeffs) != self.M + 1:
            raise ValueError(f"expected {self.M + 1} coefficients, got {len(self.coeffs)}")

    def __call__(self, n: int) -> Fraction:
        return eval_poly(self, n)


def _check_degree(M: int) -> None:
    if M < 0:
        raise UnsupportedError(f"M must be nonnegative, got {M}")
    if M > MAX_DEGREE:
        raise UnsupportedError(f"M = {M} exceeds the supported maximum {MAX_DEGREE}")


def solve_vandermonde(M: int) -> InterpolationPolynomial:
    """Solve 1 + sum_{l>=1} A_l k^l = 0, k = 1..M, with A_0 = 1.

    Plain Gauss-Jordan elimination over the rationals.
    """
    _check_degree(M)
    if M == 0:
        return InterpolationPolynomial(0, (Fraction(1),))
    # row k-1: [k, k^2, ..., k^M | -1]
    rows = [[Fraction(k) ** l for l in range(1, M + 1)] + [Fraction(-1)] for k in range(1, M + 1)]
    for col in range(M):
        pivot = next(r for r in range(col, M) if rows[r][col] != 0)
        rows[col], rows[pivot] = rows[pivot], rows[col]
        lead = rows[col][col]
        rows[col] = [x / lead for x in rows[col]]
        for r in range(M):
            if r != col and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
    return InterpolationPolynomial(M, (Fraction(1),) + tuple(row[M] for row in rows))


def product_form(M: int) -> InterpolationPolynomial:
    """Monomial coefficients of prod_{k=1}^{M} (1 - n/k)."""
    _check_degree(M)
    coeffs = [Fraction(1)]
    for k in range(1, M + 1):
        factor = Fraction(-1, k)
        coeffs = [a + factor * b for a, b in zip(coeffs + [0], [0] + coeffs)]
    return InterpolationPolynomial(M, tuple(coeffs))


def eval_poly(p: InterpolationPolynomial, n: int) -> Fraction:
    total = Fraction(0)
    for c in reversed(p.coeffs):
        total = total * n + c
    return total


def product_value(M: int, n: int) -> Fraction:
    """F(n) = prod_{k=1}^{M} (1 - n/k) at a single point, for any M >= 0.

    No coefficient expansion is involved, so the degree cap does not apply.
    """
    if M < 0:
        raise UnsupportedError(f"M must be nonnegative, got {M}")
    value = Fraction(1)
    for k in range(1, M + 1):
        value *= Fraction(k - n, k)
    return value


def interpolation_values(M: int, points) -> list[Fraction]:
    """Exact F(n) at each point: from the solved system up to the degree cap,
    from the product beyond it."""
    if M <= MAX_DEGREE:
        p = solve_vandermonde(M)
        return [eval_poly(p, n) for n in points]
    return [product_value(M, n) for n in points]
