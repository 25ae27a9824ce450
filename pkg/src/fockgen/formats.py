"""Text formats: matrix/state/normal-form CSV, target JSON, exact coefficient CSV.

Floats are written with 17 significant digits so files round-trip exactly
and reruns are byte-identical.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .errors import FockgenError, NormalizationError
from .fock import FockOperator, StateVector
from .generator import NORM_TOL, NormalForm, TargetState
from .interpolation import InterpolationPolynomial


class TargetFileError(FockgenError):
    """Malformed or invalid target document."""


def fmt(x: float) -> str:
    # + 0.0 folds negative zero
    return f"{float(x) + 0.0:.17g}"


def matrix_csv(op: FockOperator) -> str:
    lines = ["i,j,re,im"]
    for i, j in zip(*np.nonzero(op.entries)):
        z = op.entries[i, j]
        lines.append(f"{i},{j},{fmt(z.real)},{fmt(z.imag)}")
    return "\n".join(lines) + "\n"


def read_matrix_csv(text: str, dim: int, hermitian: bool = False) -> FockOperator:
    rows = text.strip().splitlines()
    if rows[0] != "i,j,re,im":
        raise ValueError(f"unexpected matrix header {rows[0]!r}")
    entries = np.zeros((dim, dim), dtype=np.complex128)
    for row in rows[1:]:
        i, j, re, im = row.split(",")
        entries[int(i), int(j)] = complex(float(re), float(im))
    return FockOperator(dim, entries, hermitian)


def state_csv(s: StateVector) -> str:
    lines = ["n,re,im"]
    lines += [f"{n},{fmt(z.real)},{fmt(z.imag)}" for n, z in enumerate(s.amplitudes)]
    return "\n".join(lines) + "\n"


def read_state_csv(text: str) -> StateVector:
    rows = text.strip().splitlines()
    if rows[0] != "n,re,im":
        raise ValueError(f"unexpected state header {rows[0]!r}")
    amps = []
    for expected, row in enumerate(rows[1:]):
        n, re, im = row.split(",")
        if int(n) != expected:
            raise ValueError(f"state rows out of order at n={n}")
        amps.append(complex(float(re), float(im)))
    return StateVector.from_amplitudes(amps)


def normal_form_csv(nf: NormalForm) -> str:
    lines = ["p,q,coefficient"]
    lines += [f"{p},{q},{fmt(c)}" for (p, q), c in nf.terms.items()]
    return "\n".join(lines) + "\n"


def coeffs_csv(poly: InterpolationPolynomial) -> str:
    lines = ["l,numerator,denominator"]
    lines += [f"{l},{a.numerator},{a.denominator}" for l, a in enumerate(poly.coeffs)]
    return "\n".join(lines) + "\n"


def labeled_csv(rows) -> str:
    return "".join(f"{name},{fmt(value)}\n" for name, value in rows)


def target_json(target: TargetState) -> str:
    coeffs = ", ".join(fmt(c) for c in target.coeffs)
    return f'{{"M": {target.M}, "coeffs": [{coeffs}]}}\n'


def parse_target(doc) -> TargetState:
    """Validate a decoded target document, naming the offending field."""
    if not isinstance(doc, dict):
        raise TargetFileError("target document must be a JSON object with fields M and coeffs")
    unknown = set(doc) - {"M", "coeffs"}
    if unknown:
        raise TargetFileError(f"unknown field(s): {', '.join(sorted(unknown))}")
    if "M" not in doc:
        raise TargetFileError("missing field M")
    if "coeffs" not in doc:
        raise TargetFileError("missing field coeffs")
    M, coeffs = doc["M"], doc["coeffs"]
    if isinstance(M, bool) or not isinstance(M, int) or M < 0:
        raise TargetFileError(f"field M must be a nonnegative integer, got {M!r}")
    if not isinstance(coeffs, list) or not all(
        isinstance(c, (int, float)) and not isinstance(c, bool) for c in coeffs
    ):
        raise TargetFileError("field coeffs must be a list of real numbers")
    if len(coeffs) != M + 1:
        raise TargetFileError(
            f"field coeffs has length {len(coeffs)} but M = {M} requires {M + 1}"
        )
    if not all(math.isfinite(c) for c in coeffs):
        raise TargetFileError("field coeffs contains a non-finite value")
    total = math.fsum(c * c for c in coeffs)
    if abs(total - 1.0) > NORM_TOL:
        raise TargetFileError(f"field coeffs is not normalized: sum of C_n^2 = {total!r}")
    try:
        return TargetState(M, tuple(float(c) for c in coeffs))
    except NormalizationError as exc:
        raise TargetFileError(f"field coeffs: {exc}") from exc


def validate_target_file(path) -> TargetState:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise TargetFileError(f"cannot read target file {path}: {exc.strerror}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TargetFileError(f"target file {path} is not valid JSON: {exc.msg}") from exc
    return parse_target(doc)
