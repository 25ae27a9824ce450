"""Physical readings of a synthesized generator.

Two realizations are covered: a pumped chi(1)/chi(3) medium, matched
against the M = 1 generator, and Raman-driven trapped-ion motion, compared
with the one-phonon generator. All quantities are dimensionless (hbar = 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import eval_genlaguerre

from .errors import UnsupportedError
from .fock import FockOperator, lower_power
from .generator import NormalForm, TargetState, build_generator

ETA_MATCH = math.sqrt(2.0)


@dataclass(frozen=True)
class SusceptibilityReport:
    """Medium requirements for generating sqrt(1-p)|0> + sqrt(p)|1>.

    ``linear_combo_xy_required`` is the value chi1_xy E + chi3_xyyy |E|^2 E
    must take and ``linear_combo_xx_required`` that of chi1_xx + chi3_xyxy |E|^2;
    the individual tensor components inside each combination stay coupled.
    The pump amplitude is taken real.
    """

    p: float
    pump_amplitude: float
    chi3_xxyy_required: float
    chi3_xxxy_required: float
    chi3_xxxx_required: float
    linear_combo_xy_required: float
    linear_combo_xx_required: float

    def __post_init__(self):
        if self.chi3_xxyy_required != 0:
            raise ValueError("chi3_xxyy must vanish: the generator has no a^dag^2 term")
        root_p = math.sqrt(self.p)
        if not (
            math.isclose(self.linear_combo_xy_required, root_p, rel_tol=1e-15)
            and math.isclose(-self.chi3_xxxy_required * self.pump_amplitude, root_p, rel_tol=1e-15)
        ):
            raise ValueError("a^dag and a^dag^2 a matching relations violated")
        kerr = -2.0 * math.sqrt(1.0 - self.p)
        if not (
            math.isclose(self.linear_combo_xx_required, kerr, rel_tol=1e-15)
            and math.isclose(-self.chi3_xxxx_required, kerr, rel_tol=1e-15)
        ):
            raise ValueError("a^dag a and a^dag^2 a^2 matching relations violated")

    def rows(self) -> list[tuple[str, float]]:
        return [
            ("p", self.p),
            ("pump_amplitude", self.pump_amplitude),
            ("chi3_xxyy_required", self.chi3_xxyy_required),
            ("chi3_xxxy_required", self.chi3_xxxy_required),
            ("chi3_xxxx_required", self.chi3_xxxx_required),
            ("linear_combo_xy_required", self.linear_combo_xy_required),
            ("linear_combo_xx_required", self.linear_combo_xx_required),
        ]


def susceptibility_requirements(p: float, pump_amplitude: float) -> SusceptibilityReport:
    """Match the M = 1 generator term by term against the pumped-medium Hamiltonian.

    a^dag:          chi1_xy E + chi3_xyyy |E|^2 E = sqrt(p)
    a^dag^2 a:      -chi3_xxxy E = sqrt(p)
    a^dag a:        chi1_xx + chi3_xyxy |E|^2 = -2 sqrt(1-p)
    a^dag^2 a^2:    -chi3_xxxx = -2 sqrt(1-p)
    a^dag^2:        chi3_xxyy = 0
    """
    if not 0.0 < p < 1.0:
        raise ValueError(f"p must lie strictly inside (0, 1), got {p}")
    if not pump_amplitude > 0.0:
        raise ValueError(f"pump amplitude must be positive, got {pump_amplitude}")
    root_p = math.sqrt(p)
    kerr = 2.0 * math.sqrt(1.0 - p)
    return SusceptibilityReport(
        p=p,
        pump_amplitude=pump_amplitude,
        chi3_xxyy_required=0.0,
        chi3_xxxy_required=-root_p / pump_amplitude,
        chi3_xxxx_required=kerr,
        linear_combo_xy_required=root_p,
        linear_combo_xx_required=-kerr,
    )


@dataclass(frozen=True)
class MixingTerm:
    p: int
    q: int
    coefficient: float
    waves: int
    chi_order: int


def mixing_requirements(nf: NormalForm) -> list[MixingTerm]:
    """Lowest-order wave-mixing process able to supply each monomial a^dag^p a^q.

    With one pump mode the photon balance needs |p - q| pump quanta, so the
    process mixes p + q + |p - q| waves and needs chi of order waves - 1.
    Constants carry no signal operator and are skipped.
    """
    out = []
    for (p, q), c in nf.terms.items():
        if p == q == 0:
            continue
        waves = p + q + abs(p - q)
        out.append(MixingTerm(p, q, c, waves, waves - 1))
    return out


# -- trapped ion ----------------------------------------------------------------


@dataclass(frozen=True)
class IonSpec:
    eta: float
    k: int
    omega: complex
    dim: int

    def __post_init__(self):
        if not self.eta > 0:
            raise ValueError(f"Lamb-Dicke parameter must be positive, got {self.eta}")
        if self.k < 1:
            raise ValueError(f"detuning index k must be >= 1, got {self.k}")
        if self.dim < 1:
            raise ValueError(f"dim must be >= 1, got {self.dim}")
        object.__setattr__(self, "omega", complex(self.omega))


def ion_f_values(eta: float, k: int, dim: int) -> np.ndarray:
    # sum_{l<=n} (-eta^2)^l n! / (l! (l+k)! (n-l)!) = n!/(n+k)! L_n^(k)(eta^2)
    n = np.arange(dim)
    ratio = np.array([1.0 / math.perm(int(m) + k, k) for m in n])
    return math.exp(-eta * eta / 2) * ratio * eval_genlaguerre(n, k, eta * eta)


def ion_f(spec: IonSpec) -> FockOperator:
    """Diagonal nonlinear function f_k(n; eta) of the driven ion."""
    return FockOperator(spec.dim, np.diag(ion_f_values(spec.eta, spec.k, spec.dim)), hermitian=True)


def _ion_lowering(spec: IonSpec) -> np.ndarray:
    f = ion_f_values(spec.eta, spec.k, spec.dim)
    return 0.5 * spec.omega * (1j * spec.eta) ** spec.k * (f[:, None] * lower_power(spec.k, spec.dim))


def ion_hamiltonian(spec: IonSpec) -> FockOperator:
    """(1/2) Omega f_k(n; eta) (i eta a)^k + h.c."""
    L = _ion_lowering(spec)
    return FockOperator(spec.dim, L + L.conj().T, hermitian=True)


def ion_lamb_dicke_approx(spec: IonSpec) -> FockOperator:
    """k = 1 Hamiltonian with f_1 cut after the linear term in a^dag a."""
    if spec.k != 1:
        raise UnsupportedError(f"the Lamb-Dicke form is only defined for k = 1, got k = {spec.k}")
    eta, dim = spec.eta, spec.dim
    g = 1.0 - (eta * eta / 2) * np.arange(dim)
    a = lower_power(1, dim)
    L = 0.5j * eta * math.exp(-eta * eta / 2) * spec.omega * (g[:, None] * a)
    return FockOperator(dim, L + L.conj().T, hermitian=True)


def lamb_dicke_error(spec: IonSpec) -> float:
    """Max-entry gap between the exact and Lamb-Dicke ion Hamiltonians, per unit eta.

    The overall eta prefactor is divided out, leaving the error of the f_1
    truncation itself, which scales as eta^4.
    """
    gap = np.abs(ion_hamiltonian(spec).entries - ion_lamb_dicke_approx(spec).entries).max()
    return float(gap) / spec.eta


@dataclass(frozen=True)
class IonComparison:
    frobenius_distance: float
    eta_match_required: float

    def rows(self) -> list[tuple[str, float]]:
        return [
            ("frobenius_distance", self.frobenius_distance),
            ("eta_match_required", self.eta_match_required),
        ]


def gauged_ion_hamiltonian(spec: IonSpec, use_lamb_dicke: bool = False) -> FockOperator:
    """Ion Hamiltonian with the phase of i^k Omega rotated away (a -> e^{i theta} a),
    leaving a real lowering part whose prefactor |Omega| eta^k / 2 is positive."""
    if spec.omega == 0:
        raise ValueError("Omega = 0 gives a vanishing Hamiltonian; nothing to compare")
    phase = np.exp(-1j * np.angle(spec.omega * 1j**spec.k))
    if use_lamb_dicke:
        L = np.triu(ion_lamb_dicke_approx(spec).entries)
    else:
        L = _ion_lowering(spec)
    L = (phase * L).real
    return FockOperator(spec.dim, L + L.T, hermitian=True)


def compare_ion_generator(spec: IonSpec, use_lamb_dicke: bool = False) -> IonComparison:
    """Frobenius distance between the unit-normalized, gauged ion Hamiltonian
    and the generator of |1>, (1 - n) a + a^dag (1 - n).

    By default the exact f_1 is used; ``use_lamb_dicke`` swaps in the
    truncated form, which coincides with the generator at eta = sqrt(2).
    """
    if spec.k != 1:
        raise UnsupportedError(f"comparison is only defined for k = 1, got k = {spec.k}")
    ion = gauged_ion_hamiltonian(spec, use_lamb_dicke).entries
    gen = build_generator(TargetState(1, (0.0, 1.0)), spec.dim).entries
    dist = np.linalg.norm(ion / np.linalg.norm(ion) - gen / np.linalg.norm(gen))
    return IonComparison(float(dist), ETA_MATCH)
