"""Exit criteria, one test each. A PASS/FAIL line per criterion is printed
in the terminal summary."""

import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest

from conftest import ACCEPTANCE_RESULTS, random_targets
from fockgen import cli
from fockgen.families import BinomialSpec, binomial_target, coherent_limit_fidelity, kilin_horoshko_generator
from fockgen.fock import apply, ladder_matrix, number_state, vacuum
from fockgen.generator import (
    TargetState,
    analytic_fidelity,
    build_generator,
    build_projector_form,
    fidelity_trace,
    generation_residuals,
    generator_matrix,
    normal_form_of_generator,
    normal_order_number_poly,
)
from fockgen.interpolation import product_form, solve_vandermonde
from fockgen.physical import (
    IonSpec,
    compare_ion_generator,
    ion_f,
    lamb_dicke_error,
    susceptibility_requirements,
)

# oracle run (mpmath, 40 digits): binomial(40, 1/40) vs Poisson(1) overlap = 0.99991883937545318
COHERENT_THRESHOLD_M40 = 0.9999


def record(name, checks):
    """checks: list of (ok, description). Records and asserts all of them."""
    failed = [d for ok, d in checks if not ok]
    detail = "; ".join(d if ok else f"FAILED {d}" for ok, d in checks)
    ACCEPTANCE_RESULTS[name] = (not failed, detail)
    assert not failed, "; ".join(failed)


def test_01_interpolation_coefficients():
    checks = [
        (solve_vandermonde(1).coeffs[1] == -1, "M=1 A_1 = -1"),
        (solve_vandermonde(2).coeffs[1:] == (Fraction(-3, 2), Fraction(1, 2)), "M=2 A = (-3/2, 1/2)"),
    ]
    same = [M for M in range(1, 21) if solve_vandermonde(M) != product_form(M)]
    checks.append((not same, f"Vandermonde == product form for M=1..20 (mismatch: {same})"))
    lead = [M for M in range(1, 21) if solve_vandermonde(M).coeffs[M] != Fraction((-1) ** M, math.factorial(M))]
    checks.append((not lead, f"A_M = (-1)^M/M! for M=1..20 (mismatch: {lead})"))
    record("1. interpolation coefficients", checks)


def test_02_generation_contracts():
    targets = random_targets(200, max_M=8, seed=2024)
    worst_a = worst_b = 0.0
    for t in targets:
        a, b = generation_residuals(build_generator(t, 2 * t.M + 4), t)
        worst_a, worst_b = max(worst_a, a), max(worst_b, b)
    coeffs = [0.6, 0.8, 0.5]
    H = generator_matrix(coeffs, 8)
    psi = np.array(coeffs + [0.0] * 5)
    neg = float(np.linalg.norm(H @ psi - np.eye(8)[0]))
    record(
        "2. generation contracts",
        [
            (worst_a <= 1e-10, f"max |H|0>-|psi>| = {worst_a:.2e} <= 1e-10 over 200 targets"),
            (worst_b <= 1e-10, f"max |H|psi>-|0>| = {worst_b:.2e} <= 1e-10"),
            (neg > 1e-10, f"unnormalized target breaks contract B (residual {neg:.3f})"),
        ],
    )


def test_03_interaction_times():
    targets = random_targets(20, max_M=8, seed=33) + [TargetState(1, (0.6, 0.8))]
    worst_tm = worst_grid = 0.0
    for t in targets:
        # grid of 256 points on [0, 5pi/2] contains pi/2, 3pi/2 and 5pi/2
        tr = fidelity_trace(t, 2 * t.M + 4, 2.5 * np.pi, 256)
        idx = [51, 153, 255]
        assert np.allclose(tr.times[idx], [(m + 0.5) * np.pi for m in range(3)], rtol=0, atol=1e-14)
        worst_tm = max(worst_tm, float(np.abs(tr.fidelities[idx] - 1).max()))
        worst_grid = max(worst_grid, float(np.abs(tr.fidelities - analytic_fidelity(t, tr.times)).max()))
    record(
        "3. interaction times",
        [
            (worst_tm <= 1e-9, f"max |F(t_m) - 1| = {worst_tm:.2e} <= 1e-9 (m=0,1,2)"),
            (worst_grid <= 1e-9, f"max |F - (sin^2 + C0^2 cos^2)| = {worst_grid:.2e} <= 1e-9 on 256 points"),
        ],
    )


def test_04_regression_fixtures():
    dim = 10
    a = ladder_matrix("lower", dim).entries.real
    ad, one = a.T, np.eye(dim)
    n = ad @ a
    checks = []
    for p in (0.25, 0.5, 0.75):
        hand = math.sqrt(1 - p) * (one - 4 * n + 2 * n @ n) + math.sqrt(p) * ((one - n) @ a + ad @ (one - n))
        got = build_generator(TargetState(1, (math.sqrt(1 - p), math.sqrt(p))), dim).entries
        err = float(np.abs(got - hand).max())
        checks.append((err <= 1e-12, f"one-photon fixture p={p}: {err:.1e}"))
    F = one - 1.5 * n + 0.5 * n @ n
    for c0 in (0.6, 1 / math.sqrt(2), 0.2):
        c2 = math.sqrt(1 - c0 * c0)
        hand = c0 * (one - 5 * n + 4 * n @ n - n @ n @ n) + c2 / math.sqrt(2) * (F @ a @ a + ad @ ad @ F)
        got = build_generator(TargetState(2, (c0, 0.0, c2)), dim).entries
        err = float(np.abs(got - hand).max())
        checks.append((err <= 1e-12, f"vacuum+two-photon fixture C0={c0:.3f}: {err:.1e}"))
    record("4. regression fixtures", checks)


def test_05_projector_form_oracle():
    rng = np.random.default_rng(55)
    worst = 0.0
    for t in random_targets(100, max_M=8, seed=5):
        dim = 2 * t.M + 4
        f_diag = rng.normal(scale=100, size=dim)
        g = build_generator(t, dim).entries
        p = build_projector_form(t, f_diag, dim).entries
        k = t.M + 1
        worst = max(worst, float(np.abs(g[:k, :k] - p[:k, :k]).max()))
    record("5. projector-form oracle", [(worst <= 1e-12, f"max block gap {worst:.1e} <= 1e-12 over 100 targets")])


def test_06_limits():
    checks = []
    for M in range(1, 9):
        dim = 2 * M + 1
        full = build_generator(binomial_target(BinomialSpec(1.0, M)), dim)
        kh = kilin_horoshko_generator(M, dim)
        e_full = float(np.linalg.norm(apply(full, vacuum(dim)).amplitudes - number_state(M, dim).amplitudes))
        e_kh = float(np.linalg.norm(apply(kh, vacuum(dim)).amplitudes - number_state(M, dim).amplitudes))
        differs = float(np.abs(full.entries - kh.entries).max())
        checks.append((e_full <= 1e-10 and e_kh <= 1e-10, f"M={M}: |0>->|M> ({e_full:.0e}, {e_kh:.0e})"))
        if M >= 2:
            checks.append((differs > 0, f"M={M}: linear-F generator differs by {differs:.2f}"))
    fids = [coherent_limit_fidelity(1.0, M) for M in (5, 10, 20, 40)]
    checks.append((all(x < y for x, y in zip(fids, fids[1:])), "coherent fidelity increasing over M=5,10,20,40"))
    checks.append((fids[-1] > COHERENT_THRESHOLD_M40, f"M=40 fidelity {fids[-1]:.10f} > {COHERENT_THRESHOLD_M40}"))
    record("6. limits", checks)


def test_07_normal_ordering():
    worst = worst_rel = 0.0
    worst_M = None
    for t in random_targets(60, max_M=6, seed=77):
        dim = 2 * t.M + 4
        want = build_generator(t, dim).entries
        gap = np.abs(normal_form_of_generator(t).to_matrix(dim).entries - want)
        err = float(gap.max())
        worst_rel = max(worst_rel, float((gap / np.maximum(1.0, np.abs(want))).max()))
        if err > worst:
            worst, worst_M = err, t.M
    dim = 8
    a = ladder_matrix("lower", dim).entries.real
    n = a.T @ a
    sq = float(np.abs(n @ n - (a.T @ a.T @ a @ a + n)).max())
    nf = normal_order_number_poly([0, 0, 1])
    record(
        "7. normal ordering",
        [
            (worst <= 1e-12, f"reconstruction max gap {worst:.1e} (at M={worst_M}) <= 1e-12, M <= 6"),
            # not a criterion; the absolute gap tracks entry magnitude (up to ~3e4 at M = 6)
            (worst_rel <= 1e-12, f"scale-relative gap {worst_rel:.1e}"),
            (sq <= 1e-12 and nf.terms == {(1, 1): 1.0, (2, 2): 1.0}, "n^2 -> a+^2 a^2 + a+ a by matrix oracle"),
        ],
    )


def test_08_susceptibility_relations():
    bad = []
    for p in [i / 10 for i in range(1, 10)]:
        for E in (0.5, 1.0, 2.0):
            r = susceptibility_requirements(p, E)
            ok = (
                -r.chi3_xxxy_required * E == math.sqrt(p)
                and -r.chi3_xxxx_required == -2 * math.sqrt(1 - p)
                and r.chi3_xxyy_required == 0
            )
            if not ok:
                bad.append((p, E))
    record("8. susceptibility relations", [(not bad, f"exact on 9x3 grid (failures: {bad})")])


def _f_sum(eta, k, n):
    eta = mpmath.mpf(eta)
    s = mpmath.fsum(
        (-(eta**2)) ** l / (mpmath.factorial(l) * mpmath.factorial(l + k)) * mpmath.factorial(n) / mpmath.factorial(n - l)
        for l in range(n + 1)
    )
    return float(mpmath.exp(-(eta**2) / 2) * s)


def test_09_ion_module():
    dim = 16
    worst = 0.0
    for eta in (0.1, 0.2, 0.5, 1.0):
        for k in (1, 2, 3):
            got = np.diag(ion_f(IonSpec(eta, k, 1.0, dim)).entries).real
            want = np.array([_f_sum(eta, k, n) for n in range(dim)])
            worst = max(worst, float(np.abs(got - want).max()))
    ratio = lamb_dicke_error(IonSpec(0.2, 1, 1.0, 12)) / lamb_dicke_error(IonSpec(0.1, 1, 1.0, 12))
    eta_match = compare_ion_generator(IonSpec(0.1, 1, 1.0, 12)).eta_match_required
    record(
        "9. ion module",
        [
            (worst <= 1e-13, f"f_k matches finite sum on all {dim} levels (max gap {worst:.1e})"),
            (12 <= ratio <= 20, f"Lamb-Dicke error ratio eta=0.2/0.1 = {ratio:.2f} in [12, 20]"),
            (abs(eta_match - math.sqrt(2)) <= 1e-12, f"eta_match_required = {eta_match!r}"),
        ],
    )


def _cli_bytes(tmp_path, name, *argv):
    out = tmp_path / name
    code = cli.main([*argv, "--output", str(out)])
    return code, out.read_bytes()


def test_10_cli_determinism_and_round_trip(tmp_path):
    checks = []
    runs = {
        "coeffs": ["coeffs", "--M", "5"],
        "binomial": ["binomial", "--p", "0.3", "--M", "4"],
        "susceptibility": ["susceptibility", "--p", "0.3", "--pump", "1.5"],
        "ion-compare": ["ion-compare", "--eta", "0.2", "--k", "1", "--dim", "10"],
    }
    for label, argv in runs.items():
        first = _cli_bytes(tmp_path, f"{label}1", *argv)
        second = _cli_bytes(tmp_path, f"{label}2", *argv)
        checks.append((first == second and first[0] == 0, f"{label} byte-identical"))
    target = tmp_path / "binomial1"
    for label, argv in {
        "synthesize": ["synthesize", "--target", str(target)],
        "normal-form": ["normal-form", "--target", str(target)],
        "evolve": ["evolve", "--target", str(target), "--t-max", "3.0", "--steps", "16"],
    }.items():
        first = _cli_bytes(tmp_path, f"{label}1", *argv)
        second = _cli_bytes(tmp_path, f"{label}2", *argv)
        checks.append((first[0] == 0 and first == second, f"binomial -> {label} succeeds, byte-identical"))
    record("10. CLI determinism and round trip", checks)
