"""Batch command line front end.

Exit codes: 0 success, 1 invalid input, 2 numerical-contract failure
(for example a truncation too small for the requested target).
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .errors import DimensionError, FockgenError, TruncationError
from .families import BinomialSpec, binomial_target
from .formats import (
    coeffs_csv,
    fmt,
    labeled_csv,
    matrix_csv,
    normal_form_csv,
    target_json,
    validate_target_file,
)
from .generator import build_generator, fidelity_trace, generation_residuals, normal_form_of_generator
from .interpolation import solve_vandermonde
from .physical import IonSpec, compare_ion_generator, susceptibility_requirements

log = logging.getLogger(__name__)

EXIT_OK, EXIT_INVALID, EXIT_CONTRACT = 0, 1, 2
CONTRACT_TOL = 1e-10
DIM_HEADROOM = 8

COMMANDS = ("coeffs", "synthesize", "evolve", "binomial", "normal-form", "susceptibility", "ion-compare")


class UsageError(Exception):
    pass


class ContractError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class RunConfig:
    command: str
    parameters: dict = field(default_factory=dict)
    output_path: Path | None = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fockgen", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--output", type=Path, default=None, help="write here instead of stdout")
        return p

    p = command("coeffs", "exact interpolation coefficients A_l")
    p.add_argument("--M", type=_nonneg_int, required=True)

    p = command("synthesize", "generator matrix for a target file")
    p.add_argument("--target", type=Path, required=True)
    p.add_argument("--dim", type=_positive_int, default=None, help="default 2M+8")

    p = command("evolve", "fidelity trace |<psi|exp(-iHt)|0>|^2")
    p.add_argument("--target", type=Path, required=True)
    p.add_argument("--t-max", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--dim", type=_positive_int, default=None, help="default 2M+8")

    p = command("binomial", "binomial target document")
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--M", type=_positive_int, required=True)

    p = command("normal-form", "normal-ordered monomial expansion of the generator")
    p.add_argument("--target", type=Path, required=True)

    p = command("susceptibility", "medium requirements for the M=1 generator")
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--pump", type=float, required=True)

    p = command("ion-compare", "distance between the driven-ion and one-phonon generators")
    p.add_argument("--eta", type=float, required=True)
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--dim", type=_positive_int, required=True)
    return parser


def parse_config(argv) -> RunConfig:
    ns = vars(build_parser().parse_args(argv))
    command = ns.pop("command")
    output = ns.pop("output")
    return RunConfig(command, ns, output)


def _default_dim(target, dim):
    return 2 * target.M + DIM_HEADROOM if dim is None else dim


def _execute(config: RunConfig) -> str:
    a = config.parameters
    cmd = config.command
    if cmd == "coeffs":
        return coeffs_csv(solve_vandermonde(a["M"]))
    if cmd == "binomial":
        return target_json(binomial_target(BinomialSpec(a["p"], a["M"])))
    if cmd == "susceptibility":
        return labeled_csv(susceptibility_requirements(a["p"], a["pump"]).rows())
    if cmd == "ion-compare":
        return labeled_csv(compare_ion_generator(IonSpec(a["eta"], a["k"], 1.0, a["dim"])).rows())

    target = validate_target_file(a["target"])
    if cmd == "normal-form":
        return normal_form_csv(normal_form_of_generator(target))
    dim = _default_dim(target, a["dim"])
    if cmd == "synthesize":
        h = build_generator(target, dim)
        res_a, res_b = generation_residuals(h, target)
        if max(res_a, res_b) > CONTRACT_TOL:
            raise ContractError(
                f"generation contract failed: |H|0>-|psi>| = {res_a:.3e}, |H|psi>-|0>| = {res_b:.3e}"
            )
        return matrix_csv(h)
    if cmd == "evolve":
        if a["steps"] < 2:
            raise UsageError(f"--steps must be >= 2, got {a['steps']}")
        trace = fidelity_trace(target, dim, a["t_max"], a["steps"])
        rows = [f"{fmt(t)},{fmt(f)}" for t, f in zip(trace.times, trace.fidelities)]
        return "t,fidelity\n" + "\n".join(rows) + "\n"
    raise UsageError(f"unknown command {cmd!r}")


def run(config: RunConfig) -> int:
    try:
        text = _execute(config)
    except (DimensionError, TruncationError, ContractError) as exc:
        print(f"fockgen {config.command}: {exc}", file=sys.stderr)
        return EXIT_CONTRACT
    except (UsageError, FockgenError, ValueError, TypeError) as exc:
        print(f"fockgen {config.command}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if config.output_path is None:
        sys.stdout.write(text)
    else:
        config.output_path.write_text(text)
        log.info("wrote %s", config.output_path)
    return EXIT_OK


def main(argv=None) -> int:
    try:
        config = parse_config(sys.argv[1:] if argv is None else argv)
    except UsageError as exc:
        print(f"fockgen: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
