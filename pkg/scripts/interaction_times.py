"""Fidelity trace for a binomial target against the closed form sin^2 t + C_0^2 cos^2 t."""

import argparse

import numpy as np

from fockgen.families import BinomialSpec, binomial_target
from fockgen.generator import analytic_fidelity, fidelity_trace


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--p", type=float, default=0.4)
    parser.add_argument("--M", type=int, default=4)
    parser.add_argument("--periods", type=float, default=2.5, help="t_max in units of pi")
    parser.add_argument("--steps", type=int, default=41)
    args = parser.parse_args()

    target = binomial_target(BinomialSpec(args.p, args.M))
    trace = fidelity_trace(target, 2 * args.M + 8, args.periods * np.pi, args.steps)
    closed = analytic_fidelity(target, trace.times)
    print("t_over_pi,fidelity,closed_form")
    for t, f, c in zip(trace.times / np.pi, trace.fidelities, closed):
        print(f"{t:.4f},{f:.12f},{c:.12f}")
    print(f"# max deviation {np.abs(trace.fidelities - closed).max():.2e}")


if __name__ == "__main__":
    main()
