"""Fidelity of the binomial generator output with |alpha> as M grows (p = alpha^2/M)."""

import argparse

from fockgen.families import coherent_limit_fidelity


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--alpha", type=float, nargs="+", default=[0.5, 1.0, 2.0])
    parser.add_argument("--M", type=int, nargs="+", default=[5, 10, 20, 40, 60])
    args = parser.parse_args()

    print("alpha,M,fidelity,infidelity")
    for alpha in args.alpha:
        for M in args.M:
            if alpha * alpha > M:
                continue
            f = coherent_limit_fidelity(alpha, M)
            print(f"{alpha},{M},{f:.15f},{1 - f:.3e}")


if __name__ == "__main__":
    main()
