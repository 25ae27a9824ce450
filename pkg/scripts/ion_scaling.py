"""Lamb-Dicke truncation error and ion/generator distance over a range of eta."""

import argparse

import numpy as np

from fockgen.physical import IonSpec, compare_ion_generator, lamb_dicke_error


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dim", type=int, default=12)
    parser.add_argument("--etas", type=float, nargs="+", default=list(np.geomspace(0.025, 1.6, 8)))
    args = parser.parse_args()

    print("eta,ld_error_per_eta,ld_error/eta^4,frobenius_exact,frobenius_lamb_dicke")
    for eta in args.etas:
        spec = IonSpec(eta, 1, 1.0, args.dim)
        err = lamb_dicke_error(spec)
        exact = compare_ion_generator(spec).frobenius_distance
        approx = compare_ion_generator(spec, use_lamb_dicke=True).frobenius_distance
        print(f"{eta:.4f},{err:.4e},{err / eta**4:.4f},{exact:.6f},{approx:.6f}")
    spec = IonSpec(np.sqrt(2), 1, 1.0, args.dim)
    print(f"# at eta = sqrt(2): Lamb-Dicke form distance "
          f"{compare_ion_generator(spec, use_lamb_dicke=True).frobenius_distance:.2e}")


if __name__ == "__main__":
    main()
