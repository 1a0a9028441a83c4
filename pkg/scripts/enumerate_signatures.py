#!/usr/bin/env python3
"""Print the one-probe signatures of all 16 dyadic gates and their collisions.

Usage: python scripts/enumerate_signatures.py [--dim Q] [--seed S] [--canonical NAME]
"""

import argparse

from vlogic import canonical_basis, enumerate_dyadic_signatures, random_basis
from vlogic.scalar_logic import NAMED_DYADIC_GATES


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dim", type=int, default=4)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--canonical", default=None)
    args = parser.parse_args()

    b = canonical_basis(args.canonical) if args.canonical else random_basis(args.dim, 0.0, args.seed)
    signatures, classes = enumerate_dyadic_signatures(b)

    print(f"{'gate':>6}  {'re_s':>7} {'re_n':>7} {'im_s':>7} {'im_n':>7}  residual")
    for name, sig in sorted(signatures.items(), key=lambda kv: (kv[0] not in NAMED_DYADIC_GATES, kv[0])):
        tag = "*" if name in NAMED_DYADIC_GATES else " "
        print(
            f"{name:>6}{tag} {sig.re_s:7.3f} {sig.re_n:7.3f} {sig.im_s:7.3f} {sig.im_n:7.3f}  {sig.residual:.1e}"
        )
    print("\ncollision classes (size >= 2):")
    for cls in classes:
        if len(cls) >= 2:
            print("  " + ", ".join(cls))


if __name__ == "__main__":
    main()
