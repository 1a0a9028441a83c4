#!/usr/bin/env python3
"""Sweep the full verification report over dimensions and seeds.

Usage: python scripts/run_verification.py [--dims 2,4,8,16] [--seeds 3]
"""

import argparse
import sys

from vlogic.verify import run_full_verification


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dims", default="2,4,8,16")
    parser.add_argument("--seeds", type=int, default=3)
    args = parser.parse_args()

    all_ok = True
    for dim in (int(d) for d in args.dims.split(",")):
        for seed in range(args.seeds):
            report = run_full_verification(dim=dim, seed=seed)
            status = "PASS" if report["pass"] else "FAIL"
            worst = max(
                max(sec.get("residuals", {"": 0.0}).values())
                for sec in report["sections"].values()
                if "residuals" in sec
            )
            print(f"[{status}] dim={dim} seed={seed} worst residual {worst:.2e}")
            all_ok = all_ok and report["pass"]
    return 0 if all_ok else 2


if __name__ == "__main__":
    sys.exit(main())
