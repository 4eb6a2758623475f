#!/usr/bin/env python3
"""Run the full identity-check registry and print a summary table.

This is the batch driver used for CI-style runs:

    python scripts/run_checks.py                 # symbolic backend
    python scripts/run_checks.py --backend 5/3   # specialized backend
    python scripts/run_checks.py --n 2 --ell 1,2 # smaller sweep

Exit status 0 iff every check passes.
"""

import argparse
import sys
import time
from fractions import Fraction

from qschur.checks import CHECKS, RunConfig, run_check


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", default="2,3", help="comma-separated ranks")
    ap.add_argument("--ell", default="1,2,3", help="comma-separated sizes")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--backend", default=None,
                    help="rational t value, e.g. 5/3 (default: symbolic)")
    ap.add_argument("--only", default=None,
                    help="comma-separated check ids (default: all)")
    args = ap.parse_args()

    cfg = RunConfig(
        n_values=[int(x) for x in args.n.split(",")],
        ell_values=[int(x) for x in args.ell.split(",")],
        seed=args.seed,
        t0=Fraction(args.backend) if args.backend else None,
    )
    ids = args.only.split(",") if args.only else list(CHECKS)
    print(f"backend: {'symbolic' if cfg.t0 is None else f'rational t={cfg.t0}'}"
          f"   n={cfg.n_values} ell={cfg.ell_values} seed={cfg.seed}")
    print(f"{'check':<12} {'status':<6} {'cases':>5} {'time':>8}")
    print("-" * 36)
    all_ok = True
    total = time.time()
    for cid in ids:
        r = run_check(cid, cfg)
        all_ok = all_ok and r.passed
        print(f"{cid:<12} {'PASS' if r.passed else 'FAIL':<6} "
              f"{len(r.details):>5} {r.seconds:>7.2f}s")
        if not r.passed:
            for label, ok, extra in r.details:
                if not ok:
                    print(f"    FAIL {label} {extra}")
    print("-" * 36)
    print(f"{'all' if all_ok else 'SOME FAILED':<12} "
          f"{'PASS' if all_ok else 'FAIL':<6} {'':>5} {time.time()-total:>7.2f}s")
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
