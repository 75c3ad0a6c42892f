#!/usr/bin/env python3
"""Run both solvers on every edge list in the data directory and tabulate.

Thin wrapper over ``agony bench``; traces go to ``<data>/traces``.
"""

import argparse
import os
import sys
from pathlib import Path

from agony.cli import main as agony_main


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--data", type=Path, default=Path(os.environ.get("AGONY_DATA", "data")))
    parser.add_argument("--relief-only", action="store_true", help="skip the (slow) cycle-canceling baseline")
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()
    inputs = sorted(str(p) for p in args.data.glob("*.txt"))
    if not inputs:
        print(f"no *.txt edge lists in {args.data}; see scripts/fetch_snap.py", file=sys.stderr)
        return 1
    argv = ["bench", *inputs, "--algorithm", "relief", "--trace", str(args.data / "traces"), "--jobs", str(args.jobs)]
    if not args.relief_only:
        argv += ["--algorithm", "gupte"]
    return agony_main(argv)


if __name__ == "__main__":
    sys.exit(main())
