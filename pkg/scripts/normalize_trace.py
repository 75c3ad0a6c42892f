#!/usr/bin/env python3
"""Turn a trace CSV into normalized anytime curves.

Output columns: fraction of iterations done, agony and |E(H)| divided by
the final optimum, and the certified ratio agony/|E(H)|. Plotting is left
to whatever tool reads the CSV.
"""

import argparse
import csv
import sys
from pathlib import Path

from agony import IterationTrace


def normalize(trace: IterationTrace) -> list[dict]:
    rows = trace.rows
    last = rows[-1]
    total = max(last.iteration, 1)
    optimum = last.agony or 1
    out = []
    for row in rows:
        ratio = row.agony / row.eulerian_edges if row.eulerian_edges else float("inf")
        out.append({
            "progress": row.iteration / total,
            "agony": row.agony / optimum,
            "eulerian_edges": row.eulerian_edges / optimum,
            "ratio": ratio,
        })
    return out


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("trace", type=Path)
    parser.add_argument("--out", type=Path, help="default: stdout")
    parser.add_argument("--threshold", type=float, default=2.0,
                        help="also report the first progress point with ratio <= THRESHOLD")
    args = parser.parse_args()
    trace = IterationTrace.from_csv(args.trace.read_text(encoding="utf-8"))
    rows = normalize(trace)
    fh = open(args.out, "w", newline="", encoding="utf-8") if args.out else sys.stdout
    writer = csv.DictWriter(fh, fieldnames=["progress", "agony", "eulerian_edges", "ratio"], lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    if args.out:
        fh.close()
    hit = next((r["progress"] for r in rows if r["ratio"] <= args.threshold), None)
    print(f"ratio <= {args.threshold} first reached at progress {hit}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
