#!/usr/bin/env python3
"""Download the SNAP edge lists used by the network-gated acceptance tests.

Files land in $AGONY_DATA (default ./data) and are decompressed, so the
test suite and ``agony compute`` can read them directly.
"""

import argparse
import gzip
import os
import shutil
import sys
import urllib.request
from pathlib import Path

BASE = "https://snap.stanford.edu/data/"
DATASETS = {
    "wiki-Vote": "wiki-Vote.txt.gz",
    "p2p-Gnutella31": "p2p-Gnutella31.txt.gz",
}


def fetch(name: str, dest: Path, force: bool = False) -> Path:
    archive = DATASETS[name]
    target = dest / archive.removesuffix(".gz")
    if target.exists() and not force:
        print(f"{target} already present")
        return target
    dest.mkdir(parents=True, exist_ok=True)
    packed = dest / archive
    print(f"downloading {BASE + archive}")
    with urllib.request.urlopen(BASE + archive, timeout=60) as resp, open(packed, "wb") as out:
        shutil.copyfileobj(resp, out)
    with gzip.open(packed, "rb") as src, open(target, "wb") as out:
        shutil.copyfileobj(src, out)
    packed.unlink()
    return target


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("names", nargs="*", help=f"subset of {sorted(DATASETS)}; default all")
    parser.add_argument("--dest", type=Path, default=Path(os.environ.get("AGONY_DATA", "data")))
    parser.add_argument("--force", action="store_true")
    args = parser.parse_args()
    status = 0
    unknown = set(args.names) - set(DATASETS)
    if unknown:
        parser.error(f"unknown dataset(s): {sorted(unknown)}")
    for name in args.names or DATASETS:
        try:
            print(fetch(name, args.dest, args.force))
        except OSError as exc:
            print(f"{name}: {exc}", file=sys.stderr)
            status = 3
    return status


if __name__ == "__main__":
    sys.exit(main())
