"""Compare G(m, n) with the knot determinant over a grid of coprime (m, n).

Default grid is odd m <= 13, n <= 13; ``--long`` runs m <= 23, n <= 29,
which takes a while (determinants of diagrams with ~640 crossings).

    python scripts/gdet_sweep.py --out sweep.csv
    python scripts/gdet_sweep.py --long --workers 4 --out sweep_long.json
"""

import argparse
import csv
import json
import sys
import time
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Optional

from turkshead.survey import run_gdet, worker_count


@dataclass
class SweepConfig:
    max_m: int = 13
    max_n: int = 13
    workers: Optional[int] = None
    out: Optional[Path] = None

    @classmethod
    def long(cls, **kw):
        return cls(max_m=23, max_n=29, **kw)


def write(rows, path: Path):
    data = [asdict(r) for r in rows]
    if path.suffix == ".json":
        path.write_text(json.dumps(data, indent=2) + "\n")
        return
    with path.open("w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=list(data[0]) if data else ["m"])
        w.writeheader()
        w.writerows(data)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--long", action="store_true", help="m <= 23, n <= 29")
    ap.add_argument("--max-m", type=int)
    ap.add_argument("--max-n", type=int)
    ap.add_argument("--workers", type=int)
    ap.add_argument("--out", type=Path, help=".csv or .json")
    args = ap.parse_args(argv)

    cfg = SweepConfig.long() if args.long else SweepConfig()
    if args.max_m:
        cfg.max_m = args.max_m
    if args.max_n:
        cfg.max_n = args.max_n
    cfg.workers, cfg.out = args.workers, args.out

    start = time.perf_counter()
    rows = run_gdet(cfg.max_m, cfg.max_n, cfg.workers)
    elapsed = time.perf_counter() - start

    bad = [r for r in rows if not r.agree]
    primes = sum(r.det_is_prime for r in rows)
    print(f"{len(rows)} coprime cells, odd m <= {cfg.max_m}, n <= {cfg.max_n}, "
          f"{worker_count(cfg.workers)} workers, {elapsed:.1f}s")
    print(f"agree: {len(rows) - len(bad)}  disagree: {len(bad)}  prime determinants: {primes}")
    for r in bad:
        print(f"  DISAGREE ({r.m}, {r.n}): G = {r.g}, det = {r.det}")
    if cfg.out:
        write(rows, cfg.out)
        print(f"wrote {cfg.out}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
