#!/usr/bin/env python3
"""Export reference tables as CSV: series values over a standard grid, the
odd-denominator constants, and a coefficient triangle.

Usage:
    python scripts/export_tables.py [--out DIR]
"""

import argparse
import csv
import pathlib
import sys

from ramaseries.coeff_triangle import build
from ramaseries.series_engine import eval_phi, eval_phi_tilde
from ramaseries.special_fn import DivergenceError, s_prime

GRID_A = (-0.9, -0.5, -0.25, 0.5, 2.0)
GRID_B = (0.25, 0.75, 1.25, 1.75, 2.25)
ORDERS = (0, 1, 2, 3)


def write_series(path: pathlib.Path) -> None:
    with path.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["a", "b", "order", "alternating", "plus_weight", "status"])
        for a in GRID_A:
            for b in GRID_B:
                for n in ORDERS:
                    try:
                        alt = repr(eval_phi(a, b, float(n)).value)
                        plus = repr(eval_phi_tilde(a, b, float(n)).value)
                        status = "ok"
                    except DivergenceError:
                        alt = plus = ""
                        status = "divergent"
                    w.writerow([a, b, n, alt, plus, status])


def write_sprime(path: pathlib.Path) -> None:
    with path.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["r", "value"])
        for r in range(1, 13):
            w.writerow([r, repr(s_prime(r))])


def write_triangle(path: pathlib.Path, p: float = -0.5, b: float = 0.25) -> None:
    tri = build(p, b, 8)
    with path.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["m", "k", "A"])
        for m in range(1, 9):
            for k in range(1, m + 1):
                w.writerow([m, k, repr(tri.entry(m, k))])


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="tables")
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    write_series(out / "series_grid.csv")
    write_sprime(out / "odd_constants.csv")
    write_triangle(out / "triangle_p-0.5_b0.25.csv")
    print("wrote 3 tables to %s/" % out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
