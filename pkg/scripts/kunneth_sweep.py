"""Run the join/product Kunneth and splitting checks over catalog pairs.

Prints one row per (left, right, coefficient) with the outcome of each
check, and a final tally.  Exit status is 1 if anything disagreed.
"""

import argparse
import itertools
import sys
import time
from dataclasses import dataclass, field

from augmental import catalog
from augmental.kunneth import check_join_kunneth, check_product_kunneth, splitting_check

DEFAULT_NAMES = ["irrelevant", "point", "two_points", "sphere1", "ball1", "ball2", "moebius", "rp2"]


@dataclass
class SweepConfig:
    names: list = field(default_factory=lambda: list(DEFAULT_NAMES))
    coeffs: list = field(default_factory=lambda: ["Z", "F2", "F3"])
    products: bool = True


def sweep(cfg: SweepConfig) -> int:
    bad = 0
    t0 = time.perf_counter()
    for a, b in itertools.product(cfg.names, repeat=2):
        ca, cb = catalog.get(a), catalog.get(b)
        for coeff in cfg.coeffs:
            cols = [("join", check_join_kunneth(ca, cb, coeff))]
            if cfg.products:
                cols.append(("product", check_product_kunneth(ca, cb, coeff)))
                cols.append(("split", splitting_check(ca, cb, coeff)))
            cells = []
            for name, r in cols:
                cells.append(f"{name}={'n/a' if not r.applicable else ('ok' if r.ok else 'FAIL')}")
                bad += r.applicable and not r.ok
            print(f"{a:>11} {b:>11} {coeff:>3}  " + "  ".join(cells))
    print(f"{bad} disagreement(s) in {time.perf_counter() - t0:.1f}s")
    return bad


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--names", default=",".join(DEFAULT_NAMES))
    ap.add_argument("--coeffs", default="Z,F2,F3")
    ap.add_argument("--no-products", action="store_true", help="joins only (products of big factors are slow)")
    args = ap.parse_args()
    cfg = SweepConfig(args.names.split(","), args.coeffs.split(","), not args.no_products)
    sys.exit(1 if sweep(cfg) else 0)
