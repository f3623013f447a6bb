#!/usr/bin/env python3
"""Print Hochschild, cyclic and bar-probe values for a few small rings."""

import argparse

from eqhom import homology as hom
from eqhom.groups import cyclic, symmetric
from eqhom.polyfun import simplex_monomial_ring
from eqhom.rings import crossed_product, dual_numbers, gaussian, group_ring, matrix_ring, ring_Z, truncated_poly


def rings():
    return [
        ring_Z(),
        gaussian(),
        dual_numbers(),
        truncated_poly(3),
        matrix_ring(2, ring_Z()),
        group_ring(cyclic(2)),
        group_ring(cyclic(3)),
        group_ring(symmetric(3)),
        crossed_product(gaussian(cyclic(2))),
        simplex_monomial_ring(2, 2),
    ]


def fmt(values):
    return ", ".join(str(v) for v in values)


def cli():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-N", type=int, default=2, help="top degree")
    args = ap.parse_args()
    print(f"{'ring':<22} {'HH_0..HH_N':<40} {'bar probe':<28} HC_0..HC_N")
    for R in rings():
        hh = hom.hochschild_homology(R, args.N) if R.rank ** (args.N + 2) < 60_000 else None
        probe = hom.bar_tor_probe(R, "Z", args.N)
        hc = [hom.cyclic_hc(R, n) for n in range(args.N + 1)] if R.is_unital and R.rank <= 4 else None
        print(f"{R.name:<22} {fmt(hh) if hh else '(skipped)':<40} {fmt(probe.values):<28} "
              f"{fmt(hc) if hc else '-'}")


if __name__ == "__main__":
    cli()
