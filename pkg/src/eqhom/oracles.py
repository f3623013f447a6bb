"""Brute-force homology for small integer complexes, independent of the Smith code.

Ranks come from Gaussian elimination over the rationals.  Torsion is read off
determinantal divisors: the k-th invariant factor of a matrix is
D_k / D_{k-1} with D_k the gcd of all k×k minors.  A per-prime rank over
F_p cross-checks the p-torsion count.  Only meant for matrices up to about
8×8.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from math import gcd
from typing import Sequence

from .homology import FGAbelianGroup


def rational_rank(a: Sequence[Sequence[int]]) -> int:
    rows = [[Fraction(x) for x in r] for r in a]
    if not rows or not rows[0]:
        return 0
    rank, ncols = 0, len(rows[0])
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c] != 0:
                f = rows[i][c] / rows[rank][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def rank_mod_p(a: Sequence[Sequence[int]], p: int) -> int:
    rows = [[x % p for x in r] for r in a]
    if not rows or not rows[0]:
        return 0
    rank, ncols = 0, len(rows[0])
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], -1, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _det(m: list) -> int:
    # Bareiss fraction-free elimination
    n = len(m)
    if n == 0:
        return 1
    a = [list(r) for r in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            sw = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if sw is None:
                return 0
            a[k], a[sw] = a[sw], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def determinantal_factors(a: Sequence[Sequence[int]]) -> list:
    """Nonzero invariant factors via gcds of minors."""
    nr = len(a)
    nc = len(a[0]) if nr else 0
    divisors = [1]
    for k in range(1, min(nr, nc) + 1):
        g = 0
        for rs in itertools.combinations(range(nr), k):
            for cs in itertools.combinations(range(nc), k):
                g = gcd(g, _det([[a[i][j] for j in cs] for i in rs]))
                if g == 1:
                    break
            if g == 1:
                break
        if g == 0:
            break
        divisors.append(g)
    return [divisors[k] // divisors[k - 1] for k in range(1, len(divisors))]


def _primes_dividing(values: Sequence[int]) -> list:
    out = set()
    for v in values:
        v, p = abs(v), 2
        while v > 1:
            if p * p > v:
                out.add(v)
                break
            while v % p == 0:
                out.add(p)
                v //= p
            p += 1
    return sorted(out)


def oracle_homology(ranks: Sequence[int], mats: Sequence[Sequence[Sequence[int]]]) -> list:
    """H_0..H_top for C_0 <- C_1 <- ... with d_n = mats[n-1] (rows index C_{n-1}).

    Raises AssertionError if the per-prime ranks disagree with the torsion
    read off the minors.
    """
    top = len(ranks) - 1

    def d(n):
        if 1 <= n <= len(mats):
            return mats[n - 1]
        return [[0] * ranks[n] for _ in range(ranks[n - 1])] if 0 < n <= top else []

    out = []
    for n in range(top + 1):
        r_out = rational_rank(d(n)) if n > 0 else 0
        inc = d(n + 1) if n < top else []
        r_in = rational_rank(inc) if inc else 0
        factors = determinantal_factors(inc) if inc else []
        torsion = [f for f in factors if f > 1]
        H = FGAbelianGroup.make(ranks[n] - r_out - r_in, torsion)
        for p in _primes_dividing(torsion) + [2, 3]:
            rp_out = rank_mod_p(d(n), p) if n > 0 else 0
            rp_in = rank_mod_p(inc, p) if inc else 0
            dim_p = ranks[n] - rp_out - rp_in
            expected = H.rank + sum(1 for f in torsion if f % p == 0)
            prev = d(n)
            if n > 0:
                expected += sum(1 for f in determinantal_factors(prev) if f % p == 0)
            assert dim_p == expected, "per-prime rank disagrees with the determinantal divisors"
        out.append(H)
    return out


def random_complex_matrices(rng: random.Random, max_rank: int = 6, entries: int = 5, length: int = 3):
    """Random complex with entries in [-entries, entries] and d∘d = 0 by construction.

    d_1 is arbitrary; every column of a later d_n is a small integer
    combination of kernel vectors of d_(n-1), redrawn until it fits the
    entry bound (or left zero).
    """
    ranks = [rng.randint(1, max_rank) for _ in range(length + 1)]
    mats = []
    prev = None
    for n in range(1, length + 1):
        rows, cols = ranks[n - 1], ranks[n]
        if prev is None:
            m = [[rng.randint(-entries, entries) for _ in range(cols)] for _ in range(rows)]
        else:
            kernel = _kernel_basis(prev)
            m = [[0] * cols for _ in range(rows)]
            for j in range(cols):
                for _ in range(10):
                    col = [0] * rows
                    for v in kernel:
                        c = rng.randint(-2, 2)
                        col = [x + c * y for x, y in zip(col, v)]
                    if all(abs(x) <= entries for x in col):
                        for i in range(rows):
                            m[i][j] = col[i]
                        break
        mats.append(m)
        prev = m
    return ranks, mats


def _matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def _kernel_basis(a) -> list:
    """Integer vectors spanning the rational kernel of a (cleared denominators)."""
    nr, nc = len(a), len(a[0]) if a else 0
    rows = [[Fraction(x) for x in r] for r in a]
    pivots = []
    rank = 0
    for c in range(nc):
        piv = next((i for i in range(rank, nr) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        lead = rows[rank][c]
        rows[rank] = [x / lead for x in rows[rank]]
        for i in range(nr):
            if i != rank and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        pivots.append(c)
        rank += 1
    free = [c for c in range(nc) if c not in pivots]
    out = []
    for f in free:
        v = [Fraction(0)] * nc
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -rows[i][f]
        den = 1
        for x in v:
            den = den * x.denominator // gcd(den, x.denominator)
        out.append([int(x * den) for x in v])
    return out
