"""Exact integer linear algebra: sparse matrices, Smith invariants, kernels, solving.

Everything works with Python integers.  The sparse Smith routine first
eliminates unit pivots (cheap, keeps sparsity), then falls back to a
Euclidean elimination on what is left.  Dense routines with transforms are
meant for the small systems that appear in support computations and in
isomorphism checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence


class LinAlgError(ValueError):
    pass


@dataclass
class SparseMatrix:
    """Column-sparse integer matrix; ``cols[j]`` maps row index to a nonzero entry."""

    nrows: int
    ncols: int
    cols: list

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "SparseMatrix":
        return cls(nrows, ncols, [dict() for _ in range(ncols)])

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[int]], ncols: int | None = None) -> "SparseMatrix":
        nrows = len(rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        cols = [dict() for _ in range(ncols)]
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise LinAlgError(f"row {i} has {len(row)} entries, expected {ncols}")
            for j, v in enumerate(row):
                if v:
                    cols[j][i] = int(v)
        return cls(nrows, ncols, cols)

    @classmethod
    def from_columns(cls, nrows: int, columns: Iterable[dict]) -> "SparseMatrix":
        cols = [{i: v for i, v in c.items() if v} for c in columns]
        return cls(nrows, len(cols), cols)

    def to_dense(self) -> list:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for j, c in enumerate(self.cols):
            for i, v in c.items():
                out[i][j] = v
        return out

    def apply(self, vec: dict) -> dict:
        out: dict = {}
        for j, a in vec.items():
            for i, v in self.cols[j].items():
                s = out.get(i, 0) + a * v
                if s:
                    out[i] = s
                else:
                    out.pop(i, None)
        return out

    def matmul(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise LinAlgError("shape mismatch in matmul")
        return SparseMatrix(self.nrows, other.ncols, [self.apply(c) for c in other.cols])

    def is_zero(self) -> bool:
        return all(not c for c in self.cols)

    def nnz(self) -> int:
        return sum(len(c) for c in self.cols)


# Smith invariants -------------------------------------------------------------

def _normalize_factors(diag: list) -> list:
    """Turn a list of nonzero diagonal entries into an invariant factor chain."""
    d = sorted(abs(v) for v in diag if v)
    ones = [v for v in d if v == 1]
    rest = [v for v in d if v != 1]
    k = len(rest)
    for i in range(k):
        for j in range(i + 1, k):
            a, b = rest[i], rest[j]
            g = gcd(a, b)
            rest[i], rest[j] = g, a // g * b
    return ones + sorted(rest)


def smith_invariants(m: SparseMatrix) -> list:
    """Nonzero invariant factors d1 | d2 | ... of ``m`` (the rank is their count)."""
    rows: dict = {}
    cols: dict = {}
    for j, c in enumerate(m.cols):
        if c:
            cols[j] = dict(c)
            for i, v in c.items():
                rows.setdefault(i, {})[j] = v
    diag: list = []

    def pivot(r: int, c: int) -> None:
        # clear column c using row r (entry divides everything in the column),
        # then drop row r and column c: the column ops that would clear row r
        # touch nothing else once column c is reduced to a single entry.
        p = rows[r][c]
        prow = rows[r]
        for r2, v in list(cols[c].items()):
            if r2 == r:
                continue
            q = v // p
            row2 = rows[r2]
            for c2, w in prow.items():
                nv = row2.get(c2, 0) - q * w
                if nv:
                    row2[c2] = nv
                    cols[c2][r2] = nv
                else:
                    row2.pop(c2, None)
                    cols[c2].pop(r2, None)
            if not row2:
                del rows[r2]
        for c2 in prow:
            cols[c2].pop(r, None)
            if not cols[c2] and c2 != c:
                del cols[c2]
        del rows[r]
        cols.pop(c, None)
        diag.append(p)

    # phase 1: unit pivots, shortest columns first
    progress = True
    while progress and cols:
        progress = False
        for c in sorted(cols, key=lambda c: len(cols[c])):
            if c not in cols:
                continue
            best = None
            for r, v in cols[c].items():
                if v == 1 or v == -1:
                    ln = len(rows[r])
                    if best is None or ln < best[0]:
                        best = (ln, r)
            if best is not None:
                pivot(best[1], c)
                progress = True

    # phase 2: Euclidean elimination with smallest-magnitude pivots
    while cols:
        r, c, p = min(((r, c, v) for c in cols for r, v in cols[c].items()),
                      key=lambda t: (abs(t[2]), t[1], t[0]))
        while True:
            p = rows[r][c]
            bad = None
            for r2, v in cols[c].items():
                if r2 != r and v % p:
                    bad = ("row", r2)
                    break
            if bad is None:
                for c2, v in rows[r].items():
                    if c2 != c and v % p:
                        bad = ("col", c2)
                        break
            if bad is None:
                # pivot divides its row and column; clear the row by column ops
                prow = dict(rows[r])
                for c2, w in prow.items():
                    if c2 == c:
                        continue
                    q = w // p
                    # col c2 -= q * col c
                    for r2, v in list(cols[c].items()):
                        nv = cols[c2].get(r2, 0) - q * v
                        if nv:
                            cols[c2][r2] = nv
                            rows[r2][c2] = nv
                        else:
                            cols[c2].pop(r2, None)
                            rows[r2].pop(c2, None)
                    if not cols[c2]:
                        del cols[c2]
                for r2 in [r2 for r2 in rows if not rows[r2]]:
                    del rows[r2]
                pivot(r, c)
                break
            kind, idx = bad
            if kind == "row":
                v = cols[c][idx]
                q = v // p
                for c2, w in list(rows[r].items()):
                    nv = rows[idx].get(c2, 0) - q * w
                    if nv:
                        rows[idx][c2] = nv
                        cols[c2][idx] = nv
                    else:
                        rows[idx].pop(c2, None)
                        cols[c2].pop(idx, None)
                r = idx  # remainder is smaller than p
            else:
                v = rows[r][idx]
                q = v // p
                for r2, w in list(cols[c].items()):
                    nv = cols[idx].get(r2, 0) - q * w
                    if nv:
                        cols[idx][r2] = nv
                        rows[r2][idx] = nv
                    else:
                        cols[idx].pop(r2, None)
                        rows[r2].pop(idx, None)
                c = idx
            for c2 in [c2 for c2 in cols if not cols[c2]]:
                del cols[c2]
            for r2 in [r2 for r2 in rows if not rows[r2]]:
                del rows[r2]
    return _normalize_factors(diag)


def rank(m: SparseMatrix) -> int:
    return len(smith_invariants(m))


# dense routines -----------------------------------------------------------

def _identity(n: int) -> list:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_form(a: Sequence[Sequence[int]], ncols: int | None = None):
    """Dense Smith form with transforms: returns (D, U, V) with U·A·V = D.

    U and V are unimodular; D is diagonal with the invariant factors (up to
    the divisibility normalisation, which callers do not need).
    """
    m = len(a)
    n = len(a[0]) if m else (ncols or 0)
    A = [list(map(int, row)) for row in a]
    U = _identity(m)
    V = _identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    t = 0
    while t < min(m, n):
        # choose the smallest nonzero entry in the remaining block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = A[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = A[t][t]
            done = True
            for i in range(t + 1, m):
                q = A[i][t] // p
                if q:
                    A[i] = [x - q * y for x, y in zip(A[i], A[t])]
                    U[i] = [x - q * y for x, y in zip(U[i], U[t])]
                if A[i][t]:
                    done = False
            for j in range(t + 1, n):
                q = A[t][j] // p
                if q:
                    for row in A:
                        row[j] -= q * row[t]
                    for row in V:
                        row[j] -= q * row[t]
                if A[t][j]:
                    done = False
            if done:
                break
            best = None
            for i in range(t + 1, m):
                if A[i][t] and (best is None or abs(A[i][t]) < best[0]):
                    best = (abs(A[i][t]), "r", i)
            for j in range(t + 1, n):
                if A[t][j] and (best is None or abs(A[t][j]) < best[0]):
                    best = (abs(A[t][j]), "c", j)
            if best[1] == "r":
                swap_rows(t, best[2])
            else:
                swap_cols(t, best[2])
        t += 1
    return A, U, V


def matvec(a: Sequence[Sequence[int]], x: Sequence[int]) -> list:
    return [sum(v * w for v, w in zip(row, x)) for row in a]


def solve_integer(a: Sequence[Sequence[int]], b: Sequence[int], ncols: int | None = None):
    """Find integer x with a·x = b.

    Returns ``(x, None)`` on success and ``(None, reason)`` otherwise, where
    reason is ``"rational"`` (no solution over Q) or ``"integral"`` (a rational
    solution exists but no integral one).
    """
    m = len(a)
    n = len(a[0]) if m else (ncols or 0)
    D, U, V = smith_form(a, n)
    c = matvec(U, b)
    y = [0] * n
    reason = None
    for i in range(m):
        d = D[i][i] if i < n else 0
        if d == 0:
            if c[i] != 0:
                return None, "rational"
        else:
            if c[i] % d:
                reason = "integral"
            else:
                y[i] = c[i] // d
    if reason:
        return None, reason
    x = matvec(V, y)
    return x, None


def integer_kernel(a: Sequence[Sequence[int]], ncols: int | None = None) -> list:
    """A Z-basis of {x : a·x = 0}, as a list of integer vectors."""
    m = len(a)
    n = len(a[0]) if m else (ncols or 0)
    # column echelon form on [A; I] by extended gcd column operations
    cols = [[a[i][j] for i in range(m)] for j in range(n)]
    tr = [[int(i == j) for i in range(n)] for j in range(n)]
    pivot_col = 0
    for i in range(m):
        # gather columns from pivot_col on with nonzero entry in row i
        for j in range(pivot_col + 1, n):
            if cols[j][i] == 0:
                continue
            a0, b0 = cols[pivot_col][i], cols[j][i]
            if a0 == 0:
                cols[pivot_col], cols[j] = cols[j], cols[pivot_col]
                tr[pivot_col], tr[j] = tr[j], tr[pivot_col]
                continue
            g, s, t = _xgcd(a0, b0)
            u, v = a0 // g, b0 // g
            cp, cj = cols[pivot_col], cols[j]
            tp, tj = tr[pivot_col], tr[j]
            cols[pivot_col] = [s * x + t * y for x, y in zip(cp, cj)]
            cols[j] = [u * y - v * x for x, y in zip(cp, cj)]
            tr[pivot_col] = [s * x + t * y for x, y in zip(tp, tj)]
            tr[j] = [u * y - v * x for x, y in zip(tp, tj)]
        if pivot_col < n and cols[pivot_col][i] != 0:
            pivot_col += 1
        if pivot_col >= n:
            break
    return [tr[j] for j in range(pivot_col, n)]


def _xgcd(a: int, b: int):
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) > 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    r0, r1 = a, b
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if r0 < 0:
        r0, x0, y0 = -r0, -x0, -y0
    return r0, x0, y0


def lattice_basis(vectors: Sequence[Sequence[int]], dim: int) -> list:
    """A Z-basis of the span of ``vectors`` (Hermite form, rows reduced)."""
    rows = [list(v) for v in vectors if any(v)]
    basis = []
    col = 0
    while rows and col < dim:
        nz = [r for r in rows if r[col]]
        if not nz:
            col += 1
            continue
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            p = nz[0]
            for r in nz[1:]:
                q = r[col] // p[col]
                for k in range(col, dim):
                    r[k] -= q * p[k]
            nz = [r for r in nz if r[col]]
        p = nz[0]
        if p[col] < 0:
            p[:] = [-x for x in p]
        basis.append(p)
        rows = [r for r in rows if r is not p and any(r)]
        col += 1
    return basis


def is_unimodular(a: Sequence[Sequence[int]]) -> bool:
    """True iff the square integer matrix a is invertible over Z."""
    n = len(a)
    if any(len(r) != n for r in a):
        return False
    inv = smith_invariants(SparseMatrix.from_dense(a, n))
    return len(inv) == n and all(d == 1 for d in inv)
