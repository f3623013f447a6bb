"""Integral homology of bounded chain complexes and the complexes built from rings.

Complexes are stored with labelled generators per degree and sparse boundary
matrices; homology is read off Smith invariants, so every answer is exact
over Z.  Complexes cut off at a top degree record that fact and refuse to
report homology there.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import reduce
from math import gcd
from typing import Callable, Iterable, Sequence

from .groups import FiniteGroup, GSet, coset_space
from .linalg import SparseMatrix, integer_kernel, smith_invariants
from .rings import BasedRing, Bimodule, groupoid_crossed, unitalize
from .simplicial import GSimplicialComplex

MAX_GENERATORS = 400_000


class HomologyError(ValueError):
    pass


# values -----------------------------------------------------------------------------

def _chain(factors: Iterable[int]) -> tuple:
    """Invariant factors (each ≥ 2, dividing the next) of a finite abelian group."""
    primes: dict = {}
    for d in factors:
        d = abs(d)
        if d == 0:
            raise HomologyError("zero is not a torsion order")
        p = 2
        while d > 1:
            if p * p > d:
                primes.setdefault(d, []).append(d)
                break
            if d % p == 0:
                q = 1
                while d % p == 0:
                    d //= p
                    q *= p
                primes.setdefault(p, []).append(q)
            p += 1
    # group prime powers: the largest powers multiply into the last factor, etc.
    cols = max((len(v) for v in primes.values()), default=0)
    out = [1] * cols
    for powers in primes.values():
        for i, q in enumerate(sorted(powers, reverse=True)):
            out[cols - 1 - i] *= q
    return tuple(v for v in out if v > 1)


@dataclass(frozen=True)
class FGAbelianGroup:
    """Z^rank ⊕ Z/d1 ⊕ ... with d1 | d2 | ..."""

    rank: int = 0
    torsion: tuple = ()

    def __post_init__(self):
        if self.rank < 0:
            raise HomologyError("negative rank")
        t = tuple(self.torsion)
        if any(d < 2 for d in t) or any(t[i + 1] % t[i] for i in range(len(t) - 1)):
            raise HomologyError(f"{list(t)} is not an invariant factor chain")

    @classmethod
    def make(cls, rank: int, factors: Iterable[int] = ()) -> "FGAbelianGroup":
        return cls(rank, _chain(f for f in factors if abs(f) != 1))

    def __add__(self, other: "FGAbelianGroup") -> "FGAbelianGroup":
        return FGAbelianGroup.make(self.rank + other.rank, self.torsion + other.torsion)

    @property
    def is_zero(self) -> bool:
        return self.rank == 0 and not self.torsion

    def tensor_mod(self, m: int) -> "FGAbelianGroup":
        return FGAbelianGroup.make(0, [m] * self.rank + [gcd(d, m) for d in self.torsion])

    def tor_mod(self, m: int) -> "FGAbelianGroup":
        return FGAbelianGroup.make(0, [gcd(d, m) for d in self.torsion])

    def to_json(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion)}

    @classmethod
    def from_json(cls, data) -> "FGAbelianGroup":
        if isinstance(data, int):
            return cls(data, ())
        if isinstance(data, str):
            return cls.parse(data)
        return cls.make(int(data.get("rank", 0)), [int(d) for d in data.get("torsion", [])])

    @classmethod
    def parse(cls, text: str) -> "FGAbelianGroup":
        """Read the printed form, e.g. ``"Z^2 + Z/2"`` or ``"0"``."""
        rank, torsion = 0, []
        for part in text.replace(" ", "").split("+"):
            if part in ("", "0"):
                continue
            if part == "Z":
                rank += 1
            elif part.startswith("Z^"):
                rank += int(part[2:])
            elif part.startswith("Z/"):
                torsion.append(int(part[2:]))
            else:
                raise HomologyError(f"cannot read {text!r} as an abelian group")
        return cls.make(rank, torsion)

    def __str__(self) -> str:
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        for d in self.torsion:
            parts.append(f"Z/{d}")
        return " + ".join(parts) if parts else "0"


def direct_sum(groups: Iterable[FGAbelianGroup]) -> FGAbelianGroup:
    return reduce(lambda a, b: a + b, groups, FGAbelianGroup())


@dataclass(frozen=True)
class Coefficients:
    """Z, Z/m or a finite direct sum of those; 0 stands for Z."""

    moduli: tuple = (0,)

    def __post_init__(self):
        if not self.moduli:
            raise HomologyError("empty coefficient group")
        if any(m == 1 or m < 0 for m in self.moduli):
            raise HomologyError("coefficient moduli must be 0 (for Z) or at least 2")

    @classmethod
    def parse(cls, spec) -> "Coefficients":
        """"Z", "Z/3", 5 (meaning Z/5) or a list of those."""
        if isinstance(spec, Coefficients):
            return spec
        items = spec if isinstance(spec, (list, tuple)) else [spec]
        out = []
        for s in items:
            if isinstance(s, int):
                out.append(s)
            elif s in ("Z", "ℤ"):
                out.append(0)
            elif isinstance(s, str) and s.replace("ℤ", "Z").startswith("Z/"):
                out.append(int(s.replace("ℤ", "Z")[2:]))
            else:
                raise HomologyError(f"unknown coefficient group {s!r}")
        return cls(tuple(out))

    def __str__(self) -> str:
        return " + ".join("Z" if m == 0 else f"Z/{m}" for m in self.moduli)

    def apply(self, integral: Sequence[FGAbelianGroup]) -> list:
        """H_n(C ⊗ M) for n < len(integral) by the universal coefficient theorem."""
        out = []
        for n, h in enumerate(integral):
            total = FGAbelianGroup()
            for m in self.moduli:
                if m == 0:
                    total = total + h
                else:
                    total = total + h.tensor_mod(m)
                    if n > 0:
                        total = total + integral[n - 1].tor_mod(m)
            out.append(total)
        return out


# chain complexes -----------------------------------------------------------------------

@dataclass(eq=False)
class ChainComplex:
    """C_lo ... C_hi with d_n: C_n -> C_{n-1}; ``complete`` means C_n = 0 above hi."""

    ranks: dict
    d: dict  # n -> SparseMatrix, for lo < n <= hi
    labels: dict | None = None
    complete: bool = True
    name: str = ""
    _inv: dict = field(default_factory=dict, repr=False)

    @property
    def lo(self) -> int:
        return min(self.ranks)

    @property
    def hi(self) -> int:
        return max(self.ranks)

    def rank(self, n: int) -> int:
        return self.ranks.get(n, 0)

    def boundary(self, n: int) -> SparseMatrix:
        if n in self.d:
            return self.d[n]
        return SparseMatrix.zero(self.rank(n - 1), self.rank(n))

    def check_d2(self):
        """First n with d_{n-1} d_n ≠ 0, or None."""
        for n in sorted(self.d):
            if n - 1 in self.d and not self.d[n - 1].matmul(self.d[n]).is_zero():
                return n
        return None

    def validated(self) -> "ChainComplex":
        bad = self.check_d2()
        if bad is not None:
            raise HomologyError(f"d∘d ≠ 0 at degree {bad}")
        return self

    def _invariants(self, n: int) -> list:
        if n not in self._inv:
            self._inv[n] = smith_invariants(self.d[n]) if n in self.d else []
        return self._inv[n]

    def exact_through(self) -> int:
        return self.hi if self.complete else self.hi - 1

    def homology(self, n: int) -> FGAbelianGroup:
        if n > self.exact_through():
            raise HomologyError(f"degree {n} is at or above the truncation degree {self.hi}")
        if n not in self.ranks:
            return FGAbelianGroup()
        out_rank = len(self._invariants(n))
        inv = self._invariants(n + 1)
        rank = self.rank(n) - out_rank - len(inv)
        return FGAbelianGroup.make(rank, [f for f in inv if f > 1])

    def homology_range(self, top: int | None = None) -> list:
        top = self.exact_through() if top is None else top
        return [self.homology(n) for n in range(0, top + 1)]


def assemble(gens: dict, boundary: Callable, complete: bool = False, name: str = "") -> ChainComplex:
    """Chain complex from generator lists and a boundary on generators.

    ``boundary(n, gen)`` returns {label in degree n-1: coefficient}.
    """
    total = sum(len(v) for v in gens.values())
    if total > MAX_GENERATORS:
        raise HomologyError(f"{total} generators exceed the cap of {MAX_GENERATORS}")
    index = {n: {g: i for i, g in enumerate(v)} for n, v in gens.items()}
    d = {}
    for n in sorted(gens):
        if n - 1 not in gens:
            continue
        below = index[n - 1]
        cols = []
        for g in gens[n]:
            col: dict = {}
            for lab, c in boundary(n, g).items():
                if not c:
                    continue
                if lab not in below:
                    raise HomologyError(f"boundary of {g!r} leaves the complex at {lab!r}")
                i = below[lab]
                s = col.get(i, 0) + c
                if s:
                    col[i] = s
                else:
                    col.pop(i)
            cols.append(col)
        d[n] = SparseMatrix.from_columns(len(gens[n - 1]), cols)
    return ChainComplex({n: len(v) for n, v in gens.items()}, d, {n: list(v) for n, v in gens.items()},
                        complete, name)


def from_matrices(mats: Sequence[Sequence[Sequence[int]]], ranks: Sequence[int] | None = None) -> ChainComplex:
    """Complex C_0 <- C_1 <- ... from dense matrices d_1, d_2, ... (rows = target)."""
    if ranks is None:
        ranks = [len(mats[0]) if mats else 0] + [len(m[0]) if m else 0 for m in mats]
    ranks = list(ranks)
    d = {}
    for n, m in enumerate(mats, start=1):
        sm = SparseMatrix.from_dense(m, ranks[n]) if m else SparseMatrix.zero(ranks[n - 1], ranks[n])
        if sm.nrows != ranks[n - 1] or sm.ncols != ranks[n]:
            raise HomologyError(f"d_{n} has the wrong shape")
        d[n] = sm
    return ChainComplex({n: r for n, r in enumerate(ranks)}, d).validated()


def _vec_add(out: dict, key, c: int) -> None:
    s = out.get(key, 0) + c
    if s:
        out[key] = s
    else:
        out.pop(key, None)


# simplicial chains -----------------------------------------------------------------------

def oriented(vertices: Sequence[int]) -> tuple:
    """(sorted simplex, sign of the sorting permutation); sign 0 on repeated vertices."""
    if len(set(vertices)) != len(vertices):
        return tuple(sorted(vertices)), 0
    sign = 1
    v = list(vertices)
    for i in range(len(v)):
        for j in range(i + 1, len(v)):
            if v[i] > v[j]:
                sign = -sign
    return tuple(sorted(v)), sign


def simplicial_chains(X: GSimplicialComplex, simplices: Iterable[tuple] | None = None) -> ChainComplex:
    """Oriented chains of X (or of the subcomplex given by ``simplices``)."""
    S = X.simplices if simplices is None else frozenset(simplices)
    gens: dict = {}
    for s in sorted(S, key=lambda s: (len(s), s)):
        gens.setdefault(len(s) - 1, []).append(s)
    if not gens:
        return ChainComplex({0: 0}, {}, {0: []})
    for n in range(max(gens) + 1):
        gens.setdefault(n, [])

    def bd(n, s):
        return {s[:i] + s[i + 1:]: (-1) ** i for i in range(len(s))} if n > 0 else {}

    return assemble(gens, bd, complete=True, name="simplicial chains")


def snf_homology(C: ChainComplex, n: int) -> FGAbelianGroup:
    C.validated()
    return C.homology(n)


# bar complex ------------------------------------------------------------------------------

def _tuples_with_weight(weights: Sequence[int], length: int, bound: int | None):
    r = len(weights)
    if bound is None:
        yield from itertools.product(range(r), repeat=length)
        return

    def rec(prefix, w):
        if len(prefix) == length:
            yield tuple(prefix)
            return
        for i in range(r):
            if w + weights[i] <= bound:
                prefix.append(i)
                yield from rec(prefix, w + weights[i])
                prefix.pop()

    yield from rec([], 0)


def bar_complex(A: BasedRing, top: int) -> ChainComplex:
    """C^bar(A) in degrees 0..top: A^{⊗(n+1)} with b′ = Σ_{i<n} (-1)^i d_i.

    For a ring carrying ``weights`` (a truncated graded ring) only tensors of
    total weight up to the truncation are kept; b′ preserves weight, so each
    kept piece agrees with the untruncated graded ring.
    """
    weights = getattr(A, "weights", None)
    bound = max(weights) if weights is not None else None
    count = sum(A.rank ** (n + 1) for n in range(top + 1))
    if weights is None and count > MAX_GENERATORS:
        raise HomologyError(f"bar complex would need {count} generators (cap {MAX_GENERATORS})")
    gens = {n: list(_tuples_with_weight(weights or [0] * A.rank, n + 1, bound)) for n in range(top + 1)}

    def bd(n, t):
        out: dict = {}
        for i in range(n):
            sign = -1 if i % 2 else 1
            for k, c in A.mul_basis(t[i], t[i + 1]):
                _vec_add(out, t[:i] + (k,) + t[i + 2:], sign * c)
        return out

    return assemble(gens, bd, complete=False, name=f"bar({A.name})")


@dataclass
class BarProbe:
    ring: str
    coefficients: str
    degree: int
    values: list  # FGAbelianGroup for degrees 0..degree

    @property
    def vanishes(self) -> bool:
        return all(v.is_zero for v in self.values)

    def first_nonzero(self):
        for n, v in enumerate(self.values):
            if not v.is_zero:
                return n, v
        return None

    def to_json(self) -> dict:
        return {"ring": self.ring, "coefficients": self.coefficients, "truncation": self.degree,
                "values": [v.to_json() for v in self.values], "excision_consistent": self.vanishes}


def bar_tor_probe(A: BasedRing, M="Z", N: int = 3) -> BarProbe:
    """H_0..H_N of M ⊗ C^bar(A), which computes tor^Ã_*(M, A)."""
    if N > 6:
        raise HomologyError("bar probes are limited to degree 6")
    coeff = Coefficients.parse(M)
    C = bar_complex(A, N + 1)
    integral = C.homology_range(N)
    return BarProbe(A.name, str(coeff), N, coeff.apply(integral))


# Hochschild complexes ------------------------------------------------------------------------

def arrow_ends(R: BasedRing, S: GSet) -> tuple:
    """(source, target) of every basis arrow of groupoid_crossed(A, S)."""
    G, n = S.group, S.size
    o = G.order
    src, tgt = [], []
    for idx in range(R.rank):
        rest, s = divmod(idx, n)
        g = rest % o
        src.append(s)
        tgt.append(S.act[g][s])
    return tuple(src), tuple(tgt)


def _cyclic_tuples(r: int, length: int, ends: tuple | None, exclude: int | None = None):
    if ends is None:
        for t in itertools.product(range(r), repeat=length):
            if exclude is None or any(x != exclude for x in t):
                yield t
        return
    src, tgt = ends
    by_tgt: dict = {}
    for i in range(r):
        by_tgt.setdefault(tgt[i], []).append(i)

    def rec(prefix):
        if len(prefix) == length:
            if src[prefix[-1]] == tgt[prefix[0]]:
                yield tuple(prefix)
            return
        for j in by_tgt.get(src[prefix[-1]], ()):
            prefix.append(j)
            yield from rec(prefix)
            prefix.pop()

    for f0 in range(r):
        yield from rec([f0])


def hochschild_boundary(R: BasedRing, coeff: Bimodule | None = None) -> Callable:
    """b on generators (m, r1, ..., rn) (m in R itself when ``coeff`` is None)."""
    if coeff is None:
        left = right = lambda i, j: R.mul_basis(i, j)
    else:
        left = lambda i, m: tuple(coeff.left(i, m).items())
        right = lambda m, i: tuple(coeff.right(m, i).items())

    def bd(n, t):
        out: dict = {}
        if n == 0:
            return out
        for i in range(n):
            sign = -1 if i % 2 else 1
            prod = right(t[0], t[1]) if i == 0 else R.mul_basis(t[i], t[i + 1])
            for k, c in prod:
                _vec_add(out, t[:i] + (k,) + t[i + 2:], sign * c)
        sign = -1 if n % 2 else 1
        for k, c in left(t[n], t[0]):
            _vec_add(out, (k,) + t[1:n], sign * c)
        return out

    return bd


def hochschild_complex(R: BasedRing, N: int, coeff: Bimodule | None = None, ends: tuple | None = None,
                       nonunital: bool | None = None) -> ChainComplex:
    """Hochschild complex in degrees 0..N (cut off above N).

    ``coeff``: a bimodule (e.g. twisted); ``ends``: restrict to cyclically
    composable tuples of arrows (the cyclic nerve of a linear category);
    nonunital rings use the kernel of C(Ã) -> C(Z).
    """
    if nonunital is None:
        nonunital = R.unit is None
    if nonunital and coeff is not None:
        raise HomologyError("bimodule coefficients need a unital ring")
    base, exclude = R, None
    if nonunital:
        base = unitalize(R)
        exclude = R.rank
        if ends is not None:
            raise HomologyError("the cyclic nerve needs a unital category")
    if ends is not None:
        _check_ends(base, ends)
    mrank = coeff.rank if coeff is not None else base.rank
    gens = {}
    total = 0
    for n in range(N + 1):
        if coeff is None:
            lst = list(_cyclic_tuples(base.rank, n + 1, ends, exclude))
        else:
            lst = [(m,) + t for m in range(mrank) for t in itertools.product(range(base.rank), repeat=n)]
        total += len(lst)
        if total > MAX_GENERATORS:
            raise HomologyError(f"Hochschild complex exceeds {MAX_GENERATORS} generators by degree {n}")
        gens[n] = lst
    name = f"HH({R.name}{', ' + coeff.name if coeff is not None else ''})"
    return assemble(gens, hochschild_boundary(base, coeff), complete=False, name=name)


def _check_ends(R: BasedRing, ends: tuple) -> None:
    src, tgt = ends
    for i in range(R.rank):
        for j in range(R.rank):
            prod = R.mul_basis(i, j)
            if prod and src[i] != tgt[j]:
                raise HomologyError("arrows that do not compose have a nonzero product")
            for k, _ in prod:
                if src[k] != src[j] or tgt[k] != tgt[i]:
                    raise HomologyError("a product of arrows has the wrong ends")


def cyclic_nerve_complex(A: BasedRing, S: GSet, N: int) -> ChainComplex:
    """Cyclic nerve of A⋊𝒢^G(S), degrees 0..N."""
    R = groupoid_crossed(A, S, validate=False)
    C = hochschild_complex(R, N, ends=arrow_ends(R, S))
    C.name = f"cyclic nerve of {A.name}⋊G({S.size} points)"
    return C


def hochschild_homology(R: BasedRing, N: int, **kw) -> list:
    """HH_0..HH_N."""
    return hochschild_complex(R, N + 1, **kw).homology_range(N)


def cyclic_operator(t: tuple) -> tuple:
    """t(a0 ⊗ ... ⊗ an) = (-1)^n an ⊗ a0 ⊗ ... ⊗ a(n-1), as (tuple, sign)."""
    n = len(t) - 1
    return (t[-1],) + t[:-1], (-1 if n % 2 else 1)


# conjugacy decomposition ----------------------------------------------------------------

@dataclass
class ConjugacySplit:
    classes: tuple  # conjugacy classes of the grading group
    ranks: dict  # class index -> [rank in degree 0..N]
    totals: list
    closed_b: dict  # class index -> witness or None
    closed_t: dict
    pieces: dict  # class index -> ChainComplex

    @property
    def passed(self) -> bool:
        sums = [sum(r[n] for r in self.ranks.values()) for n in range(len(self.totals))]
        return (sums == self.totals and all(v is None for v in self.closed_b.values())
                and all(v is None for v in self.closed_t.values()))


def conjugacy_split(R: BasedRing, C: ChainComplex) -> ConjugacySplit:
    """Split a Hochschild complex of a group-graded ring by the class of g0⋯gn."""
    if R.grading is None or R.grading_group is None:
        raise HomologyError("conjugacy splitting needs a crossed product (a group-graded ring)")
    G = R.grading_group
    cls = G.class_of
    gr = R.grading

    def klass(t):
        g = G.identity
        for f in t:
            g = G.mul(g, gr[f])
        return cls[g]

    bd = hochschild_boundary(R)
    classes = G.conjugacy_classes
    ranks = {c: [0] * (C.hi + 1) for c in range(len(classes))}
    closed_b = {c: None for c in range(len(classes))}
    closed_t = {c: None for c in range(len(classes))}
    gens: dict = {c: {} for c in range(len(classes))}
    for n in range(C.hi + 1):
        for t in C.labels[n]:
            k = klass(t)
            ranks[k][n] += 1
            gens[k].setdefault(n, []).append(t)
            if closed_b[k] is None:
                for u in bd(n, t):
                    if klass(u) != k:
                        closed_b[k] = {"generator": list(t), "term": list(u)}
                        break
            if closed_t[k] is None and klass(cyclic_operator(t)[0]) != k:
                closed_t[k] = {"generator": list(t)}
    pieces = {}
    for k, g in gens.items():
        for n in range(C.hi + 1):
            g.setdefault(n, [])
        if closed_b[k] is None:
            pieces[k] = assemble(g, bd, complete=False, name=f"class {k}")
    return ConjugacySplit(classes, ranks, [C.rank(n) for n in range(C.hi + 1)], closed_b, closed_t, pieces)


# cyclic homology --------------------------------------------------------------------------

def cyclic_bicomplex(R: BasedRing, top: int) -> ChainComplex:
    """Total complex of the cyclic bicomplex in total degrees 0..top.

    Column p holds C_q(R) = R^{⊗(q+1)}; even columns have b, odd columns -b′;
    1 - t maps odd columns left and the norm N maps even columns left.
    """
    if R.unit is None:
        raise HomologyError("cyclic homology here needs a unital ring")
    count = sum((top - q + 1) * R.rank ** (q + 1) for q in range(top + 1))
    if count > MAX_GENERATORS:
        raise HomologyError(f"cyclic bicomplex would need {count} generators")
    b = hochschild_boundary(R)
    tuples = {q: list(itertools.product(range(R.rank), repeat=q + 1)) for q in range(top + 1)}
    gens = {n: [(p, t) for p in range(n + 1) for t in tuples[n - p]] for n in range(top + 1)}

    def bprime(q, t):
        out: dict = {}
        for i in range(q):
            sign = -1 if i % 2 else 1
            for k, c in R.mul_basis(t[i], t[i + 1]):
                _vec_add(out, t[:i] + (k,) + t[i + 2:], sign * c)
        return out

    def bd(n, gen):
        p, t = gen
        q = len(t) - 1
        out: dict = {}
        if q > 0:
            vert = b(q, t) if p % 2 == 0 else {u: -c for u, c in bprime(q, t).items()}
            for u, c in vert.items():
                _vec_add(out, (p, u), c)
        if p > 0:
            if p % 2 == 1:
                _vec_add(out, (p - 1, t), 1)
                u, s = cyclic_operator(t)
                _vec_add(out, (p - 1, u), -s)
            else:
                u, s = t, 1
                for _ in range(q + 1):
                    _vec_add(out, (p - 1, u), s)
                    u, s2 = cyclic_operator(u)
                    s *= s2
        return out

    return assemble(gens, bd, complete=False, name=f"CC({R.name})")


def cyclic_hc(R: BasedRing, n: int) -> FGAbelianGroup:
    if n > 4:
        raise HomologyError("cyclic homology is limited to degree 4")
    return cyclic_bicomplex(R, n + 1).homology(n)


# group hyperhomology ----------------------------------------------------------------------

@dataclass(eq=False)
class ModuleComplex:
    """A chain complex with a linear action of a subgroup K of G: act[k][n] lists column images."""

    complex: ChainComplex
    group: FiniteGroup
    elements: tuple
    act: dict

    def apply(self, k: int, n: int, v: dict) -> dict:
        cols = self.act[k][n]
        out: dict = {}
        for i, c in v.items():
            for j, a in cols[i].items():
                _vec_add(out, j, c * a)
        return out

    def check(self):
        """First failure of the module axioms or of equivariance, or None."""
        C, G = self.complex, self.group
        for n in C.ranks:
            for i in range(C.rank(n)):
                if self.apply(G.identity, n, {i: 1}) != {i: 1}:
                    return {"identity acts nontrivially": [n, i]}
                for k in self.elements:
                    for l in self.elements:
                        if self.apply(k, n, self.apply(l, n, {i: 1})) != self.apply(G.mul(k, l), n, {i: 1}):
                            return {"not an action": [k, l, n, i]}
        for n, d in C.d.items():
            for k in self.elements:
                for i in range(C.rank(n)):
                    lhs = self.apply(k, n - 1, d.apply({i: 1}))
                    rhs = d.apply(self.apply(k, n, {i: 1}))
                    if lhs != rhs:
                        return {"boundary not equivariant": [k, n, i]}
        return None


def group_hyperhomology(M: ModuleComplex, N: int, check: bool = True) -> list:
    """H_0..H_N(K; C) through the bar resolution, truncated at total degree N+1."""
    if check:
        bad = M.check()
        if bad is not None:
            raise HomologyError(f"module structure is not equivariant: {bad}")
    C, G, K = M.complex, M.group, M.elements
    if C.lo < 0:
        raise HomologyError("hyperhomology expects a complex in nonnegative degrees")
    top = N + 1
    if not C.complete and C.hi < top:
        raise HomologyError(f"the complex is cut off at {C.hi}; degree {top} is needed")
    gens: dict = {}
    for n in range(top + 1):
        lst = []
        for p in range(n + 1):
            q = n - p
            if C.rank(q) == 0:
                continue
            for ks in itertools.product(K, repeat=p):
                for i in range(C.rank(q)):
                    lst.append((ks, q, i))
        gens[n] = lst

    def bd(n, gen):
        ks, q, i = gen
        p = len(ks)
        out: dict = {}
        if p > 0:
            _vec_add(out, (ks[1:], q, i), 1)
            for j in range(1, p):
                merged = ks[:j - 1] + (G.mul(ks[j - 1], ks[j]),) + ks[j + 1:]
                _vec_add(out, (merged, q, i), -1 if j % 2 else 1)
            sign = -1 if p % 2 else 1
            for j, c in M.apply(ks[-1], q, {i: 1}).items():
                _vec_add(out, (ks[:-1], q, j), sign * c)
        if q > 0:
            sign = -1 if p % 2 else 1
            for j, c in C.d[q].apply({i: 1}).items():
                _vec_add(out, (ks, q - 1, j), sign * c)
        return out

    T = assemble(gens, bd, complete=False, name="hyperhomology")
    return T.homology_range(N)


def trivial_module(G: FiniteGroup, elements: Iterable[int], C: ChainComplex) -> ModuleComplex:
    els = tuple(sorted(elements))
    act = {k: {n: [{i: 1} for i in range(C.rank(n))] for n in C.ranks} for k in els}
    return ModuleComplex(C, G, els, act)


# tensor products with simplicial chains ------------------------------------------------------

def _fixed_simplices(X: GSimplicialComplex, H: Iterable[int]) -> list:
    H = list(H)
    fixed = {v for v in range(X.nvertices) if all(X.perms[h][v] == v for h in H)}
    return sorted((s for s in X.simplices if fixed.issuperset(s)), key=lambda s: (len(s), s))


def _move(X: GSimplicialComplex, g: int, s: tuple) -> tuple:
    return oriented([X.perms[g][v] for v in s])


def twisted_module_complex(G: FiniteGroup, X: GSimplicialComplex, R: BasedRing, g: int, N: int) -> ModuleComplex:
    """Chains of X^g ⊗ HH(R, R_g) up to degree N+1 with the centralizer acting diagonally."""
    from .rings import twisted_bimodule

    if R.action is None or len(R.action.elements) != G.order:
        raise HomologyError("the ring needs an action of the whole group")
    Z = tuple(sorted(G.centralizer(g)))
    simp = _fixed_simplices(X, [g])
    top = N + 1
    H = hochschild_complex(R, top, coeff=twisted_bimodule(R, g))
    gens: dict = {}
    for n in range(top + 1):
        gens[n] = [(s, t) for s in simp if len(s) - 1 <= n for t in H.labels[n - len(s) + 1]]
    hb = hochschild_boundary(R, twisted_bimodule(R, g))

    def bd(n, gen):
        s, t = gen
        k = len(s) - 1
        out: dict = {}
        if k > 0:
            for i in range(len(s)):
                _vec_add(out, (s[:i] + s[i + 1:], t), -1 if i % 2 else 1)
        sign = -1 if k % 2 else 1
        for u, c in hb(n - k, t).items():
            _vec_add(out, (s, u), sign * c)
        return out

    C = assemble(gens, bd, complete=False, name=f"X^g ⊗ HH(R, R_{g})")
    index = {n: {lab: i for i, lab in enumerate(C.labels[n])} for n in C.ranks}
    act: dict = {}
    for z in Z:
        act[z] = {}
        mats = R.action.mats[z]
        for n in C.ranks:
            cols = []
            for s, t in C.labels[n]:
                s2, sg = _move(X, z, s)
                col: dict = {(): sg}
                for f in t:
                    nxt: dict = {}
                    for pre, c in col.items():
                        for j, a in mats[f].items():
                            _vec_add(nxt, pre + (j,), c * a)
                    col = nxt
                cols.append({index[n][(s2, u)]: c for u, c in col.items()})
            act[z][n] = cols
    return ModuleComplex(C, G, Z, act)


# the orbit-category coend ------------------------------------------------------------------------

class _SignedUnionFind:
    def __init__(self):
        self.parent: dict = {}
        self.sign: dict = {}  # sign relative to parent
        self.conflict: set = set()

    def find(self, x):
        if x not in self.parent:
            self.parent[x] = x
            self.sign[x] = 1
            return x, 1
        path = []
        while self.parent[x] != x:
            path.append(x)
            x = self.parent[x]
        root = x
        # compress, accumulating signs from the far end
        acc = 1
        for y in reversed(path):
            acc *= self.sign[y]
            self.sign[y] = acc
            self.parent[y] = root
        return root, (self.sign[path[0]] if path else 1)

    def union(self, a, b, s: int) -> None:
        """Record a = s·b."""
        ra, sa = self.find(a)
        rb, sb = self.find(b)
        if ra == rb:
            if sa != s * sb:
                self.conflict.add(ra)
            return
        if ra < rb:
            ra, rb, sa, sb = rb, ra, sb, sa
        # ra = sa·a = sa·s·b = sa·s·sb·rb
        self.parent[ra] = rb
        self.sign[ra] = sa * s * sb


@dataclass
class CoendResult:
    complex: ChainComplex
    values: list  # H_0..H_N
    N: int
    subgroups: tuple


def equivariant_coend(G: FiniteGroup, X: GSimplicialComplex, R: BasedRing, N: int) -> CoendResult:
    """H_0..H_N of the coend over the orbit category of X^(-) ⊗ HH(A(R⋊𝒢^G(G/-))).

    One object per subgroup; each C(G/H) is the cyclic nerve of R⋊𝒢^G(G/H).
    """
    if X.group is None or X.group.order != G.order:
        raise HomologyError("X must carry an action of G")
    if R.action is None or len(R.action.elements) != G.order:
        raise HomologyError("the ring needs an action of the whole group")
    top = N + 1
    subs = G.subgroups
    spaces = []
    for H in subs:
        cs = coset_space(G, H)
        S = cs.gset()
        Rg = groupoid_crossed(R, S, validate=False)
        ends = arrow_ends(Rg, S)
        chains = {q: list(_cyclic_tuples(Rg.rank, q + 1, ends)) for q in range(top + 1)}
        spaces.append((cs, S, Rg, chains, _fixed_simplices(X, H)))
    gens: dict = {n: [] for n in range(top + 1)}
    for hi, (cs, S, Rg, chains, simp) in enumerate(spaces):
        for s in simp:
            k = len(s) - 1
            for n in range(k, top + 1):
                for c in chains[n - k]:
                    gens[n].append((hi, s, c))
    total = sum(len(v) for v in gens.values())
    if total > MAX_GENERATORS:
        raise HomologyError(f"coend needs {total} generators (cap {MAX_GENERATORS})")
    uf = _SignedUnionFind()
    for ki, K in enumerate(subs):
        csK, SK, RK, chainsK, _ = spaces[ki]
        nK = csK.size
        for hi, H in enumerate(subs):
            csH, _, _, _, simpH = spaces[hi]
            nH = csH.size
            for y in range(nH):
                a = csH.section[y]
                if any(csH.act(k, y) != y for k in K):
                    continue
                # φ(gK) = g a H; only the coset of a matters
                phi = [csH.coset_of[G.mul(csK.section[s], a)] for s in range(nK)]
                arrow = []
                for idx in range(RK.rank):
                    rest, s = divmod(idx, nK)
                    arrow.append(rest * nH + phi[s])
                for x in simpH:
                    ax, sg = _move(X, a, x)
                    k = len(x) - 1
                    for n in range(k, top + 1):
                        for c in chainsK[n - k]:
                            uf.union((ki, ax, c), (hi, x, tuple(arrow[f] for f in c)), sg)
    if uf.conflict:
        raise HomologyError("orientation conflict in the coend (is the action admissible?)")
    classes: dict = {n: [] for n in gens}
    for n, lst in gens.items():
        for g in lst:
            root, _ = uf.find(g)
            if root == g:
                classes[n].append(g)
    bds = [hochschild_boundary(sp[2]) for sp in spaces]

    def bd(n, gen):
        hi, s, c = gen
        k = len(s) - 1
        raw: dict = {}
        if k > 0:
            for i in range(len(s)):
                _vec_add(raw, (hi, s[:i] + s[i + 1:], c), -1 if i % 2 else 1)
        sign = -1 if k % 2 else 1
        for u, v in bds[hi](n - k, c).items():
            _vec_add(raw, (hi, s, u), sign * v)
        out: dict = {}
        for lab, v in raw.items():
            root, sg = uf.find(lab)
            _vec_add(out, root, sg * v)
        return out

    C = assemble(classes, bd, complete=False, name="coend")
    return CoendResult(C, C.homology_range(N), N, tuple(tuple(sorted(H)) for H in subs))


# the two-pipeline comparison ----------------------------------------------------------------

def ft_alpha_check(G: FiniteGroup, R: BasedRing, g: int, N: int, S: GSet | None = None) -> dict | None:
    """Check that the map from the Borel-type complex of (Z_g, S^g, HH(R, R_g)) into the
    cyclic nerve of R⋊𝒢^G(S) commutes with boundaries up to degree N.

    Generators (z1..zn, s, x0..xn) map to
    x0⋊(z1⋯zn)⁻¹g ⊗ (z1⋯zn)(x1)⋊z1 ⊗ ... ⊗ zn(xn)⋊zn.
    Returns None or a witness.
    """
    from .groups import regular_gset

    S = S if S is not None else regular_gset(G)
    Z = tuple(sorted(G.centralizer(g)))
    fixed = [s for s in range(S.size) if S.act[g][s] == s]
    Rg = groupoid_crossed(R, S, validate=False)
    target_bd = hochschild_boundary(Rg)
    o, nS, r = G.order, S.size, R.rank
    mats = R.action.mats

    def act(h, v):
        out: dict = {}
        for i, c in v.items():
            for j, a in mats[h][i].items():
                _vec_add(out, j, c * a)
        return out

    def mul(u, v):
        return R.mul(u, v)

    def aidx(a, h, s):
        return (a * o + h) * nS + s

    def alpha(z, s, xs):
        """xs: list of vectors x0..xn; returns a dict over target tuples."""
        n = len(z)
        prod = G.identity
        for zi in z:
            prod = G.mul(prod, zi)
        factors = []
        src0 = S.act[prod][s]
        factors.append({aidx(a, G.mul(G.inv(prod), g), src0): c for a, c in xs[0].items()})
        for i in range(1, n + 1):
            tail = G.identity
            for zi in z[i - 1:]:
                tail = G.mul(tail, zi)
            after = G.identity
            for zi in z[i:]:
                after = G.mul(after, zi)
            src = S.act[after][s]
            factors.append({aidx(a, z[i - 1], src): c for a, c in act(tail, xs[i]).items()})
        out = {(): 1}
        for f in factors:
            nxt: dict = {}
            for pre, c in out.items():
                for k, a in f.items():
                    _vec_add(nxt, pre + (k,), c * a)
            out = nxt
        return out

    def faces(z, s, xs):
        """Σ (-1)^i d_i as a list of (sign, z, s, xs)."""
        n = len(z)
        out = []
        if n == 0:
            return out
        # d_0
        out.append((1, z[1:], s, [mul(xs[0], act(g, xs[1]))] + xs[2:]))
        for i in range(1, n):
            zi = z[:i - 1] + (G.mul(z[i - 1], z[i]),) + z[i + 1:]
            out.append(((-1) ** i, zi, s, xs[:i] + [mul(xs[i], xs[i + 1])] + xs[i + 2:]))
        zn = z[-1]
        new = [act(zn, mul(xs[n], xs[0]))] + [act(zn, x) for x in xs[1:n]]
        out.append(((-1) ** n, z[:-1], S.act[zn][s], new))
        return out

    for n in range(1, N + 1):
        for z in itertools.product(Z, repeat=n):
            for s in fixed:
                for xt in itertools.product(range(r), repeat=n + 1):
                    xs = [{x: 1} for x in xt]
                    lhs: dict = {}
                    for t, c in alpha(z, s, xs).items():
                        for u, v in target_bd(n, t).items():
                            _vec_add(lhs, u, c * v)
                    rhs: dict = {}
                    for sg, z2, s2, xs2 in faces(z, s, xs):
                        for u, v in alpha(z2, s2, xs2).items():
                            _vec_add(rhs, u, sg * v)
                    if lhs != rhs:
                        return {"degree": n, "z": list(z), "s": s, "x": list(xt)}
    return None


@dataclass
class ReiluReport:
    N: int
    representatives: tuple
    lhs: list
    rhs: list
    per_class: dict  # representative -> list of values
    chain_map: dict  # representative -> witness or None

    @property
    def agree(self) -> bool:
        return self.lhs == self.rhs

    @property
    def passed(self) -> bool:
        return self.agree and all(v is None for v in self.chain_map.values())

    def to_json(self) -> dict:
        return {
            "truncation": self.N,
            "representatives": list(self.representatives),
            "coend": [v.to_json() for v in self.lhs],
            "hyperhomology": [v.to_json() for v in self.rhs],
            "per_class": {str(k): [v.to_json() for v in vals] for k, vals in self.per_class.items()},
            "chain_map_witnesses": {str(k): v for k, v in self.chain_map.items()},
            "agree": self.agree,
        }


def verify_reilu(G: FiniteGroup, X: GSimplicialComplex, R: BasedRing, N: int,
                 representatives: Sequence[int] | None = None) -> ReiluReport:
    """Compare the coend with ⊕ over conjugacy classes of hyperhomology of Z_g."""
    classes = G.conjugacy_classes
    if representatives is None:
        reps = tuple(min(c) for c in classes)
    else:
        reps = tuple(representatives)
        if sorted(G.class_of[g] for g in reps) != list(range(len(classes))):
            raise HomologyError("need exactly one representative per conjugacy class")
    lhs = equivariant_coend(G, X, R, N).values
    per_class = {}
    chain_map = {}
    for g in reps:
        M = twisted_module_complex(G, X, R, g, N)
        per_class[g] = group_hyperhomology(M, N)
        chain_map[g] = ft_alpha_check(G, R, g, N)
    rhs = [direct_sum(per_class[g][n] for g in reps) for n in range(N + 1)]
    return ReiluReport(N, reps, lhs, rhs, per_class, chain_map)


# Yoneda -------------------------------------------------------------------------------------

@dataclass
class YonedaReport:
    subgroup: tuple
    coend: list
    cyclic_nerve: list
    plain: list | None

    @property
    def passed(self) -> bool:
        return self.coend == self.cyclic_nerve and (self.plain is None or self.plain == self.coend)


def yoneda_check(G: FiniteGroup, H: Iterable[int], R: BasedRing, N: int, plain_cap: int = 20_000) -> YonedaReport:
    """Coend on X = G/H against HH of the arrow ring of R⋊𝒢^G(G/H).

    The plain Hochschild complex is included when its size stays under
    ``plain_cap`` generators in the top degree.
    """
    from .simplicial import from_gset

    cs = coset_space(G, H)
    S = cs.gset()
    X = from_gset(S)
    coend = equivariant_coend(G, X, R, N).values
    nerve = cyclic_nerve_complex(R, S, N + 1).homology_range(N)
    plain = None
    Rg = groupoid_crossed(R, S, validate=False)
    if Rg.rank ** (N + 2) <= plain_cap:
        plain = hochschild_homology(Rg, N)
    return YonedaReport(tuple(sorted(H)), coend, nerve, plain)


# the L ladder ----------------------------------------------------------------------------------

@dataclass
class LadderResult:
    n: int
    group: FGAbelianGroup
    rank: int
    basis: list  # vectors in A^{⊗(n+2)}


def L_ladder(A: BasedRing, n: int, cap: int = 20_000) -> LadderResult:
    """L_{-1}A = A and L_{k+1}A = ker(A ⊗ L_kA -> L_kA), a ↦ a·(first factor)."""
    if n < -1:
        raise HomologyError("the ladder starts at -1")
    r = A.rank
    basis = [{(i,): 1} for i in range(r)]
    for k in range(-1, n):
        if r * len(basis) > cap:
            raise HomologyError("L ladder exceeds the size cap")
        cols = []
        for a in range(r):
            for v in basis:
                img: dict = {}
                for t, c in v.items():
                    for m, e in A.mul_basis(a, t[0]):
                        _vec_add(img, (m,) + t[1:], c * e)
                cols.append(img)
        rows = sorted({t for col in cols for t in col})
        pos = {t: i for i, t in enumerate(rows)}
        dense = [[0] * len(cols) for _ in rows]
        for j, col in enumerate(cols):
            for t, c in col.items():
                dense[pos[t]][j] = c
        ker = integer_kernel(dense, len(cols)) if rows else [[int(i == j) for j in range(len(cols))]
                                                            for i in range(len(cols))]
        new = []
        for kv in ker:
            vec: dict = {}
            for j, c in enumerate(kv):
                if not c:
                    continue
                a, vi = divmod(j, len(basis))
                for t, e in basis[vi].items():
                    _vec_add(vec, (a,) + t, c * e)
            new.append(vec)
        basis = new
    return LadderResult(n, FGAbelianGroup(len(basis)), len(basis), basis)
