"""Finite groups given by multiplication tables, cosets, double cosets and G-sets.

Elements are the integers ``0..order-1``; ``labels`` keeps a printable name for
each of them.  Every derived object is computed by exhaustive enumeration, and
all choices (section representatives, class representatives) are minimal with
respect to the integer order so that results are reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Sequence

MAX_ORDER = 720


class GroupError(ValueError):
    """Raised for invalid group data or non-subgroups."""


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    labels: tuple
    table: tuple  # table[a][b] = a*b
    name: str = ""

    def __post_init__(self):
        n = len(self.labels)
        if n == 0 or n > MAX_ORDER:
            raise GroupError(f"group order must be in 1..{MAX_ORDER}, got {n}")
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise GroupError("multiplication table has the wrong shape")
        for row in self.table:
            for v in row:
                if not (0 <= v < n):
                    raise GroupError("table entry out of range")

    # basic structure ---------------------------------------------------
    @property
    def order(self) -> int:
        return len(self.labels)

    @property
    def elements(self) -> range:
        return range(self.order)

    @cached_property
    def identity(self) -> int:
        n = self.order
        for e in range(n):
            if all(self.table[e][a] == a and self.table[a][e] == a for a in range(n)):
                return e
        raise GroupError("table has no identity element")

    @cached_property
    def inverses(self) -> tuple:
        e = self.identity
        inv = []
        for a in range(self.order):
            row = self.table[a]
            for b in range(self.order):
                if row[b] == e and self.table[b][a] == e:
                    inv.append(b)
                    break
            else:
                raise GroupError(f"element {self.labels[a]!r} has no inverse")
        return tuple(inv)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def prod(self, elems: Iterable[int]) -> int:
        r = self.identity
        for g in elems:
            r = self.table[r][g]
        return r

    def conj(self, g: int, h: int) -> int:
        """g h g^-1."""
        return self.table[self.table[g][h]][self.inverses[g]]

    def validate(self) -> None:
        n = self.order
        t = self.table
        _ = self.identity
        _ = self.inverses
        for a in range(n):
            ta = t[a]
            for b in range(n):
                ab = ta[b]
                tab = t[ab]
                tb = t[b]
                for c in range(n):
                    if tab[c] != ta[tb[c]]:
                        raise GroupError(
                            f"table is not associative at ({self.labels[a]!r}, "
                            f"{self.labels[b]!r}, {self.labels[c]!r})"
                        )

    def index(self, label: Hashable) -> int:
        return self._label_index[label]

    @cached_property
    def _label_index(self) -> dict:
        return {lab: i for i, lab in enumerate(self.labels)}

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name or 'order ' + str(self.order)})"

    # subgroups ---------------------------------------------------------
    def is_subgroup(self, elems: Iterable[int]) -> bool:
        s = set(elems)
        if self.identity not in s:
            return False
        return all(self.table[a][b] in s for a in s for b in s)

    def check_subgroup(self, elems: Iterable[int]) -> frozenset:
        s = frozenset(elems)
        if not s or not all(0 <= a < self.order for a in s):
            raise GroupError("subgroup elements out of range")
        if not self.is_subgroup(s):
            raise GroupError("subset is not closed under multiplication and inverses")
        return s

    def generate(self, gens: Iterable[int]) -> frozenset:
        """Subgroup generated by ``gens``."""
        out = {self.identity}
        frontier = [self.identity]
        gens = list(gens)
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    b = self.table[a][g]
                    if b not in out:
                        out.add(b)
                        nxt.append(b)
            frontier = nxt
        return frozenset(out)

    @cached_property
    def subgroups(self) -> tuple:
        """All subgroups, sorted by (order, sorted elements)."""
        found = {frozenset([self.identity])}
        frontier = list(found)
        while frontier:
            nxt = []
            for s in frontier:
                for g in self.elements:
                    if g in s:
                        continue
                    t = self.generate(list(s) + [g])
                    if t not in found:
                        found.add(t)
                        nxt.append(t)
            frontier = nxt
        return tuple(sorted(found, key=lambda s: (len(s), sorted(s))))

    # conjugacy ---------------------------------------------------------
    @cached_property
    def conjugacy_classes(self) -> tuple:
        """Classes as sorted tuples, ordered by their minimal element."""
        seen = set()
        classes = []
        for a in self.elements:
            if a in seen:
                continue
            cls = sorted({self.conj(g, a) for g in self.elements})
            seen.update(cls)
            classes.append(tuple(cls))
        return tuple(classes)

    @cached_property
    def class_of(self) -> tuple:
        out = [0] * self.order
        for i, cls in enumerate(self.conjugacy_classes):
            for a in cls:
                out[a] = i
        return tuple(out)

    def centralizer(self, g: int) -> frozenset:
        t = self.table
        return frozenset(h for h in self.elements if t[h][g] == t[g][h])

    def normalizer(self, sub: Iterable[int]) -> frozenset:
        s = frozenset(sub)
        return frozenset(g for g in self.elements if frozenset(self.conj(g, h) for h in s) == s)

    def conjugate_subgroup(self, g: int, sub: Iterable[int]) -> frozenset:
        return frozenset(self.conj(g, h) for h in sub)

    @cached_property
    def generators(self) -> tuple:
        """A small generating set, chosen greedily in element order."""
        gens = []
        sub = frozenset([self.identity])
        for g in self.elements:
            if g not in sub:
                gens.append(g)
                sub = self.generate(gens)
                if len(sub) == self.order:
                    break
        return tuple(gens)

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != self.identity:
            x = self.table[x][g]
            k += 1
        return k


# constructors ------------------------------------------------------------

def cyclic(n: int) -> FiniteGroup:
    if not (1 <= n <= MAX_ORDER):
        raise GroupError(f"cyclic order must be in 1..{MAX_ORDER}")
    table = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    return FiniteGroup(tuple(range(n)), table, f"cyclic:{n}")


def _compose(p: tuple, q: tuple) -> tuple:
    return tuple(p[q[i]] for i in range(len(q)))


def symmetric(n: int) -> FiniteGroup:
    """S_n on {0..n-1}; elements are permutation tuples in lexicographic order."""
    if not (1 <= n <= 6):
        raise GroupError("symmetric degree must be in 1..6")
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = tuple(tuple(index[_compose(p, q)] for q in perms) for p in perms)
    return FiniteGroup(tuple(perms), table, f"symmetric:{n}")


def from_table(table: Sequence[Sequence[int]], name: str = "table") -> FiniteGroup:
    t = tuple(tuple(int(v) for v in row) for row in table)
    g = FiniteGroup(tuple(range(len(t))), t, name)
    g.validate()
    return g


def permutation_group(gens: Sequence[Sequence[int]], degree: int | None = None) -> FiniteGroup:
    """Group generated by permutations of ``{0..degree-1}``; labels are the tuples."""
    gens = [tuple(int(v) for v in p) for p in gens]
    if degree is None:
        degree = len(gens[0]) if gens else 0
    for p in gens:
        if sorted(p) != list(range(degree)):
            raise GroupError(f"{p} is not a permutation of {degree} points")
    ident = tuple(range(degree))
    elems = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = _compose(a, g)
                if b not in elems:
                    if len(elems) >= MAX_ORDER:
                        raise GroupError("generated group is too large")
                    elems.add(b)
                    nxt.append(b)
        frontier = nxt
    perms = sorted(elems)
    index = {p: i for i, p in enumerate(perms)}
    table = tuple(tuple(index[_compose(p, q)] for q in perms) for p in perms)
    return FiniteGroup(tuple(perms), table, "permutations")


def make_group(spec) -> FiniteGroup:
    """Parse ``"cyclic:n"``, ``"symmetric:n"`` or ``{"table": [[...]]}``."""
    if isinstance(spec, FiniteGroup):
        return spec
    if isinstance(spec, str):
        kind, _, arg = spec.partition(":")
        try:
            n = int(arg)
        except ValueError:
            raise GroupError(f"bad group spec {spec!r}") from None
        if kind == "cyclic":
            return cyclic(n)
        if kind == "symmetric":
            return symmetric(n)
        raise GroupError(f"unknown group kind {kind!r}")
    if isinstance(spec, dict) and "table" in spec:
        return from_table(spec["table"])
    raise GroupError(f"bad group spec {spec!r}")


# cosets --------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class CosetSpace:
    """Left cosets gH with a pointed section (the coset H is represented by e)."""

    group: FiniteGroup
    subgroup: frozenset
    cosets: tuple  # tuple of sorted tuples; cosets[0] is H
    section: tuple  # representative of each coset
    coset_of: tuple  # element -> coset index

    @property
    def size(self) -> int:
        return len(self.cosets)

    def rep(self, x: int) -> int:
        return self.section[x]

    def decompose(self, g: int) -> tuple:
        """Return (x, h) with g = section[x] * h and h in H."""
        x = self.coset_of[g]
        G = self.group
        return x, G.mul(G.inv(self.section[x]), g)

    def act(self, g: int, x: int) -> int:
        """Index of g * (coset x)."""
        return self.coset_of[self.group.mul(g, self.section[x])]

    def with_section(self, section: Sequence[int]) -> "CosetSpace":
        section = tuple(section)
        if len(section) != self.size:
            raise GroupError("section has the wrong length")
        for x, s in enumerate(section):
            if self.coset_of[s] != x:
                raise GroupError("section element lies in the wrong coset")
        if section[0] != self.group.identity:
            raise GroupError("section is not pointed")
        return CosetSpace(self.group, self.subgroup, self.cosets, section, self.coset_of)

    def gset(self) -> "GSet":
        G = self.group
        act = tuple(tuple(self.act(g, x) for x in range(self.size)) for g in G.elements)
        return GSet(G, tuple(range(self.size)), act)


def coset_space(G: FiniteGroup, H: Iterable[int], ambient: Iterable[int] | None = None) -> CosetSpace:
    """Left cosets of H in the subgroup ``ambient`` (default G).

    Elements outside the ambient subgroup get coset index -1.
    """
    H = G.check_subgroup(H)
    L = G.check_subgroup(ambient) if ambient is not None else frozenset(G.elements)
    if not H <= L:
        raise GroupError("subgroup is not contained in the ambient subgroup")
    coset_of = [-1] * G.order
    cosets = []
    for g in sorted(L):
        if coset_of[g] >= 0:
            continue
        c = tuple(sorted(G.mul(g, h) for h in H))
        for a in c:
            coset_of[a] = len(cosets)
        cosets.append(c)
    # cosets are discovered in order of their minimal element, so cosets[0] = H
    section = tuple(c[0] for c in cosets)
    assert section[0] == G.identity
    return CosetSpace(G, H, tuple(cosets), section, tuple(coset_of))


def alternative_section(cs: CosetSpace) -> CosetSpace:
    """The pointed section using the largest element of every other coset."""
    return cs.with_section((cs.group.identity,) + tuple(c[-1] for c in cs.cosets[1:]))


@dataclass(frozen=True)
class DoubleCoset:
    theta: int
    elements: tuple
    h_theta: frozenset  # H ∩ θKθ^-1
    k_theta_inv: frozenset  # θ^-1Hθ ∩ K


def double_cosets(G: FiniteGroup, H: Iterable[int], K: Iterable[int]) -> tuple:
    H = G.check_subgroup(H)
    K = G.check_subgroup(K)
    seen = set()
    out = []
    for g in G.elements:
        if g in seen:
            continue
        elems = sorted({G.mul(G.mul(h, g), k) for h in H for k in K})
        seen.update(elems)
        ti = G.inv(g)
        h_theta = H & G.conjugate_subgroup(g, K)
        k_theta = K & G.conjugate_subgroup(ti, H)
        out.append(DoubleCoset(g, tuple(elems), h_theta, k_theta))
    return tuple(out)


@dataclass(frozen=True)
class SubgroupData:
    cosets: CosetSpace
    double_cosets: tuple | None
    conjugacy_classes: tuple
    centralizers: dict


def subgroup_data(G: FiniteGroup, H: Iterable[int], K: Iterable[int] | None = None) -> SubgroupData:
    cs = coset_space(G, H)
    dc = double_cosets(G, H, K) if K is not None else None
    cents = {cls[0]: G.centralizer(cls[0]) for cls in G.conjugacy_classes}
    return SubgroupData(cs, dc, G.conjugacy_classes, cents)


# G-sets and transport groupoids ------------------------------------------------

@dataclass(frozen=True, eq=False)
class GSet:
    """A finite G-set; ``act[g][i]`` is the index of g·points[i]."""

    group: FiniteGroup
    points: tuple
    act: tuple

    def __post_init__(self):
        G = self.group
        n = len(self.points)
        if len(self.act) != G.order or any(len(r) != n for r in self.act):
            raise GroupError("action table has the wrong shape")
        e = G.identity
        if any(self.act[e][i] != i for i in range(n)):
            raise GroupError("identity does not act trivially")
        for g in G.elements:
            ag = self.act[g]
            if sorted(ag) != list(range(n)):
                raise GroupError("group element does not act by a bijection")
            # compatibility on generators implies it for all pairs
            for h in G.generators:
                gh = self.act[G.mul(g, h)]
                ah = self.act[h]
                if any(gh[i] != ag[ah[i]] for i in range(n)):
                    raise GroupError("action is not compatible with the group law")

    @property
    def size(self) -> int:
        return len(self.points)

    def stabilizer(self, i: int) -> frozenset:
        return frozenset(g for g in self.group.elements if self.act[g][i] == i)

    def fixed(self, sub: Iterable[int]) -> tuple:
        sub = list(sub)
        return tuple(i for i in range(self.size) if all(self.act[h][i] == i for h in sub))

    def orbits(self) -> tuple:
        seen = set()
        out = []
        for i in range(self.size):
            if i in seen:
                continue
            orb = sorted({self.act[g][i] for g in self.group.elements})
            seen.update(orb)
            out.append(tuple(orb))
        return tuple(out)


def point_gset(G: FiniteGroup) -> GSet:
    return GSet(G, (0,), tuple((0,) for _ in G.elements))


def regular_gset(G: FiniteGroup) -> GSet:
    return GSet(G, tuple(G.elements), tuple(tuple(G.table[g]) for g in G.elements))


def gset_from_perms(G: FiniteGroup, perms: dict) -> GSet:
    """G-set from a map element -> permutation tuple."""
    n = len(next(iter(perms.values())))
    act = tuple(tuple(perms[g]) for g in G.elements)
    return GSet(G, tuple(range(n)), act)


def pushout(A: GSet, B: GSet, X: GSet, i: Sequence[int], f: Sequence[int]) -> tuple:
    """Pushout of B <-i- A -f-> X with i injective and equivariant.

    Returns ``(Y, jB, jX)`` where Y's points are X's points followed by the
    points of B outside the image of i.
    """
    G = A.group
    if len(set(i)) != len(i):
        raise GroupError("pushout needs an injective leg")
    for g in G.elements:
        for a in range(A.size):
            if B.act[g][i[a]] != i[A.act[g][a]] or X.act[g][f[a]] != f[A.act[g][a]]:
                raise GroupError("pushout legs are not equivariant")
    image = {b: a for a, b in enumerate(i)}
    extra = [b for b in range(B.size) if b not in image]
    jB = {}
    for b in range(B.size):
        jB[b] = f[image[b]] if b in image else X.size + extra.index(b)
    jX = list(range(X.size))
    pts = tuple(("x", p) for p in range(X.size)) + tuple(("b", b) for b in extra)
    act = []
    for g in G.elements:
        row = list(X.act[g])
        for b in extra:
            row.append(jB[B.act[g][b]])
        act.append(tuple(row))
    Y = GSet(G, pts, tuple(act))
    return Y, tuple(jB[b] for b in range(B.size)), tuple(jX)


def disjoint_union(parts: Sequence[GSet]) -> GSet:
    G = parts[0].group
    offsets, n = [], 0
    for P in parts:
        offsets.append(n)
        n += P.size
    pts = tuple((k, p) for k, P in enumerate(parts) for p in P.points)
    act = tuple(tuple(o + x for o, P in zip(offsets, parts) for x in P.act[g]) for g in G.elements)
    return GSet(G, pts, act)


def random_gset(G: FiniteGroup, rng, max_orbits: int = 3) -> GSet:
    """Disjoint union of coset spaces G/K for random subgroups K."""
    subs = G.subgroups
    return disjoint_union([coset_space(G, rng.choice(subs)).gset() for _ in range(rng.randint(1, max_orbits))])


def random_equivariant_map(A: GSet, X: GSet, rng) -> tuple | None:
    """A random G-map A -> X, built orbit by orbit, or None if there is none."""
    G = A.group
    f: dict = {}
    for orb in A.orbits():
        a = orb[0]
        stab = A.stabilizer(a)
        targets = [x for x in range(X.size) if all(X.act[h][x] == x for h in stab)]
        if not targets:
            return None
        x = rng.choice(targets)
        for g in G.elements:
            f[A.act[g][a]] = X.act[g][x]
    return tuple(f[a] for a in range(A.size))


def fixed_points_pushout_check(G: FiniteGroup, rng) -> dict | None:
    """Draw a pushout B <- A -> X along an inclusion and compare fixed points.

    For every subgroup H, Y^H must be the pushout of B^H <- A^H -> X^H: the
    points of X^H together with the H-fixed points of B outside A, and
    nothing else.  Returns None or a witness.
    """
    A = random_gset(G, rng)
    extra = random_gset(G, rng)
    B = disjoint_union([A, extra])
    i = tuple(range(A.size))
    X = random_gset(G, rng)
    f = random_equivariant_map(A, X, rng)
    if f is None:
        return None
    Y, jB, jX = pushout(A, B, X, i, f)
    for H in G.subgroups:
        expect = {jX[x] for x in X.fixed(H)} | {jB[b] for b in B.fixed(H) if b >= A.size}
        if set(Y.fixed(H)) != expect or len(expect) != len(X.fixed(H)) + len(B.fixed(H)) - len(A.fixed(H)):
            return {"subgroup": sorted(H), "fixed": sorted(Y.fixed(H)), "expected": sorted(expect)}
    return None


@dataclass(frozen=True, eq=False)
class TransportGroupoid:
    """Objects are the points of a G-set; hom(s, t) = {g : g·s = t}."""

    gset: GSet
    arrows: tuple = field(init=False)  # list of (g, source) sorted by (source, g)

    def __post_init__(self):
        S = self.gset
        arrows = tuple((g, s) for s in range(S.size) for g in S.group.elements)
        object.__setattr__(self, "arrows", arrows)

    @property
    def group(self) -> FiniteGroup:
        return self.gset.group

    @property
    def objects(self) -> range:
        return range(self.gset.size)

    def target(self, g: int, s: int) -> int:
        return self.gset.act[g][s]

    def hom(self, s: int, t: int) -> tuple:
        return tuple(g for g in self.group.elements if self.gset.act[g][s] == t)

    def compose(self, second: tuple, first: tuple):
        """second ∘ first for arrows written (g, source); None if not composable."""
        g2, s2 = second
        g1, s1 = first
        if self.target(g1, s1) != s2:
            return None
        return (self.group.mul(g2, g1), s1)


def transport_groupoid(G: FiniteGroup, S: GSet) -> TransportGroupoid:
    if S.group is not G:
        raise GroupError("G-set is over a different group")
    return TransportGroupoid(S)
