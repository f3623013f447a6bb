"""Finite ordered simplicial complexes with admissible group actions.

Vertices are ``0..n-1`` (with optional labels); a simplex is a sorted tuple of
vertices.  An action assigns a vertex permutation to each element of a
:class:`FiniteGroup`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .groups import FiniteGroup, GSet, coset_space, permutation_group


class ComplexError(ValueError):
    pass


def _faces(s: tuple):
    for k in range(1, len(s) + 1):
        yield from itertools.combinations(s, k)


def closure(simplices: Iterable[tuple]) -> frozenset:
    out = set()
    for s in simplices:
        out.update(_faces(tuple(sorted(s))))
    return frozenset(out)


def sort_simplices(simplices: Iterable[tuple]) -> list:
    """(dimension, lex) order."""
    return sorted(simplices, key=lambda s: (len(s), s))


@dataclass(frozen=True, eq=False)
class GSimplicialComplex:
    nvertices: int
    simplices: frozenset
    group: FiniteGroup | None = None
    perms: tuple | None = None  # element -> vertex permutation tuple
    labels: tuple | None = None

    @cached_property
    def ordered(self) -> list:
        return sort_simplices(self.simplices)

    @cached_property
    def by_dim(self) -> dict:
        out: dict = {}
        for s in self.ordered:
            out.setdefault(len(s) - 1, []).append(s)
        return out

    @property
    def dim(self) -> int:
        return max(self.by_dim) if self.simplices else -1

    @cached_property
    def facets(self) -> list:
        return [s for s in self.ordered
                if not any(len(t) == len(s) + 1 and set(s) <= set(t) for t in self.by_dim.get(len(s), []))]

    def vertex_label(self, v: int):
        return self.labels[v] if self.labels is not None else v

    def act(self, g: int, s: tuple) -> tuple:
        p = self.perms[g]
        return tuple(sorted(p[v] for v in s))

    def stabilizer(self, s: tuple) -> frozenset:
        return frozenset(g for g in self.group.elements if self.act(g, s) == s)

    def check_admissible(self):
        """Return the first (element, simplex) stabilizing but not fixing, or None."""
        if self.group is None:
            return None
        for g in self.group.elements:
            p = self.perms[g]
            for s in self.ordered:
                if self.act(g, s) == s and any(p[v] != v for v in s):
                    return g, s
        return None

    def subcomplex(self, simplices: Iterable[tuple]) -> "GSimplicialComplex":
        sub = closure(simplices)
        if not sub <= self.simplices:
            raise ComplexError("unknown simplex")
        return GSimplicialComplex(self.nvertices, sub, None, None, self.labels)

    def is_locally_finite(self) -> bool:
        # every simplex of a finite complex has a finite closed star
        return True


def build_complex(nvertices: int, facets: Sequence[Sequence[int]], group: FiniteGroup | None = None,
                  perms: Sequence[Sequence[int]] | None = None, labels: Sequence | None = None,
                  require_admissible: bool = True) -> GSimplicialComplex:
    """Validated complex; ``perms[g]`` is the vertex permutation of group element g."""
    for f in facets:
        if not f:
            raise ComplexError("empty facet")
        for v in f:
            if not (0 <= v < nvertices):
                raise ComplexError(f"facet {list(f)} references an unknown vertex")
        if len(set(f)) != len(f):
            raise ComplexError(f"facet {list(f)} repeats a vertex")
    simplices = closure(tuple(f) for f in facets) | frozenset((v,) for v in range(nvertices))
    if group is not None:
        perms = tuple(tuple(int(x) for x in p) for p in perms)
        if len(perms) != group.order:
            raise ComplexError("need one vertex permutation per group element")
        for g in group.elements:
            if sorted(perms[g]) != list(range(nvertices)):
                raise ComplexError("action is not by vertex permutations")
            for h in group.elements:
                gh = perms[group.mul(g, h)]
                if any(gh[v] != perms[g][perms[h][v]] for v in range(nvertices)):
                    raise ComplexError("vertex action is not a group action")
        for p in perms:
            for s in simplices:
                if tuple(sorted(p[v] for v in s)) not in simplices:
                    raise ComplexError("action does not map simplices to simplices")
    X = GSimplicialComplex(nvertices, simplices, group, perms, tuple(labels) if labels is not None else None)
    if require_admissible:
        bad = X.check_admissible()
        if bad is not None:
            raise ComplexError(f"non-admissible action: element {bad[0]} stabilizes {list(bad[1])} "
                               "without fixing it; subdivide first")
    return X


def from_generators(nvertices: int, facets, generators: Sequence[Sequence[int]], **kw) -> GSimplicialComplex:
    """Complex whose group is generated by the given vertex permutations."""
    G = permutation_group(generators, nvertices)
    perms = [G.labels[g] for g in G.elements]
    return build_complex(nvertices, facets, G, perms, **kw)


def simplex(n: int) -> GSimplicialComplex:
    return build_complex(n + 1, [tuple(range(n + 1))])


def boundary_simplex(n: int) -> GSimplicialComplex:
    """∂Δⁿ on n+1 vertices."""
    full = tuple(range(n + 1))
    return build_complex(n + 1, [tuple(v for v in full if v != k) for k in full])


def discrete(points: int, group: FiniteGroup | None = None, perms=None) -> GSimplicialComplex:
    return build_complex(points, [(v,) for v in range(points)], group, perms)


def from_gset(S: GSet) -> GSimplicialComplex:
    """A finite G-set as a 0-dimensional G-complex."""
    perms = [S.act[g] for g in S.group.elements]
    return build_complex(S.size, [(v,) for v in range(S.size)], S.group, perms, labels=S.points)


# operations -----------------------------------------------------------------------

def subdivide(X: GSimplicialComplex) -> GSimplicialComplex:
    """Barycentric subdivision; new vertices are the simplices of X in (dim, lex) order."""
    verts = X.ordered
    pos = {s: i for i, s in enumerate(verts)}
    facets = []
    for top in X.facets:
        for perm in itertools.permutations(top):
            chain = tuple(pos[tuple(sorted(perm[:k]))] for k in range(1, len(top) + 1))
            facets.append(chain)
    perms = None
    if X.group is not None:
        perms = [tuple(pos[X.act(g, s)] for s in verts) for g in X.group.elements]
    return build_complex(len(verts), facets, X.group, perms, labels=[tuple(X.vertex_label(v) for v in s) for s in verts])


@dataclass(frozen=True)
class StarData:
    generated: frozenset
    star: frozenset
    closed_star: frozenset
    link: frozenset


def subcomplex_ops(X: GSimplicialComplex, M: Iterable[tuple]) -> StarData:
    M = [tuple(sorted(s)) for s in M]
    for s in M:
        if s not in X.simplices:
            raise ComplexError(f"unknown simplex {list(s)}")
    gen = closure(M)
    gen_vertices = {v for s in gen if len(s) == 1 for v in s}
    # ⟨τ⟩ meets ⟨M⟩ iff τ shares a vertex with it (both are full subcomplexes generated by simplices)
    star = frozenset(s for s in X.simplices if gen_vertices.intersection(s) and
                     any(f in gen for f in _faces(s)))
    cst = closure(star)
    return StarData(gen, star, cst, cst - star)


def fixed_points(X: GSimplicialComplex, H: Iterable[int]) -> GSimplicialComplex:
    """Subcomplex of simplices fixed pointwise by every element of H (no action kept)."""
    H = list(H)
    if X.group is None:
        raise ComplexError("complex carries no action")
    X.group.check_subgroup(H)
    fixed_v = [v for v in range(X.nvertices) if all(X.perms[h][v] == v for h in H)]
    fv = set(fixed_v)
    simplices = frozenset(s for s in X.simplices if fv.issuperset(s))
    # renumber vertices to 0..k-1 keeping order
    ren = {v: i for i, v in enumerate(fixed_v)}
    simplices = frozenset(tuple(ren[v] for v in s) for s in simplices)
    labels = [X.vertex_label(v) for v in fixed_v]
    return GSimplicialComplex(len(fixed_v), simplices, None, None, tuple(labels))


def induce_space(G: FiniteGroup, H: Iterable[int], X: GSimplicialComplex) -> GSimplicialComplex:
    """G ×_H X as |G/H| tagged copies of X.

    X's action must be indexed by elements of G (``X.group`` is G and only the
    permutations for elements of H are used).
    """
    cs = coset_space(G, H)
    if X.group is None:
        raise ComplexError("induction needs an H-action on X")
    n = X.nvertices
    perms = []
    for g in G.elements:
        p = [0] * (cs.size * n)
        for x in range(cs.size):
            y, h = cs.decompose(G.mul(g, cs.section[x]))
            for v in range(n):
                p[x * n + v] = y * n + X.perms[h][v]
        perms.append(tuple(p))
    facets = [tuple(x * n + v for v in f) for x in range(cs.size) for f in X.facets]
    labels = [(x, X.vertex_label(v)) for x in range(cs.size) for v in range(n)]
    return build_complex(cs.size * n, facets, G, perms, labels=labels)


def with_subgroup_action(X: GSimplicialComplex, G: FiniteGroup, perms: dict) -> GSimplicialComplex:
    """Attach an action of a subgroup of G given as {element of G: permutation}.

    Elements not listed get the identity permutation; only the listed ones
    are meaningful (used to feed :func:`induce_space`).
    """
    ident = tuple(range(X.nvertices))
    full = tuple(tuple(perms.get(g, ident)) for g in G.elements)
    return GSimplicialComplex(X.nvertices, X.simplices, G, full, X.labels)


def is_family(G: FiniteGroup, family: Iterable[frozenset]) -> bool:
    fam = {frozenset(f) for f in family}
    if not fam:
        return False
    for F in fam:
        if not G.is_subgroup(F):
            return False
        for g in G.elements:
            if G.conjugate_subgroup(g, F) not in fam:
                return False
        for K in G.subgroups:
            if K <= F and K not in fam:
                return False
    return True


def family_check(X: GSimplicialComplex, family: Iterable[Iterable[int]]) -> bool:
    if X.group is None:
        raise ComplexError("complex carries no action")
    fam = {frozenset(f) for f in family}
    if not is_family(X.group, fam):
        raise ComplexError("not a family of subgroups (needs closure under conjugation and subgroups)")
    return all(X.stabilizer(s) in fam for s in X.simplices)


def subgroups_of_conjugates(G: FiniteGroup, H: Iterable[int]) -> list:
    conj = {G.conjugate_subgroup(g, H) for g in G.elements}
    return [K for K in G.subgroups if any(K <= C for C in conj)]


def simplicial_map_check(X: GSimplicialComplex, Y: GSimplicialComplex, f: Sequence[int]) -> None:
    for s in X.simplices:
        img = tuple(sorted(set(f[v] for v in s)))
        if img not in Y.simplices:
            raise ComplexError(f"vertex map does not send {list(s)} to a simplex")
