"""Finite Z-linear categories, arrow rings, the cone ring by rewriting, and the cone homotopy.

Arrows are numbered globally.  ``comp[(g, f)]`` is the composite g∘f (f first)
as a sparse combination of arrows and is only stored for composable pairs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .groups import FiniteGroup, GSet
from .rings import BasedRing, _ring, vadd


class CategoryError(ValueError):
    pass


@dataclass(eq=False)
class LinCat:
    objects: tuple
    arrows: tuple  # (label, source, target) with source/target object indices
    comp: dict  # (g, f) -> {h: c} for target(f) == source(g)
    identities: tuple  # object index -> {arrow: c}
    name: str = ""
    group: FiniteGroup | None = None  # grading group, for crossed categories
    grading: tuple | None = None  # arrow -> group element

    def source(self, f: int) -> int:
        return self.arrows[f][1]

    def target(self, f: int) -> int:
        return self.arrows[f][2]

    def composable(self, g: int, f: int) -> bool:
        """True when g∘f is defined, i.e. f ends where g starts."""
        return self.arrows[f][2] == self.arrows[g][1]

    def compose(self, g: int, f: int) -> dict:
        return self.comp.get((g, f), {})

    def hom(self, a: int, b: int) -> tuple:
        return tuple(i for i, (_, s, t) in enumerate(self.arrows) if s == a and t == b)

    def compose_vec(self, u: dict, v: dict) -> dict:
        """u∘v for combinations of arrows; non-composable terms vanish."""
        out: dict = {}
        for g, a in u.items():
            for f, b in v.items():
                if self.composable(g, f):
                    out = vadd(out, self.compose(g, f), a * b)
        return out

    def validate(self) -> "LinCat":
        n = len(self.arrows)
        for f in range(n):
            s, t = self.source(f), self.target(f)
            if not (0 <= s < len(self.objects) and 0 <= t < len(self.objects)):
                raise CategoryError(f"arrow {f} has an unknown endpoint")
        for (g, f), v in self.comp.items():
            if not self.composable(g, f):
                raise CategoryError(f"composite stored for non-composable pair ({g}, {f})")
            for h in v:
                if self.source(h) != self.source(f) or self.target(h) != self.target(g):
                    raise CategoryError(f"composite of ({g}, {f}) has the wrong endpoints")
        for a, idv in enumerate(self.identities):
            for h in idv:
                if self.source(h) != a or self.target(h) != a:
                    raise CategoryError(f"identity of object {a} is not an endomorphism")
        for f in range(n):
            if self.compose_vec(self.identities[self.target(f)], {f: 1}) != {f: 1}:
                raise CategoryError(f"left identity law fails for arrow {f}")
            if self.compose_vec({f: 1}, self.identities[self.source(f)]) != {f: 1}:
                raise CategoryError(f"right identity law fails for arrow {f}")
        for f in range(n):
            for g in range(n):
                if not self.composable(g, f):
                    continue
                gf = self.compose(g, f)
                for h in range(n):
                    if not self.composable(h, g):
                        continue
                    if self.compose_vec({h: 1}, gf) != self.compose_vec(self.compose(h, g), {f: 1}):
                        raise CategoryError(f"composition not associative on ({h}, {g}, {f})")
        return self


# constructors ---------------------------------------------------------------------

def from_ring(R: BasedRing, obj="*") -> LinCat:
    """One-object category with endomorphism ring R (R must be unital)."""
    if R.unit is None:
        raise CategoryError("a one-object category needs a unital ring")
    arrows = tuple((b, 0, 0) for b in R.basis)
    comp = {(g, f): dict(R.mul_basis(g, f)) for g in range(R.rank) for f in range(R.rank) if R.mul_basis(g, f)}
    return LinCat((obj,), arrows, comp, (dict(R.unit),), name=R.name).validate()


def disjoint_union(cats: Sequence[LinCat]) -> LinCat:
    objects, arrows, comp, idents = [], [], {}, []
    for k, C in enumerate(cats):
        o, a = len(objects), len(arrows)
        objects.extend((k, x) for x in C.objects)
        arrows.extend(((k, lab), s + o, t + o) for lab, s, t in C.arrows)
        for (g, f), v in C.comp.items():
            comp[(g + a, f + a)] = {h + a: c for h, c in v.items()}
        idents.extend({h + a: c for h, c in idv.items()} for idv in C.identities)
    return LinCat(tuple(objects), tuple(arrows), comp, tuple(idents), "⊔").validate()


def path_category(objects: Sequence, edges: Sequence[tuple]) -> LinCat:
    """Free Z-linear category on an acyclic quiver; ``edges`` are (label, src, tgt) by object label."""
    objs = tuple(objects)
    pos = {o: i for i, o in enumerate(objs)}
    out_edges = {i: [] for i in range(len(objs))}
    for lab, s, t in edges:
        out_edges[pos[s]].append((lab, pos[t]))
    # paths as tuples of edge labels in travel order
    paths = []
    for i in range(len(objs)):
        paths.append(((), i, i))
    frontier = list(paths)
    while frontier:
        nxt = []
        for p, s, t in frontier:
            for lab, t2 in out_edges[t]:
                q = (p + (lab,), s, t2)
                if len(q[0]) > len(objs) * max(1, len(edges)):
                    raise CategoryError("quiver has a cycle")
                nxt.append(q)
        paths.extend(nxt)
        frontier = nxt
    index = {(p, s): k for k, (p, s, t) in enumerate(paths)}
    arrows = tuple(((("id", objs[s]) if not p else "·".join(map(str, p))), s, t) for p, s, t in paths)
    comp = {}
    for gi, (pg, sg, tg) in enumerate(paths):
        for fi, (pf, sf, tf) in enumerate(paths):
            if tf == sg:
                comp[(gi, fi)] = {index[(pf + pg, sf)]: 1}
    idents = tuple({index[((), i)]: 1} for i in range(len(objs)))
    return LinCat(objs, arrows, comp, idents, "paths").validate()


def crossed_category(R: BasedRing, S: GSet) -> LinCat:
    """R⋊𝒢^G(S): arrows (r, g, s): s → g·s, composing by (a,g)(b,h) = a·g(b) ⋊ gh."""
    if R.action is None or R.unit is None:
        raise CategoryError("crossed category needs a unital ring with an action")
    G = S.group
    o, r, n = G.order, R.rank, S.size
    act = R.action

    def idx(a, g, s):
        return (a * o + g) * n + s

    arrows = tuple(((R.basis[a], G.labels[g], S.points[s]), s, S.act[g][s])
                   for a in range(r) for g in G.elements for s in range(n))
    comp = {}
    for a in range(r):
        for g in G.elements:
            gm = act.mats[g]
            for s in range(n):
                for b in range(r):
                    prod = R.mul({a: 1}, gm[b])
                    if not prod:
                        continue
                    for h in G.elements:
                        for t in range(n):
                            if S.act[h][t] == s:
                                comp[(idx(a, g, s), idx(b, h, t))] = {idx(k, G.mul(g, h), t): c
                                                                      for k, c in prod.items()}
    idents = tuple({idx(k, G.identity, s): c for k, c in R.unit.items()} for s in range(n))
    grading = tuple(g for a in range(r) for g in G.elements for s in range(n))
    return LinCat(tuple(S.points), arrows, comp, idents, f"{R.name}⋊G", G, grading)


def from_spec(spec: dict) -> LinCat:
    """Category from JSON: objects, arrows [[label, src, tgt]], comp [[g, f, h, c]...], identities."""
    if "path" in spec:
        return path_category(spec["objects"], [tuple(e) for e in spec["path"]])
    objs = tuple(spec["objects"])
    pos = {o: i for i, o in enumerate(objs)}
    arrows = tuple((lab, pos[s], pos[t]) for lab, s, t in spec["arrows"])
    labels = {lab: i for i, (lab, _, _) in enumerate(arrows)}
    comp: dict = {}
    for g, f, h, c in spec.get("comp", []):
        key = (labels[g], labels[f])
        comp[key] = vadd(comp.get(key, {}), {labels[h]: int(c)})
    idents = tuple({labels[spec["identities"][o]]: 1} for o in objs)
    return LinCat(objs, arrows, comp, idents, spec.get("name", "category")).validate()


# arrow ring -----------------------------------------------------------------------

def arrow_ring(C: LinCat, validate: bool = True) -> BasedRing:
    """The ring of all arrows: f·g = f∘g when composable, else 0; unit Σ 1_a."""
    table = {}
    for (g, f), v in C.comp.items():
        if v:
            table[(g, f)] = dict(v)
    unit: dict = {}
    for idv in C.identities:
        unit = vadd(unit, idv)
    labels = tuple(lab for lab, _, _ in C.arrows)
    if len(set(labels)) != len(labels):
        labels = tuple(C.arrows)
    return _ring(labels, table, unit, None, C.grading, f"A({C.name})", validate, C.group)


# the cone ring via rewriting -------------------------------------------------------------

def _leftmost_composable(C: LinCat, w: tuple):
    for i in range(len(w) - 1):
        if C.composable(w[i], w[i + 1]):
            return i
    return None


def cone_normal_form(C: LinCat, x, rng: random.Random | None = None) -> dict:
    """Normal form of a word or combination of words in the cone ring.

    ``x`` is a tuple of arrows or a dict word -> coefficient.  Adjacent
    composable letters g⊗f (f ending where g starts) are replaced by g∘f until
    none remain.  With ``rng`` a random redex is chosen at each step instead of
    the leftmost one (used to test confluence).
    """
    todo = dict({tuple(x): 1}) if isinstance(x, (tuple, list)) else dict(x)
    out: dict = {}
    while todo:
        w, c = todo.popitem()
        if not c:
            continue
        if rng is None:
            i = _leftmost_composable(C, w)
        else:
            red = [k for k in range(len(w) - 1) if C.composable(w[k], w[k + 1])]
            i = rng.choice(red) if red else None
        if i is None:
            s = out.get(w, 0) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
            continue
        for h, d in C.compose(w[i], w[i + 1]).items():
            nw = w[:i] + (h,) + w[i + 2:]
            s = todo.get(nw, 0) + c * d
            if s:
                todo[nw] = s
            else:
                todo.pop(nw, None)
    return out


def cone_mul(C: LinCat, u: dict, v: dict) -> dict:
    raw: dict = {}
    for w1, a in u.items():
        for w2, b in v.items():
            w = w1 + w2
            raw[w] = raw.get(w, 0) + a * b
    return cone_normal_form(C, raw)


def projection_p(C: LinCat, w: dict) -> dict:
    """Multiply out the letters of each word in the arrow ring."""
    out: dict = {}
    for word, c in w.items():
        acc = {word[0]: 1}
        for f in word[1:]:
            acc = C.compose_vec(acc, {f: 1})
        out = vadd(out, acc, c)
    return out


# cone homotopy ------------------------------------------------------------------------

PLUS = "+"


def _poly(coeffs: dict) -> dict:
    return {k: v for k, v in coeffs.items() if v}


# t-polynomials as dict degree -> int
_ALPHA = _poly({2: 2, 4: -1})            # -t(t^3 - 2t)
_BETA = _poly({1: -1, 3: 1})             # t(t^2 - 1)
_GAMMA = _poly({1: -2, 3: 3, 5: -1})     # (1 - t^2)(t^3 - 2t)
_DELTA = _poly({0: 1, 2: -2, 4: 1})      # (1 - t^2)^2


def _entry_mul(C: LinCat, x: dict, y: dict) -> dict:
    """Product of entries: dicts degree -> cone element."""
    out: dict = {}
    for d1, u in x.items():
        for d2, v in y.items():
            p = cone_mul(C, u, v)
            if p:
                cur = out.get(d1 + d2, {})
                for w, c in p.items():
                    s = cur.get(w, 0) + c
                    if s:
                        cur[w] = s
                    else:
                        cur.pop(w, None)
                if cur:
                    out[d1 + d2] = cur
                else:
                    out.pop(d1 + d2, None)
    return out


def _entry_add(x: dict, y: dict, c: int = 1) -> dict:
    out = {d: dict(u) for d, u in x.items()}
    for d, v in y.items():
        cur = vadd(out.get(d, {}), v, c)
        if cur:
            out[d] = cur
        else:
            out.pop(d, None)
    return out


def mat_mul(C: LinCat, X: dict, Y: dict) -> dict:
    """Matrices as dict (row, col) -> entry; entries are polynomials in t over the cone ring."""
    out: dict = {}
    for (i, j), x in X.items():
        for (j2, k), y in Y.items():
            if j != j2:
                continue
            p = _entry_mul(C, x, y)
            if p:
                cur = _entry_add(out.get((i, k), {}), p)
                if cur:
                    out[(i, k)] = cur
                else:
                    out.pop((i, k), None)
    return out


def homotopy_H(C: LinCat, vec: dict) -> dict:
    """H applied to a combination of arrows; all arrows must share source a and target b."""
    out: dict = {}
    for f, c in vec.items():
        a, b = C.source(f), C.target(f)
        word = {(f,): c}
        for (row, col), poly in (((PLUS, PLUS), _ALPHA), ((PLUS, a), _BETA), ((b, PLUS), _GAMMA), ((b, a), _DELTA)):
            entry = {d: {w: k * coef for w, k in word.items()} for d, coef in poly.items()}
            cur = _entry_add(out.get((row, col), {}), entry)
            if cur:
                out[(row, col)] = cur
            else:
                out.pop((row, col), None)
    return out


def evaluate(M: dict, t: int) -> dict:
    out: dict = {}
    for key, entry in M.items():
        acc: dict = {}
        for d, u in entry.items():
            acc = vadd(acc, u, t ** d)
        if acc:
            out[key] = acc
    return out


@dataclass
class HomotopyVerdict:
    passed: bool
    checked: int
    failure: dict | None


def verify_cone_homotopy(C: LinCat) -> HomotopyVerdict:
    """Check ev0 H(f) = f⊗e_{b,a}, ev1 H(f) = f⊗e_{+,+} and H(g∘f) = H(g)H(f)."""
    n = len(C.arrows)
    checked = 0
    for f in range(n):
        a, b = C.source(f), C.target(f)
        H = homotopy_H(C, {f: 1})
        checked += 2
        if evaluate(H, 0) != {(b, a): {(f,): 1}}:
            return HomotopyVerdict(False, checked, {"identity": "ev0", "arrow": f})
        if evaluate(H, 1) != {(PLUS, PLUS): {(f,): 1}}:
            return HomotopyVerdict(False, checked, {"identity": "ev1", "arrow": f})
    for f in range(n):
        for g in range(n):
            if not C.composable(g, f):
                continue
            checked += 1
            lhs = homotopy_H(C, C.compose(g, f))
            rhs = mat_mul(C, homotopy_H(C, {g: 1}), homotopy_H(C, {f: 1}))
            if lhs != rhs:
                return HomotopyVerdict(False, checked, {"identity": "multiplicative", "arrows": [g, f]})
    return HomotopyVerdict(True, checked, None)


def random_category(rng: random.Random, max_objects: int = 3, max_edges: int = 4) -> LinCat:
    """A random path category on an acyclic quiver (objects ordered, edges go forward)."""
    k = rng.randint(1, max_objects)
    objs = list(range(k))
    edges = []
    for e in range(rng.randint(0, max_edges)):
        if k == 1:
            break
        s = rng.randrange(k - 1)
        t = rng.randrange(s + 1, k)
        edges.append((f"e{e}", s, t))
    return path_category(objs, edges)
