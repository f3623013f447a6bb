"""Induction and compression of G-rings and the isomorphisms relating them.

An induced ring ind_H^L(A) (L a subgroup of G, usually G itself) is stored on
the basis (x, a) for cosets x ∈ L/H and basis elements a of A; (x, a) stands
for ξ_H(s_x, a) = Σ_{h∈H} h⁻¹(a)·χ_{s_x h} where s is the pointed section.
Every such element is also available as an honest function L → A, which
gives an independent model to test the relations against.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .groups import (CosetSpace, FiniteGroup, GSet, coset_space, double_cosets)
from .linalg import lattice_basis, solve_integer
from .polyfun import (PolyFun, ProperStructure, act as act_fun, discrete_function_ring,
                      discrete_proper, function_lattice, coordinates_in)
from .rings import (BasedRing, GroupAction, HomVerdict, RingHom, _ring, check_hom,
                    crossed_product, groupoid_crossed, matrix_ring, restrict_action, same_group, tensor,
                    vadd)
from .simplicial import GSimplicialComplex, from_gset, induce_space


class InductionError(ValueError):
    pass


def _action_on(A: BasedRing, G: FiniteGroup, H: Iterable[int]) -> GroupAction:
    if A.action is None:
        raise InductionError("the ring needs an action of the subgroup")
    act = A.action
    if not same_group(act.group, G):
        raise InductionError("the ring's action is over a different group")
    Hs = tuple(sorted(H))
    if not set(Hs) <= set(act.elements):
        raise InductionError("the subgroup does not act on the ring")
    return act


@dataclass(eq=False)
class InducedRing:
    group: FiniteGroup
    subgroup: frozenset
    base: BasedRing
    cosets: CosetSpace
    ring: BasedRing
    ambient: tuple

    @property
    def rank(self) -> int:
        return self.ring.rank

    def index(self, x: int, a: int) -> int:
        return x * self.base.rank + a

    def xi(self, s: int, a: dict) -> dict:
        """ξ_H(s, a) in the carrier basis (s any element of the ambient group)."""
        cs = self.cosets
        x, h = cs.decompose(s)
        ha = self.base.act(h, a)
        r = self.base.rank
        return {x * r + k: c for k, c in ha.items()}

    def as_function(self, v: dict) -> dict:
        """The element as a function ambient group -> A (dict element -> vector)."""
        G, cs, A = self.group, self.cosets, self.base
        r = A.rank
        out: dict = {}
        for idx, c in v.items():
            x, a = divmod(idx, r)
            s = cs.section[x]
            for h in sorted(self.subgroup):
                g = G.mul(s, h)
                out[g] = vadd(out.get(g, {}), A.act(G.inv(h), {a: 1}), c)
        return {g: w for g, w in out.items() if w}

    def from_function(self, f: dict) -> dict:
        """Inverse of :meth:`as_function` for functions satisfying f(gh) = h⁻¹f(g)."""
        r = self.base.rank
        out: dict = {}
        for x, s in enumerate(self.cosets.section):
            for k, c in f.get(s, {}).items():
                out[x * r + k] = c
        return out

    def xi_function(self, s: int, a: dict) -> dict:
        """ξ_H(s, a) = Σ_h h⁻¹(a)χ_{sh} computed directly as a function."""
        G, A = self.group, self.base
        out: dict = {}
        for h in sorted(self.subgroup):
            g = G.mul(s, h)
            out[g] = vadd(out.get(g, {}), A.act(G.inv(h), a))
        return {g: w for g, w in out.items() if w}

    def check_relations(self) -> dict:
        """Test the ξ-relations against the function model; returns failures."""
        G, A = self.group, self.base
        R = self.ring
        fails: dict = {}
        for s in self.ambient:
            for a in range(A.rank):
                if self.as_function(self.xi(s, {a: 1})) != self.xi_function(s, {a: 1}):
                    fails.setdefault("ξ(sh, a) = ξ(s, ha)", [s, a])
        for g in self.ambient:
            for s in self.ambient:
                for a in range(A.rank):
                    lhs = R.act(g, self.xi(s, {a: 1}))
                    if lhs != self.xi(G.mul(g, s), {a: 1}):
                        fails.setdefault("g·ξ(s, a) = ξ(gs, a)", [g, s, a])
        for i in range(R.rank):
            fi = self.as_function({i: 1})
            for j in range(R.rank):
                fj = self.as_function({j: 1})
                pointwise = {}
                for g in set(fi) & set(fj):
                    p = A.mul(fi[g], fj[g])
                    if p:
                        pointwise[g] = p
                if self.as_function(R.mul({i: 1}, {j: 1})) != pointwise:
                    fails.setdefault("products are pointwise", [i, j])
        return fails


def induce_ring(G: FiniteGroup, H: Iterable[int], A: BasedRing, ambient: Iterable[int] | None = None,
                section: Sequence[int] | None = None) -> InducedRing:
    """ind_H^L(A) for H ≤ L ≤ G (L defaults to G), with L acting through the ξ-relations."""
    H = G.check_subgroup(H)
    L = tuple(sorted(G.check_subgroup(ambient))) if ambient is not None else tuple(G.elements)
    _action_on(A, G, H)
    cs = coset_space(G, H, L)
    if section is not None:
        cs = cs.with_section(section)
    n, r = cs.size, A.rank
    table = {}
    for x in range(n):
        for a in range(r):
            for b in range(r):
                p = A.mul_basis(a, b)
                if p:
                    table[(x * r + a, x * r + b)] = {x * r + k: c for k, c in p}
    unit = None
    if A.unit is not None:
        unit = {x * r + k: c for x in range(n) for k, c in A.unit.items()}
    basis = tuple((x, A.basis[a]) for x in range(n) for a in range(r))
    ind = InducedRing(G, H, A, cs, None, L)  # type: ignore[arg-type]
    mats = {}
    for g in L:
        cols = []
        for x in range(n):
            s = G.mul(g, cs.section[x])
            for a in range(r):
                cols.append(ind.xi(s, {a: 1}))
        mats[g] = tuple(cols)
    ind.ring = _ring(basis, table, unit, GroupAction(G, L, mats), name=f"ind({A.name})")
    return ind


# compression -------------------------------------------------------------------------

@dataclass(eq=False)
class CompressedRing:
    ring: BasedRing
    vectors: list  # basis of χ_H·A inside A
    source: BasedRing

    def embed(self, v: dict) -> dict:
        out: dict = {}
        for j, c in v.items():
            for i, a in enumerate(self.vectors[j]):
                if a:
                    out[i] = out.get(i, 0) + c * a
        return {i: a for i, a in out.items() if a}

    def coords(self, w: dict) -> dict:
        rows = [[vec[i] for vec in self.vectors] for i in range(self.source.rank)]
        x, _ = solve_integer(rows, [w.get(i, 0) for i in range(self.source.rank)], len(self.vectors))
        if x is None:
            raise InductionError("element is not in the compression")
        return {j: c for j, c in enumerate(x) if c}


def compress(G: FiniteGroup, H: Iterable[int], A: BasedRing, proper: ProperStructure) -> CompressedRing:
    """comp_H^G(A) = χ_H·A with the restricted H-action.

    ``proper`` must be a verified structure over the 0-complex G/H whose
    vertex 0 is the coset H.
    """
    H = G.check_subgroup(H)
    fails = proper.check()
    if fails:
        raise InductionError(f"not a proper structure: {sorted(fails)}")
    if not proper.is_full():
        raise InductionError("not proper: Z^(G/H)·A ≠ A")
    r = A.rank
    vecs = []
    for a in range(r):
        v = proper.act(0, a)
        vecs.append([v.get(i, 0) for i in range(r)])
    vectors = lattice_basis(vecs, r)
    comp = CompressedRing(None, vectors, A)  # type: ignore[arg-type]
    table = {}
    for i in range(len(vectors)):
        for j in range(len(vectors)):
            p = A.mul(comp.embed({i: 1}), comp.embed({j: 1}))
            if p:
                table[(i, j)] = comp.coords(p)
    unit = None
    if A.unit is not None:
        unit = comp.coords(proper.act_vec(0, A.unit))
    Hs = tuple(sorted(H))
    mats = {h: tuple(comp.coords(A.act(h, comp.embed({i: 1}))) for i in range(len(vectors))) for h in Hs}
    basis = tuple(("c", i) for i in range(len(vectors)))
    comp.ring = _ring(basis, table, unit, GroupAction(G, Hs, mats), name=f"comp({A.name})")
    return comp


def induced_proper(ind: InducedRing) -> ProperStructure:
    """ind_H^G(B) is proper over G/H: χ_y acts on (x, b) by δ_{x,y}."""
    X = from_gset(ind.cosets.gset())
    r = ind.base.rank
    return discrete_proper(ind.ring, X, lambda v, i: {i: 1} if i // r == v else {})


def tensor_proper(G: FiniteGroup, H: Iterable[int], B: BasedRing) -> tuple:
    """Z^(G/H) ⊗ B with χ_y acting on the first factor; returns (ring, structure)."""
    cs = coset_space(G, H)
    X = from_gset(cs.gset())
    F = discrete_function_ring(X)
    T = tensor(F, B)
    rb = B.rank
    return T, discrete_proper(T, X, lambda v, i: {i: 1} if i // rb == v else {})


# reports -------------------------------------------------------------------------

@dataclass
class IsoReport:
    name: str
    hom: RingHom | None
    verdict: HomVerdict
    diagram_checks: list = field(default_factory=list)  # (name, ok, witness)

    @property
    def passed(self) -> bool:
        return self.verdict.passed and all(ok for _, ok, _ in self.diagram_checks)

    def summary(self) -> dict:
        return {
            "name": self.name,
            "ranks": [self.hom.source.rank, self.hom.target.rank] if self.hom is not None else None,
            "flags": {k: ("pass" if v is None else v) for k, v in self.verdict.results.items()},
            "diagrams": [{"name": n, "ok": ok, "witness": w} for n, ok, w in self.diagram_checks],
            "passed": self.passed,
        }


def _flags(A: BasedRing, B: BasedRing, equivariant: bool = True) -> list:
    flags = ["multiplicative", "bijective"]
    if A.unit is not None and B.unit is not None:
        flags.append("unital")
    if equivariant:
        flags.append("equivariant")
    return flags


# across ----------------------------------------------------------------------------

def iso_across(G: FiniteGroup, H: Iterable[int], A: BasedRing, section: Sequence[int] | None = None) -> IsoReport:
    """Arrow ring of A⋊𝒢^G(G/H) ≅ M_{G/H}(A⋊H): b⋊g on s→t ↦ e_{t,s} ⊗ t̂⁻¹(b) ⋊ t̂⁻¹gŝ."""
    H = G.check_subgroup(H)
    cs = coset_space(G, H)
    if section is not None:
        cs = cs.with_section(section)
    src = groupoid_crossed(A, cs.gset(), validate=False)
    AH = restrict_action(A, H)
    cross = crossed_product(AH, validate=False)
    tgt = matrix_ring(cs.size, cross, validate=False)
    n, o, r = cs.size, G.order, A.rank
    Hs = tuple(sorted(H))
    pos = {h: i for i, h in enumerate(Hs)}
    m, rc = len(Hs), cross.rank

    def tidx(x, y, a, h):
        return (x * n + y) * rc + a * m + pos[h]

    images = []
    for a in range(r):
        for g in G.elements:
            for s in range(n):
                t = cs.act(g, s)
                ti = G.inv(cs.section[t])
                h = G.mul(G.mul(ti, g), cs.section[s])
                b = A.act(ti, {a: 1})
                images.append({tidx(t, s, k, h): c for k, c in b.items()})
    f = RingHom(src, tgt, images)
    verdict = check_hom(f, _flags(src, tgt, equivariant=False))
    # triangle: α∘ȷ = ι on A⋊H
    witness = None
    for a in range(r):
        for h in Hs:
            j = (a * o + h) * n + 0
            if f({j: 1}) != {tidx(0, 0, a, h): 1}:
                witness = {"basis": [a, h]}
                break
        if witness:
            break
    return IsoReport("across", f, verdict, [("α∘ȷ = ι", witness is None, witness)])


# green -----------------------------------------------------------------------------

def iso_green(G: FiniteGroup, H: Iterable[int], A: BasedRing, section: Sequence[int] | None = None) -> IsoReport:
    """ind_H^G(A)⋊G ≅ M_{G/H}(A⋊H): ξ(s,a)⋊g ↦ e_{sH,g⁻¹sH} ⊗ φ(s)(a) ⋊ φ(s)φ(g⁻¹s)⁻¹."""
    H = G.check_subgroup(H)
    ind = induce_ring(G, H, A, section=section)
    cs = ind.cosets
    src = crossed_product(ind.ring, validate=False)
    cross = crossed_product(restrict_action(A, H), validate=False)
    tgt = matrix_ring(cs.size, cross, validate=False)
    n, o, r = cs.size, G.order, A.rank
    Hs = tuple(sorted(H))
    pos = {h: i for i, h in enumerate(Hs)}
    m, rc = len(Hs), cross.rank

    def tidx(x, y, a, h):
        return (x * n + y) * rc + a * m + pos[h]

    def phi(u):
        return G.mul(G.inv(cs.section[cs.coset_of[u]]), u)

    def alpha_general(s, avec, g):
        """The formula for ξ(s, a)⋊g with arbitrary s."""
        gis = G.mul(G.inv(g), s)
        x, y = cs.coset_of[s], cs.coset_of[gis]
        h = G.mul(phi(s), G.inv(phi(gis)))
        b = A.act(phi(s), avec)
        return {tidx(x, y, k, h): c for k, c in b.items()}

    images = []
    for x in range(n):
        for a in range(r):
            for g in G.elements:
                images.append(alpha_general(cs.section[x], {a: 1}, g))
    f = RingHom(src, tgt, images)
    verdict = check_hom(f, _flags(src, tgt, equivariant=False))
    diagrams = []

    # the formula does not depend on how ξ(s, a) is written
    witness = None
    for s in G.elements:
        for a in range(r):
            xi = ind.xi(s, {a: 1})
            for g in G.elements:
                lhs = f({k * o + g: c for k, c in xi.items()})
                if lhs != alpha_general(s, {a: 1}, g):
                    witness = {"s": s, "a": a, "g": g}
                    break
            if witness:
                break
        if witness:
            break
    diagrams.append(("well defined in s", witness is None, witness))

    # triangle: α(ξ(1, a)⋊h) = e_{H,H} ⊗ (a⋊h)
    witness = None
    for a in range(r):
        for h in Hs:
            if f({(0 * r + a) * o + h: 1}) != {tidx(0, 0, a, h): 1}:
                witness = {"a": a, "h": h}
                break
        if witness:
            break
    diagrams.append(("α∘(ξ(1,−)⋊id) = e_{H,H}⊗−", witness is None, witness))

    # triangle: both routes to endomorphisms of A^(G)
    witness = _green_module_triangle(G, cs, A, ind, f, tidx, Hs, pos, m, rc, n, r, o)
    diagrams.append(("representation on A^(G) agrees", witness is None, witness))
    return IsoReport("green", f, verdict, diagrams)


def _green_module_triangle(G, cs, A, ind, f, tidx, Hs, pos, m, rc, n, r, o):
    """Compare the action of ind(A)⋊G on A^(G) with that of its image matrix."""

    def direct(src_idx, y, b):
        # (ξ ⋊ g)·φ = ξ·(g·φ) with φ the function b at y
        k, g = divmod(src_idx, o)
        fun = ind.as_function({k: 1})
        gy = G.mul(g, y)
        val = A.mul(fun.get(gy, {}), {b: 1})
        return {gy * r + i: c for i, c in val.items()}

    def via_matrix(src_idx, y, b):
        M = f({src_idx: 1})
        col, kh = cs.decompose(y)
        # φ = χ_{s_col}·(k(b) ⋊ k)
        alpha_c = {a * m + pos[kh]: c for a, c in A.act(kh, {b: 1}).items()}
        out: dict = {}
        cross_mul = _cross_mul(A, G, Hs, pos, m)
        for tix, coef in M.items():
            rowcol, rest = divmod(tix, rc)
            xr, yc = divmod(rowcol, n)
            if yc != col:
                continue
            prod = cross_mul({rest: coef}, alpha_c)
            for ci, cc in prod.items():
                a2, hi = divmod(ci, m)
                hh = Hs[hi]
                # χ_{s_xr}·(a2 ⋊ hh) is the function hh⁻¹(a2) at s_xr·hh
                pt = G.mul(cs.section[xr], hh)
                for i, c in A.act(G.inv(hh), {a2: 1}).items():
                    key = pt * r + i
                    out[key] = out.get(key, 0) + cc * c
        return {k: v for k, v in out.items() if v}

    for src_idx in range(n * r * o):
        for y in G.elements:
            for b in range(r):
                if direct(src_idx, y, b) != via_matrix(src_idx, y, b):
                    return {"source": src_idx, "point": y, "b": b}
    return None


def _cross_mul(A, G, Hs, pos, m):
    def mul(u: dict, v: dict) -> dict:
        out: dict = {}
        for i, a in u.items():
            ai, fi = divmod(i, m)
            f = Hs[fi]
            for j, b in v.items():
                bj, gj = divmod(j, m)
                prod = A.mul({ai: 1}, A.act(f, {bj: 1}))
                fg = pos[G.mul(f, Hs[gj])]
                for k, c in prod.items():
                    key = k * m + fg
                    out[key] = out.get(key, 0) + a * b * c
        return {k: v for k, v in out.items() if v}
    return mul


# mxg ---------------------------------------------------------------------------------

def iso_mxg(G: FiniteGroup, X: GSet, A: BasedRing) -> IsoReport:
    """(M_X̲ A)⋊G ≅ M_X̲(A⋊G): (e_{x,y}⊗a)⋊g ↦ e_{x,g⁻¹y}⊗(a⋊g)."""
    if A.action is None or len(A.action.elements) != G.order:
        raise InductionError("mxg needs a G-ring")
    M = matrix_ring(X.points, A, index_action=X, validate=False)
    src = crossed_product(M, with_action=True, validate=False)
    cross = crossed_product(A, with_action=True, validate=False)
    tgt = matrix_ring(X.points, cross, index_action=X, validate=False)
    n, r, o = X.size, A.rank, G.order
    images = []
    for x in range(n):
        for y in range(n):
            for a in range(r):
                for g in G.elements:
                    gy = X.act[G.inv(g)][y]
                    images.append({(x * n + gy) * (r * o) + a * o + g: 1})
    f = RingHom(src, tgt, images)
    return IsoReport("mxg", f, check_hom(f, _flags(src, tgt)), [])


# indtriv -----------------------------------------------------------------------------

def iso_indtriv(G: FiniteGroup, H: Iterable[int], B: BasedRing, section: Sequence[int] | None = None) -> IsoReport:
    """ind_H^G res B ≅ Z^(G/H) ⊗ B: ξ(s, b) ↦ χ_{sH} ⊗ s(b)."""
    H = G.check_subgroup(H)
    if B.action is None or len(B.action.elements) != G.order:
        raise InductionError("indtriv needs a G-ring")
    ind = induce_ring(G, H, restrict_action(B, H), section=section)
    cs = ind.cosets
    F = discrete_function_ring(from_gset(cs.gset()))
    tgt = tensor(F, B, validate=False)
    rb = B.rank
    images = []
    for x in range(cs.size):
        for b in range(rb):
            images.append({x * rb + k: c for k, c in B.act(cs.section[x], {b: 1}).items()})
    f = RingHom(ind.ring, tgt, images)
    # the formula for arbitrary s agrees with the basis values
    witness = None
    for s in G.elements:
        for b in range(rb):
            lhs = f(ind.xi(s, {b: 1}))
            x = cs.coset_of[s]
            rhs = {x * rb + k: c for k, c in B.act(s, {b: 1}).items()}
            if lhs != rhs:
                witness = {"s": s, "b": b}
                break
        if witness:
            break
    return IsoReport("indtriv", f, check_hom(f, _flags(ind.ring, tgt)),
                     [("well defined in s", witness is None, witness)])


# indcomp ---------------------------------------------------------------------------------

def iso_indcomp_i(G: FiniteGroup, H: Iterable[int], B: BasedRing, section: Sequence[int] | None = None) -> IsoReport:
    """B ≅ comp_H^G ind_H^G B via b ↦ ξ_H(1, b)."""
    H = G.check_subgroup(H)
    ind = induce_ring(G, H, B, section=section)
    proper = induced_proper(ind)
    comp = compress(G, H, ind.ring, proper)
    images = [comp.coords(ind.xi(G.identity, {b: 1})) for b in range(B.rank)]
    Bh = restrict_action(B, H)
    f = RingHom(Bh, comp.ring, images)
    return IsoReport("indcomp_i", f, check_hom(f, _flags(Bh, comp.ring)), [])


def iso_indcomp_ii(G: FiniteGroup, H: Iterable[int], A: BasedRing, proper: ProperStructure,
                   section: Sequence[int] | None = None) -> IsoReport:
    """ind_H^G comp_H^G A ≅ A via ξ_H(s, χ_H a) ↦ χ_{sH}·s(a)."""
    H = G.check_subgroup(H)
    if A.action is None or len(A.action.elements) != G.order:
        raise InductionError("indcomp ii needs a G-ring")
    comp = compress(G, H, A, proper)
    ind = induce_ring(G, H, comp.ring, section=section)
    cs = ind.cosets
    rc = comp.ring.rank
    images = []
    for x in range(cs.size):
        for j in range(rc):
            moved = A.act(cs.section[x], comp.embed({j: 1}))
            images.append(proper.act_vec(x, moved))
    f = RingHom(ind.ring, A, images)
    return IsoReport("indcomp_ii", f, check_hom(f, _flags(ind.ring, A)), [])


# indx -------------------------------------------------------------------------------------

def iso_indx(G: FiniteGroup, H: Iterable[int], X: GSimplicialComplex,
             section: Sequence[int] | None = None) -> IsoReport:
    """ind_H^G Z^(X) ≅ Z^(G ×_H X) for a 0-dimensional H-complex X.

    θ(f)(π(g, x)) = f(g)(x).  X's action is indexed by elements of G; only
    those in H are used.
    """
    H = G.check_subgroup(H)
    if X.dim > 0:
        raise InductionError("the ring version needs a 0-dimensional complex; use indx_functions")
    ZX = discrete_function_ring(X, elements=H)
    ind = induce_ring(G, H, ZX, section=section)
    Y = induce_space(G, H, X)
    tgt = discrete_function_ring(Y)
    cs = ind.cosets
    n = X.nvertices
    images = []
    for i in range(ind.rank):
        fun = ind.as_function({i: 1})
        # θ(f) at vertex (y, u) = π(s_y, u) is f(s_y)(u)
        img = {}
        for y in range(cs.size):
            val = fun.get(cs.section[y], {})
            for u, c in val.items():
                img[y * n + u] = c
        images.append(img)
    f = RingHom(ind.ring, tgt, images)
    # θ(f)(π(gh, h⁻¹u)) must not depend on the representative
    witness = None
    for i in range(ind.rank):
        fun = ind.as_function({i: 1})
        for g in G.elements:
            y, h = cs.decompose(g)
            for u in range(n):
                # π(g, u) = (y, h·u)
                hu = X.perms[h][u]
                lhs = fun.get(g, {}).get(u, 0)
                rhs = f.images[i].get(y * n + hu, 0)
                if lhs != rhs:
                    witness = {"basis": i, "g": g, "u": u}
                    break
            if witness:
                break
        if witness:
            break
    return IsoReport("indx", f, check_hom(f, _flags(ind.ring, tgt)),
                     [("θ independent of representatives", witness is None, witness)])


def indx_functions(G: FiniteGroup, H: Iterable[int], X: GSimplicialComplex, degree: int = 2) -> IsoReport:
    """θ on polynomial functions of degree ≤ degree for a positive-dimensional H-complex.

    ξ_H(s_x, φ) goes to φ placed on copy x of G ×_H X.  Checked: equivariance,
    products of basis pairs, and that the images form a basis of the functions
    of degree ≤ degree on G ×_H X.
    """
    H = G.check_subgroup(H)
    cs = coset_space(G, H)
    Y = induce_space(G, H, X)
    n = X.nvertices
    # room for products of two basis functions
    basis = [PolyFun(X, phi.values, 2 * degree) for phi in function_lattice(X, degree)]

    def place(x: int, phi: PolyFun) -> PolyFun:
        vals = {tuple(x * n + v for v in s): p for s, p in phi.values.items()}
        return PolyFun(Y, vals, phi.max_degree)

    def h_act(h: int, phi: PolyFun) -> PolyFun:
        # (h·φ)(σ) = φ(h⁻¹σ) using X's vertex permutations
        from .polyfun import pullback
        return pullback(phi, X, X.perms[G.inv(h)])

    results: dict = {}
    witness = None
    for g in G.elements:
        for x in range(cs.size):
            y, h = cs.decompose(G.mul(g, cs.section[x]))
            for k, phi in enumerate(basis):
                lhs = place(y, h_act(h, phi))
                rhs = act_fun(place(x, phi), g)
                if lhs != rhs:
                    witness = {"g": g, "coset": x, "basis": k}
                    break
            if witness:
                break
        if witness:
            break
    results["equivariant"] = witness
    witness = None
    for x in range(cs.size):
        for i, p in enumerate(basis):
            for j, q in enumerate(basis):
                if place(x, p * q) != place(x, p) * place(x, q):
                    witness = {"coset": x, "pair": [i, j]}
    results["multiplicative"] = witness
    target = function_lattice(Y, degree)
    images = [place(x, phi) for x in range(cs.size) for phi in basis]
    ok = len(images) == len(target) and all(coordinates_in(images, t) is not None for t in target)
    results["bijective"] = None if ok else {"reason": "images do not form a basis", "ranks": [len(images), len(target)]}
    verdict = HomVerdict(all(v is None for v in results.values()), results)
    return IsoReport("indx", None, verdict, [])


# indxtheta ----------------------------------------------------------------------------------

@dataclass(eq=False)
class Summand:
    theta: int
    cosets: tuple  # coset indices of G/K inside HθK
    ring: BasedRing  # the summand as an H-ring
    embedding: list  # summand basis index -> carrier index


def _summand(ind: InducedRing, H: frozenset, cosets: Sequence[int], theta: int) -> Summand:
    G, r = ind.group, ind.base.rank
    idx = [x * r + a for x in cosets for a in range(r)]
    pos = {k: i for i, k in enumerate(idx)}
    R = ind.ring
    table = {}
    for i, a in enumerate(idx):
        for j, b in enumerate(idx):
            p = R.mul({a: 1}, {b: 1})
            if p:
                table[(i, j)] = {pos[k]: c for k, c in p.items()}
    unit = None
    if R.unit is not None:
        unit = {pos[k]: c for k, c in R.unit.items() if k in pos}
    Hs = tuple(sorted(H))
    mats = {}
    for h in Hs:
        cols = []
        for a in idx:
            img = R.act(h, {a: 1})
            if any(k not in pos for k in img):
                raise InductionError("summand is not stable under the subgroup")
            cols.append({pos[k]: c for k, c in img.items()})
        mats[h] = tuple(cols)
    basis = tuple(R.basis[k] for k in idx)
    ring = _ring(basis, table, unit, GroupAction(G, Hs, mats), name=f"summand θ={theta}")
    return Summand(theta, tuple(cosets), ring, idx)


def iso_indxtheta(G: FiniteGroup, H: Iterable[int], K: Iterable[int], A: BasedRing, theta: int,
                  section: Sequence[int] | None = None) -> IsoReport:
    """res^H ind_K^G(A)[HθK] ≅ ind_{H_θ}^H(c*_{θ⁻¹} res A) via α(f)(h) = f(hθ)."""
    H = G.check_subgroup(H)
    K = G.check_subgroup(K)
    ind = induce_ring(G, K, A, section=section)
    cs = ind.cosets
    dc = next(d for d in double_cosets(G, H, K) if theta in d.elements)
    inside = sorted({cs.coset_of[g] for g in dc.elements})
    summ = _summand(ind, H, inside, theta)
    ti = G.inv(theta)
    Ht = dc.h_theta if dc.theta == theta else H & G.conjugate_subgroup(theta, K)
    # c*_{θ⁻¹}A: h ∈ H_θ acts through θ⁻¹hθ ∈ K
    r = A.rank
    mats = {h: tuple(A.act(G.mul(G.mul(ti, h), theta), {a: 1}) for a in range(r)) for h in sorted(Ht)}
    At = _ring(A.basis, dict(A.table), A.unit, GroupAction(G, tuple(sorted(Ht)), mats), name="c*A")
    tind = induce_ring(G, Ht, At, ambient=H)
    tcs = tind.cosets
    images = []
    for k in summ.embedding:
        fun = ind.as_function({k: 1})
        # α(f) is h ↦ f(hθ); read it off at the section of H/H_θ
        img: dict = {}
        for y, rho in enumerate(tcs.section):
            for a, c in fun.get(G.mul(rho, theta), {}).items():
                img[y * r + a] = c
        images.append(img)
    f = RingHom(summ.ring, tind.ring, images)
    # ξ_K(hθ, a) ↦ ξ_{H_θ}(h, a)
    witness = None
    for h in sorted(H):
        for a in range(r):
            src = ind.xi(G.mul(h, theta), {a: 1})
            pos = {k: i for i, k in enumerate(summ.embedding)}
            lhs = f({pos[k]: c for k, c in src.items()})
            if lhs != tind.xi(h, {a: 1}):
                witness = {"h": h, "a": a}
                break
        if witness:
            break
    return IsoReport("indxtheta", f, check_hom(f, _flags(summ.ring, tind.ring)),
                     [("ξ_K(hθ,a) ↦ ξ_{H_θ}(h,a)", witness is None, witness)])


@dataclass
class ResIndDecomposition:
    summands: list  # Summand
    reports: list  # IsoReport per summand
    checks: dict  # name -> witness or None

    @property
    def passed(self) -> bool:
        return all(v is None for v in self.checks.values()) and all(r.passed for r in self.reports)


def decompose_res_ind(G: FiniteGroup, H: Iterable[int], K: Iterable[int], A: BasedRing) -> ResIndDecomposition:
    """Split res^H ind_K^G(A) by double cosets HθK and run indxtheta on each summand."""
    H = G.check_subgroup(H)
    K = G.check_subgroup(K)
    ind = induce_ring(G, K, A)
    cs = ind.cosets
    summands, reports = [], []
    for d in double_cosets(G, H, K):
        inside = sorted({cs.coset_of[g] for g in d.elements})
        summands.append(_summand(ind, H, inside, d.theta))
        reports.append(iso_indxtheta(G, H, K, A, d.theta))
    checks: dict = {}
    total = sum(s.ring.rank for s in summands)
    checks["ranks add up"] = None if total == ind.rank else {"sum": total, "rank": ind.rank}
    witness = None
    R = ind.ring
    for i, s in enumerate(summands):
        for t in summands[i + 1:]:
            for a in s.embedding:
                for b in t.embedding:
                    if R.mul({a: 1}, {b: 1}) or R.mul({b: 1}, {a: 1}):
                        witness = {"pair": [a, b]}
    checks["summands are orthogonal"] = witness
    return ResIndDecomposition(summands, reports, checks)


ISOMORPHISMS = ("across", "green", "mxg", "indtriv", "indcomp_i", "indcomp_ii", "indx", "indxtheta")


def named_isomorphism(name: str, **args) -> IsoReport:
    """Dispatch to one of the iso_* builders by name."""
    builders = {
        "across": iso_across, "green": iso_green, "mxg": iso_mxg, "indtriv": iso_indtriv,
        "indcomp_i": iso_indcomp_i, "indcomp_ii": iso_indcomp_ii, "indx": iso_indx,
        "indxtheta": iso_indxtheta,
    }
    if name not in builders:
        raise InductionError(f"unknown isomorphism {name!r}; expected one of {', '.join(ISOMORPHISMS)}")
    return builders[name](**args)
