"""Based rings: free Z-modules with structure constants, group actions and constructions.

An element of a based ring is a sparse vector ``{basis index: coefficient}``.
Group actions are stored as matrices (images of basis vectors) for every
element of an acting subgroup of some :class:`FiniteGroup`; the subgroup may be
the whole group.  Constructions validate their output exhaustively unless the
caller opts out.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .groups import FiniteGroup, GSet
from .linalg import is_unimodular, solve_integer

MAX_RANK = 4096


class RingError(ValueError):
    pass


# sparse vectors -------------------------------------------------------------

def vadd(u: dict, v: dict, c: int = 1) -> dict:
    out = dict(u)
    for k, a in v.items():
        s = out.get(k, 0) + c * a
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def vscale(u: dict, c: int) -> dict:
    return {k: c * a for k, a in u.items()} if c else {}


def vclean(u: dict) -> dict:
    return {k: a for k, a in u.items() if a}


def same_group(G: FiniteGroup, H: FiniteGroup) -> bool:
    return G is H or (G.labels == H.labels and G.table == H.table)


def sign_of(G: FiniteGroup, g: int) -> int:
    """A canonical homomorphism G -> {±1}: permutation parity, or parity in a cyclic group."""
    lab = G.labels[g]
    if isinstance(lab, tuple):
        seen, sign = set(), 1
        for i in range(len(lab)):
            if i in seen:
                continue
            j, length = i, 0
            while j not in seen:
                seen.add(j)
                j = lab[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
        return sign
    if G.name.startswith("cyclic:") and G.order % 2 == 0:
        return -1 if g % 2 else 1
    return 1


# actions ------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class GroupAction:
    """Action of the subgroup ``elements`` of ``group``; ``mats[g][i]`` is g(b_i)."""

    group: FiniteGroup
    elements: tuple
    mats: dict

    def apply(self, g: int, v: dict) -> dict:
        m = self.mats[g]
        out: dict = {}
        for i, a in v.items():
            for k, c in m[i].items():
                s = out.get(k, 0) + a * c
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return out

    def restrict(self, sub: Iterable[int]) -> "GroupAction":
        sub = tuple(sorted(sub))
        missing = [h for h in sub if h not in self.mats]
        if missing:
            raise RingError("restriction to elements that do not act")
        return GroupAction(self.group, sub, {h: self.mats[h] for h in sub})

    def is_trivial(self) -> bool:
        return all(m[i] == {i: 1} for m in self.mats.values() for i in range(len(m)))


def trivial_action(G: FiniteGroup, rank: int, elements: Iterable[int] | None = None) -> GroupAction:
    elems = tuple(sorted(elements)) if elements is not None else tuple(G.elements)
    ident = tuple({i: 1} for i in range(rank))
    return GroupAction(G, elems, {g: ident for g in elems})


# the ring type ---------------------------------------------------------------------

@dataclass(eq=False)
class BasedRing:
    basis: tuple
    table: dict  # (i, j) -> {k: c}, only nonzero products stored
    unit: dict | None = None
    action: GroupAction | None = None
    grading: tuple | None = None  # basis index -> element of grading_group
    name: str = ""
    grading_group: FiniteGroup | None = None
    _prod: list = field(default=None, repr=False)

    def __post_init__(self):
        r = len(self.basis)
        if r > MAX_RANK:
            raise RingError(f"rank {r} exceeds the cap of {MAX_RANK}")
        if len(set(self.basis)) != r:
            raise RingError("basis labels must be distinct")
        prod = [[() for _ in range(r)] for _ in range(r)]
        for (i, j), v in self.table.items():
            items = tuple(sorted((k, c) for k, c in v.items() if c))
            for k, _ in items:
                if not (0 <= k < r):
                    raise RingError("structure constant refers to an unknown basis element")
            prod[i][j] = items
        self._prod = prod

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def is_unital(self) -> bool:
        return self.unit is not None

    def index(self, label) -> int:
        return self.basis.index(label)

    def mul_basis(self, i: int, j: int) -> tuple:
        return self._prod[i][j]

    def mul(self, u: dict, v: dict) -> dict:
        out: dict = {}
        prod = self._prod
        for i, a in u.items():
            row = prod[i]
            for j, b in v.items():
                ab = a * b
                for k, c in row[j]:
                    s = out.get(k, 0) + ab * c
                    if s:
                        out[k] = s
                    else:
                        out.pop(k, None)
        return out

    def act(self, g: int, v: dict) -> dict:
        if self.action is None:
            raise RingError("ring carries no action")
        return self.action.apply(g, v)

    def e(self, i: int) -> dict:
        return {i: 1}

    def __repr__(self) -> str:
        return f"BasedRing({self.name or 'rank ' + str(self.rank)})"

    # validation -------------------------------------------------------------
    def check_associative(self):
        """Return the first basis triple violating associativity, or None."""
        r = self.rank
        for i in range(r):
            for j in range(r):
                ij = dict(self._prod[i][j])
                for k in range(r):
                    left = self.mul(ij, {k: 1})
                    right = self.mul({i: 1}, dict(self._prod[j][k]))
                    if left != right:
                        return (i, j, k)
        return None

    def check_unit(self):
        if self.unit is None:
            return None
        for i in range(self.rank):
            if self.mul(self.unit, {i: 1}) != {i: 1} or self.mul({i: 1}, self.unit) != {i: 1}:
                return i
        return None

    def check_action(self):
        """Return a description of the first action failure, or None."""
        act = self.action
        if act is None:
            return None
        G = act.group
        elems = set(act.elements)
        if G.identity not in elems or any(G.mul(a, b) not in elems for a in elems for b in elems):
            return "acting elements do not form a subgroup"
        r = self.rank
        for g in act.elements:
            if len(act.mats[g]) != r:
                return f"action matrix of {g} has the wrong size"
        if any(act.mats[G.identity][i] != {i: 1} for i in range(r)):
            return "identity does not act trivially"
        for g in act.elements:
            for h in act.elements:
                gh = G.mul(g, h)
                for i in range(r):
                    if act.apply(g, act.mats[h][i]) != act.mats[gh][i]:
                        return f"action is not a homomorphism at ({g}, {h})"
            for i in range(r):
                gi = act.mats[g][i]
                for j in range(r):
                    if act.apply(g, dict(self._prod[i][j])) != self.mul(gi, act.mats[g][j]):
                        return f"element {g} is not multiplicative on ({i}, {j})"
            if self.unit is not None and act.apply(g, self.unit) != self.unit:
                return f"element {g} does not fix the unit"
        return None

    def validate(self) -> "BasedRing":
        bad = self.check_associative()
        if bad is not None:
            raise RingError(f"multiplication is not associative on basis triple {bad}")
        bad = self.check_unit()
        if bad is not None:
            raise RingError(f"unit is not two-sided on basis element {bad}")
        bad = self.check_action()
        if bad is not None:
            raise RingError(bad)
        if self.grading is not None:
            if self.grading_group is None or len(self.grading) != self.rank:
                raise RingError("grading needs a group and one degree per basis element")
            G = self.grading_group
            for i in range(self.rank):
                for j in range(self.rank):
                    gij = G.mul(self.grading[i], self.grading[j])
                    if any(self.grading[k] != gij for k, _ in self._prod[i][j]):
                        raise RingError(f"product of basis pair ({i}, {j}) breaks the grading")
        return self


def _ring(basis, table, unit=None, action=None, grading=None, name="", validate=True,
          grading_group=None) -> BasedRing:
    R = BasedRing(tuple(basis), table, unit, action, grading, name, grading_group)
    if validate:
        R.validate()
    return R


# leaves ------------------------------------------------------------------------

def ring_Z() -> BasedRing:
    return _ring(("1",), {(0, 0): {0: 1}}, {0: 1}, name="Z")


def group_ring(G: FiniteGroup, action: str | None = None, acting: FiniteGroup | None = None,
               elements: Iterable[int] | None = None) -> BasedRing:
    """Z[G]; ``action`` is None, "trivial", "conjugation" or "sign".

    For "sign" the acting group (default G) acts on Z[G] by g·k = ε(g)^[ε(k) = -1] k,
    where ε is :func:`sign_of`.
    """
    table = {(a, b): {G.mul(a, b): 1} for a in G.elements for b in G.elements}
    R = _ring(tuple(G.labels), table, {G.identity: 1}, name=f"Z[{G.name}]", validate=False)
    if action is not None:
        K = acting or G
        elems = tuple(sorted(elements)) if elements is not None else tuple(K.elements)
        mats = {}
        for g in elems:
            if action == "trivial":
                mats[g] = tuple({k: 1} for k in G.elements)
            elif action == "conjugation":
                if not same_group(K, G):
                    raise RingError("conjugation action needs the ring's own group")
                mats[g] = tuple({G.conj(g, k): 1} for k in G.elements)
            elif action == "sign":
                s = sign_of(K, g)
                mats[g] = tuple({k: s if sign_of(G, k) == -1 else 1} for k in G.elements)
            else:
                raise RingError(f"unknown action kind {action!r}")
        R.action = GroupAction(K, elems, mats)
    R.grading = tuple(G.elements)
    R.grading_group = G
    return R.validate()


def truncated_poly(k: int) -> BasedRing:
    """tZ[t]/(t^k), basis t, t^2, ..., t^(k-1); nonunital."""
    if k < 2:
        raise RingError("truncated polynomial ring needs k >= 2")
    basis = tuple("t" if e == 1 else f"t^{e}" for e in range(1, k))
    table = {}
    for a in range(1, k):
        for b in range(1, k):
            if a + b < k:
                table[(a - 1, b - 1)] = {a + b - 1: 1}
    return _ring(basis, table, None, name=f"tZ[t]/(t^{k})")


def dual_numbers() -> BasedRing:
    return truncated_poly(2)


def gaussian(acting: FiniteGroup | None = None, elements: Iterable[int] | None = None) -> BasedRing:
    """Z[i]; with ``acting`` given, elements of sign -1 act by complex conjugation."""
    table = {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (1, 1): {0: -1}}
    action = None
    if acting is not None:
        elems = tuple(sorted(elements)) if elements is not None else tuple(acting.elements)
        mats = {g: ({0: 1}, {1: sign_of(acting, g)}) for g in elems}
        action = GroupAction(acting, elems, mats)
    return _ring(("1", "i"), table, {0: 1}, action, name="Z[i]")


def from_table(basis: Sequence, products: dict, unit: dict | None = None, name: str = "table",
               action: GroupAction | None = None) -> BasedRing:
    return _ring(tuple(basis), {k: vclean(v) for k, v in products.items()}, unit, action, name=name)


# constructions ---------------------------------------------------------------

def _check_same_action(A: BasedRing, B: BasedRing):
    if A.action is None or B.action is None:
        return None
    if not same_group(A.action.group, B.action.group) or A.action.elements != B.action.elements:
        raise RingError("actions are over different groups")
    return A.action.group, A.action.elements


def matrix_ring(index, A: BasedRing, index_action: GSet | None = None, validate: bool = True) -> BasedRing:
    """M_X(A) with basis e_{x,y}⊗a.  ``index`` is n or a sequence of labels.

    A's action is applied entrywise; with ``index_action`` the group also
    permutes the indices, e_{x,y} ↦ e_{gx,gy} (the ring M_X̲ A).
    """
    labels = tuple(range(index)) if isinstance(index, int) else tuple(index)
    n, r = len(labels), A.rank
    basis = tuple((labels[x], labels[y], A.basis[a]) for x in range(n) for y in range(n) for a in range(r))

    def idx(x, y, a):
        return (x * n + y) * r + a

    table = {}
    for x in range(n):
        for y in range(n):
            for w in range(n):
                for a in range(r):
                    for b in range(r):
                        p = A.mul_basis(a, b)
                        if p:
                            table[(idx(x, y, a), idx(y, w, b))] = {idx(x, w, k): c for k, c in p}
    unit = None
    if A.unit is not None:
        unit = {idx(x, x, k): c for x in range(n) for k, c in A.unit.items()}
    action = None
    if A.action is not None or index_action is not None:
        if index_action is not None:
            G = index_action.group
            if A.action is not None and not same_group(A.action.group, G):
                raise RingError("index action and ring action are over different groups")
            elems = A.action.elements if A.action is not None else tuple(G.elements)
        else:
            G, elems = A.action.group, A.action.elements
        mats = {}
        for g in elems:
            cols = []
            for x in range(n):
                for y in range(n):
                    gx = index_action.act[g][x] if index_action is not None else x
                    gy = index_action.act[g][y] if index_action is not None else y
                    for a in range(r):
                        img = A.action.mats[g][a] if A.action is not None else {a: 1}
                        cols.append({idx(gx, gy, k): c for k, c in img.items()})
            mats[g] = tuple(cols)
        action = GroupAction(G, elems, mats)
    return _ring(basis, table, unit, action, name=f"M_{n}({A.name})", validate=validate)


def unitalize(A: BasedRing) -> BasedRing:
    """Ã = A ⊕ Z with (a,λ)(b,μ) = (ab + λb + aμ, λμ); the new unit is last."""
    r = A.rank
    u = r
    table = {k: dict(v) for k, v in A.table.items()}
    for i in range(r):
        table[(u, i)] = {i: 1}
        table[(i, u)] = {i: 1}
    table[(u, u)] = {u: 1}
    action = None
    if A.action is not None:
        mats = {g: tuple(m) + ({u: 1},) for g, m in A.action.mats.items()}
        action = GroupAction(A.action.group, A.action.elements, mats)
    basis = tuple(("A", b) for b in A.basis) + (("Z", 1),)
    return _ring(basis, table, {u: 1}, action, name=f"unitalize({A.name})")


def direct_sum(A: BasedRing, B: BasedRing) -> BasedRing:
    ra = A.rank
    table = {k: dict(v) for k, v in A.table.items()}
    for (i, j), v in B.table.items():
        table[(ra + i, ra + j)] = {ra + k: c for k, c in v.items()}
    unit = None
    if A.unit is not None and B.unit is not None:
        unit = dict(A.unit)
        unit.update({ra + k: c for k, c in B.unit.items()})
    action = None
    same = _check_same_action(A, B)
    if same is not None:
        G, elems = same
        mats = {g: tuple(A.action.mats[g]) + tuple({ra + k: c for k, c in v.items()} for v in B.action.mats[g])
                for g in elems}
        action = GroupAction(G, elems, mats)
    basis = tuple(("L", b) for b in A.basis) + tuple(("R", b) for b in B.basis)
    return _ring(basis, table, unit, action, name=f"({A.name} + {B.name})")


def tensor(A: BasedRing, B: BasedRing, validate: bool = True) -> BasedRing:
    ra, rb = A.rank, B.rank
    table = {}
    for (i, j), v in A.table.items():
        for (k, l), w in B.table.items():
            table[(i * rb + k, j * rb + l)] = {p * rb + q: c * d for p, c in v.items() for q, d in w.items()}
    unit = None
    if A.unit is not None and B.unit is not None:
        unit = {p * rb + q: c * d for p, c in A.unit.items() for q, d in B.unit.items()}
    action = None
    if A.action is not None or B.action is not None:
        if A.action is not None and B.action is not None:
            G, elems = _check_same_action(A, B)
        else:
            act = A.action or B.action
            G, elems = act.group, act.elements
        ma = A.action.mats if A.action is not None else {g: tuple({i: 1} for i in range(ra)) for g in elems}
        mb = B.action.mats if B.action is not None else {g: tuple({i: 1} for i in range(rb)) for g in elems}
        mats = {g: tuple({p * rb + q: c * d for p, c in ma[g][i].items() for q, d in mb[g][k].items()}
                         for i in range(ra) for k in range(rb)) for g in elems}
        action = GroupAction(G, elems, mats)
    basis = tuple((a, b) for a in A.basis for b in B.basis)
    return _ring(basis, table, unit, action, name=f"({A.name} ⊗ {B.name})", validate=validate)


def crossed_product(A: BasedRing, with_action: bool = False, validate: bool = True) -> BasedRing:
    """A⋊H for the acting subgroup H of A's action: (r⋊f)(s⋊g) = r·f(s) ⋊ fg.

    Basis (a, g) is ordered by a, then g.  The grading records g.  With
    ``with_action`` the subgroup acts by k(r⋊g) = k(r) ⋊ kgk⁻¹.
    """
    if A.action is None:
        raise RingError("crossed product needs an action")
    act = A.action
    G, elems = act.group, act.elements
    pos = {g: i for i, g in enumerate(elems)}
    m, r = len(elems), A.rank

    def idx(a, g):
        return a * m + pos[g]

    table = {}
    for a in range(r):
        for f in elems:
            fm = act.mats[f]
            for b in range(r):
                prod = A.mul({a: 1}, fm[b])
                if not prod:
                    continue
                for g in elems:
                    fg = G.mul(f, g)
                    table[(idx(a, f), idx(b, g))] = {idx(k, fg): c for k, c in prod.items()}
    unit = None
    if A.unit is not None:
        unit = {idx(k, G.identity): c for k, c in A.unit.items()}
    basis = tuple((A.basis[a], G.labels[g]) for a in range(r) for g in elems)
    grading = tuple(g for a in range(r) for g in elems)
    action = None
    if with_action:
        mats = {}
        for k in elems:
            mats[k] = tuple({idx(b, G.conj(k, g)): c for b, c in act.mats[k][a].items()}
                            for a in range(r) for g in elems)
        action = GroupAction(G, elems, mats)
    return _ring(basis, table, unit, action, grading, name=f"{A.name}⋊{G.name}", validate=validate,
                 grading_group=G)


def groupoid_crossed(A: BasedRing, S: GSet, validate: bool = True) -> BasedRing:
    """The arrow ring of A⋊𝒢^G(S).

    Basis (a, g, s) stands for a⋊g viewed as an arrow s → g·s.  The product
    (a, g, s)(b, h, t) is a·g(b) ⋊ gh on t when h·t = s and 0 otherwise.
    A needs an action of all of G.  The grading records g.
    """
    if A.action is None:
        raise RingError("groupoid crossed product needs an action")
    G = S.group
    act = A.action
    if not same_group(act.group, G) or len(act.elements) != G.order:
        raise RingError("the ring must carry an action of the whole group")
    n, r, o = S.size, A.rank, G.order

    def idx(a, g, s):
        return (a * o + g) * n + s

    table = {}
    for a in range(r):
        for g in G.elements:
            gm = act.mats[g]
            for s in range(n):
                for b in range(r):
                    prod = A.mul({a: 1}, gm[b])
                    if not prod:
                        continue
                    for h in G.elements:
                        for t in range(n):
                            if S.act[h][t] != s:
                                continue
                            gh = G.mul(g, h)
                            table[(idx(a, g, s), idx(b, h, t))] = {idx(k, gh, t): c for k, c in prod.items()}
    unit = None
    if A.unit is not None:
        unit = {idx(k, G.identity, s): c for s in range(n) for k, c in A.unit.items()}
    basis = tuple((A.basis[a], G.labels[g], S.points[s]) for a in range(r) for g in G.elements for s in range(n))
    grading = tuple(g for a in range(r) for g in G.elements for s in range(n))
    return _ring(basis, table, unit, None, grading, name=f"A({A.name}⋊G({G.name}))", validate=validate,
                 grading_group=G)


# homomorphisms ----------------------------------------------------------------

@dataclass(eq=False)
class RingHom:
    source: BasedRing
    target: BasedRing
    images: list  # image of each source basis element

    def __post_init__(self):
        if len(self.images) != self.source.rank:
            raise RingError("homomorphism needs one image per source basis element")

    def __call__(self, v: dict) -> dict:
        out: dict = {}
        for i, a in v.items():
            out = vadd(out, self.images[i], a)
        return out

    def matrix(self) -> list:
        m = [[0] * self.source.rank for _ in range(self.target.rank)]
        for j, img in enumerate(self.images):
            for i, c in img.items():
                m[i][j] = c
        return m


@dataclass
class HomVerdict:
    passed: bool
    results: dict  # flag -> None (pass) or witness description

    def first_failure(self):
        for k, v in self.results.items():
            if v is not None:
                return k, v
        return None


ALL_FLAGS = ("multiplicative", "unital", "equivariant", "bijective")


def check_hom(f: RingHom, flags: Iterable[str] = ALL_FLAGS) -> HomVerdict:
    A, B = f.source, f.target
    results = {}
    for flag in flags:
        if flag == "multiplicative":
            witness = None
            for i in range(A.rank):
                fi = f.images[i]
                for j in range(A.rank):
                    if f(dict(A.mul_basis(i, j))) != B.mul(fi, f.images[j]):
                        witness = {"pair": [i, j], "basis": [repr(A.basis[i]), repr(A.basis[j])]}
                        break
                if witness:
                    break
            results[flag] = witness
        elif flag == "unital":
            if A.unit is None or B.unit is None:
                results[flag] = {"reason": "ring without unit"}
            else:
                img = f(A.unit)
                results[flag] = None if img == B.unit else {"image_of_unit": sorted(img.items())}
        elif flag == "equivariant":
            if A.action is None or B.action is None:
                results[flag] = {"reason": "missing action"}
                continue
            if not same_group(A.action.group, B.action.group) or A.action.elements != B.action.elements:
                results[flag] = {"reason": "actions over different groups"}
                continue
            witness = None
            for g in A.action.elements:
                for i in range(A.rank):
                    if f(A.act(g, {i: 1})) != B.act(g, f.images[i]):
                        witness = {"element": g, "basis": i}
                        break
                if witness:
                    break
            results[flag] = witness
        elif flag == "bijective":
            if A.rank != B.rank:
                results[flag] = {"reason": "ranks differ", "ranks": [A.rank, B.rank]}
            else:
                results[flag] = None if is_unimodular(f.matrix()) else {"reason": "not invertible over Z"}
        else:
            raise RingError(f"unknown flag {flag!r}")
    return HomVerdict(all(v is None for v in results.values()), results)


def identity_hom(A: BasedRing) -> RingHom:
    return RingHom(A, A, [{i: 1} for i in range(A.rank)])


# bimodules ---------------------------------------------------------------------

@dataclass(eq=False)
class Bimodule:
    """An R-bimodule free on ``basis``; ``left(i, m)`` and ``right(m, i)`` return vectors."""

    ring: BasedRing
    basis: tuple
    left: Callable
    right: Callable
    name: str = ""

    @property
    def rank(self) -> int:
        return len(self.basis)

    def check(self):
        R = self.ring
        r, n = R.rank, self.rank

        def lmul(i, v):
            out: dict = {}
            for m, a in v.items():
                out = vadd(out, self.left(i, m), a)
            return out

        def rmul(v, i):
            out: dict = {}
            for m, a in v.items():
                out = vadd(out, self.right(m, i), a)
            return out

        def lmul_vec(u, v):
            out: dict = {}
            for i, a in u.items():
                out = vadd(out, lmul(i, v), a)
            return out

        def rmul_vec(v, u):
            out: dict = {}
            for i, a in u.items():
                out = vadd(out, rmul(v, i), a)
            return out

        for m in range(n):
            for i in range(r):
                for j in range(r):
                    if rmul(lmul(i, {m: 1}), j) != lmul(i, rmul({m: 1}, j)):
                        return f"actions do not commute at ({i}, {m}, {j})"
                    if rmul(rmul({m: 1}, i), j) != rmul_vec({m: 1}, dict(R.mul_basis(i, j))):
                        return f"right action not associative at ({m}, {i}, {j})"
                    if lmul(i, lmul(j, {m: 1})) != lmul_vec(dict(R.mul_basis(i, j)), {m: 1}):
                        return f"left action not associative at ({i}, {j}, {m})"
        return None


def twisted_bimodule(R: BasedRing, g: int) -> Bimodule:
    """R_g: left multiplication, right action x·r = x·g(r)."""
    if R.action is None:
        raise RingError("twisted bimodule needs an action")
    if g not in R.action.mats:
        raise RingError("twist element does not act")
    gm = R.action.mats[g]
    B = Bimodule(R, R.basis,
                 lambda i, m: dict(R.mul_basis(i, m)),
                 lambda m, i: R.mul({m: 1}, gm[i]),
                 name=f"{R.name}_{g}")
    bad = B.check()
    if bad:
        raise RingError(bad)
    return B


def regular_bimodule(R: BasedRing) -> Bimodule:
    return Bimodule(R, R.basis, lambda i, m: dict(R.mul_basis(i, m)), lambda m, i: dict(R.mul_basis(m, i)),
                    name=R.name)


# s-unitality --------------------------------------------------------------------

@dataclass
class SUnitalResult:
    witness: dict | None
    reason: str | None


def s_unital_probe(A: BasedRing, elems: Sequence[dict]) -> SUnitalResult:
    """Look for e with e·a = a = a·e for every a in ``elems``."""
    if not elems:
        raise RingError("s-unital probe needs at least one element")
    r = A.rank
    rows: list = []
    rhs: list = []
    for a in elems:
        left = [A.mul({k: 1}, a) for k in range(r)]
        right = [A.mul(a, {k: 1}) for k in range(r)]
        for side in (left, right):
            for i in range(r):
                rows.append([side[k].get(i, 0) for k in range(r)])
                rhs.append(a.get(i, 0))
    x, reason = solve_integer(rows, rhs, r)
    if x is None:
        return SUnitalResult(None, f"no solution over {'Q' if reason == 'rational' else 'Z'}")
    e = {k: v for k, v in enumerate(x) if v}
    for a in elems:
        assert A.mul(e, a) == a and A.mul(a, e) == a
    return SUnitalResult(e, None)


# structural helpers ----------------------------------------------------------------

def inclusion_into_unitalization(A: BasedRing, At: BasedRing) -> RingHom:
    return RingHom(A, At, [{i: 1} for i in range(A.rank)])


def augmentation(At: BasedRing) -> RingHom:
    Z = ring_Z()
    u = At.rank - 1
    return RingHom(At, Z, [({0: 1} if i == u else {}) for i in range(At.rank)])


def restrict_action(A: BasedRing, sub: Iterable[int]) -> BasedRing:
    if A.action is None:
        raise RingError("ring carries no action")
    act = A.action.restrict(sub)
    return BasedRing(A.basis, A.table, A.unit, act, A.grading, A.name, A.grading_group).validate()


def with_action(A: BasedRing, action: GroupAction | None) -> BasedRing:
    return BasedRing(A.basis, A.table, A.unit, action, A.grading, A.name, A.grading_group).validate()


def ranks_summary(R: BasedRing) -> dict:
    return {"name": R.name, "rank": R.rank, "unital": R.is_unital}
