"""Polynomial functions on finite ordered complexes.

On a simplex with vertices v0 < ... < vn a function is a polynomial in the
barycentric coordinates t0..tn modulo t0 + ... + tn = 1.  The canonical form
eliminates tn, so it is an ordinary integer polynomial in t0..t(n-1), stored as
a dict ``exponent tuple -> coefficient``.  A :class:`PolyFun` stores one such
polynomial per simplex and must be compatible with all face restrictions.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .linalg import integer_kernel, lattice_basis, solve_integer
from .rings import BasedRing, GroupAction, _ring, vadd
from .simplicial import (GSimplicialComplex, build_complex, closure, sort_simplices,
                         subcomplex_ops)

DEFAULT_MAX_DEGREE = 8


class PolyError(ValueError):
    pass


# polynomials ---------------------------------------------------------------------

def padd(p: dict, q: dict, c: int = 1) -> dict:
    out = dict(p)
    for e, a in q.items():
        s = out.get(e, 0) + c * a
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def pmul(p: dict, q: dict) -> dict:
    out: dict = {}
    for e1, a in p.items():
        for e2, b in q.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            s = out.get(e, 0) + a * b
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out


def pdeg(p: dict) -> int:
    return max((sum(e) for e in p), default=-1)


def pconst(c: int, nvars: int) -> dict:
    return {(0,) * nvars: c} if c else {}


def pvar(i: int, nvars: int) -> dict:
    return {tuple(int(k == i) for k in range(nvars)): 1}


def ppow(p: dict, k: int, nvars: int) -> dict:
    out = pconst(1, nvars)
    for _ in range(k):
        out = pmul(out, p)
    return out


def substitute(p: dict, images: Sequence[dict], nvars: int) -> dict:
    """Replace variable i by the polynomial images[i] (in ``nvars`` variables)."""
    cache: dict = {}

    def power(i, k):
        key = (i, k)
        if key not in cache:
            cache[key] = ppow(images[i], k, nvars) if k else pconst(1, nvars)
        return cache[key]

    out: dict = {}
    for e, c in p.items():
        term = pconst(c, nvars)
        for i, k in enumerate(e):
            if k:
                term = pmul(term, power(i, k))
        out = padd(out, term)
    return out


def canonical(full: dict, m: int) -> dict:
    """Polynomial in m+1 coordinates -> canonical form in m variables (t_m = 1 - Σ others)."""
    images = [pvar(i, m) for i in range(m)]
    last = pconst(1, m)
    for i in range(m):
        last = padd(last, pvar(i, m), -1)
    images.append(last)
    return substitute(full, images, m)


def to_full(p: dict, m: int) -> dict:
    """Canonical polynomial in m variables viewed in m+1 coordinates."""
    return {e + (0,): c for e, c in p.items()}


def homogenize(full: dict, nvars: int, degree: int) -> dict:
    """Multiply each monomial of degree d by (Σ t_i)^(degree - d)."""
    s = {tuple(int(k == i) for k in range(nvars)): 1 for i in range(nvars)}
    out: dict = {}
    for e, c in full.items():
        d = sum(e)
        if d > degree:
            raise PolyError("homogenization degree too small")
        out = padd(out, pmul({e: c}, ppow(s, degree - d, nvars)))
    return out


def restrict_face(p: dict, m: int, k: int) -> dict:
    """Restrict a canonical polynomial on an m-simplex to the face without vertex k."""
    if m == 0:
        raise PolyError("a vertex has no faces")
    if k < m:
        return {e[:k] + e[k + 1:]: c for e, c in p.items() if e[k] == 0}
    # k == m: the face keeps v0..v(m-1); eliminate its new last coordinate t(m-1)
    nv = m - 1
    images = [pvar(i, nv) for i in range(nv)]
    last = pconst(1, nv)
    for i in range(nv):
        last = padd(last, pvar(i, nv), -1)
    images.append(last)
    return substitute(p, images, nv)


def evaluate(p: dict, point: Sequence) -> object:
    """Evaluate a canonical polynomial at barycentric coordinates (first m entries used)."""
    total = 0
    for e, c in p.items():
        term = c
        for x, k in zip(point, e):
            term = term * x ** k
        total += term
    return total


# polynomial functions ------------------------------------------------------------------

@dataclass(eq=False)
class PolyFun:
    space: GSimplicialComplex
    values: dict  # simplex -> canonical polynomial; missing means 0
    max_degree: int = DEFAULT_MAX_DEGREE

    def __post_init__(self):
        self.values = {s: p for s, p in self.values.items() if p}
        for s, p in self.values.items():
            if s not in self.space.simplices:
                raise PolyError(f"value on unknown simplex {list(s)}")
            if pdeg(p) > self.max_degree:
                raise PolyError(f"degree {pdeg(p)} exceeds the bound {self.max_degree}")
            if any(len(e) != len(s) - 1 for e in p):
                raise PolyError(f"polynomial on {list(s)} has the wrong number of variables")

    def __call__(self, s: tuple) -> dict:
        return self.values.get(tuple(s), {})

    def check_compatible(self):
        """Return the first (simplex, face index) where restriction disagrees, or None."""
        for s in self.space.ordered:
            m = len(s) - 1
            if m == 0:
                continue
            p = self(s)
            for k in range(m + 1):
                face = s[:k] + s[k + 1:]
                if restrict_face(p, m, k) != self(face):
                    return s, k
        return None

    def validated(self) -> "PolyFun":
        bad = self.check_compatible()
        if bad is not None:
            raise PolyError(f"not face compatible at simplex {list(bad[0])}, face {bad[1]}")
        return self

    def _same_space(self, other: "PolyFun"):
        if other.space is not self.space and other.space.simplices != self.space.simplices:
            raise PolyError("operands live over different complexes")

    def __add__(self, other: "PolyFun") -> "PolyFun":
        self._same_space(other)
        vals = {s: padd(self(s), other(s)) for s in set(self.values) | set(other.values)}
        return PolyFun(self.space, vals, max(self.max_degree, other.max_degree))

    def __sub__(self, other: "PolyFun") -> "PolyFun":
        self._same_space(other)
        vals = {s: padd(self(s), other(s), -1) for s in set(self.values) | set(other.values)}
        return PolyFun(self.space, vals, max(self.max_degree, other.max_degree))

    def __mul__(self, other: "PolyFun") -> "PolyFun":
        self._same_space(other)
        vals = {s: pmul(self(s), other(s)) for s in set(self.values) & set(other.values)}
        return PolyFun(self.space, vals, max(self.max_degree, other.max_degree))

    def scale(self, c: int) -> "PolyFun":
        return PolyFun(self.space, {s: {e: c * a for e, a in p.items()} for s, p in self.values.items()},
                       self.max_degree)

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyFun) and self.values == other.values

    def __hash__(self):
        return hash(tuple(sorted((s, tuple(sorted(p.items()))) for s, p in self.values.items())))

    def is_zero(self) -> bool:
        return not self.values

    def degree(self) -> int:
        return max((pdeg(p) for p in self.values.values()), default=-1)

    def restrict_to(self, Y: GSimplicialComplex) -> "PolyFun":
        return PolyFun(Y, {s: p for s, p in self.values.items() if s in Y.simplices}, self.max_degree)

    def at_point(self, s: tuple, point: Sequence):
        return evaluate(self(s), point)

    def to_json(self) -> list:
        return [{"simplex": list(s), "poly": [{"exps": list(e), "coef": c} for e, c in sorted(p.items())]}
                for s, p in sorted(self.values.items(), key=lambda kv: (len(kv[0]), kv[0]))]


def zero(X: GSimplicialComplex, max_degree: int = DEFAULT_MAX_DEGREE) -> PolyFun:
    return PolyFun(X, {}, max_degree)


def constant(X: GSimplicialComplex, c: int, max_degree: int = DEFAULT_MAX_DEGREE) -> PolyFun:
    return PolyFun(X, {s: pconst(c, len(s) - 1) for s in X.simplices}, max_degree)


def coordinate(X: GSimplicialComplex, v: int, max_degree: int = DEFAULT_MAX_DEGREE) -> PolyFun:
    """The barycentric coordinate function of vertex v."""
    vals = {}
    for s in X.simplices:
        if v not in s:
            continue
        m = len(s) - 1
        i = s.index(v)
        if i < m:
            vals[s] = pvar(i, m)
        else:
            p = pconst(1, m)
            for k in range(m):
                p = padd(p, pvar(k, m), -1)
            vals[s] = p
    return PolyFun(X, vals, max_degree)


def from_json(X: GSimplicialComplex, data: Sequence[dict], max_degree: int = DEFAULT_MAX_DEGREE) -> PolyFun:
    vals: dict = {}
    for item in data:
        s = tuple(sorted(item["simplex"]))
        p = {}
        for mono in item["poly"]:
            p = padd(p, {tuple(mono["exps"]): int(mono["coef"])})
        vals[s] = p
    # fill faces that were not given by restriction from any given coface
    for s in sorted(vals, key=lambda t: -len(t)):
        m = len(s) - 1
        for k in range(m + 1):
            face = s[:k] + s[k + 1:]
            if face and face not in vals:
                vals[face] = restrict_face(vals[s], m, k)
    return PolyFun(X, vals, max_degree).validated()


def support(phi: PolyFun) -> frozenset:
    return closure(phi.values.keys())


def pullback(phi: PolyFun, X: GSimplicialComplex, f: Sequence[int]) -> PolyFun:
    """f*φ along the simplicial vertex map f: X -> φ.space."""
    Y = phi.space
    vals = {}
    for s in X.simplices:
        img = tuple(sorted(set(f[v] for v in s)))
        if img not in Y.simplices:
            raise PolyError(f"vertex map does not send {list(s)} to a simplex")
        p = phi(img)
        if not p:
            continue
        n, m = len(s) - 1, len(img) - 1
        # u_j = Σ_{i : f(v_i) = w_j} t_i in the full coordinates of s
        images = []
        for w in img:
            lin = {}
            for i, v in enumerate(s):
                if f[v] == w:
                    lin = padd(lin, pvar(i, n + 1))
            images.append(lin)
        full = substitute(to_full(p, m), images, n + 1)
        vals[s] = canonical(full, n)
    return PolyFun(X, vals, phi.max_degree)


def act(phi: PolyFun, g: int) -> PolyFun:
    """(g·φ)(σ) = φ(g⁻¹σ), i.e. pull back along the vertex map of g⁻¹."""
    X = phi.space
    if X.group is None:
        raise PolyError("complex carries no action")
    return pullback(phi, X, X.perms[X.group.inv(g)])


# extension ---------------------------------------------------------------------

def fill_simplex(m: int, boundary: Sequence[dict]) -> dict:
    """A polynomial on an m-simplex restricting to boundary[j] on the face without vertex j.

    The boundary data must be compatible on intersections of faces.  Face j is
    corrected by the homogenisation of the current residual, which vanishes on
    the faces already treated and does not involve t_j.
    """
    y: dict = {}
    for j in range(m + 1):
        r = padd(boundary[j], restrict_face(y, m, j), -1)
        if not r:
            continue
        face_full = to_full(r, m - 1)  # m coordinates of the face
        h = homogenize(face_full, m, max(pdeg(r), 1))
        emb = {e[:j] + (0,) + e[j:]: c for e, c in h.items()}
        y = padd(y, canonical(emb, m))
    for j in range(m + 1):
        if restrict_face(y, m, j) != boundary[j]:
            raise PolyError("boundary data is not compatible")
    return y


@dataclass
class ExtendReport:
    psi: PolyFun
    closed_star: frozenset
    link: frozenset
    support: frozenset


def extend(phi: PolyFun, X: GSimplicialComplex, max_degree: int | None = None) -> ExtendReport:
    """Extend φ from the subcomplex φ.space to X.

    The result agrees with φ on the subcomplex, vanishes on the link of
    K = supp φ and outside its closed star.
    """
    Y = phi.space
    if not Y.simplices <= X.simplices:
        raise PolyError("the domain of φ is not a subcomplex of X")
    bound = phi.max_degree if max_degree is None else max_degree
    K = support(phi)
    if K:
        data = subcomplex_ops(X, K)
        cst, li = data.closed_star, data.link
    else:
        cst, li = frozenset(), frozenset()
    vals = {s: p for s, p in phi.values.items()}
    done = set(Y.simplices) | set(li)
    for s in sort_simplices(cst - done):
        m = len(s) - 1
        if m == 0:
            continue  # isolated new vertex of the closed star: value 0
        boundary = [vals.get(s[:k] + s[k + 1:], {}) for k in range(m + 1)]
        p = fill_simplex(m, boundary)
        if p:
            vals[s] = p
    psi = PolyFun(X, vals, bound)
    return ExtendReport(psi, cst, li, K)


@dataclass
class ExtendCheck:
    ok: bool
    failures: list


def check_extension(phi: PolyFun, rep: ExtendReport) -> ExtendCheck:
    """Postconditions: compatibility, ψ|Y = φ, supp ψ ⊂ cSt, ψ = 0 on the link."""
    psi = rep.psi
    fails = []
    if psi.check_compatible() is not None:
        fails.append("not face compatible")
    if psi.restrict_to(phi.space).values != phi.values:
        fails.append("restriction differs from φ")
    if not support(psi) <= rep.closed_star:
        fails.append("support leaves the closed star")
    if any(psi(s) for s in rep.link):
        fails.append("nonzero on the link")
    # evaluation check at a rational interior point of each link simplex
    for s in rep.link:
        pt = [1] * len(s)
        if psi.at_point(s, pt):
            fails.append("nonzero value on the link")
            break
    return ExtendCheck(not fails, fails)


def s_unit_witness(X: GSimplicialComplex, elems: Sequence[PolyFun]) -> PolyFun:
    """μ with μ·φ = φ for every φ in ``elems``: extend 1 from the union of supports."""
    K = frozenset().union(*(support(p) for p in elems)) if elems else frozenset()
    if not K:
        return zero(X)
    Ksub = GSimplicialComplex(X.nvertices, K, None, None, X.labels)
    one = constant(Ksub, 1)
    mu = extend(one, X).psi
    for p in elems:
        if mu * p != p:
            raise PolyError("s-unit witness failed")
    return mu


def separating_function(X: GSimplicialComplex, s: tuple) -> PolyFun:
    """A function nonzero on σ: the product of its barycentric coordinates, extended."""
    s = tuple(sorted(s))
    if s not in X.simplices:
        raise PolyError(f"unknown simplex {list(s)}")
    m = len(s) - 1
    sub = GSimplicialComplex(X.nvertices, closure([s]), None, None, X.labels)
    if m == 0:
        phi = PolyFun(sub, {s: pconst(1, 0)})
    else:
        p = pconst(1, m)
        for i in range(m):
            p = pmul(p, pvar(i, m))
        last = pconst(1, m)
        for i in range(m):
            last = padd(last, pvar(i, m), -1)
        p = pmul(p, last)
        phi = PolyFun(sub, {s: p}).validated()
    psi = extend(phi, X).psi
    if not psi(s):
        raise PolyError("separating function vanishes on σ")
    return psi


# degree-bounded function lattices ----------------------------------------------------------

def monomials(nvars: int, degree: int) -> list:
    out = []
    for d in range(degree + 1):
        for e in itertools.product(range(d + 1), repeat=nvars):
            if sum(e) == d:
                out.append(e)
    return sorted(set(out), key=lambda e: (sum(e), tuple(-x for x in e)))


def function_lattice(X: GSimplicialComplex, degree: int, within: frozenset | None = None) -> list:
    """A Z-basis of {φ : deg φ ≤ degree, supp φ ⊂ within} (within defaults to X)."""
    simp = [s for s in X.ordered if within is None or s in within]
    coords = []
    for s in simp:
        for e in monomials(len(s) - 1, degree):
            coords.append((s, e))
    pos = {c: i for i, c in enumerate(coords)}
    rows = []
    allowed = set(simp)
    for s in X.ordered:
        m = len(s) - 1
        if m == 0:
            continue
        for k in range(m + 1):
            face = s[:k] + s[k + 1:]
            # restriction of each coordinate monomial of s minus the face coordinate
            row_terms: dict = {}
            if s in allowed:
                for e in monomials(m, degree):
                    r = restrict_face({e: 1}, m, k)
                    for e2, c in r.items():
                        row_terms.setdefault(e2, {})
                        row_terms[e2][pos[(s, e)]] = row_terms[e2].get(pos[(s, e)], 0) + c
            if face in allowed:
                for e2 in monomials(m - 1, degree):
                    row_terms.setdefault(e2, {})
                    row_terms[e2][pos[(face, e2)]] = row_terms[e2].get(pos[(face, e2)], 0) - 1
            for e2, terms in row_terms.items():
                if any(terms.values()):
                    row = [0] * len(coords)
                    for j, c in terms.items():
                        row[j] = c
                    rows.append(row)
    if not coords:
        return []
    kernel = integer_kernel(rows, len(coords)) if rows else [[int(i == j) for i in range(len(coords))]
                                                            for j in range(len(coords))]
    kernel = lattice_basis(kernel, len(coords))
    out = []
    for v in kernel:
        vals: dict = {}
        for j, c in enumerate(v):
            if c:
                s, e = coords[j]
                vals[s] = padd(vals.get(s, {}), {e: c})
        out.append(PolyFun(X, vals, max(degree, 0)))
    return out


def flatten(phi: PolyFun, coords: list) -> list:
    return [phi(s).get(e, 0) for s, e in coords]


def coordinates_in(funcs: Sequence[PolyFun], phi: PolyFun):
    """Integer coefficients expressing φ in ``funcs``, or None."""
    keys = sorted({(s, e) for f in list(funcs) + [phi] for s, p in f.values.items() for e in p},
                  key=lambda k: (len(k[0]), k[0], k[1]))
    if not keys:
        return [0] * len(funcs)
    cols = [flatten(f, keys) for f in funcs]
    rows = [[cols[j][i] for j in range(len(funcs))] for i in range(len(keys))]
    x, _ = solve_integer(rows, flatten(phi, keys), len(funcs))
    return x


# rings of functions ----------------------------------------------------------------------

def discrete_function_ring(X: GSimplicialComplex, elements: Iterable[int] | None = None) -> BasedRing:
    """Z^(X) for a 0-dimensional X: basis χ_v, with the vertex action if present.

    ``elements`` limits the action to a subgroup (for complexes whose
    permutations are only meaningful there).
    """
    if X.dim > 0:
        raise PolyError("only 0-dimensional complexes give a finite-rank function ring")
    n = X.nvertices
    table = {(v, v): {v: 1} for v in range(n)}
    unit = {v: 1 for v in range(n)}
    action = None
    if X.group is not None:
        G = X.group
        els = tuple(sorted(elements)) if elements is not None else tuple(G.elements)
        action = GroupAction(G, els, {g: tuple({X.perms[g][v]: 1} for v in range(n)) for g in els})
    return _ring(tuple(("chi", X.vertex_label(v)) for v in range(n)), table, unit, action, name="Z^(X)")


def characteristic(X: GSimplicialComplex, v: int) -> PolyFun:
    return PolyFun(X, {(v,): pconst(1, 0)})


def simplex_monomial_ring(n: int, weight: int) -> BasedRing:
    """Z[t0..t(n-1)] modulo monomials of total degree > weight: functions on Δⁿ up to a weight.

    Basis monomials are ordered by degree; ``weights`` on the returned ring
    records the degree of each basis element.
    """
    monos = monomials(n, weight)
    pos = {e: i for i, e in enumerate(monos)}
    table = {}
    for i, a in enumerate(monos):
        for j, b in enumerate(monos):
            e = tuple(x + y for x, y in zip(a, b))
            if sum(e) <= weight:
                table[(i, j)] = {pos[e]: 1}
    R = _ring(tuple(("t", e) for e in monos), table, {pos[(0,) * n]: 1}, name=f"Z^(Δ^{n})≤{weight}")
    R.weights = tuple(sum(e) for e in monos)
    return R


# proper structures --------------------------------------------------------------------------

@dataclass(eq=False)
class ProperStructure:
    """A based ring A with a central action of functions on X, given on generators."""

    ring: BasedRing
    space: GSimplicialComplex
    generators: list  # PolyFun
    act: Callable  # (generator index, basis index) -> vector in A
    right: Callable | None = None  # right action; defaults to act

    def act_vec(self, k: int, v: dict) -> dict:
        out: dict = {}
        for i, a in v.items():
            out = vadd(out, self.act(k, i), a)
        return out

    def act_fun(self, phi: PolyFun, v: dict) -> dict:
        coeffs = coordinates_in(self.generators, phi)
        if coeffs is None:
            raise PolyError("function is not in the span of the generators")
        out: dict = {}
        for k, c in enumerate(coeffs):
            if c:
                out = vadd(out, self.act_vec(k, v), c)
        return out

    def check(self) -> dict:
        """Failures of the compatibility identities, keyed by identity name."""
        A = self.ring
        fails: dict = {}
        right = self.right or self.act
        for k in range(len(self.generators)):
            for a in range(A.rank):
                if self.act(k, a) != right(k, a):
                    fails.setdefault("c·a = a·c", [k, a])
                for b in range(A.rank):
                    ab = dict(A.mul_basis(a, b))
                    lhs = self.act_vec(k, ab)
                    if lhs != A.mul(self.act(k, a), {b: 1}):
                        fails.setdefault("c·(ab) = (c·a)b", [k, a, b])
                    if lhs != A.mul({a: 1}, self.act(k, b)):
                        fails.setdefault("c·(ab) = a(c·b)", [k, a, b])
        X = self.space
        if A.action is not None and X.group is not None:
            for g in A.action.elements:
                for k, c in enumerate(self.generators):
                    gc = act(c, g)
                    for a in range(A.rank):
                        lhs = A.act(g, self.act(k, a))
                        rhs = self.act_fun(gc, A.action.mats[g][a])
                        if lhs != rhs:
                            fails.setdefault("g(c·a) = g(c)·g(a)", [g, k, a])
        return fails

    def span(self, funcs_coeffs: Iterable[int] | None = None) -> list:
        A = self.ring
        vecs = []
        for k in range(len(self.generators)):
            for a in range(A.rank):
                v = self.act(k, a)
                vecs.append([v.get(i, 0) for i in range(A.rank)])
        return lattice_basis(vecs, A.rank)

    def is_full(self) -> bool:
        # a Hermite basis spans Z^n iff it has n rows with unit pivots
        basis = self.span()
        n = self.ring.rank
        return len(basis) == n and all(basis[i][i] == 1 for i in range(n))

    def ideal_of(self, Y: frozenset, degree: int) -> list:
        """I(Y): functions of degree ≤ degree supported in Y."""
        return function_lattice(self.space, degree, frozenset(Y))

    def submodule(self, Y: frozenset, degree: int) -> list:
        """A(Y) = I(Y)·A as a lattice basis, within the degree bound."""
        A = self.ring
        vecs = []
        for phi in self.ideal_of(Y, degree):
            for a in range(A.rank):
                v = self.act_fun(phi, {a: 1})
                vecs.append([v.get(i, 0) for i in range(A.rank)])
        return lattice_basis(vecs, A.rank)

    def pushforward(self, Y: GSimplicialComplex, f: Sequence[int], generators: list) -> "ProperStructure":
        """The structure over Y obtained through f*: functions on Y act via their pullback."""
        pulled = [pullback(c, self.space, f) for c in generators]

        def act2(k, a):
            return self.act_fun(pulled[k], {a: 1})

        return ProperStructure(self.ring, Y, generators, act2)


def discrete_proper(A: BasedRing, X: GSimplicialComplex, projector: Callable) -> ProperStructure:
    """Proper structure over a 0-dimensional X; ``projector(v, a)`` is χ_v·b_a."""
    gens = [characteristic(X, v) for v in range(X.nvertices)]
    return ProperStructure(A, X, gens, projector)


def self_proper(X: GSimplicialComplex) -> ProperStructure:
    """Z^(X) acting on itself, for 0-dimensional X."""
    R = discrete_function_ring(X)
    return discrete_proper(R, X, lambda v, a: {a: 1} if a == v else {})


def zero_proper(A: BasedRing, X: GSimplicialComplex) -> ProperStructure:
    gens = [characteristic(X, v) for v in range(X.nvertices)] if X.dim == 0 else function_lattice(X, 1)
    return ProperStructure(A, X, gens, lambda k, a: {})


# random instances --------------------------------------------------------------------------------

def random_complex(rng: random.Random, max_vertices: int = 8, max_dim: int = 3) -> GSimplicialComplex:
    n = rng.randint(1, max_vertices)
    facets = []
    for _ in range(rng.randint(1, 5)):
        k = rng.randint(1, min(n, max_dim + 1))
        facets.append(tuple(sorted(rng.sample(range(n), k))))
    return build_complex(n, facets)


def random_subcomplex(rng: random.Random, X: GSimplicialComplex) -> GSimplicialComplex:
    chosen = [s for s in X.ordered if rng.random() < 0.35]
    if not chosen:
        chosen = [rng.choice(X.ordered)]
    return GSimplicialComplex(X.nvertices, closure(chosen), None, None, X.labels)


def random_polyfun(rng: random.Random, Y: GSimplicialComplex, degree: int = 3) -> PolyFun:
    """A random compatible function of degree ≤ degree, built by filling simplices upward."""
    vals: dict = {}
    for s in Y.ordered:
        m = len(s) - 1
        if m == 0:
            c = rng.randint(-3, 3)
            if c:
                vals[s] = pconst(c, 0)
            continue
        boundary = [vals.get(s[:k] + s[k + 1:], {}) for k in range(m + 1)]
        p = fill_simplex(m, boundary)
        # add a random bubble vanishing on the boundary: t0⋯t(m-1)·(1-Σt)·q
        if rng.random() < 0.5 and m + 1 <= degree:
            bubble = pconst(rng.choice([-2, -1, 1, 2]), m)
            for i in range(m):
                bubble = pmul(bubble, pvar(i, m))
            last = pconst(1, m)
            for i in range(m):
                last = padd(last, pvar(i, m), -1)
            bubble = pmul(bubble, last)
            p = padd(p, bubble)
        if p:
            vals[s] = p
    return PolyFun(Y, vals).validated()
