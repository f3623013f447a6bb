"""The catalog of scenario checks.

Every check maps to one library operation and names the statement it
verifies.  A check returns ``(passed, details)``; details must be plain JSON
and deterministic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from . import homology as hom
from . import induction as ind
from .groups import fixed_points_pushout_check
from .lincat import cone_normal_form, random_category, verify_cone_homotopy
from .oracles import oracle_homology, random_complex_matrices
from .polyfun import check_extension, extend, random_complex, random_polyfun, random_subcomplex, s_unit_witness
from .rings import check_hom, identity_hom, s_unital_probe
from .scenario import Resolver
from .simplicial import family_check


@dataclass(frozen=True)
class CheckSpec:
    id: str
    anchor: str
    args: dict  # argument name -> description
    run: Callable


REGISTRY: dict = {}


def register(cid: str, anchor: str, **args):
    def wrap(fn):
        REGISTRY[cid] = CheckSpec(cid, anchor, args, fn)
        return fn
    return wrap


@dataclass
class Context:
    resolver: Resolver
    seed: int
    max_degree: int

    def rng(self, salt: str) -> random.Random:
        return random.Random(f"{self.seed}:{salt}")


def _values(vals) -> list:
    return [v.to_json() for v in vals]


def _degree(args: dict, ctx: Context) -> int:
    N = int(args.get("degree", ctx.max_degree))
    if not 0 <= N <= ctx.max_degree:
        raise hom.HomologyError(f"degree {N} exceeds the cap {ctx.max_degree}")
    return N


# rings ---------------------------------------------------------------------------------

@register("ring-axioms", "based rings: associativity, unit and action by ring automorphisms",
          ring="ring spec or $ref")
def _ring_axioms(args, ctx):
    R = ctx.resolver.ring(args["ring"])
    R.validate()
    verdict = check_hom(identity_hom(R), ["multiplicative", "bijective"])
    return verdict.passed, {"rank": R.rank, "unital": R.unit is not None}


@register("s-unital", "s-unitality: a local unit for finitely many elements",
          ring="ring", elements="list of sparse vectors {index: coef}")
def _s_unital(args, ctx):
    R = ctx.resolver.ring(args["ring"])
    elems = [{int(k): v for k, v in e.items()} for e in args["elements"]]
    res = s_unital_probe(R, elems)
    if res.witness is None:
        return False, {"refutation": res.reason}
    return True, {"witness": {str(k): v for k, v in sorted(res.witness.items())}}


# induction -------------------------------------------------------------------------------

def _iso_args(args, ctx, ring_key="ring"):
    r = ctx.resolver
    G = r.group(args["group"])
    H = r.subgroup(G, args.get("subgroup"))
    A = r.ring(args[ring_key])
    return G, H, A


def _iso_result(rep: ind.IsoReport):
    return rep.passed, rep.summary()


@register("iso:across", "arrow ring of a groupoid crossed product is a matrix ring over A⋊H",
          group="group", subgroup="element list", ring="G-ring", section="optional coset representatives")
def _iso_across(args, ctx):
    G, H, A = _iso_args(args, ctx)
    return _iso_result(ind.iso_across(G, H, A, args.get("section")))


@register("iso:green", "Green imprimitivity: ind_H^G(A)⋊G ≅ M_{G/H}(A⋊H)",
          group="group", subgroup="element list", ring="H-ring", section="optional coset representatives")
def _iso_green(args, ctx):
    G, H, A = _iso_args(args, ctx)
    return _iso_result(ind.iso_green(G, H, A, args.get("section")))


@register("iso:mxg", "(M_X A)⋊G ≅ M_X(A⋊G) for a finite G-set X",
          group="group", gset="G-set spec", ring="G-ring")
def _iso_mxg(args, ctx):
    r = ctx.resolver
    G = r.group(args["group"])
    return _iso_result(ind.iso_mxg(G, r.gset(args["gset"]), r.ring(args["ring"])))


@register("iso:indtriv", "induction of a restricted G-ring is Z^(G/H) ⊗ B",
          group="group", subgroup="element list", ring="G-ring")
def _iso_indtriv(args, ctx):
    G, H, B = _iso_args(args, ctx)
    return _iso_result(ind.iso_indtriv(G, H, B, args.get("section")))


@register("iso:indcomp_i", "compression undoes induction: B ≅ comp ind B",
          group="group", subgroup="element list", ring="H-ring")
def _iso_indcomp_i(args, ctx):
    G, H, B = _iso_args(args, ctx)
    return _iso_result(ind.iso_indcomp_i(G, H, B, args.get("section")))


@register("iso:indcomp_ii", "induction undoes compression: ind comp A ≅ A for A = Z^(G/H) ⊗ B",
          group="group", subgroup="element list", ring="G-ring B")
def _iso_indcomp_ii(args, ctx):
    G, H, B = _iso_args(args, ctx)
    A, proper = ind.tensor_proper(G, H, B)
    return _iso_result(ind.iso_indcomp_ii(G, H, A, proper, args.get("section")))


@register("iso:indx", "functions on an induced space: ind_H^G Z^(X) ≅ Z^(G ×_H X)",
          group="group", subgroup="element list", complex="complex with the subgroup acting",
          degree="polynomial degree for positive-dimensional complexes")
def _iso_indx(args, ctx):
    r = ctx.resolver
    G = r.group(args["group"])
    H = r.subgroup(G, args.get("subgroup"))
    X = r.complex(args["complex"])
    if X.dim == 0:
        return _iso_result(ind.iso_indx(G, H, X, args.get("section")))
    return _iso_result(ind.indx_functions(G, H, X, int(args.get("degree", 2))))


@register("iso:indxtheta", "double coset summand of res ind is an induced H-ring",
          group="group", subgroup="H", subgroup2="K", ring="K-ring", theta="double coset representative")
def _iso_indxtheta(args, ctx):
    r = ctx.resolver
    G = r.group(args["group"])
    H = r.subgroup(G, args.get("subgroup"))
    K = r.subgroup(G, args.get("subgroup2"))
    return _iso_result(ind.iso_indxtheta(G, H, K, r.ring(args["ring"]), int(args["theta"])))


@register("res-ind-decomposition", "res^H ind_K^G splits over the double cosets H\\G/K",
          group="group", subgroup="H", subgroup2="K", ring="K-ring")
def _res_ind(args, ctx):
    r = ctx.resolver
    G = r.group(args["group"])
    H = r.subgroup(G, args.get("subgroup"))
    K = r.subgroup(G, args.get("subgroup2"))
    dec = ind.decompose_res_ind(G, H, K, r.ring(args["ring"]))
    return dec.passed, {
        "summand_ranks": [s.ring.rank for s in dec.summands],
        "thetas": [s.theta for s in dec.summands],
        "checks": dec.checks,
        "summands_passed": [rep.passed for rep in dec.reports],
    }


@register("induced-relations", "ξ-relations of induced rings against the function model",
          group="group", subgroup="element list", ring="H-ring")
def _induced_relations(args, ctx):
    G, H, A = _iso_args(args, ctx)
    fails = ind.induce_ring(G, H, A).check_relations()
    return not fails, {"failures": fails}


# categories ----------------------------------------------------------------------------

@register("cone-homotopy", "explicit homotopy between the two cone ring maps",
          category="linear category spec")
def _cone_homotopy(args, ctx):
    C = ctx.resolver.category(args["category"])
    v = verify_cone_homotopy(C)
    return v.passed, {"checked": v.checked, "failure": v.failure}


@register("cone-confluence", "cone rewriting is confluent: every reduction order gives one normal form",
          trials="number of random words", orders="reduction orders per word")
def _cone_confluence(args, ctx):
    rng = ctx.rng("cone-confluence")
    trials, orders = int(args.get("trials", 200)), int(args.get("orders", 3))
    for t in range(trials):
        C = random_category(rng)
        if not C.arrows:
            continue
        word = tuple(rng.randrange(len(C.arrows)) for _ in range(rng.randint(1, 6)))
        base = cone_normal_form(C, word)
        for _ in range(orders):
            if cone_normal_form(C, word, rng) != base:
                return False, {"trial": t, "word": list(word)}
    return True, {"trials": trials}


# simplicial / functions ------------------------------------------------------------------

@register("extend-roundtrip", "extension of finitely supported functions with support in the closed star",
          instances="number of random instances", max_vertices="vertex bound", max_dim="dimension bound",
          degree="polynomial degree bound")
def _extend_roundtrip(args, ctx):
    rng = ctx.rng("extend-roundtrip")
    n = int(args.get("instances", 200))
    mv, md, deg = int(args.get("max_vertices", 8)), int(args.get("max_dim", 3)), int(args.get("degree", 3))
    for i in range(n):
        X = random_complex(rng, mv, md)
        Y = random_subcomplex(rng, X)
        phi = random_polyfun(rng, Y, deg)
        rep = extend(phi, X)
        chk = check_extension(phi, rep)
        if not chk.ok:
            return False, {"instance": i, "failures": chk.failures}
    return True, {"instances": n}


@register("s-unit", "Z^(X) is s-unital with the constant function as witness",
          complex="complex")
def _s_unit(args, ctx):
    from .polyfun import function_lattice

    X = ctx.resolver.complex(args["complex"])
    elems = function_lattice(X, 1)
    mu = s_unit_witness(X, elems)
    return all(mu * f == f for f in elems), {"witness": mu.to_json()}


@register("family", "stabilizers of a complex lie in a family of subgroups",
          complex="G-complex", family="list of subgroups (element lists)")
def _family(args, ctx):
    X = ctx.resolver.complex(args["complex"])
    ok = family_check(X, [frozenset(f) for f in args["family"]])
    return ok, {}


@register("fixed-pushout", "fixed points of a pushout of G-sets along an injection form a pushout",
          trials="number of random pushouts", group="group")
def _fixed_pushout(args, ctx):
    G = ctx.resolver.group(args["group"])
    rng = ctx.rng("fixed-pushout")
    trials = int(args.get("trials", 50))
    for t in range(trials):
        bad = fixed_points_pushout_check(G, rng)
        if bad is not None:
            return False, {"trial": t, "witness": bad}
    return True, {"trials": trials}


# homology ---------------------------------------------------------------------------------

@register("snf-homology", "integral homology of a bounded complex via Smith normal form",
          complex="simplicial complex spec", matrices="or: boundary matrices d_1, d_2, ...",
          ranks="ranks when matrices are given")
def _snf(args, ctx):
    if "matrices" in args:
        C = hom.from_matrices(args["matrices"], args.get("ranks"))
    else:
        C = hom.simplicial_chains(ctx.resolver.complex(args["complex"])).validated()
    vals = C.homology_range()
    return True, {"values": _values(vals)}


@register("snf-oracle", "Smith homology agrees with a rational-rank and minors oracle",
          trials="number of random complexes", max_rank="rank bound", entries="entry bound")
def _snf_oracle(args, ctx):
    rng = ctx.rng("snf-oracle")
    trials = int(args.get("trials", 100))
    for t in range(trials):
        ranks, mats = random_complex_matrices(rng, int(args.get("max_rank", 6)), int(args.get("entries", 5)))
        C = hom.from_matrices(mats, ranks)
        if C.homology_range() != oracle_homology(ranks, mats):
            return False, {"trial": t, "ranks": ranks, "matrices": mats}
    return True, {"trials": trials}


@register("bar-probe", "excision test: tor of M with A through the bar complex vanishes",
          ring="ring", coefficients="Z, Z/m or a list", degree="top degree N")
def _bar_probe(args, ctx):
    R = ctx.resolver.ring(args["ring"])
    probe = hom.bar_tor_probe(R, args.get("coefficients", "Z"), _degree(args, ctx))
    d = probe.to_json()
    first = probe.first_nonzero()
    if first is not None:
        d["witness"] = {"degree": first[0], "value": first[1].to_json()}
    return probe.vanishes, d


@register("barsum", "a finite direct sum passes the bar probe iff every summand does",
          rings="list of rings", degree="top degree N")
def _barsum(args, ctx):
    from .rings import direct_sum

    rings = [ctx.resolver.ring(s) for s in args["rings"]]
    N = _degree(args, ctx)
    single = [hom.bar_tor_probe(R, "Z", N).vanishes for R in rings]
    table = []
    ok = True
    for i, A in enumerate(rings):
        row = []
        for j, B in enumerate(rings):
            both = hom.bar_tor_probe(direct_sum(A, B), "Z", N).vanishes
            row.append(both)
            if both != (single[i] and single[j]):
                ok = False
        table.append(row)
    return ok, {"single": single, "sums": table, "truncation": N}


@register("hochschild", "Hochschild homology, plain, twisted, nonunital or of a cyclic nerve",
          ring="ring", degree="top degree N", twist="group element for R_g coefficients",
          gset="G-set for the cyclic nerve of R⋊𝒢^G(S)")
def _hochschild(args, ctx):
    from .rings import twisted_bimodule

    r = ctx.resolver
    R = r.ring(args["ring"])
    N = _degree(args, ctx)
    if "gset" in args:
        vals = hom.cyclic_nerve_complex(R, r.gset(args["gset"]), N + 1).homology_range(N)
    elif "twist" in args:
        vals = hom.hochschild_homology(R, N, coeff=twisted_bimodule(R, int(args["twist"])))
    else:
        vals = hom.hochschild_homology(R, N)
    return True, {"values": _values(vals), "truncation": N}


@register("conjugacy-split", "Hochschild complex of a crossed product splits over conjugacy classes",
          ring="group-graded ring", degree="top degree")
def _conj_split(args, ctx):
    R = ctx.resolver.ring(args["ring"])
    N = _degree(args, ctx)
    C = hom.hochschild_complex(R, N)
    sp = hom.conjugacy_split(R, C)
    return sp.passed, {
        "classes": [list(c) for c in sp.classes],
        "ranks": [sp.ranks[k] for k in sorted(sp.ranks)],
        "totals": sp.totals,
        "closed_under_b": [sp.closed_b[k] for k in sorted(sp.closed_b)],
        "closed_under_t": [sp.closed_t[k] for k in sorted(sp.closed_t)],
    }


@register("cyclic-hc", "cyclic homology through the cyclic bicomplex", ring="unital ring", degree="top degree")
def _cyclic(args, ctx):
    R = ctx.resolver.ring(args["ring"])
    N = min(_degree(args, ctx), 4)
    return True, {"values": [hom.cyclic_hc(R, n).to_json() for n in range(N + 1)], "truncation": N}


@register("hyperhomology", "group homology through the bar resolution",
          group="group", subgroup="acting subgroup", degree="top degree")
def _hyper(args, ctx):
    r = ctx.resolver
    G = r.group(args["group"])
    K = r.subgroup(G, args.get("subgroup"))
    M = hom.trivial_module(G, K, hom.ChainComplex({0: 1}, {}, {0: [0]}))
    N = _degree(args, ctx)
    return True, {"values": _values(hom.group_hyperhomology(M, N)), "truncation": N}


@register("coend", "equivariant homology as a coend over the orbit category",
          group="group", complex="G-complex", ring="G-ring", degree="top degree")
def _coend(args, ctx):
    r = ctx.resolver
    G = r.group(args["group"])
    res = hom.equivariant_coend(G, r.complex(args["complex"]), r.ring(args["ring"]), _degree(args, ctx))
    return True, {"values": _values(res.values), "truncation": res.N}


@register("yoneda", "the coend on G/H is Hochschild homology of the arrow ring of R⋊𝒢^G(G/H)",
          group="group", subgroup="H or \"each\" for every subgroup", ring="G-ring", degree="top degree")
def _yoneda(args, ctx):
    r = ctx.resolver
    G = r.group(args["group"])
    R = r.ring(args["ring"])
    N = _degree(args, ctx)
    subs = G.subgroups if args.get("subgroup", "each") == "each" else [r.subgroup(G, args["subgroup"])]
    rows = []
    ok = True
    for H in subs:
        y = hom.yoneda_check(G, H, R, N)
        ok &= y.passed
        rows.append({"subgroup": list(y.subgroup), "coend": _values(y.coend),
                     "cyclic_nerve": _values(y.cyclic_nerve),
                     "plain": _values(y.plain) if y.plain is not None else None, "agree": y.passed})
    return ok, {"subgroups": rows, "truncation": N}


@register("reilu", "conjugacy decomposition of equivariant Hochschild homology into hyperhomology",
          group="group", complex="G-complex", ring="G-ring", degree="top degree",
          representatives="optional class representatives")
def _reilu(args, ctx):
    r = ctx.resolver
    G = r.group(args["group"])
    rep = hom.verify_reilu(G, r.complex(args["complex"]), r.ring(args["ring"]), _degree(args, ctx),
                           args.get("representatives"))
    return rep.passed, rep.to_json()


@register("l-ladder", "the ladder L_{n+1}A = ker(A ⊗ L_nA -> L_nA)", ring="ring", n="ladder index")
def _ladder(args, ctx):
    res = hom.L_ladder(ctx.resolver.ring(args["ring"]), int(args.get("n", 0)))
    return True, {"rank": res.rank, "n": res.n}


def catalog() -> list:
    """(id, anchor, args) for every check, sorted by id."""
    return [(c.id, c.anchor, dict(sorted(c.args.items()))) for c in sorted(REGISTRY.values(), key=lambda c: c.id)]
