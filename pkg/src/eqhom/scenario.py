"""Scenario files: parsing, object construction and reference resolution.

A scenario is a JSON object::

    {"schema_version": 1, "seed": 0, "max_degree": 4,
     "objects": {"G": {"type": "group", "spec": "symmetric:3"}, ...},
     "checks": [{"id": "iso:green", "group": "$G", "subgroup": [0, 3, 4], "ring": {"type": "Z"}}]}

Arguments may name objects with ``"$name"`` or give them inline.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .groups import FiniteGroup, gset_from_perms, make_group, point_gset, regular_gset, coset_space
from .lincat import LinCat, from_spec as category_from_spec, path_category
from .polyfun import discrete_function_ring, simplex_monomial_ring
from .rings import (BasedRing, GroupAction, crossed_product, direct_sum, dual_numbers, from_table, gaussian,
                    group_ring, matrix_ring, ring_Z, tensor, truncated_poly, trivial_action, unitalize, _ring)
from .simplicial import GSimplicialComplex, boundary_simplex, build_complex, from_gset, simplex

SCHEMA_VERSION = 1
MAX_DEGREE_CAP = 6


class ScenarioError(ValueError):
    """Input errors: the scenario cannot be read or does not fit the schema."""


@dataclass
class Scenario:
    schema_version: int
    seed: int = 0
    max_degree: int = 4
    objects: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)

    @classmethod
    def from_json(cls, data: Any) -> "Scenario":
        if not isinstance(data, dict):
            raise ScenarioError("scenario must be a JSON object")
        version = data.get("schema_version")
        if version != SCHEMA_VERSION:
            raise ScenarioError(f"schema_version {version!r} is not supported (expected {SCHEMA_VERSION})")
        unknown = set(data) - {"schema_version", "seed", "max_degree", "objects", "checks", "description"}
        if unknown:
            raise ScenarioError(f"unknown top-level keys: {sorted(unknown)}")
        seed = data.get("seed", 0)
        N = data.get("max_degree", 4)
        if not isinstance(seed, int) or not isinstance(N, int):
            raise ScenarioError("seed and max_degree must be integers")
        if not 0 <= N <= MAX_DEGREE_CAP:
            raise ScenarioError(f"max_degree must lie in 0..{MAX_DEGREE_CAP}")
        objects = data.get("objects", {})
        checks = data.get("checks", [])
        if not isinstance(objects, dict) or not isinstance(checks, list):
            raise ScenarioError("objects must be an object and checks a list")
        for c in checks:
            if not isinstance(c, dict) or not ("id" in c or "check" in c):
                raise ScenarioError("every check needs an \"id\"")
        return cls(version, seed, N, objects, checks)

    @classmethod
    def load(cls, path: str) -> "Scenario":
        try:
            with open(path, encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, UnicodeDecodeError) as exc:
            raise ScenarioError(f"cannot read {path}: {exc}") from None
        except json.JSONDecodeError as exc:
            raise ScenarioError(f"malformed JSON in {path}: {exc}") from None
        return cls.from_json(data)


def check_entry(entry: dict) -> tuple:
    """(check id, arguments, expectation) from a scenario check entry."""
    cid = entry.get("id") or entry.get("check")
    reserved = {"id", "check", "args", "expect"}
    if cid == "iso":
        if "name" not in entry:
            raise ScenarioError("an iso check needs a \"name\"")
        cid = f"iso:{entry['name']}"
        reserved.add("name")
    args = dict(entry.get("args", {}))
    args.update({k: v for k, v in entry.items() if k not in reserved})
    return cid, args, entry.get("expect")


class Resolver:
    """Builds named objects on demand and caches them."""

    def __init__(self, objects: dict):
        self.specs = objects
        self.cache: dict = {}
        self.active: set = set()

    def ref(self, value):
        if isinstance(value, str) and value.startswith("$"):
            name = value[1:]
            if name not in self.specs:
                raise LookupError(f"unresolved reference {value}")
            if name not in self.cache:
                if name in self.active:
                    raise LookupError(f"circular reference {value}")
                self.active.add(name)
                self.cache[name] = self.build(self.specs[name])
                self.active.discard(name)
            return self.cache[name]
        return value

    def build(self, spec):
        spec = self.ref(spec)
        if not isinstance(spec, dict):
            return spec
        kind = spec.get("type")
        if kind == "group":
            return self.group(spec["spec"])
        if kind == "ring":
            return self.ring(spec)
        if kind == "complex":
            return self.complex(spec)
        if kind == "category":
            return self.category(spec)
        if kind == "gset":
            return self.gset(spec)
        return self.ring(spec)

    # groups -------------------------------------------------------------------
    def group(self, spec) -> FiniteGroup:
        spec = self.ref(spec)
        if isinstance(spec, FiniteGroup):
            return spec
        if isinstance(spec, dict) and spec.get("type") == "group":
            spec = spec["spec"]
        return make_group(spec)

    def subgroup(self, G: FiniteGroup, spec) -> frozenset:
        spec = self.ref(spec)
        if spec == "all" or spec is None:
            return frozenset(G.elements)
        if spec == "trivial":
            return frozenset([G.identity])
        if isinstance(spec, dict) and "generators" in spec:
            return G.check_subgroup(G.generate(spec["generators"]))
        return G.check_subgroup(spec)

    # G-sets ------------------------------------------------------------------
    def gset(self, spec):
        spec = self.ref(spec)
        if not isinstance(spec, dict):
            return spec
        G = self.group(spec["group"])
        kind = spec.get("kind", "cosets")
        if kind == "point":
            return point_gset(G)
        if kind == "regular":
            return regular_gset(G)
        if kind == "cosets":
            return coset_space(G, self.subgroup(G, spec.get("subgroup"))).gset()
        if kind == "perms":
            return gset_from_perms(G, {int(k): tuple(v) for k, v in spec["perms"].items()})
        raise LookupError(f"unknown gset kind {kind!r}")

    # complexes ------------------------------------------------------------------
    def complex(self, spec) -> GSimplicialComplex:
        spec = self.ref(spec)
        if isinstance(spec, GSimplicialComplex):
            return spec
        kind = spec.get("kind", "facets")
        if kind == "simplex":
            return simplex(spec["n"])
        if kind == "boundary_simplex":
            return boundary_simplex(spec["n"])
        if kind == "gset":
            return from_gset(self.gset(spec["gset"]))
        if kind == "facets":
            G = self.group(spec["group"]) if "group" in spec else None
            perms = None
            if G is not None:
                perms = spec["perms"]
                if isinstance(perms, dict):
                    perms = [perms[str(g)] for g in G.elements]
            return build_complex(spec["nvertices"], [tuple(f) for f in spec["facets"]], G, perms)
        raise LookupError(f"unknown complex kind {kind!r}")

    # categories --------------------------------------------------------------
    def category(self, spec) -> LinCat:
        spec = self.ref(spec)
        if isinstance(spec, LinCat):
            return spec
        if "path" in spec and "objects" in spec:
            return path_category(spec["objects"], [tuple(e) for e in spec["path"]])
        return category_from_spec(spec)

    # rings ----------------------------------------------------------------------
    def ring(self, spec) -> BasedRing:
        spec = self.ref(spec)
        if isinstance(spec, BasedRing):
            return spec
        if isinstance(spec, str):
            spec = {"type": spec}
        kind = spec.get("type", spec.get("kind"))
        if kind == "ring":
            kind = spec.get("kind")
        if kind == "Z":
            if "group" in spec:
                G = self.group(spec["group"])
                return _ring(("1",), {(0, 0): {0: 1}}, {0: 1}, trivial_action(G, 1), name="Z")
            return ring_Z()
        if kind == "group_ring":
            G = self.group(spec["group"])
            acting = self.group(spec["acting"]) if "acting" in spec else None
            return group_ring(G, spec.get("action"), acting, spec.get("elements"))
        if kind == "matrix":
            A = self.ring(spec["ring"])
            X = self.gset(spec["index_action"]) if "index_action" in spec else None
            index = X.points if X is not None else spec["n"]
            return matrix_ring(index, A, index_action=X)
        if kind == "truncated_poly":
            return truncated_poly(spec["k"])
        if kind == "dual_numbers":
            return dual_numbers()
        if kind == "gaussian":
            G = self.group(spec["group"]) if "group" in spec else None
            return gaussian(G, spec.get("elements"))
        if kind == "direct_sum":
            parts = [self.ring(s) for s in spec["summands"]]
            out = parts[0]
            for p in parts[1:]:
                out = direct_sum(out, p)
            return out
        if kind == "tensor":
            return tensor(self.ring(spec["left"]), self.ring(spec["right"]))
        if kind == "crossed_product":
            return crossed_product(self.ring(spec["ring"]), with_action=spec.get("with_action", False))
        if kind == "unitalize":
            return unitalize(self.ring(spec["ring"]))
        if kind == "functions":
            return discrete_function_ring(self.complex(spec["complex"]))
        if kind == "simplex_functions":
            return simplex_monomial_ring(spec["n"], spec["weight"])
        if kind == "table":
            action = None
            if "action" in spec:
                G = self.group(spec["action"]["group"])
                mats = {int(g): tuple({int(k): v for k, v in col.items()} for col in m)
                        for g, m in spec["action"]["mats"].items()}
                action = GroupAction(G, tuple(sorted(mats)), mats)
            products = {}
            for i, j, k, c in spec["products"]:
                products.setdefault((i, j), {})
                products[(i, j)][k] = products[(i, j)].get(k, 0) + c
            unit = {int(k): v for k, v in spec["unit"].items()} if spec.get("unit") is not None else None
            return from_table(spec["basis"], products, unit, spec.get("name", "table"), action)
        raise LookupError(f"unknown ring type {kind!r}")
