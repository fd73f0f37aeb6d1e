"""Structured group descriptions (JSON documents) and their construction.

Grammar (one JSON object)::

    {"type": "catalog", "name": <catalog name>, "params": {...}}
    {"type": "permutation", "degree": <int>, "generators": [[...], ...]}
    {"type": "cayley", "table": [[...], ...]}
    {"type": "product", "factors": [<spec>, <spec>, ...]}

Catalog names and parameters: ``cyclic{n}``, ``elem_ab{p, n}``,
``heisenberg{p}``, ``modular{p}``, ``c9_rtimes_c9{}``, ``dihedral{order}``,
``quaternion8{}``, ``sl23{}``. Products nest at most ``MAX_DEPTH`` levels.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from . import catalog
from .groups import Group, GroupError, direct_product

MAX_DEPTH = 4


class SpecError(ValueError):
    """Malformed group description."""


@dataclass(frozen=True)
class GroupSpec:
    kind: str                                   # catalog | permutation | cayley | product
    name: str | None = None
    params: dict = field(default_factory=dict)
    degree: int | None = None
    generators: tuple = ()
    table: tuple = ()
    factors: tuple = ()

    def to_dict(self) -> dict[str, Any]:
        if self.kind == "catalog":
            return {"type": "catalog", "name": self.name, "params": dict(self.params)}
        if self.kind == "permutation":
            return {"type": "permutation", "degree": self.degree,
                    "generators": [list(g) for g in self.generators]}
        if self.kind == "cayley":
            return {"type": "cayley", "table": [list(r) for r in self.table]}
        return {"type": "product", "factors": [f.to_dict() for f in self.factors]}

    def describe(self) -> str:
        if self.kind == "catalog":
            args = ",".join(f"{k}={v}" for k, v in self.params.items())
            return f"{self.name}({args})"
        if self.kind == "permutation":
            return f"permutation group of degree {self.degree}"
        if self.kind == "cayley":
            return f"Cayley table of order {len(self.table)}"
        return " x ".join(f.describe() for f in self.factors)


def _int_list(v, what: str) -> tuple:
    if not isinstance(v, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in v):
        raise SpecError(f"{what} must be a list of integers")
    return tuple(v)


def spec_from_obj(obj: Any, depth: int = 0) -> GroupSpec:
    if depth > MAX_DEPTH:
        raise SpecError(f"product nesting deeper than {MAX_DEPTH}")
    if not isinstance(obj, dict) or "type" not in obj:
        raise SpecError("group spec must be an object with a 'type' field")
    kind = obj["type"]
    if kind == "catalog":
        name = obj.get("name")
        if name not in catalog.CATALOG:
            raise SpecError(f"unknown catalog group {name!r}; known: {', '.join(sorted(catalog.CATALOG))}")
        params = obj.get("params", {}) or {}
        if not isinstance(params, dict):
            raise SpecError("'params' must be an object")
        expected = catalog.CATALOG[name][1]
        if sorted(params) != sorted(expected):
            raise SpecError(f"catalog group {name!r} takes parameters {list(expected)}, got {sorted(params)}")
        for k, v in params.items():
            if not isinstance(v, int) or isinstance(v, bool):
                raise SpecError(f"parameter {k!r} of {name!r} must be an integer")
        return GroupSpec("catalog", name=name, params={k: params[k] for k in expected})
    if kind == "permutation":
        degree = obj.get("degree")
        if not isinstance(degree, int) or degree < 1:
            raise SpecError("'degree' must be a positive integer")
        gens = obj.get("generators", [])
        if not isinstance(gens, list):
            raise SpecError("'generators' must be a list of permutations")
        gens = tuple(_int_list(g, "each generator") for g in gens)
        for g in gens:
            if sorted(g) != list(range(degree)):
                raise SpecError(f"generator {list(g)} is not a permutation of 0..{degree - 1}")
        return GroupSpec("permutation", degree=degree, generators=gens)
    if kind == "cayley":
        table = obj.get("table")
        if not isinstance(table, list) or not table:
            raise SpecError("'table' must be a nonempty list of rows")
        rows = tuple(_int_list(r, "each table row") for r in table)
        if any(len(r) != len(rows) for r in rows):
            raise SpecError("Cayley table must be square")
        return GroupSpec("cayley", table=rows)
    if kind == "product":
        factors = obj.get("factors")
        if not isinstance(factors, list) or not factors:
            raise SpecError("'factors' must be a nonempty list of group specs")
        return GroupSpec("product", factors=tuple(spec_from_obj(f, depth + 1) for f in factors))
    raise SpecError(f"unknown spec type {kind!r}")


def parse_spec(text: str) -> GroupSpec:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"input is not valid JSON: {exc}") from None
    return spec_from_obj(obj)


def build_group(spec: GroupSpec) -> Group:
    """Construct the group; group-axiom failures surface as :class:`SpecError`."""
    try:
        if spec.kind == "catalog":
            return catalog.build(spec.name, spec.params)
        if spec.kind == "permutation":
            return Group.from_permutations(spec.degree, spec.generators)
        if spec.kind == "cayley":
            return Group.from_cayley(spec.table)
        out = build_group(spec.factors[0])
        for f in spec.factors[1:]:
            out, _ = direct_product(out, build_group(f))
        return out
    except GroupError as exc:
        raise SpecError(str(exc)) from exc


def assumptions(spec: GroupSpec) -> list[str]:
    """Identification assumptions attached to catalog entries."""
    notes = []
    if spec.kind == "catalog" and spec.name == "c9_rtimes_c9":
        notes.append("c9_rtimes_c9 = <a,b | a^9=b^9=1, bab^-1=a^4> is assumed to be SmallGroup(81,4)")
    for f in spec.factors:
        notes += assumptions(f)
    return notes
