"""End-to-end analysis of one group at one prime, and report serialization."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .derivations import ORACLE_CAP, full_der_algebra, hh1_derived_series
from .fp import is_prime
from .gamma import (
    GammaGraph,
    build_gamma,
    build_gamma2,
    find_cycle,
    layering,
    longest_path,
    reduce_gamma,
    to_dot,
    vertex_label,
)
from .groups import CapExceededError, Group
from .lie import build_h, derived_series, ss_rank
from .loewy import LOEWY_CAP, dl_upper_bound, loewy
from .spec import GroupSpec, assumptions, build_group

GRAPH_CAP = 4096

SOLVABLE = "SOLVABLE"
NOT_SOLVABLE = "NOT_SOLVABLE"
INCONCLUSIVE = "INCONCLUSIVE"


def _num(x):
    """JSON-safe number: infinities become the string ``"inf"``."""
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    return x


@dataclass
class Report:
    prime: int
    group_order: int
    is_p_group: bool
    frattini_dim: int
    gamma: dict
    gamma2: dict | None
    h: dict
    loewy_length: int | None
    dl_upper_bound: dict | None
    verdict: str
    verdict_basis: str
    hh1_bounds: dict | None = None
    oracle: dict | None = None
    notes: list[str] = field(default_factory=list)
    metadata: dict = field(default_factory=dict)
    graphs: dict[str, GammaGraph] = field(default_factory=dict, repr=False)

    def to_dict(self) -> dict[str, Any]:
        out = {
            "prime": self.prime,
            "group_order": self.group_order,
            "is_p_group": self.is_p_group,
            "frattini_dim": self.frattini_dim,
            "gamma": self.gamma,
            "gamma2": self.gamma2,
            "h": self.h,
            "loewy_length": self.loewy_length,
            "dl_upper_bound": self.dl_upper_bound,
            "verdict": self.verdict,
            "verdict_basis": self.verdict_basis,
            "hh1_bounds": self.hh1_bounds,
            "oracle": self.oracle,
            "notes": list(self.notes),
            "metadata": dict(self.metadata),
        }
        return json.loads(json.dumps(out, allow_nan=False))


def _labels(gamma: GammaGraph) -> list[str]:
    symbols = [f"g{i + 1}" for i in range(gamma.dim)]
    return [vertex_label(c, symbols) for c in gamma.vertices]


def _graph_summary(gamma: GammaGraph) -> dict:
    names = _labels(gamma)
    cycle = find_cycle(gamma)
    lp = longest_path(gamma)
    return {
        "vertices": gamma.n_vertices,
        "edge_count": gamma.n_edges,
        "acyclic": cycle is None,
        "witness_cycle": None if cycle is None else [names[v] for v in cycle],
        "longest_path": _num(lp),
        "loops": [names[v] for v in gamma.loops],
    }


def analyze(group: Group | GroupSpec, p: int, full_oracle: bool = False,
            oracle_cap: int = ORACLE_CAP) -> Report:
    """Run the graph pipeline (and optionally the derivation oracle) and decide a verdict."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    metadata: dict[str, Any] = {}
    if isinstance(group, GroupSpec):
        metadata["input"] = group.describe()
        notes = assumptions(group)
        if notes:
            metadata["assumptions"] = notes
        group = build_group(group)
    if group.order > GRAPH_CAP:
        raise CapExceededError(f"graph pipeline capped at |G| <= {GRAPH_CAP}, got {group.order}")

    is_pg = group.is_p_group(p)
    gamma = build_gamma(group, p)
    reduced = reduce_gamma(gamma)
    gsum = _graph_summary(gamma)
    gsum["reduced_edge_count"] = reduced.n_edges
    lg = longest_path(gamma)
    acyclic = gsum["acyclic"]
    graphs = {"gamma": gamma, "gamma_reduced": reduced}

    g2sum = None
    g2_cyclic = False
    if p == 2:
        g2 = build_gamma2(gamma)
        graphs["gamma2"] = g2
        s = _graph_summary(g2)
        g2sum = {"edge_count": s["edge_count"], "acyclic": s["acyclic"], "witness_cycle": s["witness_cycle"]}
        g2_cyclic = not s["acyclic"]

    names = _labels(gamma)
    h = build_h(group, p)
    series = derived_series(h)
    dl_h = len(series) - 1 if series[-1] == 0 else math.inf
    hsum = {
        "dims": {names[v]: int(gamma.h_dims[v]) for v in range(gamma.n_vertices) if gamma.h_dims[v]},
        "total_dim": h.dim,
        "derived_series": series,
        "derived_length": _num(dl_h),
        "ss_rank": _num(ss_rank(h)),
    }
    if acyclic:
        hsum["layers"] = [len(t) for t in layering(reduced)]

    notes: list[str] = []
    ll = None
    bound = None
    if is_pg and group.order <= LOEWY_CAP:
        ll = loewy(group, p).loewy_length
        if acyclic and ll >= 2:
            b = dl_upper_bound(ll, lg)
            bound = {"value": b, "floor": math.floor(b)}
    elif is_pg:
        notes.append(f"Loewy length skipped: |P| > {LOEWY_CAP}")

    oracle = None
    if full_oracle:
        if group.order <= oracle_cap:
            space = full_der_algebra(group, p, cap=oracle_cap)
            dims = hh1_derived_series(space)
            solv = dims[-1] == 0
            oracle = {
                "der_dim": space.dim,
                "inner_dim": space.inner_dim,
                "hh1_dim": space.hh1_dim,
                "derived_series": dims,
                "solvable": solv,
                "derived_length": _num(len(dims) - 1 if solv else math.inf),
            }
        else:
            notes.append(f"full oracle skipped: |G| = {group.order} > {oracle_cap}")

    # verdict
    if p != 2 and is_pg:
        verdict = SOLVABLE if acyclic else NOT_SOLVABLE
        basis = "theorem"
    elif p != 2:
        if not acyclic:
            verdict, basis = NOT_SOLVABLE, "image criterion"
        else:
            verdict, basis = INCONCLUSIVE, "image solvable"
            notes.append("image solvable; no converse for groups that are not p-groups")
    else:
        if g2_cyclic:
            verdict, basis = NOT_SOLVABLE, "gamma2 corollary"
        else:
            verdict, basis = INCONCLUSIVE, "gamma2 acyclic"
            notes.append("gamma2 acyclic: the graphs do not decide solvability for p = 2")
    if oracle is not None:
        oracle_verdict = SOLVABLE if oracle["solvable"] else NOT_SOLVABLE
        if verdict == INCONCLUSIVE:
            verdict, basis = oracle_verdict, "full oracle"
        oracle["agrees"] = oracle_verdict == verdict

    bounds = None
    if p != 2 and is_pg and acyclic:
        bounds = {
            "dl_h": _num(lg),
            "ss_rank": sorted({max(lg - 1, 0), lg}),
            "dl_hh1_min": _num(dl_h),
            "dl_hh1_max": None if bound is None else bound["value"],
        }

    return Report(
        prime=p,
        group_order=group.order,
        is_p_group=is_pg,
        frattini_dim=gamma.dim,
        gamma=gsum,
        gamma2=g2sum,
        h=hsum,
        loewy_length=ll,
        dl_upper_bound=bound,
        verdict=verdict,
        verdict_basis=basis,
        hh1_bounds=bounds,
        oracle=oracle,
        notes=notes,
        metadata=metadata,
        graphs=graphs,
    )


def render_text(report: Report) -> str:
    d = report.to_dict()
    g = d["gamma"]
    lines = [
        f"prime              {d['prime']}",
        f"group order        {d['group_order']} ({'p-group' if d['is_p_group'] else 'not a p-group'})",
        f"Frattini quotient  F_{d['prime']}^{d['frattini_dim']}",
        f"Gamma              {g['vertices']} vertices, {g['edge_count']} edges, "
        f"{'acyclic' if g['acyclic'] else 'cyclic'}, longest path {g['longest_path']}",
    ]
    if g["witness_cycle"]:
        lines.append(f"  witness cycle    {' -> '.join(g['witness_cycle'])}")
    if g["loops"]:
        lines.append(f"  loops            {', '.join(g['loops'])}")
    lines.append(f"  reduced edges    {g['reduced_edge_count']}")
    if d["gamma2"] is not None:
        g2 = d["gamma2"]
        lines.append(f"Gamma_2            {g2['edge_count']} edges, {'acyclic' if g2['acyclic'] else 'cyclic'}")
    h = d["h"]
    lines.append(f"image algebra      dim {h['total_dim']}, derived series {h['derived_series']}, "
                 f"dl {h['derived_length']}, ss-rank {h['ss_rank']}")
    if d["loewy_length"] is not None:
        lines.append(f"Loewy length       {d['loewy_length']}")
    if d["dl_upper_bound"] is not None:
        lines.append(f"dl(HH^1) bound     {d['dl_upper_bound']['value']:.6f}")
    if d["oracle"] is not None:
        o = d["oracle"]
        lines.append(f"full oracle        dim HH^1 {o['hh1_dim']}, derived series {o['derived_series']}, "
                     f"{'solvable' if o['solvable'] else 'not solvable'}")
    lines.append(f"verdict            {d['verdict']} ({d['verdict_basis']})")
    for n in d["notes"]:
        lines.append(f"note               {n}")
    return "\n".join(lines) + "\n"


def render_json(report: Report) -> str:
    return json.dumps(report.to_dict(), indent=2) + "\n"


def emit(report: Report, fmt: str = "json", dot_dir: str | Path | None = None) -> str:
    """Serialize the report; with ``dot_dir`` also write one DOT file per graph."""
    if dot_dir is not None:
        out = Path(dot_dir)
        out.mkdir(parents=True, exist_ok=True)
        for name, graph in report.graphs.items():
            (out / f"{name}.dot").write_text(to_dot(graph, name=name))
    if fmt == "json":
        return render_json(report)
    if fmt == "text":
        return render_text(report)
    raise ValueError(f"unknown format {fmt!r}")
