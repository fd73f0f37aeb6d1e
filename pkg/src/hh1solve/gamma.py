"""The transfer graph on ``A = G / Phi_p(G)`` and its derived graphs.

Vertices are all of F_p^d in lexicographic order (vertex 0 is the
identity ``e``); edges live in a dense boolean adjacency matrix, loops
included. Graph queries (cycles, longest paths, layering) are plain
iterative algorithms on that matrix.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field, replace
from typing import Sequence

import numpy as np

from .groups import CapExceededError, Group, index_to_coords
from .transfer import FrattiniQuotient, class_transfers, h_components

MAX_DIM = 8


@dataclass
class GammaGraph:
    prime: int
    dim: int
    adjacency: np.ndarray                       # adjacency[a, b]: edge a -> b
    h_dims: np.ndarray = field(default=None)    # dim of the graded piece at each vertex
    name: str = "gamma"

    def __post_init__(self):
        self.adjacency = np.asarray(self.adjacency, dtype=bool)
        n = self.prime ** self.dim
        if self.adjacency.shape != (n, n):
            raise ValueError(f"adjacency must be {n}x{n}")
        if self.h_dims is None:
            self.h_dims = np.zeros(n, dtype=np.int64)

    @property
    def n_vertices(self) -> int:
        return self.adjacency.shape[0]

    @property
    def vertices(self) -> np.ndarray:
        """Coordinate vectors of all vertices, lexicographic."""
        return index_to_coords(np.arange(self.n_vertices), self.prime, self.dim)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(int(a), int(b)) for a, b in np.argwhere(self.adjacency)]

    @property
    def n_edges(self) -> int:
        return int(self.adjacency.sum())

    @property
    def loops(self) -> list[int]:
        return [int(v) for v in np.flatnonzero(np.diag(self.adjacency))]

    def add(self, a: int, b: int) -> int:
        """Vertex index of ``a + b`` in F_p^d."""
        ca = index_to_coords(a, self.prime, self.dim)
        cb = index_to_coords(b, self.prime, self.dim)
        weights = self.prime ** np.arange(self.dim - 1, -1, -1)
        return int(((ca + cb) % self.prime) @ weights)


def build_gamma(g: Group, p: int) -> GammaGraph:
    """Edge ``a -> b`` iff some class representative ``x`` over ``a`` has nonzero reduced transfer at ``b``."""
    fq = FrattiniQuotient.of(g, p)
    d = fq.dim
    if d > MAX_DIM:
        raise CapExceededError(f"Frattini quotient dimension {d} exceeds cap {MAX_DIM}")
    n = p ** d
    coords = index_to_coords(np.arange(n), p, d)          # (n, d)
    adj = np.zeros((n, n), dtype=bool)
    for rt in class_transfers(g, p):
        if rt.matrix.shape[0] == 0:
            continue
        a = int(fq.vertex[rt.rep])
        adj[a] |= ((coords @ rt.matrix.T) % p).any(axis=1)
    comps = h_components(g, p)
    h_dims = np.array([comps[v].dim for v in range(n)], dtype=np.int64)
    return GammaGraph(p, d, adj, h_dims)


def reduce_gamma(gamma: GammaGraph) -> GammaGraph:
    """Keep ``a -> b`` only when the graded piece at ``b`` is nonzero (single pass)."""
    adj = gamma.adjacency & (gamma.h_dims > 0)[None, :]
    return replace(gamma, adjacency=adj, name="gamma_reduced")


def build_gamma2(gamma: GammaGraph) -> GammaGraph:
    """``a ~> b`` iff ``a -> b`` and ``a -> a+b`` are two distinct edges. Only for p = 2.

    Distinctness rules out ``a = e``; no edge enters ``e``, so dropping edges
    out of ``e`` never changes which cycles exist.
    """
    if gamma.prime != 2:
        raise ValueError("gamma2 is only defined for p = 2")
    n = gamma.n_vertices
    adj = np.zeros_like(gamma.adjacency)
    # over F_2 with lexicographic indexing, a + b is the bitwise xor of indices
    idx = np.arange(n)
    for a in range(1, n):
        adj[a] = gamma.adjacency[a] & gamma.adjacency[a, idx ^ a]
    return replace(gamma, adjacency=adj, name="gamma2")


# -- graph queries -------------------------------------------------------------

def topological_order(adj: np.ndarray) -> list[int] | None:
    """Kahn's algorithm with smallest-index-first; ``None`` when there is a cycle."""
    indeg = adj.sum(axis=0).astype(np.int64)
    ready = [int(v) for v in np.flatnonzero(indeg == 0)]
    ready.sort(reverse=True)
    order = []
    while ready:
        v = ready.pop()
        order.append(v)
        succ = np.flatnonzero(adj[v])
        indeg[succ] -= 1
        fresh = [int(w) for w in succ if indeg[w] == 0]
        if fresh:
            ready.extend(fresh)
            ready.sort(reverse=True)
    return order if len(order) == adj.shape[0] else None


def is_acyclic(gamma: GammaGraph) -> bool:
    return topological_order(gamma.adjacency) is not None


def _cyclic_core(adj: np.ndarray) -> np.ndarray:
    """Vertices left after repeatedly deleting sources and sinks (contains every cycle)."""
    alive = np.ones(adj.shape[0], dtype=bool)
    while True:
        sub = adj & alive[:, None] & alive[None, :]
        keep = alive & sub.any(axis=0) & sub.any(axis=1)
        if np.array_equal(keep, alive):
            return alive
        alive = keep


def find_cycle(gamma: GammaGraph) -> list[int] | None:
    """A shortest directed cycle as a vertex list (a loop is ``[a]``), or ``None``.

    Ties are broken by the smallest starting vertex, then by BFS over
    successors in increasing order.
    """
    adj = gamma.adjacency
    loops = np.flatnonzero(np.diag(adj))
    if loops.size:
        return [int(loops[0])]
    core = _cyclic_core(adj)
    best: list[int] | None = None
    for s in np.flatnonzero(core):
        s = int(s)
        parent = {s: None}
        queue = deque([s])
        found = None
        depth = {s: 0}
        while queue and found is None:
            v = queue.popleft()
            if best is not None and depth[v] + 1 >= len(best):
                break
            for w in np.flatnonzero(adj[v] & core):
                w = int(w)
                if w == s:
                    found = v
                    break
                if w not in parent:
                    parent[w] = v
                    depth[w] = depth[v] + 1
                    queue.append(w)
        if found is not None:
            path = [found]
            while path[-1] != s:
                path.append(parent[path[-1]])
            cycle = path[::-1]
            if best is None or len(cycle) < len(best):
                best = cycle
                if len(best) == 2:
                    break
    return best


def longest_path(gamma: GammaGraph) -> float:
    """Number of edges on a longest directed path; ``math.inf`` if there is a cycle."""
    order = topological_order(gamma.adjacency)
    if order is None:
        return math.inf
    dist = np.zeros(gamma.n_vertices, dtype=np.int64)
    for v in order:
        succ = np.flatnonzero(gamma.adjacency[v])
        if succ.size:
            dist[succ] = np.maximum(dist[succ], dist[v] + 1)
    return int(dist.max()) if dist.size else 0


def layering(gamma: GammaGraph, max_layers: int | None = None) -> list[set[int]]:
    """``T_0 = all vertices``, ``T_{n+1}`` = targets of edges leaving ``T_n``.

    Stops at the first empty layer, or when a layer repeats (cycle present),
    or after ``max_layers`` layers.
    """
    adj = gamma.adjacency
    current = np.ones(gamma.n_vertices, dtype=bool)
    layers = [set(range(gamma.n_vertices))]
    limit = max_layers if max_layers is not None else gamma.n_vertices + 1
    while len(layers) <= limit:
        nxt = adj[current].any(axis=0)
        layers.append({int(v) for v in np.flatnonzero(nxt)})
        if not nxt.any() or np.array_equal(nxt, current):
            break
        current = nxt
    return layers


# -- DOT -----------------------------------------------------------------------

def vertex_label(coords: Sequence[int], symbols: Sequence[str]) -> str:
    parts = []
    for c, sym in zip(coords, symbols):
        c = int(c)
        if c == 1:
            parts.append(sym)
        elif c > 1:
            parts.append(f"{sym}^{c}")
    return "*".join(parts) if parts else "e"


def to_dot(gamma: GammaGraph, labels: Sequence[str] | None = None, name: str | None = None) -> str:
    """Deterministic DOT digraph; ``labels`` are the basis symbols (default ``g1..gd``)."""
    symbols = list(labels) if labels is not None else [f"g{i + 1}" for i in range(gamma.dim)]
    if len(symbols) != gamma.dim:
        raise ValueError(f"need {gamma.dim} basis symbols, got {len(symbols)}")
    names = [vertex_label(c, symbols) for c in gamma.vertices]
    lines = [f"digraph {name or gamma.name} {{"]
    lines += [f'  "{v}";' for v in names]
    lines += [f'  "{names[a]}" -> "{names[b]}";' for a, b in gamma.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"
