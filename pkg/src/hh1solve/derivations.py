"""Brute-force derivations of the group algebra F_p[G].

Elements of ``kG`` are coefficient vectors in the group-element basis and a
derivation is an ``|G| x |G|`` matrix whose column ``g`` is ``D(g)``. The
unknowns are the values ``D(s)`` on a generating set ``S``; propagating along
a BFS tree gives every ``D(g)`` as a linear function of them, and the Leibniz
rule on all pairs ``(g, s)`` with ``s in S`` cuts out the derivations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .fp import FpSubspace, matmul, nullspace
from .groups import CapExceededError, Group, minimal_generating_set

ORACLE_CAP = 32


def left_mult(g: Group, x: int) -> np.ndarray:
    """Matrix of ``v -> x v`` on kG."""
    m = np.zeros((g.order, g.order), dtype=np.int64)
    m[g.table[x], np.arange(g.order)] = 1
    return m


def right_mult(g: Group, x: int) -> np.ndarray:
    """Matrix of ``v -> v x`` on kG."""
    m = np.zeros((g.order, g.order), dtype=np.int64)
    m[g.table[:, x], np.arange(g.order)] = 1
    return m


def is_derivation(g: Group, p: int, d: np.ndarray) -> bool:
    """Check ``D(gh) = D(g) h + g D(h)`` on every pair of group elements."""
    n = g.order
    t = g.table
    d = np.asarray(d) % p
    for a in range(n):
        lhs = d[:, t[a]]                                   # D(a h) for all h, as columns
        rhs = np.zeros_like(lhs)
        # D(a) h: coefficient of k in D(a) moves to k*h
        rhs[t[:, :], np.arange(n)[None, :]] += d[:, a][:, None]
        # a D(h): coefficient of k in D(h) moves to a*k
        rhs[t[a][:, None], np.arange(n)[None, :]] += d
        if not np.array_equal(lhs, rhs % p):
            return False
    return True


@dataclass
class DerivationSpace:
    group: Group
    prime: int
    basis: np.ndarray   # (dim Der, n, n)
    inner: np.ndarray   # (dim Inn, n, n), spanning InnDer inside span(basis)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def inner_dim(self) -> int:
        return self.inner.shape[0]

    @property
    def hh1_dim(self) -> int:
        return self.dim - self.inner_dim


def full_der_algebra(g: Group, p: int, cap: int = ORACLE_CAP) -> DerivationSpace:
    n = g.order
    if n > cap:
        raise CapExceededError(f"full derivation oracle is capped at |G| <= {cap}, got {n}")
    gens = minimal_generating_set(g)
    k = len(gens)
    if k == 0:
        z = np.zeros((0, n, n), dtype=np.int64)
        return DerivationSpace(g, p, z, z.copy())
    unknowns = n * k
    right = {s: right_mult(g, s) for s in gens}
    # BFS tree: M[h] expresses D(h) in terms of the unknowns D(s_1), ..., D(s_k)
    M = {0: np.zeros((n, unknowns), dtype=np.int64)}
    order = [0]
    for h in order:
        for j, s in enumerate(gens):
            hs = int(g.table[h, s])
            if hs in M:
                continue
            block = np.zeros((n, unknowns), dtype=np.int64)
            block[:, j * n:(j + 1) * n] = left_mult(g, h)
            M[hs] = (right[s] @ M[h] + block) % p
            order.append(hs)
    rows = []
    for h in range(n):
        for j, s in enumerate(gens):
            block = np.zeros((n, unknowns), dtype=np.int64)
            block[:, j * n:(j + 1) * n] = left_mult(g, h)
            rows.append(M[int(g.table[h, s])] - right[s] @ M[h] - block)
    system = np.vstack(rows) % p
    sols = nullspace(system, p)
    stacked = np.stack([M[h] for h in range(n)])          # (n, n, unknowns)
    basis = np.einsum("hcu,ru->rch", stacked, sols) % p     # D[:, h] = M[h] @ x
    for d in basis:
        if not is_derivation(g, p, d):
            raise AssertionError("Leibniz rule fails on a solution of the generator system")
    inner = FpSubspace(p, n * n)
    for x in range(n):
        inner.add((left_mult(g, x) - right_mult(g, x)).reshape(1, -1))
    der = FpSubspace(p, n * n, basis.reshape(len(basis), -1))
    if not inner.issubspace(der):
        raise AssertionError("inner derivations are not contained in the solution space")
    return DerivationSpace(g, p, der.basis.reshape(-1, n, n), inner.basis.reshape(-1, n, n))


def _bracket_rows(mats: np.ndarray, p: int) -> np.ndarray:
    """Flattened ``[A_i, A_j]`` for all ``i < j``."""
    k, n, _ = mats.shape
    out = []
    for i in range(k - 1):
        rest = mats[i + 1:]
        ab = matmul(mats[i][None], rest, p)
        ba = matmul(rest, mats[i][None], p)
        out.append(((ab - ba) % p).reshape(len(rest), n * n))
    if not out:
        return np.zeros((0, n * n), dtype=np.int64)
    return np.vstack(out)


def hh1_derived_series(space: DerivationSpace) -> list[int]:
    """Dimensions of ``D^i(HH^1)`` via ``S_0 = Der``, ``S_{i+1} = [S_i, S_i] + Inn``.

    Ends with 0 when solvable; otherwise the last two entries repeat.
    """
    p, n = space.prime, space.group.order
    inner = FpSubspace(p, n * n, space.inner.reshape(space.inner_dim, n * n))
    current = FpSubspace(p, n * n, space.basis.reshape(space.dim, n * n))
    dims = [current.dim - inner.dim]
    while dims[-1]:
        nxt = inner.copy()
        nxt.add(_bracket_rows(current.basis.reshape(-1, n, n), p))
        dims.append(nxt.dim - inner.dim)
        if nxt.dim == current.dim:
            break
        current = nxt
    return dims


def hh1_quotient_solvable(space: DerivationSpace) -> tuple[bool, float]:
    """``(solvable, derived length)`` of ``Der / InnDer``; length is ``math.inf`` if not solvable."""
    dims = hh1_derived_series(space)
    if dims[-1] == 0:
        return True, len(dims) - 1
    return False, math.inf
