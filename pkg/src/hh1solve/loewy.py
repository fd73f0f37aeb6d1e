"""Powers of the augmentation ideal of F_p[P] and the Loewy length."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .fp import FpSubspace
from .groups import CapExceededError, Group, GroupError, minimal_generating_set

LOEWY_CAP = 512


@dataclass
class RadicalFiltration:
    group: Group
    prime: int
    dims: list[int]          # dim J^n for n = 0, 1, ... ending with 0
    loewy_length: int
    powers: list[FpSubspace]


def left_translate(g: Group, s: int, rows: np.ndarray) -> np.ndarray:
    """``s * v`` for each coefficient vector ``v`` (rows)."""
    out = np.zeros_like(rows)
    out[:, g.table[s]] = rows
    return out


def augmentation_ideal(g: Group, p: int) -> FpSubspace:
    n = g.order
    rows = np.zeros((n - 1, n), dtype=np.int64)
    rows[:, 0] = p - 1
    rows[np.arange(n - 1), np.arange(1, n)] = 1
    return FpSubspace(p, n, rows)


def loewy(g: Group, p: int, cap: int = LOEWY_CAP) -> RadicalFiltration:
    """Filtration ``J^0 = kP, J^{n+1} = J J^n`` with ``J`` spanned by the ``g - e``.

    ``J^{n+1}`` is computed as the span of ``(s - e) v`` for generators ``s``
    and basis vectors ``v`` of ``J^n``, which suffices because
    ``J = sum_s (s - e) kP`` and ``J^n`` is a two-sided ideal.
    """
    if not g.is_p_group(p):
        raise GroupError(f"Loewy length is only computed for {p}-groups (|G| = {g.order})")
    if g.order > cap:
        raise CapExceededError(f"Loewy computation capped at |P| <= {cap}, got {g.order}")
    n = g.order
    gens = minimal_generating_set(g)
    powers = [FpSubspace.full(p, n)]
    if n > 1:
        powers.append(augmentation_ideal(g, p))
    while powers[-1].dim:
        prev = powers[-1].basis
        nxt = FpSubspace(p, n)
        for s in gens:
            nxt.add((left_translate(g, s, prev) - prev) % p)
        if nxt.dim >= powers[-1].dim:
            raise AssertionError("augmentation ideal is not nilpotent")
        powers.append(nxt)
    dims = [s.dim for s in powers]
    return RadicalFiltration(g, p, dims, len(dims) - 1, powers)


def dl_upper_bound(loewy_length: int, path_length: float) -> float:
    """``log2(ll - 1) + l`` bound on the derived length of HH^1."""
    if loewy_length < 2:
        raise ValueError("bound needs Loewy length >= 2")
    if math.isinf(path_length):
        raise ValueError("bound needs an acyclic graph")
    return math.log2(loewy_length - 1) + path_length
