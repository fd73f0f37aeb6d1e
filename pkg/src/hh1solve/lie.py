"""Graded subalgebras of ``g = (+)_{a in A} Hom(A, F_p)`` and their series.

An element ``(phi, a)`` is a functional ``phi`` on ``A = F_p^d`` placed in
the summand labelled ``a``; the bracket is

    [(phi, a), (psi, b)] = (phi(b) psi - psi(a) phi, a + b).

A subalgebra is stored grade by grade (one :class:`FpSubspace` of
functionals per vertex). Brackets of homogeneous elements are homogeneous,
so the span of pairwise brackets of a graded basis is again graded and the
derived and lower central series never leave this representation.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .fp import FpSubspace
from .groups import CapExceededError, Group, coords_to_index, index_to_coords
from .transfer import FrattiniQuotient, h_components

SERIES_DIM_CAP = 4096


class GradedElement(NamedTuple):
    functional: np.ndarray
    vertex: np.ndarray


def element(functional, vertex, p: int) -> GradedElement:
    return GradedElement(np.mod(np.asarray(functional, dtype=np.int64), p),
                         np.mod(np.asarray(vertex, dtype=np.int64), p))


def bracket(x: GradedElement, y: GradedElement, p: int) -> GradedElement:
    phi, a = x
    psi, b = y
    phi_b = int(phi @ b) % p
    psi_a = int(psi @ a) % p
    return GradedElement((phi_b * psi - psi_a * phi) % p, (a + b) % p)


def ad_power(x: GradedElement, y: GradedElement, n: int, p: int) -> GradedElement:
    """``ad(x)^n (y)`` by repeated bracketing."""
    out = y
    for _ in range(n):
        out = bracket(x, out, p)
    return out


def ad_power_closed_form(x: GradedElement, y: GradedElement, n: int, p: int) -> GradedElement:
    """``phi(b)^(n-1) (phi(b) psi - n psi(a) phi, n a + b)``; valid when ``phi(a) = 0``."""
    phi, a = x
    psi, b = y
    phi_b = int(phi @ b) % p
    psi_a = int(psi @ a) % p
    scale = pow(phi_b, n - 1, p) if n >= 1 else 1
    return GradedElement((scale * (phi_b * psi - n * psi_a * phi)) % p, (n * a + b) % p)


def bv_delta(x: GradedElement, p: int) -> tuple[int, np.ndarray]:
    """BV operator on an abelian summand: ``(phi, a) -> -phi(a) a``, as (coefficient, a)."""
    phi, a = x
    return (-int(phi @ a)) % p, a


class GradedLieBasis:
    """Graded subspace of ``g``, one functional subspace per vertex of ``A``."""

    def __init__(self, p: int, d: int, components: dict[int, FpSubspace] | None = None):
        self.p = p
        self.d = d
        self.components: dict[int, FpSubspace] = {}
        for v, space in (components or {}).items():
            if space.dim:
                self.components[int(v)] = space

    @classmethod
    def full(cls, p: int, d: int) -> "GradedLieBasis":
        """All of ``g``."""
        return cls(p, d, {v: FpSubspace.full(p, d) for v in range(p ** d)})

    @classmethod
    def from_elements(cls, p: int, d: int, elements) -> "GradedLieBasis":
        out = cls(p, d)
        for f, a in elements:
            out._add(int(coords_to_index(np.mod(a, p), p)), np.atleast_2d(f))
        return out

    def _add(self, v: int, rows) -> None:
        space = self.components.get(v)
        if space is None:
            space = FpSubspace(self.p, self.d)
        space.add(rows)
        if space.dim:
            self.components[v] = space

    @property
    def dim(self) -> int:
        return sum(s.dim for s in self.components.values())

    def __len__(self) -> int:
        return self.dim

    def __repr__(self) -> str:
        return f"GradedLieBasis(p={self.p}, d={self.d}, dim={self.dim})"

    @property
    def grades(self) -> list[int]:
        return sorted(self.components)

    def grade_dims(self) -> dict[int, int]:
        return {v: self.components[v].dim for v in self.grades}

    @property
    def basis(self) -> list[GradedElement]:
        out = []
        for v in self.grades:
            a = index_to_coords(v, self.p, self.d)
            out += [GradedElement(row.copy(), a.copy()) for row in self.components[v].basis]
        return out

    def arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """Basis as ``(functionals, vertex coords)``, both shape ``(dim, d)``."""
        if not self.components:
            z = np.zeros((0, self.d), dtype=np.int64)
            return z, z.copy()
        funcs = np.vstack([self.components[v].basis for v in self.grades])
        verts = np.repeat(self.grades, [self.components[v].dim for v in self.grades])
        return funcs, index_to_coords(verts, self.p, self.d)

    def contains(self, x: GradedElement) -> bool:
        if not np.any(x.functional % self.p):
            return True
        v = int(coords_to_index(x.vertex, self.p))
        space = self.components.get(v)
        return space is not None and space.contains(x.functional)

    def issubspace(self, other: "GradedLieBasis") -> bool:
        for v, space in self.components.items():
            target = other.components.get(v)
            if target is None or not space.issubspace(target):
                return False
        return True

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedLieBasis):
            return NotImplemented
        return self.p == other.p and self.d == other.d and self.grade_dims() == other.grade_dims() \
            and self.issubspace(other)

    def restrict(self, vertices) -> "GradedLieBasis":
        vs = set(int(v) for v in vertices)
        return GradedLieBasis(self.p, self.d, {v: s.copy() for v, s in self.components.items() if v in vs})


def bracket_span(x: GradedLieBasis, y: GradedLieBasis, chunk: int = 1 << 20) -> GradedLieBasis:
    """Span of ``[u, v]`` over basis elements ``u`` of ``x`` and ``v`` of ``y``."""
    p, d = x.p, x.d
    fx, ax = x.arrays()
    fy, ay = y.arrays()
    out = GradedLieBasis(p, d)
    k, m = fx.shape[0], fy.shape[0]
    if k == 0 or m == 0:
        return out
    if max(k, m) > SERIES_DIM_CAP:
        raise CapExceededError(f"algebra dimension {max(k, m)} exceeds series cap {SERIES_DIM_CAP}")
    phi_b = (fx @ ay.T) % p                  # phi_i(b_j)
    psi_a = (ax @ fy.T) % p                  # psi_j(a_i)
    weights = p ** np.arange(d - 1, -1, -1, dtype=np.int64)
    step = max(1, chunk // max(1, m * d))
    collected: dict[int, list[np.ndarray]] = {}
    for start in range(0, k, step):
        sl = slice(start, min(start + step, k))
        chi = (phi_b[sl, :, None] * fy[None, :, :] - psi_a[sl, :, None] * fx[sl, None, :]) % p
        grade = ((ax[sl, None, :] + ay[None, :, :]) % p) @ weights
        chi = chi.reshape(-1, d)
        grade = grade.reshape(-1)
        keep = chi.any(axis=1)
        chi, grade = chi[keep], grade[keep]
        if chi.shape[0] == 0:
            continue
        order = np.argsort(grade, kind="stable")
        chi, grade = chi[order], grade[order]
        cuts = np.flatnonzero(np.diff(grade)) + 1
        for rows, g in zip(np.split(chi, cuts), grade[np.r_[0, cuts]]):
            collected.setdefault(int(g), []).append(rows)
    for g, blocks in collected.items():
        out._add(g, np.vstack(blocks))
    return out


def derived_terms(L: GradedLieBasis) -> list[GradedLieBasis]:
    """``D^0 = L, D^{i+1} = [D^i, D^i]`` until zero or a repeat (the repeat is not listed twice)."""
    terms = [L]
    while terms[-1].dim:
        nxt = bracket_span(terms[-1], terms[-1])
        if nxt.dim == terms[-1].dim:
            break
        terms.append(nxt)
    return terms


def derived_series(L: GradedLieBasis) -> list[int]:
    """Dimensions of the derived series.

    The list ends with 0 when ``L`` is solvable; otherwise its last two
    entries are equal (the series has stabilized at a perfect subalgebra).
    """
    terms = derived_terms(L)
    dims = [t.dim for t in terms]
    if dims[-1]:
        dims.append(dims[-1])
    return dims


def derived_length(L: GradedLieBasis) -> float:
    dims = derived_series(L)
    return len(dims) - 1 if dims[-1] == 0 else math.inf


def is_solvable(L: GradedLieBasis) -> bool:
    return derived_series(L)[-1] == 0


def lower_central_series(L: GradedLieBasis) -> list[int]:
    """Dimensions of ``C^0 = L, C^n = [L, C^{n-1}]``; same ending convention as :func:`derived_series`."""
    dims = [L.dim]
    current = L
    while current.dim:
        nxt = bracket_span(L, current)
        if nxt.dim == current.dim:
            dims.append(nxt.dim)
            break
        dims.append(nxt.dim)
        current = nxt
    return dims


def is_nilpotent(L: GradedLieBasis) -> bool:
    return lower_central_series(L)[-1] == 0


def ss_rank(L: GradedLieBasis) -> float:
    """Least ``n`` with ``D^n(L)`` nilpotent, or ``math.inf``."""
    terms = derived_terms(L)
    for n, t in enumerate(terms):
        if is_nilpotent(t):
            return n
    # the last term is perfect and nonzero, hence never nilpotent
    return math.inf


def build_h(g: Group, p: int, check_closed: bool = True) -> GradedLieBasis:
    """Image algebra: the sum of all graded pieces computed from transfers."""
    fq = FrattiniQuotient.of(g, p)
    comps = h_components(g, p)
    h = GradedLieBasis(p, fq.dim, {v: c.space for v, c in comps.items()})
    if check_closed and h.dim <= SERIES_DIM_CAP and not bracket_span(h, h).issubspace(h):
        raise AssertionError("image algebra is not closed under the bracket")
    return h
