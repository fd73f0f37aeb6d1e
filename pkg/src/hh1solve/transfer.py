"""Transfer homomorphisms and the graded pieces of their image.

For a subgroup ``H`` of ``G`` with right transversal ``t_1..t_m`` the
transfer of ``x`` is the product of the ``x_[i] in H`` defined by
``t_i x = x_[i] t_j``, read modulo ``H'``. Reduced transfers compose this
with ``H -> H / Phi_p(H)`` and are recorded as F_p matrices on the
coordinates of ``A = G / Phi_p(G)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .fp import FpSubspace
from .groups import (
    ElemAbStructure,
    Group,
    GroupError,
    GroupHom,
    Subgroup,
    centralizer,
    commutator_subgroup,
    coords_to_index,
    index_to_coords,
    conjugacy_classes,
    elem_ab_structure,
    frattini_p,
    quotient,
    right_cosets,
)


def transfer_factors(g: Group, h: Subgroup, xs, transversal=None) -> np.ndarray:
    """The elements ``x_[i]`` for every ``x`` in ``xs``; shape ``(len(xs), m)``.

    ``transversal`` overrides the default (smallest-index) right transversal;
    any set of right coset representatives is accepted.
    """
    reps, coset_of = right_cosets(g, h)
    if transversal is not None:
        transversal = np.asarray(transversal, dtype=np.int64)
        if sorted(coset_of[transversal].tolist()) != list(range(len(reps))):
            raise GroupError("not a right transversal")
        reps = transversal[np.argsort(coset_of[transversal])]
    xs = np.atleast_1d(np.asarray(xs, dtype=np.int64))
    tx = g.table[reps][:, xs].T                    # t_i x, shape (len(xs), m)
    tj = reps[coset_of[tx]]                        # representative of H t_i x
    return g.table[tx, g.inverse[tj]]              # x_[i] = t_i x t_j^-1


def transfer_product(g: Group, h: Subgroup, x: int, transversal=None) -> int:
    """Ordered product ``x_[1] ... x_[m]`` (an element of ``H``, before reducing mod ``H'``)."""
    out = 0
    for f in transfer_factors(g, h, [x], transversal)[0]:
        out = int(g.table[out, f])
    return out


@dataclass
class AbelianizationMap:
    """``H -> H/H'`` for a subgroup ``H``, indexed by elements of the parent group."""

    quotient: Group
    images: np.ndarray  # parent index -> index in H/H' (-1 outside H)

    @classmethod
    def of(cls, h: Subgroup) -> "AbelianizationMap":
        hg = h.as_group()
        ab, proj = quotient(hg, commutator_subgroup(hg))
        images = np.full(h.parent.order, -1, dtype=np.int64)
        images[h.members] = proj.images
        return cls(ab, images)


def transfer_element(g: Group, h: Subgroup, x: int, transversal=None,
                     ab: AbelianizationMap | None = None) -> int:
    """Transfer ``tr_H^G(x)`` as an element index of ``H/H'``."""
    ab = ab or AbelianizationMap.of(h)
    out = 0
    for f in transfer_factors(g, h, [x], transversal)[0]:
        out = int(ab.quotient.table[out, ab.images[f]])
    return out


def transfer_table(g: Group, h: Subgroup, transversal=None,
                   ab: AbelianizationMap | None = None) -> np.ndarray:
    """``tr_H^G(x)`` in ``H/H'`` for every ``x`` in ``G`` at once."""
    ab = ab or AbelianizationMap.of(h)
    factors = ab.images[transfer_factors(g, h, np.arange(g.order), transversal)]
    out = np.zeros(g.order, dtype=np.int64)
    for col in factors.T:
        out = ab.quotient.table[out, col]
    return out


@dataclass
class FrattiniQuotient:
    """``G -> A = G / Phi_p(G)`` with F_p coordinates on ``A``."""

    group: Group
    prime: int
    subgroup: Subgroup
    quotient: Group
    projection: GroupHom
    structure: ElemAbStructure

    @classmethod
    def of(cls, g: Group, p: int) -> "FrattiniQuotient":
        key = ("frattini_quotient", p)
        if key in g._cache:
            return g._cache[key]
        phi = frattini_p(g, p)
        a, q = quotient(g, phi)
        out = cls(g, p, phi, a, q, elem_ab_structure(a, p))
        g._cache[key] = out
        return out

    @property
    def dim(self) -> int:
        return self.structure.dim

    @cached_property
    def coords(self) -> np.ndarray:
        """Coordinates in F_p^d of the image of every element of ``G``."""
        return self.structure.coords[self.projection.images]

    @cached_property
    def vertex(self) -> np.ndarray:
        """Lexicographic vertex index of the image of every element of ``G``."""
        p, d = self.prime, self.dim
        weights = p ** np.arange(d - 1, -1, -1, dtype=np.int64)
        return self.coords @ weights

    @cached_property
    def basis_preimages(self) -> list[int]:
        """Smallest element of ``G`` over each basis vector of ``A``."""
        images = self.projection.images
        return [int(np.flatnonzero(images == b)[0]) for b in self.structure.basis]


@dataclass
class ReducedTransfer:
    """Transfer into ``C_G(x)/Phi_p(C_G(x))`` as a ``d_x x d`` matrix on coordinates of ``A``."""

    source_vertex: np.ndarray
    rep: int
    matrix: np.ndarray


def subgroup_coords(h: Subgroup, p: int) -> tuple[int, np.ndarray]:
    """Coordinates of ``H -> H/Phi_p(H)``, indexed by parent elements (rows outside H are 0)."""
    hg = h.as_group()
    fq = FrattiniQuotient.of(hg, p)
    out = np.zeros((h.parent.order, fq.dim), dtype=np.int64)
    out[h.members] = fq.coords
    return fq.dim, out


def transfer_values(g: Group, p: int, x: int, transversal=None) -> tuple[int, np.ndarray]:
    """Reduced transfer ``G -> C_G(x)/Phi_p(C_G(x))`` evaluated on every element of ``G``.

    Returns ``(d_x, values)`` with ``values`` of shape ``(|G|, d_x)``. Since the
    target is abelian, the image of the product of the ``x_[i]`` is the sum of
    their coordinates.
    """
    c = centralizer(g, x)
    dx, coords = subgroup_coords(c, p)
    if dx == 0:
        return 0, np.zeros((g.order, 0), dtype=np.int64)
    factors = transfer_factors(g, c, np.arange(g.order), transversal)
    return dx, coords[factors].sum(axis=1) % p


def reduced_transfer(g: Group, p: int, x: int, fq: FrattiniQuotient | None = None) -> ReducedTransfer:
    """Matrix of the reduced transfer at ``x`` on the coordinates of ``A``.

    Column ``k`` is the value on a preimage of the k-th basis vector of ``A``.
    The full value table is checked to factor through ``G -> A``.
    """
    fq = fq or FrattiniQuotient.of(g, p)
    dx, values = transfer_values(g, p, x)
    d = fq.dim
    if dx == 0:
        matrix = np.zeros((0, d), dtype=np.int64)
    else:
        # linear on A: value(y) must equal M @ coords(y) for every y
        matrix = values[fq.basis_preimages].T.copy()
        predicted = (fq.coords @ matrix.T) % p
        if not np.array_equal(predicted, values):
            raise AssertionError(f"reduced transfer at {x} does not factor through G/Phi_p(G)")
    return ReducedTransfer(fq.coords[x].copy(), int(x), matrix)


def class_transfers(g: Group, p: int) -> list[ReducedTransfer]:
    """Reduced transfers at every conjugacy class representative (cached on ``g``)."""
    key = ("class_transfers", p)
    if key not in g._cache:
        fq = FrattiniQuotient.of(g, p)
        g._cache[key] = [reduced_transfer(g, p, cls[0], fq) for cls in conjugacy_classes(g)]
    return g._cache[key]


@dataclass
class HComponent:
    """Graded piece of the image algebra: a subspace of functionals on ``A``."""

    vertex: np.ndarray
    space: FpSubspace

    @property
    def dim(self) -> int:
        return self.space.dim


def h_components(g: Group, p: int) -> dict[int, HComponent]:
    """Every graded piece, keyed by lexicographic vertex index of ``A``."""
    fq = FrattiniQuotient.of(g, p)
    d = fq.dim
    spaces: dict[int, FpSubspace] = {}
    for rt in class_transfers(g, p):
        v = int(fq.vertex[rt.rep])
        space = spaces.setdefault(v, FpSubspace(p, d))
        if rt.matrix.shape[0]:
            space.add(rt.matrix)
    out = {}
    for v in range(p ** d):
        space = spaces.get(v, FpSubspace(p, d))
        out[v] = HComponent(index_to_coords(v, p, d), space)
    return out


def h_component(g: Group, p: int, vertex) -> HComponent:
    """Graded piece at ``vertex`` (coordinate vector or lexicographic index)."""
    if np.ndim(vertex):
        vertex = int(coords_to_index(np.asarray(vertex) % p, p))
    return h_components(g, p)[int(vertex)]


def h_component_all_preimages(g: Group, p: int, vertex: int) -> FpSubspace:
    """Same space as :func:`h_component` but summed over every preimage, not class reps."""
    fq = FrattiniQuotient.of(g, p)
    space = FpSubspace(p, fq.dim)
    for x in np.flatnonzero(fq.vertex == vertex):
        rt = reduced_transfer(g, p, int(x), fq)
        if rt.matrix.shape[0]:
            space.add(rt.matrix)
    return space


def product_transfer_check(p1: Group, p2: Group, x: int, y: int, a: int, b: int) -> tuple[int, int]:
    """Right-hand side of the product transfer formula.

    Returns ``(u, v)`` with ``u = tr_{C1}^{P1}(a)^{|y^P2|}`` in ``C1/C1'`` and
    ``v = tr_{C2}^{P2}(b)^{|x^P1|}`` in ``C2/C2'``, where ``C1 = C_P1(x)`` and
    ``C2 = C_P2(y)``, as element indices of the respective abelianizations.
    """
    c1, c2 = centralizer(p1, x), centralizer(p2, y)
    ab1, ab2 = AbelianizationMap.of(c1), AbelianizationMap.of(c2)
    size_x = p1.order // c1.order
    size_y = p2.order // c2.order
    u = ab1.quotient.power(transfer_element(p1, c1, a, ab=ab1), size_y)
    v = ab2.quotient.power(transfer_element(p2, c2, b, ab=ab2), size_x)
    return u, v
