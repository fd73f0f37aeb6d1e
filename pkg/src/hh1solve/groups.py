"""Finite groups as Cayley tables with 0-based element indices.

Index 0 is always the identity. Every operation that has to make a choice
(bases, transversals, class representatives, coset order) takes the
smallest index first, so results are reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

from .fp import is_prime

CLOSURE_CAP = 10000
EXHAUSTIVE_ASSOC_CAP = 256
SAMPLED_TRIPLES = 10**6


class GroupError(ValueError):
    """Invalid group data (failed axiom, bad generator, non-normal subgroup...)."""


class CapExceededError(RuntimeError):
    """Input is larger than a configured size cap."""


def _check_associative(table: np.ndarray, seed: int = 0) -> tuple[int, int, int] | None:
    n = table.shape[0]
    if n <= EXHAUSTIVE_ASSOC_CAP:
        for i in range(n):
            # (i*j)*k versus i*(j*k) for all j, k at once
            left = table[table[i]]
            right = table[i][table]
            bad = np.argwhere(left != right)
            if bad.size:
                j, k = bad[0]
                return i, int(j), int(k)
        return None
    rng = np.random.default_rng(seed)
    for start in range(0, SAMPLED_TRIPLES, 200_000):
        i, j, k = rng.integers(0, n, size=(3, 200_000))
        left = table[table[i, j], k]
        right = table[i, table[j, k]]
        bad = np.flatnonzero(left != right)
        if bad.size:
            b = bad[0]
            return int(i[b]), int(j[b]), int(k[b])
    return None


class Group:
    """Finite group given by its multiplication table.

    ``table[i, j]`` is the index of ``g_i * g_j``. Construct through
    :meth:`from_cayley`, :meth:`from_permutations` or :meth:`from_generators`
    rather than directly unless the table is known to be valid.
    """

    def __init__(self, table, generators: Sequence[int] | None = None, name: str | None = None,
                 validate: bool = True):
        table = np.array(table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise GroupError("Cayley table must be a nonempty square array")
        n = table.shape[0]
        if n > CLOSURE_CAP:
            raise CapExceededError(f"group order {n} exceeds cap {CLOSURE_CAP}")
        if validate:
            self._validate(table)
        table.setflags(write=False)
        self.table = table
        self.order = n
        inverse = np.argmin(table, axis=1)  # table[i, j] == 0 has exactly one j
        inverse.setflags(write=False)
        self.inverse = inverse
        self.generators = list(range(n)) if generators is None else [int(g) for g in generators]
        self.name = name
        self.labels: list | None = None
        self._cache: dict = {}

    @staticmethod
    def _validate(table: np.ndarray) -> None:
        n = table.shape[0]
        if table.min() < 0 or table.max() >= n:
            raise GroupError("table entries must be element indices in [0, order)")
        ar = np.arange(n)
        if not np.array_equal(table[0], ar) or not np.array_equal(table[:, 0], ar):
            raise GroupError("index 0 must be the identity (row and column 0 must be 0..n-1)")
        for i in range(n):
            if len(np.unique(table[i])) != n:
                raise GroupError(f"row {i} is not a permutation (no inverse / not cancellative)")
            if not (table[i] == 0).any():
                raise GroupError(f"element {i} has no inverse")
        witness = _check_associative(table)
        if witness is not None:
            i, j, k = witness
            raise GroupError(f"associativity fails for triple ({i}, {j}, {k})")

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_cayley(cls, table, name: str | None = None) -> "Group":
        return cls(table, generators=None, name=name)

    @classmethod
    def from_generators(cls, identity: Hashable, gens: Sequence[Hashable],
                        mul: Callable[[Hashable, Hashable], Hashable],
                        cap: int = CLOSURE_CAP, name: str | None = None) -> "Group":
        """Close ``gens`` under ``mul`` by breadth-first search from ``identity``.

        Elements are numbered in BFS order (right multiplication by each
        generator in turn), so the identity is 0 and generator images follow.
        """
        elements = [identity]
        index = {identity: 0}
        frontier = 0
        while frontier < len(elements):
            x = elements[frontier]
            frontier += 1
            for s in gens:
                y = mul(x, s)
                if y not in index:
                    if len(elements) >= cap:
                        raise CapExceededError(f"closure exceeds cap {cap}")
                    index[y] = len(elements)
                    elements.append(y)
        n = len(elements)
        table = np.empty((n, n), dtype=np.int64)
        for i, x in enumerate(elements):
            table[i] = [index[mul(x, y)] for y in elements]
        group = cls(table, generators=[index[s] for s in gens if index[s] != 0], name=name)
        group.labels = elements
        return group

    @classmethod
    def from_permutations(cls, degree: int, gens: Sequence[Sequence[int]],
                          cap: int = CLOSURE_CAP, name: str | None = None) -> "Group":
        """Permutation group on ``{0..degree-1}``; ``(g*h)(k) = g(h(k))``."""
        if degree < 1:
            raise GroupError("degree must be positive")
        perms = []
        for g in gens:
            g = tuple(int(v) for v in g)
            if len(g) != degree or sorted(g) != list(range(degree)):
                raise GroupError(f"generator {list(g)} is not a permutation of 0..{degree - 1}")
            perms.append(g)
        ident = tuple(range(degree))
        elements = [ident]
        index = {ident: 0}
        frontier = 0
        while frontier < len(elements):
            x = elements[frontier]
            frontier += 1
            for s in perms:
                y = tuple(x[k] for k in s)
                if y not in index:
                    if len(elements) >= cap:
                        raise CapExceededError(f"closure exceeds cap {cap}")
                    index[y] = len(elements)
                    elements.append(y)
        arr = np.array(elements, dtype=np.int64).reshape(len(elements), degree)
        n = arr.shape[0]
        table = np.empty((n, n), dtype=np.int64)
        if degree ** degree < 2**62:
            weights = degree ** np.arange(degree - 1, -1, -1, dtype=np.int64)
            keys = arr @ weights
            order = np.argsort(keys)
            for i in range(n):
                k = arr[i][arr] @ weights
                table[i] = order[np.searchsorted(keys, k, sorter=order)]
        else:
            for i in range(n):
                table[i] = [index[tuple(r)] for r in arr[i][arr].tolist()]
        gens = [index[s] for s in perms if index[s] != 0]
        group = cls(table, generators=gens, name=name)
        group.labels = elements
        return group

    # -- basic queries ------------------------------------------------------

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<Group{label} of order {self.order}>"

    def __len__(self) -> int:
        return self.order

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def power(self, a: int, k: int) -> int:
        out = 0
        if k < 0:
            a, k = self.inv(a), -k
        for _ in range(k):
            out = self.mul(out, a)
        return out

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.mul(x, a)
            k += 1
        return k

    def exponent(self) -> int:
        return int(np.lcm.reduce([self.element_order(a) for a in range(self.order)]))

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def is_p_group(self, p: int) -> bool:
        n = self.order
        while n % p == 0:
            n //= p
        return n == 1

    def conjugate(self, x: int, g: int) -> int:
        """``g x g^-1``."""
        return int(self.table[self.table[g, x], self.inverse[g]])

    def commutator(self, x: int, y: int) -> int:
        """``x y x^-1 y^-1``."""
        t = self.table
        return int(t[t[x, y], t[self.inverse[x], self.inverse[y]]])

    def full(self) -> "Subgroup":
        return Subgroup(self, range(self.order), check=False)

    def trivial(self) -> "Subgroup":
        return Subgroup(self, [0], check=False)


class Subgroup:
    """Subset of a group closed under multiplication and inverses."""

    def __init__(self, parent: Group, members: Iterable[int], check: bool = True):
        members = np.array(sorted(set(int(m) for m in members)), dtype=np.int64)
        if check:
            if members.size == 0 or members[0] != 0:
                raise GroupError("subgroup must contain the identity")
            mask = np.zeros(parent.order, dtype=bool)
            mask[members] = True
            if not mask[parent.table[np.ix_(members, members)]].all():
                raise GroupError("subset is not closed under multiplication")
            if not mask[parent.inverse[members]].all():
                raise GroupError("subset is not closed under inverses")
        members.setflags(write=False)
        self.parent = parent
        self.members = members
        self._group: Group | None = None

    @property
    def order(self) -> int:
        return int(self.members.size)

    def __len__(self) -> int:
        return self.order

    def __contains__(self, x) -> bool:
        return bool(self.mask[int(x)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent is other.parent and np.array_equal(self.members, other.members)

    def __repr__(self) -> str:
        return f"<Subgroup of order {self.order} in {self.parent!r}>"

    @property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.parent.order, dtype=bool)
        m[self.members] = True
        return m

    def is_normal(self) -> bool:
        g = self.parent
        conj = g.table[g.table[:, self.members], g.inverse[:, None]]
        return bool(self.mask[conj].all())

    def as_group(self) -> Group:
        """The subgroup as a standalone :class:`Group`; local index i is ``members[i]``."""
        if self._group is None:
            local = np.full(self.parent.order, -1, dtype=np.int64)
            local[self.members] = np.arange(self.order)
            table = local[self.parent.table[np.ix_(self.members, self.members)]]
            self._group = Group(table, generators=None, validate=False)
        return self._group

    def to_local(self) -> np.ndarray:
        """Map parent index -> local index (``-1`` outside the subgroup)."""
        local = np.full(self.parent.order, -1, dtype=np.int64)
        local[self.members] = np.arange(self.order)
        return local


@dataclass(frozen=True)
class GroupHom:
    """Homomorphism given element-wise: ``images[i]`` is the image of source element i."""

    source: Group
    target: Group
    images: np.ndarray
    check: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        images = np.asarray(self.images, dtype=np.int64)
        object.__setattr__(self, "images", images)
        if self.check:
            if images.shape != (self.source.order,) or images[0] != 0:
                raise GroupError("homomorphism must send the identity to the identity")
            lhs = images[self.source.table]
            rhs = self.target.table[np.ix_(images, images)]
            if not np.array_equal(lhs, rhs):
                i, j = np.argwhere(lhs != rhs)[0]
                raise GroupError(f"map is not multiplicative at ({int(i)}, {int(j)})")

    def __call__(self, x: int) -> int:
        return int(self.images[x])

    def kernel(self) -> Subgroup:
        return Subgroup(self.source, np.flatnonzero(self.images == 0), check=False)

    def is_surjective(self) -> bool:
        return len(np.unique(self.images)) == self.target.order


@dataclass
class ElemAbStructure:
    """F_p-coordinates on an elementary abelian p-group.

    ``coords[i]`` is the coordinate vector of element i with respect to
    ``basis``; ``element_of`` inverts it through the lexicographic index
    ``sum(c_k * p**(dim-1-k))``.
    """

    group: Group
    prime: int
    dim: int
    basis: list[int]
    coords: np.ndarray
    element_of: np.ndarray

    def vertex_index(self, element: int) -> int:
        return int(coords_to_index(self.coords[element], self.prime))


def coords_to_index(c, p: int) -> np.ndarray:
    """Lexicographic index of coordinate vectors (last axis) in F_p^d."""
    c = np.asarray(c, dtype=np.int64)
    d = c.shape[-1]
    weights = p ** np.arange(d - 1, -1, -1, dtype=np.int64)
    return c @ weights


def index_to_coords(idx, p: int, d: int) -> np.ndarray:
    idx = np.asarray(idx, dtype=np.int64)
    out = np.empty(idx.shape + (d,), dtype=np.int64)
    rest = idx.copy()
    for k in range(d - 1, -1, -1):
        out[..., k] = rest % p
        rest //= p
    return out


# -- subgroup generation -----------------------------------------------------

def generate_subgroup(g: Group, elements: Iterable[int]) -> Subgroup:
    """Smallest subgroup containing ``elements``."""
    mask = np.zeros(g.order, dtype=bool)
    mask[0] = True
    members = [0]
    gens: list[int] = []
    for s in elements:
        s = int(s)
        if mask[s]:
            continue
        gens.append(s)
        # a new generator: re-close by right multiplication with all gens so far
        frontier = list(members)
        while frontier:
            nxt = []
            for x in frontier:
                for t in gens:
                    y = int(g.table[x, t])
                    if not mask[y]:
                        mask[y] = True
                        members.append(y)
                        nxt.append(y)
            frontier = nxt
        if len(members) == g.order:
            break
    return Subgroup(g, members, check=False)


def normal_closure(g: Group, elements: Iterable[int]) -> Subgroup:
    h = generate_subgroup(g, elements)
    while True:
        conj = g.table[g.table[:, h.members], g.inverse[:, None]]
        extra = np.setdiff1d(np.unique(conj), h.members)
        if extra.size == 0:
            return h
        h = generate_subgroup(g, np.concatenate([h.members, extra]))


def _all_commutators(g: Group, chunk: int = 256) -> np.ndarray:
    t, inv = g.table, g.inverse
    seen = np.zeros(g.order, dtype=bool)
    for start in range(0, g.order, chunk):
        xs = np.arange(start, min(start + chunk, g.order))
        xy = t[xs]                       # x*y
        yx = t[:, xs].T                  # y*x
        seen[t[xy, inv[yx]]] = True      # (xy)(yx)^-1 = x y x^-1 y^-1
    return np.flatnonzero(seen)


# -- operations -------------------------------------------------------------

def direct_product(g1: Group, g2: Group) -> tuple[Group, dict[str, GroupHom]]:
    """``g1 x g2`` on index pairs flattened as ``i1 * |g2| + i2``.

    Returns the group and a dict with injections ``inj1``/``inj2`` and
    projections ``proj1``/``proj2``.
    """
    n1, n2 = g1.order, g2.order
    if n1 * n2 > CLOSURE_CAP:
        raise CapExceededError(f"product order {n1 * n2} exceeds cap {CLOSURE_CAP}")
    table = (g1.table[:, None, :, None] * n2 + g2.table[None, :, None, :]).reshape(n1 * n2, n1 * n2)
    gens = [a * n2 for a in g1.generators] + list(g2.generators)
    gens = [x for x in gens if x != 0]
    name = f"{g1.name or 'G'} x {g2.name or 'H'}"
    prod = Group(table, generators=gens, name=name, validate=False)
    maps = {
        "inj1": GroupHom(g1, prod, np.arange(n1) * n2, check=False),
        "inj2": GroupHom(g2, prod, np.arange(n2), check=False),
        "proj1": GroupHom(prod, g1, np.repeat(np.arange(n1), n2), check=False),
        "proj2": GroupHom(prod, g2, np.tile(np.arange(n2), n1), check=False),
    }
    return prod, maps


def centralizer(g: Group, x: int) -> Subgroup:
    members = np.flatnonzero(g.table[x] == g.table[:, x])
    return Subgroup(g, members, check=False)


def center(g: Group) -> Subgroup:
    members = np.flatnonzero((g.table == g.table.T).all(axis=1))
    return Subgroup(g, members, check=False)


def conjugacy_classes(g: Group) -> list[list[int]]:
    """Classes as sorted index lists, ordered by representative (smallest member)."""
    key = "classes"
    if key in g._cache:
        return g._cache[key]
    t, inv = g.table, g.inverse
    assigned = np.zeros(g.order, dtype=bool)
    classes = []
    for x in range(g.order):
        if assigned[x]:
            continue
        orbit = np.unique(t[t[:, x], inv])
        assigned[orbit] = True
        classes.append([int(v) for v in orbit])
    g._cache[key] = classes
    return classes


def commutator_subgroup(g: Group) -> Subgroup:
    # the set of commutators is closed under conjugation, so the subgroup it
    # generates is already normal
    return generate_subgroup(g, _all_commutators(g))


def frattini_p(g: Group, p: int) -> Subgroup:
    """Smallest normal subgroup with elementary abelian p-quotient."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    key = ("frattini", p)
    if key in g._cache:
        return g._cache[key]
    powers = np.arange(g.order)
    pw = np.zeros(g.order, dtype=np.int64)
    for _ in range(p):
        pw = g.table[pw, powers]
    gens = np.union1d(np.unique(pw), _all_commutators(g))
    h = generate_subgroup(g, gens)
    g._cache[key] = h
    return h


def quotient(g: Group, n: Subgroup) -> tuple[Group, GroupHom]:
    """``g / n`` with cosets ordered by smallest member, plus the projection."""
    if not n.is_normal():
        raise GroupError("quotient requires a normal subgroup")
    coset_of = np.full(g.order, -1, dtype=np.int64)
    reps = []
    for x in range(g.order):
        if coset_of[x] < 0:
            coset_of[g.table[x, n.members]] = len(reps)
            reps.append(x)
    reps = np.array(reps, dtype=np.int64)
    table = coset_of[g.table[np.ix_(reps, reps)]]
    gens = sorted({int(coset_of[s]) for s in g.generators} - {0})
    q = Group(table, generators=gens, validate=False)
    return q, GroupHom(g, q, coset_of, check=False)


def elem_ab_structure(g: Group, p: int) -> ElemAbStructure:
    """Greedy basis (smallest indices first) and coordinates on an elementary abelian p-group."""
    if not g.is_abelian() or not g.is_p_group(p):
        raise GroupError(f"group is not an elementary abelian {p}-group")
    pw = np.zeros(g.order, dtype=np.int64)
    for _ in range(p):
        pw = g.table[pw, np.arange(g.order)]
    if pw.any():
        raise GroupError(f"group is not an elementary abelian {p}-group (exponent)")
    basis: list[int] = []
    span = {0: ()}  # element -> coordinate tuple
    for x in range(g.order):
        if x in span:
            continue
        basis.append(x)
        new = {}
        for y, c in span.items():
            z = y
            for k in range(1, p):
                z = int(g.table[z, x])
                new[z] = c + (k,)
            new[y] = c + (0,)
        span = new
        if len(span) == g.order:
            break
    d = len(basis)
    coords = np.zeros((g.order, d), dtype=np.int64)
    for y, c in span.items():
        coords[y] = c
    element_of = np.empty(g.order, dtype=np.int64)
    element_of[coords_to_index(coords, p)] = np.arange(g.order)
    return ElemAbStructure(g, p, d, basis, coords, element_of)


def right_cosets(g: Group, h: Subgroup) -> tuple[np.ndarray, np.ndarray]:
    """Right cosets ``H x``: returns (transversal, coset id of every element).

    The representative of each coset is its smallest index, cosets are listed
    in order of representative, so the identity comes first.
    """
    coset_of = np.full(g.order, -1, dtype=np.int64)
    reps = []
    for x in range(g.order):
        if coset_of[x] < 0:
            coset_of[g.table[h.members, x]] = len(reps)
            reps.append(x)
    return np.array(reps, dtype=np.int64), coset_of


def right_transversal(g: Group, h: Subgroup) -> list[int]:
    return [int(t) for t in right_cosets(g, h)[0]]


def minimal_generating_set(g: Group, p: int | None = None) -> list[int]:
    """Greedy irredundant generating set drawn from ``g.generators``."""
    gens: list[int] = []
    h = g.trivial()
    for s in g.generators:
        if s not in h:
            gens.append(s)
            h = generate_subgroup(g, gens)
        if h.order == g.order:
            break
    if h.order != g.order:
        # generator list was not generating (e.g. hand-built); fall back to all elements
        for s in range(g.order):
            if s not in h:
                gens.append(s)
                h = generate_subgroup(g, gens)
    return gens
