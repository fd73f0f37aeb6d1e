"""Dense linear algebra over the prime field F_p.

Vectors and matrices are plain ``numpy`` integer arrays holding residues in
``[0, p)``. Elimination always picks the first nonzero entry of a column as
pivot, so every reduced form is reproducible.
"""

from __future__ import annotations

import numpy as np

# float64 matmul is exact while every partial sum stays below 2**53
_EXACT_FLOAT = 2**52


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def as_fp(a, p: int) -> np.ndarray:
    return np.mod(np.asarray(a, dtype=np.int64), p)


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Product of two residue matrices, reduced mod ``p``."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    inner = a.shape[-1] if a.ndim else 1
    if inner * (p - 1) ** 2 < _EXACT_FLOAT:
        out = np.asarray(a, dtype=np.float64) @ np.asarray(b, dtype=np.float64)
        return np.mod(out.astype(np.int64), p)
    return np.mod(a @ b, p)


def rref(m, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of ``m`` over F_p.

    Returns the nonzero rows and the list of pivot columns.
    """
    m = as_fp(m, p)
    if m.ndim != 2:
        raise ValueError("rref expects a 2-d array")
    m = m.copy()
    nrows, ncols = m.shape
    r = 0
    pivots: list[int] = []
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(m[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            m[[r, k]] = m[[k, r]]
        inv = pow(int(m[r, c]), -1, p)
        if inv != 1:
            m[r] = (m[r] * inv) % p
        col = m[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            m[hit] = (m[hit] - np.outer(col[hit], m[r])) % p
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(m, p: int) -> int:
    return len(rref(m, p)[1])


def nullspace(m, p: int) -> np.ndarray:
    """Basis (as rows) of the right kernel ``{v : m @ v = 0}``."""
    m = as_fp(m, p)
    ncols = m.shape[1]
    r, pivots = rref(m, p)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for row, pc in enumerate(pivots):
            basis[i, pc] = (-r[row, f]) % p
    return basis


class FpSubspace:
    """Row space of a matrix over F_p, kept in reduced row echelon form.

    Rows can be added incrementally with :meth:`add`; tall batches are
    reduced against the current basis with one matrix product before the
    (small) remainder is eliminated.
    """

    def __init__(self, p: int, ambient: int, rows=None):
        self.p = p
        self.ambient = ambient
        self.basis = np.zeros((0, ambient), dtype=np.int64)
        self.pivots: list[int] = []
        if rows is not None:
            self.add(rows)

    @classmethod
    def full(cls, p: int, ambient: int) -> "FpSubspace":
        return cls(p, ambient, np.eye(ambient, dtype=np.int64))

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def __len__(self) -> int:
        return self.dim

    def __repr__(self) -> str:
        return f"FpSubspace(p={self.p}, ambient={self.ambient}, dim={self.dim})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, FpSubspace):
            return NotImplemented
        return (
            self.p == other.p
            and self.ambient == other.ambient
            and self.pivots == other.pivots
            and np.array_equal(self.basis, other.basis)
        )

    def copy(self) -> "FpSubspace":
        out = FpSubspace(self.p, self.ambient)
        out.basis = self.basis.copy()
        out.pivots = list(self.pivots)
        return out

    def reduce(self, rows) -> np.ndarray:
        """Residues of ``rows`` modulo the subspace (zero iff contained)."""
        rows = as_fp(np.atleast_2d(rows), self.p)
        if self.dim == 0 or rows.shape[0] == 0:
            return rows
        coeff = rows[:, self.pivots]
        return np.mod(rows - matmul(coeff, self.basis, self.p), self.p)

    def contains(self, v) -> bool:
        return not self.reduce(v).any()

    def add(self, rows, chunk: int = 512) -> int:
        """Add rows to the span. Returns the increase in dimension."""
        rows = as_fp(np.atleast_2d(np.asarray(rows, dtype=np.int64)), self.p)
        if rows.size == 0:
            return 0
        if rows.shape[1] != self.ambient:
            raise ValueError(f"expected vectors of length {self.ambient}, got {rows.shape[1]}")
        before = self.dim
        for start in range(0, rows.shape[0], chunk):
            if self.dim == self.ambient:
                break
            block = self.reduce(rows[start:start + chunk])
            block = block[block.any(axis=1)]
            if block.shape[0] == 0:
                continue
            new, new_piv = rref(block, self.p)
            if self.dim:
                # clear the new pivot columns from the old basis
                old = np.mod(self.basis - matmul(self.basis[:, new_piv], new, self.p), self.p)
            else:
                old = self.basis
            merged = np.vstack([old, new])
            piv = self.pivots + new_piv
            order = np.argsort(piv, kind="stable")
            self.basis = merged[order]
            self.pivots = [piv[i] for i in order]
        return self.dim - before

    def join(self, other: "FpSubspace") -> "FpSubspace":
        out = self.copy()
        out.add(other.basis)
        return out

    def issubspace(self, other: "FpSubspace") -> bool:
        return not other.reduce(self.basis).any() if self.dim else True
