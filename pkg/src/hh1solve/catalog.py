"""Named small groups used as fixtures and CLI catalog entries."""

from __future__ import annotations

import itertools

from .groups import Group, GroupError, direct_product
from .fp import is_prime


def cyclic(n: int) -> Group:
    if n < 1:
        raise GroupError("cyclic group order must be positive")
    if n == 1:
        return Group([[0]], generators=[], name="C1")
    return Group.from_generators(0, [1], lambda a, b: (a + b) % n, name=f"C{n}")


def elem_ab(p: int, n: int) -> Group:
    """``C_p^n`` on coordinate tuples."""
    if not is_prime(p) or n < 0:
        raise GroupError("elem_ab needs a prime p and n >= 0")
    if n == 0:
        return Group([[0]], generators=[], name="C1")
    zero = (0,) * n
    gens = [tuple(int(i == k) for i in range(n)) for k in range(n)]
    return Group.from_generators(
        zero, gens, lambda a, b: tuple((x + y) % p for x, y in zip(a, b)),
        name=f"C{p}^{n}" if n > 1 else f"C{p}")


def heisenberg(p: int) -> Group:
    """UT(3, p): upper unitriangular 3x3 matrices ``[[1,a,c],[0,1,b],[0,0,1]]``."""
    if not is_prime(p):
        raise GroupError("heisenberg needs a prime")

    def mul(x, y):
        a, b, c = x
        a2, b2, c2 = y
        return ((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p)

    return Group.from_generators((0, 0, 0), [(1, 0, 0), (0, 1, 0)], mul, name=f"UT(3,{p})")


def metacyclic(n: int, m: int, r: int, name: str | None = None) -> Group:
    """``C_n x| C_m = <a, b | a^n = b^m = 1, b a b^-1 = a^r>`` on pairs ``a^i b^j``."""
    if pow(r, m, n) != 1 % n:
        raise GroupError(f"a -> a^{r} does not have order dividing {m} mod {n}")
    powers = [pow(r, j, n) for j in range(m)]

    def mul(x, y):
        i, j = x
        i2, j2 = y
        return ((i + i2 * powers[j]) % n, (j + j2) % m)

    return Group.from_generators((0, 0), [(1, 0), (0, 1)], mul, name=name)


def modular(p: int) -> Group:
    """Order p^3, exponent p^2: ``b a b^-1 = a^(1+p)``."""
    if not is_prime(p):
        raise GroupError("modular needs a prime")
    return metacyclic(p * p, p, 1 + p, name=f"M{p ** 3}")


def c9_rtimes_c9() -> Group:
    """``<a, b | a^9 = b^9 = 1, b a b^-1 = a^4>``, order 81."""
    return metacyclic(9, 9, 4, name="C9:C9")


def dihedral(order: int) -> Group:
    """Dihedral group of the given (even) order, rotations ``r`` and a reflection ``s``."""
    if order < 4 or order % 2:
        raise GroupError("dihedral order must be even and >= 4")
    return metacyclic(order // 2, 2, order // 2 - 1, name=f"D{order}")


def quaternion8() -> Group:
    """Q8 as the unit quaternions ``{±1, ±i, ±j, ±k}`` (integer 4-tuples)."""

    def mul(x, y):
        a1, b1, c1, d1 = x
        a2, b2, c2, d2 = y
        return (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)

    return Group.from_generators((1, 0, 0, 0), [(0, 1, 0, 0), (0, 0, 1, 0)], mul, name="Q8")


def sl23_vectors() -> list[tuple[int, int]]:
    """Nonzero vectors of F_3^2 in lexicographic order (the permuted points of ``sl23``)."""
    return [v for v in itertools.product(range(3), repeat=2) if v != (0, 0)]


def sl23_generators() -> list[list[int]]:
    """``[[1,1],[0,1]]`` and ``[[0,-1],[1,0]]`` as permutations of :func:`sl23_vectors`."""
    pts = sl23_vectors()
    where = {v: i for i, v in enumerate(pts)}
    mats = [((1, 1), (0, 1)), ((0, 2), (1, 0))]
    perms = []
    for m in mats:
        perms.append([where[((m[0][0] * x + m[0][1] * y) % 3, (m[1][0] * x + m[1][1] * y) % 3)]
                      for x, y in pts])
    return perms


def sl23() -> Group:
    return Group.from_permutations(8, sl23_generators(), name="SL(2,3)")


def product(*factors: Group) -> Group:
    out = factors[0]
    for f in factors[1:]:
        out, _ = direct_product(out, f)
    return out


CATALOG = {
    "cyclic": (cyclic, ("n",)),
    "elem_ab": (elem_ab, ("p", "n")),
    "heisenberg": (heisenberg, ("p",)),
    "modular": (modular, ("p",)),
    "c9_rtimes_c9": (c9_rtimes_c9, ()),
    "dihedral": (dihedral, ("order",)),
    "quaternion8": (quaternion8, ()),
    "sl23": (sl23, ()),
}


def build(name: str, params: dict | None = None) -> Group:
    params = dict(params or {})
    try:
        factory, keys = CATALOG[name]
    except KeyError:
        raise GroupError(f"unknown catalog group {name!r}; known: {', '.join(sorted(CATALOG))}")
    missing = [k for k in keys if k not in params]
    extra = sorted(set(params) - set(keys))
    if missing or extra:
        raise GroupError(f"catalog group {name!r} takes parameters {list(keys)}; "
                         f"missing {missing}, unexpected {extra}")
    try:
        args = [int(params[k]) for k in keys]
    except (TypeError, ValueError):
        raise GroupError(f"parameters of {name!r} must be integers")
    return factory(*args)
