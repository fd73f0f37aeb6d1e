import numpy as np
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from hh1solve.fp import FpSubspace, matmul, nullspace, rank, rref


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3, 5, 7]), st.integers(1, 6), st.integers(1, 6), st.data())
def test_nullspace_and_rank(p, r, c, data):
    m = data.draw(arrays(np.int64, (r, c), elements=st.integers(0, p - 1)))
    ns = nullspace(m, p)
    assert ns.shape == (c - rank(m, p), c)
    assert not (matmul(m, ns.T, p) % p).any()


def test_rref_pivots():
    rows, piv = rref(np.array([[0, 2, 1], [0, 1, 2]]), 3)
    assert list(piv) == [1]
    assert rows.tolist() == [[0, 1, 2]]


def test_subspace_ops():
    s = FpSubspace(3, 3, [[1, 0, 0]])
    t = FpSubspace(3, 3, [[1, 0, 0], [0, 1, 1]])
    assert s.issubspace(t) and not t.issubspace(s)
    assert s.contains([2, 0, 0]) and not s.contains([0, 1, 0])
    assert s.join(t) == t
    assert FpSubspace.full(3, 3).dim == 3


def test_large_matmul_exact():
    rng = np.random.default_rng(1)
    a = rng.integers(0, 251, (40, 300))
    b = rng.integers(0, 251, (300, 30))
    assert np.array_equal(matmul(a, b, 251), (a @ b) % 251)
