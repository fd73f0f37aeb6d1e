import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hh1solve import catalog
from hh1solve.lie import (
    GradedLieBasis,
    ad_power,
    ad_power_closed_form,
    bracket,
    build_h,
    bv_delta,
    derived_series,
    element,
    is_nilpotent,
    lower_central_series,
    ss_rank,
)


def test_bracket_examples():
    phi = element([1, 2], [0, 0], 3)
    z = bracket(phi, phi, 3)
    assert not z.functional.any() and not z.vertex.any()
    x, y = element([1, 0], [2, 0], 3), element([0, 1], [1, 1], 3)     # phi(b) = 1, psi(a) = 0
    out = bracket(x, y, 3)
    assert np.array_equal(out.functional, [0, 1]) and np.array_equal(out.vertex, [0, 1])
    # p = 2, A = C2: [(phi, e), (phi, g)] = (phi, g)
    out = bracket(element([1], [0], 2), element([1], [1], 2), 2)
    assert list(out.functional) == [1] and list(out.vertex) == [1]


def test_ad_power_examples():
    p = 3
    x = element([1, 0], [0, 1], p)            # phi(a) = 0
    y = element([1, 1], [1, 0], p)            # phi(b) = 1
    one, br = ad_power(x, y, 1, p), bracket(x, y, p)
    assert np.array_equal(one.functional, br.functional) and np.array_equal(one.vertex, br.vertex)
    out = ad_power(x, y, p, p)
    assert np.array_equal(out.functional, y.functional)
    assert np.array_equal(out.vertex, y.vertex)
    # p = 2 lemma: Ad^2((phi,a))((psi,b)) = (phi(ab) phi(b) psi, b)
    for phi, a, psi, b in itertools.product(itertools.product([0, 1], repeat=2), repeat=4):
        phi, a, psi, b = map(np.array, (phi, a, psi, b))
        phi_b, phi_ab = phi @ b % 2, phi @ ((a + b) % 2) % 2
        if phi_b and phi_ab:
            out = ad_power(element(phi, a, 2), element(psi, b, 2), 2, 2)
            assert np.array_equal(out.functional, phi_ab * phi_b * psi % 2)
            assert np.array_equal(out.vertex, b)


@pytest.mark.parametrize("p,d", [(2, 2), (3, 2), (5, 1), (3, 3)])
def test_ad_closed_form(p, d):
    vecs = [np.array(v) for v in itertools.product(range(p), repeat=d)]
    rng = np.random.default_rng(p * 10 + d)
    for _ in range(300):
        phi, a, psi, b = (vecs[i] for i in rng.integers(len(vecs), size=4))
        if phi @ a % p:
            continue
        x, y = element(phi, a, p), element(psi, b, p)
        for n in range(1, 2 * p + 1):
            it, cf = ad_power(x, y, n, p), ad_power_closed_form(x, y, n, p)
            assert np.array_equal(it.functional, cf.functional) and np.array_equal(it.vertex, cf.vertex)


def test_bv_delta():
    assert bv_delta(element([1, 0], [0, 1], 3), 3)[0] == 0
    assert bv_delta(element([1, 0], [0, 0], 3), 3)[0] == 0
    c, a = bv_delta(element([1, 0], [1, 0], 3), 3)
    assert c == 2 and list(a) == [1, 0]


def test_build_h_examples():
    assert build_h(catalog.elem_ab(3, 2), 3).dim == 9 * 2
    assert build_h(catalog.cyclic(2), 2).dim == 2
    assert build_h(catalog.cyclic(4), 3).dim == 0
    h = build_h(catalog.heisenberg(3), 3)
    assert derived_series(h) == [h.dim, 0] and is_nilpotent(h)


def test_series_examples():
    assert derived_series(build_h(catalog.cyclic(2), 2)) == [2, 1, 0]
    sl = build_h(catalog.sl23(), 3)
    s = derived_series(sl)
    assert s[-1] == s[-2] > 0
    assert math.isinf(ss_rank(sl))
    assert lower_central_series(sl)[-1] > 0
    assert ss_rank(build_h(catalog.heisenberg(3), 3)) == 0


def test_full_algebra_matches_centralizer_count():
    g = GradedLieBasis.full(3, 1)
    assert g.dim == 3


def _basis_triples_hold(L, p, triples):
    for x, y, z in triples:
        xx = bracket(x, x, p)
        assert not xx.functional.any()
        yz = bracket(y, z, p)
        zx = bracket(z, x, p)
        xy = bracket(x, y, p)
        terms = [bracket(x, yz, p), bracket(y, zx, p), bracket(z, xy, p)]
        # all three terms live in grade a+b+c
        total = sum(t.functional for t in terms) % p
        assert not total.any()
        # antisymmetry
        assert not ((xy.functional + bracket(y, x, p).functional) % p).any()


@pytest.mark.parametrize("p,group", [
    (3, lambda: catalog.heisenberg(3)), (3, lambda: catalog.modular(3)),
    (2, lambda: catalog.cyclic(2)), (2, lambda: catalog.elem_ab(2, 2)), (3, lambda: catalog.cyclic(3)),
])
def test_jacobi_exhaustive_small(p, group):
    L = build_h(group(), p)
    assert L.dim <= 12
    b = L.basis
    _basis_triples_hold(L, p, itertools.product(b, repeat=3))


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_jacobi_random_large(data):
    L = build_h(catalog.elem_ab(3, 2), 3)   # dim 18
    b = L.basis
    idx = data.draw(st.tuples(*[st.integers(0, len(b) - 1)] * 3))
    _basis_triples_hold(L, 3, [tuple(b[i] for i in idx)])


def test_h_is_graded_subalgebra():
    from hh1solve.lie import bracket_span
    for g in [catalog.modular(3), catalog.c9_rtimes_c9(), catalog.sl23()]:
        h = build_h(g, 3, check_closed=False)
        assert bracket_span(h, h).issubspace(h)
