import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hh1solve import catalog
from hh1solve.groups import (
    CapExceededError,
    ElemAbStructure,
    Group,
    GroupError,
    Subgroup,
    center,
    centralizer,
    commutator_subgroup,
    conjugacy_classes,
    direct_product,
    elem_ab_structure,
    frattini_p,
    quotient,
    right_cosets,
    right_transversal,
)


def test_from_permutations_examples():
    assert Group.from_permutations(3, [(1, 2, 0)]).order == 3
    assert Group.from_permutations(1, []).order == 1
    assert Group.from_permutations(8, catalog.sl23_generators()).order == 24


def test_from_permutations_rejects_non_bijection():
    with pytest.raises(GroupError):
        Group.from_permutations(3, [(0, 0, 1)])


def test_closure_cap():
    # S_8 has 40320 elements
    with pytest.raises(CapExceededError):
        Group.from_permutations(8, [(1, 0, 2, 3, 4, 5, 6, 7), (1, 2, 3, 4, 5, 6, 7, 0)])


def test_from_cayley_examples():
    assert Group.from_cayley([[0]]).order == 1
    c2 = Group.from_cayley([[0, 1], [1, 0]])
    assert c2.order == 2 and c2.exponent() == 2


def test_nonassociative_table_reports_witness():
    # a loop of order 5 that is not a group
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(GroupError, match="associativ"):
        Group.from_cayley(table)


def test_direct_product():
    c2 = catalog.cyclic(2)
    v4, maps = direct_product(c2, c2)
    assert v4.order == 4 and v4.exponent() == 2
    ut = catalog.heisenberg(3)
    p, maps = direct_product(ut, catalog.cyclic(3))
    assert p.order == 81 and center(p).order == 9
    for i in range(ut.order):
        assert maps["proj1"].images[maps["inj1"].images[i]] == i
    triv, _ = direct_product(Group.from_cayley([[0]]), ut)
    assert np.array_equal(triv.table, ut.table)


def test_ut33_and_sl23_invariants():
    ut = catalog.heisenberg(3)
    assert center(ut).order == 3
    assert len(conjugacy_classes(ut)) == 11
    assert commutator_subgroup(ut).order == 3
    noncentral = next(x for x in range(ut.order) if x not in center(ut))
    assert centralizer(ut, noncentral).order == 9
    phi = frattini_p(ut, 3)
    assert phi.order == 3
    a, q = quotient(ut, phi)
    assert a.order == 9 and a.is_abelian() and a.exponent() == 3

    sl = catalog.sl23()
    assert center(sl).order == 2
    assert len(conjugacy_classes(sl)) == 7
    assert commutator_subgroup(sl).order == 8
    assert frattini_p(sl, 3).order == 8


def test_abelian_degenerate_cases():
    g = catalog.elem_ab(3, 2)
    assert centralizer(g, 4).order == 9
    assert all(len(c) == 1 for c in conjugacy_classes(g))
    assert commutator_subgroup(g).order == 1
    assert frattini_p(g, 3).order == 1
    assert frattini_p(catalog.cyclic(4), 3).order == 4   # p does not divide |G|


def test_quotient_edge_cases():
    g = catalog.heisenberg(3)
    q, hom = quotient(g, Subgroup(g, [0]))
    assert q.order == g.order and hom.kernel().order == 1
    q, hom = quotient(g, Subgroup(g, range(g.order)))
    assert q.order == 1
    s3 = Group.from_permutations(3, [(1, 0, 2), (1, 2, 0)])
    transposition = next(x for x in range(6) if x and s3.element_order(x) == 2)
    with pytest.raises(GroupError):
        quotient(s3, Subgroup(s3, [0, transposition]))


def test_elem_ab_structure():
    assert elem_ab_structure(Group.from_cayley([[0]]), 3).dim == 0
    s = elem_ab_structure(catalog.elem_ab(3, 2), 3)
    assert s.dim == 2
    assert len({tuple(c) for c in s.coords}) == 9
    assert elem_ab_structure(catalog.elem_ab(2, 3), 2).dim == 3
    with pytest.raises(GroupError):
        elem_ab_structure(catalog.cyclic(9), 3)


def test_right_transversal():
    g = catalog.heisenberg(3)
    assert list(right_transversal(g, Subgroup(g, range(g.order)))) == [0]
    assert list(right_transversal(g, Subgroup(g, [0]))) == list(range(g.order))
    h = centralizer(g, next(x for x in range(27) if x not in center(g)))
    reps = right_transversal(g, h)
    assert len(reps) == 3 and reps[0] == 0
    cover = sorted(int(g.table[m, t]) for t in reps for m in h.members)
    assert cover == list(range(27))


@pytest.mark.parametrize("name", ["UT33", "M27", "C9:C9", "UT33xC3"])
def test_structural_invariants(name):
    from conftest import three_group
    g = three_group(name)
    t = g.table
    assert np.array_equal(t[t[:, :, None], np.arange(g.order)], t[:, t])   # exhaustive associativity
    phi = frattini_p(g, 3)
    assert set(commutator_subgroup(g).members) <= set(phi.members)
    assert {g.power(x, 3) for x in range(g.order)} <= set(phi.members)
    a, q = quotient(g, phi)
    assert a.is_abelian() and a.exponent() in (1, 3)
    assert set(q.kernel().members) == set(phi.members) and q.is_surjective()
    for x in range(g.order):
        assert set(centralizer(g, x).members) == set(centralizer(g, g.inverse[x]).members)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["C9", "UT33", "M27", "C9:C9"]), st.data())
def test_right_cosets_partition(name, data):
    from conftest import three_group
    g = three_group(name)
    x = data.draw(st.integers(0, g.order - 1))
    h = centralizer(g, x)
    reps, coset_of = right_cosets(g, h)
    assert reps[0] == 0
    assert len(reps) * h.order == g.order
    for r, rep in enumerate(reps):
        members = g.table[h.members, rep]
        assert np.all(coset_of[members] == r)
