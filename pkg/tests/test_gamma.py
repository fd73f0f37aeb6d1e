import math

import numpy as np
import pytest

from hh1solve import catalog
from hh1solve.gamma import (
    GammaGraph,
    build_gamma,
    build_gamma2,
    find_cycle,
    is_acyclic,
    layering,
    longest_path,
    reduce_gamma,
    to_dot,
    vertex_label,
)
from hh1solve.groups import Group
from hh1solve.lie import build_h

from conftest import three_group


def _edgeless(p, d):
    n = p ** d
    return GammaGraph(p, d, np.zeros((n, n), dtype=bool), np.zeros(n, dtype=np.int64))


def test_trivial_group():
    g = build_gamma(Group.from_cayley([[0]]), 3)
    assert g.n_vertices == 1 and g.n_edges == 0
    assert " ".join(to_dot(g).split()) == 'digraph gamma { "e"; }'


def test_c2_dot():
    dot = to_dot(build_gamma(catalog.cyclic(2), 2))
    assert dot == 'digraph gamma {\n  "e";\n  "g1";\n  "e" -> "g1";\n  "g1" -> "g1";\n}\n'


def test_c3_dot():
    dot = to_dot(build_gamma(catalog.cyclic(3), 3))
    assert dot.splitlines()[4:-1] == [
        '  "e" -> "g1";', '  "e" -> "g1^2";',
        '  "g1" -> "g1";', '  "g1" -> "g1^2";',
        '  "g1^2" -> "g1";', '  "g1^2" -> "g1^2";',
    ]


def test_vertex_labels():
    assert vertex_label([0, 0], ["g1", "g2"]) == "e"
    assert vertex_label([2, 1], ["g1", "g2"]) == "g1^2*g2"
    with pytest.raises(ValueError):
        to_dot(_edgeless(3, 1), labels=["a", "b"])


def test_sl23():
    g = build_gamma(catalog.sl23(), 3)
    assert g.n_vertices == 3
    assert set(g.edges) == {(0, 1), (0, 2), (1, 1), (1, 2), (2, 1), (2, 2)}
    assert find_cycle(g) == [1]


def test_ut33_graph_and_layers():
    g = build_gamma(catalog.heisenberg(3), 3)
    assert g.n_edges == 8 and all(a == 0 for a, _ in g.edges)
    assert find_cycle(g) is None and longest_path(g) == 1
    r = reduce_gamma(g)
    assert r.n_edges == 0
    assert layering(r)[1] == set()


def test_c9_rtimes_c9_cycle():
    g = build_gamma(catalog.c9_rtimes_c9(), 3)
    cyc = find_cycle(g)
    assert len(cyc) == 2
    assert sorted(cyc) == [1, 3]      # the two basis vertices (1,0) and (0,1)


def test_edgeless_graph_queries():
    e = _edgeless(3, 2)
    assert longest_path(e) == 0 and find_cycle(e) is None
    assert reduce_gamma(e).n_edges == 0
    assert layering(e)[1] == set()
    assert build_gamma2(_edgeless(2, 2)).n_edges == 0


def test_gamma2_precondition():
    with pytest.raises(ValueError):
        build_gamma2(build_gamma(catalog.cyclic(3), 3))


def test_cyclic_graph_layers_persist():
    g = build_gamma(catalog.elem_ab(3, 2), 3)
    layers = layering(g, max_layers=6)
    assert all(layers[n] for n in range(len(layers)))


def test_graph_invariants(pgroup3):
    g = build_gamma(pgroup3, 3)
    r = reduce_gamma(g)
    adj = g.adjacency
    assert not adj[:, 0].any()
    if g.dim:
        assert adj[0, 1:].all()
    # h_dims[b] > 0 iff b has an outgoing edge
    assert np.array_equal(g.h_dims > 0, adj.any(axis=1))
    assert (find_cycle(g) is None) == (find_cycle(r) is None)
    if g.n_edges and is_acyclic(g):
        assert longest_path(g) == longest_path(r) + 1
    if not is_acyclic(g):
        assert math.isinf(longest_path(g))
    # a loop at a iff some functional in h_a is nonzero on a
    h = build_h(pgroup3, 3)
    from hh1solve.groups import index_to_coords
    for v in range(g.n_vertices):
        space = h.components.get(v)
        nonzero_on_a = space is not None and bool((space.basis @ index_to_coords(v, 3, g.dim) % 3).any())
        assert bool(adj[v, v]) == nonzero_on_a


def test_dot_is_deterministic(tmp_path):
    g = build_gamma(three_group("M27"), 3)
    assert to_dot(g) == to_dot(build_gamma(catalog.modular(3), 3))
