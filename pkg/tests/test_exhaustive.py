"""Brute-force subgraph search: extremal d-regular orders, clique number."""

import pytest

from srgbounds.bounds import cab, haemers_lower, haemers_upper, rab_lower, rab_upper
from srgbounds.exhaustive import extremal_regular_induced, induced_degrees, max_clique
from srgbounds.graphs import builtin, graph_from_edges, paley_graph, square_lattice, srg_parameters_of


def test_extremal_examples():
    r = extremal_regular_induced(square_lattice(4), 4)
    assert (r.min_order, r.max_order) == (8, 12)
    r = extremal_regular_induced(builtin("petersen"), 0)
    assert (r.min_order, r.max_order) == (1, 4)   # independence number 4
    r = extremal_regular_induced(builtin("petersen"), 3)
    assert (r.min_order, r.max_order) == (10, 10)
    r = extremal_regular_induced(builtin("petersen"), 2)
    assert (r.min_order, r.max_order) == (5, 6)


def test_no_subgraph_case():
    # a path has no 2-regular induced subgraph
    path4 = graph_from_edges(4, [(0, 1), (1, 2), (2, 3)])
    r = extremal_regular_induced(path4, 2)
    assert r.min_order is None and r.max_order is None and not r.exists


def test_witnesses_reverify():
    for g, d in ((builtin("petersen"), 0), (builtin("petersen"), 2),
                 (square_lattice(4), 4), (square_lattice(3), 2), (paley_graph(13), 2)):
        r = extremal_regular_induced(g, d)
        for witness in (r.witness_min, r.witness_max):
            assert witness is not None
            degs = induced_degrees(g, witness)
            assert all(x == d for x in degs), (d, witness, degs)
        assert len(r.witness_min) == r.min_order
        assert len(r.witness_max) == r.max_order
        assert (r.min_order * d) % 2 == 0 and (r.max_order * d) % 2 == 0


def test_determinism():
    g = paley_graph(13)
    a = extremal_regular_induced(g, 2)
    b = extremal_regular_induced(g, 2)
    assert a == b


def test_errors():
    g = builtin("petersen")
    with pytest.raises(ValueError):
        extremal_regular_induced(g, 10)
    with pytest.raises(ValueError):
        extremal_regular_induced(graph_from_edges(23, []), 0)
    # the limit is configurable; an edgeless graph has no 1-regular subgraph
    r = extremal_regular_induced(graph_from_edges(23, []), 1, order_limit=23)
    assert r.min_order is None
    with pytest.raises(ValueError):
        max_clique(graph_from_edges(23, []))


def test_max_clique_examples():
    assert max_clique(builtin("petersen")) == 2    # triangle-free, girth 5
    assert max_clique(square_lattice(4)) == 4      # a row; no 5-clique
    k5 = graph_from_edges(5, [(i, j) for i in range(5) for j in range(i + 1, 5)])
    assert max_clique(k5) == 5
    assert max_clique(paley_graph(13)) == 3
    assert max_clique(builtin("pentagon")) == 2


def test_clique_bounded_by_cab():
    for g in (builtin("petersen"), builtin("pentagon"), builtin("clebsch"),
              paley_graph(13), paley_graph(17), square_lattice(3), square_lattice(4)):
        p = srg_parameters_of(g)
        assert max_clique(g) <= cab(p.v, p.k, p.lam)


def test_sandwich_on_small_graphs():
    """Attained orders sit inside both the adjacency and spectral bounds."""
    for g in (builtin("petersen"), builtin("pentagon"), square_lattice(3), paley_graph(13)):
        p = srg_parameters_of(g)
        for d in range(0, p.k + 1):
            r = extremal_regular_induced(g, d)
            if r.min_order is None:
                continue
            assert rab_lower(p, d) <= r.min_order
            assert r.max_order <= rab_upper(p, d)
            assert haemers_lower(p, d) <= r.min_order
            assert r.max_order <= haemers_upper(p, d)
