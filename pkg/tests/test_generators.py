import networkx as nx
import pytest

from chilab.errors import ArgumentError
from chilab.generators import (
    all_labelled_graphs,
    complete_bipartite,
    cycle,
    edge_slots,
    generate,
    girth_constrained,
    gnp,
    labelled_graph,
    mycielski,
    petersen,
    random_corpus,
)
from chilab.graph import graph6_encode
from chilab.kernels import chromatic_number, clique_number

import oracles


def test_counts_of_labelled_graphs():
    for n in range(0, 6):
        assert sum(1 for _ in all_labelled_graphs(n)) == 2 ** (n * (n - 1) // 2)


def test_enumeration_order_matches_codes():
    gs = list(all_labelled_graphs(4))
    assert all(gs[c] == labelled_graph(4, c) for c in range(len(gs)))
    assert len({graph6_encode(g) for g in gs}) == 64
    assert edge_slots(3) == [(0, 1), (0, 2), (1, 2)]


def test_gnp_is_seeded():
    assert gnp(10, 0.4, 7) == gnp(10, 0.4, 7)
    assert gnp(10, 0.4, 7) != gnp(10, 0.4, 8)
    assert gnp(6, 0.0, 1).edge_count == 0 and gnp(6, 1.0, 1).edge_count == 15
    with pytest.raises(ArgumentError):
        gnp(4, 1.5, 0)


def test_random_corpus_is_reproducible():
    a = [graph6_encode(g) for g in random_corpus(30, 3, 8, seed=5)]
    b = [graph6_encode(g) for g in random_corpus(30, 3, 8, seed=5)]
    assert a == b and all(3 <= len(g) for g in random_corpus(30, 3, 8, seed=5))


@pytest.mark.parametrize("girth", [4, 5, 6])
def test_girth_constrained(girth):
    for seed in range(5):
        g = girth_constrained(14, girth, seed)
        assert nx.girth(oracles.to_nx(g)) >= girth
        assert clique_number(g) <= 2


def test_mycielski_family():
    g = mycielski(cycle(5))
    assert (g.n, clique_number(g), chromatic_number(g)) == (11, 2, 4)
    assert g.adjacent(10, 5) and not g.adjacent(10, 0)


def test_petersen_and_bipartite():
    assert petersen().edge_count == 15 and all(petersen().degree(v) == 3 for v in range(10))
    assert complete_bipartite(2, 3).edge_count == 6


def test_generate_by_name():
    assert generate("cycle", {"m": 5}) == cycle(5)
    g = generate("disjoint_union", {"parts": [{"kind": "cycle", "params": {"m": 4}}, {"kind": "petersen"}]})
    assert g.n == 14
    with pytest.raises(ArgumentError, match="unknown generator"):
        generate("moebius")
    with pytest.raises(ArgumentError, match="needs parameter"):
        generate("cycle", {})
    with pytest.raises(ArgumentError):
        cycle(2)
