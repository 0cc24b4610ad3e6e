import random
from itertools import combinations

import pytest

from chilab.errors import ArgumentError
from chilab.generators import complete, complete_bipartite, cycle, gnp, path, petersen
from chilab.graph import disjoint_union
from chilab.holes import (
    Biclique,
    BicliqueSpec,
    Hole,
    HoleSpec,
    find_hole,
    find_induced_complete_bipartite,
    find_multihole,
    is_hole_sequence,
    iter_holes,
)

import oracles


def test_hole_spec_validation():
    assert HoleSpec.special().accepts(4) and HoleSpec.special().accepts(7)
    assert not HoleSpec.special().accepts(6)
    assert HoleSpec.long(6).accepts(6) and not HoleSpec.long(6).accepts(5)
    assert not HoleSpec.long(4, 8).accepts(9)
    with pytest.raises(ArgumentError):
        HoleSpec.long(3)
    with pytest.raises(ArgumentError):
        HoleSpec("triangle")


def test_find_hole_in_cycles():
    for m in range(4, 12):
        h = find_hole(cycle(m))
        assert h is not None and h.length == m
        assert is_hole_sequence(cycle(m), h.vertices)
    assert find_hole(complete(5)) is None
    assert find_hole(path(7)) is None


def test_canonical_order():
    h = find_hole(cycle(6))
    assert h.vertices == (0, 1, 2, 3, 4, 5)


def test_shortest_and_kinds():
    g = disjoint_union(cycle(7), cycle(4), cycle(5))
    assert find_hole(g, HoleSpec.four()).vertex_set == frozenset(range(7, 11))
    assert find_hole(g, HoleSpec.odd(), shortest=True).length == 5
    assert find_hole(g, HoleSpec.odd()).length == 7
    assert find_hole(g, HoleSpec.long(6)).length == 7
    assert find_hole(cycle(6), HoleSpec.special()) is None


def test_petersen_holes_match_networkx():
    g = petersen()
    mine = {h.vertex_set for h in iter_holes(g)}
    assert mine == oracles.holes(g)
    assert oracles.hole_lengths(g) == {5, 6}


def test_random_holes_match_networkx():
    rng = random.Random(2)
    for _ in range(120):
        g = gnp(rng.randint(4, 10), rng.uniform(0.2, 0.6), rng.getrandbits(32))
        assert {h.vertex_set for h in iter_holes(g)} == oracles.holes(g)


def test_is_hole_sequence_rejects_chords_and_short():
    g = cycle(6)
    assert not is_hole_sequence(g, (0, 1, 2))
    assert not is_hole_sequence(g.complement(), (0, 1, 2, 3, 4, 5))
    assert not is_hole_sequence(g, (0, 1, 2, 3, 4, 4))


def test_induced_bicliques():
    g = complete_bipartite(2, 3)
    a, b = find_induced_complete_bipartite(g, 3, 2)
    assert len(a) == 3 and len(b) == 2
    with pytest.raises(ArgumentError):
        find_induced_complete_bipartite(g, 2, 3)
    assert find_induced_complete_bipartite(complete(4), 2, 2) is None
    rng = random.Random(8)
    for _ in range(60):
        g = gnp(rng.randint(3, 9), rng.random(), rng.getrandbits(32))
        for s, s2 in [(1, 1), (2, 1), (2, 2), (3, 1)]:
            assert (find_induced_complete_bipartite(g, s, s2) is not None) == oracles.has_induced_biclique(g, s, s2)


def test_multihole_search():
    g = disjoint_union(cycle(5), cycle(4), complete_bipartite(2, 2))
    mh = find_multihole(g, [HoleSpec.odd(), HoleSpec.four()])
    assert mh is not None and mh.k == 2
    comps = mh.components
    assert isinstance(comps[0], Hole) and comps[0].length == 5
    assert all(oracles.is_anticomplete(g, a.vertex_set, b.vertex_set) for a, b in combinations(comps, 2))
    assert find_multihole(cycle(9), [HoleSpec.any(), HoleSpec.any()]) is None
    mixed = find_multihole(g, [BicliqueSpec(2), HoleSpec.odd()])
    assert isinstance(mixed.components[0], Biclique)
