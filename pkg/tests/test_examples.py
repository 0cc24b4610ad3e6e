"""Worked examples for each operation, small enough to check by hand or oracle."""

import pytest

from chilab.certificates import HFreeSet, Inconclusive, IsolatedCopy, MultiholeCert, NondominatingCopy, Sprinkling, Template
from chilab.errors import ArgumentError
from chilab.generators import complete, complete_bipartite, cycle, empty, generate, gnp, mycielski, path, petersen
from chilab.graph import (
    Graph,
    are_anticomplete,
    are_complete,
    common_neighbours,
    common_nonneighbours,
    disjoint_union,
    induced_subgraph,
)
from chilab.holes import Biclique, Hole, HoleSpec, Multihole, dominator_set, find_hole, find_induced_complete_bipartite, find_multihole
from chilab.isolation import (
    Knobs,
    bigbip_step,
    bip_self_isolation,
    eval_phi_complete,
    eval_phi_strong,
    isolate_complete,
    strong_isolation,
)
from chilab.kernels import (
    biclique_tau,
    chi_of,
    chromatic_number,
    clique_number,
    enumerate_stable_sets,
    is_perfect,
    ramsey_bound_holds,
)
from chilab.multiholes import (
    LongHoleParams,
    anticomplete_pair_c4free,
    anticomplete_pair_long,
    k_object_extract,
    kss_free_longfree_binding_check,
    long_dominator_check,
    long_nondominating_kssfree,
    long_or_kss_nondominating,
    odd_dominator_check,
    odd_nondominating_c4free,
    special_hole_smallnbrs,
    special_multihole,
    special_nondominating,
)
from chilab.poly import NonDecPoly, X
from chilab.verify import INVALID, VERIFIED, brute_chromatic, verify_certificate

import oracles

C5C5 = disjoint_union(cycle(5), cycle(5))
OUTER = range(5)


def ok(g, cert):
    return verify_certificate(g, cert).status == VERIFIED


def maybe_ok(g, cert):
    return isinstance(cert, Inconclusive) or ok(g, cert)


# graph core -----------------------------------------------------------


def test_graph_core_examples():
    sub, _ = induced_subgraph(cycle(5), {0, 1, 2})
    assert sub == path(3)
    assert induced_subgraph(cycle(5), set())[0] == Graph.null()
    outer, _ = induced_subgraph(petersen(), OUTER)
    assert outer == cycle(5)
    assert are_anticomplete(cycle(5), {0}, {2}) and not are_anticomplete(cycle(5), {0}, {1})
    assert are_anticomplete(C5C5, range(5), range(5, 10))
    k33 = complete_bipartite(3, 3)
    assert are_complete(k33, {0, 1, 2}, {3, 4, 5})
    assert not are_complete(cycle(4), {0}, {2})
    assert are_complete(petersen(), set(), {1, 2})
    assert common_neighbours(cycle(5), {0}) == {1, 4} and common_nonneighbours(cycle(5), {0}) == {2, 3}
    assert common_neighbours(cycle(4), {0, 2}) == {1, 3} and common_nonneighbours(cycle(4), {0, 2}) == set()
    assert common_neighbours(path(4), {0, 3}) == set() and common_nonneighbours(path(4), {0, 3}) == set()


def test_disjoint_union_examples():
    g = disjoint_union(cycle(5), cycle(5))
    assert g.n == 10 and chromatic_number(g) == 3
    assert disjoint_union(complete(1), complete(1)).edge_count == 0
    g = disjoint_union(cycle(5), complete(4))
    assert clique_number(g) == 4 and chromatic_number(g) == 4 == oracles.chi(g)


# kernels --------------------------------------------------------------


def test_kernel_examples():
    assert clique_number(cycle(5)) == 2 and clique_number(complete(4)) == 4
    assert clique_number(mycielski(cycle(5))) == 2 == oracles.omega(mycielski(cycle(5)))
    assert chi_of(cycle(5), {0, 1}) == 2 and chi_of(cycle(5), {0, 2}) == 1
    assert chi_of(petersen(), OUTER) == 3
    assert sorted(sorted(s) for s in enumerate_stable_sets(cycle(5), None, 2)) == sorted(sorted({i, (i + 2) % 5}) for i in range(5))
    assert list(enumerate_stable_sets(complete(4), None, 2)) == []
    assert list(enumerate_stable_sets(cycle(5), {0, 1}, 0)) == [frozenset()]
    assert biclique_tau(cycle(4)) == 2
    assert biclique_tau(petersen()) == 1 == oracles.tau(petersen())
    assert biclique_tau(complete(4)) == 2 == oracles.tau(complete(4))
    assert not is_perfect(cycle(5)) and is_perfect(path(4)) and is_perfect(cycle(6))
    assert ramsey_bound_holds(cycle(5), 3, 2) and ramsey_bound_holds(complete(4), 2, 3) and ramsey_bound_holds(complete(1), 1, 2)


def test_brute_chromatic_examples():
    assert brute_chromatic(cycle(5)) == 3
    assert brute_chromatic(petersen()) == 3 == oracles.chi(petersen())
    assert brute_chromatic(complete_bipartite(3, 3)) == 2


# holes ----------------------------------------------------------------


def test_hole_examples():
    assert find_hole(cycle(7), HoleSpec.odd(), shortest=True).vertex_set == frozenset(range(7))
    assert find_hole(complete(4)) is None
    h = find_hole(petersen(), HoleSpec.long(6), shortest=True)
    assert h.length == 6 and h.vertex_set in oracles.holes(petersen())
    a, b = find_induced_complete_bipartite(cycle(4), 2, 2)
    assert a | b == frozenset(range(4))
    assert find_induced_complete_bipartite(petersen(), 2, 2) is None
    star = complete_bipartite(1, 4)
    a, b = find_induced_complete_bipartite(star, 3, 1)
    assert b == {0} and len(a) == 3


def test_multihole_and_dominator_examples():
    mh = find_multihole(C5C5, [HoleSpec.special(), HoleSpec.special()])
    assert sorted(c.vertex_set for c in mh.components) == [frozenset(range(5)), frozenset(range(5, 10))]
    assert find_multihole(cycle(5), [HoleSpec.special(), HoleSpec.special()]) is None
    g = disjoint_union(cycle(4), cycle(7))
    four, odd = find_multihole(g, [HoleSpec.four(), HoleSpec.odd()]).components
    assert four.vertex_set == frozenset(range(4)) and odd.vertex_set == frozenset(range(4, 11))
    assert dominator_set(cycle(5), {0}) == {0, 1, 4}
    assert dominator_set(petersen(), OUTER) == frozenset(range(10))
    assert dominator_set(petersen(), set()) == set()


# polynomials ----------------------------------------------------------


def test_phi_examples():
    assert eval_phi_complete(2, X, 2) == 20
    assert eval_phi_complete(0, 0, 5) == 5
    assert eval_phi_complete(1, 1, 0) == 1
    assert eval_phi_strong(1, 1, X, 1) == (11, 30)


def test_phi_strong_zero_psi_value():
    # phi(1) = 4*1*0 + 2*1*phi'(1) + 2*2*1 with phi'(1) = 4
    assert eval_phi_strong(1, 0, 0, 1) == (4, 12) == oracles.phi_strong(1, 0, lambda x: 0, 1)


# isolation ------------------------------------------------------------


def test_isolate_complete_examples():
    cert = isolate_complete(cycle(5), 2, 0)
    assert isinstance(cert, IsolatedCopy) and cert.clique == {0, 1} and cert.witness == {3} and ok(cycle(5), cert)
    assert isinstance(isolate_complete(complete(4), 2, 0), Inconclusive)
    grotzsch = mycielski(cycle(5))
    cert = isolate_complete(grotzsch, 3, 0)
    assert isinstance(cert, HFreeSet) and cert.A == frozenset(range(11)) and ok(grotzsch, cert)


def test_bigbip_examples():
    two_k2 = disjoint_union(complete(2), complete(2))
    assert isinstance(bigbip_step(two_k2, 1, 0, 1, 0), Inconclusive)
    cert = bigbip_step(two_k2, 1, 0, 1, 0, True)
    assert isinstance(cert, (Template, Sprinkling)) and ok(two_k2, cert)
    cert = bigbip_step(cycle(5), 1, 0, 1, 0)
    assert not isinstance(cert, Inconclusive) and ok(cycle(5), cert)
    for s, q, t in [(1, 0, 1), (2, 1, 2), (1, 3, 1)]:
        assert isinstance(bigbip_step(complete(5), s, q, t, 0), Inconclusive)


def test_strong_isolation_examples():
    cert = strong_isolation(cycle(5), 1, 0, 0, True)
    assert isinstance(cert, (Sprinkling, NondominatingCopy)) and ok(cycle(5), cert)
    assert strong_isolation(complete(6), 2, 2, 0) == Inconclusive("threshold", strong_isolation(complete(6), 2, 2, 0).params)
    assert maybe_ok(mycielski(cycle(5)), strong_isolation(mycielski(cycle(5)), 2, 4, 0, True))


def test_bip_self_isolation_examples():
    cert = bip_self_isolation(C5C5, 1, 1, 0, True)
    assert isinstance(cert, (NondominatingCopy, HFreeSet)) and ok(C5C5, cert)
    if isinstance(cert, NondominatingCopy):
        assert isinstance(cert.copy, Biclique) and len(cert.copy.vertex_set) == 2
    assert isinstance(bip_self_isolation(empty(4), 1, 1, 0), Inconclusive)
    assert maybe_ok(cycle(4), bip_self_isolation(cycle(4), 2, 2, 0, True))


# special holes --------------------------------------------------------


def test_odd_dominator_examples():
    assert odd_dominator_check(petersen(), 1)
    assert odd_dominator_check(cycle(5), 1)
    assert odd_dominator_check(disjoint_union(cycle(7), complete(1)), 1)


def test_smallnbrs_examples():
    cert = special_hole_smallnbrs(C5C5, 1, 0, True)
    assert cert.copy.vertex_set in (frozenset(range(5)), frozenset(range(5, 10)))
    assert cert.witness | cert.copy.vertex_set == frozenset(range(10)) and ok(C5C5, cert)
    assert isinstance(special_hole_smallnbrs(complete_bipartite(3, 3), 3, 0), Inconclusive)
    g = disjoint_union(cycle(4), cycle(5))
    cert = special_hole_smallnbrs(g, 1, 0, True)
    assert cert.copy.length == 4 and cert.witness == frozenset(range(4, 9))


def test_c4free_pair_examples():
    a, b = anticomplete_pair_c4free(cycle(5), 0)
    assert a and b and are_anticomplete(cycle(5), a, b)
    assert anticomplete_pair_c4free(path(4), 0) is None
    for n in (0, 1, 5):
        with pytest.raises(ArgumentError):
            anticomplete_pair_c4free(cycle(4), n)


def test_odd_and_special_nondominating_examples():
    cert = odd_nondominating_c4free(C5C5, 0, True)
    assert isinstance(cert, NondominatingCopy) and cert.copy.length == 5 and ok(C5C5, cert)
    assert isinstance(odd_nondominating_c4free(path(6), 0), Inconclusive)
    assert isinstance(odd_nondominating_c4free(cycle(7), 0, True), Inconclusive)
    c4c4 = disjoint_union(cycle(4), cycle(4))
    cert = special_nondominating(c4c4, 0, True)
    assert cert.copy.length == 4 and cert.witness == frozenset(range(4, 8)) and ok(c4c4, cert)
    for m in (3, 5, 7):
        assert isinstance(special_nondominating(complete(m), 0), Inconclusive)
    g = disjoint_union(cycle(5), cycle(4))
    cert = special_nondominating(g, 0, True)
    assert cert.copy.vertex_set == frozenset(range(5)) and ok(g, cert)


def test_special_multihole_examples():
    cert = special_multihole(cycle(5), 1)
    assert cert.multihole == Multihole((Hole((0, 1, 2, 3, 4)),))
    cert = special_multihole(C5C5, 2, True)
    assert isinstance(cert, MultiholeCert) and ok(C5C5, cert)
    chordal = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    assert isinstance(special_multihole(chordal, 1), Inconclusive)


# long holes -----------------------------------------------------------


def test_binding_check_examples():
    diamond = Graph.from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    assert kss_free_longfree_binding_check(diamond, LongHoleParams(5, 2, 2))
    with pytest.raises(ArgumentError):
        kss_free_longfree_binding_check(cycle(4), LongHoleParams(5, 2))
    assert biclique_tau(complete(5)) == 2
    assert not kss_free_longfree_binding_check(complete(5), LongHoleParams(5, 2, 1))


def test_long_dominator_examples():
    assert long_dominator_check(cycle(7), 1, LongHoleParams(7, 1))
    assert long_dominator_check(disjoint_union(cycle(12), complete(1)), 1, LongHoleParams(5, 1))
    with pytest.raises(ArgumentError):
        long_dominator_check(path(5), 1, LongHoleParams(5, 1))


def test_long_pair_examples():
    x, y = anticomplete_pair_long(cycle(25), 0, LongHoleParams(5, 1))
    assert x and y and are_anticomplete(cycle(25), x, y)
    chordal = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    assert anticomplete_pair_long(chordal, 0, LongHoleParams(5, 2)) is None
    with pytest.raises(ArgumentError):
        anticomplete_pair_long(cycle(9), 0, LongHoleParams(5, 1))


def test_long_nondominating_examples():
    g = disjoint_union(cycle(11), cycle(11))
    cert = long_nondominating_kssfree(g, 0, LongHoleParams(5, 2), True)
    assert cert.copy.length == 11 and ok(g, cert)
    forest = path(7)
    assert isinstance(long_nondominating_kssfree(forest, 0, LongHoleParams(5, 2)), Inconclusive)
    assert isinstance(long_nondominating_kssfree(cycle(11), 0, LongHoleParams(5, 2), True), Inconclusive)


def test_long_or_kss_examples():
    c4c4 = disjoint_union(cycle(4), cycle(4))
    cert = long_or_kss_nondominating(c4c4, 0, LongHoleParams(5, 2), True)
    assert isinstance(cert.copy, Biclique) and ok(c4c4, cert)
    g = disjoint_union(cycle(11), cycle(11))
    cert = long_or_kss_nondominating(g, 0, LongHoleParams(5, 2), True)
    assert isinstance(cert.copy, Hole) and ok(g, cert)
    assert isinstance(long_or_kss_nondominating(complete_bipartite(3, 3), 0, LongHoleParams(5, 2)), Inconclusive)


def test_k_object_examples():
    g = disjoint_union(complete_bipartite(2, 2), cycle(7))
    cert = k_object_extract(g, 2, LongHoleParams(5, 2), True)
    assert [c.vertex_set for c in cert.multihole.components] == [frozenset(range(4)), frozenset(range(4, 11))]
    assert isinstance(k_object_extract(cycle(11), 1, LongHoleParams(5, 2)), Inconclusive)
    cert = k_object_extract(cycle(11), 1, LongHoleParams(5, 2), True)
    assert cert.multihole.components == (Hole(tuple(range(11))),)
    chordal = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    assert isinstance(k_object_extract(chordal, 1, LongHoleParams(5, 2)), Inconclusive)


# verification and generators -----------------------------------------


def test_verify_examples():
    z = NonDecPoly()
    assert ok(cycle(5), Sprinkling(frozenset({0}), frozenset({2, 3}), 0, 0, z, {}))
    assert ok(cycle(5), Sprinkling(frozenset({0}), frozenset({1}), 0, 1, z, {}))
    swapped = (Hole((5, 1, 2, 3, 4)), Hole((0, 6, 7, 8, 9)))
    cert = MultiholeCert(Multihole(swapped), (HoleSpec.special(), HoleSpec.special()), {})
    assert verify_certificate(C5C5, cert).status == INVALID


def test_generate_examples():
    g = generate("mycielski", {"of": {"kind": "cycle", "params": {"m": 5}}})
    assert (g.n, chromatic_number(g), clique_number(g)) == (11, 4, 2)
    assert oracles.chi(g) == 4
    assert generate("cycle", {"m": 4}) == cycle(4)
    assert generate("gnp", {"n": 8, "p": 0.5}, seed=1) == generate("gnp", {"n": 8, "p": 0.5}, seed=1) == gnp(8, 0.5, 1)
