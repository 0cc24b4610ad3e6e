from hypothesis import given, settings
from hypothesis import strategies as st

from chilab.certificates import Inconclusive, certificate_from_json, certificate_to_json
from chilab.generators import labelled_graph
from chilab.graph import graph6_decode, graph6_encode
from chilab.isolation import Knobs, big_nonneighbour, isolate_complete, strong_isolation
from chilab.kernels import chromatic_number, clique_number, stability_number
from chilab.multiholes import LongHoleParams, k_object_extract, special_multihole
from chilab.poly import NonDecPoly
from chilab.verify import VERIFIED, verify_certificate

import oracles


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    code = draw(st.integers(0, 2 ** (n * (n - 1) // 2) - 1)) if n > 1 else 0
    return labelled_graph(n, code)


psis = st.sampled_from([NonDecPoly(), NonDecPoly.const(1), NonDecPoly((0, 1))])


@given(graphs())
def test_invariant_relations(g):
    chi, w, a = chromatic_number(g), clique_number(g), stability_number(g)
    assert w <= chi <= g.n
    assert chi * a >= g.n
    assert chi == oracles.chi(g)


@given(graphs(12))
def test_graph6_roundtrip(g):
    text = graph6_encode(g)
    assert graph6_decode(text) == g
    assert graph6_encode(graph6_decode(text)) == text


@given(graphs())
def test_complement_involution(g):
    assert g.complement().complement() == g
    assert clique_number(g.complement()) == stability_number(g)


@given(graphs())
def test_big_nonneighbour_bound(g):
    if g.n == 0 or g.is_complete():
        return
    v = big_nonneighbour(g)
    rest = [u for u in range(g.n) if u != v and not g.adjacent(u, v)]
    assert clique_number(g) * oracles.chi(g, rest) >= chromatic_number(g)


@settings(max_examples=60, deadline=None)
@given(graphs(10), psis, st.integers(1, 2), st.integers(0, 2))
def test_forced_certificates_verify_and_roundtrip(g, psi, s, q):
    for cert in (
        isolate_complete(g, s, psi, True),
        strong_isolation(g, s, q, psi, True, Knobs(t=1, t_step=0)),
        special_multihole(g, s, True),
        k_object_extract(g, s, LongHoleParams(4 + q, s), True),
    ):
        assert certificate_from_json(certificate_to_json(cert)) == cert
        if not isinstance(cert, Inconclusive):
            assert verify_certificate(g, cert).status == VERIFIED
