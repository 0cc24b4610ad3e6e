import random

import pytest

from chilab import trace
from chilab.certificates import HFreeSet, Inconclusive, IsolatedCopy, NondominatingCopy, Sprinkling, Template
from chilab.errors import ArgumentError
from chilab.generators import all_labelled_graphs, complete, complete_bipartite, cycle, gnp, mycielski, petersen
from chilab.graph import disjoint_union
from chilab.isolation import (
    Knobs,
    active_knobs,
    big_nonneighbour,
    bigbip_step,
    bigbip_thresholds_met,
    bip_self_isolation,
    eval_phi_complete,
    is_sprinkling,
    isolate_complete,
    strong_isolation,
)
from chilab.kernels import chromatic_number, chromatic_number_mask, clique_number
from chilab.poly import NonDecPoly, X
from chilab.verify import VERIFIED, verify_certificate

import oracles

NAMED = [cycle(5), cycle(7), petersen(), mycielski(cycle(5)), disjoint_union(cycle(5), cycle(5)), complete(4),
         complete_bipartite(3, 3), disjoint_union(complete_bipartite(2, 2), cycle(5)), cycle(6).complement()]


def _ok(g, cert):
    if isinstance(cert, Inconclusive):
        return
    v = verify_certificate(g, cert)
    assert v.status == VERIFIED, (cert, v.reasons)


def test_isolate_complete_strict_on_threshold_graphs():
    seen = set()
    rng = random.Random(4)
    for _ in range(300):
        g = gnp(rng.randint(3, 10), rng.random(), rng.getrandbits(32))
        for k in (1, 2, 3):
            cert = isolate_complete(g, k, 0)
            if chromatic_number(g) > eval_phi_complete(k, 0, clique_number(g)):
                assert not isinstance(cert, Inconclusive)
                _ok(g, cert)
                seen.add(type(cert))
            else:
                assert isinstance(cert, Inconclusive) and cert.reason == "threshold"
    assert {IsolatedCopy, HFreeSet} <= seen


def test_isolate_complete_shapes():
    g = disjoint_union(complete(2), cycle(5))
    cert = isolate_complete(g, 1, 0)
    assert isinstance(cert, IsolatedCopy)
    assert isolate_complete(cycle(5), 3, 0).excluded.k == 3
    with pytest.raises(ArgumentError):
        isolate_complete(g, -1, 0)


def test_big_nonneighbour_small_graphs():
    for n in range(2, 6):
        for g in all_labelled_graphs(n):
            if g.is_complete():
                with pytest.raises(ArgumentError):
                    big_nonneighbour(g)
                continue
            v = big_nonneighbour(g)
            rest = [u for u in range(n) if u != v and not g.adjacent(u, v)]
            assert oracles.omega(g) * oracles.chi(g, rest) >= oracles.chi(g)


def test_bigbip_strict_threshold():
    g = cycle(5)
    cert = bigbip_step(g, 1, 0, 1, 0)
    assert bigbip_thresholds_met(3, 2, 1, 0, 1, 0)
    assert not isinstance(cert, Inconclusive)
    _ok(g, cert)
    assert isinstance(bigbip_step(g, 1, 0, 3, 0), Inconclusive)


@pytest.mark.parametrize("g", NAMED, ids=range(len(NAMED)))
def test_forced_extractors_verify(g):
    for psi in (NonDecPoly(), NonDecPoly.const(1), X):
        for s in (1, 2):
            for q in (0, 1, 2):
                _ok(g, bigbip_step(g, s, q, 1, psi, True))
                _ok(g, strong_isolation(g, s, q, psi, True, Knobs(t=1, t_step=0)))
                _ok(g, strong_isolation(g, s, q, psi, True))
            for s2 in range(s + 1):
                _ok(g, bip_self_isolation(g, s, s2, psi, True, Knobs(t=1, t_step=0)))


def test_strict_strong_isolation_is_inconclusive_small():
    for g in NAMED:
        assert isinstance(strong_isolation(g, 1, 0, 0), Inconclusive)


def test_knobs_ignored_in_strict_mode():
    kn = Knobs(t=1, t_step=0, n=0, low=0)
    assert active_knobs(kn, False) == Knobs()
    assert active_knobs(kn, True) == kn
    assert kn.to_json() == {"t": 1, "t_step": 0, "n": 0, "low": 0}
    assert strong_isolation(cycle(5), 1, 0, 0, False, kn) == strong_isolation(cycle(5), 1, 0, 0)


def test_forced_strong_returns_documented_variants():
    kinds = set()
    rng = random.Random(9)
    for _ in range(150):
        g = gnp(rng.randint(4, 9), rng.uniform(0.2, 0.7), rng.getrandbits(32))
        cert = strong_isolation(g, 1, rng.randint(0, 2), 0, True, Knobs(t=1, t_step=0, low=rng.choice([None, 0])))
        kinds.add(type(cert))
        _ok(g, cert)
    assert kinds <= {NondominatingCopy, Sprinkling, Inconclusive}
    assert NondominatingCopy in kinds and Sprinkling in kinds


def test_is_sprinkling():
    g = disjoint_union(cycle(5), cycle(5))
    P, Q = 0b11111, 0b11111 << 5
    assert is_sprinkling(g, P, Q, 5, NonDecPoly.const(2))
    assert not is_sprinkling(g, P, Q, 0, NonDecPoly.const(3))


def test_argument_errors():
    with pytest.raises(ArgumentError):
        strong_isolation(cycle(5), 0, 0, 0)
    with pytest.raises(ArgumentError):
        bip_self_isolation(cycle(5), 1, 2, 0)
    with pytest.raises(ArgumentError):
        bigbip_step(cycle(5), 1, -1, 1, 0)


def test_trace_records_only_inside_context():
    with trace.recording() as seen:
        isolate_complete(cycle(5), 1, 0)
    assert "complete.isolated_copy" in seen or "complete.clique_free_part" in seen
    assert set(trace.registered(trace.PROOF)) >= seen
