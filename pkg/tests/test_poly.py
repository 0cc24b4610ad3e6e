import pytest

from chilab.errors import ArgumentError
from chilab.isolation import ThresholdTable, eval_phi_complete, eval_phi_strong, phi_complete, phi_strong
from chilab.multiholes import LongHoleParams, phi_long_kssfree, special_chain, special_psi_prime, theta
from chilab.poly import NonDecPoly, X

import oracles

PSIS = {"0": (NonDecPoly(), lambda x: 0), "1": (NonDecPoly.const(1), lambda x: 1), "x": (X, lambda x: x)}


def test_arithmetic():
    p = NonDecPoly((1, 2))
    assert p(3) == 7
    assert (p * p).coeffs == (1, 4, 4)
    assert (p + 3).coeffs == (4, 2)
    assert (X**3)(2) == 8
    assert p.compose(X * X)(2) == 9
    assert NonDecPoly((0, 0)).is_zero()
    assert str(NonDecPoly((2, 0, 3))) == "2 + 3x^2"


def test_validation_and_parse():
    with pytest.raises(ArgumentError):
        NonDecPoly((1, -1))
    with pytest.raises(ArgumentError):
        NonDecPoly.parse("1,a")
    assert NonDecPoly.parse("0,1") == X
    assert NonDecPoly.from_json([2]) == NonDecPoly.const(2)


def test_dominates():
    assert X.dominates(NonDecPoly())
    assert not X.dominates(NonDecPoly.const(1))
    assert NonDecPoly((1, 1)).dominates(X)


def test_hand_values():
    # hand substitution: phi'(1) = 1*(1 + 2*1 + 2) + 2*1 + 2*1 + 2 = 11
    assert eval_phi_strong(1, 1, X, 1) == (11, 30)
    assert eval_phi_complete(2, X, 2) == 20


@pytest.mark.parametrize("psi", sorted(PSIS))
@pytest.mark.parametrize("s", [1, 2, 3])
@pytest.mark.parametrize("q", [0, 1, 2, 3])
def test_phi_strong_matches_symbolic(psi, s, q):
    poly, expr = PSIS[psi]
    for x in range(5):
        assert eval_phi_strong(s, q, poly, x) == oracles.phi_strong(s, q, expr, x)
    pp, p = phi_strong(s, q, poly)
    assert (pp(4), p(4)) == eval_phi_strong(s, q, poly, 4)


@pytest.mark.parametrize("psi", sorted(PSIS))
def test_phi_complete_matches_symbolic(psi):
    poly, expr = PSIS[psi]
    for k in range(4):
        for x in range(6):
            assert eval_phi_complete(k, poly, x) == oracles.phi_complete(k, expr, x) == phi_complete(k, poly)(x)


def test_s_zero_rejected():
    with pytest.raises(ArgumentError):
        eval_phi_strong(0, 0, 0, 1)
    with pytest.raises(ArgumentError):
        eval_phi_complete(-1, 0, 1)


def test_threshold_recurrences():
    for s in (1, 2, 3):
        for q in (0, 1, 2):
            for t in (1, 2, 5):
                for w in (1, 2, 3):
                    for p in (0, 1, 4):
                        assert ThresholdTable.build(s, q, t, w, p).recurrences_hold()


def test_long_polynomials_match_symbolic():
    for s in (1, 2):
        for ell in (4, 5, 6):
            for c in (1, 4):
                lp = LongHoleParams(ell, s, c)
                assert lp.q == 2 * s * ell
                assert theta(lp) == X ** (c * s)
                for name, (poly, expr) in PSIS.items():
                    got = phi_long_kssfree(poly, lp)
                    for x in range(4):
                        assert got(x) == oracles.phi_long(expr, s, ell, c, x)


def test_special_chain_grows():
    chain = special_chain(3)
    assert len(chain) == 3
    for a, b in zip(chain, chain[1:]):
        assert all(b(x) >= a(x) for x in range(6))
    assert special_psi_prime(X)(1) == 85 + 43


def test_long_params_validation():
    with pytest.raises(ArgumentError):
        LongHoleParams(3, 1)
    with pytest.raises(ArgumentError):
        LongHoleParams(5, 0)
    assert LongHoleParams(5, 2, 1).to_json() == {"ell": 5, "s": 2, "c": 1}
