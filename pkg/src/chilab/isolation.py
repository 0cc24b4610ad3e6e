"""Isolating complete and complete bipartite graphs.

The extractors here turn the constructive arguments for self-isolation into
procedures that return certificates.  Each one has two modes:

* strict (default): the chromatic threshold is checked first; below it the
  answer is :class:`Inconclusive`.  Above it, every step the argument takes is
  guaranteed to succeed, and a step that does not raises
  :class:`~chilab.errors.TheoremViolation`.
* forced: the threshold is skipped and the same construction runs best-effort.
  Emitted objects are checked against their definition before being returned;
  anything that would not verify is discarded, and the result is
  :class:`Inconclusive` if nothing survives.

The thresholds grow like ``omega**(2s^2)``, so strict mode is only
conclusive on graphs far beyond desk scale.  Forced mode is how the
construction gets exercised.

Internally all routines take ``(g, mask)``: a host graph and the vertex set of
the induced subgraph being worked on.  That keeps vertex names stable across
recursive calls and shares the host's chromatic-number cache.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from . import trace
from ._bits import first_k, iter_bits, members
from .certificates import (
    Certificate,
    CliqueSpec,
    HFreeSet,
    Inconclusive,
    IsolatedCopy,
    NondominatingCopy,
    Sprinkling,
    Template,
    with_params,
)
from .errors import ArgumentError, TheoremViolation
from .graph import Graph, common_neighbours_mask, common_nonneighbours_mask, neighbourhood_mask
from .holes import Biclique, BicliqueSpec, iter_bicliques_mask
from .kernels import chromatic_number_mask as _chi
from .kernels import clique_number_mask as _omega
from .kernels import max_clique_mask, stable_sets_mask
from .poly import NonDecPoly, PolyLike, X

B_COMPLETE_SMALL = trace.branch("complete.small_omega", "omega < k: the whole graph is K_k-free")
B_COMPLETE_COPY = trace.branch("complete.isolated_copy", "some A_X has large chi: K_k copy X isolated from A_X")
B_COMPLETE_FREE = trace.branch("complete.clique_free_part", "some B_Y has large chi: B_Y is K_k-free")

B_BIGBIP_FIRST = trace.branch("bigbip.first_sprinkling", "low-neighbourhood set of the whole graph gives a sprinkling")
B_BIGBIP_GROW_SPRINKLE = trace.branch("bigbip.grow_sprinkling", "|S| < s and (A, N(S)) is a sprinkling")
B_BIGBIP_GROW = trace.branch("bigbip.grow", "|S| < s: extend S by a big non-neighbour of B")
B_BIGBIP_COPY = trace.branch("bigbip.kss_copy", "|S| = s: S u S' is a nondominating K_{s,s}")
B_BIGBIP_TEMPLATE = trace.branch("bigbip.template", "|S| = s: (M, T) is a (t,2)-template")

B_STRONG_CLAIM1 = trace.branch("strong.initial_certificate", "first template search already yields a certificate")
B_STRONG_START = trace.branch("strong.initial_template", "a (t,2)-template starts the maximal-template search")
B_STRONG_EXTEND_FREE = trace.branch("strong.extend_unhomed", "vertices with no home extend the template")
B_STRONG_HOME_COPY = trace.branch("strong.home_kss_copy", "a home S and a stable S' in a later block give a nondominating K_{s,s}")
B_STRONG_HOME_CLAIM1 = trace.branch("strong.home_certificate", "template search inside F'' yields a certificate")
B_STRONG_EXTEND_HOME = trace.branch("strong.extend_home", "a template inside F'' extends the template")
B_STRONG_HOME_BOUNDED = trace.branch("strong.home_bounded", "a home class has bounded chromatic number")

B_BIP_COPY = trace.branch("bip.kss_copy", "a nondominating K_{s,s} restricts to K_{s,s'}")
B_BIP_FREE = trace.branch("bip.hfree_part", "sprinkling part P is K_{s,s'}-free")
B_BIP_SPRINKLED = trace.branch("bip.sprinkling_copy", "copy H inside P is isolated from Q minus N(H)")


# polynomials ------------------------------------------------------------


def _geom(q: int, lo: int, hi: int) -> int:
    """q**lo + ... + q**(hi-1) (empty sum is 0)."""
    return sum(q**i for i in range(lo, hi))


def _geom_poly(q: int, s: int) -> int:
    # the "2 + q + ... + q^(s-1)" factor
    return 2 + _geom(q, 1, s)


def phi_complete(k: int, psi: PolyLike) -> NonDecPoly:
    """``(x+1)^k * psi(x) + x``."""
    if k < 0:
        raise ArgumentError("k must be non-negative")
    return (X + 1) ** k * NonDecPoly.lift(psi) + X


def eval_phi_complete(k: int, psi: PolyLike, x: int) -> int:
    if k < 0:
        raise ArgumentError("k must be non-negative")
    return (x + 1) ** k * NonDecPoly.lift(psi)(x) + x


def phi_strong(s: int, q: int, psi: PolyLike) -> tuple[NonDecPoly, NonDecPoly]:
    """The pair ``(phi', phi)`` of the strong isolation bound, as polynomials."""
    if s < 1:
        raise ArgumentError("s must be at least 1")
    if q < 0:
        raise ArgumentError("q must be non-negative")
    psi = NonDecPoly.lift(psi)
    xs = X**s
    phi_p = xs * (s * psi + (s + 1) ** s * X ** (s * (s + 1)) * psi + (s + 1) * X ** (s + 1))
    phi_p = phi_p + q**s * (s + 1) * X ** (s + 1) + _geom_poly(q, s) * psi + 2
    phi = (s + 1) ** (2 * s) * X ** (2 + 2 * s * (s + 1)) * psi
    phi = phi + (s + 1) ** s * X ** (1 + s * (s + 1)) * phi_p + (X + 1) * (s + 1) * X ** (s + 1)
    return phi_p, phi


def eval_phi_strong(s: int, q: int, psi: PolyLike, x: int) -> tuple[int, int]:
    """Evaluate ``(phi'(x), phi(x))`` directly in integers."""
    if s < 1:
        raise ArgumentError("s must be at least 1 (s = 0 is not supported)")
    if q < 0 or x < 0:
        raise ArgumentError("q and x must be non-negative")
    p = NonDecPoly.lift(psi)(x)
    phi_p = x**s * (s * p + (s + 1) ** s * x ** (s * (s + 1)) * p + (s + 1) * x ** (s + 1))
    phi_p += q**s * (s + 1) * x ** (s + 1) + _geom_poly(q, s) * p + 2
    phi = (s + 1) ** (2 * s) * x ** (2 + 2 * s * (s + 1)) * p
    phi += (s + 1) ** s * x ** (1 + s * (s + 1)) * phi_p + (x + 1) * (s + 1) * x ** (s + 1)
    return phi_p, phi


def bigbip_thresholds_met(chi: int, omega: int, s: int, q: int, t: int, p: int) -> bool:
    first = chi > omega**s * ((s + t**s) * p + t)
    second = chi >= q**s * t + _geom_poly(q, s) * p + 2
    return first and second


@dataclass(frozen=True)
class ThresholdTable:
    """The sequences ``m_0..m_s`` and ``n_0..n_s`` driving the biclique growth."""

    s: int
    q: int
    t: int
    omega: int
    p: int
    m: tuple[int, ...]
    n: tuple[int, ...]

    @classmethod
    def build(cls, s: int, q: int, t: int, omega: int, p: int) -> "ThresholdTable":
        m = tuple(omega ** (s - i) * (t**s * p + t) + _geom(omega, 0, s - i) * p for i in range(s + 1))
        n = tuple(q ** (s - i) * t + _geom(q, 0, s - i) * p for i in range(s + 1))
        return cls(s, q, t, omega, p, m, n)

    def recurrences_hold(self) -> bool:
        s, w, q, p = self.s, self.omega, self.q, self.p
        if self.m[s] != self.t**s * p + self.t or self.n[s] != self.t:
            return False
        return all(self.m[i] == w * self.m[i + 1] + p and self.n[i] == q * self.n[i + 1] + p for i in range(s))


# shared helpers ---------------------------------------------------------


def _psi_params(psi: NonDecPoly) -> list[int]:
    return psi.to_json()


def _fail(forced: bool, reason: str, params: dict) -> Inconclusive:
    if forced:
        return Inconclusive(reason, params)
    raise TheoremViolation(reason)


def nondominated(g: Graph, witness: int, psi: NonDecPoly) -> bool:
    """``chi(W) > psi(omega(W))``."""
    return _chi(g, witness) > psi(_omega(g, witness))


def sprinkling_r(g: Graph, P: int, Q: int) -> int:
    rows = g.rows
    return max((_chi(g, rows[v] & Q) for v in iter_bits(P)), default=0)


def is_sprinkling(g: Graph, P: int, Q: int, q: int, psi: NonDecPoly) -> bool:
    if P & Q:
        return False
    if not nondominated(g, P, psi):
        return False
    return _chi(g, Q) > psi(_omega(g, Q)) + q * sprinkling_r(g, P, Q)


def _prefix_with_chi(g: Graph, mask: int, target: int) -> int:
    """Shortest prefix (by index) of ``mask`` with ``chi >= target``.

    chi grows by at most one per added vertex, so the result has chi exactly
    ``target`` when ``chi(mask) >= target``.
    """
    order = members(mask)
    lo, hi = 0, len(order)
    while lo < hi:
        mid = (lo + hi) // 2
        if _chi(g, first_k(mask, mid + 1)) >= target:
            hi = mid
        else:
            lo = mid + 1
    return first_k(mask, lo + 1)


def _sprinkling_prefix(g: Graph, low: int, mask: int, q: int, psi: NonDecPoly) -> int:
    """Shortest prefix ``P`` of ``low`` making ``(P, mask - P)`` a sprinkling, or 0."""
    pre = 0
    for v in iter_bits(low):
        pre |= 1 << v
        if nondominated(g, pre, psi) and is_sprinkling(g, pre, mask & ~pre, q, psi):
            return pre
    return 0


def _maximal_witness(g: Graph, scope: int, copy_mask: int) -> int:
    return scope & ~copy_mask & ~neighbourhood_mask(g, copy_mask)


def _sets(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


# complete graphs --------------------------------------------------------


def isolate_complete(g: Graph, k: int, psi: PolyLike, forced: bool = False) -> Certificate:
    """Isolate ``K_k``: an isolated ``k``-clique or a ``K_k``-free part of large chi.

    Works on a lexicographically least maximum clique ``K``; ``V - K`` is
    covered by the sets ``A_X`` (no neighbour in ``X``, ``|X| = k``) and
    ``B_Y`` (complete to ``K - Y``, ``|Y| = k - 1``).
    """
    if k < 0:
        raise ArgumentError("k must be non-negative")
    psi = NonDecPoly.lift(psi)
    params = {"op": "isolate_complete", "k": k, "psi": _psi_params(psi), "forced": forced}
    full = g.full_mask
    w = _omega(g, full)
    chi = _chi(g, full)
    if not forced and chi <= eval_phi_complete(k, psi, w):
        return Inconclusive("threshold", params)
    p = psi(w)
    big: Callable[[int], bool] = (lambda m: _chi(g, m) > p) if not forced else (lambda m: nondominated(g, m, psi))

    if w < k:
        if big(full):
            trace.hit(B_COMPLETE_SMALL)
            return HFreeSet(_sets(full), CliqueSpec(k), psi, params)
        return _fail(forced, "whole graph is K_k-free but chi is small", params)

    K = max_clique_mask(g, full)
    rest = full & ~K
    kv = members(K)
    for xs in combinations(kv, k):
        ax = common_nonneighbours_mask(g, sum(1 << v for v in xs), within=rest)
        if big(ax):
            trace.hit(B_COMPLETE_COPY)
            return IsolatedCopy(frozenset(xs), _sets(ax), psi, params)
    if k >= 1:
        for ys in combinations(kv, k - 1):
            keep = K & ~sum(1 << v for v in ys)
            by = common_neighbours_mask(g, keep, within=rest)
            if big(by):
                trace.hit(B_COMPLETE_FREE)
                return HFreeSet(_sets(by), CliqueSpec(k), psi, params)
    return _fail(forced, "no part of V - K has large chromatic number", params)


# big non-neighbour --------------------------------------------------------


def big_nonneighbour_mask(g: Graph, mask: int) -> int:
    """A vertex ``v`` of ``g[mask]`` whose non-neighbourhood there has
    ``chi * omega >= chi(g[mask])``.  ``g[mask]`` must be nonnull and not complete."""
    if not mask:
        raise ArgumentError("graph is null")
    clique = max_clique_mask(g, mask)
    if clique == mask:
        raise ArgumentError("graph is complete")
    rows = g.rows
    best_v, best_key = -1, None
    for x in iter_bits(clique):
        d = mask & ~rows[x] & ~(1 << x)
        key = (_chi(g, d | (1 << x)), d != 0)
        if best_key is None or key > best_key:
            best_v, best_key = x, key
    return best_v


def big_nonneighbour(g: Graph) -> int:
    return big_nonneighbour_mask(g, g.full_mask)


# bigbip -------------------------------------------------------------------


def _bigbip(
    g: Graph, mask: int, s: int, q: int, t: int, psi: NonDecPoly, forced: bool, params: dict, low_level: int | None = None
) -> Certificate:
    w = _omega(g, mask)
    chi = _chi(g, mask)
    p = psi(w)
    if not forced and not bigbip_thresholds_met(chi, w, s, q, t, p):
        return Inconclusive("threshold", params)
    if s == 0:
        # K_{0,0} is the null graph; the whole graph is its witness
        if nondominated(g, mask, psi):
            return NondominatingCopy(Biclique(frozenset(), frozenset()), BicliqueSpec(0), _sets(mask), psi, params)
        return _fail(forced, "s = 0 and chi is small", params)
    if t == 0:
        return Template((frozenset(), frozenset()), 0, s, params)

    table = ThresholdTable.build(s, q, t, w, p)
    rows = g.rows
    big = (lambda m: _chi(g, m) > p) if not forced else (lambda m: nondominated(g, m, psi))
    S = 0
    ns, ms = mask, mask
    while S.bit_count() < s:
        i = S.bit_count()
        bound = table.n[i + 1] if low_level is None else low_level
        low = 0
        for v in iter_bits(ms):
            if _chi(g, rows[v] & ns) <= bound:
                low |= 1 << v
        if S == 0:
            if forced:
                P = _sprinkling_prefix(g, low, mask, q, psi)
            else:
                P = _prefix_with_chi(g, low, p + 1) if _chi(g, low) > p else 0
            if P:
                Q = mask & ~P
                trace.hit(B_BIGBIP_FIRST)
                return Sprinkling(_sets(P), _sets(Q), q, sprinkling_r(g, P, Q), psi, params)
        elif big(low) and (not forced or is_sprinkling(g, low, ns, q, psi)):
            trace.hit(B_BIGBIP_GROW_SPRINKLE)
            return Sprinkling(_sets(low), _sets(ns), q, sprinkling_r(g, low, ns), psi, params)
        B = ms & ~low
        if not B:
            return _fail(forced, "no vertex to extend the stable set", params)
        if max_clique_mask(g, B) == B:
            # strict thresholds rule this out; forced runs just take the first vertex
            if not forced:
                raise TheoremViolation("the set of extendable vertices is a clique")
            v = (B & -B).bit_length() - 1
        else:
            v = big_nonneighbour_mask(g, B)
        trace.hit(B_BIGBIP_GROW)
        S |= 1 << v
        ns = ns & rows[v] & ~(1 << v)
        ms = ms & ~rows[v] & ~(1 << v)

    if ns.bit_count() < t:
        return _fail(forced, "common neighbourhood of S has fewer than t vertices", params)
    T = first_k(ns, t)
    covered = 0
    for sp in stable_sets_mask(g, T, s):
        d = common_nonneighbours_mask(g, sp, within=ms)
        if big(d):
            trace.hit(B_BIGBIP_COPY)
            return NondominatingCopy(Biclique(_sets(S), _sets(sp)), BicliqueSpec(s), _sets(d), psi, params)
        covered |= d
    B = ms & ~covered
    if B.bit_count() < t:
        return _fail(forced, "too few vertices left for the template", params)
    trace.hit(B_BIGBIP_TEMPLATE)
    return Template((_sets(first_k(B, t)), _sets(T)), t, s, params)


def bigbip_step(g: Graph, s: int, q: int, t: int, psi: PolyLike, forced: bool = False) -> Certificate:
    """Nondominating ``K_{s,s}``, a ``(psi, q)``-sprinkling, or a ``(t, 2)``-template."""
    if min(s, q, t) < 0:
        raise ArgumentError("s, q, t must be non-negative")
    psi = NonDecPoly.lift(psi)
    params = {"op": "bigbip_step", "s": s, "q": q, "t": t, "psi": _psi_params(psi), "forced": forced}
    return _bigbip(g, g.full_mask, s, q, t, psi, forced, params)


# strong isolation ---------------------------------------------------------


@dataclass(frozen=True)
class Knobs:
    """Forced-mode overrides; strict runs ignore them.

    The natural sizes (template size ``t = (s+1) omega^(s+1)``, its step
    ``s omega^s``, the neighbourhood split level ``n`` of the hole pipelines,
    the inflated polynomial handed to the isolation step, and the levels
    ``n_i`` that decide which vertices count as low during biclique growth,
    here ``low``) exceed anything
    a desk-scale graph can meet.  Shrinking them lets forced runs reach the
    later stages of each construction.  Every emitted certificate is still
    checked against the requested polynomial, so soundness does not depend on
    these values.
    """

    t: int | None = None
    t_step: int | None = None
    n: int | None = None
    psi_prime: NonDecPoly | None = None
    low: int | None = None

    def to_json(self) -> dict:
        out: dict = {}
        for key in ("t", "t_step", "n", "low"):
            if getattr(self, key) is not None:
                out[key] = getattr(self, key)
        if self.psi_prime is not None:
            out["psi_prime"] = self.psi_prime.to_json()
        return out


def active_knobs(knobs: "Knobs | None", forced: bool) -> "Knobs":
    return knobs if forced and knobs is not None else Knobs()


def _strong(
    g: Graph,
    mask: int,
    s: int,
    q: int,
    psi: NonDecPoly,
    forced: bool,
    params: dict,
    knobs: Knobs | None = None,
    on_template: Callable[[tuple[int, ...], int], None] | None = None,
) -> Certificate:
    w = _omega(g, mask)
    chi = _chi(g, mask)
    phi_p, phi = eval_phi_strong(s, q, psi, w)
    if not forced and chi <= phi:
        return Inconclusive("threshold", params)
    knobs = active_knobs(knobs, forced)
    t = knobs.t if knobs.t is not None else (s + 1) * w ** (s + 1)
    step = knobs.t_step if knobs.t_step is not None else s * w**s

    def tk(k: int) -> int:
        return t - (k - 2) * step

    p = psi(w)
    big = (lambda m: _chi(g, m) > p) if not forced else (lambda m: nondominated(g, m, psi))
    rows = g.rows

    def claim1(sub: int) -> Certificate:
        # in strict mode chi(sub) > phi'(omega) makes the bigbip thresholds hold
        return _bigbip(g, sub, s, q, t, psi, forced, params, knobs.low)

    first = claim1(mask)
    if isinstance(first, (NondominatingCopy, Sprinkling)):
        trace.hit(B_STRONG_CLAIM1)
        return first
    if not isinstance(first, Template):
        return _fail(forced, "no initial template", params)
    trace.hit(B_STRONG_START)
    blocks = [sum(1 << v for v in b) for b in first.blocks]
    if on_template:
        on_template(tuple(blocks), t)

    while True:
        k = len(blocks)
        nt = tk(k + 1)
        can_extend = nt >= 1 and k + 1 <= w + 1
        z = mask
        for b in blocks:
            z &= ~b
        stables = [list(stable_sets_mask(g, b, s)) for b in blocks]
        Y = 0
        for sets in stables:
            for S in sets:
                Y |= common_nonneighbours_mask(g, S, within=z)
        rest = z & ~Y
        if can_extend and rest.bit_count() >= nt:
            trace.hit(B_STRONG_EXTEND_FREE)
            blocks = [first_k(rest, nt)] + [first_k(b, nt) for b in blocks]
            if on_template:
                on_template(tuple(blocks), nt)
            continue

        # homes: least block index, then first stable set in lexicographic order
        homes: dict[tuple[int, int], int] = {}
        unhomed = Y
        for i, sets in enumerate(stables):
            for idx, S in enumerate(sets):
                got = common_nonneighbours_mask(g, S, within=unhomed)
                if got:
                    homes[(i, idx)] = got
                    unhomed &= ~got
        extended = False
        for (i, idx) in sorted(homes):
            S = stables[i][idx]
            F = homes[(i, idx)]
            Fp = 0
            later: list[int] = []
            for j in range(i + 1, k):
                comp = common_neighbours_mask(g, S, within=blocks[j])
                Bj = first_k(comp, nt) if nt >= 1 else comp
                later.append(Bj)
                for sp in stable_sets_mask(g, Bj, s):
                    W = common_nonneighbours_mask(g, sp, within=F)
                    if big(W):
                        trace.hit(B_STRONG_HOME_COPY)
                        return NondominatingCopy(Biclique(_sets(S), _sets(sp)), BicliqueSpec(s), _sets(W), psi, params)
                    Fp |= W
            Fpp = F & ~Fp
            if not forced and _chi(g, Fpp) <= phi_p:
                if _chi(g, F) > w * t**s * p + phi_p:
                    raise TheoremViolation("home class exceeds its chromatic bound")
                trace.hit(B_STRONG_HOME_BOUNDED)
                continue
            if not Fpp:
                continue
            res = claim1(Fpp)
            if isinstance(res, (NondominatingCopy, Sprinkling)):
                trace.hit(B_STRONG_HOME_CLAIM1)
                return res
            if not isinstance(res, Template):
                if not forced:
                    raise TheoremViolation("large F'' without a template")
                # forced analogue of the bounded case: nothing to extract here
                trace.hit(B_STRONG_HOME_BOUNDED)
                continue
            earlier = [first_k(blocks[h], nt) for h in range(i)]
            if can_extend and all(b.bit_count() == nt for b in later):
                c1, c2 = (sum(1 << v for v in b) for b in res.blocks)
                trace.hit(B_STRONG_EXTEND_HOME)
                blocks = [first_k(c1, nt), first_k(c2, nt)] + earlier + later
                if on_template:
                    on_template(tuple(blocks), nt)
                extended = True
                break
            if not forced:
                raise TheoremViolation("template inside F'' could not be extended")
        if extended:
            continue
        return _fail(forced, "template maximal and no certificate found", params)


def strong_isolation(
    g: Graph,
    s: int,
    q: int,
    psi: PolyLike,
    forced: bool = False,
    knobs: Knobs | None = None,
) -> Certificate:
    """A ``psi``-nondominating ``K_{s,s}`` or a ``(psi, q)``-sprinkling.

    Grows a maximal template ``(A_1..A_k)``, assigns every vertex of
    ``Z = V - (A_1 u .. u A_k)`` that misses some stable ``s``-set of a block
    to its home, and looks inside each home class either for a nondominating
    biclique or for a template that extends the maximal one.
    """
    if s < 1:
        raise ArgumentError("s must be at least 1 (s = 0 is not supported)")
    if q < 0:
        raise ArgumentError("q must be non-negative")
    psi = NonDecPoly.lift(psi)
    params = {"op": "strong_isolation", "s": s, "q": q, "psi": _psi_params(psi), "forced": forced}
    return _strong(g, g.full_mask, s, q, psi, forced, params, knobs)


# complete bipartite graphs ------------------------------------------------


def _bip(
    g: Graph, mask: int, s: int, s2: int, psi: NonDecPoly, forced: bool, params: dict, knobs: Knobs | None
) -> Certificate:
    q = s + s2
    inner = dict(params, q=q)
    res = _strong(g, mask, s, q, psi, forced, inner, knobs)
    if isinstance(res, NondominatingCopy):
        trace.hit(B_BIP_COPY)
        side_b = frozenset(sorted(res.copy.side_b)[:s2])
        return NondominatingCopy(Biclique(res.copy.side_a, side_b), BicliqueSpec(s, s2), res.witness, psi, params)
    if isinstance(res, Sprinkling):
        P = sum(1 << v for v in res.P)
        Q = sum(1 << v for v in res.Q)
        found = next(iter_bicliques_mask(g, P, s, s2), None)
        if found is None:
            trace.hit(B_BIP_FREE)
            return HFreeSet(res.P, BicliqueSpec(s, s2), psi, params)
        a, b = found
        h = a | b
        W = Q & ~neighbourhood_mask(g, h) & ~h
        if nondominated(g, W, psi):
            trace.hit(B_BIP_SPRINKLED)
            return NondominatingCopy(Biclique(_sets(a), _sets(b)), BicliqueSpec(s, s2), _sets(W), psi, params)
        return _fail(forced, "copy inside P is not isolated from Q", params)
    return with_params(res, params)


def bip_self_isolation(
    g: Graph, s: int, s2: int, psi: PolyLike, forced: bool = False, knobs: Knobs | None = None
) -> Certificate:
    """Isolate ``K_{s,s2}``: a nondominating copy, or a ``K_{s,s2}``-free part of large chi."""
    if not (s >= s2 >= 0 and s >= 1):
        raise ArgumentError("need s >= s2 >= 0 and s >= 1")
    psi = NonDecPoly.lift(psi)
    params = {"op": "bip_self_isolation", "s": s, "s2": s2, "psi": _psi_params(psi), "forced": forced}
    return _bip(g, g.full_mask, s, s2, psi, forced, params, knobs)
