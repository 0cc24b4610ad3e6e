"""Special-hole and long-hole pipelines, and the multihole / k-object extractors.

Two imported results are used as black boxes and only *checked* here:

* the dominating set of a shortest odd hole has ``chi <= 21 x`` when every
  neighbourhood has ``chi <= x`` (:func:`odd_dominator_check`);
* graphs with no long hole satisfy ``chi <= tau^c + 1`` for some unspecified
  constant ``c`` (:func:`kss_free_longfree_binding_check`, with ``c`` taken
  from :class:`LongHoleParams`).

Strict-mode steps that lean on the second one report
``Inconclusive("binding exponent c insufficient")`` when they fail, rather
than raising, because the configured ``c`` is a guess.

See :mod:`chilab.isolation` for the strict/forced contract and the ``(g,
mask)`` convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from typing import Iterable, Iterator

from . import trace
from ._bits import iter_bits, mask_of
from .certificates import Certificate, Inconclusive, MultiholeCert, NondominatingCopy, Sprinkling
from .errors import ArgumentError, TheoremViolation
from .graph import Graph, anticomplete_masks, neighbourhood_mask
from .holes import (
    Biclique,
    BicliqueSpec,
    Component,
    ComponentSpec,
    Hole,
    HoleSpec,
    Multihole,
    dominator_mask,
    find_hole_mask,
    find_multihole_mask,
    has_induced_biclique_mask,
    iter_bicliques_mask,
    iter_holes_mask,
)
from .isolation import Knobs, _fail, _sets, _strong, active_knobs, nondominated, phi_strong
from .kernels import biclique_tau
from .kernels import chromatic_number_mask as _chi
from .kernels import clique_number_mask as _omega
from .kernels import stable_sets_mask
from .poly import NonDecPoly, PolyLike, X

C_INSUFFICIENT = "binding exponent c insufficient"
DIRECT_CAP = 24
_DIRECT_TRIES = 256

B_SMALL_FOUR = trace.branch("smallnbrs.four_hole", "a four-hole with its non-neighbours as witness")
B_SMALL_ODD = trace.branch("smallnbrs.odd_hole", "a shortest odd hole with its non-neighbours as witness")

B_PAIR_12 = trace.branch("bignbrs.edge_v1v2", "A1 n A2 is small: v1v2 is rich")
B_PAIR_34 = trace.branch("bignbrs.edge_v3v4", "A3 n A4 is small: v3v4 is rich")
B_PAIR_23 = trace.branch("bignbrs.edge_v2v3", "both intersections large: v2v3 is rich")
B_PAIR_NONE = trace.branch("bignbrs.few_rich", "rich-neighbourhood vertices have chi <= omega")

B_G5_SMALL = trace.branch("girth5.small_side", "odd hole found among low-neighbourhood vertices")
B_G5_RICH = trace.branch("girth5.rich_pair", "odd hole inside one side of an anticomplete pair")

B_SP_FOUR = trace.branch("special.four_hole_copy", "isolation step gives a nondominating four-hole")
B_SP_SPRINKLE = trace.branch("special.sprinkling_four", "four-hole inside sprinkling part P")
B_SP_C4FREE = trace.branch("special.c4free_part", "P is four-hole-free: odd-hole pipeline inside P")
B_SP_DIRECT = trace.branch("special.direct", "direct search for a nondominating special hole", trace.FALLBACK)

B_MULTI_BASE = trace.branch("multi.special_base", "k = 1: a special hole")
B_MULTI_STEP = trace.branch("multi.special_step", "nondominating special hole, recurse into its witness")
B_MULTI_DIRECT = trace.branch("multi.special_direct", "direct multihole search", trace.FALLBACK)

B_BL_PAIR = trace.branch("biglong.pair", "endpoint neighbourhoods of a long induced path")
B_BL_NONE = trace.branch("biglong.no_long_hole", "rich vertices induce no long enough hole")

B_LG5_SMALL = trace.branch("longgirth5.small_side", "long hole among low-neighbourhood vertices")
B_LG5_RICH = trace.branch("longgirth5.rich_pair", "long hole inside one side of an anticomplete pair")

B_LK_KSS = trace.branch("longkss.kss_copy", "isolation step gives a nondominating K_{s,s}")
B_LK_SMALL = trace.branch("longkss.sprinkling_small", "K_{s,s} or short long hole inside sprinkling part P")
B_LK_CLEAN = trace.branch("longkss.clean_part", "P is clean: long-hole pipeline inside P")
B_LK_DIRECT = trace.branch("longkss.direct", "direct search for a nondominating K_{s,s} or long hole", trace.FALLBACK)

B_KO_BASE = trace.branch("kobject.base", "k = 1: a K_{s,s} or a long hole")
B_KO_STEP = trace.branch("kobject.step", "nondominating component, recurse into its witness")
B_KO_DIRECT = trace.branch("kobject.direct", "direct k-object search", trace.FALLBACK)


@dataclass(frozen=True)
class LongHoleParams:
    """``ell``: long-hole threshold; ``s``: biclique size; ``c``: exponent of the
    imported binding bound ``chi <= tau^c + 1``."""

    ell: int
    s: int
    c: int = 4

    def __post_init__(self):
        if self.ell < 4:
            raise ArgumentError("ell must be at least 4")
        if self.s < 1:
            raise ArgumentError("s must be at least 1")
        if self.c < 1:
            raise ArgumentError("c must be at least 1")

    @property
    def q(self) -> int:
        return 2 * self.s * self.ell

    def to_json(self) -> dict:
        return {"ell": self.ell, "s": self.s, "c": self.c}


# small helpers ------------------------------------------------------------


def _nbr_chi_at_most(g: Graph, mask: int, bound: int) -> int:
    """Vertices of ``mask`` whose neighbourhood inside ``mask`` has chi <= bound."""
    rows = g.rows
    out = 0
    for v in iter_bits(mask):
        if _chi(g, rows[v] & mask) <= bound:
            out |= 1 << v
    return out


def max_neighbourhood_chi(g: Graph, mask: int | None = None) -> int:
    mask = g.full_mask if mask is None else mask
    rows = g.rows
    return max((_chi(g, rows[v] & mask) for v in iter_bits(mask)), default=0)


def _witness(g: Graph, psi: NonDecPoly, copy_mask: int, *scopes: int) -> int | None:
    """All of the first scope anticomplete to the copy, if that is nondominated;
    otherwise try the next scope."""
    shade = copy_mask | neighbourhood_mask(g, copy_mask)
    for scope in scopes:
        w = scope & ~shade
        if nondominated(g, w, psi):
            return w
    return None


def _hole_cert(seq, spec: HoleSpec, witness: int, psi: NonDecPoly, params: dict) -> NondominatingCopy:
    return NondominatingCopy(Hole(tuple(seq)), spec, _sets(witness), psi, params)


def _component_mask(c: Component) -> int:
    return c.mask


def _first_p4(g: Graph, mask: int) -> tuple[int, int, int, int] | None:
    rows = g.rows
    for v1 in iter_bits(mask):
        n1 = rows[v1] & mask
        for v2 in iter_bits(n1):
            for v3 in iter_bits(rows[v2] & mask & ~n1 & ~(1 << v1)):
                for v4 in iter_bits(rows[v3] & mask & ~n1 & ~rows[v2] & ~(1 << v1) & ~(1 << v2)):
                    return v1, v2, v3, v4
    return None


def _lift(cert: Certificate, psi: NonDecPoly, scope: int, g: Graph, params: dict) -> Certificate:
    """Re-issue a nondominating copy found in a sub-call: widen the witness to
    ``scope`` when that still verifies, and answer the outer request."""
    if not isinstance(cert, NondominatingCopy):
        return cert
    inner = mask_of(cert.witness)
    w = _witness(g, psi, cert.copy.mask, scope) or inner
    return NondominatingCopy(cert.copy, cert.spec, _sets(w), psi, params)


def _direct(
    g: Graph, mask: int, candidates: Iterable[tuple[Component, ComponentSpec]], psi: NonDecPoly, params: dict
) -> NondominatingCopy | None:
    for comp, spec in islice(candidates, _DIRECT_TRIES):
        w = _witness(g, psi, comp.mask, mask)
        if w is not None:
            return NondominatingCopy(comp, spec, _sets(w), psi, params)
    return None


# imported-result checkers -------------------------------------------------


def odd_dominator_check(g: Graph, x: int) -> bool:
    """Check: dominating set of a shortest odd hole has ``chi <= 21 x``."""
    full = g.full_mask
    if max_neighbourhood_chi(g, full) > x:
        raise ArgumentError("some neighbourhood has chromatic number above x")
    c = find_hole_mask(g, full, HoleSpec.odd(), shortest=True)
    if c is None:
        raise ArgumentError("graph has no odd hole")
    return _chi(g, dominator_mask(g, mask_of(c))) <= 21 * x


def long_dominator_partition(g: Graph, hole: tuple[int, ...], ell: int) -> list[int]:
    """Split the dominating set of ``hole`` into the ``ell - 3`` path classes and
    the four residue classes; returns the class masks (some may be empty)."""
    rows = g.rows
    k = len(hole)
    cmask = mask_of(hole)
    dom = dominator_mask(g, cmask)
    # index (1-based) of the first hole vertex each dominated vertex sees
    first: dict[int, int] = {}
    for v in iter_bits(dom):
        for i, c in enumerate(hole, start=1):
            if rows[v] >> c & 1:
                first[v] = i
                break
    plen = ell - 3
    classes = [0] * (plen + 4)
    assigned = 0
    for v, i in first.items():
        if i <= plen:
            classes[i - 1] |= 1 << v
            assigned |= 1 << v
    for i in range(max(ell - 2, 1), k + 1):
        t = (i - 1) % 4  # residue class of i; any fixed labelling of i mod 4 works
        piece = 0
        for v, j in first.items():
            if j == i and not cmask >> v & 1:
                piece |= 1 << v
        nxt = hole[i % k]
        piece |= 1 << nxt
        piece &= ~assigned
        classes[plen + t] |= piece
        assigned |= piece
    return classes


def long_dominator_check(g: Graph, n: int, params: LongHoleParams) -> bool:
    """Check: dominating set of a shortest long hole has ``chi <= (ell+1) n``,
    and each class of the explicit partition has ``chi <= n``."""
    full = g.full_mask
    if max_neighbourhood_chi(g, full) > n:
        raise ArgumentError("some neighbourhood has chromatic number above n")
    c = find_hole_mask(g, full, HoleSpec.long(params.ell), shortest=True)
    if c is None:
        raise ArgumentError("graph has no long hole")
    dom = dominator_mask(g, mask_of(c))
    ok = _chi(g, dom) <= (params.ell + 1) * n
    classes = long_dominator_partition(g, c, params.ell)
    union = 0
    for cl in classes:
        if cl & union:
            return False
        union |= cl
    return ok and union == dom and all(_chi(g, cl) <= n for cl in classes)


def _check_long_preconditions(g: Graph, mask: int, params: LongHoleParams, kss: bool = True) -> None:
    if kss and has_induced_biclique_mask(g, mask, params.s, params.s):
        raise ArgumentError(f"graph contains an induced K_{{{params.s},{params.s}}}")
    if find_hole_mask(g, mask, HoleSpec.long(params.ell, params.q)) is not None:
        raise ArgumentError(f"graph has a long hole of length at most {params.q}")


def kss_free_longfree_binding_check(g: Graph, params: LongHoleParams) -> bool:
    """Check ``chi <= tau^c + 1``, ``tau < omega^s`` and ``chi <= omega^(cs)``
    on a ``K_{s,s}``-free graph with no long hole."""
    full = g.full_mask
    s, c = params.s, params.c
    if has_induced_biclique_mask(g, full, s, s):
        raise ArgumentError(f"graph contains an induced K_{{{s},{s}}}")
    if find_hole_mask(g, full, HoleSpec.long(params.ell)) is not None:
        raise ArgumentError("graph has a long hole")
    if g.n == 0:
        return True
    chi = _chi(g, full)
    w = _omega(g, full)
    tau = biclique_tau(g)
    return chi <= tau**c + 1 and tau < w**s and chi <= w ** (c * s)


# special holes ------------------------------------------------------------


def _smallnbrs(
    g: Graph, mask: int, n: int, psi: NonDecPoly, forced: bool, params: dict, kinds=("four", "odd")
) -> Certificate:
    w = _omega(g, mask)
    chi = _chi(g, mask)
    if not forced and chi <= max(w, 21 * n + psi(w)):
        return Inconclusive("threshold", params)
    p = psi(w)
    seen_hole = False
    for kind in kinds:
        spec = HoleSpec.four() if kind == "four" else HoleSpec.odd()
        c = find_hole_mask(g, mask, spec, shortest=True)
        if c is None:
            continue
        seen_hole = True
        cm = mask_of(c)
        wit = mask & ~cm & ~neighbourhood_mask(g, cm)
        ok = _chi(g, wit) > p if not forced else nondominated(g, wit, psi)
        if ok:
            trace.hit(B_SMALL_FOUR if kind == "four" else B_SMALL_ODD)
            return _hole_cert(c, HoleSpec.special() if len(kinds) > 1 else spec, wit, psi, params)
        if not forced:
            raise TheoremViolation("dominating set of the chosen hole is too colourful")
    if not forced:
        raise TheoremViolation("imperfect graph without a special hole" if not seen_hole else "no witness")
    return Inconclusive("no nondominating special hole found", params)


def special_hole_smallnbrs(g: Graph, n: int, psi: PolyLike, forced: bool = False) -> Certificate:
    """Nondominating special hole when every neighbourhood has ``chi <= n``.

    A four-hole is tried first, then a shortest odd hole; the witness is every
    vertex with no neighbour on the hole.
    """
    psi = NonDecPoly.lift(psi)
    full = g.full_mask
    if not forced and max_neighbourhood_chi(g, full) > n:
        raise ArgumentError("some neighbourhood has chromatic number above n")
    params = {"op": "special_hole_smallnbrs", "n": n, "psi": psi.to_json(), "forced": forced}
    return _smallnbrs(g, full, n, psi, forced, params)


def _rich_pair(g: Graph, mask: int, x: int, y: int) -> tuple[int, int]:
    rows = g.rows
    nx, ny = rows[x] & mask, rows[y] & mask
    a = nx & ~ny & ~(1 << y)
    b = ny & ~nx & ~(1 << x)
    return a, b


def _bignbrs(g: Graph, mask: int, n: int, forced: bool) -> tuple[int, int] | None:
    w = _omega(g, mask)
    rows = g.rows
    X_ = mask & ~_nbr_chi_at_most(g, mask, n)
    if _chi(g, X_) <= w:
        trace.hit(B_PAIR_NONE)
        return None
    p4 = _first_p4(g, X_)
    if p4 is None:
        if forced:
            return None
        raise TheoremViolation("imperfect set without an induced P4")
    v1, v2, v3, v4 = p4
    N = [rows[v] & mask for v in p4]
    a1 = N[0] & ~(N[2] | N[3])
    a2 = N[1] & ~(N[3] | (N[0] & N[2]))
    a3 = N[2] & ~(N[0] | (N[1] & N[3]))
    a4 = N[3] & ~(N[1] | N[0])
    bound = n - 2 * w  # "chi > n/2 - omega" is "2 chi > bound"
    if not 2 * _chi(g, a1 & a2) > bound:
        order, label = [(v1, v2), (v3, v4), (v2, v3)], B_PAIR_12
    elif not 2 * _chi(g, a3 & a4) > bound:
        order, label = [(v3, v4), (v1, v2), (v2, v3)], B_PAIR_34
    else:
        order, label = [(v2, v3), (v1, v2), (v3, v4)], B_PAIR_23
    for idx, (x, y) in enumerate(order):
        a, b = _rich_pair(g, mask, x, y)
        if a and b and anticomplete_masks(g, a, b) and 2 * _chi(g, a) > bound and 2 * _chi(g, b) > bound:
            if idx == 0:
                trace.hit(label)
            return a, b
    if forced:
        return None
    raise TheoremViolation("no rich edge on the induced P4")


def anticomplete_pair_c4free(g: Graph, n: int) -> tuple[frozenset[int], frozenset[int]] | None:
    """Anticomplete ``A, B`` with ``2 chi(A), 2 chi(B) > n - 2 omega``, from a rich edge.

    Returns ``None`` when the vertices with ``chi(N(v)) > n`` have ``chi <= omega``.
    """
    full = g.full_mask
    if find_hole_mask(g, full, HoleSpec.four()) is not None:
        raise ArgumentError("graph contains a four-hole")
    pair = _bignbrs(g, full, n, False)
    if pair is None:
        return None
    return _sets(pair[0]), _sets(pair[1])


def _girth5(g: Graph, mask: int, psi: NonDecPoly, forced: bool, params: dict, knobs: Knobs) -> Certificate:
    w = _omega(g, mask)
    chi = _chi(g, mask)
    p = psi(w)
    if not forced and chi <= 85 * w + 43 * p:
        return Inconclusive("threshold", params)
    n = knobs.n if knobs.n is not None else 4 * w + 2 * p
    A = _nbr_chi_at_most(g, mask, n)
    res = _smallnbrs(g, A, n, psi, forced, params, kinds=("odd",))
    if isinstance(res, NondominatingCopy):
        trace.hit(B_G5_SMALL)
        return _lift(res, psi, mask, g, params)
    pair = _bignbrs(g, mask, n, forced)
    if pair is None:
        return _fail(forced, "no anticomplete pair", params)
    X_, Y_ = pair
    sides = [(X_, Y_), (Y_, X_)] if forced else [(X_, Y_)]
    for src, other in sides:
        c = find_hole_mask(g, src, HoleSpec.odd(), shortest=True)
        if c is None:
            continue
        wit = _witness(g, psi, mask_of(c), mask, other)
        if wit is not None:
            trace.hit(B_G5_RICH)
            return _hole_cert(c, HoleSpec.odd(), wit, psi, params)
    return _fail(forced, "no nondominating odd hole in the anticomplete pair", params)


def odd_nondominating_c4free(g: Graph, psi: PolyLike, forced: bool = False, knobs: Knobs | None = None) -> Certificate:
    """Nondominating odd hole in a graph with no four-hole."""
    psi = NonDecPoly.lift(psi)
    full = g.full_mask
    if not forced and find_hole_mask(g, full, HoleSpec.four()) is not None:
        raise ArgumentError("graph contains a four-hole")
    params = {"op": "odd_nondominating_c4free", "psi": psi.to_json(), "forced": forced}
    return _girth5(g, full, psi, forced, params, active_knobs(knobs, forced))


def special_psi_prime(psi: PolyLike) -> NonDecPoly:
    """``85 x + 43 psi(x)``."""
    return 85 * X + 43 * NonDecPoly.lift(psi)


def _special(g: Graph, mask: int, psi: NonDecPoly, forced: bool, params: dict, knobs: Knobs) -> Certificate:
    psi2 = knobs.psi_prime if knobs.psi_prime is not None else special_psi_prime(psi)
    res = _strong(g, mask, 2, 4, psi2, forced, params, knobs)
    if isinstance(res, NondominatingCopy):
        a0, a1 = sorted(res.copy.side_a)
        b0, b1 = sorted(res.copy.side_b)
        seq = (a0, b0, a1, b1) if a0 < b0 else (b0, a0, b1, a1)
        wit = _witness(g, psi, res.copy.mask, mask, mask_of(res.witness))
        if wit is not None:
            trace.hit(B_SP_FOUR)
            return _hole_cert(seq, HoleSpec.special(), wit, psi, params)
        if not forced:
            raise TheoremViolation("four-hole witness lost its chromatic number")
    elif isinstance(res, Sprinkling):
        P, Q = mask_of(res.P), mask_of(res.Q)
        c = find_hole_mask(g, P, HoleSpec.four())
        if c is not None:
            wit = _witness(g, psi, mask_of(c), mask, Q)
            if wit is not None:
                trace.hit(B_SP_SPRINKLE)
                return _hole_cert(c, HoleSpec.special(), wit, psi, params)
            if not forced:
                raise TheoremViolation("sprinkling accounting failed for a four-hole")
        else:
            sub = _girth5(g, P, psi, forced, params, knobs)
            if isinstance(sub, NondominatingCopy):
                trace.hit(B_SP_C4FREE)
                out = _lift(sub, psi, mask, g, params)
                return NondominatingCopy(out.copy, HoleSpec.special(), out.witness, psi, params)
            if not forced:
                return sub
    elif not forced:
        return res
    cands = ((Hole(c), HoleSpec.special()) for c in iter_holes_mask(g, mask, 4, None, HoleSpec.special().accepts))
    direct = _direct(g, mask, cands, psi, params)
    if direct is not None:
        trace.hit(B_SP_DIRECT)
        return direct
    return Inconclusive("no nondominating special hole found", params)


def special_nondominating(g: Graph, psi: PolyLike, forced: bool = False, knobs: Knobs | None = None) -> Certificate:
    """Nondominating special hole, through isolation of ``K_{2,2}`` with ``q = 4``."""
    psi = NonDecPoly.lift(psi)
    params = {"op": "special_nondominating", "psi": psi.to_json(), "forced": forced}
    return _special(g, g.full_mask, psi, forced, params, active_knobs(knobs, forced))


def special_chain(k: int) -> list[NonDecPoly]:
    """Binding polynomials ``[phi_1, .., phi_k]`` for graphs without a special k-multihole."""
    if k < 1:
        raise ArgumentError("k must be at least 1")
    chain = [X]
    while len(chain) < k:
        chain.append(phi_strong(2, 4, special_psi_prime(chain[-1]))[1])
    return chain


def _multi_recursive(g, mask, k, chain, step, base, forced, params) -> list[Component] | Inconclusive | None:
    w = _omega(g, mask)
    if not forced and _chi(g, mask) <= chain[k - 1](w):
        return Inconclusive("threshold", params)
    if k == 1:
        return base(mask)
    cert = step(mask, chain[k - 2])
    if not isinstance(cert, NondominatingCopy):
        return cert if not forced else None
    sub = _multi_recursive(g, mask_of(cert.witness), k - 1, chain, step, base, forced, params)
    if isinstance(sub, list):
        return [cert.copy] + sub
    if not forced:
        raise TheoremViolation("witness of a nondominating component is below its threshold")
    return None


def special_multihole(
    g: Graph, k: int, forced: bool = False, knobs: Knobs | None = None, direct_cap: int = DIRECT_CAP
) -> Certificate:
    """A k-multihole with every component special, extracted one component at a time."""
    if k < 1:
        raise ArgumentError("k must be at least 1")
    chain = special_chain(k)
    kn = active_knobs(knobs, forced)
    params = {"op": "special_multihole", "k": k, "forced": forced}
    specs = (HoleSpec.special(),) * k

    def base(mask: int):
        c = find_hole_mask(g, mask, HoleSpec.special(), shortest=True)
        if c is None:
            if forced:
                return None
            raise TheoremViolation("imperfect graph without a special hole")
        trace.hit(B_MULTI_BASE)
        return [Hole(c)]

    def step(mask: int, psi: NonDecPoly):
        cert = _special(g, mask, psi, forced, params, kn)
        if isinstance(cert, NondominatingCopy):
            trace.hit(B_MULTI_STEP)
        return cert

    res = _multi_recursive(g, g.full_mask, k, chain, step, base, forced, params)
    if isinstance(res, list):
        return MultiholeCert(Multihole(tuple(res)), specs, params)
    if forced and g.n <= direct_cap:
        mh = find_multihole_mask(g, g.full_mask, specs)
        if mh is not None:
            trace.hit(B_MULTI_DIRECT)
            return MultiholeCert(mh, specs, params)
    if isinstance(res, Inconclusive):
        return res
    return Inconclusive("no special multihole found", params)


# long holes ---------------------------------------------------------------


def theta(params: LongHoleParams) -> NonDecPoly:
    """``x^(c s)``."""
    return X ** (params.c * params.s)


def phi_long_kssfree(psi: PolyLike, params: LongHoleParams) -> NonDecPoly:
    """``2 theta + psi + (ell+1)((2 s ell)^s x^s + theta + psi)``."""
    psi = NonDecPoly.lift(psi)
    th = theta(params)
    s, ell = params.s, params.ell
    return 2 * th + psi + (ell + 1) * ((2 * s * ell) ** s * X**s + th + psi)


def _biglong(g: Graph, mask: int, n: int, params: LongHoleParams, forced: bool) -> tuple[int, int] | None:
    s, ell = params.s, params.ell
    w = _omega(g, mask)
    rows = g.rows
    B = mask & ~_nbr_chi_at_most(g, mask, n)
    r = 2 * s * ell - 1
    c = find_hole_mask(g, B, HoleSpec.long(max(ell, r + 1)), shortest=True)
    if c is None:
        trace.hit(B_BL_NONE)
        return None
    path = c[:r]
    pmask = mask_of(path)
    D = 0
    for S in stable_sets_mask(g, pmask, s):
        common = mask & ~pmask
        for v in iter_bits(S):
            common &= rows[v]
        D |= common
    F = mask & ~pmask & ~D
    span = (s - 2) * (ell - 2) + 1
    for v in iter_bits(F):
        idx = [i for i, p in enumerate(path) if rows[v] >> p & 1]
        if idx and idx[-1] - idx[0] > span:
            if forced:
                return None
            raise TheoremViolation("vertex outside D spans too much of the path")
    X_ = rows[path[0]] & mask & ~D
    Y_ = rows[path[-1]] & mask & ~D
    bound = n - (2 * s * ell) ** s * w**s
    ok = not X_ & Y_ and anticomplete_masks(g, X_, Y_) and _chi(g, X_) > bound and _chi(g, Y_) > bound
    if ok:
        trace.hit(B_BL_PAIR)
        return X_, Y_
    if forced:
        return None
    raise TheoremViolation("endpoint neighbourhoods are not an anticomplete pair")


def anticomplete_pair_long(
    g: Graph, n: int, params: LongHoleParams
) -> tuple[frozenset[int], frozenset[int]] | None:
    """Anticomplete ``X, Y`` with ``chi > n - (2 s ell)^s omega^s``, from an
    induced path of ``2 s ell - 1`` rich vertices; ``None`` if the rich
    vertices induce no long hole."""
    full = g.full_mask
    # K_{1,1}-free means edgeless; the pair construction itself never uses it
    _check_long_preconditions(g, full, params, kss=params.s >= 2)
    pair = _biglong(g, full, n, params, False)
    if pair is None:
        return None
    return _sets(pair[0]), _sets(pair[1])


def _longgirth5(
    g: Graph, mask: int, psi: NonDecPoly, lp: LongHoleParams, forced: bool, params: dict, knobs: Knobs
) -> Certificate:
    s, ell = lp.s, lp.ell
    w = _omega(g, mask)
    chi = _chi(g, mask)
    th = theta(lp)(w)
    p = psi(w)
    if not forced and chi <= phi_long_kssfree(psi, lp)(w):
        return Inconclusive("threshold", params)
    n = knobs.n if knobs.n is not None else (2 * s * ell) ** s * w**s + th + p
    spec = HoleSpec.long(ell)
    A = _nbr_chi_at_most(g, mask, n)
    B = mask & ~A
    if forced or _chi(g, A) > th + p + (ell + 1) * n:
        c = find_hole_mask(g, A, spec, shortest=True)
        if c is not None:
            wit = _witness(g, psi, mask_of(c), mask, A)
            if wit is not None:
                trace.hit(B_LG5_SMALL)
                return _hole_cert(c, spec, wit, psi, params)
            if not forced:
                raise TheoremViolation("dominating set of a shortest long hole is too colourful")
        elif not forced:
            return Inconclusive(C_INSUFFICIENT, params)
    if not forced and _chi(g, B) <= th:
        raise TheoremViolation("both sides of the neighbourhood split are small")
    pair = _biglong(g, mask, n, lp, forced)
    if pair is None:
        return Inconclusive(C_INSUFFICIENT, params) if not forced else Inconclusive("no anticomplete pair", params)
    X_, Y_ = pair
    sides = [(X_, Y_), (Y_, X_)] if forced else [(X_, Y_)]
    for src, other in sides:
        c = find_hole_mask(g, src, spec, shortest=True)
        if c is None:
            continue
        wit = _witness(g, psi, mask_of(c), mask, other)
        if wit is not None:
            trace.hit(B_LG5_RICH)
            return _hole_cert(c, spec, wit, psi, params)
    if not forced:
        return Inconclusive(C_INSUFFICIENT, params)
    return Inconclusive("no nondominating long hole found", params)


def long_nondominating_kssfree(
    g: Graph, psi: PolyLike, params: LongHoleParams, forced: bool = False, knobs: Knobs | None = None
) -> Certificate:
    """Nondominating long hole in a ``K_{s,s}``-free graph with no long hole of
    length at most ``2 s ell``."""
    psi = NonDecPoly.lift(psi)
    full = g.full_mask
    if not forced:
        _check_long_preconditions(g, full, params)
    req = {"op": "long_nondominating_kssfree", "psi": psi.to_json(), "forced": forced, **params.to_json()}
    return _longgirth5(g, full, psi, params, forced, req, active_knobs(knobs, forced))


def _small_obstruction(g: Graph, mask: int, lp: LongHoleParams) -> Iterator[tuple[Component, ComponentSpec]]:
    """Induced ``K_{s,s}`` copies, then long holes of length at most ``2 s ell``."""
    kss = BicliqueSpec(lp.s)
    for a, b in iter_bicliques_mask(g, mask, lp.s, lp.s):
        yield Biclique(_sets(a), _sets(b)), kss
    spec = HoleSpec.long(lp.ell, lp.q)
    for c in iter_holes_mask(g, mask, spec.min_len, lp.q, spec.accepts):
        yield Hole(c), HoleSpec.long(lp.ell)


def _any_obstruction(g: Graph, mask: int, lp: LongHoleParams) -> Iterator[tuple[Component, ComponentSpec]]:
    kss = BicliqueSpec(lp.s)
    for a, b in iter_bicliques_mask(g, mask, lp.s, lp.s):
        yield Biclique(_sets(a), _sets(b)), kss
    spec = HoleSpec.long(lp.ell)
    for c in iter_holes_mask(g, mask, spec.min_len, None, spec.accepts):
        yield Hole(c), spec


def _longkss(
    g: Graph, mask: int, psi: NonDecPoly, lp: LongHoleParams, forced: bool, params: dict, knobs: Knobs
) -> Certificate:
    psi2 = knobs.psi_prime if knobs.psi_prime is not None else phi_long_kssfree(psi, lp)
    res = _strong(g, mask, lp.s, lp.q, psi2, forced, params, knobs)
    if isinstance(res, NondominatingCopy):
        wit = _witness(g, psi, res.copy.mask, mask, mask_of(res.witness))
        if wit is not None:
            trace.hit(B_LK_KSS)
            return NondominatingCopy(res.copy, BicliqueSpec(lp.s), _sets(wit), psi, params)
        if not forced:
            raise TheoremViolation("biclique witness lost its chromatic number")
    elif isinstance(res, Sprinkling):
        P, Q = mask_of(res.P), mask_of(res.Q)
        first = next(_small_obstruction(g, P, lp), None)
        if first is not None:
            comp, spec = first
            wit = _witness(g, psi, comp.mask, mask, Q)
            if wit is not None:
                trace.hit(B_LK_SMALL)
                return NondominatingCopy(comp, spec, _sets(wit), psi, params)
            if not forced:
                raise TheoremViolation("sprinkling accounting failed")
        else:
            sub = _longgirth5(g, P, psi, lp, forced, params, knobs)
            if isinstance(sub, NondominatingCopy):
                trace.hit(B_LK_CLEAN)
                return _lift(sub, psi, mask, g, params)
            if not forced:
                return sub
    elif not forced:
        return res
    direct = _direct(g, mask, _any_obstruction(g, mask, lp), psi, params)
    if direct is not None:
        trace.hit(B_LK_DIRECT)
        return direct
    return Inconclusive("no nondominating K_{s,s} or long hole found", params)


def long_or_kss_nondominating(
    g: Graph, psi: PolyLike, params: LongHoleParams, forced: bool = False, knobs: Knobs | None = None
) -> Certificate:
    """Nondominating ``K_{s,s}`` or nondominating long hole, via isolation with ``q = 2 s ell``."""
    psi = NonDecPoly.lift(psi)
    req = {"op": "long_or_kss_nondominating", "psi": psi.to_json(), "forced": forced, **params.to_json()}
    return _longkss(g, g.full_mask, psi, params, forced, req, active_knobs(knobs, forced))


def kobject_chain(k: int, params: LongHoleParams) -> list[NonDecPoly]:
    """Binding polynomials ``[phi_1, .., phi_k]`` for graphs without a k-object."""
    if k < 1:
        raise ArgumentError("k must be at least 1")
    chain = [theta(params)]
    while len(chain) < k:
        chain.append(phi_strong(params.s, params.q, phi_long_kssfree(chain[-1], params))[1])
    return chain


def k_object_extract(
    g: Graph,
    k: int,
    params: LongHoleParams,
    forced: bool = False,
    knobs: Knobs | None = None,
    direct_cap: int = DIRECT_CAP,
) -> Certificate:
    """An induced subgraph with exactly k components, each a ``K_{s,s}`` or a long hole."""
    if k < 1:
        raise ArgumentError("k must be at least 1")
    chain = kobject_chain(k, params)
    kn = active_knobs(knobs, forced)
    req = {"op": "k_object_extract", "k": k, "forced": forced, **params.to_json()}

    def base(mask: int):
        first = next(_any_obstruction(g, mask, params), None)
        if first is None:
            return None if forced else Inconclusive(C_INSUFFICIENT, req)
        trace.hit(B_KO_BASE)
        return [first[0]]

    def step(mask: int, psi: NonDecPoly):
        cert = _longkss(g, mask, psi, params, forced, req, kn)
        if isinstance(cert, NondominatingCopy):
            trace.hit(B_KO_STEP)
        return cert

    res = _multi_recursive(g, g.full_mask, k, chain, step, base, forced, req)
    if isinstance(res, list):
        return MultiholeCert(Multihole(tuple(res)), tuple(_spec_of(c, params) for c in res), req)
    if forced and g.n <= direct_cap:
        for nb in range(k, -1, -1):
            specs = (BicliqueSpec(params.s),) * nb + (HoleSpec.long(params.ell),) * (k - nb)
            mh = find_multihole_mask(g, g.full_mask, specs)
            if mh is not None:
                trace.hit(B_KO_DIRECT)
                return MultiholeCert(mh, specs, req)
    if isinstance(res, Inconclusive):
        return res
    return Inconclusive("no k-object found", req)


def _spec_of(c: Component, params: LongHoleParams) -> ComponentSpec:
    return BicliqueSpec(params.s) if isinstance(c, Biclique) else HoleSpec.long(params.ell)
