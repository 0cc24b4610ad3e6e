"""Exact graph invariants at desk scale.

Every routine has a ``*_mask`` form working on an induced subgraph given as a
bitmask of a host graph.  Results for chromatic and clique numbers are
memoised on the host :class:`~chilab.graph.Graph` (graphs are immutable), which
matters because the extraction procedures ask for ``chi`` of many overlapping
subsets.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from ._bits import iter_bits, lowest, members
from .errors import ArgumentError
from .graph import Graph

# cliques --------------------------------------------------------------


def max_clique_mask(g: Graph, mask: int | None = None) -> int:
    """Lexicographically least maximum clique of ``g[mask]``, as a mask."""
    if mask is None:
        mask = g.full_mask
    key = ("clique", mask)
    hit = g._memo.get(key)
    if hit is not None:
        return hit
    rows = g.rows
    best_size = 0
    best = 0

    # Carraghan-Pardalos order: candidates in increasing index, so the first
    # clique reaching a new record size is lexicographically least.
    def expand(clique: int, size: int, cand: int) -> None:
        nonlocal best, best_size
        while cand:
            if size + cand.bit_count() <= best_size:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            nxt = cand & rows[v]
            if nxt:
                expand(clique | low, size + 1, nxt)
            elif size + 1 > best_size:
                best_size = size + 1
                best = clique | low

    expand(0, 0, mask)
    g._memo[key] = best
    return best


def clique_number_mask(g: Graph, mask: int | None = None) -> int:
    return max_clique_mask(g, mask).bit_count()


def clique_number(g: Graph) -> int:
    """omega(G); 0 for the null graph."""
    return clique_number_mask(g)


def maximum_clique(g: Graph) -> frozenset[int]:
    """The lexicographically least maximum clique."""
    return frozenset(iter_bits(max_clique_mask(g)))


def omega_of(g: Graph, a: Iterable[int]) -> int:
    return clique_number_mask(g, g.mask(a))


def stability_number_mask(g: Graph, mask: int | None = None) -> int:
    if mask is None:
        mask = g.full_mask
    key = ("alpha", mask)
    hit = g._memo.get(key)
    if hit is None:
        comp = g._memo.get("complement")
        if comp is None:
            comp = g._memo["complement"] = g.complement()
        hit = g._memo[key] = clique_number_mask(comp, mask)
    return hit


def stability_number(g: Graph) -> int:
    return stability_number_mask(g)


# colouring ------------------------------------------------------------


def _greedy(rows, order: list[int]) -> tuple[int, dict[int, int]]:
    classes: list[int] = []
    colour: dict[int, int] = {}
    for v in order:
        r = rows[v]
        for c, cls in enumerate(classes):
            if not r & cls:
                classes[c] |= 1 << v
                colour[v] = c
                break
        else:
            colour[v] = len(classes)
            classes.append(1 << v)
    return len(classes), colour


def _k_colourable(rows, mask: int, k: int, clique: list[int]) -> dict[int, int] | None:
    """DSatur backtracking for a proper ``k``-colouring with the clique precoloured."""
    classes = [0] * k
    colour: dict[int, int] = {}
    for c, v in enumerate(clique):
        classes[c] |= 1 << v
        colour[v] = c
    deg = {v: (rows[v] & mask).bit_count() for v in iter_bits(mask)}
    uncoloured = mask
    for v in clique:
        uncoloured &= ~(1 << v)

    def pick(unc: int) -> int:
        best_v, best_key = -1, None
        for u in iter_bits(unc):
            r = rows[u]
            sat = 0
            for cls in classes:
                if r & cls:
                    sat += 1
            key = (sat, deg[u], -u)
            if best_key is None or key > best_key:
                best_key, best_v = key, u
        return best_v

    def solve(unc: int, used: int) -> bool:
        if not unc:
            return True
        v = pick(unc)
        r = rows[v]
        limit = min(k, used + 1)
        for c in range(limit):
            if not r & classes[c]:
                classes[c] |= 1 << v
                colour[v] = c
                if solve(unc & ~(1 << v), max(used, c + 1)):
                    return True
                classes[c] &= ~(1 << v)
        colour.pop(v, None)
        return False

    if solve(uncoloured, len(clique)):
        return colour
    return None


def _chromatic(g: Graph, mask: int) -> tuple[int, dict[int, int]]:
    if not mask:
        return 0, {}
    rows = g.rows
    clique = members(max_clique_mask(g, mask))
    lb = len(clique)
    order = sorted(iter_bits(mask), key=lambda v: (-(rows[v] & mask).bit_count(), v))
    ub, colouring = _greedy(rows, order)
    for k in range(lb, ub):
        found = _k_colourable(rows, mask, k, clique)
        if found is not None:
            return k, found
    return ub, colouring


def chromatic_number_mask(g: Graph, mask: int | None = None) -> int:
    if mask is None:
        mask = g.full_mask
    key = ("chi", mask)
    hit = g._memo.get(key)
    if hit is None:
        hit = g._memo[key] = _chromatic(g, mask)[0]
    return hit


def chromatic_number(g: Graph) -> int:
    """chi(G) by branch-and-bound (clique lower bound, greedy upper bound)."""
    return chromatic_number_mask(g)


def optimal_colouring(g: Graph, a: Iterable[int] | None = None) -> dict[int, int]:
    """A proper colouring of ``g[a]`` using exactly ``chi(g[a])`` colours."""
    mask = g.full_mask if a is None else g.mask(a)
    return _chromatic(g, mask)[1]


def chi_of(g: Graph, a: Iterable[int]) -> int:
    """chi(G[A])."""
    return chromatic_number_mask(g, g.mask(a))


# stable sets ----------------------------------------------------------


def stable_sets_mask(g: Graph, mask: int, s: int) -> Iterator[int]:
    """Size-``s`` stable subsets of ``mask``, lexicographic by sorted members."""
    rows = g.rows

    def rec(chosen: int, cand: int, need: int) -> Iterator[int]:
        if need == 0:
            yield chosen
            return
        while cand.bit_count() >= need:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            yield from rec(chosen | low, cand & ~rows[v], need - 1)

    if s < 0:
        raise ArgumentError("stable-set size must be non-negative")
    yield from rec(0, mask, s)


def enumerate_stable_sets(g: Graph, a: Iterable[int] | None, s: int) -> Iterator[frozenset[int]]:
    """Yield each stable ``s``-subset of ``a`` once, in lexicographic order."""
    mask = g.full_mask if a is None else g.mask(a)
    for m in stable_sets_mask(g, mask, s):
        yield frozenset(iter_bits(m))


# bicliques ------------------------------------------------------------


def biclique_tau(g: Graph) -> int:
    """Largest ``t`` with ``K_{t,t}`` as a (not necessarily induced) subgraph."""
    rows = g.rows

    def has_side(t: int) -> bool:
        # side A of size t whose common neighbourhood still has >= t vertices
        def rec(cand: int, common: int, need: int) -> bool:
            if need == 0:
                return True
            while cand.bit_count() >= need:
                low = cand & -cand
                v = low.bit_length() - 1
                cand ^= low
                nc = common & rows[v]
                if nc.bit_count() >= t and rec(cand, nc, need - 1):
                    return True
            return False

        return rec(g.full_mask, g.full_mask, t)

    t = 0
    while 2 * (t + 1) <= g.n and has_side(t + 1):
        t += 1
    return t


# perfection and Ramsey ------------------------------------------------


def is_perfect(g: Graph) -> bool:
    """Neither ``g`` nor its complement has an odd hole."""
    from .holes import HoleSpec, find_hole_mask

    odd = HoleSpec.odd()
    if find_hole_mask(g, g.full_mask, odd) is not None:
        return False
    return find_hole_mask(g.complement(), g.full_mask, odd) is None


def ramsey_bound_holds(g: Graph, s: int, r: int) -> bool:
    """Check one instance of: alpha < s and omega <= r imply n < r**s."""
    if s < 1 or r < 2:
        raise ArgumentError("need s >= 1 and r >= 2")
    if g.n < r**s:
        return True
    if clique_number(g) > r:
        return True
    return stability_number(g) >= s


__all__ = [
    "biclique_tau",
    "chi_of",
    "chromatic_number",
    "chromatic_number_mask",
    "clique_number",
    "clique_number_mask",
    "enumerate_stable_sets",
    "is_perfect",
    "max_clique_mask",
    "maximum_clique",
    "omega_of",
    "optimal_colouring",
    "ramsey_bound_holds",
    "stability_number",
    "stable_sets_mask",
]
