"""Holes, special and long holes, induced bicliques, multiholes and k-objects.

Searches are exact depth-first enumerations over induced paths.  Every
enumerator yields results in lexicographic order of the canonical vertex
sequence (start at the least vertex, second vertex smaller than the last), so
"first found" is the deterministic tie-break used throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

from ._bits import iter_bits, mask_of
from .errors import ArgumentError
from .graph import Graph, neighbourhood_mask

HOLE_KINDS = ("any", "four", "odd", "special", "long")


@dataclass(frozen=True)
class HoleSpec:
    """Which hole lengths are acceptable.

    ``long`` needs ``ell >= 4``; ``max_len`` further caps any kind (used for
    "long hole of length at most 2*s*ell").
    """

    kind: str = "any"
    ell: int | None = None
    max_len: int | None = None

    def __post_init__(self):
        if self.kind not in HOLE_KINDS:
            raise ArgumentError(f"unknown hole kind {self.kind!r}")
        if self.kind == "long" and (self.ell is None or self.ell < 4):
            raise ArgumentError("long holes need ell >= 4")
        if self.max_len is not None and self.max_len < 4:
            raise ArgumentError("max_len below 4 admits no hole")

    @classmethod
    def any(cls) -> "HoleSpec":
        return cls("any")

    @classmethod
    def four(cls) -> "HoleSpec":
        return cls("four")

    @classmethod
    def odd(cls) -> "HoleSpec":
        return cls("odd")

    @classmethod
    def special(cls) -> "HoleSpec":
        return cls("special")

    @classmethod
    def long(cls, ell: int, max_len: int | None = None) -> "HoleSpec":
        return cls("long", ell, max_len)

    @property
    def min_len(self) -> int:
        if self.kind == "long":
            return max(4, self.ell)
        if self.kind == "odd":
            return 5
        return 4

    @property
    def upper(self) -> int | None:
        if self.kind == "four":
            return 4 if self.max_len is None else min(4, self.max_len)
        return self.max_len

    def accepts(self, length: int) -> bool:
        if length < self.min_len:
            return False
        if self.max_len is not None and length > self.max_len:
            return False
        if self.kind == "four":
            return length == 4
        if self.kind == "odd":
            return length % 2 == 1
        if self.kind == "special":
            return length == 4 or length % 2 == 1
        return True

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.ell is not None:
            out["ell"] = self.ell
        if self.max_len is not None:
            out["max_len"] = self.max_len
        return out

    @classmethod
    def from_json(cls, data: dict) -> "HoleSpec":
        return cls(data["kind"], data.get("ell"), data.get("max_len"))


@dataclass(frozen=True)
class BicliqueSpec:
    """An induced copy of ``K_{s,s2}`` (``s2`` defaults to ``s``)."""

    s: int
    s2: int | None = None

    def __post_init__(self):
        if self.s2 is None:
            object.__setattr__(self, "s2", self.s)
        if not self.s >= self.s2 >= 0:
            raise ArgumentError("need s >= s2 >= 0")

    def to_json(self) -> dict:
        return {"kind": "biclique", "s": self.s, "s2": self.s2}


ComponentSpec = Union[HoleSpec, BicliqueSpec]


def spec_from_json(data: dict) -> ComponentSpec:
    if data.get("kind") == "biclique":
        return BicliqueSpec(data["s"], data.get("s2"))
    return HoleSpec.from_json(data)


@dataclass(frozen=True)
class Hole:
    """An induced cycle of length >= 4, cyclically ordered."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    @property
    def mask(self) -> int:
        return mask_of(self.vertices)


@dataclass(frozen=True)
class Biclique:
    """Induced ``K_{|side_a|,|side_b|}``: two stable sides, complete between."""

    side_a: frozenset[int]
    side_b: frozenset[int]

    @property
    def vertex_set(self) -> frozenset[int]:
        return self.side_a | self.side_b

    @property
    def mask(self) -> int:
        return mask_of(self.vertex_set)


Component = Union[Hole, Biclique]


@dataclass(frozen=True)
class Multihole:
    """Pairwise disjoint, pairwise anticomplete components (holes or bicliques)."""

    components: tuple[Component, ...]

    @property
    def k(self) -> int:
        return len(self.components)

    @property
    def vertex_set(self) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for c in self.components:
            out |= c.vertex_set
        return out


# hole enumeration -----------------------------------------------------


def _reachable(rows, start: int, region: int, target: int) -> bool:
    """Can ``start`` reach ``target`` through vertices of ``region``?"""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= rows[v]
        if nxt & target:
            return True
        nxt &= region & ~seen
        seen |= nxt
        frontier = nxt
    return False


def iter_holes_mask(
    g: Graph,
    mask: int,
    min_len: int = 4,
    max_len: int | None = None,
    accept=None,
) -> Iterator[tuple[int, ...]]:
    """Holes of ``g[mask]`` with length in ``[min_len, max_len]``, lexicographic."""
    rows = g.rows
    if max_len is None:
        max_len = mask.bit_count()
    min_len = max(min_len, 4)
    if max_len < min_len:
        return

    def extend(path: list[int], block: int, allowed: int, close: int) -> Iterator[tuple[int, ...]]:
        j = len(path)
        last = path[-1]
        cand = rows[last] & allowed & ~block
        for u in iter_bits(cand):
            bit = 1 << u
            if bit & close:
                if j >= 3 and j + 1 >= min_len and u > path[1]:
                    if accept is None or accept(j + 1):
                        yield (*path, u)
                continue
            if j + 2 > max_len:
                continue
            nblock = block | rows[last] | bit
            # the cycle must come back to a neighbour of the start vertex
            region = allowed & ~nblock
            if not _reachable(rows, u, region, close & allowed & ~nblock):
                continue
            path.append(u)
            yield from extend(path, nblock, allowed, close)
            path.pop()

    for v in iter_bits(mask):
        allowed = mask & ~((2 << v) - 1)
        close = rows[v] & allowed
        if close.bit_count() < 2:
            continue
        for a2 in iter_bits(close):
            # a2 is in N(v); the path may not revisit N(v) except to close
            yield from extend([v, a2], (1 << v) | (1 << a2), allowed, close & ~(1 << a2))


def find_hole_mask(g: Graph, mask: int, spec: HoleSpec, shortest: bool = False) -> tuple[int, ...] | None:
    upper = spec.upper
    if upper is None:
        upper = mask.bit_count()
    if shortest:
        for length in range(spec.min_len, upper + 1):
            if spec.accepts(length):
                for h in iter_holes_mask(g, mask, length, length):
                    return h
        return None
    for h in iter_holes_mask(g, mask, spec.min_len, upper, spec.accepts):
        return h
    return None


def find_hole(g: Graph, spec: HoleSpec | None = None, shortest: bool = False) -> Hole | None:
    """A hole matching ``spec`` (lexicographically least; shortest first if asked)."""
    spec = spec or HoleSpec.any()
    h = find_hole_mask(g, g.full_mask, spec, shortest)
    return None if h is None else Hole(h)


def iter_holes(g: Graph, spec: HoleSpec | None = None, within: Iterable[int] | None = None) -> Iterator[Hole]:
    spec = spec or HoleSpec.any()
    mask = g.full_mask if within is None else g.mask(within)
    for h in iter_holes_mask(g, mask, spec.min_len, spec.upper, spec.accepts):
        yield Hole(h)


def is_hole_sequence(g: Graph, seq: Sequence[int]) -> bool:
    """Consecutive vertices adjacent, no chords, all distinct, length >= 4."""
    k = len(seq)
    if k < 4 or len(set(seq)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if bool(g.rows[seq[i]] >> seq[j] & 1) != consecutive:
                return False
    return True


# induced bicliques ----------------------------------------------------


def iter_bicliques_mask(g: Graph, mask: int, s: int, s2: int) -> Iterator[tuple[int, int]]:
    """Induced ``K_{s,s2}`` copies in ``g[mask]`` as ``(side_a, side_b)`` masks.

    When ``s == s2`` each copy appears once, with ``min(side_a) < min(side_b)``.
    """
    from .kernels import stable_sets_mask

    for a in stable_sets_mask(g, mask, s):
        common = mask & ~a
        for v in iter_bits(a):
            common &= g.rows[v]
        if s == s2 and s > 0:
            common &= ~((a & -a) - 1)
        for b in stable_sets_mask(g, common, s2):
            yield a, b


def find_induced_complete_bipartite(g: Graph, s: int, s2: int) -> tuple[frozenset[int], frozenset[int]] | None:
    """Stable ``A`` (|A|=s) complete to stable ``B`` (|B|=s2), or ``None``."""
    if not s >= s2 >= 0:
        raise ArgumentError("need s >= s2 >= 0")
    for a, b in iter_bicliques_mask(g, g.full_mask, s, s2):
        return frozenset(iter_bits(a)), frozenset(iter_bits(b))
    return None


def has_induced_biclique_mask(g: Graph, mask: int, s: int, s2: int) -> bool:
    for _ in iter_bicliques_mask(g, mask, s, s2):
        return True
    return False


# multiholes -----------------------------------------------------------


def _rigidity(spec: ComponentSpec) -> tuple:
    if isinstance(spec, BicliqueSpec):
        return (0, -(spec.s + spec.s2))
    order = {"long": 1, "four": 2, "odd": 3, "special": 4, "any": 5}
    return (order[spec.kind], -spec.min_len)


def _candidates(g: Graph, spec: ComponentSpec, mask: int) -> Iterator[tuple[int, Component]]:
    if isinstance(spec, BicliqueSpec):
        for a, b in iter_bicliques_mask(g, mask, spec.s, spec.s2):
            yield a | b, Biclique(frozenset(iter_bits(a)), frozenset(iter_bits(b)))
    else:
        for h in iter_holes_mask(g, mask, spec.min_len, spec.upper, spec.accepts):
            yield mask_of(h), Hole(h)


def _min_size(spec: ComponentSpec) -> int:
    if isinstance(spec, BicliqueSpec):
        return spec.s + spec.s2
    return spec.min_len


def find_multihole_mask(g: Graph, mask: int, specs: Sequence[ComponentSpec]) -> Multihole | None:
    if not specs:
        raise ArgumentError("need at least one component spec")
    order = sorted(range(len(specs)), key=lambda i: (_rigidity(specs[i]), i))
    chosen: dict[int, Component] = {}
    floor_needed = [0] * (len(order) + 1)
    for pos in range(len(order) - 1, -1, -1):
        floor_needed[pos] = floor_needed[pos + 1] + _min_size(specs[order[pos]])

    def rec(pos: int, avail: int, prev_min: int) -> bool:
        if pos == len(order):
            return True
        if avail.bit_count() < floor_needed[pos]:
            return False
        spec = specs[order[pos]]
        region = avail
        # identical consecutive specs: impose increasing least vertex
        if pos > 0 and specs[order[pos - 1]] == spec:
            region &= ~((2 << prev_min) - 1)
        for cmask, comp in _candidates(g, spec, region):
            closed = cmask | neighbourhood_mask(g, cmask)
            chosen[order[pos]] = comp
            if rec(pos + 1, avail & ~closed, (cmask & -cmask).bit_length() - 1):
                return True
            del chosen[order[pos]]
        return False

    if rec(0, mask, -1):
        return Multihole(tuple(chosen[i] for i in range(len(specs))))
    return None


def find_multihole(g: Graph, specs: Sequence[ComponentSpec]) -> Multihole | None:
    """Exact search for components matching ``specs`` in order; ``None`` if absent."""
    return find_multihole_mask(g, g.full_mask, list(specs))


def dominator_mask(g: Graph, mask: int) -> int:
    return mask | neighbourhood_mask(g, mask)


def dominator_set(g: Graph, h: Iterable[int]) -> frozenset[int]:
    """``H`` together with every vertex having a neighbour in ``H``."""
    return frozenset(iter_bits(dominator_mask(g, g.mask(h))))
