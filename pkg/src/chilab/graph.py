"""Simple undirected graphs on dense vertex indices, with bitmask adjacency rows.

A :class:`Graph` is immutable.  Row ``rows[v]`` is an ``int`` whose bit ``u``
is set iff ``u`` and ``v`` are adjacent.  Python integers are unbounded, so
the "multi-word" variant is just a larger ``cap``.

Vertex sets cross the public API as ``frozenset[int]``; internally everything
works on bitmasks.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from ._bits import iter_bits, mask_of, members
from .errors import ArgumentError, CapacityError, Graph6ParseError, VertexRangeError

DEFAULT_CAP = 64

VertexSet = frozenset


class Graph:
    """Immutable simple graph on vertices ``0..n-1``."""

    __slots__ = ("n", "rows", "_memo")

    def __init__(self, n: int, rows: Sequence[int], *, cap: int | None = DEFAULT_CAP):
        if n < 0:
            raise ArgumentError("vertex count must be non-negative")
        if cap is not None and n > cap:
            raise CapacityError(f"{n} vertices exceeds cap {cap}")
        if len(rows) != n:
            raise ArgumentError("need exactly one adjacency row per vertex")
        full = (1 << n) - 1
        rows = tuple(int(r) for r in rows)
        for v, r in enumerate(rows):
            if r & ~full:
                raise VertexRangeError(f"row {v} names a vertex >= {n}")
            if r >> v & 1:
                raise ArgumentError(f"loop at vertex {v}")
            for u in iter_bits(r):
                if not rows[u] >> v & 1:
                    raise ArgumentError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self.rows = rows
        self._memo: dict = {}

    # construction -------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], *, cap: int | None = DEFAULT_CAP) -> "Graph":
        if cap is not None and n > cap:
            raise CapacityError(f"{n} vertices exceeds cap {cap}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(f"edge ({u}, {v}) outside range({n})")
            if u == v:
                raise ArgumentError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows, cap=cap)

    @classmethod
    def _trusted(cls, n: int, rows: Sequence[int]) -> "Graph":
        """Skip validation; callers guarantee symmetric irreflexive rows."""
        g = object.__new__(cls)
        g.n = n
        g.rows = tuple(rows)
        g._memo = {}
        return g

    @classmethod
    def null(cls) -> "Graph":
        return cls(0, ())

    # queries ------------------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def vertices(self) -> range:
        return range(self.n)

    def adjacent(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return bool(self.rows[u] >> v & 1)

    def neighbours(self, v: int) -> frozenset[int]:
        self.check_vertex(v)
        return frozenset(iter_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        for v, r in enumerate(self.rows):
            for u in iter_bits(r >> (v + 1)):
                yield v, v + 1 + u

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexRangeError(f"vertex {v} outside range({self.n})")

    def mask(self, vertices: Iterable[int]) -> int:
        """Bitmask of ``vertices``, range-checked."""
        m = 0
        for v in vertices:
            self.check_vertex(v)
            m |= 1 << v
        return m

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph._trusted(self.n, [full & ~r & ~(1 << v) for v, r in enumerate(self.rows)])

    def is_complete(self) -> bool:
        return all(r.bit_count() == self.n - 1 for r in self.rows)

    # dunder -------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"

    def __len__(self) -> int:
        return self.n


# induced-subgraph algebra ---------------------------------------------


def induced_mask(g: Graph, mask: int) -> tuple[Graph, tuple[int, ...]]:
    """Graph induced on ``mask``; vertex ``i`` of the result is ``index[i]`` in ``g``."""
    index = tuple(iter_bits(mask))
    pos = {v: i for i, v in enumerate(index)}
    rows = []
    for v in index:
        r = 0
        for u in iter_bits(g.rows[v] & mask):
            r |= 1 << pos[u]
        rows.append(r)
    return Graph._trusted(len(index), rows), index


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Return ``(g[s], index)`` where ``index[i]`` is the parent vertex of ``i``."""
    return induced_mask(g, g.mask(s))


def lift(index: Sequence[int], vertices: Iterable[int]) -> frozenset[int]:
    """Translate vertices of an induced subgraph back to parent indices."""
    return frozenset(index[v] for v in vertices)


def lift_mask(index: Sequence[int], mask: int) -> int:
    return mask_of(index[v] for v in iter_bits(mask))


def _disjoint_masks(g: Graph, a: Iterable[int], b: Iterable[int]) -> tuple[int, int]:
    ma, mb = g.mask(a), g.mask(b)
    if ma & mb:
        raise ArgumentError("vertex sets must be disjoint")
    return ma, mb


def neighbourhood_mask(g: Graph, mask: int) -> int:
    """Union of the neighbourhoods of ``mask`` (may intersect ``mask``)."""
    out = 0
    for v in iter_bits(mask):
        out |= g.rows[v]
    return out


def anticomplete_masks(g: Graph, ma: int, mb: int) -> bool:
    return not (neighbourhood_mask(g, ma) & mb)


def complete_masks(g: Graph, ma: int, mb: int) -> bool:
    return all(g.rows[v] & mb == mb for v in iter_bits(ma))


def are_anticomplete(g: Graph, a: Iterable[int], b: Iterable[int]) -> bool:
    """True iff no edge joins the disjoint sets ``a`` and ``b``."""
    ma, mb = _disjoint_masks(g, a, b)
    return anticomplete_masks(g, ma, mb)


def are_complete(g: Graph, a: Iterable[int], b: Iterable[int]) -> bool:
    """True iff every vertex of ``a`` is adjacent to every vertex of ``b``."""
    ma, mb = _disjoint_masks(g, a, b)
    return complete_masks(g, ma, mb)


def common_neighbours_mask(g: Graph, mask: int, within: int | None = None) -> int:
    out = g.full_mask if within is None else within
    for v in iter_bits(mask):
        out &= g.rows[v]
    return out & ~mask


def common_nonneighbours_mask(g: Graph, mask: int, within: int | None = None) -> int:
    out = g.full_mask if within is None else within
    for v in iter_bits(mask):
        out &= ~g.rows[v]
    return out & ~mask


def common_neighbours(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """Vertices outside ``s`` adjacent to every vertex of ``s``."""
    return frozenset(iter_bits(common_neighbours_mask(g, g.mask(s))))


def common_nonneighbours(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """Vertices outside ``s`` adjacent to no vertex of ``s``."""
    return frozenset(iter_bits(common_nonneighbours_mask(g, g.mask(s))))


def disjoint_union(*graphs: Graph, cap: int | None = DEFAULT_CAP) -> Graph:
    """Block-diagonal union; the parts keep their order and relative indices."""
    total = sum(h.n for h in graphs)
    if cap is not None and total > cap:
        raise CapacityError(f"union has {total} vertices, cap is {cap}")
    rows: list[int] = []
    shift = 0
    for h in graphs:
        rows.extend(r << shift for r in h.rows)
        shift += h.n
    return Graph._trusted(total, rows)


# graph6 ---------------------------------------------------------------

_HEADER = ">>graph6<<"


def _encode_n(n: int) -> list[int]:
    if n < 63:
        return [n + 63]
    if n < 258048:
        return [126] + [((n >> sh) & 63) + 63 for sh in (12, 6, 0)]
    return [126, 126] + [((n >> sh) & 63) + 63 for sh in (30, 24, 18, 12, 6, 0)]


def graph6_encode(g: Graph, header: bool = False) -> str:
    """Standard graph6 text for ``g`` (no trailing newline)."""
    out = _encode_n(g.n)
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.rows[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    text = bytes(out).decode("ascii")
    return _HEADER + text if header else text


def graph6_decode(text: str | bytes, *, cap: int | None = DEFAULT_CAP) -> Graph:
    """Parse one graph6 line (optional ``>>graph6<<`` header, trailing newline ok)."""
    data = text.encode("ascii", "replace") if isinstance(text, str) else bytes(text)
    data = data.rstrip(b"\r\n")
    pos = 0
    if data.startswith(_HEADER.encode()):
        pos = len(_HEADER)
    for i in range(pos, len(data)):
        if not 63 <= data[i] <= 126:
            raise Graph6ParseError(f"byte {data[i]!r} outside the graph6 alphabet", i)
    if pos >= len(data):
        raise Graph6ParseError("missing vertex count", pos)
    if data[pos] != 126:
        n, pos = data[pos] - 63, pos + 1
    elif pos + 1 < len(data) and data[pos + 1] == 126:
        if len(data) < pos + 8:
            raise Graph6ParseError("truncated 8-byte vertex count", len(data))
        n = 0
        for b in data[pos + 2 : pos + 8]:
            n = (n << 6) | (b - 63)
        pos += 8
    else:
        if len(data) < pos + 4:
            raise Graph6ParseError("truncated 4-byte vertex count", len(data))
        n = 0
        for b in data[pos + 1 : pos + 4]:
            n = (n << 6) | (b - 63)
        pos += 4
    if cap is not None and n > cap:
        raise CapacityError(f"{n} vertices exceeds cap {cap}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise Graph6ParseError(f"expected {need} edge bytes for n={n}, found {len(body)}", pos + min(len(body), need))
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            b = body[k // 6] - 63
            if b >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if nbits % 6 and (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6ParseError("non-zero padding bits", pos + need - 1)
    return Graph(n, rows, cap=cap)


def read_graph6_lines(lines: Iterable[str], *, cap: int | None = DEFAULT_CAP) -> list[Graph]:
    """Decode every non-blank line; a parse error reports line-relative offsets."""
    out = []
    for line in lines:
        line = line.strip()
        if line:
            out.append(graph6_decode(line, cap=cap))
    return out


# edge-list text -------------------------------------------------------


def parse_edge_list(text: str, *, cap: int | None = DEFAULT_CAP) -> Graph:
    """Parse ``u v`` lines (0-based).  ``#`` starts a comment.

    A line holding a single integer fixes the vertex count, so isolated
    vertices can be declared; otherwise ``n`` is one more than the largest
    endpoint mentioned.
    """
    n = None
    edges = []
    top = -1
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise ArgumentError(f"line {lineno}: expected integers, got {raw!r}") from None
        if len(nums) == 1:
            n = nums[0]
        elif len(nums) == 2:
            edges.append((nums[0], nums[1]))
            top = max(top, *nums)
        else:
            raise ArgumentError(f"line {lineno}: expected 'u v', got {raw!r}")
    if n is None:
        n = top + 1
    return Graph.from_edges(n, edges, cap=cap)


def format_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def as_set(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


def sorted_members(mask: int) -> list[int]:
    return members(mask)
