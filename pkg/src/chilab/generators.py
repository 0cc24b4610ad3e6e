"""Deterministic graph families and corpora."""

from __future__ import annotations

import random
from collections import deque
from typing import Iterator

from .errors import ArgumentError, CapacityError
from .graph import DEFAULT_CAP, Graph, disjoint_union


def _check_size(n: int, cap: int | None) -> None:
    if n < 0:
        raise ArgumentError("negative vertex count")
    if cap is not None and n > cap:
        raise CapacityError(f"{n} vertices exceeds the cap of {cap}")


def cycle(m: int, cap: int | None = DEFAULT_CAP) -> Graph:
    if m < 3:
        raise ArgumentError("a cycle needs at least three vertices")
    _check_size(m, cap)
    return Graph.from_edges(m, [(i, (i + 1) % m) for i in range(m)], cap=cap)


def path(m: int, cap: int | None = DEFAULT_CAP) -> Graph:
    _check_size(m, cap)
    return Graph.from_edges(m, [(i, i + 1) for i in range(m - 1)], cap=cap)


def complete(m: int, cap: int | None = DEFAULT_CAP) -> Graph:
    _check_size(m, cap)
    return Graph.from_edges(m, [(i, j) for i in range(m) for j in range(i + 1, m)], cap=cap)


def empty(m: int, cap: int | None = DEFAULT_CAP) -> Graph:
    _check_size(m, cap)
    return Graph.from_edges(m, [], cap=cap)


def complete_bipartite(a: int, b: int, cap: int | None = DEFAULT_CAP) -> Graph:
    """Sides ``0..a-1`` and ``a..a+b-1``."""
    _check_size(a + b, cap)
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)], cap=cap)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def mycielski(g: Graph, cap: int | None = DEFAULT_CAP) -> Graph:
    """Vertices ``0..n-1`` copy ``g``, ``n..2n-1`` are the shadows, ``2n`` is the apex.

    Keeps the graph triangle-free when ``g`` is, and raises chi by one.
    """
    n = g.n
    _check_size(2 * n + 1, cap)
    edges = list(g.edges())
    for u, v in g.edges():
        edges.append((u, n + v))
        edges.append((v, n + u))
    edges.extend((n + i, 2 * n) for i in range(n))
    return Graph.from_edges(2 * n + 1, edges, cap=cap)


def gnp(n: int, p: float, seed: int, cap: int | None = DEFAULT_CAP) -> Graph:
    if not 0.0 <= p <= 1.0:
        raise ArgumentError("p must lie in [0, 1]")
    _check_size(n, cap)
    rng = random.Random(seed)
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p], cap=cap)


def _distance(rows: list[int], u: int, v: int, limit: int) -> int:
    """BFS distance, or ``limit`` if it is at least that."""
    seen = 1 << u
    frontier = deque([(u, 0)])
    while frontier:
        x, d = frontier.popleft()
        if d + 1 >= limit:
            return limit
        nb = rows[x] & ~seen
        if nb >> v & 1:
            return d + 1
        seen |= nb
        while nb:
            y = (nb & -nb).bit_length() - 1
            nb &= nb - 1
            frontier.append((y, d + 1))
    return limit


def girth_constrained(n: int, girth: int, seed: int, cap: int | None = DEFAULT_CAP) -> Graph:
    """Random maximal graph with every cycle of length at least ``girth``.

    Edge slots are visited in a seeded random order and an edge is kept only
    if its endpoints are at distance at least ``girth - 1``.
    """
    if girth < 3:
        raise ArgumentError("girth must be at least 3")
    _check_size(n, cap)
    rng = random.Random(seed)
    slots = [(i, j) for i in range(n) for j in range(i + 1, n)]
    rng.shuffle(slots)
    rows = [0] * n
    for u, v in slots:
        if _distance(rows, u, v, girth - 1) >= girth - 1:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    return Graph(n, rows, cap=cap)


def edge_slots(n: int) -> list[tuple[int, int]]:
    """Slot ``b`` of the enumeration mask; ``(0,1), (0,2), .., (n-2,n-1)``."""
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def labelled_graph(n: int, code: int) -> Graph:
    rows = [0] * n
    for b, (i, j) in enumerate(edge_slots(n)):
        if code >> b & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph._trusted(n, rows)


def _slot_rows(n: int, slots: list[tuple[int, int]]) -> list[tuple[int, ...]]:
    table = []
    for code in range(1 << len(slots)):
        rows = [0] * n
        for b, (i, j) in enumerate(slots):
            if code >> b & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        table.append(tuple(rows))
    return table


def all_labelled_graphs(n: int) -> Iterator[Graph]:
    """All ``2^(n(n-1)/2)`` labelled graphs on ``n`` vertices, in edge-mask order."""
    if n < 0:
        raise ArgumentError("negative vertex count")
    slots = edge_slots(n)
    half = len(slots) // 2
    # rows of a mask are the OR of the rows of its low and high halves
    low = _slot_rows(n, slots[:half])
    high = _slot_rows(n, slots[half:])
    rng = range(n)
    for h in high:
        for lo in low:
            yield Graph._trusted(n, [lo[i] | h[i] for i in rng])


def random_corpus(count: int, n_min: int, n_max: int, seed: int, p: float | None = None) -> Iterator[Graph]:
    """``count`` seeded random graphs with n in ``[n_min, n_max]``; edge density
    drawn per graph unless ``p`` is given."""
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(n_min, n_max)
        dens = rng.random() if p is None else p
        yield gnp(n, dens, rng.getrandbits(32))


GENERATORS = {
    "cycle": lambda params, seed: cycle(params["m"]),
    "path": lambda params, seed: path(params["m"]),
    "complete": lambda params, seed: complete(params["m"]),
    "empty": lambda params, seed: empty(params["m"]),
    "complete_bipartite": lambda params, seed: complete_bipartite(params["a"], params["b"]),
    "petersen": lambda params, seed: petersen(),
    "mycielski": lambda params, seed: mycielski(generate(params["of"]["kind"], params["of"].get("params", {}), seed)),
    "gnp": lambda params, seed: gnp(params["n"], params["p"], seed),
    "girth_constrained": lambda params, seed: girth_constrained(params["n"], params["g"], seed),
    "disjoint_union": lambda params, seed: disjoint_union(
        *(generate(p["kind"], p.get("params", {}), seed + i) for i, p in enumerate(params["parts"]))
    ),
}


def generate(kind: str, params: dict | None = None, seed: int = 0) -> Graph:
    """Build a graph by family name, e.g. ``generate("cycle", {"m": 5})``."""
    try:
        build = GENERATORS[kind]
    except KeyError:
        raise ArgumentError(f"unknown generator {kind!r}; known: {', '.join(sorted(GENERATORS))}") from None
    try:
        return build(params or {}, seed)
    except KeyError as exc:
        raise ArgumentError(f"generator {kind!r} needs parameter {exc.args[0]!r}") from None
