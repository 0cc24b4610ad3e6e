"""Run one checker or extractor over a corpus and aggregate the outcomes.

Every operation maps a graph to an *outcome*:

``certificate``   an extractor returned a certificate and it verified
``inconclusive``  an extractor gave up (threshold or forced search failed)
``true``          a checker confirmed its inequality
``skipped``       the instance fails a precondition (complete graph, no hole, ...)
``invalid``       a certificate failed verification, or a strict run raised
                  :class:`~chilab.errors.TheoremViolation`
``false``         a checker found a counterexample

The run fails iff some record is ``invalid`` or ``false``.  Records carry the
graph6 string of the instance so a failure can be replayed.  Set
``CHILAB_WORKERS`` to spread instances over a process pool; records are
sorted by corpus index before the report is built.
"""

from __future__ import annotations

import logging
import os
import time
from collections import Counter
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Callable, Iterable, Iterator

from . import isolation, multiholes
from .certificates import Certificate, Inconclusive, certificate_to_json
from .errors import ArgumentError, ChilabError, Graph6ParseError, TheoremViolation
from .generators import all_labelled_graphs, random_corpus
from .graph import Graph, anticomplete_masks, graph6_decode, graph6_encode
from .holes import HoleSpec, find_hole_mask
from .kernels import chromatic_number, chromatic_number_mask, clique_number, clique_number_mask, ramsey_bound_holds
from .poly import NonDecPoly
from .verify import brute_chromatic, verify_certificate

log = logging.getLogger(__name__)

WORKERS_ENV = "CHILAB_WORKERS"
OUTCOMES = ("certificate", "inconclusive", "true", "skipped", "invalid", "false")
FAILING = ("invalid", "false")


@dataclass
class RunConfig:
    """Parameters shared by every subcommand; each op reads what it needs."""

    mode: str = "sweep"
    op: str | None = None
    inputs: list[str] = field(default_factory=list)
    s: int = 1
    s2: int | None = None
    q: int = 0
    t: int | None = None
    k: int = 1
    r: int = 2
    n: int | None = None
    ell: int = 5
    c: int = 4
    psi: NonDecPoly = field(default_factory=NonDecPoly)
    forced: bool = False
    seed: int = 0
    exhaustive: int | None = None
    exhaustive_min: int | None = None
    random: int | None = None
    n_min: int = 1
    n_max: int = 10
    direct_cap: int = multiholes.DIRECT_CAP
    keep: str = "all"
    timing: bool = True
    out: str | None = None

    def long_params(self) -> multiholes.LongHoleParams:
        return multiholes.LongHoleParams(self.ell, self.s, self.c)

    def to_json(self) -> dict:
        out = {}
        for key, val in self.__dict__.items():
            out[key] = val.to_json() if isinstance(val, NonDecPoly) else val
        return out


@dataclass
class Report:
    config: dict
    records: list[dict]
    counts: dict[str, int]
    total: int
    seconds: float | None = None

    @property
    def failed(self) -> bool:
        return any(self.counts.get(o, 0) for o in FAILING)

    @property
    def failures(self) -> list[dict]:
        return [r for r in self.records if r["outcome"] in FAILING]

    def to_json(self) -> dict:
        out = {"config": self.config, "total": self.total, "counts": self.counts, "failed": self.failed, "records": self.records}
        if self.seconds is not None:
            out["seconds"] = round(self.seconds, 6)
        return out


# operations ---------------------------------------------------------------


def _max_nbr_chi(g: Graph) -> int:
    return max((chromatic_number_mask(g, r) for r in g.rows), default=0)


def _op_chromatic_oracle(g: Graph, cfg: RunConfig):
    return {"outcome": "true" if chromatic_number(g) == brute_chromatic(g) else "false"}


def _op_big_nonneighbour(g: Graph, cfg: RunConfig):
    if g.n == 0 or g.is_complete():
        return {"outcome": "skipped"}
    v = isolation.big_nonneighbour(g)
    m = g.full_mask & ~g.rows[v] & ~(1 << v)
    ok = clique_number(g) * chromatic_number_mask(g, m) >= chromatic_number(g)
    return {"outcome": "true" if ok else "false", "detail": {"v": v}}


def _op_ramsey(g: Graph, cfg: RunConfig):
    return {"outcome": "true" if ramsey_bound_holds(g, cfg.s, cfg.r) else "false"}


def _op_odd_dominator(g: Graph, cfg: RunConfig):
    if find_hole_mask(g, g.full_mask, HoleSpec.odd()) is None:
        return {"outcome": "skipped"}
    x = _max_nbr_chi(g)
    return {"outcome": "true" if multiholes.odd_dominator_check(g, x) else "false", "detail": {"x": x}}


def _op_long_dominator(g: Graph, cfg: RunConfig):
    lp = cfg.long_params()
    if find_hole_mask(g, g.full_mask, HoleSpec.long(lp.ell)) is None:
        return {"outcome": "skipped"}
    n = _max_nbr_chi(g) if cfg.n is None else cfg.n
    return {"outcome": "true" if multiholes.long_dominator_check(g, n, lp) else "false", "detail": {"n": n}}


def _op_binding(g: Graph, cfg: RunConfig):
    return {"outcome": "true" if multiholes.kss_free_longfree_binding_check(g, cfg.long_params()) else "false"}


def _pair_outcome(g: Graph, pair, bound_ok: Callable[[int, int], bool]):
    if pair is None:
        return {"outcome": "inconclusive"}
    a, b = (sum(1 << v for v in side) for side in pair)
    ok = bool(a) and bool(b) and not a & b and anticomplete_masks(g, a, b)
    ok = ok and bound_ok(chromatic_number_mask(g, a), chromatic_number_mask(g, b))
    return {"outcome": "true" if ok else "false", "detail": {"A": sorted(pair[0]), "B": sorted(pair[1])}}


def _op_pair_c4free(g: Graph, cfg: RunConfig):
    n = _max_nbr_chi(g) if cfg.n is None else cfg.n
    w = clique_number(g)
    pair = multiholes.anticomplete_pair_c4free(g, n)
    return _pair_outcome(g, pair, lambda ca, cb: 2 * ca > n - 2 * w and 2 * cb > n - 2 * w)


def _op_pair_long(g: Graph, cfg: RunConfig):
    lp = cfg.long_params()
    n = _max_nbr_chi(g) if cfg.n is None else cfg.n
    bound = n - (2 * lp.s * lp.ell) ** lp.s * clique_number(g) ** lp.s
    pair = multiholes.anticomplete_pair_long(g, n, lp)
    return _pair_outcome(g, pair, lambda ca, cb: ca > bound and cb > bound)


EXTRACTORS: dict[str, Callable[[Graph, RunConfig], Certificate]] = {
    "isolate_complete": lambda g, c: isolation.isolate_complete(g, c.k, c.psi, c.forced),
    "bigbip_step": lambda g, c: isolation.bigbip_step(
        g, c.s, c.q, c.t if c.t is not None else (c.s + 1) * clique_number(g) ** (c.s + 1), c.psi, c.forced
    ),
    "strong_isolation": lambda g, c: isolation.strong_isolation(g, c.s, c.q, c.psi, c.forced),
    "bip_self_isolation": lambda g, c: isolation.bip_self_isolation(
        g, c.s, c.s if c.s2 is None else c.s2, c.psi, c.forced
    ),
    "special_hole_smallnbrs": lambda g, c: multiholes.special_hole_smallnbrs(
        g, _max_nbr_chi(g) if c.n is None else c.n, c.psi, c.forced
    ),
    "odd_nondominating_c4free": lambda g, c: multiholes.odd_nondominating_c4free(g, c.psi, c.forced),
    "special_nondominating": lambda g, c: multiholes.special_nondominating(g, c.psi, c.forced),
    "special_multihole": lambda g, c: multiholes.special_multihole(g, c.k, c.forced, direct_cap=c.direct_cap),
    "long_nondominating_kssfree": lambda g, c: multiholes.long_nondominating_kssfree(g, c.psi, c.long_params(), c.forced),
    "long_or_kss_nondominating": lambda g, c: multiholes.long_or_kss_nondominating(g, c.psi, c.long_params(), c.forced),
    "k_object_extract": lambda g, c: multiholes.k_object_extract(g, c.k, c.long_params(), c.forced, direct_cap=c.direct_cap),
}

CHECKERS: dict[str, Callable[[Graph, RunConfig], dict]] = {
    "chromatic_oracle": _op_chromatic_oracle,
    "big_nonneighbour": _op_big_nonneighbour,
    "ramsey_bound_holds": _op_ramsey,
    "odd_dominator_check": _op_odd_dominator,
    "long_dominator_check": _op_long_dominator,
    "kss_free_longfree_binding_check": _op_binding,
    "anticomplete_pair_c4free": _op_pair_c4free,
    "anticomplete_pair_long": _op_pair_long,
}

OPS = sorted([*EXTRACTORS, *CHECKERS])


def run_extractor(g: Graph, cfg: RunConfig) -> dict:
    """One extractor call, its certificate and verdict, as a record fragment."""
    cert = EXTRACTORS[cfg.op](g, cfg)
    rec = {"certificate": certificate_to_json(cert)}
    if isinstance(cert, Inconclusive):
        rec["outcome"] = "inconclusive"
        return rec
    verdict = verify_certificate(g, cert)
    rec["verdict"] = verdict.to_json()
    rec["outcome"] = "certificate" if verdict.status == "verified" else "invalid"
    return rec


def run_one(g: Graph, cfg: RunConfig) -> dict:
    if cfg.op not in EXTRACTORS and cfg.op not in CHECKERS:
        raise ArgumentError(f"unknown op {cfg.op!r}; known: {', '.join(OPS)}")
    began = time.perf_counter()
    try:
        rec = run_extractor(g, cfg) if cfg.op in EXTRACTORS else CHECKERS[cfg.op](g, cfg)
    except TheoremViolation as exc:
        rec = {"outcome": "invalid", "detail": {"theorem_violation": str(exc)}}
    except ArgumentError as exc:
        rec = {"outcome": "skipped", "detail": {"reason": str(exc)}}
    if cfg.timing:
        rec["seconds"] = round(time.perf_counter() - began, 6)
    return rec


# corpora and the pool -----------------------------------------------------


def corpus(cfg: RunConfig) -> Iterator[Graph]:
    """Exhaustive labelled graphs, a seeded random corpus, or graphs from files."""
    if cfg.exhaustive is not None:
        lo = cfg.exhaustive if cfg.exhaustive_min is None else cfg.exhaustive_min
        for n in range(lo, cfg.exhaustive + 1):
            yield from all_labelled_graphs(n)
    elif cfg.random is not None:
        yield from random_corpus(cfg.random, cfg.n_min, cfg.n_max, cfg.seed)
    else:
        for path in cfg.inputs:
            yield from read_graph6_file(path)


def read_graph6_file(path: str) -> Iterator[Graph]:
    """Graphs of a graph6 file; errors name the file and line."""
    try:
        fh = open(path, encoding="ascii", errors="replace")
    except OSError as exc:
        raise OSError(f"{path}: {exc.strerror}") from exc
    with fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                g = graph6_decode(line)
            except Graph6ParseError as exc:
                raise Graph6ParseError(f"{path}:{lineno}: {exc.args[0]}", exc.offset) from None
            except ChilabError as exc:
                raise type(exc)(f"{path}:{lineno}: {exc}") from None
            yield g


def _work(item: tuple[int, str, RunConfig]) -> tuple[int, dict]:
    idx, g6, cfg = item
    return idx, run_one(graph6_decode(g6), cfg)


def workers_from_env() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise ArgumentError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from None


def run_sweep(cfg: RunConfig, graphs: Iterable[Graph] | None = None, workers: int | None = None) -> Report:
    """Run ``cfg.op`` over ``graphs`` (default: :func:`corpus`)."""
    if cfg.op not in EXTRACTORS and cfg.op not in CHECKERS:
        raise ArgumentError(f"unknown op {cfg.op!r}; known: {', '.join(OPS)}")
    if cfg.keep not in ("all", "failures"):
        raise ArgumentError("keep must be 'all' or 'failures'")
    graphs = corpus(cfg) if graphs is None else graphs
    workers = workers_from_env() if workers is None else workers
    began = time.perf_counter()
    counts: Counter = Counter()
    records: list[dict] = []
    total = 0

    def absorb(idx: int, g6: str, rec: dict) -> None:
        counts[rec["outcome"]] += 1
        if cfg.keep == "all" or rec["outcome"] in FAILING:
            records.append({"index": idx, "graph6": g6, **rec})

    if workers <= 1:
        for idx, g in enumerate(graphs):
            total += 1
            absorb(idx, graph6_encode(g), run_one(g, cfg))
    else:
        items = [(i, graph6_encode(g), cfg) for i, g in enumerate(graphs)]
        total = len(items)
        codes = {i: g6 for i, g6, _ in items}
        with Pool(workers) as pool:
            for idx, rec in pool.imap_unordered(_work, items, chunksize=64):
                absorb(idx, codes[idx], rec)
    records.sort(key=lambda r: r["index"])
    log.info("sweep %s: %d instances, %s", cfg.op, total, dict(counts))
    return Report(
        config=cfg.to_json(),
        records=records,
        counts={o: counts.get(o, 0) for o in OUTCOMES},
        total=total,
        seconds=time.perf_counter() - began if cfg.timing else None,
    )
