"""Independent checking of certificates.

Nothing here calls the extractors or the hole finder.  Shapes are checked
directly against adjacency, and the only shared code is graph-core and the
exact kernels for chi, omega and stable-set enumeration.  :func:`brute_chromatic`
is an oracle for chi with no code in common with the kernel solver.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .certificates import (
    Certificate,
    CliqueSpec,
    HFreeSet,
    Inconclusive,
    IsolatedCopy,
    MultiholeCert,
    NondominatingCopy,
    Sprinkling,
    Template,
)
from .errors import CapacityError, CertificateStructureError
from .graph import Graph
from .holes import Biclique, BicliqueSpec, Hole, HoleSpec
from .kernels import chromatic_number_mask, clique_number_mask, stability_number_mask, stable_sets_mask
from .poly import NonDecPoly

BRUTE_CAP = 10

VERIFIED = "verified"
INVALID = "invalid"
VACUOUS = "vacuous"


def brute_chromatic(g: Graph) -> int:
    """chi by enumerating colourings as restricted growth strings.

    Vertex ``i`` takes a colour at most one above the largest colour used by
    ``0..i-1``, so each partition into colour classes is produced once.
    Assignments are abandoned as soon as an edge becomes monochromatic.
    """
    n = g.n
    if n > BRUTE_CAP:
        raise CapacityError(f"brute_chromatic is capped at {BRUTE_CAP} vertices, got {n}")
    if n == 0:
        return 0
    earlier = [[u for u in range(v) if g.adjacent(u, v)] for v in range(n)]
    colour = [0] * n

    def fits(k: int, v: int, top: int) -> bool:
        if v == n:
            return True
        for c in range(min(top + 2, k)):
            if all(colour[u] != c for u in earlier[v]):
                colour[v] = c
                if fits(k, v + 1, max(top, c)):
                    return True
        return False

    k = 1
    while not fits(k, 0, -1):
        k += 1
    return k


@dataclass
class Verdict:
    status: str
    reasons: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status != INVALID

    def to_json(self) -> dict:
        return {"status": self.status, "reasons": list(self.reasons)}


class _Check:
    def __init__(self, g: Graph):
        self.g = g
        self.reasons: list[str] = []

    def need(self, cond: bool, reason: str) -> bool:
        if not cond:
            self.reasons.append(reason)
        return cond

    # vertex sets ------------------------------------------------------

    def mask(self, vs, what: str) -> int:
        m = 0
        for v in vs:
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < self.g.n:
                raise CertificateStructureError(f"{what} names vertex {v!r} outside the graph")
            m |= 1 << v
        return m

    def anticomplete(self, a: int, b: int, what: str) -> bool:
        rows = self.g.rows
        ok = not a & b
        x = a
        while ok and x:
            v = (x & -x).bit_length() - 1
            x &= x - 1
            ok = not rows[v] & b
        return self.need(ok, f"{what} not disjoint and anticomplete")

    def big(self, a: int, psi: NonDecPoly, what: str) -> bool:
        chi = chromatic_number_mask(self.g, a)
        w = clique_number_mask(self.g, a)
        return self.need(chi > psi(w), f"chi({what}) = {chi} is not above psi({w}) = {psi(w)}")

    # shapes -----------------------------------------------------------

    def hole(self, seq: tuple[int, ...], what: str) -> bool:
        g = self.g
        self.mask(seq, what)
        m = len(seq)
        if not self.need(m >= 4 and len(set(seq)) == m, f"{what} is not a sequence of at least four distinct vertices"):
            return False
        for i in range(m):
            for j in range(i + 1, m):
                should = j == i + 1 or (i == 0 and j == m - 1)
                if g.adjacent(seq[i], seq[j]) != should:
                    self.reasons.append(f"{what} is not an induced cycle ({seq[i]}, {seq[j]})")
                    return False
        return True

    def stable(self, m: int) -> bool:
        return clique_number_mask(self.g, m) <= 1

    def biclique(self, c: Biclique, what: str) -> bool:
        a = self.mask(c.side_a, what)
        b = self.mask(c.side_b, what)
        rows = self.g.rows
        ok = not a & b and self.stable(a) and self.stable(b)
        ok = ok and all(rows[v] & b == b for v in c.side_a)
        return self.need(ok, f"{what} is not an induced complete bipartite graph")

    def component(self, c, spec, what: str) -> bool:
        if isinstance(spec, HoleSpec):
            if not self.need(isinstance(c, Hole), f"{what} should be a hole"):
                return False
            if not self.hole(c.vertices, what):
                return False
            return self.need(_length_ok(spec, len(c.vertices)), f"{what} has length {len(c.vertices)}, not {spec.kind}")
        if isinstance(spec, BicliqueSpec):
            if not self.need(isinstance(c, Biclique), f"{what} should be a biclique"):
                return False
            if not self.biclique(c, what):
                return False
            sizes = sorted((len(c.side_a), len(c.side_b)), reverse=True)
            return self.need(sizes == [spec.s, spec.s2], f"{what} has sides {sizes}, not K_{{{spec.s},{spec.s2}}}")
        raise CertificateStructureError(f"unknown component spec {spec!r}")


def _length_ok(spec: HoleSpec, m: int) -> bool:
    if spec.max_len is not None and m > spec.max_len:
        return False
    if spec.kind == "any":
        return m >= 4
    if spec.kind == "four":
        return m == 4
    if spec.kind == "odd":
        return m >= 5 and m % 2 == 1
    if spec.kind == "special":
        return m == 4 or (m >= 5 and m % 2 == 1)
    if spec.kind == "long":
        return m >= max(4, spec.ell)
    return False


def _has_biclique(g: Graph, a: int, s: int, s2: int) -> bool:
    """Exhaustive: stable ``S`` of size ``s`` in ``a`` whose common neighbours in
    ``a`` hold a stable set of size ``s2``."""
    rows = g.rows
    for S in stable_sets_mask(g, a, s):
        common = a & ~S
        x = S
        while x:
            v = (x & -x).bit_length() - 1
            x &= x - 1
            common &= rows[v]
        if stability_number_mask(g, common) >= s2:
            return True
    return False


def _psi_request(cert, chk: _Check) -> None:
    req = cert.params.get("psi")
    if req is None:
        return
    try:
        want = NonDecPoly.from_json(req)
    except Exception:
        raise CertificateStructureError("params.psi is not a coefficient list") from None
    chk.need(cert.psi.dominates(want), "psi does not dominate the requested psi")


def _spec_request(spec, params: dict, chk: _Check, what: str) -> None:
    if isinstance(spec, BicliqueSpec):
        if "s" in params:
            chk.need(spec.s == params["s"], f"{what}: biclique s differs from the request")
            chk.need(spec.s2 == params.get("s2", params["s"]), f"{what}: biclique s2 differs from the request")
    elif isinstance(spec, HoleSpec) and "ell" in params:
        chk.need(spec.kind == "long" and spec.ell == params["ell"], f"{what}: not a long hole for the requested ell")


def verify_certificate(g: Graph, cert: Certificate) -> Verdict:
    """Check ``cert`` against ``g`` from scratch.

    Returns ``vacuous`` for :class:`Inconclusive`, otherwise ``verified`` or
    ``invalid`` with reasons.  A record that is not even well formed (unknown
    type, vertex out of range) raises
    :class:`~chilab.errors.CertificateStructureError` instead.
    """
    if isinstance(cert, Inconclusive):
        return Verdict(VACUOUS)
    chk = _Check(g)
    params = getattr(cert, "params", None)
    if not isinstance(params, dict):
        raise CertificateStructureError("certificate has no params record")

    if isinstance(cert, NondominatingCopy):
        _psi_request(cert, chk)
        _spec_request(cert.spec, params, chk, "copy")
        chk.component(cert.copy, cert.spec, "copy")
        copy_mask = chk.mask(cert.copy.vertex_set, "copy")
        w = chk.mask(cert.witness, "witness")
        chk.anticomplete(copy_mask, w, "copy and witness")
        chk.big(w, cert.psi, "witness")
    elif isinstance(cert, IsolatedCopy):
        _psi_request(cert, chk)
        c = chk.mask(cert.clique, "clique")
        if "k" in params:
            chk.need(len(cert.clique) == params["k"], "clique size differs from the request")
        chk.need(clique_number_mask(g, c) == len(cert.clique), "clique is not complete")
        w = chk.mask(cert.witness, "witness")
        chk.anticomplete(c, w, "clique and witness")
        chk.big(w, cert.psi, "witness")
    elif isinstance(cert, Sprinkling):
        _psi_request(cert, chk)
        if "q" in params:
            chk.need(cert.q >= params["q"], f"q = {cert.q} is below the requested {params['q']}")
        chk.need(cert.q >= 0, "q is negative")
        P = chk.mask(cert.P, "P")
        Q = chk.mask(cert.Q, "Q")
        chk.need(not P & Q, "P and Q intersect")
        rows = g.rows
        r = max((chromatic_number_mask(g, rows[v] & Q) for v in cert.P), default=0)
        chk.need(r == cert.r, f"r is {r}, certificate says {cert.r}")
        chk.big(P, cert.psi, "P")
        chiq = chromatic_number_mask(g, Q)
        need = cert.psi(clique_number_mask(g, Q)) + cert.q * r
        chk.need(chiq > need, f"chi(Q) = {chiq} is not above psi(omega(Q)) + q r = {need}")
    elif isinstance(cert, Template):
        if "t" in params:
            chk.need(cert.t == params["t"], "t differs from the request")
        if "s" in params:
            chk.need(cert.s == params["s"], "s differs from the request")
        blocks = [chk.mask(b, f"block {i}") for i, b in enumerate(cert.blocks)]
        used = 0
        for i, b in enumerate(blocks):
            chk.need(len(cert.blocks[i]) == cert.t, f"block {i} does not have {cert.t} vertices")
            chk.need(not used & b, f"block {i} meets an earlier block")
            used |= b
        rows = g.rows
        for j in range(1, len(blocks)):
            for S in stable_sets_mask(g, blocks[j], cert.s):
                nbrs = 0
                x = S
                while x:
                    v = (x & -x).bit_length() - 1
                    x &= x - 1
                    nbrs |= rows[v]
                for i in range(j):
                    if blocks[i] & ~nbrs:
                        chk.reasons.append(f"a stable {cert.s}-set of block {j} misses a vertex of block {i}")
                        break
    elif isinstance(cert, HFreeSet):
        _psi_request(cert, chk)
        A = chk.mask(cert.A, "A")
        ex = cert.excluded
        if isinstance(ex, CliqueSpec):
            if "k" in params:
                chk.need(ex.k == params["k"], "excluded clique differs from the request")
            chk.need(clique_number_mask(g, A) < ex.k, f"A contains K_{ex.k}")
        elif isinstance(ex, BicliqueSpec):
            _spec_request(ex, params, chk, "excluded")
            chk.need(not _has_biclique(g, A, ex.s, ex.s2), f"A contains K_{{{ex.s},{ex.s2}}}")
        else:
            raise CertificateStructureError(f"unknown excluded graph {ex!r}")
        chk.big(A, cert.psi, "A")
    elif isinstance(cert, MultiholeCert):
        comps = cert.multihole.components
        if not chk.need(len(comps) == len(cert.specs), "components and specs differ in number"):
            return Verdict(INVALID, chk.reasons)
        if "k" in params:
            chk.need(len(comps) == params["k"], "number of components differs from the request")
        masks = []
        for i, (c, spec) in enumerate(zip(comps, cert.specs)):
            _spec_request(spec, params, chk, f"component {i}")
            chk.component(c, spec, f"component {i}")
            masks.append(chk.mask(c.vertex_set, f"component {i}"))
        for i, j in combinations(range(len(masks)), 2):
            chk.anticomplete(masks[i], masks[j], f"components {i} and {j}")
    else:
        raise CertificateStructureError(f"not a certificate: {cert!r}")
    return Verdict(INVALID if chk.reasons else VERIFIED, chk.reasons)
