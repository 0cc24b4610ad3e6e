"""Certificate values returned by every extractor, and their JSON form.

A certificate is a plain immutable record; nothing in here checks that it is
*true*.  That is :func:`chilab.verify.verify_certificate`'s job.  Each record
keeps the parameters of the request that produced it (``params``) so the
verifier can also check the payload answers the question that was asked,
e.g. that a sprinkling meant for ``q = 3`` is not silently a ``q = 2`` one.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Union

from .errors import ArgumentError, CertificateStructureError
from .holes import Biclique, BicliqueSpec, Component, ComponentSpec, Hole, HoleSpec, Multihole, spec_from_json
from .poly import NonDecPoly


@dataclass(frozen=True)
class CliqueSpec:
    """Excluded graph ``K_k``."""

    k: int

    def to_json(self) -> dict:
        return {"kind": "clique", "k": self.k}


ExcludedSpec = Union[CliqueSpec, BicliqueSpec]
CopySpec = Union[HoleSpec, BicliqueSpec]


@dataclass(frozen=True)
class NondominatingCopy:
    """Induced ``copy`` of the shape ``spec`` and a witness set anticomplete to it
    with ``chi(witness) > psi(omega(witness))``."""

    copy: Component
    spec: CopySpec
    witness: frozenset[int]
    psi: NonDecPoly
    params: dict = field(default_factory=dict)
    variant = "nondominating_copy"


@dataclass(frozen=True)
class IsolatedCopy:
    """A ``k``-clique anticomplete to a witness of large chromatic number."""

    clique: frozenset[int]
    witness: frozenset[int]
    psi: NonDecPoly
    params: dict = field(default_factory=dict)
    variant = "isolated_copy"


@dataclass(frozen=True)
class Sprinkling:
    P: frozenset[int]
    Q: frozenset[int]
    q: int
    r: int
    psi: NonDecPoly
    params: dict = field(default_factory=dict)
    variant = "sprinkling"


@dataclass(frozen=True)
class Template:
    blocks: tuple[frozenset[int], ...]
    t: int
    s: int
    params: dict = field(default_factory=dict)
    variant = "template"


@dataclass(frozen=True)
class HFreeSet:
    """``G[A]`` excludes ``excluded`` and still has ``chi(A) > psi(omega(A))``."""

    A: frozenset[int]
    excluded: ExcludedSpec
    psi: NonDecPoly
    params: dict = field(default_factory=dict)
    variant = "hfree_set"


@dataclass(frozen=True)
class MultiholeCert:
    """k pairwise disjoint, anticomplete components; ``specs[i]`` describes component i."""

    multihole: Multihole
    specs: tuple[ComponentSpec, ...]
    params: dict = field(default_factory=dict)
    variant = "multihole"


@dataclass(frozen=True)
class Inconclusive:
    reason: str
    params: dict = field(default_factory=dict)
    variant = "inconclusive"


Certificate = Union[NondominatingCopy, IsolatedCopy, Sprinkling, Template, HFreeSet, MultiholeCert, Inconclusive]

VARIANTS = ("nondominating_copy", "isolated_copy", "sprinkling", "template", "hfree_set", "multihole", "inconclusive")


def is_conclusive(cert: Certificate) -> bool:
    return not isinstance(cert, Inconclusive)


def with_params(cert: Certificate, params: dict) -> Certificate:
    """Same payload, answering a different request."""
    from dataclasses import replace

    return replace(cert, params=dict(params))


# JSON -----------------------------------------------------------------


def _vs(vertices) -> list[int]:
    return sorted(vertices)


def component_to_json(c: Component) -> dict:
    if isinstance(c, Hole):
        return {"type": "hole", "vertices": list(c.vertices)}
    return {"type": "biclique", "side_a": _vs(c.side_a), "side_b": _vs(c.side_b)}


def excluded_to_json(spec: ExcludedSpec) -> dict:
    return spec.to_json()


def certificate_to_json(cert: Certificate) -> dict[str, Any]:
    out: dict[str, Any] = {"variant": cert.variant}
    if isinstance(cert, NondominatingCopy):
        out.update(copy=component_to_json(cert.copy), spec=cert.spec.to_json(), witness=_vs(cert.witness), psi=cert.psi.to_json())
    elif isinstance(cert, IsolatedCopy):
        out.update(clique=_vs(cert.clique), witness=_vs(cert.witness), psi=cert.psi.to_json())
    elif isinstance(cert, Sprinkling):
        out.update(P=_vs(cert.P), Q=_vs(cert.Q), q=cert.q, r=cert.r, psi=cert.psi.to_json())
    elif isinstance(cert, Template):
        out.update(blocks=[_vs(b) for b in cert.blocks], t=cert.t, s=cert.s)
    elif isinstance(cert, HFreeSet):
        out.update(A=_vs(cert.A), excluded=excluded_to_json(cert.excluded), psi=cert.psi.to_json())
    elif isinstance(cert, MultiholeCert):
        out.update(
            components=[component_to_json(c) for c in cert.multihole.components],
            specs=[s.to_json() for s in cert.specs],
        )
    elif isinstance(cert, Inconclusive):
        out["reason"] = cert.reason
    else:
        raise CertificateStructureError(f"not a certificate: {cert!r}")
    out["params"] = cert.params
    return out


def dumps(cert: Certificate) -> str:
    """Canonical text: sorted keys, no whitespace variation."""
    return json.dumps(certificate_to_json(cert), sort_keys=True, separators=(",", ":"))


def _vertex_list(data: dict, key: str) -> list[int]:
    val = data.get(key)
    if not isinstance(val, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in val):
        raise CertificateStructureError(f"field {key!r} must be a list of integers")
    return val


def _vertex_set(data: dict, key: str) -> frozenset[int]:
    vals = _vertex_list(data, key)
    out = frozenset(vals)
    if len(out) != len(vals):
        raise CertificateStructureError(f"field {key!r} repeats a vertex")
    return out


def _int(data: dict, key: str) -> int:
    val = data.get(key)
    if not isinstance(val, int) or isinstance(val, bool):
        raise CertificateStructureError(f"field {key!r} must be an integer")
    return val


def _poly(data: dict, key: str = "psi") -> NonDecPoly:
    try:
        return NonDecPoly.from_json(data.get(key))
    except ArgumentError as exc:
        raise CertificateStructureError(f"field {key!r}: {exc}") from None


def component_from_json(data: dict) -> Component:
    if not isinstance(data, dict):
        raise CertificateStructureError("component must be an object")
    kind = data.get("type")
    if kind == "hole":
        return Hole(tuple(_vertex_list(data, "vertices")))
    if kind == "biclique":
        return Biclique(_vertex_set(data, "side_a"), _vertex_set(data, "side_b"))
    raise CertificateStructureError(f"unknown component type {kind!r}")


def _spec(data) -> ComponentSpec:
    if not isinstance(data, dict):
        raise CertificateStructureError("spec must be an object")
    try:
        return spec_from_json(data)
    except (KeyError, TypeError, ArgumentError) as exc:
        raise CertificateStructureError(f"bad spec {data!r}: {exc}") from None


def _excluded(data) -> ExcludedSpec:
    if isinstance(data, dict) and data.get("kind") == "clique":
        return CliqueSpec(_int(data, "k"))
    spec = _spec(data)
    if not isinstance(spec, BicliqueSpec):
        raise CertificateStructureError("excluded graph must be a clique or biclique")
    return spec


def certificate_from_json(data: dict) -> Certificate:
    """Inverse of :func:`certificate_to_json`; malformed input raises
    :class:`~chilab.errors.CertificateStructureError`."""
    if not isinstance(data, dict):
        raise CertificateStructureError("certificate must be an object")
    variant = data.get("variant")
    params = data.get("params", {})
    if not isinstance(params, dict):
        raise CertificateStructureError("params must be an object")
    if variant == "nondominating_copy":
        return NondominatingCopy(
            component_from_json(data.get("copy")), _spec(data.get("spec")), _vertex_set(data, "witness"), _poly(data), params
        )
    if variant == "isolated_copy":
        return IsolatedCopy(_vertex_set(data, "clique"), _vertex_set(data, "witness"), _poly(data), params)
    if variant == "sprinkling":
        return Sprinkling(_vertex_set(data, "P"), _vertex_set(data, "Q"), _int(data, "q"), _int(data, "r"), _poly(data), params)
    if variant == "template":
        blocks = data.get("blocks")
        if not isinstance(blocks, list):
            raise CertificateStructureError("blocks must be a list")
        return Template(tuple(_vertex_set({"b": b}, "b") for b in blocks), _int(data, "t"), _int(data, "s"), params)
    if variant == "hfree_set":
        return HFreeSet(_vertex_set(data, "A"), _excluded(data.get("excluded")), _poly(data), params)
    if variant == "multihole":
        comps = data.get("components")
        specs = data.get("specs")
        if not isinstance(comps, list) or not isinstance(specs, list):
            raise CertificateStructureError("components and specs must be lists")
        return MultiholeCert(Multihole(tuple(component_from_json(c) for c in comps)), tuple(_spec(s) for s in specs), params)
    if variant == "inconclusive":
        reason = data.get("reason")
        if not isinstance(reason, str):
            raise CertificateStructureError("reason must be a string")
        return Inconclusive(reason, params)
    raise CertificateStructureError(f"unknown variant {variant!r}")


def loads(text: str) -> Certificate:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateStructureError(f"invalid JSON: {exc}") from None
    return certificate_from_json(data)
