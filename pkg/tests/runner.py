"""Dispatch a named operation with JSON-style params and knobs.

Shared by the branch-coverage and soundness tests so that a frozen fixture
record is enough to replay a run.
"""

from __future__ import annotations

from chilab.isolation import Knobs, bigbip_step, bip_self_isolation, isolate_complete, strong_isolation
from chilab.multiholes import (
    LongHoleParams,
    anticomplete_pair_c4free,
    anticomplete_pair_long,
    k_object_extract,
    long_nondominating_kssfree,
    long_or_kss_nondominating,
    odd_nondominating_c4free,
    special_hole_smallnbrs,
    special_multihole,
    special_nondominating,
)
from chilab.poly import NonDecPoly


def knobs_from(data: dict | None) -> Knobs | None:
    if not data:
        return None
    data = dict(data)
    if "psi_prime" in data:
        data["psi_prime"] = NonDecPoly.from_json(data["psi_prime"])
    return Knobs(**data)


def call(op: str, g, params: dict, knobs: dict | None = None, forced: bool = True):
    psi = NonDecPoly.from_json(params.get("psi", []))
    kn = knobs_from(knobs)
    if op == "isolate_complete":
        return isolate_complete(g, params["k"], psi, forced)
    if op == "bigbip_step":
        return bigbip_step(g, params["s"], params["q"], params["t"], psi, forced)
    if op == "strong_isolation":
        return strong_isolation(g, params["s"], params["q"], psi, forced, kn)
    if op == "bip_self_isolation":
        return bip_self_isolation(g, params["s"], params["s2"], psi, forced, kn)
    if op == "special_hole_smallnbrs":
        return special_hole_smallnbrs(g, params["n"], psi, forced)
    if op == "anticomplete_pair_c4free":
        return anticomplete_pair_c4free(g, params["n"])
    if op == "odd_nondominating_c4free":
        return odd_nondominating_c4free(g, psi, forced, kn)
    if op == "special_nondominating":
        return special_nondominating(g, psi, forced, kn)
    if op == "special_multihole":
        return special_multihole(g, params["k"], forced, kn)
    lp = LongHoleParams(params["ell"], params["s"], params.get("c", 4))
    if op == "anticomplete_pair_long":
        return anticomplete_pair_long(g, params["n"], lp)
    if op == "long_nondominating_kssfree":
        return long_nondominating_kssfree(g, psi, lp, forced, kn)
    if op == "long_or_kss_nondominating":
        return long_or_kss_nondominating(g, psi, lp, forced, kn)
    if op == "k_object_extract":
        return k_object_extract(g, params["k"], lp, forced, kn)
    raise KeyError(op)
