"""Branch instrumentation for the extraction procedures.

Each case split of a constructive argument registers a label at import time;
the procedures call :func:`hit` when they take that branch.  Recording is off
unless a :func:`recording` context is active, so the cost in normal runs is
one list check.
"""

from __future__ import annotations

from contextlib import contextmanager
from typing import Iterator

PROOF = "proof"
FALLBACK = "fallback"

_registry: dict[str, tuple[str, str]] = {}
_active: list[set[str]] = []


def branch(label: str, description: str, kind: str = PROOF) -> str:
    _registry[label] = (kind, description)
    return label


def hit(label: str) -> None:
    if _active:
        if label not in _registry:
            raise KeyError(f"unregistered branch {label!r}")
        for rec in _active:
            rec.add(label)


@contextmanager
def recording() -> Iterator[set[str]]:
    seen: set[str] = set()
    _active.append(seen)
    try:
        yield seen
    finally:
        _active.remove(seen)


def registered(kind: str | None = None) -> dict[str, str]:
    """Label -> description, optionally restricted to one kind."""
    return {k: d for k, (kd, d) in _registry.items() if kind is None or kd == kind}
