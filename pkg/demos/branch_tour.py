"""Replay the curated forced-mode fixtures and report which proof branches they reach.

    python demos/branch_tour.py
"""

import json
from pathlib import Path

from chilab import trace
from chilab.graph import graph6_decode

import sys

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))
from runner import call  # noqa: E402

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "branch_fixtures.json"


def main() -> None:
    hit: set[str] = set()
    for fx in json.loads(FIXTURES.read_text()):
        g = graph6_decode(fx["graph6"])
        with trace.recording() as seen:
            call(fx["op"], g, fx["params"], fx["knobs"])
        hit |= seen
    proof = trace.registered(trace.PROOF)
    width = max(map(len, proof))
    for label, desc in sorted(proof.items()):
        mark = "hit " if label in hit else "MISS"
        print(f"{mark} {label:<{width}}  {desc}")
    print(f"\n{len(set(proof) & hit)}/{len(proof)} proof branches reached")


if __name__ == "__main__":
    main()
