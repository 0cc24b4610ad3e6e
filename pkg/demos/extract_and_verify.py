"""Run a few forced extractions on small graphs and check every certificate.

    python demos/extract_and_verify.py
"""

from chilab import (
    LongHoleParams,
    certificate_to_json,
    disjoint_union,
    k_object_extract,
    special_multihole,
    special_nondominating,
    strong_isolation,
    verify_certificate,
)
from chilab.generators import complete_bipartite, cycle, mycielski
from chilab.isolation import Knobs

CASES = [
    ("two C4s, special hole", disjoint_union(cycle(4), cycle(4)), lambda g: special_nondominating(g, 0, True)),
    ("C5 + grotzsch, 2-multihole", disjoint_union(cycle(5), mycielski(cycle(5))), lambda g: special_multihole(g, 2, True)),
    (
        "K22 + C7, 2-object",
        disjoint_union(complete_bipartite(2, 2), cycle(7)),
        lambda g: k_object_extract(g, 2, LongHoleParams(5, 2), True),
    ),
    ("C5 + C5, strong isolation", disjoint_union(cycle(5), cycle(5)), lambda g: strong_isolation(g, 1, 1, 0, True, Knobs(t=1, t_step=0))),
]


def main() -> None:
    for name, g, run in CASES:
        cert = run(g)
        verdict = verify_certificate(g, cert)
        print(f"{name}: {cert.variant} -> {verdict.status}")
        print(f"  {certificate_to_json(cert)}")
    print()
    # strict mode refuses: the threshold is far above anything on 10 vertices
    g = disjoint_union(cycle(5), cycle(5))
    print("strict special_multihole k=2:", special_multihole(g, 2))


if __name__ == "__main__":
    main()
