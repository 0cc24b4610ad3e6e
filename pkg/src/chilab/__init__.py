"""Exact invariants, hole search and certificate-producing extraction for
polynomial chi-boundedness on small graphs."""

from .certificates import (
    HFreeSet,
    Inconclusive,
    IsolatedCopy,
    MultiholeCert,
    NondominatingCopy,
    Sprinkling,
    Template,
    certificate_from_json,
    certificate_to_json,
)
from .errors import (
    ArgumentError,
    CapacityError,
    CertificateStructureError,
    ChilabError,
    Graph6ParseError,
    TheoremViolation,
    VertexRangeError,
)
from .graph import Graph, disjoint_union, graph6_decode, graph6_encode, induced_subgraph
from .holes import BicliqueSpec, Biclique, Hole, HoleSpec, Multihole, find_hole, find_multihole
from .isolation import (
    Knobs,
    big_nonneighbour,
    bigbip_step,
    bip_self_isolation,
    eval_phi_complete,
    eval_phi_strong,
    isolate_complete,
    strong_isolation,
)
from .kernels import chromatic_number, clique_number, stability_number
from .multiholes import (
    LongHoleParams,
    k_object_extract,
    long_or_kss_nondominating,
    special_multihole,
    special_nondominating,
)
from .poly import NonDecPoly, X
from .verify import Verdict, brute_chromatic, verify_certificate

__version__ = "0.1.0"
