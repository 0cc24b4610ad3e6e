"""``chilab`` command line.

Exit status: 0 when everything verified (or was inconclusive), 1 when a
certificate was invalid or a checker found a counterexample, 2 on usage or
I/O errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import __version__
from .certificates import certificate_from_json
from .errors import ChilabError, CertificateStructureError
from .graph import graph6_encode
from .holes import HoleSpec, find_hole_mask
from .kernels import biclique_tau, chromatic_number, clique_number, is_perfect, stability_number
from .poly import NonDecPoly
from .sweep import OPS, RunConfig, read_graph6_file, run_sweep
from .verify import INVALID, verify_certificate

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

log = logging.getLogger("chilab")


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _psi(text: str) -> NonDecPoly:
    try:
        return NonDecPoly.parse(text)
    except ChilabError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("--s", type=int, default=1, help="biclique size s")
    p.add_argument("--s2", type=int, default=None, help="second biclique side (default s)")
    p.add_argument("--q", type=int, default=0)
    p.add_argument("--t", type=int, default=None, help="template size for bigbip_step")
    p.add_argument("--k", type=int, default=1, help="clique size or number of components")
    p.add_argument("--r", type=int, default=2, help="clique bound for ramsey_bound_holds")
    p.add_argument("--n", type=int, default=None, help="neighbourhood chi bound (default: the graph's maximum)")
    p.add_argument("--ell", type=int, default=5, help="long-hole threshold")
    p.add_argument("--c", type=int, default=4, help="exponent of the imported binding bound")
    p.add_argument("--psi", type=_psi, default=NonDecPoly(), help="psi coefficients, constant first: '0,1' is x")
    p.add_argument("--forced", action="store_true", help="skip thresholds and search")
    p.add_argument("--direct-cap", type=int, default=24, help="largest n for direct multihole search")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chilab", description="Certificates for chi-boundedness on small graphs")
    parser.add_argument("--version", action="version", version=f"chilab {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the JSON report here instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="mode", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", parents=[common], help="invariants of every graph in a graph6 file")
    p.add_argument("graphs")

    p = sub.add_parser("extract", parents=[common], help="run one operation on every graph in a graph6 file")
    p.add_argument("--op", required=True, choices=OPS)
    _add_params(p)
    p.add_argument("graphs")

    p = sub.add_parser("verify", parents=[common], help="check a certificate (or a list, one per graph) against graphs")
    p.add_argument("certificate")
    p.add_argument("graphs")

    p = sub.add_parser("sweep", parents=[common], help="run one operation over a generated corpus")
    p.add_argument("--op", required=True, choices=OPS)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--exhaustive", type=int, metavar="N", help="all labelled graphs on N vertices")
    src.add_argument("--random", type=int, metavar="COUNT", help="COUNT seeded random graphs")
    src.add_argument("--file", help="graphs from a graph6 file")
    p.add_argument("--from", dest="exhaustive_min", type=int, default=None, help="with --exhaustive, start at this n")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--keep", choices=("all", "failures"), default="all", help="which per-graph records to report")
    p.add_argument("--no-timing", action="store_true", help="omit timings so reports are byte-stable")
    _add_params(p)
    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(mode=args.mode, out=args.out)
    for key in ("op", "s", "s2", "q", "t", "k", "r", "n", "ell", "c", "psi", "forced", "direct_cap"):
        if hasattr(args, key):
            setattr(cfg, key, getattr(args, key))
    if args.mode == "sweep":
        cfg.exhaustive, cfg.exhaustive_min, cfg.random = args.exhaustive, args.exhaustive_min, args.random
        cfg.seed, cfg.n_min, cfg.n_max, cfg.keep = args.seed, args.n_min, args.n_max, args.keep
        cfg.timing = not args.no_timing
        if args.file:
            cfg.inputs = [args.file]
    elif hasattr(args, "graphs"):
        cfg.inputs = [args.graphs]
    return cfg


def _analyze(cfg: RunConfig) -> tuple[dict, int]:
    records = []
    for idx, g in enumerate(read_graph6_file(cfg.inputs[0])):
        odd = find_hole_mask(g, g.full_mask, HoleSpec.odd(), shortest=True)
        records.append(
            {
                "index": idx,
                "graph6": graph6_encode(g),
                "n": g.n,
                "edges": g.edge_count,
                "omega": clique_number(g),
                "chi": chromatic_number(g),
                "alpha": stability_number(g),
                "tau": biclique_tau(g),
                "perfect": is_perfect(g),
                "four_hole": find_hole_mask(g, g.full_mask, HoleSpec.four()) is not None,
                "shortest_odd_hole": list(odd) if odd else None,
            }
        )
    return {"mode": "analyze", "total": len(records), "records": records}, EXIT_OK


def _verify(cert_path: str, graph_path: str) -> tuple[dict, int]:
    try:
        data = json.loads(Path(cert_path).read_text())
    except OSError as exc:
        raise OSError(f"{cert_path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise CertificateStructureError(f"{cert_path}: invalid JSON: {exc}") from None
    graphs = list(read_graph6_file(graph_path))
    certs = data if isinstance(data, list) else [data]
    if len(certs) != len(graphs) and not (len(certs) == 1 and graphs):
        raise CertificateStructureError(f"{len(certs)} certificates for {len(graphs)} graphs")
    records = []
    status = EXIT_OK
    for idx, raw in enumerate(certs):
        g = graphs[idx]
        verdict = verify_certificate(g, certificate_from_json(raw))
        if verdict.status == INVALID:
            status = EXIT_FAIL
        records.append({"index": idx, "graph6": graph6_encode(g), "verdict": verdict.to_json()})
    return {"mode": "verify", "total": len(records), "records": records}, status


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = _config(args)
        if args.mode == "analyze":
            report, status = _analyze(cfg)
        elif args.mode == "verify":
            report, status = _verify(args.certificate, args.graphs)
        else:
            rep = run_sweep(cfg, workers=None if args.mode == "sweep" else 1)
            report = rep.to_json()
            status = EXIT_FAIL if rep.failed else EXIT_OK
        text = json.dumps(report, indent=2, sort_keys=True)
        if args.out:
            Path(args.out).write_text(text + "\n")
        else:
            print(text)
    except (OSError, ChilabError) as exc:
        print(f"chilab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return status


if __name__ == "__main__":
    sys.exit(main())
