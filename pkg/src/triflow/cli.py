"""Command-line front end.

Subcommands: faces, extend, witness, critical, classify, enumerate,
crosscheck.  All reports are stable, line-oriented plain text; exit code
1 flags parse/invariant errors, exit code 2 a crosscheck mismatch.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import criticality as crit
from .coloring import Coloring, validate_outer_coloring
from .crosscheck import sweep_criticality, sweep_extension
from .flow_solver import decide_extension, verdict_report
from .generate import GenSpec, enumerate_fillings
from .plane_graph import (
    GraphError,
    PlaneGraph,
    face_length_multiset,
    parse_plane_graph,
    to_text,
)


def _load_graph(path: str) -> PlaneGraph:
    return parse_plane_graph(Path(path).read_text())


def _parse_coloring(G: PlaneGraph, spec: str) -> Coloring:
    """Inline coloring `1,2,3,...` applied to the outer cycle in order."""
    values = [int(t) for t in spec.replace(" ", "").split(",") if t]
    if len(values) != len(G.outer):
        raise ValueError(
            f"coloring has {len(values)} entries, outer cycle has {len(G.outer)}"
        )
    psi = dict(zip(G.outer, values))
    validate_outer_coloring(G, psi)
    return psi


def _cmd_faces(args: argparse.Namespace) -> int:
    G = _load_graph(args.file)
    for f in G.faces:
        kind = "outer" if f.is_outer else "internal"
        walk = "-".join(map(str, f.vertices))
        print(f"face {f.index} {kind} length {f.length} walk {walk}")
    S = face_length_multiset(G)
    print("S " + ("{" + ",".join(map(str, S)) + "}" if S else "{}"))
    return 0


def _cmd_extend(args: argparse.Namespace) -> int:
    G = _load_graph(args.file)
    psi = _parse_coloring(G, args.coloring)
    verdict = decide_extension(G, psi)
    sys.stdout.write(verdict_report(G, verdict))
    return 0


def _cmd_witness(args: argparse.Namespace) -> int:
    G = _load_graph(args.file)
    psi = _parse_coloring(G, args.coloring)
    verdict = decide_extension(G, psi, want_cuts=False)
    if not verdict.extends or verdict.witness is None:
        print("none")
        return 0
    for v in sorted(verdict.witness):
        print(f"color {v} {verdict.witness[v]}")
    return 0


def _cmd_critical(args: argparse.Namespace) -> int:
    G = _load_graph(args.file)
    verdict = crit.is_c_critical(G)
    print(f"critical {'true' if verdict.is_critical else 'false'}")
    if verdict.is_critical:
        for e in sorted(verdict.witness_map):
            psi = verdict.witness_map[e]
            colors = ",".join(str(psi[v]) for v in G.outer)
            print(f"witness {e[0]}-{e[1]} coloring {colors}")
    else:
        print(f"reason {verdict.reason}")
        if verdict.failure_edge is not None:
            e = verdict.failure_edge
            print(f"failure_edge {e[0]}-{e[1]}")
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    G = _load_graph(args.file)
    k = len(G.outer)
    if k == 8:
        cls = crit.classify_8cycle(G)
        print(f"class {cls.case}")
        if cls.face_multiset:
            print("S {" + ",".join(map(str, cls.face_multiset)) + "}")
        if cls.case in ("B", "C"):
            print(
                "contact "
                + " ".join(str(c) for c in cls.contact_lengths)
            )
        if cls.case == "D":
            print("labeling " + " ".join(map(str, cls.labeling)))
            print(f"shared_vertex {cls.shared_vertex}")
        if cls.reason:
            print(f"reason {cls.reason}")
        return 0
    if k == 7:
        S = face_length_multiset(G)
        if S == (5,):
            res = crit.check_k_minus_2(G)
            if res.is_critical:
                f = G.faces[res.face_index]
                from .criticality import boundary_intersection

                _, length = boundary_intersection(G, f)
                case = {4: "A", 3: "B", 2: "C"}.get(length, "?")
                print(f"class {case}")
                print(f"contact {length}")
                return 0
        print("class NOT_CRITICAL")
        return 0
    if k == 6:
        is_quad = all(f.length == 4 for f in G.internal_faces)
        if is_quad and crit.check_quadrangulation(G):
            print("class CRITICAL_QUADRANGULATION")
        else:
            print("class NOT_CRITICAL")
        return 0
    print("class NOT_CRITICAL")
    print(f"reason outer length {k} admits no critical filling")
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    spec = GenSpec(
        outer_length=args.k,
        max_internal_vertices=args.budget,
        girth_floor=args.girth,
    )
    first = True
    for i, G in enumerate(enumerate_fillings(spec)):
        if not first:
            print("---")
        first = False
        sys.stdout.write(to_text(G, comment=str(i)))
    return 0


def _cmd_crosscheck(args: argparse.Namespace) -> int:
    ext = sweep_extension(args.k, args.budget, girth=args.girth, jobs=args.jobs)
    for line in ext.summary_lines():
        print(line)
    cri = sweep_criticality(args.k, args.budget, girth=args.girth, jobs=args.jobs)
    for line in cri.summary_lines()[1:]:
        print(line)
    bad = ext.mismatches + cri.mismatches
    if bad:
        first = bad[0]
        print("MISMATCH", file=sys.stderr)
        print(first.detail, file=sys.stderr)
        sys.stderr.write(first.graph_text)
        if first.coloring:
            print(
                "coloring " + ",".join(map(str, first.coloring)), file=sys.stderr
            )
        return 2
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="triflow",
        description=(
            "Precoloring extension and criticality tools for triangle-free "
            "plane graphs with a small outer cycle"
        ),
    )
    sub = p.add_subparsers(dest="command", required=True)

    fp = sub.add_parser("faces", help="print face walks and the length multiset")
    fp.add_argument("file")
    fp.set_defaults(fn=_cmd_faces)

    ep = sub.add_parser("extend", help="decide whether a precoloring extends")
    ep.add_argument("file")
    ep.add_argument("--coloring", required=True, help="outer colors, e.g. 1,2,3,1,2,3")
    ep.set_defaults(fn=_cmd_extend)

    wp = sub.add_parser("witness", help="print an extending coloring, or none")
    wp.add_argument("file")
    wp.add_argument("--coloring", required=True)
    wp.set_defaults(fn=_cmd_witness)

    cp = sub.add_parser("critical", help="brute-force criticality with witnesses")
    cp.add_argument("file")
    cp.set_defaults(fn=_cmd_critical)

    kp = sub.add_parser("classify", help="structural criticality classification")
    kp.add_argument("file")
    kp.set_defaults(fn=_cmd_classify)

    np_ = sub.add_parser("enumerate", help="stream the generated corpus")
    np_.add_argument("--k", type=int, required=True)
    np_.add_argument("--budget", type=int, required=True)
    np_.add_argument("--girth", type=int, default=4, choices=(4, 5))
    np_.set_defaults(fn=_cmd_enumerate)

    xp = sub.add_parser("crosscheck", help="oracle vs solver sweep over the corpus")
    xp.add_argument("--k", type=int, required=True)
    xp.add_argument("--budget", type=int, required=True)
    xp.add_argument("--girth", type=int, default=4, choices=(4, 5))
    xp.add_argument("--jobs", type=int, default=1)
    xp.add_argument("--format", default="text", choices=("text",))
    xp.set_defaults(fn=_cmd_crosscheck)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:  # console entry point
    raise SystemExit(run())


if __name__ == "__main__":
    main()
