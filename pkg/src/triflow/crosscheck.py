"""Corpus sweeps: flow solver vs oracle, and classifiers vs oracle.

Every generated graph is checked pair by pair; any disagreement is
returned as a minimized bug report (graph text plus precoloring) so it
can be replayed through the CLI.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass, field

from . import criticality as crit
from .coloring import (
    Coloring,
    brute_force_extend,
    coloring_from_orientation,
    enumerate_outer_colorings,
    fluxes_from_coloring,
    orient_dual,
)
from .flow_solver import decide_extension
from .generate import GenSpec, enumerate_fillings
from .plane_graph import PlaneGraph, face_length_multiset, parse_plane_graph, to_text

_FLUX_BOUNDS = {4: {0}, 5: {-3, 3}, 6: {-6, 0, 6}, 7: {-3, 3}, 8: {-6, 0, 6}}


@dataclass
class Mismatch:
    graph_text: str
    coloring: tuple[int, ...]
    detail: str


@dataclass
class ExtensionReport:
    outer_length: int
    budget: int
    girth: int
    graphs: int = 0
    pairs: int = 0
    extends: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)
    flux_violations: int = 0
    roundtrip_failures: int = 0
    cut_checked: int = 0
    cut_violations: int = 0
    imbalance_rejections: int = 0

    def merge(self, other: "ExtensionReport") -> None:
        self.graphs += other.graphs
        self.pairs += other.pairs
        self.extends += other.extends
        self.mismatches.extend(other.mismatches)
        self.flux_violations += other.flux_violations
        self.roundtrip_failures += other.roundtrip_failures
        self.cut_checked += other.cut_checked
        self.cut_violations += other.cut_violations
        self.imbalance_rejections += other.imbalance_rejections

    def summary_lines(self) -> list[str]:
        return [
            f"k {self.outer_length} budget {self.budget} girth {self.girth}",
            f"graphs {self.graphs}",
            f"pairs {self.pairs}",
            f"extends {self.extends}",
            f"imbalance_rejections {self.imbalance_rejections}",
            f"flux_violations {self.flux_violations}",
            f"roundtrip_failures {self.roundtrip_failures}",
            f"cut_checked {self.cut_checked}",
            f"cut_violations {self.cut_violations}",
            f"mismatches {len(self.mismatches)}",
        ]


def _psi_tuple(G: PlaneGraph, psi: Coloring) -> tuple[int, ...]:
    return tuple(psi[v] for v in G.outer)


def _check_coloring_invariants(
    G: PlaneGraph, phi: Coloring, report: ExtensionReport
) -> None:
    flux = fluxes_from_coloring(G, phi)
    for f in G.internal_faces:
        allowed = _FLUX_BOUNDS.get(f.length)
        value = flux[f.index]
        if allowed is not None and value not in allowed:
            report.flux_violations += 1
        elif value % 3 != 0 or (value - f.length) % 2 != 0 or abs(value) > f.length:
            report.flux_violations += 1
    orientation = orient_dual(G, phi)
    seed = G.outer[0]
    back = coloring_from_orientation(G, orientation, seed, phi[seed])
    if back != phi:
        report.roundtrip_failures += 1


def check_graph_extension(G: PlaneGraph, report: ExtensionReport) -> None:
    """Run every canonical precoloring of one graph through both deciders."""
    report.graphs += 1
    for psi in enumerate_outer_colorings(G):
        report.pairs += 1
        try:
            _check_pair(G, psi, report)
        except Exception as exc:  # a crash is a bug report, not a sweep abort
            report.mismatches.append(
                Mismatch(to_text(G), _psi_tuple(G, psi), f"exception: {exc!r}")
            )


def _check_pair(G: PlaneGraph, psi: Coloring, report: ExtensionReport) -> None:
    oracle = brute_force_extend(G, psi)
    verdict = decide_extension(G, psi, want_witness=True, want_cuts=True)
    if verdict.extends != (oracle is not None):
        report.mismatches.append(
            Mismatch(
                to_text(G),
                _psi_tuple(G, psi),
                f"flow says {verdict.extends}, oracle says {oracle is not None}",
            )
        )
        return
    if oracle is not None:
        report.extends += 1
        _check_coloring_invariants(G, oracle, report)
    if verdict.extends and verdict.witness is not None:
        _check_coloring_invariants(G, verdict.witness, report)
    if not verdict.extends:
        if not verdict.failures:
            report.imbalance_rejections += 1
        for failure in verdict.failures:
            report.cut_checked += 1
            if failure.structure is None or not failure.structure.satisfied():
                report.cut_violations += 1
                report.mismatches.append(
                    Mismatch(
                        to_text(G),
                        _psi_tuple(G, psi),
                        "cut certificate violated",
                    )
                )


def _extension_worker(args: tuple[str, int, int, int]) -> ExtensionReport:
    text, k, budget, girth = args
    report = ExtensionReport(k, budget, girth)
    check_graph_extension(parse_plane_graph(text), report)
    return report


def sweep_extension(
    outer_length: int, budget: int, girth: int = 4, jobs: int = 1
) -> ExtensionReport:
    """Oracle-vs-flow sweep over the full corpus for one outer length."""
    spec = GenSpec(outer_length, budget, girth_floor=girth)
    report = ExtensionReport(outer_length, budget, girth)
    if jobs <= 1:
        for G in enumerate_fillings(spec):
            check_graph_extension(G, report)
        return report
    args = (
        (to_text(G), outer_length, budget, girth) for G in enumerate_fillings(spec)
    )
    with multiprocessing.Pool(jobs) as pool:
        for sub in pool.imap_unordered(_extension_worker, args, chunksize=32):
            report.merge(sub)
    return report


# -- criticality census ----------------------------------------------------------------


@dataclass
class CriticalityReport:
    outer_length: int
    budget: int
    girth: int
    graphs: int = 0
    critical: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)
    realized_multisets: set[tuple[int, ...]] = field(default_factory=set)
    case_counts: dict[str, int] = field(default_factory=dict)
    quad_graphs: int = 0
    kminus2_graphs: int = 0
    kminus2_predicate_pairs: int = 0
    case_colorings_checked: int = 0

    def merge(self, other: "CriticalityReport") -> None:
        self.graphs += other.graphs
        self.critical += other.critical
        self.mismatches.extend(other.mismatches)
        self.realized_multisets |= other.realized_multisets
        for case, n in other.case_counts.items():
            self.case_counts[case] = self.case_counts.get(case, 0) + n
        self.quad_graphs += other.quad_graphs
        self.kminus2_graphs += other.kminus2_graphs
        self.kminus2_predicate_pairs += other.kminus2_predicate_pairs
        self.case_colorings_checked += other.case_colorings_checked

    def summary_lines(self) -> list[str]:
        cases = " ".join(
            f"{c}={n}" for c, n in sorted(self.case_counts.items())
        )
        realized = (
            " ".join("{" + ",".join(map(str, s)) + "}" for s in sorted(self.realized_multisets))
            or "-"
        )
        return [
            f"k {self.outer_length} budget {self.budget} girth {self.girth}",
            f"graphs {self.graphs}",
            f"critical {self.critical}",
            f"realized_multisets {realized}",
            f"cases {cases or '-'}",
            f"mismatches {len(self.mismatches)}",
        ]


def _bug(report: CriticalityReport, G: PlaneGraph, detail: str, psi=None) -> None:
    report.mismatches.append(
        Mismatch(to_text(G), _psi_tuple(G, psi) if psi else (), detail)
    )


def check_graph_criticality(G: PlaneGraph, report: CriticalityReport) -> None:
    report.graphs += 1
    try:
        _check_criticality(G, report)
    except Exception as exc:  # a crash is a bug report, not a sweep abort
        _bug(report, G, f"exception: {exc!r}")


def _check_criticality(G: PlaneGraph, report: CriticalityReport) -> None:
    k = len(G.outer)
    nonext = crit.oracle_nonextendable(G)
    verdict = crit.is_c_critical(G, nonextendable=nonext)
    if verdict.is_critical:
        report.critical += 1
        report.realized_multisets.add(face_length_multiset(G))

    if k <= 5 and verdict.is_critical:
        _bug(report, G, f"critical graph with outer length {k} <= 5")
    if k <= 5 and nonext:
        _bug(report, G, f"non-extendable precoloring with outer length {k} <= 5")

    is_quad = all(f.length == 4 for f in G.internal_faces)
    if is_quad and k >= 6 and k % 2 == 0:
        report.quad_graphs += 1
        if crit.check_quadrangulation(G) != verdict.is_critical:
            _bug(report, G, "quadrangulation classifier disagrees with oracle")

    if k == 6:
        expected = is_quad and crit.check_quadrangulation(G)
        if expected != verdict.is_critical:
            _bug(report, G, "hexagon characterization disagrees with oracle")
        if verdict.is_critical:
            # among precolorings proper on the induced subgraph of the outer
            # vertices, exactly the antipodal one fails; precolorings that
            # clash on a chord fail trivially
            chords = [
                e
                for e in G.edges
                if set(e) <= set(G.outer) and e not in set(G.outer_edges)
            ]
            got = {_psi_tuple(G, p) for p in nonext}
            want = {(1, 2, 3, 1, 2, 3)} | {
                _psi_tuple(G, p)
                for p in enumerate_outer_colorings(G)
                if any(p[u] == p[v] for u, v in chords)
            }
            if got != want:
                _bug(report, G, f"hexagon non-extendable set {sorted(got)}")

    if k >= 7 and face_length_multiset(G) == (k - 2,):
        report.kminus2_graphs += 1
        res = crit.check_k_minus_2(G)
        if res.is_critical != verdict.is_critical:
            _bug(report, G, "(k-2)-face classifier disagrees with oracle")
        if res.is_critical:
            nonext_set = {_psi_tuple(G, p) for p in nonext}
            for psi in enumerate_outer_colorings(G):
                report.kminus2_predicate_pairs += 1
                predicted = crit.k_minus_2_extends(G, psi)
                actual = _psi_tuple(G, psi) not in nonext_set
                if predicted != actual:
                    _bug(report, G, "(k-2)-face extension predicate wrong", psi)

    if k == 7:
        s7 = face_length_multiset(G)
        expected7 = s7 == (5,) and crit.check_k_minus_2(G).is_critical
        if expected7 != verdict.is_critical:
            _bug(report, G, "7-cycle characterization disagrees with oracle")
        for psi in enumerate_outer_colorings(G):
            cases = crit.classify_7cycle_all(G, psi)
            nonextendable = _psi_tuple(G, psi) in {_psi_tuple(G, p) for p in nonext}
            should_match = verdict.is_critical and nonextendable
            report.case_colorings_checked += 1
            if should_match and len(cases) != 1:
                _bug(report, G, f"7-cycle cases {cases} (expected exactly one)", psi)
            if not should_match and cases:
                _bug(report, G, f"7-cycle spurious case match {cases}", psi)
            if cases:
                report.case_counts[cases[0]] = report.case_counts.get(cases[0], 0) + 1

    if k == 8:
        cls = crit.classify_8cycle(G)
        if (cls.case != "NOT_CRITICAL") != verdict.is_critical:
            _bug(report, G, f"8-cycle classifier says {cls.case}, oracle disagrees")
        if cls.case != "NOT_CRITICAL":
            report.case_counts[cls.case] = report.case_counts.get(cls.case, 0) + 1
            _validate_8cycle_evidence(G, cls, report)
        if verdict.is_critical:
            S = face_length_multiset(G)
            allowed, _exact = crit.KNOWN_CRITICAL_FACE_MULTISETS[(4, 8)]
            if S not in allowed:
                _bug(report, G, f"critical 8-cycle graph with face multiset {S}")


def _validate_8cycle_evidence(
    G: PlaneGraph, cls: crit.EightCycleClass, report: CriticalityReport
) -> None:
    if cls.case == "A":
        if any(f.length != 4 for f in G.internal_faces):
            _bug(report, G, "case A evidence: not a quadrangulation")
    elif cls.case == "B":
        if cls.contact_lengths[0] < 1:
            _bug(report, G, "case B evidence: contact path too short")
    elif cls.case == "C":
        if any(c < 2 for c in cls.contact_lengths):
            _bug(report, G, "case C evidence: contact path too short")
    elif cls.case == "D":
        labels, z = cls.labeling, cls.shared_vertex
        f1 = G.faces[cls.five_faces[0]]
        f2 = G.faces[cls.five_faces[1]]
        ok = (
            z is not None
            and z in f1.vertices
            and z in f2.vertices
            and labels[0] in f1.vertices
            and labels[4] in f2.vertices
            and z not in G.outer
        )
        if not ok:
            _bug(report, G, "case D evidence does not re-check")


def _criticality_worker(args: tuple[str, int, int, int]) -> CriticalityReport:
    text, k, budget, girth = args
    report = CriticalityReport(k, budget, girth)
    check_graph_criticality(parse_plane_graph(text), report)
    return report


def sweep_criticality(
    outer_length: int, budget: int, girth: int = 4, jobs: int = 1
) -> CriticalityReport:
    spec = GenSpec(outer_length, budget, girth_floor=girth)
    report = CriticalityReport(outer_length, budget, girth)
    if jobs <= 1:
        for G in enumerate_fillings(spec):
            check_graph_criticality(G, report)
        return report
    args = (
        (to_text(G), outer_length, budget, girth) for G in enumerate_fillings(spec)
    )
    with multiprocessing.Pool(jobs) as pool:
        for sub in pool.imap_unordered(_criticality_worker, args, chunksize=16):
            report.merge(sub)
    return report


# -- combined streaming sweep (one generation pass, both checks) -----------------------


def _combined_worker(
    args: tuple[str, int, int, int, int]
) -> tuple[ExtensionReport, CriticalityReport]:
    text, k, gen_budget, ext_budget, girth = args
    G = parse_plane_graph(text)
    ereport = ExtensionReport(k, ext_budget, girth)
    creport = CriticalityReport(k, gen_budget, girth)
    if G.n - k <= ext_budget:
        check_graph_extension(G, ereport)
    check_graph_criticality(G, creport)
    return ereport, creport


def sweep_combined(
    outer_length: int,
    budget: int,
    ext_budget: int | None = None,
    girth: int = 4,
    jobs: int = 1,
) -> tuple[ExtensionReport, CriticalityReport]:
    """One pass over the corpus running the criticality census on every
    graph and the extension crosscheck on graphs within `ext_budget`."""
    if ext_budget is None:
        ext_budget = budget
    spec = GenSpec(outer_length, budget, girth_floor=girth)
    ereport = ExtensionReport(outer_length, ext_budget, girth)
    creport = CriticalityReport(outer_length, budget, girth)
    if jobs <= 1:
        for G in enumerate_fillings(spec):
            if G.n - outer_length <= ext_budget:
                check_graph_extension(G, ereport)
            check_graph_criticality(G, creport)
        return ereport, creport
    args = (
        (to_text(G), outer_length, budget, ext_budget, girth)
        for G in enumerate_fillings(spec)
    )
    with multiprocessing.Pool(jobs) as pool:
        for esub, csub in pool.imap_unordered(_combined_worker, args, chunksize=16):
            ereport.merge(esub)
            creport.merge(csub)
    return ereport, creport
