"""Criticality of plane triangle-free graphs relative to their outer cycle.

A graph G with outer cycle C (and at least one edge off C) is C-critical
when for every proper subgraph H with C <= H < G some precoloring of C
extends to H but not to G.  Since extensions restrict to subgraphs and
isolated vertices never matter, it suffices to test the one-edge-deleted
graphs G - e for e off C; that reduction is used throughout.

Besides the brute-force decision this module carries the structural
classifiers for outer cycles of length 6, 7 and 8 (quadrangulations, a
single (k-2)-face, and the four shapes possible for an 8-cycle), which
the test suite cross-validates against the oracle on exhaustively
generated corpora.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .coloring import (
    Coloring,
    classify_boundary_edges,
    enumerate_outer_colorings,
    extend_on_adjacency,
    _bfs_internal_order,
)
from .flow_solver import decide_extension
from .plane_graph import (
    Edge,
    Face,
    PlaneGraph,
    edge_key,
    face_length_multiset,
    faces_inside_cycle,
    separating_cycles_up_to,
    simple_cycles_up_to,
)

# Face-length multisets realised by critical graphs, by (girth, outer length).
# The flag records whether the set is exact or only an upper bound; realised
# sets are reported empirically by the census and never assumed equal.
KNOWN_CRITICAL_FACE_MULTISETS: dict[
    tuple[int, int], tuple[frozenset[tuple[int, ...]], bool]
] = {
    (4, 4): (frozenset(), True),
    (4, 5): (frozenset(), True),
    (4, 6): (frozenset({()}), True),
    (4, 7): (frozenset({(5,)}), False),
    (4, 8): (frozenset({(), (5, 5), (6,)}), False),
    (5, 4): (frozenset(), True),
    (5, 5): (frozenset(), True),
    (5, 6): (frozenset(), True),
    (5, 7): (frozenset(), True),
    (5, 8): (frozenset({(5, 5)}), True),
}


def r_of(k: int) -> int:
    """Minimum boundary-contact length forced on a (k-2)-face: 0/2/1 for
    k = 0/1/2 (mod 3)."""
    if k < 1:
        raise ValueError("k must be positive")
    return {0: 0, 1: 2, 2: 1}[k % 3]


# -- brute-force criticality -------------------------------------------------------


@dataclass
class CriticalityVerdict:
    is_critical: bool
    witness_map: dict[Edge, Coloring] = field(default_factory=dict)
    failure_edge: Edge | None = None
    reason: str = ""
    nonextendable: list[Coloring] = field(default_factory=list)


def oracle_nonextendable(G: PlaneGraph) -> list[Coloring]:
    """Canonical precolorings with no extension, by exhaustive backtracking."""
    return [
        psi
        for psi in enumerate_outer_colorings(G)
        if extend_on_adjacency(G.bfs_internal_order, G.sorted_adj, psi) is None
    ]


def is_c_critical(
    G: PlaneGraph, nonextendable: list[Coloring] | None = None
) -> CriticalityVerdict:
    """Decide criticality by the oracle, with witnesses.

    A witness for edge e is a precoloring extending to G - e but not to G;
    such a precoloring necessarily lies in the non-extendable set of G, so
    only those candidates are scanned.
    """
    outer_edge_set = set(G.outer_edges)
    off_cycle = [e for e in G.edges if e not in outer_edge_set]
    if not off_cycle:
        return CriticalityVerdict(
            False, reason="graph equals its outer cycle", failure_edge=None
        )
    if nonextendable is None:
        nonextendable = oracle_nonextendable(G)
    if not nonextendable:
        return CriticalityVerdict(
            False,
            reason="every precoloring extends",
            failure_edge=off_cycle[0],
            nonextendable=[],
        )
    order = _bfs_internal_order(G)
    witness_map: dict[Edge, Coloring] = {}
    for e in off_cycle:
        neighbours = {
            v: tuple(w for w in G.sorted_adj[v] if edge_key(v, w) != e)
            for v in G.vertices
        }
        found = None
        for psi in nonextendable:
            if extend_on_adjacency(order, neighbours, psi) is not None:
                found = psi
                break
        if found is None:
            return CriticalityVerdict(
                False,
                reason=f"no witness precoloring for edge {e[0]}-{e[1]}",
                failure_edge=e,
                nonextendable=nonextendable,
            )
        witness_map[e] = found
    return CriticalityVerdict(
        True, witness_map=witness_map, nonextendable=nonextendable
    )


def nonextendable_colorings(G: PlaneGraph) -> list[Coloring]:
    """Canonical precolorings without extension, via the flow solver."""
    return [
        psi
        for psi in enumerate_outer_colorings(G)
        if not decide_extension(G, psi, want_witness=False, want_cuts=False).extends
    ]


# -- structural classifiers ---------------------------------------------------------


def check_quadrangulation(G: PlaneGraph) -> bool:
    """Criticality test for all-4-face interiors: no separating 4-cycle."""
    if any(f.length != 4 for f in G.internal_faces):
        raise ValueError("not a quadrangulation of the disk")
    k = len(G.outer)
    if k < 6 or k % 2 != 0:
        raise ValueError("outer cycle must be even of length >= 6")
    return not separating_cycles_up_to(G, 4)


def boundary_intersection(G: PlaneGraph, f: Face) -> tuple[str, int]:
    """Shape of f's intersection with the outer cycle.

    Returns ('empty', 0), ('path', edge count) or ('not_path', 0); a
    single vertex counts as a path of length 0, a disconnected or cyclic
    intersection is 'not_path'.
    """
    outer_set = set(G.outer)
    verts = sorted(set(f.vertices) & outer_set)
    if not verts:
        return "empty", 0
    shared = f.edges & set(G.outer_edges)
    degree = {v: 0 for v in verts}
    for u, v in shared:
        degree[u] += 1
        degree[v] += 1
    if any(d > 2 for d in degree.values()):
        return "not_path", 0
    if len(shared) != len(verts) - 1:
        return "not_path", 0
    # connectivity: walk from one endpoint
    if len(verts) == 1:
        return "path", 0
    adj: dict[int, list[int]] = {v: [] for v in verts}
    for u, v in shared:
        adj[u].append(v)
        adj[v].append(u)
    ends = [v for v in verts if degree[v] == 1]
    if len(ends) != 2:
        return "not_path", 0
    seen = {ends[0]}
    stack = [ends[0]]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    if len(seen) != len(verts):
        return "not_path", 0
    return "path", len(shared)


@dataclass
class KMinus2Result:
    face_index: int
    contact_ok: bool          # boundary contact is a path of length >= r(k)
    no_separating_4cycle: bool
    not_enclosed: bool        # no short cycle other than the face encloses it
    is_critical: bool


def check_k_minus_2(G: PlaneGraph) -> KMinus2Result:
    """Criticality test when one internal face has length k-2, rest 4."""
    k = len(G.outer)
    if k < 7:
        raise ValueError("outer cycle must have length >= 7")
    if face_length_multiset(G) != (k - 2,):
        raise ValueError("internal faces must be one (k-2)-face plus 4-faces")
    f = next(g for g in G.internal_faces if g.length == k - 2)
    shape, length = boundary_intersection(G, f)
    if shape == "empty":
        contact_ok = r_of(k) == 0
    elif shape == "path":
        contact_ok = length >= r_of(k)
    else:
        contact_ok = False
    no_sep4 = not separating_cycles_up_to(G, 4)
    not_enclosed = True
    f_edges = f.edges
    for cyc in simple_cycles_up_to(G, k - 1):
        es = frozenset(
            edge_key(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))
        )
        if es == f_edges:
            continue
        if f.index in faces_inside_cycle(G, cyc):
            not_enclosed = False
            break
    return KMinus2Result(
        face_index=f.index,
        contact_ok=contact_ok,
        no_separating_4cycle=no_sep4,
        not_enclosed=not_enclosed,
        is_critical=contact_ok and no_sep4 and not_enclosed,
    )


def k_minus_2_extends(G: PlaneGraph, psi: Mapping[int, int]) -> bool:
    """Extension predicate for (k-2)-face graphs: the outer edges away from
    the big face must contain both a source and a sink edge."""
    k = len(G.outer)
    f = next(g for g in G.internal_faces if g.length == k - 2)
    ec = classify_boundary_edges(G, psi)
    away = [e for e in G.outer_edges if e not in f.edges]
    has_source = any(e in ec.source_edges for e in away)
    has_sink = any(e in ec.sink_edges for e in away)
    return has_source and has_sink


# -- outer cycle of length 7 ---------------------------------------------------------


def _relabelings(outer: tuple[int, ...]) -> list[tuple[tuple[int, ...], bool]]:
    """All rotations and reflections of the outer cycle, with a mirror flag."""
    k = len(outer)
    out = []
    for r in range(k):
        rot = outer[r:] + outer[:r]
        out.append((rot, False))
        out.append(((rot[0],) + tuple(reversed(rot[1:])), True))
    return out


def _bounds_face(G: PlaneGraph, cycle: Sequence[int]) -> bool:
    es = frozenset(
        edge_key(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))
    )
    return any(f.edges == es for f in G.internal_faces)


def _is_cycle(G: PlaneGraph, cycle: Sequence[int]) -> bool:
    if len(set(cycle)) != len(cycle):
        return False
    edges = set(G.edges)
    return all(
        edge_key(cycle[i], cycle[(i + 1) % len(cycle)]) in edges
        for i in range(len(cycle))
    )


def _all_faces_inside_are_quads(G: PlaneGraph, cycle: Sequence[int]) -> bool:
    return all(
        G.faces[i].length == 4 for i in faces_inside_cycle(G, cycle)
    )


def classify_7cycle_all(G: PlaneGraph, psi: Mapping[int, int]) -> list[str]:
    """All configuration letters matched by (G, psi); empty when none."""
    if len(G.outer) != 7:
        raise ValueError("outer cycle must have length 7")
    if separating_cycles_up_to(G, 5):
        return []
    matches: set[str] = set()
    outer_set = set(G.outer)
    chord_graph_edges = None
    for labels, _mirror in _relabelings(G.outer):
        c = {i + 1: labels[i] for i in range(7)}
        # (a): the graph is exactly C plus the long chord c1-c5
        if chord_graph_edges is None:
            chord_graph_edges = set(G.outer_edges)
        if set(G.edges) == chord_graph_edges | {edge_key(c[1], c[5])} and psi[
            c[1]
        ] == psi[c[5]]:
            matches.add("a")
        # (b): a vertex v joined to c1 and c4 cutting off a 5-face
        for v in sorted(G.adj[c[1]] & G.adj[c[4]] - outer_set):
            if not _bounds_face(G, (c[1], c[2], c[3], c[4], v)):
                continue
            hexagon = (v, c[4], c[5], c[6], c[7], c[1])
            if not _is_cycle(G, hexagon):
                continue
            if not _all_faces_inside_are_quads(G, hexagon):
                continue
            if psi[c[4]] == psi[c[7]] and psi[c[5]] == psi[c[1]]:
                matches.add("b")
        # (c): a path c1-u-v-c3 cutting off a 5-face
        for u in sorted(G.adj[c[1]] - outer_set):
            for v in sorted(G.adj[c[3]] & G.adj[u] - outer_set):
                if u == v:
                    continue
                if not _bounds_face(G, (c[1], c[2], c[3], v, u)):
                    continue
                octagon = (u, v, c[3], c[4], c[5], c[6], c[7], c[1])
                if not _is_cycle(G, octagon):
                    continue
                if not _all_faces_inside_are_quads(G, octagon):
                    continue
                if (
                    psi[c[3]] == psi[c[6]]
                    and psi[c[2]] == psi[c[4]] == psi[c[7]]
                    and psi[c[1]] == psi[c[5]]
                ):
                    matches.add("c")
    return sorted(matches)


def classify_7cycle(G: PlaneGraph, psi: Mapping[int, int]) -> str | None:
    """First matching configuration for a 7-cycle instance, or None."""
    matches = classify_7cycle_all(G, psi)
    return matches[0] if matches else None


# -- outer cycle of length 8 ---------------------------------------------------------


@dataclass
class EightCycleClass:
    case: str  # 'A' | 'B' | 'C' | 'D' | 'NOT_CRITICAL'
    reason: str = ""
    face_multiset: tuple[int, ...] = ()
    contact_lengths: tuple[int, ...] = ()
    labeling: tuple[int, ...] = ()   # c1..c8 for case D
    shared_vertex: int | None = None  # z for case D
    five_faces: tuple[int, ...] = ()  # face indices for cases C and D


def _case_d_match(
    G: PlaneGraph, five_faces: Sequence[Face]
) -> tuple[tuple[int, ...], int, tuple[int, ...]] | None:
    """Search labelings realizing the two-pentagon shape around c1 and c5.

    The pattern: clockwise along their boundaries, one 5-face reads
    c1, v1, z, v2, v3 and the other z, w1, c5, w2, w3, sharing the interior
    vertex z; c1 and c5 are antipodal on the outer cycle.  Returns
    (labels, z, (f1 index, f2 index)) or None.
    """
    outer_set = set(G.outer)
    for labels, mirror in _relabelings(G.outer):
        c1, c5 = labels[0], labels[4]
        for f1, f2 in (
            (five_faces[0], five_faces[1]),
            (five_faces[1], five_faces[0]),
        ):
            # internal faces trace counterclockwise; in the mirrored drawing
            # the trace order itself is clockwise
            b1 = list(f1.vertices) if mirror else list(reversed(f1.vertices))
            b2 = list(f2.vertices) if mirror else list(reversed(f2.vertices))
            if c1 not in b1:
                continue
            i = b1.index(c1)
            b1 = b1[i:] + b1[:i]
            z = b1[2]
            if z in outer_set or z not in b2:
                continue
            j = b2.index(z)
            b2 = b2[j:] + b2[:j]
            if b2[2] == c5:
                return tuple(labels), z, (f1.index, f2.index)
    return None


def classify_8cycle(G: PlaneGraph) -> EightCycleClass:
    """Structural criticality classification for an 8-cycle outer face."""
    if len(G.outer) != 8:
        raise ValueError("outer cycle must have length 8")
    sep = separating_cycles_up_to(G, 5)
    if sep:
        return EightCycleClass(
            "NOT_CRITICAL",
            reason=f"separating cycle {'-'.join(map(str, sep[0]))}",
        )
    face_edge_sets = {f.edges for f in G.faces}
    for cyc in simple_cycles_up_to(G, 6):
        if len(cyc) != 6:
            continue
        es = frozenset(
            edge_key(cyc[i], cyc[(i + 1) % 6]) for i in range(6)
        )
        if es in face_edge_sets:
            continue
        if not _all_faces_inside_are_quads(G, cyc):
            return EightCycleClass(
                "NOT_CRITICAL",
                reason=f"6-cycle {'-'.join(map(str, cyc))} encloses a big face",
            )
    S = face_length_multiset(G)
    if S == ():
        return EightCycleClass("A", face_multiset=S)
    if S == (6,):
        f = next(g for g in G.internal_faces if g.length == 6)
        shape, length = boundary_intersection(G, f)
        if shape == "path" and length >= 1:
            return EightCycleClass("B", face_multiset=S, contact_lengths=(length,))
        return EightCycleClass(
            "NOT_CRITICAL",
            face_multiset=S,
            reason="6-face does not meet the outer cycle in a long enough path",
        )
    if S == (5, 5):
        fives = [g for g in G.internal_faces if g.length == 5]
        contacts = []
        for g in fives:
            shape, length = boundary_intersection(G, g)
            contacts.append(length if shape == "path" else -1)
        if all(c >= 2 for c in contacts):
            return EightCycleClass(
                "C",
                face_multiset=S,
                contact_lengths=tuple(contacts),
                five_faces=tuple(g.index for g in fives),
            )
        match = _case_d_match(G, fives)
        if match is not None:
            labels, z, faces = match
            return EightCycleClass(
                "D",
                face_multiset=S,
                contact_lengths=tuple(contacts),
                labeling=labels,
                shared_vertex=z,
                five_faces=faces,
            )
        return EightCycleClass(
            "NOT_CRITICAL",
            face_multiset=S,
            reason="5-faces match neither the two-path nor the shared-vertex shape",
        )
    return EightCycleClass(
        "NOT_CRITICAL",
        face_multiset=S,
        reason=f"face multiset {S} admits no critical shape",
    )
