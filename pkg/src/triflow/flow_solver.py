"""Decide precoloring extension via balanced face charges and max-flow.

A *layout* assigns an integer charge to every internal face: a multiple
of 3 with the parity of the face length, bounded by the face length (so 0
on every 4-face).  A layout is *balanced* for a precoloring when the
charges sum to n_sink - n_source.  For each balanced layout a unit-capacity
network on the internal faces plus terminals s, t is built:

* internal faces adjacent in the dual are joined (one edge per shared
  graph edge, bridges excluded),
* an outer edge incident with face f contributes f-t when it is a sink
  edge and f-s when it is a source edge,
* a face with charge q > 0 gets q parallel s-edges, with q < 0 it gets
  -q parallel t-edges.

The precoloring extends iff for some balanced layout no s-t edge cut is
smaller than deg(s).  A saturating flow converts back into a coloring; a
small cut maps to a path or cycle obstruction in the graph itself.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

import numpy as np

from .coloring import (
    Coloring,
    DualOrientation,
    EdgeClass,
    classify_boundary_edges,
    coloring_from_orientation,
    fluxes_from_coloring,
    is_proper_total,
)
from .plane_graph import (
    Dart,
    Edge,
    GraphError,
    PlaneGraph,
    edge_key,
    faces_inside_cycle,
)


class CutShapeError(GraphError):
    """A supposedly normalized cut did not induce a path or cycle."""


# -- layouts --------------------------------------------------------------------


def allowed_charges(length: int) -> tuple[int, ...]:
    """Charges a face of this length admits (ascending)."""
    return tuple(
        c
        for c in range(-length, length + 1)
        if c % 3 == 0 and (c - length) % 2 == 0
    )


@dataclass(frozen=True)
class Layout:
    """Charge per internal face, keyed by face index in trace order."""

    charges: tuple[tuple[int, int], ...]

    def charge(self, face_index: int) -> int:
        for i, q in self.charges:
            if i == face_index:
                return q
        raise KeyError(face_index)

    @property
    def total(self) -> int:
        return sum(q for _, q in self.charges)

    def nonzero(self) -> tuple[tuple[int, int], ...]:
        return tuple((i, q) for i, q in self.charges if q != 0)

    def describe(self, G: PlaneGraph) -> str:
        parts = [
            f"f{i}={q:+d}"
            for i, q in self.charges
            if G.faces[i].length >= 5
        ]
        return " ".join(parts) if parts else "all-zero"


def layout_from_coloring(G: PlaneGraph, phi: Mapping[int, int]) -> Layout:
    """The layout induced by a proper total coloring (its face fluxes)."""
    flux = fluxes_from_coloring(G, phi)
    return Layout(tuple((f.index, flux[f.index]) for f in G.internal_faces))


def enumerate_layouts(G: PlaneGraph) -> Iterator[Layout]:
    faces = G.internal_faces
    choice_sets = [allowed_charges(f.length) for f in faces]
    for combo in itertools.product(*choice_sets):
        yield Layout(tuple((f.index, q) for f, q in zip(faces, combo)))


def achievable_totals(G: PlaneGraph) -> tuple[int, ...]:
    totals = {0}
    for f in G.internal_faces:
        totals = {t + c for t in totals for c in allowed_charges(f.length)}
    return tuple(sorted(totals))


def _balanced_layouts_cached(G: PlaneGraph, total: int) -> tuple[Layout, ...]:
    key = ("layouts", total)
    if key not in G._cache:
        G._cache[key] = tuple(
            q for q in enumerate_layouts(G) if q.total == total
        )
    return G._cache[key]


def enumerate_balanced_layouts(
    G: PlaneGraph, psi: Mapping[int, int]
) -> list[Layout]:
    """All layouts whose total charge equals n_sink - n_source for psi."""
    d = classify_boundary_edges(G, psi).imbalance
    return list(_balanced_layouts_cached(G, d))


# -- the auxiliary network --------------------------------------------------------


@dataclass(frozen=True)
class NetEdge:
    """One unit-capacity edge of the face network.

    kind 'dual' joins two internal faces across graph edge `edge`;
    'boundary' joins a face to a terminal for outer edge `edge`;
    'charge' is one of the parallel terminal edges paying for a face charge.
    """

    eid: int
    a: int | str
    b: int | str
    kind: str
    edge: Edge | None = None
    face: int | None = None


@dataclass(frozen=True)
class AuxNetwork:
    edges: tuple[NetEdge, ...]
    face_nodes: tuple[int, ...]

    @property
    def target(self) -> int:
        """Degree of s: the flow value a successful layout must reach."""
        return self.degree("s")

    def degree(self, node: int | str) -> int:
        return sum(1 for e in self.edges if node in (e.a, e.b))


def build_aux_network(
    G: PlaneGraph, layout: Layout, psi: Mapping[int, int]
) -> AuxNetwork:
    ec = classify_boundary_edges(G, psi)
    return build_aux_network_from_classes(G, layout, ec)


def build_aux_network_from_classes(
    G: PlaneGraph, layout: Layout, ec: EdgeClass
) -> AuxNetwork:
    edges: list[NetEdge] = []
    eid = 0
    for a, b, e in G.dual_edges:  # bridges (dual loops) carry no flow
        edges.append(NetEdge(eid, a, b, "dual", edge=e))
        eid += 1
    for e in G.outer_edges:
        f = G.internal_face_of_outer_edge(e)
        terminal = "t" if e in ec.sink_edges else "s"
        edges.append(NetEdge(eid, f, terminal, "boundary", edge=e))
        eid += 1
    for i, q in layout.charges:
        terminal = "s" if q > 0 else "t"
        for _ in range(abs(q)):
            edges.append(NetEdge(eid, i, terminal, "charge", face=i))
            eid += 1
    return AuxNetwork(tuple(edges), tuple(f.index for f in G.internal_faces))


# -- max flow ----------------------------------------------------------------------


def max_flow(net: AuxNetwork) -> tuple[int, dict[int, int]]:
    """Max s-t flow by shortest augmenting paths on unit capacities.

    Returns the value and the net flow per edge: +1 along (a, b) as
    stored, -1 the other way, 0 unused.
    """
    node_of: dict[int | str, int] = {}
    for e in net.edges:
        for x in (e.a, e.b):
            if x not in node_of:
                node_of[x] = len(node_of)
    assert "s" in node_of and "t" in node_of
    n = len(node_of)
    m = len(net.edges)
    ea = [0] * m
    eb = [0] * m
    incident: list[list[int]] = [[] for _ in range(n)]
    for i, e in enumerate(net.edges):
        a, b = node_of[e.a], node_of[e.b]
        ea[i], eb[i] = a, b
        incident[a].append(i)
        incident[b].append(i)
    s, t = node_of["s"], node_of["t"]
    flow = [0] * m
    parent_edge = [-1] * n
    parent_sign = [0] * n
    value = 0
    while True:
        labeled = [False] * n
        labeled[s] = True
        queue = [s]
        qi = 0
        while qi < len(queue) and not labeled[t]:
            x = queue[qi]
            qi += 1
            for ei in incident[x]:
                if ea[ei] == x:
                    y, sign = eb[ei], 1
                else:
                    y, sign = ea[ei], -1
                if not labeled[y] and sign * flow[ei] < 1:
                    labeled[y] = True
                    parent_edge[y] = ei
                    parent_sign[y] = sign
                    if y == t:
                        break
                    queue.append(y)
        if not labeled[t]:
            return value, {net.edges[i].eid: flow[i] for i in range(m)}
        x = t
        while x != s:
            ei = parent_edge[x]
            sg = parent_sign[x]
            flow[ei] += sg
            x = ea[ei] if sg == 1 else eb[ei]
        value += 1


# -- normalized cuts ----------------------------------------------------------------


def _cut_metrics(net: AuxNetwork) -> tuple[np.ndarray, np.ndarray, dict]:
    """Cut size and non-terminal edge count for every s-side face subset."""
    faces = net.face_nodes
    pos = {f: i for i, f in enumerate(faces)}
    if len(faces) > 22:
        raise GraphError("network too large for exhaustive cut normalization")
    masks = np.arange(1 << len(faces), dtype=np.int64)

    def side(node: int | str) -> np.ndarray:
        if node == "s":
            return np.ones(len(masks), dtype=bool)
        if node == "t":
            return np.zeros(len(masks), dtype=bool)
        return ((masks >> pos[node]) & 1).astype(bool)

    size = np.zeros(len(masks), dtype=np.int32)
    nonterm = np.zeros(len(masks), dtype=np.int32)
    for e in net.edges:
        crossing = side(e.a) ^ side(e.b)
        size += crossing
        if e.kind == "dual":
            nonterm += crossing
    return size, nonterm, pos


def _cut_edges_for_mask(net: AuxNetwork, mask: int, pos: dict) -> tuple[NetEdge, ...]:
    def on_s_side(node: int | str) -> bool:
        if node == "s":
            return True
        if node == "t":
            return False
        return bool((mask >> pos[node]) & 1)

    return tuple(e for e in net.edges if on_s_side(e.a) != on_s_side(e.b))


def _best_mask(
    net: AuxNetwork, candidates: np.ndarray, pos: dict
) -> tuple[NetEdge, ...]:
    best = None
    for mask in candidates.tolist():
        cut = _cut_edges_for_mask(net, mask, pos)
        key = tuple(e.eid for e in cut)
        if best is None or key < best[0]:
            best = (key, cut)
    assert best is not None
    return best[1]


def max_flow_min_cut(net: AuxNetwork) -> tuple[int, tuple[NetEdge, ...]]:
    """Max-flow value and a minimum cut, normalized deterministically.

    Among minimum cuts, one with as few non-terminal edges as possible is
    chosen, ties broken by the lexicographically smallest edge-id list.
    """
    value, _ = max_flow(net)
    size, nonterm, pos = _cut_metrics(net)
    assert int(size.min()) == value
    at_min = size == value
    nt_min = int(nonterm[at_min].min())
    candidates = np.nonzero(at_min & (nonterm == nt_min))[0]
    return value, _best_mask(net, candidates, pos)


def normalized_subtarget_cut(net: AuxNetwork) -> tuple[NetEdge, ...] | None:
    """Cut smaller than the target, minimizing non-terminal edges, then size.

    This is the selection whose non-terminal part is guaranteed to form a
    path or cycle in the graph; returns None when no such cut exists.
    """
    size, nonterm, pos = _cut_metrics(net)
    below = size < net.target
    if not bool(below.any()):
        return None
    nt_min = int(nonterm[below].min())
    pool = below & (nonterm == nt_min)
    sz_min = int(size[pool].min())
    candidates = np.nonzero(pool & (size == sz_min))[0]
    return _best_mask(net, candidates, pos)


# -- cut structures -----------------------------------------------------------------


@dataclass(frozen=True)
class CutStructure:
    """Obstruction extracted from a small cut, as a subgraph of G.

    `core_edges` are the cut's non-terminal edges mapped back to graph
    edges; they form either a path with both ends on the outer cycle (kind
    'path') or a cycle meeting the outer cycle in at most one vertex (kind
    'cycle').  The certificate numbers refer to the chosen outer arc
    `side_path` (path case) or to the cycle interior.
    """

    kind: str
    core_edges: tuple[Edge, ...]
    core_vertices: tuple[int, ...]
    side_path: tuple[int, ...] | None
    n_source: int | None
    n_sink: int | None
    total_charge: int

    @property
    def bound(self) -> int:
        return len(self.core_edges)

    @property
    def lhs(self) -> int:
        if self.kind == "path":
            assert self.n_source is not None and self.n_sink is not None
            return abs(self.n_source + self.total_charge - self.n_sink)
        return abs(self.total_charge)

    def satisfied(self) -> bool:
        return self.lhs > self.bound

    def describe(self) -> str:
        cut = " ".join(f"{u}-{v}" for u, v in self.core_edges)
        if self.kind == "path":
            cert = (
                f"kind=path ns={self.n_source} nt={self.n_sink} "
                f"m={self.total_charge} k0={self.bound}"
            )
        else:
            cert = f"kind=cycle m={self.total_charge} k0={self.bound}"
        return f"cut {cut} certificate {cert}"


def _path_or_cycle(
    edges: Sequence[Edge], on_outer: set[int]
) -> tuple[str, tuple[int, ...]]:
    """Classify an edge set as path/cycle and return its vertex order."""
    degree: dict[int, int] = {}
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        degree[u] = degree.get(u, 0) + 1
        degree[v] = degree.get(v, 0) + 1
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    odd = sorted(v for v, d in degree.items() if d == 1)
    if any(d > 2 for d in degree.values()):
        raise CutShapeError("cut core has a vertex of degree > 2")

    def walk(start: int, stop_when_back: bool) -> list[int]:
        seq = [start]
        prev = None
        cur = start
        while True:
            nxts = [w for w in sorted(adj[cur]) if w != prev]
            if not nxts:
                break
            prev, cur = cur, nxts[0]
            if stop_when_back and cur == start:
                break
            seq.append(cur)
        return seq

    if len(odd) == 2:
        seq = walk(odd[0], stop_when_back=False)
        if len(seq) != len(degree) or seq[-1] != odd[1]:
            raise CutShapeError("cut core is not a single path")
        if seq[0] not in on_outer or seq[-1] not in on_outer:
            raise CutShapeError("cut path does not end on the outer cycle")
        if any(v in on_outer for v in seq[1:-1]):
            raise CutShapeError("cut path has an internal vertex on the outer cycle")
        return "path", tuple(seq)
    if not odd:
        start = min(degree)
        seq = walk(start, stop_when_back=True)
        if len(seq) != len(degree):
            raise CutShapeError("cut core is not a single cycle")
        if sum(1 for v in seq if v in on_outer) > 1:
            raise CutShapeError("cut cycle meets the outer cycle more than once")
        return "cycle", tuple(seq)
    raise CutShapeError("cut core is neither a path nor a cycle")


def analyze_cut(
    G: PlaneGraph,
    psi: Mapping[int, int],
    layout: Layout,
    cut: Sequence[NetEdge],
) -> CutStructure:
    """Interpret a normalized sub-target cut as a path or cycle obstruction."""
    core = sorted(e.edge for e in cut if e.kind == "dual" and e.edge is not None)
    if not core:
        raise CutShapeError("cut contains no non-terminal edges")
    ec = classify_boundary_edges(G, psi)
    outer_set = set(G.outer)
    kind, seq = _path_or_cycle(core, outer_set)
    if kind == "cycle":
        inside = faces_inside_cycle(G, seq)
        m = sum(q for i, q in layout.charges if i in inside)
        return CutStructure(
            kind="cycle",
            core_edges=tuple(core),
            core_vertices=seq,
            side_path=None,
            n_source=None,
            n_sink=None,
            total_charge=m,
        )
    a, b = seq[0], seq[-1]
    ia, ib = G.outer.index(a), G.outer.index(b)
    if ia > ib:
        a, b, ia, ib = b, a, ib, ia
        seq = tuple(reversed(seq))
    k = len(G.outer)
    arc = tuple(G.outer[(ia + j) % k] for j in range(ib - ia + 1))
    other_arc = tuple(G.outer[(ib + j) % k] for j in range(k - (ib - ia) + 1))

    def certificate(p: tuple[int, ...], core_back: list[int]) -> tuple[int, int, int]:
        edges_p = [edge_key(p[i], p[i + 1]) for i in range(len(p) - 1)]
        ns = sum(1 for e in edges_p if e in ec.source_edges)
        nt = sum(1 for e in edges_p if e in ec.sink_edges)
        cycle = list(p) + core_back
        inside = faces_inside_cycle(G, cycle)
        m = sum(q for i, q in layout.charges if i in inside)
        return ns, nt, m

    interior = list(seq[1:-1])  # core path interior, ordered from a to b
    ns, nt, m = certificate(arc, list(reversed(interior)))
    ns2, nt2, m2 = certificate(other_arc, interior)
    assert abs(ns + m - nt) == abs(ns2 + m2 - nt2), "arc certificates disagree"
    return CutStructure(
        kind="path",
        core_edges=tuple(core),
        core_vertices=seq,
        side_path=arc,
        n_source=ns,
        n_sink=nt,
        total_charge=m,
    )


# -- the decision procedure ----------------------------------------------------------


@dataclass(frozen=True)
class LayoutFailure:
    layout: Layout
    flow_value: int
    cut: tuple[NetEdge, ...]
    structure: CutStructure | None


@dataclass(frozen=True)
class ExtensionVerdict:
    extends: bool
    witness: Coloring | None = None
    layout: Layout | None = None
    failures: tuple[LayoutFailure, ...] = ()
    imbalance: int | None = None
    achievable: tuple[int, ...] = ()


def _orient_network_edges(
    net: AuxNetwork, flow: dict[int, int]
) -> dict[int, tuple[int | str, int | str]]:
    """Direction (tail, head) per edge: flow direction, unused edges by
    deterministic cycle decomposition (their degrees are even)."""
    directions: dict[int, tuple[int | str, int | str]] = {}
    unused: dict[int | str, list[NetEdge]] = {}
    for e in net.edges:
        if flow[e.eid] == +1:
            directions[e.eid] = (e.a, e.b)
        elif flow[e.eid] == -1:
            directions[e.eid] = (e.b, e.a)
        else:
            unused.setdefault(e.a, []).append(e)
            unused.setdefault(e.b, []).append(e)
    for lst in unused.values():
        lst.sort(key=lambda e: e.eid)
    remaining = {e.eid for es in unused.values() for e in es}
    while remaining:
        start_edge = min(
            (e for es in unused.values() for e in es if e.eid in remaining),
            key=lambda e: e.eid,
        )
        node = start_edge.a
        start_node = node
        while True:
            cands = [e for e in unused.get(node, ()) if e.eid in remaining]
            if not cands:
                # even degrees: a walk can only get stuck where it started
                assert node == start_node, "unused edges do not close into trails"
                break
            nxt = cands[0]
            other = nxt.b if nxt.a == node else nxt.a
            directions[nxt.eid] = (node, other)
            remaining.discard(nxt.eid)
            node = other
    return directions


def _witness_from_flow(
    G: PlaneGraph,
    net: AuxNetwork,
    flow: dict[int, int],
    psi: Mapping[int, int],
) -> Coloring:
    directions = _orient_network_edges(net, flow)
    forward: dict[Edge, Dart] = {}
    for e in net.edges:
        if e.kind != "dual" or e.edge is None:
            continue
        tail, _head = directions[e.eid]
        u, v = e.edge
        # a network edge leaving a face marks that face's dart as forward
        forward[e.edge] = (u, v) if G.face_of_dart[(u, v)] == tail else (v, u)
    k = len(G.outer)
    ec = classify_boundary_edges(G, psi)
    for i in range(k):
        a, b = G.outer[i], G.outer[(i + 1) % k]
        e = edge_key(a, b)
        forward[e] = (b, a) if e in ec.sink_edges else (a, b)
    for e in G.edges:
        if e not in forward:  # bridge: either direction yields a proper coloring
            forward[e] = e
    orientation = DualOrientation(tuple(sorted(forward.items())))
    seed = G.outer[0]
    phi = coloring_from_orientation(G, orientation, seed, psi[seed])
    assert is_proper_total(G, phi), "flow witness is not proper"
    assert all(phi[v] == psi[v] for v in G.outer), "flow witness disagrees on C"
    return phi


def decide_extension(
    G: PlaneGraph,
    psi: Mapping[int, int],
    want_witness: bool = True,
    want_cuts: bool = True,
) -> ExtensionVerdict:
    """Decide whether psi extends to a proper 3-coloring of G.

    EXTENDS comes with a verified witness coloring; NOT_EXTENDS carries,
    for every balanced layout, a sub-target cut and its path/cycle
    obstruction, or the imbalance when no balanced layout exists.
    """
    ec = classify_boundary_edges(G, psi)
    d = ec.imbalance
    balanced = _balanced_layouts_cached(G, d)
    if not balanced:
        return ExtensionVerdict(
            extends=False, imbalance=d, achievable=achievable_totals(G)
        )
    failures: list[LayoutFailure] = []
    for q in balanced:
        net = build_aux_network_from_classes(G, q, ec)
        assert net.degree("s") == net.degree("t"), "balanced layout, unequal degrees"
        value, flow = max_flow(net)
        if value == net.target:
            witness = _witness_from_flow(G, net, flow, psi) if want_witness else None
            return ExtensionVerdict(extends=True, witness=witness, layout=q)
        if want_cuts:
            _, min_cut = max_flow_min_cut(net)
            try:
                structure = analyze_cut(G, psi, q, min_cut)
                cut_used = min_cut
            except CutShapeError:
                sub = normalized_subtarget_cut(net)
                assert sub is not None
                structure = analyze_cut(G, psi, q, sub)
                cut_used = sub
            failures.append(LayoutFailure(q, value, cut_used, structure))
        else:
            failures.append(LayoutFailure(q, value, (), None))
    return ExtensionVerdict(extends=False, failures=tuple(failures), imbalance=d)


def verdict_report(G: PlaneGraph, verdict: ExtensionVerdict) -> str:
    """Stable line-oriented report for CLI output and tests."""
    lines = [f"verdict {'EXTENDS' if verdict.extends else 'NOT_EXTENDS'}"]
    if verdict.extends:
        if verdict.layout is not None:
            lines.append(f"layout {verdict.layout.describe(G)}")
        if verdict.witness is not None:
            for v in sorted(verdict.witness):
                lines.append(f"witness color {v} {verdict.witness[v]}")
    elif not verdict.failures:
        ach = ",".join(map(str, verdict.achievable))
        lines.append(f"imbalance d={verdict.imbalance} achievable={ach}")
    else:
        for fail in verdict.failures:
            desc = fail.layout.describe(G)
            if fail.structure is not None:
                lines.append(f"layout {desc} {fail.structure.describe()}")
            else:
                lines.append(f"layout {desc} flow {fail.flow_value}")
    return "\n".join(lines) + "\n"
