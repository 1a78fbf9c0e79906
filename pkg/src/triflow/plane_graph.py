"""Plane-embedded graphs as rotation systems.

A graph is stored as a clockwise rotation system: for every vertex, the
cyclic order of its neighbours as seen in the drawing.  A dart is an
ordered pair (u, v), i.e. the half of edge uv that starts at u.  Faces are
the orbits of the map (u, v) -> (v, w) where w follows u in the clockwise
rotation at v; with clockwise rotation lists the outer face is traced
along the outer cycle in its given order, internal faces are traced
counterclockwise, and every face lies to the left of its darts.

Only simple, connected, triangle-free graphs whose outer face is bounded
by a simple cycle are accepted; every internal face must have length at
least 4 (bridges count twice on their face walk).
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

Dart = tuple[int, int]
Edge = tuple[int, int]


class GraphError(Exception):
    """An invariant of the plane-graph representation is violated."""


class FormatError(GraphError):
    """Malformed graph file; carries the offending 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Face:
    """One face orbit: `vertices[i]` is the origin of `darts[i]`."""

    index: int
    darts: tuple[Dart, ...]
    is_outer: bool

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(d[0] for d in self.darts)

    @property
    def length(self) -> int:
        return len(self.darts)

    @property
    def edges(self) -> frozenset[Edge]:
        return frozenset(edge_key(*d) for d in self.darts)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        kind = "outer" if self.is_outer else "internal"
        return f"Face({self.index}, {kind}, {'-'.join(map(str, self.vertices))})"


class PlaneGraph:
    """Immutable plane graph; every derived structure is computed upfront."""

    def __init__(self, rotations: Mapping[int, Sequence[int]], outer: Sequence[int]):
        self.rot: dict[int, tuple[int, ...]] = {
            v: tuple(ns) for v, ns in sorted(rotations.items())
        }
        self.outer: tuple[int, ...] = tuple(outer)
        self._validate_structure()
        self.n = len(self.rot)
        self.adj: dict[int, frozenset[int]] = {
            v: frozenset(ns) for v, ns in self.rot.items()
        }
        self.edges: tuple[Edge, ...] = tuple(
            sorted({edge_key(v, w) for v in self.rot for w in self.rot[v]})
        )
        self._rot_index: dict[Dart, int] = {}
        for v, ns in self.rot.items():
            for i, w in enumerate(ns):
                self._rot_index[(v, w)] = i
        self._check_connected()
        self._check_triangle_free()
        self.faces: tuple[Face, ...] = self._trace_all_faces()
        self.face_of_dart: dict[Dart, int] = {
            d: f.index for f in self.faces for d in f.darts
        }
        self._check_geometry()
        # frequently reused derived data (the graph is immutable)
        outer_set = set(self.outer_edges)
        self.dual_edges: tuple[tuple[int, int, Edge], ...] = tuple(
            (min(fs), max(fs), e)
            for e in self.edges
            if e not in outer_set
            for fs in [self.edge_faces(e)]
            if fs[0] != fs[1]
        )
        self.sorted_adj: dict[int, tuple[int, ...]] = {
            v: tuple(sorted(ns)) for v, ns in self.adj.items()
        }
        self.bfs_internal_order: tuple[int, ...] = self._bfs_order()
        self._cache: dict = {}

    def _bfs_order(self) -> tuple[int, ...]:
        dist = {v: 0 for v in self.outer}
        queue = deque(self.outer)
        order = []
        while queue:
            v = queue.popleft()
            for w in self.sorted_adj[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    queue.append(w)
                    order.append(w)
        return tuple(order)

    # -- construction checks -------------------------------------------------

    def _validate_structure(self) -> None:
        if len(self.outer) < 4:
            raise GraphError("outer cycle must have length >= 4")
        if len(set(self.outer)) != len(self.outer):
            raise GraphError("outer walk not a cycle: repeated vertex")
        names = set(self.rot)
        if names != set(range(1, len(names) + 1)):
            raise GraphError("vertices must be named 1..n without gaps")
        for v, ns in self.rot.items():
            if not ns:
                raise GraphError(f"vertex {v} has no neighbours")
            if v in ns:
                raise GraphError(f"loop at vertex {v}")
            if len(set(ns)) != len(ns):
                raise GraphError(f"parallel edge in rotation of vertex {v}")
            for w in ns:
                if w not in self.rot:
                    raise GraphError(f"unknown neighbour {w} of vertex {v}")
                if v not in self.rot[w]:
                    raise GraphError(f"edge {v}-{w} missing from rotation of {w}")
        for a, b in zip(self.outer, self.outer[1:] + self.outer[:1]):
            if b not in self.rot[a]:
                raise GraphError(f"outer walk not a cycle: missing edge {a}-{b}")

    def _check_connected(self) -> None:
        seen = {self.outer[0]}
        queue = deque(seen)
        while queue:
            v = queue.popleft()
            for w in self.adj[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        if len(seen) != len(self.rot):
            raise GraphError("disconnected")

    def _check_triangle_free(self) -> None:
        for u, v in self.edges:
            common = self.adj[u] & self.adj[v]
            if common:
                w = min(common)
                raise GraphError(f"triangle found: {u} {v} {w}")

    def _trace_all_faces(self) -> tuple[Face, ...]:
        all_darts = sorted(self._rot_index)
        seen: set[Dart] = set()
        orbits: list[tuple[Dart, ...]] = []
        outer_dart = (self.outer[0], self.outer[1])
        for start in [outer_dart] + all_darts:
            if start in seen:
                continue
            orbit = [start]
            seen.add(start)
            d = self._next_in_face(start)
            while d != start:
                orbit.append(d)
                seen.add(d)
                d = self._next_in_face(d)
            orbits.append(tuple(orbit))
        return tuple(
            Face(index=i, darts=o, is_outer=(i == 0)) for i, o in enumerate(orbits)
        )

    def _next_in_face(self, d: Dart) -> Dart:
        u, v = d
        ns = self.rot[v]
        w = ns[(self._rot_index[(v, u)] + 1) % len(ns)]
        return (v, w)

    def _check_geometry(self) -> None:
        outer_face = self.faces[0]
        if outer_face.vertices != self.outer:
            raise GraphError(
                "declared outer cycle does not bound a face "
                "(check clockwise orientation of rotations)"
            )
        n_edges = len(self.edges)
        if self.n - n_edges + len(self.faces) != 2:
            raise GraphError("rotation system is not a sphere embedding (Euler check)")
        if sum(f.length for f in self.faces) != 2 * n_edges:
            raise GraphError("face walks do not cover every dart exactly once")
        for f in self.faces[1:]:
            if f.length < 4:
                raise GraphError(f"internal face of length {f.length} < 4")

    # -- basic queries --------------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def internal_faces(self) -> tuple[Face, ...]:
        return self.faces[1:]

    @property
    def outer_dart(self) -> Dart:
        return (self.outer[0], self.outer[1])

    @property
    def outer_edges(self) -> tuple[Edge, ...]:
        k = len(self.outer)
        return tuple(
            edge_key(self.outer[i], self.outer[(i + 1) % k]) for i in range(k)
        )

    def twin(self, d: Dart) -> Dart:
        return (d[1], d[0])

    def next_clockwise(self, d: Dart) -> Dart:
        u, v = d
        ns = self.rot[u]
        return (u, ns[(self._rot_index[d] + 1) % len(ns)])

    def degree(self, v: int) -> int:
        return len(self.rot[v])

    def edge_faces(self, e: Edge) -> tuple[int, int]:
        """Indices of the two faces on either side of e (equal for a bridge)."""
        u, v = e
        return (self.face_of_dart[(u, v)], self.face_of_dart[(v, u)])

    def is_outer_edge(self, e: Edge) -> bool:
        return 0 in self.edge_faces(e)

    def internal_face_of_outer_edge(self, e: Edge) -> int:
        a, b = self.edge_faces(e)
        return b if a == 0 else a


# -- parsing and serialisation ------------------------------------------------


def parse_plane_graph(text: str) -> PlaneGraph:
    """Parse the line-oriented graph format.

    Format::

        vertices <n>            # vertices are named 1..n
        outer <v1> ... <vk>     # outer cycle in clockwise order
        rot <v>: <u1> ... <ud>  # neighbours of v in clockwise order

    '#' starts a comment, blank lines are skipped, section order is fixed.
    """
    n = None
    outer: list[int] | None = None
    rotations: dict[int, list[int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        head = tokens[0]
        if head == "vertices":
            if n is not None:
                raise FormatError(lineno, "duplicate 'vertices' line")
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise FormatError(lineno, "expected 'vertices <n>'")
            n = int(tokens[1])
        elif head == "outer":
            if n is None:
                raise FormatError(lineno, "'outer' before 'vertices'")
            if outer is not None:
                raise FormatError(lineno, "duplicate 'outer' line")
            outer = _parse_ints(tokens[1:], lineno, n)
        elif head == "rot":
            if outer is None:
                raise FormatError(lineno, "'rot' before 'outer'")
            if len(tokens) < 3 or not tokens[1].endswith(":"):
                raise FormatError(lineno, "expected 'rot <v>: <u1> <u2> ...'")
            name = tokens[1][:-1]
            if not name.isdigit():
                raise FormatError(lineno, f"bad vertex name {name!r}")
            v = int(name)
            if not 1 <= v <= n:
                raise FormatError(lineno, f"vertex {v} out of range 1..{n}")
            if v in rotations:
                raise FormatError(lineno, f"duplicate rotation for vertex {v}")
            rotations[v] = _parse_ints(tokens[2:], lineno, n)
        else:
            raise FormatError(lineno, f"unknown directive {head!r}")
    if n is None or outer is None:
        raise FormatError(1, "missing 'vertices' or 'outer' section")
    if set(rotations) != set(range(1, n + 1)):
        missing = sorted(set(range(1, n + 1)) - set(rotations))
        raise FormatError(1, f"missing rotation lines for vertices {missing}")
    return PlaneGraph(rotations, outer)


def _parse_ints(tokens: list[str], lineno: int, n: int) -> list[int]:
    out = []
    for t in tokens:
        if not t.isdigit():
            raise FormatError(lineno, f"expected integer, got {t!r}")
        x = int(t)
        if not 1 <= x <= n:
            raise FormatError(lineno, f"vertex {x} out of range 1..{n}")
        out.append(x)
    return out


def to_text(G: PlaneGraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"vertices {G.n}")
    lines.append("outer " + " ".join(map(str, G.outer)))
    for v in G.vertices:
        lines.append(f"rot {v}: " + " ".join(map(str, G.rot[v])))
    return "\n".join(lines) + "\n"


def plane_graph_from_faces(
    outer: Sequence[int], internal_faces: Iterable[Sequence[int]]
) -> PlaneGraph:
    """Build a PlaneGraph from its face cycles.

    `outer` is the outer cycle in clockwise order; internal faces may be
    given in either orientation - orientations are resolved by propagation
    from the outer face (each dart must be used by exactly one face walk).
    """
    faces = [tuple(f) for f in internal_faces]
    oriented: dict[int, tuple[int, ...]] = {}
    used_darts: set[Dart] = set()

    def darts_of(cycle: Sequence[int]) -> list[Dart]:
        return [
            (cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))
        ]

    # Each edge is traversed by exactly two face walks, once per direction.
    # The outer walk is fixed; a face sharing an edge with an oriented face
    # has its orientation forced, and in a disk the face adjacency is
    # connected, so propagation orients everything.
    used_darts.update(darts_of(outer))
    pending = set(range(len(faces)))
    while pending:
        progressed = False
        for idx in sorted(pending):
            fwd = faces[idx]
            rev = tuple(reversed(fwd))
            fwd_bad = any(d in used_darts for d in darts_of(fwd))
            rev_bad = any(d in used_darts for d in darts_of(rev))
            if fwd_bad and rev_bad:
                raise GraphError("face list cannot be consistently oriented")
            if not (fwd_bad or rev_bad):
                continue  # not yet anchored to an oriented neighbour
            pick = rev if fwd_bad else fwd
            oriented[idx] = pick
            used_darts.update(darts_of(pick))
            pending.discard(idx)
            progressed = True
        if not progressed:
            raise GraphError("face list does not describe a single disk")

    successor: dict[int, dict[int, int]] = {}

    def add_corners(trace: Sequence[int]) -> None:
        L = len(trace)
        for i in range(L):
            x, u, y = trace[i], trace[(i + 1) % L], trace[(i + 2) % L]
            successor.setdefault(u, {})
            if x in successor[u]:
                raise GraphError(f"conflicting corners at vertex {u}")
            successor[u][x] = y

    add_corners(list(outer))
    for idx in range(len(faces)):
        add_corners(list(oriented[idx]))

    rotations: dict[int, list[int]] = {}
    for v, succ in successor.items():
        start = min(succ)
        cycle = [start]
        while True:
            nxt = succ[cycle[-1]]
            if nxt == start:
                break
            if nxt in cycle or len(cycle) > len(succ):
                raise GraphError(f"rotation at vertex {v} is not a single cycle")
            cycle.append(nxt)
        if len(cycle) != len(succ):
            raise GraphError(f"rotation at vertex {v} is not a single cycle")
        rotations[v] = cycle
    return PlaneGraph(rotations, outer)


# -- face and cycle queries ----------------------------------------------------


def trace_faces(G: PlaneGraph) -> list[Face]:
    """All faces of G; faces[0] is the outer face."""
    return list(G.faces)


def face_length_multiset(G: PlaneGraph) -> tuple[int, ...]:
    """Sorted lengths of the internal faces of length >= 5."""
    return tuple(sorted(f.length for f in G.internal_faces if f.length >= 5))


def simple_cycles_up_to(G: PlaneGraph, max_len: int) -> list[tuple[int, ...]]:
    """All simple cycles of length <= max_len, one orientation/rotation each.

    Each cycle is reported starting at its smallest vertex, second vertex
    smaller than the last (deterministic canonical representative).
    """
    cycles: list[tuple[int, ...]] = []
    adj = {v: sorted(G.adj[v]) for v in G.vertices}

    def extend(start: int, path: list[int], members: set[int]) -> None:
        v = path[-1]
        for w in adj[v]:
            if w == start and len(path) >= 3:
                if path[1] < path[-1]:
                    cycles.append(tuple(path))
            elif w > start and w not in members and len(path) < max_len:
                path.append(w)
                members.add(w)
                extend(start, path, members)
                path.pop()
                members.remove(w)

    for s in G.vertices:
        extend(s, [s], {s})
    return cycles


def _cycle_edges(cycle: Sequence[int]) -> frozenset[Edge]:
    L = len(cycle)
    return frozenset(edge_key(cycle[i], cycle[(i + 1) % L]) for i in range(L))


def faces_inside_cycle(G: PlaneGraph, cycle: Sequence[int]) -> set[int]:
    """Indices of internal faces drawn in the open disk bounded by `cycle`.

    Flood-fills face adjacency from the outer face, never crossing an edge
    of the cycle; everything not reached lies inside.
    """
    blocked = _cycle_edges(cycle)
    for e in blocked:
        if e not in set(G.edges):
            raise GraphError(f"not a cycle of the graph: missing edge {e[0]}-{e[1]}")
    reached = {0}
    queue = deque([0])
    crossings: dict[int, list[int]] = {}
    for e in G.edges:
        if e in blocked:
            continue
        a, b = G.edge_faces(e)
        crossings.setdefault(a, []).append(b)
        crossings.setdefault(b, []).append(a)
    while queue:
        f = queue.popleft()
        for g in crossings.get(f, ()):
            if g not in reached:
                reached.add(g)
                queue.append(g)
    # the face bounded by the cycle itself, when facial, counts as inside:
    # faces are open cells, so it is drawn in the open disk
    return {f.index for f in G.internal_faces} - reached


def is_cycle_of(G: PlaneGraph, cycle: Sequence[int]) -> bool:
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        return False
    L = len(cycle)
    edges = set(G.edges)
    return all(
        edge_key(cycle[i], cycle[(i + 1) % L]) in edges for i in range(L)
    )


def cycle_interior(G: PlaneGraph, cycle: Sequence[int]) -> Counter:
    """Multiset of internal face lengths drawn strictly inside `cycle`.

    Empty iff the cycle bounds a face (the bounded face itself is the
    disk, not content of it).  The outer cycle is rejected.
    """
    if not is_cycle_of(G, cycle):
        raise GraphError("not a cycle of the graph")
    edges = _cycle_edges(cycle)
    if edges == _cycle_edges(G.outer):
        raise GraphError("cycle equals the outer cycle")
    inside = faces_inside_cycle(G, cycle)
    return Counter(
        G.faces[i].length for i in inside if G.faces[i].edges != edges
    )


def separating_cycles_up_to(G: PlaneGraph, max_len: int) -> list[tuple[int, ...]]:
    """Cycles of length <= max_len that neither bound a face nor equal C.

    In a disk embedding such a cycle always has a vertex or an edge drawn
    strictly inside it.
    """
    if max_len < 4:
        raise ValueError("max_len must be >= 4")
    face_edge_sets = {f.edges for f in G.faces}
    outer_edges = frozenset(_cycle_edges(G.outer))
    out = []
    for cyc in simple_cycles_up_to(G, max_len):
        es = _cycle_edges(cyc)
        if es == outer_edges or es in face_edge_sets:
            continue
        out.append(cyc)
    return out


def interior_content(G: PlaneGraph, cycle: Sequence[int]) -> tuple[set[int], set[Edge]]:
    """Vertices and edges drawn strictly inside `cycle` (region test)."""
    inside = faces_inside_cycle(G, cycle)
    cyc_vertices = set(cycle)
    cyc_edges = _cycle_edges(cycle)
    verts: set[int] = set()
    edges: set[Edge] = set()
    for fi in inside:
        f = G.faces[fi]
        verts.update(set(f.vertices) - cyc_vertices)
        edges.update(f.edges - cyc_edges)
    return verts, edges


def cycle_graph(k: int) -> PlaneGraph:
    """The bare k-cycle with vertices 1..k, outer cycle 1..k clockwise."""
    rotations = {
        i: [i % k + 1, (i - 2) % k + 1] for i in range(1, k + 1)
    }
    return PlaneGraph(rotations, list(range(1, k + 1)))
