"""Proper 3-colorings, the brute-force extension oracle, and the
correspondence between colorings and orientations of the dual graph.

Conventions (fixed once, used consistently everywhere):

* Colors are 1, 2, 3; color arithmetic is mod 3.
* For a total coloring, the *forward dart* of edge uv is the dart (u, v)
  with color(u) - color(v) == 1 (mod 3); exactly one of the two darts
  qualifies.  The dual edge points into the face containing the forward
  dart (its *head face*).
* The *flux* of a face is (#forward darts on its walk) - (#backward
  darts); it is always a multiple of 3, has the parity of the face length
  and absolute value at most the face length.
* An outer edge (c_i, c_{i+1}) (clockwise outer order) is a *sink* edge
  when psi(c_{i+1}) - psi(c_i) == 1 (mod 3), else a *source* edge.  With
  these choices, for every total coloring the internal-face fluxes sum to
  n_sink - n_source, so the face charges induced by a coloring always
  balance the boundary.

Replacing every rotation list by its reverse mirrors the drawing and
swaps source with sink everywhere; nothing observable changes.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, Mapping

from .plane_graph import Dart, Edge, Face, GraphError, PlaneGraph, edge_key

Coloring = dict[int, int]

COLORS = (1, 2, 3)


class InconsistentOrientationError(GraphError):
    """The given dual orientation does not come from any proper coloring."""


def _step(diff: int) -> int:
    return diff % 3


def validate_outer_coloring(G: PlaneGraph, psi: Mapping[int, int]) -> None:
    if set(psi) != set(G.outer):
        raise ValueError("precoloring domain must be exactly the outer cycle")
    k = len(G.outer)
    for i in range(k):
        a, b = G.outer[i], G.outer[(i + 1) % k]
        if psi[a] not in COLORS or psi[b] not in COLORS:
            raise ValueError("colors must be in {1,2,3}")
        if psi[a] == psi[b]:
            raise ValueError(f"precoloring not proper on outer edge {a}-{b}")


def is_proper_total(G: PlaneGraph, phi: Mapping[int, int]) -> bool:
    if set(phi) != set(G.vertices):
        return False
    return all(phi[u] != phi[v] for u, v in G.edges)


def enumerate_outer_colorings(G: PlaneGraph) -> list[Coloring]:
    """All proper 3-colorings of the outer cycle, one per color permutation.

    Canonical representatives fix color 1 on the first outer vertex and
    color 2 on its clockwise successor.
    """
    k = len(G.outer)
    out: list[Coloring] = []
    seq = [0] * k
    seq[0], seq[1] = 1, 2

    def fill(i: int) -> None:
        if i == k:
            if seq[-1] != seq[0]:
                out.append({G.outer[j]: seq[j] for j in range(k)})
            return
        for c in COLORS:
            if c != seq[i - 1]:
                seq[i] = c
                fill(i + 1)

    fill(2)
    return out


# -- brute-force extension oracle ----------------------------------------------


def _bfs_internal_order(G: PlaneGraph) -> tuple[int, ...]:
    """Internal vertices ordered by BFS distance from the outer cycle."""
    return G.bfs_internal_order


def extend_on_adjacency(
    order: tuple[int, ...],
    neighbours: Mapping[int, tuple[int, ...]],
    psi: Mapping[int, int],
) -> Coloring | None:
    """Deterministic lowest-color-first backtracking over `order`.

    `neighbours` may describe any graph (it is also used for edge-deleted
    graphs during criticality checks); vertices missing from `order` keep
    their psi color.
    """
    color = dict(psi)
    # psi is only guaranteed proper on the outer cycle; edges of G between
    # precolored vertices (chords) must be checked explicitly
    for v in color:
        for w in neighbours[v]:
            if w in color and color[w] == color[v]:
                return None

    def place(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        taken = {color[w] for w in neighbours[v] if w in color}
        for c in COLORS:
            if c not in taken:
                color[v] = c
                if place(i + 1):
                    return True
                del color[v]
        return False

    return color if place(0) else None


def brute_force_extend(G: PlaneGraph, psi: Mapping[int, int]) -> Coloring | None:
    """A proper total coloring agreeing with psi, or None if none exists."""
    validate_outer_coloring(G, psi)
    return extend_on_adjacency(G.bfs_internal_order, G.sorted_adj, psi)


def all_extensions(G: PlaneGraph, psi: Mapping[int, int]) -> Iterator[Coloring]:
    """Every total extension of psi, by exhausting all internal assignments.

    Intentionally naive; used as an independent check of the oracle.
    """
    validate_outer_coloring(G, psi)
    internal = [v for v in G.vertices if v not in psi]

    def rec(i: int, color: Coloring) -> Iterator[Coloring]:
        if i == len(internal):
            if is_proper_total(G, color):
                yield dict(color)
            return
        for c in COLORS:
            color[internal[i]] = c
            yield from rec(i + 1, color)
        del color[internal[i]]

    yield from rec(0, dict(psi))


# -- boundary edge classification -----------------------------------------------


@dataclass(frozen=True)
class EdgeClass:
    """Source/sink split of the outer-cycle edges under a precoloring."""

    source_edges: frozenset[Edge]
    sink_edges: frozenset[Edge]

    @property
    def n_source(self) -> int:
        return len(self.source_edges)

    @property
    def n_sink(self) -> int:
        return len(self.sink_edges)

    @property
    def imbalance(self) -> int:
        """n_sink - n_source; the total charge a balanced layout must carry."""
        return self.n_sink - self.n_source


def classify_boundary_edges(G: PlaneGraph, psi: Mapping[int, int]) -> EdgeClass:
    """Split outer edges into source and sink from the precoloring alone."""
    validate_outer_coloring(G, psi)
    k = len(G.outer)
    sources, sinks = [], []
    for i in range(k):
        a, b = G.outer[i], G.outer[(i + 1) % k]
        if _step(psi[b] - psi[a]) == 1:
            sinks.append(edge_key(a, b))
        else:
            sources.append(edge_key(a, b))
    ec = EdgeClass(frozenset(sources), frozenset(sinks))
    assert ec.imbalance % 3 == 0
    return ec


# -- coloring <-> dual orientation ----------------------------------------------


@dataclass(frozen=True)
class DualOrientation:
    """Orientation of the dual graph, stored as the forward dart per edge.

    The head face of an edge is the face containing its forward dart; for
    a bridge both darts lie on the same face and the dart itself carries
    the remaining information.
    """

    forward: tuple[tuple[Edge, Dart], ...]

    def forward_dart(self, e: Edge) -> Dart:
        return dict(self.forward)[e]

    def as_dict(self) -> dict[Edge, Dart]:
        return dict(self.forward)


def orient_dual(G: PlaneGraph, phi: Mapping[int, int]) -> DualOrientation:
    """Dual orientation induced by a proper total coloring."""
    if not is_proper_total(G, phi):
        raise ValueError("coloring is not a proper total coloring")
    forward = []
    for u, v in G.edges:
        d = (u, v) if _step(phi[u] - phi[v]) == 1 else (v, u)
        forward.append((edge_key(u, v), d))
    return DualOrientation(tuple(forward))


def face_flux(G: PlaneGraph, orientation: DualOrientation, face: Face) -> int:
    """In-degree minus out-degree of the face in the oriented dual."""
    fwd = orientation.as_dict()
    total = 0
    for d in face.darts:
        total += 1 if fwd[edge_key(*d)] == d else -1
    return total


def fluxes_from_coloring(G: PlaneGraph, phi: Mapping[int, int]) -> dict[int, int]:
    """Flux of every face (by face index) directly from a total coloring."""
    out = {}
    for f in G.faces:
        total = 0
        for u, v in f.darts:
            total += 1 if _step(phi[u] - phi[v]) == 1 else -1
        out[f.index] = total
    return out


def coloring_from_orientation(
    G: PlaneGraph, orientation: DualOrientation, seed_vertex: int, seed_color: int
) -> Coloring:
    """Reconstruct the coloring inducing `orientation`, anchored at a seed.

    Raises InconsistentOrientationError when some face flux is not a
    multiple of 3 (the orientation then corresponds to no coloring).
    """
    fwd = orientation.as_dict()
    if set(fwd) != set(G.edges):
        raise ValueError("orientation must cover every edge exactly once")
    for f in G.faces:
        total = sum(1 if fwd[edge_key(*d)] == d else -1 for d in f.darts)
        if total % 3 != 0:
            raise InconsistentOrientationError(
                f"face {f.index} has flux {total}, not divisible by 3"
            )
    color: Coloring = {seed_vertex: seed_color}
    queue = deque([seed_vertex])
    while queue:
        u = queue.popleft()
        for v in sorted(G.adj[u]):
            # forward dart (a, b) means color(a) - color(b) == 1 (mod 3)
            c = (
                (color[u] - 1 - 1) % 3 + 1
                if fwd[edge_key(u, v)] == (u, v)
                else (color[u] - 1 + 1) % 3 + 1
            )
            if v in color:
                if color[v] != c:
                    raise InconsistentOrientationError(
                        f"conflicting color at vertex {v}"
                    )
            else:
                color[v] = c
                queue.append(v)
    return color
