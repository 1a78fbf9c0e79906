"""Exhaustive generation of small triangle-free plane graphs with a given
outer cycle, plus hand-built named fixtures.

Generation works by recursive face splitting: starting from the bare
outer cycle (one internal face), an internal face is split by a new path
between two distinct boundary vertices, drawn inside the face.  This
produces exactly the 2-connected fillings; graphs with cut vertices in
the interior are out of scope for the census.  Duplicates are removed by
a canonical form over all rotations/reflections of the outer cycle.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, Sequence

from .plane_graph import PlaneGraph, plane_graph_from_faces


@dataclass(frozen=True)
class GenSpec:
    """Budgeted description of a generation run."""

    outer_length: int
    max_internal_vertices: int
    max_faces: int | None = None
    girth_floor: int = 4

    def __post_init__(self) -> None:
        if not 4 <= self.outer_length <= 8:
            raise ValueError("outer_length must be in 4..8")
        if self.max_internal_vertices < 0:
            raise ValueError("max_internal_vertices must be >= 0")
        if self.girth_floor not in (4, 5):
            raise ValueError("girth_floor must be 4 or 5")


class _State:
    """Mutable embedding under construction: rotations plus face cycles."""

    __slots__ = ("rot", "faces", "n")

    def __init__(self, rot: dict[int, list[int]], faces: list[tuple[int, ...]], n: int):
        self.rot = rot
        self.faces = faces  # internal faces as counterclockwise vertex cycles
        self.n = n

    def clone(self) -> "_State":
        return _State(
            {v: list(ns) for v, ns in self.rot.items()},
            list(self.faces),
            self.n,
        )

    def distance(self, a: int, b: int) -> int:
        if a == b:
            return 0
        dist = {a: 0}
        queue = deque([a])
        while queue:
            v = queue.popleft()
            for w in self.rot[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    if w == b:
                        return dist[w]
                    queue.append(w)
        return 10**9


def _initial_state(k: int) -> _State:
    rot = {i: [i % k + 1, (i - 2) % k + 1] for i in range(1, k + 1)}
    inner = tuple(range(k, 0, -1))  # counterclockwise = reversed outer
    return _State(rot, [inner], k)


def _split(state: _State, face_pos: int, i: int, j: int, length: int) -> _State:
    """Split face `face_pos` by a new path of `length` edges from vertex
    position i to position j of its counterclockwise cycle."""
    s = state.clone()
    face = s.faces[face_pos]
    L = len(face)
    u, v = face[i], face[j]
    interior = [s.n + m + 1 for m in range(length - 1)]
    s.n += length - 1
    path = [u] + interior + [v]
    for m, p in enumerate(interior, start=1):
        s.rot[p] = [path[m - 1], path[m + 1]]
    # the wedge of the face at a vertex lies clockwise after the previous
    # face vertex, so the new edge slots in right there
    x_u = face[(i - 1) % L]
    s.rot[u].insert(s.rot[u].index(x_u) + 1, path[1])
    x_v = face[(j - 1) % L]
    s.rot[v].insert(s.rot[v].index(x_v) + 1, path[-2])
    arc_a = [face[(i + m) % L] for m in range((j - i) % L + 1)]
    arc_b = [face[(j + m) % L] for m in range((i - j) % L + 1)]
    face_a = tuple(arc_a + list(reversed(interior)))
    face_b = tuple(arc_b + interior)
    s.faces[face_pos : face_pos + 1] = [face_a, face_b]
    return s


def canonical_key(
    rot: dict[int, Sequence[int]], outer: Sequence[int]
) -> tuple:
    """Canonical encoding under outer-cycle rotations and reflections.

    For each of the 2k outer symmetries the graph is relabelled by a BFS
    that walks rotation lists from a per-vertex anchor (the next outer
    vertex, or the discovering vertex), mirrored symmetries walking the
    lists backwards; the minimum of the resulting neighbour-row encodings
    is the key.
    """
    k = len(outer)
    n = len(rot)
    best: tuple | None = None
    for s in range(k):
        for direction in (1, -1):
            label = [0] * (n + 1)
            anchor = [0] * (n + 1)
            order = [outer[(s + direction * i) % k] for i in range(k)]
            for i, v in enumerate(order):
                label[v] = i + 1
                anchor[v] = order[(i + 1) % k]
            enc: list[tuple[int, ...]] = []
            qi = 0
            undecided = best is not None  # still tied with the incumbent
            worse = False
            while qi < len(order):
                v = order[qi]
                qi += 1
                ns = rot[v]
                deg = len(ns)
                st = ns.index(anchor[v])
                row = []
                for m in range(deg):
                    w = ns[(st + direction * m) % deg]
                    lw = label[w]
                    if lw == 0:
                        label[w] = lw = len(order) + 1
                        anchor[w] = v
                        order.append(w)
                    row.append(lw)
                trow = tuple(row)
                if undecided:
                    ref = best[len(enc)]  # type: ignore[index]
                    if trow > ref:
                        worse = True
                        break
                    if trow < ref:
                        undecided = False
                enc.append(trow)
            if worse or undecided:
                continue
            best = tuple(enc)
    assert best is not None
    return best


def enumerate_fillings(spec: GenSpec) -> Iterator[PlaneGraph]:
    """Every 2-connected filling within budget, exactly once up to
    embedding isomorphism fixing the outer face, in deterministic order."""
    k = spec.outer_length
    outer = tuple(range(1, k + 1))
    min_face = max(4, spec.girth_floor)
    seen: set[tuple] = set()
    stack = [_initial_state(k)]
    seen.add(canonical_key(stack[0].rot, outer))
    while stack:
        state = stack.pop()
        yield PlaneGraph({v: tuple(ns) for v, ns in state.rot.items()}, outer)
        budget = spec.max_internal_vertices - (state.n - k)
        if spec.max_faces is not None and len(state.faces) >= spec.max_faces:
            continue
        children = []
        for face_pos, face in enumerate(state.faces):
            L = len(face)
            for i in range(L):
                # (j, i) splits give the mirror image of (i, j) splits with
                # the same canonical form, so ordered pairs with i < j suffice
                for j in range(i + 1, L):
                    arc = (j - i) % L
                    min_len_faces = max(min_face - arc, min_face - (L - arc), 1)
                    if min_len_faces > budget + 1:
                        continue
                    u, v = face[i], face[j]
                    min_len_girth = spec.girth_floor - state.distance(u, v)
                    for length in range(
                        max(min_len_faces, min_len_girth, 1), budget + 2
                    ):
                        child = _split(state, face_pos, i, j, length)
                        key = canonical_key(child.rot, outer)
                        if key not in seen:
                            seen.add(key)
                            children.append((key, child))
        children.sort(key=lambda kc: kc[0], reverse=True)
        stack.extend(c for _, c in children)


def count_fillings(spec: GenSpec) -> int:
    return sum(1 for _ in enumerate_fillings(spec))


# -- named fixtures ------------------------------------------------------------------


def fixtures() -> dict[str, PlaneGraph]:
    """Hand-built instances used across the test suite.

    All are verified by the oracle and the classifiers in the tests; the
    names record the shape they exhibit.
    """
    fx: dict[str, PlaneGraph] = {}

    # hexagon with a hub on alternating vertices: the critical quadrangulation
    fx["HEX_QUAD"] = plane_graph_from_faces(
        range(1, 7),
        [(1, 2, 3, 7), (3, 4, 5, 7), (5, 6, 1, 7)],
    )
    # 8-cycle plus a long chord: two 5-faces, girth 5
    fx["C8_CHORD"] = plane_graph_from_faces(
        range(1, 9),
        [(1, 2, 3, 4, 5), (5, 6, 7, 8, 1)],
    )
    # 8-cycle, one 6-face meeting the boundary in a long path
    fx["F3_CASE_B"] = plane_graph_from_faces(
        range(1, 9),
        [(8, 1, 2, 3, 4, 9), (9, 4, 5, 10), (10, 5, 6, 7), (9, 10, 7, 8)],
    )
    # 8-cycle, two 5-faces each meeting the boundary in a path of length 3
    fx["F4_CASE_C"] = plane_graph_from_faces(
        range(1, 9),
        [(1, 2, 3, 4, 9), (9, 4, 5, 6), (6, 7, 8, 1, 9)],
    )
    # 8-cycle quadrangulated by one hub: shape A
    fx["C8_QUAD_A"] = plane_graph_from_faces(
        range(1, 9),
        [(1, 2, 3, 9), (3, 4, 5, 9), (5, 6, 7, 9), (7, 8, 1, 9)],
    )
    # 8-cycle, two 5-faces sharing one interior vertex: shape D
    # f1 = c1 c2 z v2 v3, f2 = z c4 c5 c6 w3 with z=9, v2=10, v3=11, w3=12;
    # the filling splits every boundary corner of the two 5-faces so that
    # no 4-face shares two edges with either of them
    fx["C8_CASE_D"] = plane_graph_from_faces(
        range(1, 9),
        [
            (1, 2, 9, 10, 11),
            (9, 4, 5, 6, 12),
            (2, 3, 4, 9),
            (10, 9, 12, 13),
            (13, 12, 6, 14),
            (6, 7, 8, 14),
            (8, 1, 11, 14),
            (11, 10, 13, 14),
        ],
    )
    # 7-cycle, 5-face cut off by a vertex joined to c1 and c4 (shape b)
    fx["SEVEN_B"] = plane_graph_from_faces(
        range(1, 8),
        [(1, 2, 3, 4, 8), (8, 4, 5, 6), (8, 6, 7, 1)],
    )
    # 7-cycle, 5-face cut off by a path c1-u-v-c3 (shape c); u=8, v=9, w=10
    fx["SEVEN_C"] = plane_graph_from_faces(
        range(1, 8),
        [
            (1, 2, 3, 9, 8),
            (9, 3, 4, 5),
            (8, 9, 5, 10),
            (10, 5, 6, 7),
            (8, 10, 7, 1),
        ],
    )
    # 8-cycle around a separating 4-cycle that encloses both 5-faces
    # square 9-10-11-12, pentagons split by the path 9-13-14-11
    fx["C8_WELL"] = plane_graph_from_faces(
        range(1, 9),
        [
            (9, 13, 14, 11, 10),
            (9, 12, 11, 14, 13),
            (1, 2, 3, 4, 5, 11, 10, 9),
            (5, 6, 7, 8, 1, 9, 12, 11),
        ],
    )
    return fx
