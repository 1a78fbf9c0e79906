"""Colorings, the oracle, boundary classes and the orientation bridge."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from triflow.coloring import (
    InconsistentOrientationError,
    all_extensions,
    brute_force_extend,
    classify_boundary_edges,
    coloring_from_orientation,
    enumerate_outer_colorings,
    face_flux,
    fluxes_from_coloring,
    orient_dual,
    DualOrientation,
)
from triflow.generate import fixtures
from triflow.plane_graph import cycle_graph, edge_key


@pytest.fixture(scope="module")
def fx():
    return fixtures()


def _psi(G, colors):
    return dict(zip(G.outer, colors))


def test_enumerate_outer_colorings_small_counts():
    assert [
        tuple(p[v] for v in cycle_graph(4).outer)
        for p in enumerate_outer_colorings(cycle_graph(4))
    ] == [(1, 2, 1, 2), (1, 2, 1, 3), (1, 2, 3, 2)]
    assert len(enumerate_outer_colorings(cycle_graph(5))) == 5
    assert len(enumerate_outer_colorings(cycle_graph(6))) == 11


@pytest.mark.parametrize("k", [4, 5, 6, 7, 8])
def test_enumerate_outer_colorings_match_chromatic_polynomial(k):
    expected = (2**k + 2 * (-1) ** k) // 6  # proper 3-colorings / 6 symmetries
    colorings = enumerate_outer_colorings(cycle_graph(k))
    assert len(colorings) == expected
    for psi in colorings:
        seq = [psi[v] for v in cycle_graph(k).outer]
        assert seq[0] == 1 and seq[1] == 2
        assert all(seq[i] != seq[(i + 1) % k] for i in range(k))


def test_brute_force_extend_hexagon_quadrangulation(fx):
    G = fx["HEX_QUAD"]
    assert brute_force_extend(G, _psi(G, (1, 2, 3, 1, 2, 3))) is None
    phi = brute_force_extend(G, _psi(G, (1, 2, 1, 2, 1, 2)))
    # hub neighbours all carry color 1; lowest-color-first settles on 2
    assert phi is not None and phi[7] == 2


def test_brute_force_extend_chord_conflict(fx):
    G = fx["C8_CHORD"]
    for psi in enumerate_outer_colorings(G):
        if psi[1] == psi[5]:
            assert brute_force_extend(G, psi) is None


def test_oracle_matches_full_enumeration(fx):
    """The backtracking oracle agrees with exhausting all assignments."""
    for name in ("HEX_QUAD", "SEVEN_B", "F4_CASE_C"):
        G = fx[name]
        for psi in enumerate_outer_colorings(G):
            fast = brute_force_extend(G, psi)
            slow = next(all_extensions(G, psi), None)
            assert (fast is None) == (slow is None)
            if fast is not None:
                assert all(fast[v] == psi[v] for v in G.outer)


def test_classify_boundary_edges_examples():
    G6 = cycle_graph(6)
    ec = classify_boundary_edges(G6, _psi(G6, (1, 2, 3, 1, 2, 3)))
    assert {ec.n_source, ec.n_sink} == {0, 6}
    G8 = cycle_graph(8)
    ec8 = classify_boundary_edges(G8, _psi(G8, (1, 2, 3, 2, 1, 2, 3, 2)))
    assert ec8.n_source == 4 and ec8.n_sink == 4


def test_classify_boundary_is_outer_only(fx):
    """The classification never looks at interior structure."""
    G = fx["F3_CASE_B"]
    bare = cycle_graph(8)
    for psi in enumerate_outer_colorings(bare):
        a = classify_boundary_edges(G, _psi(G, [psi[v] for v in bare.outer]))
        b = classify_boundary_edges(bare, psi)
        assert a.source_edges == b.source_edges


@given(st.integers(0, 10**6))
@settings(max_examples=60, deadline=None)
def test_color_inversion_swaps_classes(seed):
    k = 4 + seed % 5
    G = cycle_graph(k)
    colorings = enumerate_outer_colorings(G)
    psi = colorings[seed % len(colorings)]
    inv = {v: 4 - c for v, c in psi.items()}
    ec, eci = classify_boundary_edges(G, psi), classify_boundary_edges(G, inv)
    assert eci.source_edges == ec.sink_edges
    assert eci.sink_edges == ec.source_edges


def test_imbalance_range_k8():
    G = cycle_graph(8)
    seen = set()
    for psi in enumerate_outer_colorings(G):
        d = classify_boundary_edges(G, psi).imbalance
        seen.add(d)
        assert d % 3 == 0 and d % 2 == 0 and abs(d) <= 8
    assert seen == {-6, 0, 6}


def _all_total_colorings(G):
    for psi in enumerate_outer_colorings(G):
        yield from all_extensions(G, psi)


def test_flux_values_per_face_length(fx):
    bounds = {4: {0}, 5: {-3, 3}, 6: {-6, 0, 6}, 7: {-3, 3}, 8: {-6, 0, 6}}
    for name in ("HEX_QUAD", "C8_CHORD", "F3_CASE_B", "SEVEN_B"):
        G = fx[name]
        for phi in _all_total_colorings(G):
            orientation = orient_dual(G, phi)
            for f in G.internal_faces:
                assert face_flux(G, orientation, f) in bounds[f.length]


def test_flux_fast_path_agrees_with_orientation(fx):
    G = fx["F4_CASE_C"]
    phi = next(_all_total_colorings(G))
    orientation = orient_dual(G, phi)
    flux = fluxes_from_coloring(G, phi)
    for f in G.faces:
        assert face_flux(G, orientation, f) == flux[f.index]


def test_orientation_roundtrip(fx):
    for name in ("HEX_QUAD", "C8_CHORD", "SEVEN_C", "C8_CASE_D"):
        G = fx[name]
        count = 0
        for phi in _all_total_colorings(G):
            orientation = orient_dual(G, phi)
            seed = G.outer[0]
            assert coloring_from_orientation(G, orientation, seed, phi[seed]) == phi
            count += 1
        assert count > 0


def test_all_edges_toward_outer_gives_stepping_coloring():
    """Orienting every dual edge into the outer face forces colors that
    advance by a constant step around the cycle."""
    G = cycle_graph(6)
    # the outer face holds darts (i, i+1); picking them as forward darts
    # makes the outer face the head everywhere
    forward = {}
    for i in range(6):
        a, b = i + 1, (i + 1) % 6 + 1
        forward[edge_key(a, b)] = (a, b)
    orientation = DualOrientation(tuple(sorted(forward.items())))
    phi = coloring_from_orientation(G, orientation, 1, 1)
    steps = {(phi[i % 6 + 1] - phi[(i - 1) % 6 + 1]) % 3 for i in range(1, 7)}
    assert len(steps) == 1 and steps != {0}
    assert phi[1] == 1


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_reconstruction_unique_up_to_color_rotation(data):
    """Changing the seed color rotates every color by the same offset."""
    fx = fixtures()
    name = data.draw(st.sampled_from(["HEX_QUAD", "C8_CHORD", "SEVEN_B"]))
    G = fx[name]
    colorings = [
        phi
        for psi in enumerate_outer_colorings(G)
        for phi in [brute_force_extend(G, psi)]
        if phi is not None
    ]
    phi = colorings[data.draw(st.integers(0, len(colorings) - 1))]
    orientation = orient_dual(G, phi)
    seed_vertex = data.draw(st.sampled_from(sorted(G.vertices)))
    seed_color = data.draw(st.sampled_from([1, 2, 3]))
    rebuilt = coloring_from_orientation(G, orientation, seed_vertex, seed_color)
    offset = (seed_color - phi[seed_vertex]) % 3
    assert rebuilt == {v: (c - 1 + offset) % 3 + 1 for v, c in phi.items()}


def test_inconsistent_orientation_rejected(fx):
    G = fx["HEX_QUAD"]
    phi = brute_force_extend(G, _psi(G, (1, 2, 1, 2, 1, 2)))
    orientation = orient_dual(G, phi)
    flipped = dict(orientation.forward)
    flipped[(1, 2)] = (
        (2, 1) if flipped[(1, 2)] == (1, 2) else (1, 2)
    )  # flip one edge on a 4-face
    with pytest.raises(InconsistentOrientationError):
        coloring_from_orientation(
            G, DualOrientation(tuple(sorted(flipped.items()))), 1, phi[1]
        )
