"""Brute-force criticality and the structural classifiers."""

import pytest

from triflow.coloring import enumerate_outer_colorings
from triflow.criticality import (
    KNOWN_CRITICAL_FACE_MULTISETS,
    boundary_intersection,
    check_k_minus_2,
    check_quadrangulation,
    classify_7cycle,
    classify_7cycle_all,
    classify_8cycle,
    is_c_critical,
    k_minus_2_extends,
    nonextendable_colorings,
    oracle_nonextendable,
    r_of,
)
from triflow.generate import fixtures
from triflow.plane_graph import cycle_graph, plane_graph_from_faces


@pytest.fixture(scope="module")
def fx():
    return fixtures()


def _psi(G, colors):
    return dict(zip(G.outer, colors))


def test_r_of():
    assert r_of(9) == 0
    assert r_of(7) == 2
    assert r_of(8) == 1
    assert [r_of(k) for k in (1, 2, 3)] == [2, 1, 0]


def test_is_c_critical_fixtures(fx):
    assert is_c_critical(fx["HEX_QUAD"]).is_critical
    assert is_c_critical(fx["C8_CHORD"]).is_critical
    assert is_c_critical(fx["F3_CASE_B"]).is_critical
    assert is_c_critical(fx["F4_CASE_C"]).is_critical
    assert is_c_critical(fx["C8_QUAD_A"]).is_critical
    assert is_c_critical(fx["C8_CASE_D"]).is_critical
    assert is_c_critical(fx["SEVEN_B"]).is_critical
    assert is_c_critical(fx["SEVEN_C"]).is_critical
    assert not is_c_critical(fx["C8_WELL"]).is_critical


def test_is_c_critical_witnesses_verified(fx):
    G = fx["HEX_QUAD"]
    verdict = is_c_critical(G)
    nonext = {tuple(p[v] for v in G.outer) for p in verdict.nonextendable}
    assert verdict.witness_map
    for e, psi in verdict.witness_map.items():
        assert tuple(psi[v] for v in G.outer) in nonext


def test_bare_cycle_reported_not_critical():
    verdict = is_c_critical(cycle_graph(6))
    assert not verdict.is_critical
    assert "outer cycle" in verdict.reason


def test_check_quadrangulation(fx):
    assert check_quadrangulation(fx["HEX_QUAD"]) is True
    assert check_quadrangulation(fx["C8_QUAD_A"]) is True
    refined = plane_graph_from_faces(
        range(1, 7),
        [(1, 2, 3, 8), (1, 8, 3, 7), (3, 4, 5, 7), (5, 6, 1, 7)],
    )
    assert check_quadrangulation(refined) is False
    assert not is_c_critical(refined).is_critical
    with pytest.raises(ValueError):
        check_quadrangulation(fx["C8_CHORD"])


def test_seven_chord_k_minus_2(fx):
    G = plane_graph_from_faces(range(1, 8), [(1, 2, 3, 4, 5), (5, 6, 7, 1)])
    res = check_k_minus_2(G)
    assert res.is_critical and res.contact_ok
    f = G.faces[res.face_index]
    assert boundary_intersection(G, f) == ("path", 4)
    nonext = {tuple(p[v] for v in G.outer) for p in oracle_nonextendable(G)}
    for psi in enumerate_outer_colorings(G):
        predicted = k_minus_2_extends(G, psi)
        assert predicted == (tuple(psi[v] for v in G.outer) not in nonext)
        if psi[1] == psi[5]:
            assert not predicted


def test_k_minus_2_detached_face_not_critical():
    # 5-face meeting the outer 7-cycle in a single vertex: contact too short
    G = plane_graph_from_faces(
        range(1, 8),
        [
            (1, 8, 9, 10, 11),
            (8, 1, 2, 3),
            (9, 8, 3, 4),
            (10, 9, 4, 5),
            (11, 10, 5, 6),
            (1, 11, 6, 7),
        ],
    )
    assert sorted(f.length for f in G.internal_faces) == [4, 4, 4, 4, 4, 5]
    res = check_k_minus_2(G)
    assert not res.contact_ok and not res.is_critical
    assert not is_c_critical(G).is_critical


def test_classify_7cycle_cases(fx):
    chord7 = plane_graph_from_faces(range(1, 8), [(1, 2, 3, 4, 5), (5, 6, 7, 1)])
    for psi in enumerate_outer_colorings(chord7):
        expected = "a" if psi[1] == psi[5] else None
        assert classify_7cycle(chord7, psi) == expected

    for name, letter in (("SEVEN_B", "b"), ("SEVEN_C", "c")):
        G = fx[name]
        nonext = {tuple(p[v] for v in G.outer) for p in oracle_nonextendable(G)}
        assert nonext
        for psi in enumerate_outer_colorings(G):
            cases = classify_7cycle_all(G, psi)
            if tuple(psi[v] for v in G.outer) in nonext:
                assert cases == [letter]
            else:
                assert cases == []


def test_classify_8cycle_fixtures(fx):
    assert classify_8cycle(fx["C8_QUAD_A"]).case == "A"
    b = classify_8cycle(fx["F3_CASE_B"])
    assert b.case == "B" and b.contact_lengths == (4,)
    c = classify_8cycle(fx["C8_CHORD"])
    assert c.case == "C" and c.contact_lengths == (4, 4)
    assert classify_8cycle(fx["F4_CASE_C"]).case == "C"
    d = classify_8cycle(fx["C8_CASE_D"])
    assert d.case == "D" and d.shared_vertex not in d.labeling
    assert classify_8cycle(fx["C8_WELL"]).case == "NOT_CRITICAL"


def test_classify_8cycle_case_d_evidence(fx):
    G = fx["C8_CASE_D"]
    d = classify_8cycle(G)
    f1, f2 = (G.faces[i] for i in d.five_faces)
    z = d.shared_vertex
    assert z in f1.vertices and z in f2.vertices
    assert d.labeling[0] in f1.vertices and d.labeling[4] in f2.vertices
    # the two-path shape must genuinely fail for a D instance
    contacts = [boundary_intersection(G, f) for f in (f1, f2)]
    assert any(shape != "path" or length < 2 for shape, length in contacts)


def test_known_multiset_table():
    exact6, is_exact6 = KNOWN_CRITICAL_FACE_MULTISETS[(4, 6)]
    assert exact6 == frozenset({()}) and is_exact6
    upper8, is_exact8 = KNOWN_CRITICAL_FACE_MULTISETS[(4, 8)]
    assert upper8 == frozenset({(), (5, 5), (6,)}) and not is_exact8
    girth5_8, exact = KNOWN_CRITICAL_FACE_MULTISETS[(5, 8)]
    assert girth5_8 == frozenset({(5, 5)}) and exact
    assert KNOWN_CRITICAL_FACE_MULTISETS[(5, 7)] == (frozenset(), True)


def test_nonextendable_colorings(fx):
    G = fx["HEX_QUAD"]
    assert [tuple(p[v] for v in G.outer) for p in nonextendable_colorings(G)] == [
        (1, 2, 3, 1, 2, 3)
    ]
    chord = fx["C8_CHORD"]
    got = {tuple(p[v] for v in chord.outer) for p in nonextendable_colorings(chord)}
    expected = {
        tuple(p[v] for v in chord.outer)
        for p in enumerate_outer_colorings(chord)
        if p[1] == p[5]
    }
    assert got == expected

    # a non-critical graph on which every precoloring extends
    G6 = plane_graph_from_faces(range(1, 7), [(1, 2, 3, 7), (3, 4, 5, 6, 1, 7)])
    assert nonextendable_colorings(G6) == []
    assert oracle_nonextendable(G6) == []
