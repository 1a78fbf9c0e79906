"""Generator counts, canonical dedup and fixture health."""

import pytest

from triflow.criticality import is_c_critical
from triflow.generate import (
    GenSpec,
    canonical_key,
    count_fillings,
    enumerate_fillings,
    fixtures,
)
from triflow.plane_graph import face_length_multiset, simple_cycles_up_to


def test_genspec_validation():
    with pytest.raises(ValueError):
        GenSpec(3, 2)
    with pytest.raises(ValueError):
        GenSpec(6, -1)
    with pytest.raises(ValueError):
        GenSpec(6, 2, girth_floor=6)


def test_square_alone():
    graphs = list(enumerate_fillings(GenSpec(4, 0)))
    assert len(graphs) == 1 and graphs[0].n == 4


def test_hexagon_budget_one():
    graphs = list(enumerate_fillings(GenSpec(6, 1)))
    assert len(graphs) == 6
    multisets = sorted(
        tuple(sorted(f.length for f in G.internal_faces)) for G in graphs
    )
    # the bare hexagon, the long chord, hub on two vertices (two ways),
    # chord plus hub, and the quadrangulation
    assert multisets == [
        (4, 4),
        (4, 4, 4),
        (4, 4, 4),
        (4, 6),
        (5, 5),
        (6,),
    ]


def test_eight_cycle_girth5_no_interior():
    graphs = list(enumerate_fillings(GenSpec(8, 0, girth_floor=5)))
    shapes = sorted(sorted(f.length for f in G.internal_faces) for G in graphs)
    assert shapes == [[5, 5], [8]]  # the bare cycle and the long chord


def test_girth5_corpus_has_no_short_cycles():
    for G in enumerate_fillings(GenSpec(7, 2, girth_floor=5)):
        assert all(len(c) >= 5 for c in simple_cycles_up_to(G, 4))


def test_counts_monotone_in_budget():
    counts = [count_fillings(GenSpec(6, p)) for p in range(4)]
    assert counts == sorted(counts)
    assert counts[0] == 2  # hexagon and hexagon+chord


def test_no_duplicate_canonical_forms():
    seen = set()
    for G in enumerate_fillings(GenSpec(7, 2)):
        key = canonical_key(G.rot, G.outer)
        assert key not in seen
        seen.add(key)


def test_canonical_key_identifies_rotated_copies():
    # the same hub graph written with two different outer labelings
    a = {1: (2, 9, 8), 2: (3, 1), 3: (4, 9, 2), 4: (5, 3), 5: (6, 9, 4),
         6: (7, 5), 7: (8, 9, 6), 8: (1, 7), 9: (1, 3, 5, 7)}
    b = {1: (2, 8), 2: (3, 9, 1), 3: (4, 2), 4: (5, 9, 3), 5: (6, 4),
         6: (7, 9, 5), 7: (8, 6), 8: (1, 9, 7), 9: (2, 4, 6, 8)}
    outer = tuple(range(1, 9))
    assert canonical_key(a, outer) == canonical_key(b, outer)


def test_max_faces_budget():
    unbounded = count_fillings(GenSpec(6, 2))
    capped = count_fillings(GenSpec(6, 2, max_faces=2))
    assert 0 < capped < unbounded


def test_fixture_names_and_validity():
    fx = fixtures()
    for name in (
        "HEX_QUAD",
        "C8_CHORD",
        "F3_CASE_B",
        "F4_CASE_C",
        "C8_CASE_D",
        "SEVEN_B",
        "SEVEN_C",
    ):
        assert name in fx
    assert face_length_multiset(fx["HEX_QUAD"]) == ()
    assert face_length_multiset(fx["F4_CASE_C"]) == (5, 5)


def test_fixtures_found_by_generator():
    """The named critical instances appear in the corpora they belong to."""
    fx = fixtures()
    targets = {
        "HEX_QUAD": GenSpec(6, 1),
        "C8_CHORD": GenSpec(8, 0),
        "F3_CASE_B": GenSpec(8, 2),
        "SEVEN_B": GenSpec(7, 1),
        "SEVEN_C": GenSpec(7, 3),
    }
    for name, spec in targets.items():
        key = canonical_key(fx[name].rot, fx[name].outer)
        corpus = {canonical_key(G.rot, G.outer) for G in enumerate_fillings(spec)}
        assert key in corpus, name


def test_girth5_census_matches_chord_graph():
    """Among girth-5 fillings with outer length <= 8, exactly the 8-cycle
    with a long chord is critical."""
    for k in range(4, 9):
        for G in enumerate_fillings(GenSpec(k, 3, girth_floor=5)):
            expected = k == 8 and sorted(
                f.length for f in G.internal_faces
            ) == [5, 5]
            assert is_c_critical(G).is_critical == expected
