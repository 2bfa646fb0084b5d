"""Chord diagrams and their lifts to cyclic covers."""

import pytest

from qskein.chords import CROSSING, PARALLEL, ChordDiagram, all_diagrams, psi_chords


def test_canonical_form():
    # rotations are identified
    assert ChordDiagram([(0, 1), (2, 3)]) == ChordDiagram([(0, 3), (1, 2)])
    assert CROSSING != PARALLEL
    assert CROSSING.rotated(1) == CROSSING
    assert PARALLEL.rotated(1) == PARALLEL
    assert PARALLEL.rotated(2) == PARALLEL
    single = ChordDiagram([(0, 1)])
    assert single.rotated(1) == single
    assert single.chords == 1


def test_printing_and_order():
    assert str(CROSSING) == "1-3,2-4"
    assert str(PARALLEL) == "1-2,3-4"
    assert str(ChordDiagram([(0, 1)])) == "1-2"
    assert PARALLEL < CROSSING
    assert sorted([CROSSING, PARALLEL]) == [PARALLEL, CROSSING]


def test_validation():
    with pytest.raises(ValueError):
        ChordDiagram([(0, 0), (1, 2)])
    with pytest.raises(ValueError):
        ChordDiagram([(0, 1), (1, 2)])
    with pytest.raises(ValueError):
        ChordDiagram([(0, 5)])


def test_all_diagrams_counts():
    # (2n-1)!! matchings collapse to these rotation classes
    assert len(all_diagrams(1)) == 1
    assert len(all_diagrams(2)) == 2
    assert len(all_diagrams(3)) == 5
    for n in range(1, 4):
        for dg in all_diagrams(n):
            assert dg.rotated(1).chords == n


def test_single_chord_lift():
    single = ChordDiagram([(0, 1)])
    for m in range(1, 5):
        tally = psi_chords(single, m)
        assert sum(tally.values()) == m * m
        # every lift of one chord is still one chord
        assert set(tally) == {single}


def test_crossing_lift_double_cover():
    tally = psi_chords(CROSSING, 2)
    assert tally == {CROSSING: 8, PARALLEL: 8}


def test_identity_cover():
    for n in range(1, 4):
        for dg in all_diagrams(n):
            assert psi_chords(dg, 1) == {dg: 1}


def test_lift_counts_and_rotation():
    for n in range(1, 4):
        for m in range(1, 4):
            for dg in all_diagrams(n):
                tally = psi_chords(dg, m)
                assert sum(tally.values()) == m ** (2 * n), (dg, m)
                # lifting commutes with rotating the base diagram
                assert psi_chords(dg.rotated(1), m) == tally
