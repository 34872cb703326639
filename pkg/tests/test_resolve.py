#!/usr/bin/env python3

import pytest
from biregkit.corpus import pinned_fixtures
from biregkit.errors import MathError
from biregkit.groebner import BigradedIdeal, MonomialIdeal
from biregkit.resolve import (
    BettiTable,
    RegStatus,
    graded_regularity,
    koszul_betti,
    koszul_strand,
    reg_from_betti,
    taylor_betti,
)
from biregkit.ring import RingSignature


XBI_BIGIN = [(1, 0, 0, 1, 0, 0), (1, 0, 0, 0, 1, 0), (0, 1, 0, 2, 0, 0)]


def _bigin_ideal():
    return MonomialIdeal.from_monomials(RingSignature(3, 3), XBI_BIGIN)


def _ideal(ring, make):
    return BigradedIdeal.from_polys(ring, make(*ring.poly_ring().gens))


def test_worked_example_betti_table():
    """Test the Koszul Betti table of S/J for the worked example"""
    table = koszul_betti(pinned_fixtures()['xbi'])
    assert table.complete
    assert table.entries == {(0, (0, 0)): 1, (1, (1, 1)): 2, (2, (2, 2)): 1}
    assert table.total(1) == 2
    assert reg_from_betti(table, 'x') == 0
    assert reg_from_betti(table, 'y') == 0


def test_bigin_betti_table_two_ways():
    """Test Taylor and Koszul tables of S/bigin(J)"""
    expected = {(0, (0, 0)): 1, (1, (1, 1)): 2, (1, (1, 2)): 1, (2, (1, 2)): 1, (2, (2, 2)): 1}
    taylor = taylor_betti(_bigin_ideal())
    assert taylor.entries == expected
    assert taylor_betti(_bigin_ideal(), seed=7).entries == expected
    assert koszul_betti(_bigin_ideal().to_ideal()).entries == expected

    assert reg_from_betti(taylor, 'x') == 0
    assert reg_from_betti(taylor, 'y') == 1
    # reg of the ideal itself: m_x and m_y of a bistable ideal
    assert reg_from_betti(taylor, 'x', ideal=True) == 1
    assert reg_from_betti(taylor, 'y', ideal=True) == 2


def test_incomplete_box():
    """Test that a truncated box cannot certify a regularity on its edge"""
    table = koszul_betti(pinned_fixtures()['xbi'], box=(1, 1))
    assert not table.complete
    assert table.betti(2, (2, 2)) == 0
    assert reg_from_betti(table, 'x') is RegStatus.INCOMPLETE
    assert reg_from_betti(BettiTable({}, (0, 0)), 'x') is RegStatus.UNDEFINED


def test_koszul_strand():
    """Test the Koszul complex of the worked example in degree (1,1)"""
    strand = koszul_strand(pinned_fixtures()['xbi'], (1, 1))
    assert strand.boundary_squared_is_zero()
    assert strand.homology(1) == 2
    assert strand.homology(0) == 0


def test_zero_ideal_and_limits():
    """Test S/0 and the Taylor size limit"""
    ring = RingSignature(1, 1)
    assert koszul_betti(BigradedIdeal.zero(ring)).entries == {(0, (0, 0)): 1}
    assert taylor_betti(MonomialIdeal(ring, ())).entries == {(0, (0, 0)): 1}

    many = MonomialIdeal.from_monomials(ring, [(k, 21 - k) for k in range(22)])
    with pytest.raises(MathError):
        taylor_betti(many)


def test_table_frame_and_json():
    """Test the DataFrame and JSON views of a table"""
    table = taylor_betti(_bigin_ideal())
    frame = table.to_frame()
    assert list(frame.columns) == ['i', 'a', 'b', 'beta']
    assert len(frame) == 5
    assert BettiTable.from_json(table.to_json()) == table


def test_graded_regularity():
    """Test reg of homogeneous ideals of S_x"""
    assert graded_regularity(_ideal(RingSignature(1, 0), lambda x1: [x1])) == 1
    assert graded_regularity(_ideal(RingSignature(2, 0), lambda x1, x2: [x1 ** 2, x1 * x2, x2 ** 2])) == 2
    assert graded_regularity(_ideal(RingSignature(2, 0), lambda x1, x2: [x1 ** 2, x2 ** 3])) == 4

    with pytest.raises(MathError):
        graded_regularity(pinned_fixtures()['xbi'])
    with pytest.raises(MathError):
        graded_regularity(BigradedIdeal.zero(RingSignature(2, 0)))
