#!/usr/bin/env python3

import pytest
from biregkit.blowup import (
    LinearType,
    PowerRegularityTable,
    PresentationKind,
    ci_reg_formula,
    ci_reg_from_ideal,
    exact_sequence_defect,
    fourth_threshold,
    generation_report,
    hilbert_burch_analysis,
    koszul_y_vanishing,
    lemma_first_tail,
    linearity_threshold_bigin,
    m_table,
    m_table_by_colons,
    power_ideal,
    power_reg_table,
    rees_ideal,
    symmetric_ideal,
    symmetric_power_data,
    w_invariant,
)
from biregkit.corpus import pinned_fixtures
from biregkit.errors import MathError
from biregkit.gin import m_invariants
from biregkit.groebner import BigradedIdeal, MonomialIdeal, ideals_equal
from biregkit.ring import RingSignature


def _ideal(ring, make):
    return BigradedIdeal.from_polys(ring, make(*ring.poly_ring().gens))


def _staircase():
    ideal = pinned_fixtures()['staircase']
    return MonomialIdeal.of(ideal)


def test_rees_and_symmetric_presentations():
    """Test the presentations of (x1, x2) and m^2"""
    linear = pinned_fixtures()['linear']
    rees = rees_ideal(linear)
    assert rees.ring == RingSignature(2, 2)
    assert ideals_equal(rees.ideal, _ideal(rees.ring, lambda x1, x2, y1, y2: [x1 * y2 - x2 * y1]))
    assert ideals_equal(symmetric_ideal(linear).ideal, rees.ideal)

    msquare = pinned_fixtures()['msquare']
    assert len(rees_ideal(msquare).ideal) == 3
    assert len(symmetric_ideal(msquare).ideal) == 2
    assert rees_ideal(_ideal(RingSignature(2, 0), lambda x1, x2: [x1])).ideal.is_zero


def test_base_ideal_checks():
    """Test that only equigenerated ideals of S_x are accepted"""
    with pytest.raises(MathError):
        rees_ideal(_ideal(RingSignature(2, 0), lambda x1, x2: [x1, x2 ** 2]))
    with pytest.raises(MathError):
        rees_ideal(pinned_fixtures()['principal'])
    with pytest.raises(MathError):
        power_ideal(pinned_fixtures()['linear'], 0)
    assert len(power_ideal(pinned_fixtures()['linear'], 2)) == 3


def test_power_regularity_rows():
    """Test reg(I^j) for m^2, (x1, x2) and (x1^2, x2^2)"""
    fixtures = pinned_fixtures()
    assert power_reg_table(fixtures['msquare'], 3).rows == {1: 2, 2: 4, 3: 6}
    assert power_reg_table(fixtures['linear'], 3).rows == {1: 1, 2: 2, 3: 3}

    table = power_reg_table(fixtures['ci'], 3)
    assert table.rows == {1: 3, 2: 5, 3: 7}
    fit = table.fit()
    assert (fit.slope, fit.intercept, fit.onset) == (2, 1, 1)
    assert list(table.to_frame()['excess']) == [1, 1, 1]


def test_power_routes_agree():
    """Test the strand route against direct resolution"""
    linear = pinned_fixtures()['linear']
    assert power_reg_table(linear, 3, route='strand').rows == {1: 1, 2: 2, 3: 3}
    assert power_reg_table(linear, 3, route='bigin').rows == {1: 1, 2: 2, 3: 3}

    symmetric = power_reg_table(linear, 2, kind=PresentationKind.SYMMETRIC)
    assert symmetric.route == 'strand'
    with pytest.raises(MathError):
        power_reg_table(linear, 2, route='nowhere')


def test_linearity_threshold():
    """Test j0 = m_y(bigin) and the bracket for c"""
    linear = linearity_threshold_bigin(pinned_fixtures()['linear'], trials=2)
    assert (linear.onset, linear.intercept_bound) == (1, 0)
    assert linear.bigin == ('x1*y1',)

    ci = linearity_threshold_bigin(pinned_fixtures()['ci'], trials=2)
    assert (ci.onset, ci.intercept_bound) == (1, 1)
    assert ci.to_json()['c_bracket'] == [0, 1]


def test_m_table():
    """Test m^i_j for (x1y1, x1^2y2)"""
    staircase = _staircase()
    assert m_invariants(staircase) == (2, 1)
    table = m_table(staircase, 2)
    assert table.values == {(1, 0): 0, (1, 1): 1, (1, 2): 1}
    assert table.stable == {1: 1}
    assert table.is_bounded() and table.is_stable()
    assert m_table_by_colons(staircase, 2) == table.values

    with pytest.raises(MathError):
        m_table(MonomialIdeal.from_monomials(RingSignature(2, 1), [(0, 1, 1)]))


def test_fourth_threshold():
    """Test that the Rees algebra of (x1, x2) gets a threshold of at least reg_y + m"""
    rees = rees_ideal(pinned_fixtures()['linear']).ideal
    fourth = fourth_threshold(rees, seed=1)
    assert fourth.reg_y == 0
    assert fourth.m == 2
    assert fourth.value >= 2
    assert fourth.to_json()['w']['indices'] == 'i in 1..n'


def test_w_invariant():
    """Test w(R) for S, S/(x1y1) and S/(x1y1, y1^2)"""
    ring = RingSignature(1, 1)
    assert w_invariant(BigradedIdeal.zero(ring)).value is None

    principal = w_invariant(pinned_fixtures()['principal'])
    assert principal.value is None
    assert principal.complete

    square = _ideal(ring, lambda x1, y1: [x1 * y1, y1 ** 2])
    w = w_invariant(square)
    assert w.value == 1
    assert (1, 1, 1) in w.witnesses
    assert fourth_threshold(square).value == 2


def test_koszul_y_vanishing():
    """Test H.(y; R) for R = S/(x1y1)"""
    principal = pinned_fixtures()['principal']
    assert koszul_y_vanishing(principal, 2).vanishes
    assert (1, 1) in koszul_y_vanishing(principal, 1).nonzero
    assert all(exact_sequence_defect(principal, a, 2) == 0 for a in range(4))


def test_lemma_first_tail():
    """Test detection of rows that grow by less than d"""
    table = PowerRegularityTable(2, PresentationKind.REES, 'direct', {1: 3, 2: 4, 3: 6})
    assert lemma_first_tail(table, 1) == [1]
    assert lemma_first_tail(table, 2) == []


def test_complete_intersections():
    """Test the ci formula and its regular-sequence check"""
    assert ci_reg_formula([(1, 1)]) == 0
    assert ci_reg_formula([(2, 1), (3, 1)]) == 3
    with pytest.raises(MathError):
        ci_reg_formula([(0, 1)])

    rees = rees_ideal(pinned_fixtures()['linear']).ideal
    ci = ci_reg_from_ideal(rees)
    assert (ci.value, ci.onset) == (0, 1)
    assert ci_reg_from_ideal(rees_ideal(pinned_fixtures()['ci']).ideal).value == 1

    overlap = _ideal(RingSignature(1, 2), lambda x1, y1, y2: [x1 * y1, x1 * y2])
    with pytest.raises(MathError):
        ci_reg_from_ideal(overlap)


def test_hilbert_burch():
    """Test m^2 and (x1, x2) as codimension-two Cohen-Macaulay ideals"""
    report = hilbert_burch_analysis(pinned_fixtures()['msquare'])
    assert report.is_codim2_cm
    assert report.linear_case
    assert report.threshold == 1
    assert report.linear_type is LinearType.FAILS
    assert len(report.matrix) == 3 and len(report.matrix[0]) == 2

    linear = hilbert_burch_analysis(pinned_fixtures()['linear'])
    assert linear.linear_type is LinearType.VERIFIED
    assumed = hilbert_burch_analysis(pinned_fixtures()['linear'], assume_linear_type=True)
    assert assumed.linear_type is LinearType.ASSUMED

    principal = hilbert_burch_analysis(_ideal(RingSignature(2, 0), lambda x1, x2: [x1 * x2]))
    assert not principal.is_codim2_cm
    assert principal.threshold is None


def test_symmetric_powers_and_generation():
    """Test S^2((x1, x2)) and the generation report"""
    linear = pinned_fixtures()['linear']
    square = symmetric_power_data(linear, 2)
    assert square.hilbert[:2] == (3, 4)
    assert square.regularity() == 2

    report = generation_report(linear)
    assert report.d_sequence_generated
    assert report.s_sequence_generated
    assert report.to_json()['generators_form_d_sequence']
