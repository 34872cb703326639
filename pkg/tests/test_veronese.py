#!/usr/bin/env python3

import pytest
from biregkit.errors import MathError
from biregkit.groebner import MonomialIdeal
from biregkit.resolve import BettiTable, taylor_betti
from biregkit.ring import RingSignature
from biregkit.veronese import veronese_bound, veronese_zero_thresholds


def test_principal_thresholds():
    """Test S/(x1y1), whose Veronese bounds vanish from (1, 1)"""
    table = taylor_betti(MonomialIdeal.from_monomials(RingSignature(1, 1), [(1, 1)]))
    assert veronese_zero_thresholds(table) == (1, 1)
    report = veronese_bound(table, 1, 1)
    assert (report.bound_x, report.bound_y) == (0, 0)
    assert report.to_json()['s_star'] == 1


def test_bounds_and_witnesses():
    """Test ceil(a/s) - i on a hand-made table"""
    table = BettiTable({(0, (0, 0)): 1, (1, (5, 1)): 1}, (5, 1))
    assert veronese_zero_thresholds(table) == (5, 1)

    report = veronese_bound(table, 2, 1)
    assert report.bound_x == 2
    assert report.witnesses_x == ({'i': 1, 'a': 5, 'b': 1},)
    assert report.bound_y == 0

    # a zero step disables that direction
    assert veronese_bound(table, 0, 1).bound_x is None


def test_rejected_inputs():
    """Test incomplete tables and steps"""
    table = BettiTable({(0, (0, 0)): 1}, (1, 1), complete=False)
    with pytest.raises(MathError):
        veronese_bound(table, 1, 1)
    complete = BettiTable({(0, (0, 0)): 1}, (0, 0))
    with pytest.raises(MathError):
        veronese_bound(complete, 0, 0)
    with pytest.raises(MathError):
        veronese_bound(complete, -1, 2)
