#!/usr/bin/env python3

import pytest
from biregkit.corpus import pinned_fixtures
from biregkit.errors import MathError, RingMismatchError
from biregkit.groebner import (
    BigradedIdeal,
    MonomialIdeal,
    buchberger,
    colon,
    contains,
    eliminate,
    hilbert_dimension,
    ideals_equal,
    intersect,
    is_subideal,
    krull_dimension,
    minimal_generators,
    normal_form,
    quotient_basis,
    spoly_residues,
    syzygies,
)
from biregkit.ring import PaperOrder, RingSignature, divides


def _ideal(ring, make):
    return BigradedIdeal.from_polys(ring, make(*ring.poly_ring().gens))


def test_worked_example_basis():
    """Test the Gröbner basis and standard monomials of the worked example"""
    xbi = pinned_fixtures()['xbi']
    assert set(xbi.leading_monomials()) == {(0, 1, 0, 0, 1, 0), (1, 0, 0, 0, 0, 1)}
    assert spoly_residues(xbi.groebner()) == []
    assert len(quotient_basis(xbi, (1, 1))) == 7
    assert hilbert_dimension(xbi, (0, 0)) == 1


def test_normal_form_and_membership():
    """Test reduction modulo the worked example"""
    xbi = pinned_fixtures()['xbi']
    x1, x2, x3, y1, y2, y3 = xbi.ring.poly_ring().gens
    assert normal_form(x2 * y2, xbi.groebner()) == x3 * y1
    assert contains(xbi, y3 * x1 - y1 * x3)
    assert contains(xbi, x1 * (x2 * y2 - x3 * y1))
    assert not contains(xbi, x1 * y1)


def test_colon_and_intersection():
    """Test J : f and the intersection of ideals"""
    ring = RingSignature(1, 1)
    x1, y1 = ring.poly_ring().gens
    principal = _ideal(ring, lambda x1, y1: [x1 * y1])

    assert ideals_equal(colon(principal, x1), _ideal(ring, lambda x1, y1: [y1]))
    assert colon(BigradedIdeal.zero(ring), x1).is_zero
    with pytest.raises(MathError):
        colon(principal, ring.poly_ring().zero)

    meet = intersect(_ideal(ring, lambda x1, y1: [x1]), _ideal(ring, lambda x1, y1: [y1]))
    assert ideals_equal(meet, principal)


def test_elimination():
    """Test J ∩ K[x1, x2]"""
    ring = RingSignature(2, 1)
    ideal = _ideal(ring, lambda x1, x2, y1: [x1 * y1, x2 ** 2])
    result = eliminate(ideal, {'x1', 'x2'})
    assert ideals_equal(result, _ideal(ring, lambda x1, x2, y1: [x2 ** 2]))

    with pytest.raises(RingMismatchError):
        eliminate(ideal, {'z1'})


def test_minimal_generators_and_syzygies():
    """Test minimal generators and the syzygy of two variables"""
    ring = RingSignature(2, 0)
    ideal = _ideal(ring, lambda x1, x2: [x1, x1 * x2, x1 ** 2])
    assert len(minimal_generators(ideal)) == 1

    x1, x2 = ring.poly_ring().gens
    columns = syzygies([x1, x2])
    assert len(columns) == 1
    a, b = columns[0]
    assert a * x1 + b * x2 == 0
    assert a != 0 and b != 0


def test_subideals_and_dimension():
    """Test containment of ideals and Krull dimension of monomial quotients"""
    ring = RingSignature(1, 1)
    small = _ideal(ring, lambda x1, y1: [x1 * y1])
    big = _ideal(ring, lambda x1, y1: [x1])
    assert is_subideal(small, big)
    assert not is_subideal(big, small)

    assert krull_dimension(MonomialIdeal.from_monomials(ring, [(1, 1)])) == 1
    assert krull_dimension(MonomialIdeal.from_monomials(ring, [(1, 0), (0, 1)])) == 0
    assert hilbert_dimension(BigradedIdeal.zero(RingSignature(2, 1)), (1, 1)) == 2


def test_monomial_ideal_keeps_minimal_generators():
    """Test that divisible monomials are dropped"""
    ring = RingSignature(2, 1)
    ideal = MonomialIdeal.from_monomials(ring, [(1, 0, 1), (2, 0, 1), (1, 0, 1), (0, 1, 0)])
    assert set(ideal.gens) == {(1, 0, 1), (0, 1, 0)}
    assert ideal.lcm_all() == (1, 1, 1)
    assert ideal.contains((1, 1, 0))


def test_reduced_basis_shape():
    """Test that bases are reduced, monic and sorted by leading monomial"""
    signature = RingSignature(2, 2)
    ring = signature.poly_ring()
    x1, x2, y1, y2 = ring.gens
    polys = [x1 * y1 + 2 * x2 * y2, x1 ** 2 * y2 - x2 ** 2 * y1, ring.zero]
    basis = buchberger(polys, ring)
    assert basis == list(BigradedIdeal.from_polys(signature, polys).groebner())
    assert spoly_residues(basis) == []
    assert all(g.LC == 1 for g in basis)

    order = PaperOrder(2, 2)
    assert [order(g.LM) for g in basis] == sorted((order(g.LM) for g in basis), reverse=True)
    for g in basis:
        others = [h.LM for h in basis if h != g]
        assert not any(divides(lm, term) for lm in others for term in g.itermonoms())

    assert buchberger([ring.zero], ring) == []


def test_leading_monomial_view():
    """Test MonomialIdeal.of on a binomial and a monomial ideal"""
    xbi = pinned_fixtures()['xbi']
    assert set(MonomialIdeal.of(xbi).gens) == {(0, 1, 0, 0, 1, 0), (1, 0, 0, 0, 0, 1)}
    staircase = pinned_fixtures()['staircase']
    assert MonomialIdeal.of(staircase).gens == ((2, 0, 1), (1, 1, 0))
