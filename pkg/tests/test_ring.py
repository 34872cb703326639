#!/usr/bin/env python3

import pytest
from biregkit.errors import MathError, ParseError, RingMismatchError
from biregkit.ring import (
    Comparison,
    Degree,
    Field,
    PaperOrder,
    RingSignature,
    bidegree,
    compare,
    max_index,
    monomials_of_bidegree,
    add,
    multiply,
    revlex_x,
    scale,
)


def test_field_parsing():
    """Test reading Q and Fp:<p>"""
    assert Field.parse('Q').is_rational
    assert Field.parse(' Fp:7 ').characteristic == 7
    assert str(Field.parse('Fp:32003')) == 'Fp:32003'

    with pytest.raises(MathError):
        Field.parse('Fp:8')
    with pytest.raises(ParseError):
        Field.parse('R')


def test_ring_signature():
    """Test variable names and degenerate signatures"""
    ring = RingSignature(2, 3)
    assert ring.symbols == ('x1', 'x2', 'y1', 'y2', 'y3')
    assert ring.indices('y') == (2, 3, 4)
    assert ring.bidegree_of((1, 1, 0, 2, 1)) == (2, 3)
    assert RingSignature(2, 0).x_ring() == RingSignature(2, 0)

    with pytest.raises(MathError):
        RingSignature(0, 0)


def test_bigraded_order():
    """Test the bigraded reverse order on degree-(1,1) monomials"""
    order = PaperOrder(2, 2)
    y2x1 = (1, 0, 0, 1)
    y1x2 = (0, 1, 1, 0)
    assert compare(y2x1, y1x2, order) is Comparison.GT
    assert compare(y1x2, y2x1, order) is Comparison.LT
    assert compare(y1x2, y1x2, order) is Comparison.EQ

    # total degree first, then y-degree
    assert compare((0, 0, 0, 1), (2, 0, 0, 0), order) is Comparison.LT
    assert compare((1, 0, 1, 0), (2, 0, 0, 0), order) is Comparison.GT


def test_revlex_orders():
    """Test degrevlex with the x-block first"""
    order = revlex_x(2, 1)
    assert compare((1, 1, 0), (0, 0, 2), order) is Comparison.GT
    assert compare((1, 0, 0), (0, 1, 0), order) is Comparison.GT

    with pytest.raises(RingMismatchError):
        compare((1, 0), (1, 0, 0), order)


def test_monomials_of_bidegree():
    """Test enumeration of the monomials of one bidegree"""
    assert len(monomials_of_bidegree(2, 2, 1, 1)) == 4
    assert len(monomials_of_bidegree(3, 3, 1, 1)) == 9
    assert monomials_of_bidegree(2, 0, 0, 0) == ((0, 0),)
    assert monomials_of_bidegree(2, 0, 0, 1) == ()
    assert monomials_of_bidegree(1, 1, -1, 0) == ()


def test_bidegree_and_helpers():
    """Test bidegree markers and the max-index helper"""
    ring = RingSignature(1, 1).poly_ring()
    x1, y1 = ring.gens
    assert bidegree(x1 * y1 ** 2) == (1, 2)
    assert bidegree(ring.zero) is Degree.ZERO
    assert bidegree(x1 + y1 ** 2) is Degree.NOT_BIHOMOGENEOUS

    assert max_index((0, 2, 0)) == 2
    assert max_index((0, 0)) == 0


def test_mixed_rings_rejected():
    """Test that arithmetic across rings raises"""
    p = RingSignature(1, 1).poly_ring().gens[0]
    q = RingSignature(2, 1).poly_ring().gens[0]
    with pytest.raises(RingMismatchError):
        multiply(p, q)


def test_polynomial_arithmetic():
    """Test add, multiply and scale on small polynomials"""
    ring = RingSignature(1, 1).poly_ring()
    x1, y1 = ring.gens
    p = 3 * x1 ** 2 * y1 - x1 + 5
    assert add(p, scale(p, -1)) == ring.zero
    assert multiply(x1 + y1, x1 - y1) == x1 ** 2 - y1 ** 2
    assert multiply(p, ring.one) == p


def test_rational_coefficients_are_exact():
    """Test (a/b)(b/a) = 1 over Q"""
    signature = RingSignature(1, 1)
    one = signature.poly_ring().one
    QQ = signature.domain
    for a, b in ((3, 7), (-22, 9), (10**12 + 1, 3)):
        assert scale(scale(one, QQ(a, b)), QQ(b, a)) == one

    prime = RingSignature(1, 1, Field(7))
    assert scale(prime.poly_ring().one, 7) == prime.poly_ring().zero
