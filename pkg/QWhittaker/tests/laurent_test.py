import logging

import pytest
from hypothesis import given, settings, strategies as st
from sympy.polys.domains import ZZ

from QWhittaker.Errors import QWhittakerError, RankMismatchError
from QWhittaker.ExactArith import DOMAIN_QF, FieldQ, qRat
from QWhittaker.Laurent import LaurentPolynomial

logger = logging.getLogger('TEST')

def z(i, n=2):
    return LaurentPolynomial.variable(ZZ, n, i)

terms = st.dictionaries(st.tuples(st.integers(-2, 2), st.integers(-2, 2)), st.integers(-3, 3), max_size=4)

def laurent(table):
    return LaurentPolynomial(ZZ, 2, table)

def testSquare():
    square = (z(0) + z(1)) * (z(0) + z(1))
    assert square == LaurentPolynomial(ZZ, 2, {(2, 0): 1, (1, 1): 2, (0, 2): 1})
    assert square.coefficientOf((1, 1)) == 2
    assert square.coefficientOf((3, 0)) == 0

def testCancellation():
    f = z(0) * 3 + z(1)
    assert (f + (-1) * f).isZero()
    assert f - f == 0
    assert len(LaurentPolynomial(ZZ, 2, {(1, 0): 1, (0, 1): 0})) == 1

def testRankMismatch():
    with pytest.raises(RankMismatchError):
        z(0, 2) + z(0, 3)
    with pytest.raises(RankMismatchError):
        z(0).coefficientOf((1, 0, 0))

def testMixedDomains():
    f = z(0).scale(FieldQ.one / (1 - qRat))
    assert f.domain == DOMAIN_QF
    assert (f + z(1)).coefficientOf((0, 1)) == 1
    assert f * (1 - qRat) == z(0)

def testNegativePowers():
    monomial = z(0) * z(1)
    assert monomial ** -2 == LaurentPolynomial(ZZ, 2, {(-2, -2): 1})
    assert (monomial ** -1) * monomial == LaurentPolynomial.one(ZZ, 2)
    with pytest.raises(QWhittakerError):
        (z(0) + z(1)) ** -1

def testEmbedAndPermute():
    f = z(0) * z(0) + z(1)
    assert f.extend(3) == LaurentPolynomial(ZZ, 3, {(2, 0, 0): 1, (0, 1, 0): 1})
    assert f.embed(4, 2).exponents() == [(0, 0, 0, 1), (0, 0, 2, 0)]
    assert f.permute((1, 0)) == z(1) * z(1) + z(0)
    assert f.valueAtOnes() == 2
    assert str(f) == 'z2 + z1^2'

@settings(max_examples=50, deadline=None)
@given(terms, terms, terms)
def testRingAxioms(a, b, c):
    f, g, h = laurent(a), laurent(b), laurent(c)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f + g == g + f

def test():
    testSquare()
    testCancellation()
    testNegativePowers()
    logger.info('Done')

if __name__ == '__main__':
    test()
