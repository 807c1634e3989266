import logging
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from QWhittaker.Errors import DivisionByZeroPolynomial, PoleError
from QWhittaker.ExactArith import (FieldQ, FieldQT, RingQ, evalAtQ, formatPolynomial, normalizeRatfun,
                                   numerDenom, parseRatfun, polyGcd, polynomialFromList, polynomialToList,
                                   qPoly, qRat, qRatT, tRat)

logger = logging.getLogger('TEST')

def polynomial(coefficients):
    return sum((c * qPoly ** k for k, c in enumerate(coefficients)), RingQ.zero)

small = st.lists(st.integers(-4, 4), min_size=1, max_size=4)

def assert_same(actual, expected):
    if actual != expected:
        raise AssertionError('{} != {}'.format(actual, expected))

def testPolyGcd():
    one = RingQ.one
    assert_same(polyGcd(one - qPoly ** 2, one - qPoly), qPoly - 1)
    assert_same(polyGcd(one - qPoly ** 3, one - qPoly ** 2), qPoly - 1)
    assert_same(polyGcd(3 - 3 * qPoly, RingQ.zero), qPoly - 1)
    assert_same(polyGcd(RingQ.zero, RingQ.zero), RingQ.zero)

def testNormalizeRatfun():
    one = RingQ.one
    value = normalizeRatfun(one - qPoly ** 2, one - qPoly)
    assert_same(value, FieldQ(one + qPoly))
    assert value.denom == 1
    assert normalizeRatfun(RingQ.zero, one - qPoly) == 0
    product = (one - qPoly) * (one - qPoly ** 2)
    assert_same(normalizeRatfun(one - qPoly ** 2, product), FieldQ.one / (FieldQ.one - qRat))

def testDivisionByZero():
    with pytest.raises(DivisionByZeroPolynomial, match='division by zero polynomial'):
        normalizeRatfun(RingQ.one, RingQ.zero)
    with pytest.raises(ZeroDivisionError):
        normalizeRatfun(qPoly, RingQ.zero)

def testEvalAtQ():
    inverse = FieldQ.one / (FieldQ.one - qRat)
    assert evalAtQ(inverse, 0) == 1
    assert evalAtQ(1 + qPoly, 1) == 2
    assert evalAtQ(inverse, Fraction(1, 2)) == 2
    with pytest.raises(PoleError, match='pole at q0'):
        evalAtQ(inverse, 1)

def testFormatting():
    assert formatPolynomial(RingQ.one - qPoly ** 2) == '1 - q^2'
    assert numerDenom(FieldQ.one / (FieldQ.one - qRat)) == ('-1', '-1 + q')
    assert numerDenom(Fraction(-3, 4)) == ('-3', '4')
    value = (1 + qRatT * tRat) / (1 - tRat)
    assert parseRatfun(*numerDenom(value)) == value

def testPolynomialRows():
    value = RingQ.one - 2 * qPoly ** 3
    rows = polynomialToList(value)
    assert rows == [[0, '1', '1'], [3, '-2', '1']]
    assert polynomialFromList(rows) == value

@settings(max_examples=40, deadline=None)
@given(small, small, st.fractions(min_value=-2, max_value=2, max_denominator=5))
def testEvalIsRingHomomorphism(a, b, q0):
    f, g = polynomial(a), polynomial(b)
    assert evalAtQ(f * g, q0) == evalAtQ(f, q0) * evalAtQ(g, q0)
    assert evalAtQ(f + g, q0) == evalAtQ(f, q0) + evalAtQ(g, q0)

@settings(max_examples=40, deadline=None)
@given(small, small, small)
def testNormalizeCancelsCommonFactor(a, b, c):
    numer, denom, common = polynomial(a), polynomial(b), polynomial(c)
    if not denom or not common:
        return
    assert normalizeRatfun(numer * common, denom * common) == normalizeRatfun(numer, denom)
    once = normalizeRatfun(numer, denom)
    assert normalizeRatfun(once.numer, once.denom) == once

def testQTField():
    value = (FieldQT.one - tRat) / (FieldQT.one - qRatT * tRat)
    assert value * (FieldQT.one - qRatT * tRat) == FieldQT.one - tRat

def test():
    testPolyGcd()
    testNormalizeRatfun()
    testEvalAtQ()
    testFormatting()
    logger.info('Done')

if __name__ == '__main__':
    test()
