import logging

import pytest

from QWhittaker.Errors import OutsideConeError
from QWhittaker.ExactArith import DOMAIN_QF, FieldQ, RingQ, qPoly, qRat
from QWhittaker.Laurent import LaurentPolynomial
from QWhittaker.QCombinatorics import sortedPoints, windowPoints
from QWhittaker.Whittaker import (deltaFactor, deltaPrime, gl2ClosedForm, kernelQ, positivityCheck, psiDirect,
                                  psiRecursive, psiTilde, symmetryCheck, translationCheck, weightCheck)

logger = logging.getLogger('TEST')

def assert_equal_psi(actual, expected, p):
    if actual != expected:
        raise AssertionError('Mismatch at {}: {} != {}'.format(p, actual, expected))

def testSmallValues():
    inverse = FieldQ.one / (FieldQ.one - qRat)
    expected = LaurentPolynomial(DOMAIN_QF, 2, {(1, 0): inverse, (0, 1): inverse})
    assert_equal_psi(psiDirect((0, 1)), expected, (0, 1))
    assert psiDirect((1, 0)).isZero()
    assert psiDirect((3,)) == LaurentPolynomial.monomial(DOMAIN_QF, (3,))
    assert psiDirect((2, 2)) == LaurentPolynomial.monomial(DOMAIN_QF, (2, 2))

def testClosedForm():
    for p in windowPoints(2, -2, 3):
        assert_equal_psi(psiDirect(p), gl2ClosedForm(p), p)

def testRecursionMatchesDirectSum():
    for p in windowPoints(3, -1, 2):
        assert_equal_psi(psiRecursive(p), psiDirect(p), p)

def testCharacterForm():
    for p in sortedPoints(3, 0, 2):
        expected = psiDirect(p).scale(FieldQ(deltaFactor(p)))
        assert_equal_psi(psiTilde(p), expected, p)
        assert positivityCheck(p)
        assert symmetryCheck(p)

def testDelta():
    one = RingQ.one
    assert deltaFactor((0, 2, 3)) == (one - qPoly) * (one - qPoly ** 2) * (one - qPoly)
    assert deltaPrime((0, 2, 3)) == deltaFactor((0, 2, 3))
    assert deltaPrime((1, 0)) == 0
    with pytest.raises(OutsideConeError, match='outside dominant cone'):
        deltaFactor((1, 0))

def testKernel():
    square = (FieldQ.one - qRat) * (FieldQ.one - qRat)
    assert kernelQ((0, 2), (1,)) == FieldQ.one / square
    assert kernelQ((0, 2), (3,)) == 0
    assert kernelQ((0, 1, 1), (1, 1)) == FieldQ.one / (FieldQ.one - qRat)

def testLatticeProperties():
    for p in sortedPoints(3, -1, 1):
        assert weightCheck(p)
        assert translationCheck(p, 2)
        assert translationCheck(p, -1)

def test():
    testSmallValues()
    testClosedForm()
    testRecursionMatchesDirectSum()
    testCharacterForm()
    logger.info('Done')

if __name__ == '__main__':
    test()
