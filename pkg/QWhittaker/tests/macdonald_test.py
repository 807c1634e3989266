import logging

import pytest
from sympy.polys.domains import ZZ

from QWhittaker.Errors import QWhittakerError
from QWhittaker.ExactArith import FieldQT, qRat, qRatT, tRat
from QWhittaker.Laurent import LaurentPolynomial
from QWhittaker.Macdonald import (SymmetricFunction, eigenvalueFormula, generatingSeriesCheck, innerProductQT,
                                  macdonaldEigencheck, macdonaldFunction, macdonaldOperatorApply,
                                  macdonaldPartitions, macdonaldPoly, measureEigenvalue, monomialSym,
                                  orthogonalityCheck, powerSumProduct, schurCheck, specializeTToQ,
                                  symmetryPreservedCheck)

logger = logging.getLogger('TEST')

one = FieldQT.one

def assert_passes(outcome, label):
    if not outcome.passed:
        raise AssertionError('{} failed, residual {}'.format(label, outcome.residual))

def testSymmetricBases():
    assert monomialSym((1, 1), 3) == LaurentPolynomial(ZZ, 3, {(1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1})
    assert monomialSym((0, 2)) == LaurentPolynomial(ZZ, 2, {(2, 0): 1, (0, 2): 1})
    square = powerSumProduct((1, 1))
    assert square == LaurentPolynomial(ZZ, 2, {(2, 0): 1, (1, 1): 2, (0, 2): 1})

def testInnerProduct():
    p1 = powerSumProduct((0, 1))
    assert innerProductQT(p1, p1, 2, 4) == (one - qRatT) / (one - tRat)
    with pytest.raises(QWhittakerError, match='degree too large'):
        innerProductQT(monomialSym((0, 3)), monomialSym((0, 3)), 2, 4)

def testSmallMacdonaldPolynomials():
    assert macdonaldPoly((0, 1)) == LaurentPolynomial(ZZ, 2, {(1, 0): 1, (0, 1): 1})
    p2 = macdonaldPoly((0, 2))
    assert p2.coefficientOf((2, 0)) == 1
    assert p2.coefficientOf((1, 1)) == (1 + qRatT) * (1 - tRat) / (1 - qRatT * tRat)
    # P_(1,1) has no lower partition to subtract
    assert macdonaldFunction((1, 1)).coefficients == SymmetricFunction.monomial((1, 1)).coefficients

def testOrthogonality():
    for first, second in (((0, 2), (1, 1)), ((0, 0, 3), (0, 1, 2)), ((0, 1, 2), (1, 1, 1)), ((0, 0, 3), (1, 1, 1))):
        assert_passes(orthogonalityCheck(first, second), 'P{} . P{}'.format(first, second))

def testEigenvalues():
    for topRow in macdonaldPartitions(2, 3):
        for r in (1, 2):
            assert_passes(macdonaldEigencheck(topRow, r), 'H{} P{}'.format(r, topRow))
        assert_passes(generatingSeriesCheck(topRow), 'generating series {}'.format(topRow))
    value, residual = measureEigenvalue((0, 1), 1)
    assert residual.isZero()
    assert value == eigenvalueFormula((0, 1), 1)
    assert eigenvalueFormula((0, 1), 1) == 1 + qRatT * tRat

def testSchurSpecialization():
    assert specializeTToQ(tRat) == qRat
    assert specializeTToQ((1 - tRat) / (1 - qRatT)) == 1
    for topRow in macdonaldPartitions(3, 3):
        assert_passes(schurCheck(topRow), 'P{} at t=q'.format(topRow))

def testOperatorPreservesSymmetry():
    for topRow in ((0, 0, 2), (0, 1, 1), (1, 1, 1)):
        for r in (1, 2, 3):
            assert_passes(symmetryPreservedCheck(r, topRow), 'H{} m{}'.format(r, topRow))
    with pytest.raises(QWhittakerError):
        macdonaldOperatorApply(3, 2, monomialSym((0, 1)))

def testDegreeCap():
    with pytest.raises(QWhittakerError):
        macdonaldFunction((6,))

def testTopRowValidation():
    for topRow in ((-1, 2), (2, 0)):
        with pytest.raises(QWhittakerError, match='weakly increasing'):
            macdonaldPoly(topRow)
        with pytest.raises(QWhittakerError, match='weakly increasing'):
            monomialSym(topRow)
        with pytest.raises(QWhittakerError, match='weakly increasing'):
            macdonaldEigencheck(topRow, 1)

def test():
    testSmallMacdonaldPolynomials()
    testOrthogonality()
    testEigenvalues()
    logger.info('Done')

if __name__ == '__main__':
    test()
