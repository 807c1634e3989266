import logging

import pytest
from sympy.polys.domains import QQ, ZZ

from QWhittaker.Characters import (branchingCheck, cauchyCheck, charGZ, constantTermBranching, dimensionCheck,
                                   fundamentalSplitCheck, hEigencheck, pieriCheck, psiAtQ1, psiQ1, q0LimitCheck,
                                   q1LimitCheck, q1RecursionCheck, schurJacobiTrudi, schurOracleCheck)
from QWhittaker.Errors import QWhittakerError
from QWhittaker.Laurent import LaurentPolynomial
from QWhittaker.QCombinatorics import sortedPoints, windowPoints

logger = logging.getLogger('TEST')

def assert_passes(outcome, label):
    if not outcome.passed:
        raise AssertionError('{} failed, residual {}'.format(label, outcome.residual))

def testCharacterValues():
    chi = charGZ((0, 1, 2))
    assert chi.valueAtOnes() == 8
    assert chi.coefficientOf((1, 1, 1)) == 2
    assert len(chi) == 7
    assert charGZ((0, 0)) == LaurentPolynomial.one(ZZ, 2)
    assert charGZ((1, 0)).isZero()

def testJacobiTrudi():
    assert schurJacobiTrudi((1, 1), 2) == LaurentPolynomial(ZZ, 2, {(1, 1): 1})
    assert schurJacobiTrudi((1, 1, 1), 2).isZero()
    for p in sortedPoints(3, 0, 3):
        assert_passes(schurOracleCheck(p), 'Schur oracle at {}'.format(p))
    with pytest.raises(QWhittakerError):
        schurOracleCheck((-1, 0))

def testQ0Limit():
    for p in windowPoints(3, -1, 2):
        assert_passes(q0LimitCheck(p), 'q=0 at {}'.format(p))

def testPieriAndBranching():
    for n in (2, 3):
        for topRow in sortedPoints(n, 0, 3):
            for r in range(1, n + 1):
                assert_passes(pieriCheck(r, topRow), 'Pieri r={} at {}'.format(r, topRow))
            assert_passes(branchingCheck(topRow), 'branching at {}'.format(topRow))
    for r in range(0, 4):
        assert_passes(fundamentalSplitCheck(r, 3), 'e{} split'.format(r))

def testCauchy():
    for n, m in ((1, 1), (2, 1), (2, 2), (3, 2)):
        for degree in range(4):
            assert_passes(cauchyCheck(n, m, degree), 'Cauchy {}x{} to degree {}'.format(n, m, degree))
    with pytest.raises(QWhittakerError):
        cauchyCheck(1, 2, 2)

def testConstantTermBranching():
    outcome = constantTermBranching((0, 1, 2), 3)
    assert_passes(outcome, 'constant term (0, 1, 2)')
    assert outcome.details['requiredDegree'] == 3
    assert_passes(constantTermBranching((1, 2), 1), 'constant term (1, 2)')
    assert_passes(constantTermBranching((2, 2, 3), 2), 'constant term (2, 2, 3)')
    with pytest.raises(QWhittakerError):
        constantTermBranching((0, 1, 1, 2), 4)

def testQ1Limit():
    assert psiQ1((0, 1)) == LaurentPolynomial(ZZ, 2, {(1, 0): 1, (0, 1): 1})
    assert psiQ1((1, 0)).isZero()
    for p in windowPoints(3, -1, 2):
        assert_passes(q1LimitCheck(p), 'q=1 at {}'.format(p))
    for p in sortedPoints(3, -1, 2):
        for r in (1, 2, 3):
            assert_passes(hEigencheck(r, p), 'h{} at {}'.format(r, p))
    with pytest.raises(QWhittakerError):
        hEigencheck(1, (1, 0))

def testQ1Recursions():
    for p in sortedPoints(3, -1, 2):
        assert_passes(q1RecursionCheck(p), 'q=1 recursion at {}'.format(p))
        outcome = dimensionCheck(p)
        assert_passes(outcome, 'dimension at {}'.format(p))
    assert dimensionCheck((0, 1, 2)).details['dimension'] == 9

def testPsiAtQ1():
    assert psiAtQ1((0, 2)) == LaurentPolynomial(QQ, 2, {(2, 0): QQ(1, 2), (1, 1): 1, (0, 2): QQ(1, 2)})
    assert psiAtQ1((3,)) == LaurentPolynomial(QQ, 1, {(3,): 1})

def testFactorialRecursionReadsPsiTilde(monkeypatch):
    import QWhittaker.Characters as Characters

    def skewed(p, n=None):
        value = psiQ1(p)
        return value + LaurentPolynomial.one(ZZ, 2) if len(p) == 2 else value

    monkeypatch.setattr(Characters, 'psiTilde', skewed)
    outcome = q1RecursionCheck((0, 2))
    assert not outcome.passed
    assert outcome.details == {'form': 'factorial'}

def test():
    testCharacterValues()
    testPieriAndBranching()
    testCauchy()
    testQ1Limit()
    logger.info('Done')

if __name__ == '__main__':
    test()
