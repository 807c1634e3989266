import logging

import pytest
from hypothesis import given, settings, strategies as st

from QWhittaker.Errors import QWhittakerError, RankMismatchError
from QWhittaker.ExactArith import FieldQ, qRat
from QWhittaker.QCombinatorics import isDominant, sortedPoints, windowPoints
from QWhittaker.TodaOperators import (LatticeFunction, adjointCheck, apply, buildH, buildHTilde, buildJ, buildShift,
                                      commutativityCheck, conjugationCheck, eigencheck, elementarySymmetric,
                                      intertwineCheck, psiFunction)

logger = logging.getLogger('TEST')

def assert_passes(outcome, label):
    if not outcome.passed:
        raise AssertionError('{} failed, residual {}'.format(label, outcome.residual))

def testOperatorShapes():
    assert len(buildH(1, 3)) == 3
    assert len(buildH(2, 4)) == 6
    assert len(buildHTilde(0, 2)) == 1
    assert len(buildHTilde(3, 2)) == 0
    assert len(buildJ(3, 3)) == 1
    (shift, coefficient), = buildShift(2, 3).coefficientsAt((0, 0, 0))
    assert shift == (0, 1, 1)
    assert coefficient == 1
    with pytest.raises(QWhittakerError):
        buildH(3, 2)

def testHamiltonianCoefficients():
    # X_2(p) = 1 - q^(p_2 - p_1 + 1) on the term T_2
    terms = dict(buildH(1, 2).coefficientsAt((0, 2)))
    assert terms[(1, 0)] == 1
    assert terms[(0, 1)] == 1 - qRat ** 3
    terms = dict(buildJ(1, 2).coefficientsAt((0, 2)))
    assert terms[(1, 0)] == 1 - qRat ** 2
    assert terms[(0, 1)] == 1

def testElementarySymmetric():
    assert elementarySymmetric(0, 3).valueAtOnes() == 1
    assert elementarySymmetric(2, 3).exponents() == [(0, 1, 1), (1, 0, 1), (1, 1, 0)]
    assert elementarySymmetric(4, 3).isZero()

def testEigenfunctionRank2():
    for r in (1, 2):
        for p in windowPoints(2, -1, 3):
            assert_passes(eigencheck(r, p), 'H{} at {}'.format(r, p))

def testEigenfunctionRank3():
    for r in (1, 2, 3):
        for p in windowPoints(3, -1, 1):
            assert_passes(eigencheck(r, p), 'H{} at {}'.format(r, p))

def testCommutativity():
    for p in sortedPoints(3, 0, 1):
        assert_passes(commutativityCheck(1, 2, p), 'commutator at {}'.format(p))

def testConjugation():
    for r in (1, 2):
        for p in sortedPoints(3, 0, 2):
            assert_passes(conjugationCheck(r, p), 'J{} at {}'.format(r, p))

def testIntertwining():
    for upper in windowPoints(2, -1, 2):
        for lower in windowPoints(1, -1, 2):
            for k in (1, 2):
                assert_passes(intertwineCheck(k, upper, lower), 'k={} {} {}'.format(k, upper, lower))
    for upper, lower in (((0, 1, 2), (0, 1)), ((0, 0, 2), (0, 1)), ((-1, 1, 1), (0, 1)), ((0, 2, 1), (1, 1))):
        for k in (1, 2, 3):
            assert_passes(intertwineCheck(k, upper, lower), 'k={} {} {}'.format(k, upper, lower))

def testIntertwiningRankMismatch():
    with pytest.raises(RankMismatchError):
        intertwineCheck(1, (0, 1), (0, 1))

values = st.integers(-3, 3)

@settings(max_examples=25, deadline=None)
@given(st.lists(values, min_size=10, max_size=10), st.lists(values, min_size=10, max_size=10), st.integers(1, 2))
def testAdjointness(fValues, gValues, r):
    cone = [p for p in windowPoints(2, -1, 2) if isDominant(p)]
    reflected = [tuple(-x for x in p) for p in cone]
    f = LatticeFunction.fromTable(2, {w: FieldQ(v) for w, v in zip(reflected, fValues)})
    g = LatticeFunction.fromTable(2, {p: FieldQ(v) + qRat for p, v in zip(cone, gValues)})
    assert_passes(adjointCheck(f, g, r), 'adjoint r={}'.format(r))

def testAdjointRank1():
    f = LatticeFunction.fromTable(1, {(-2,): FieldQ(1), (0,): FieldQ(3)})
    g = LatticeFunction.fromTable(1, {(1,): qRat, (2,): FieldQ(-1)})
    assert_passes(adjointCheck(f, g, 1), 'rank 1 adjoint')

def testApplyRankMismatch():
    with pytest.raises(RankMismatchError):
        apply(buildH(1, 3), psiFunction(2), (0, 1))

def test():
    testOperatorShapes()
    testEigenfunctionRank2()
    testIntertwining()
    testAdjointRank1()
    logger.info('Done')

if __name__ == '__main__':
    test()
