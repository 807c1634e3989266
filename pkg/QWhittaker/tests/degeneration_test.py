import logging
from fractions import Fraction

import numpy as np
import pytest

from QWhittaker.Degeneration import (factorIdentities, isMonotone, kernelLatticeCheck, kernelLimitCheck,
                                     rescaledCoefficients, todaCoefficients, todaDegenerationCheck)
from QWhittaker.Errors import QWhittakerError

logger = logging.getLogger('TEST')

POINT = (1.0, 1.0 / 3.0)

def testTodaLimitRank2():
    for r in (1, 2):
        outcome = todaDegenerationCheck(r, 2, Fraction(1, 2), (4, 8, 12), POINT)
        assert outcome.passed, outcome.details
        deviations = [row['deviation'] for row in outcome.details['table']]
        assert deviations[-1] < 1e-3
        assert isMonotone(deviations)
    table = todaDegenerationCheck(1, 2, Fraction(1, 2), (4, 8, 12), POINT).details['table']
    assert table[0]['deviation'] > table[1]['deviation'] > table[2]['deviation']

def testTodaLimitRank3():
    for r in (1, 2, 3):
        outcome = todaDegenerationCheck(r, 3, Fraction(1, 2), (4, 8, 12, 16), (1.0, 0.5, 0.2))
        assert outcome.passed, outcome.details

def testCoefficientLimit():
    x = np.array([1.0, 0.25, 0.1])
    limit = todaCoefficients(2, x)
    assert np.allclose(limit, [1.0, 1.0 - 0.1 / 0.25, 1.0 - 0.25])
    far = rescaledCoefficients(2, x, 0.5, 20)
    assert np.allclose(far, limit, atol=1e-5)

def testRejectsBadInput():
    with pytest.raises(QWhittakerError):
        todaDegenerationCheck(1, 2, Fraction(3, 2), (4, 8), POINT)
    with pytest.raises(QWhittakerError):
        todaDegenerationCheck(1, 2, Fraction(1, 2), (4, 8), (1.0, 1.0))
    with pytest.raises(QWhittakerError):
        todaDegenerationCheck(1, 3, Fraction(1, 2), (4, 8), POINT)

def testFactorIdentities():
    for name, (truncated, finite) in factorIdentities(1.0 / 3.0, 0.5, 4).items():
        assert truncated == pytest.approx(finite, rel=1e-12), name
    # w q^-2 = 1 puts a zero into the truncated denominator
    assert factorIdentities(0.25, 0.5, 4)['negativeBlock'][0] is None

def testKernelLimit():
    outcome = kernelLimitCheck(Fraction(1, 2), (4, 8, 12), (1.0 / 3.0, 0.25, -0.5))
    assert outcome.passed, outcome.residual
    assert any(row['deviation'] is None for row in outcome.details['table'])

def testKernelLattice():
    for upper, lower in (((0, 1), (0,)), ((0, 2), (1,)), ((0, 1, 2), (1, 1)), ((0, 0, 1), (0, 1))):
        outcome = kernelLatticeCheck(upper, lower, Fraction(1, 2))
        assert outcome.passed, outcome.details
    outcome = kernelLatticeCheck((0, 1), (2,), Fraction(1, 2))
    assert outcome.details['exact'] == 0.0

def test():
    testTodaLimitRank2()
    testFactorIdentities()
    testKernelLimit()
    logger.info('Done')

if __name__ == '__main__':
    test()
