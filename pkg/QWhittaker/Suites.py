"""
    Verification suites run by ``verify``. Each ``<Name>Suite`` is served by
    the SuiteManager; each ``check<Name>`` method yields the Cases of its grid.
"""
import functools
import itertools
import logging

import numpy as np

from QWhittaker import Characters, Degeneration, Macdonald, TodaOperators, Whittaker
from QWhittaker.ExactArith import FieldQ, qRat
from QWhittaker.QCombinatorics import interlaces, isDominant, sortedPoints, windowPoints
from QWhittaker.Report import Outcome
from QWhittaker.Suite import Case

logger = logging.getLogger(__name__)

# intertwining grids above this size are sampled
FULL_GRID_LIMIT = 5000
SAMPLE_SIZE = 500
ADJOINT_TRIALS = 8

def _points(config):
    return windowPoints(config.rank, *config.window)

def _sorted(config):
    return sortedPoints(config.rank, *config.window)

def _nonnegative(config, high=None):
    return sortedPoints(config.rank, 0, config.maxPart + 1 if high is None else high)

def _case(func, **params):
    return Case({key: list(value) if isinstance(value, tuple) else value for key, value in params.items()},
                functools.partial(func, *params.values()))

def _samePsi(first, second):
    residual = first - second
    return Outcome(residual.isZero(), residual)

class EigenSuite:
    def checkEigen(self, config):
        for r in range(1, config.rank + 1):
            for p in _points(config):
                yield _case(TodaOperators.eigencheck, r=r, p=p)

    def checkClosedForm(self, config):
        low, high = config.window
        for p in windowPoints(2, low - 1, high):
            yield Case({'p': list(p)}, functools.partial(lambda p: _samePsi(Whittaker.psiDirect(p), Whittaker.gl2ClosedForm(p)), p))

    def checkCommutativity(self, config):
        for r, s in itertools.combinations(range(1, config.rank + 1), 2):
            for p in _points(config):
                yield _case(TodaOperators.commutativityCheck, r=r, s=s, p=p)

    def checkConjugation(self, config):
        if config.rank > 3:
            return
        for r in range(1, config.rank + 1):
            for p in sortedPoints(config.rank, max(config.window[0], 0), config.window[1]):
                yield _case(TodaOperators.conjugationCheck, r=r, p=p)

class RecursionSuite:
    def checkRecursion(self, config):
        for p in _points(config):
            yield Case({'p': list(p)}, functools.partial(lambda p: _samePsi(Whittaker.psiRecursive(p), Whittaker.psiDirect(p)), p))

    def checkTranslation(self, config):
        for p in _sorted(config):
            for k in (-2, -1, 1, 2):
                yield _case(Whittaker.translationCheck, p=p, k=k)

    def checkWeight(self, config):
        for p in _sorted(config):
            yield _case(Whittaker.weightCheck, p=p)

def _intertwineGrid(config):
    """
        Window cases on which the kernel is read somewhere on interlacing rows;
        the rest are 0 = 0.
    """
    grid = []
    skipped = 0
    for l in (1, 2):
        for upper in windowPoints(l + 1, *config.window):
            for lower in windowPoints(l, *config.window):
                for k in range(1, l + 2):
                    if TodaOperators.intertwineSupport(k, upper, lower):
                        grid.append((k, upper, lower))
                    else:
                        skipped += 1
    logger.debug('Intertwining grid keeps {} cases, {} vanish identically'.format(len(grid), skipped))
    return grid

class IntertwineSuite:
    def checkIntertwine(self, config):
        grid = _intertwineGrid(config)
        if len(grid) > FULL_GRID_LIMIT:
            rng = np.random.default_rng(config.seed)
            chosen = sorted(rng.choice(len(grid), size=SAMPLE_SIZE, replace=False).tolist())
            logger.info('Sampling {} of {} intertwining cases'.format(SAMPLE_SIZE, len(grid)))
            grid = [grid[i] for i in chosen]
        for k, upper, lower in grid:
            yield _case(TodaOperators.intertwineCheck, k=k, upper=upper, lower=lower)

def _randomTable(rng, points):
    table = {}
    for p in points:
        if rng.random() < 0.6:
            a, b = (int(x) for x in rng.integers(-3, 4, size=2))
            table[p] = FieldQ(a) + b * qRat
    return table

class AdjointSuite:
    """
        Seeded finite-support f on the reflected cone and g on the cone.
    """
    def checkAdjoint(self, config):
        rng = np.random.default_rng(config.seed)
        for l in (1, 2):
            points = windowPoints(l, *config.window)
            cone = [p for p in points if isDominant(p)]
            reflected = [w for w in points if isDominant(tuple(-x for x in w))]
            for r in range(1, l + 1):
                for trial in range(ADJOINT_TRIALS):
                    f = TodaOperators.LatticeFunction.fromTable(l, _randomTable(rng, reflected))
                    g = TodaOperators.LatticeFunction.fromTable(l, _randomTable(rng, cone))
                    params = {'rank': l, 'r': r, 'trial': trial, 'seed': config.seed}
                    yield Case(params, functools.partial(TodaOperators.adjointCheck, f, g, r))

class PieriSuite:
    def checkPieri(self, config):
        for r in range(1, config.rank + 1):
            for topRow in sortedPoints(config.rank, 0, config.maxPart):
                yield _case(Characters.pieriCheck, r=r, topRow=topRow)

    def checkFundamentalSplit(self, config):
        for n in range(2, config.rank + 1):
            for r in range(0, n + 1):
                yield _case(Characters.fundamentalSplitCheck, r=r, n=n)

class BranchingSuite:
    def checkBranching(self, config):
        if config.rank < 2:
            return
        for topRow in sortedPoints(config.rank, 0, config.maxPart):
            yield _case(Characters.branchingCheck, topRow=topRow)

    def checkConstantTerm(self, config):
        n = min(config.rank, 3)
        if n < 2:
            return
        for topRow in sortedPoints(n, 0, config.maxPart):
            if sum(x - topRow[0] for x in topRow) <= config.degreeBound:
                yield _case(Characters.constantTermBranching, topRow=topRow, degree=config.degreeBound)

CAUCHY_SHAPES = ((1, 1), (2, 1), (2, 2), (3, 2))

class CauchySuite:
    def checkCauchy(self, config):
        for n, m in CAUCHY_SHAPES:
            if n > config.rank:
                continue
            for degree in range(config.degreeBound + 1):
                yield _case(Characters.cauchyCheck, n=n, m=m, degree=degree)

class Q0Suite:
    def checkQ0Limit(self, config):
        for p in _nonnegative(config):
            yield _case(Characters.q0LimitCheck, p=p)

    def checkSchurOracle(self, config):
        for p in _nonnegative(config):
            yield _case(Characters.schurOracleCheck, topRow=p)

class Q1Suite:
    def checkQ1Limit(self, config):
        for p in _points(config):
            yield _case(Characters.q1LimitCheck, p=p)

    def checkShiftEigen(self, config):
        for r in range(1, config.rank + 1):
            for p in _sorted(config):
                yield _case(Characters.hEigencheck, r=r, p=p)

    def checkRecursion(self, config):
        if config.rank < 2:
            return
        for p in _sorted(config):
            yield _case(Characters.q1RecursionCheck, p=p)

    def checkDimension(self, config):
        for p in _sorted(config):
            yield _case(Characters.dimensionCheck, p=p)

class PositivitySuite:
    def checkPositivity(self, config):
        for p in _nonnegative(config):
            yield _case(Whittaker.positivityCheck, p=p)

    def checkSymmetry(self, config):
        for p in _nonnegative(config):
            yield _case(Whittaker.symmetryCheck, p=p)

def _macdonaldRows(config):
    n = min(config.rank, 3)
    return n, Macdonald.macdonaldPartitions(n, min(config.degreeBound, 4))

class MacdonaldSuite:
    def checkOrthogonality(self, config):
        n, rows = _macdonaldRows(config)
        for first, second in itertools.combinations(rows, 2):
            if sum(first) == sum(second):
                yield _case(Macdonald.orthogonalityCheck, first=first, second=second)

    def checkEigen(self, config):
        n, rows = _macdonaldRows(config)
        for topRow in rows:
            for r in range(1, n + 1):
                yield _case(Macdonald.macdonaldEigencheck, topRow=topRow, r=r)

    def checkGeneratingSeries(self, config):
        n, rows = _macdonaldRows(config)
        for topRow in rows:
            yield _case(Macdonald.generatingSeriesCheck, topRow=topRow)

    def checkSchur(self, config):
        n, rows = _macdonaldRows(config)
        for topRow in rows:
            yield _case(Macdonald.schurCheck, topRow=topRow)

    def checkSymmetryPreserved(self, config):
        n, rows = _macdonaldRows(config)
        for topRow in rows:
            for r in range(1, n + 1):
                yield _case(Macdonald.symmetryPreservedCheck, r=r, topRow=topRow)

def samplePoint(n):
    """
        x_i = 3^(1-i): (1, 1/3, 1/9, ...).
    """
    return tuple(3.0 ** -i for i in range(n))

KERNEL_SAMPLES = (1 / 3, 1 / 4, -1 / 2)

class DegenerateSuite:
    def checkToda(self, config):
        point = samplePoint(config.rank)
        for r in range(1, config.rank + 1):
            params = {'r': r, 'n': config.rank, 'q': str(config.qValue), 'k': list(config.kList), 'x': list(point)}
            yield Case(params, functools.partial(Degeneration.todaDegenerationCheck, r, config.rank,
                                                 config.qValue, config.kList, point))

    def checkKernelLimit(self, config):
        params = {'q': str(config.qValue), 'k': list(config.kList), 'w': list(KERNEL_SAMPLES), 'truncation': config.truncation}
        yield Case(params, functools.partial(Degeneration.kernelLimitCheck, config.qValue, config.kList,
                                             KERNEL_SAMPLES, config.truncation))

    def checkKernelLattice(self, config):
        for l in (1, 2):
            for upper in sortedPoints(l + 1, 0, 2):
                for lower in sortedPoints(l, 0, 2):
                    if interlaces(upper, lower):
                        params = {'upper': list(upper), 'lower': list(lower), 'q': str(config.qValue)}
                        yield Case(params, functools.partial(Degeneration.kernelLatticeCheck, upper, lower,
                                                             config.qValue, config.truncation))
