"""
    Numeric harness for the t = q^-k, k -> infinity degeneration of the
    Macdonald-Ruijsenaars operators to the q-Toda Hamiltonians, and for the
    factor identities behind the infinite-product kernel.
"""
import logging
from fractions import Fraction

import numpy as np

import QWhittaker.Constants as Constants
from QWhittaker.ExactArith import evalAtQ
from QWhittaker.Errors import QWhittakerError
from QWhittaker.QCombinatorics import subsets
from QWhittaker.Report import Outcome
from QWhittaker.Whittaker import kernelQ

logger = logging.getLogger(__name__)

# deviations below this are treated as already converged
MACHINE_FLOOR = 1e-14

def _checkDistinct(values):
    values = np.asarray(values, dtype=float)
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            scale = max(abs(values[i]), abs(values[j]))
            if abs(values[i] - values[j]) <= 1e-12 * scale:
                raise QWhittakerError('coincident coordinates {} and {}'.format(values[i], values[j]))

def rescaledCoefficients(r, x, qValue, k):
    """
        Coefficients of H_{r,k}: the Macdonald coefficients at x_i t^-i, t = q^-k,
        times t^(-sum_{i in I} (n - i)) from conjugation by prod x_i^(-k(n-i)).
    """
    x = np.asarray(x, dtype=float)
    n = len(x)
    t = float(qValue) ** (-k)
    scaled = x * t ** -np.arange(1, n + 1, dtype=float)
    _checkDistinct(scaled)
    out = []
    for subset in subsets(n, r):
        value = t ** (r * (r - 1) // 2)
        for i in subset:
            for j in range(n):
                if j not in subset:
                    value *= (t * scaled[i] - scaled[j]) / (scaled[i] - scaled[j])
        value *= t ** -sum(n - 1 - i for i in subset)
        out.append(value)
    return np.array(out)

def todaCoefficients(r, x):
    """
        Coefficients of the q-Toda Hamiltonian in x: prod (1 - x_i / x_{i-1}) over
        i in I with i-1 not in I and i > 1.
    """
    x = np.asarray(x, dtype=float)
    out = []
    for subset in subsets(len(x), r):
        value = 1.0
        for i in subset:
            if i >= 1 and (i - 1) not in subset:
                value *= 1.0 - x[i] / x[i - 1]
        out.append(value)
    return np.array(out)

def shiftEvaluations(r, x, qValue, exponents):
    """
        Test dictionary: f_m(q^(e_I) x) for monomials f_m(x) = prod x_i^(m_i), one row per m.
    """
    x = np.asarray(x, dtype=float)
    rows = []
    for m in exponents:
        m = np.asarray(m, dtype=float)
        base = float(np.prod(x ** m))
        rows.append([base * float(qValue) ** float(sum(m[i] for i in subset)) for subset in subsets(len(x), r)])
    return np.array(rows)

def _testExponents(n):
    exponents = [(0,) * n]
    for i in range(n):
        exponents.append(tuple(1 if j == i else 0 for j in range(n)))
    exponents.append((1,) * n)
    return exponents

def isMonotone(deviations):
    for previous, current in zip(deviations, deviations[1:]):
        if current >= previous and current > MACHINE_FLOOR:
            return False
    return True

def todaDegenerationCheck(r, n, qValue, kList, point, tolerance=Constants.DEFAULT_TOLERANCE):
    """
        Sup-norm deviation between H_{r,k} and the q-Toda H_r on the test dictionary,
        for each k. Passes when the deviations decrease and the last one is below tolerance.
    """
    qValue = Fraction(qValue)
    if not 0 < qValue < 1:
        raise QWhittakerError('q must lie in (0, 1), got {}'.format(qValue))
    point = np.asarray(point, dtype=float)
    if len(point) != n:
        raise QWhittakerError('Sample point {} is not of rank {}'.format(list(point), n))
    if np.any(point == 0):
        raise QWhittakerError('Sample point needs nonzero coordinates')
    _checkDistinct(point)
    limit = todaCoefficients(r, point)
    evaluations = shiftEvaluations(r, point, qValue, _testExponents(n))
    table = []
    for k in kList:
        coefficients = rescaledCoefficients(r, point, qValue, k)
        deviation = float(np.max(np.abs(evaluations @ (coefficients - limit))))
        table.append({'k': k, 'deviation': deviation,
                      'coefficientDeviation': float(np.max(np.abs(coefficients - limit)))})
        logger.debug('r={} k={} deviation={:.3e}'.format(r, k, deviation))
    deviations = [row['deviation'] for row in table]
    passed = isMonotone(deviations) and deviations[-1] < tolerance
    return Outcome(passed, None if passed else deviations[-1], {'table': table, 'limit': limit.tolist()})

def _truncatedProduct(factors):
    numer = 1.0
    denom = 1.0
    for top, bottom in factors:
        numer *= top
        denom *= bottom
    if abs(denom) < MACHINE_FLOOR:
        return None
    return numer / denom

def factorIdentities(w, qValue, k, m=1, truncation=Constants.DEFAULT_TRUNCATION):
    """
        The four factor types of the kernel product, each as (truncated infinite
        product, finite product); a truncated side hitting a zero denominator is None.
    """
    q = float(qValue)
    w = float(w)
    span = range(truncation)
    identities = {
        'negativeShift': (
            _truncatedProduct([(1 - w * q ** (j - k), 1 - w * q ** j) for j in span]),
            float(np.prod([1 - w * q ** -j for j in range(1, k + 1)])),
        ),
        'positiveShift': (
            _truncatedProduct([(1 - w * q ** j, 1 - w * q ** (j + k)) for j in span]),
            float(np.prod([1 - w * q ** j for j in range(k)])),
        ),
        'negativeBlock': (
            _truncatedProduct([(1 - w * q ** (j - (m + 1) * k), 1 - w * q ** (j - m * k)) for j in span]),
            float(np.prod([1 - w * q ** -j for j in range(m * k + 1, (m + 1) * k + 1)])),
        ),
        'positiveBlock': (
            _truncatedProduct([(1 - w * q ** (j + m * k), 1 - w * q ** (j + (m + 1) * k)) for j in span]),
            float(np.prod([1 - w * q ** j for j in range(m * k, (m + 1) * k)])),
        ),
    }
    return identities

def kernelLimitCheck(qValue, kList, samples, truncation=Constants.DEFAULT_TRUNCATION, tolerance=1e-10):
    """
        Relative deviation of every factor identity over the given k and w = x*y samples.
    """
    if not 0 < abs(float(qValue)) < 1:
        raise QWhittakerError('|q| must be below 1, got {}'.format(qValue))
    table = []
    worst = 0.0
    for k in kList:
        for w in samples:
            for name, (truncated, finite) in factorIdentities(w, qValue, k, truncation=truncation).items():
                if truncated is None:
                    table.append({'k': k, 'w': float(w), 'identity': name, 'deviation': None})
                    continue
                deviation = abs(truncated - finite) / max(1.0, abs(finite))
                worst = max(worst, deviation)
                table.append({'k': k, 'w': float(w), 'identity': name, 'deviation': deviation})
    passed = worst < tolerance
    return Outcome(passed, None if passed else worst, {'table': table, 'truncation': truncation})

def infiniteKernel(x, y, qValue, truncation=Constants.DEFAULT_TRUNCATION):
    """
        Q(x, y) = prod_i prod_{s>=1} (1 - q^s / (x_i y_i)) / (1 - q^s)
                * prod_{i<n} prod_{s>=1} (1 - x_{i+1} y_i q^(s-1)) / (1 - q^s), truncated.
    """
    q = float(qValue)
    value = 1.0
    for s in range(1, truncation + 1):
        for i in range(len(y)):
            value *= (1 - q ** s / (x[i] * y[i])) / (1 - q ** s)
            value *= (1 - x[i + 1] * y[i] * q ** (s - 1)) / (1 - q ** s)
    return value

def kernelLatticeCheck(upper, lower, qValue, truncation=Constants.DEFAULT_TRUNCATION, tolerance=1e-9):
    """
        The truncated product at x_i = q^(P_i + i - 1), y_i = q^(-p_i - i + 1)
        against the exact lattice kernel evaluated at q.
    """
    q = float(qValue)
    x = [q ** (upper[i] + i) for i in range(len(upper))]
    y = [q ** (-lower[i] - i) for i in range(len(lower))]
    numeric = infiniteKernel(x, y, qValue, truncation)
    exact = float(evalAtQ(kernelQ(upper, lower), Fraction(qValue)))
    deviation = abs(numeric - exact) / max(1.0, abs(exact))
    return Outcome(deviation < tolerance, None if deviation < tolerance else deviation,
                   {'numeric': numeric, 'exact': exact, 'deviation': deviation})
