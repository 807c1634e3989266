"""
    q -> 0 and modified q -> 1 degenerations: gl(n) characters from
    Gelfand-Zetlin patterns, their Pieri, branching and Cauchy identities,
    and the fundamental-character form of Psi-tilde at q = 1.
"""
import itertools
import logging
import math
from functools import lru_cache

from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.rings import ring

from QWhittaker.ExactArith import evalAtQ, toQQ
from QWhittaker.Errors import QWhittakerError
from QWhittaker.Laurent import LaurentPolynomial
from QWhittaker.QCombinatorics import (enumerateGZ, enumerateInterlacing, fromPartition, isDominant,
                                       partitionsOf, subsets, toPartition)
from QWhittaker.Report import Outcome
from QWhittaker.TodaOperators import LatticeFunction, apply, buildShift, elementarySymmetric
from QWhittaker.Whittaker import psiDirect, psiTilde

logger = logging.getLogger(__name__)

@lru_cache(maxsize=None)
def _charGZ(topRow):
    terms = {}
    for pattern in enumerateGZ(topRow):
        weight = pattern.weight()
        terms[weight] = terms.get(weight, 0) + 1
    return LaurentPolynomial(ZZ, len(topRow), terms)

def charGZ(topRow, n=None):
    """
        chi_Lambda(z) = sum over GZ patterns of prod z_k^(s_k - s_{k-1}); zero for unsorted rows.
    """
    topRow = tuple(topRow)
    if n is not None and n != len(topRow):
        raise QWhittakerError('Top row {} is not of rank {}'.format(topRow, n))
    return _charGZ(topRow)

def completeHomogeneous(k, n):
    if k < 0:
        return LaurentPolynomial.zero(ZZ, n)
    terms = {}
    for combination in itertools.combinations_with_replacement(range(n), k):
        exponent = [0] * n
        for i in combination:
            exponent[i] += 1
        terms[tuple(exponent)] = 1
    return LaurentPolynomial(ZZ, n, terms)

@lru_cache(maxsize=None)
def _zRing(n):
    return ring(['z{}'.format(i + 1) for i in range(n)], ZZ)[0]

def schurJacobiTrudi(partition, n):
    """
        s_lambda(z_1..z_n) = det[h_{lambda_i - i + j}], lambda descending.
    """
    parts = [x for x in partition if x]
    if len(parts) > n:
        return LaurentPolynomial.zero(ZZ, n)
    size = len(parts)
    if size == 0:
        return LaurentPolynomial.one(ZZ, n)
    zRing = _zRing(n)
    rows = [[zRing.from_dict(dict(completeHomogeneous(parts[i] - i + j, n).items())) for j in range(size)]
            for i in range(size)]
    det = DomainMatrix(rows, (size, size), zRing.to_domain()).det()
    return LaurentPolynomial(ZZ, n, dict(det.iterterms()))

def schurOracleCheck(topRow):
    topRow = tuple(topRow)
    if topRow[0] < 0:
        raise QWhittakerError('Schur oracle needs nonnegative parts, got {}'.format(topRow))
    expected = schurJacobiTrudi(toPartition(topRow), len(topRow))
    residual = charGZ(topRow) - expected
    return Outcome(residual.isZero(), residual)

def q0LimitCheck(p, n=None):
    p = tuple(p)
    residual = evalAtQ(psiDirect(p, n), 0) - charGZ(p)
    return Outcome(residual.isZero(), residual)

def _addSubset(topRow, subset):
    return tuple(x + (1 if i in subset else 0) for i, x in enumerate(topRow))

def pieriCheck(r, topRow, n=None):
    """
        chi_r chi_Lambda = sum_{I_r} chi_{Lambda + e_I}, unsorted shifts contributing 0.
    """
    topRow = tuple(topRow)
    n = len(topRow) if n is None else n
    lhs = elementarySymmetric(r, n) * charGZ(topRow)
    rhs = LaurentPolynomial.zero(ZZ, n)
    for subset in subsets(n, r):
        rhs = rhs + charGZ(_addSubset(topRow, subset))
    residual = lhs - rhs
    return Outcome(residual.isZero(), residual)

def branchingCheck(topRow, n=None):
    """
        chi_Lambda(z_1..z_n) = sum_{mu interlacing} z_n^(|Lambda| - |mu|) chi_mu(z_1..z_{n-1}).
    """
    topRow = tuple(topRow)
    n = len(topRow) if n is None else n
    if n < 2:
        raise QWhittakerError('Branching needs rank at least 2')
    rhs = LaurentPolynomial.zero(ZZ, n)
    for lower in enumerateInterlacing(topRow):
        rhs = rhs + charGZ(lower).extend(n).mulMonomial((0,) * (n - 1) + (sum(topRow) - sum(lower),))
    residual = charGZ(topRow) - rhs
    return Outcome(residual.isZero(), residual)

def fundamentalSplitCheck(r, n):
    """
        e_r(z_1..z_n) = e_r(z_1..z_{n-1}) + z_n e_{r-1}(z_1..z_{n-1})
    """
    rhs = elementarySymmetric(r, n - 1).extend(n) \
        + elementarySymmetric(r - 1, n - 1).extend(n).mulMonomial((0,) * (n - 1) + (1,))
    residual = elementarySymmetric(r, n) - rhs
    return Outcome(residual.isZero(), residual)

def _truncate(poly, degree, count):
    return poly.select(lambda e: sum(e[:count]) <= degree)

def _geometricKernel(n, m, degree, sign):
    """
        prod_{i,j} 1 / (1 - x_i y_j^sign), truncated at x-degree ``degree``,
        in n + m variables ordered x then y.
    """
    nvars = n + m
    kernel = LaurentPolynomial.one(ZZ, nvars)
    for i in range(n):
        for j in range(m):
            series = {}
            for a in range(degree + 1):
                exponent = [0] * nvars
                exponent[i] = a
                exponent[n + j] = sign * a
                series[tuple(exponent)] = 1
            kernel = _truncate(kernel * LaurentPolynomial(ZZ, nvars, series), degree, n)
    return kernel

def cauchyCheck(n, m, degree):
    """
        prod 1/(1 - x_i y_j) = sum_Lambda chi_Lambda(x) chi_Lambda(y), up to x-degree ``degree``.
    """
    if m > n:
        raise QWhittakerError('Cauchy check needs m <= n, got n={} m={}'.format(n, m))
    nvars = n + m
    lhs = _geometricKernel(n, m, degree, 1)
    rhs = LaurentPolynomial.zero(ZZ, nvars)
    for size in range(degree + 1):
        for partition in partitionsOf(size, m):
            chiX = charGZ(fromPartition(partition, n)).embed(nvars, 0)
            chiY = charGZ(fromPartition(partition, m)).embed(nvars, n)
            rhs = rhs + chiX * chiY
    residual = lhs - rhs
    return Outcome(residual.isZero(), residual)

def constantTermBranching(topRow, degree, n=None):
    """
        chi_Lambda(x) = 1/l! CT_y [ prod 1/(1 - x_i/y_j) chi_mu(y) prod_{i != j} (1 - y_i/y_j) ]
        with y in l = n - 1 variables, mu the last l entries of Lambda - Lambda_1,
        and the kernel expanded up to ``degree``.
    """
    topRow = tuple(topRow)
    n = len(topRow) if n is None else n
    if not 2 <= n <= 3:
        raise QWhittakerError('Constant-term branching is available for rank 2 and 3, got {}'.format(n))
    if not isDominant(topRow):
        raise QWhittakerError('Constant-term branching needs a sorted top row, got {}'.format(topRow))
    shift = topRow[0]
    base = tuple(x - shift for x in topRow)
    mu = base[1:]
    l = n - 1
    nvars = n + l

    integrand = _geometricKernel(n, l, degree, -1) * charGZ(mu).embed(nvars, n)
    for i in range(l):
        for j in range(l):
            if i != j:
                exponent = [0] * nvars
                exponent[n + i] = 1
                exponent[n + j] = -1
                integrand = integrand * (LaurentPolynomial.one(ZZ, nvars) - LaurentPolynomial.monomial(ZZ, exponent))
    constant = integrand.select(lambda e: not any(e[n:]))
    recovered = LaurentPolynomial(QQ, n, {e[:n]: c for e, c in constant.items()})
    recovered = recovered.scale(QQ(1, math.factorial(l))).mulMonomial((shift,) * n)
    residual = recovered - charGZ(topRow)
    required = sum(base)
    return Outcome(residual.isZero(), residual, {'value': recovered, 'requiredDegree': required})

def psiQ1(p, n=None):
    """
        e_n^(p_1) prod_{i=1..n-1} e_{n-i}^(p_{i+1} - p_i), zero off the cone.
    """
    p = tuple(p)
    n = len(p) if n is None else n
    if not isDominant(p):
        return LaurentPolynomial.zero(ZZ, n)
    value = elementarySymmetric(n, n) ** p[0]
    for i in range(1, n):
        value = value * elementarySymmetric(n - i, n) ** (p[i] - p[i - 1])
    return value

def psiQ1Function(n):
    return LatticeFunction.fromRule(n, psiQ1, LaurentPolynomial.zero(ZZ, n))

def q1LimitCheck(p, n=None):
    residual = evalAtQ(psiTilde(p, n), 1) - psiQ1(p, n)
    return Outcome(residual.isZero(), residual)

def hEigencheck(r, p, n=None):
    """
        h_r psi = e_r(z) psi with h_r the shift of the last r coordinates, on the cone.
    """
    p = tuple(p)
    n = len(p) if n is None else n
    if not isDominant(p):
        raise QWhittakerError('Shift eigen-equation needs a sorted point, got {}'.format(p))
    lhs = apply(buildShift(r, n), psiQ1Function(n), p)
    residual = lhs - elementarySymmetric(r, n) * psiQ1(p, n)
    return Outcome(residual.isZero(), residual)

def _factorialProduct(row):
    value = 1
    for a, b in zip(row, row[1:]):
        value *= math.factorial(b - a)
    return value

def psiAtQ1(p):
    """
        psi(p) = Psi-tilde(p)|_{q=1} / Delta_1(p), Delta_1(p) = prod (p_{i+1} - p_i)!.
    """
    p = tuple(p)
    return evalAtQ(psiTilde(p), 1).scale(QQ(1, _factorialProduct(p)))

def q1RecursionCheck(p, n=None):
    """
        At q = 1 the recursion over interlacing rows holds with ordinary binomials for
        the product formula psiQ1, and with ordinary factorials for psi = psi-tilde / Delta_1
        read off Psi-tilde at q = 1.
    """
    p = tuple(p)
    n = len(p) if n is None else n
    if n < 2 or not isDominant(p):
        raise QWhittakerError('q=1 recursion needs a sorted point of rank >= 2, got {}'.format(p))
    size = sum(p)
    binomialSide = LaurentPolynomial.zero(ZZ, n)
    factorialSide = LaurentPolynomial.zero(QQ, n)
    for lower in enumerateInterlacing(p):
        weight = (0,) * (n - 1) + (size - sum(lower),)
        lifted = psiQ1(lower).extend(n).mulMonomial(weight)
        binomial = 1
        denominator = 1
        for i, entry in enumerate(lower):
            binomial *= math.comb(p[i + 1] - p[i], entry - p[i])
            denominator *= math.factorial(entry - p[i]) * math.factorial(p[i + 1] - entry)
        binomialSide = binomialSide + lifted.scale(binomial)
        psiLower = psiAtQ1(lower).extend(n).mulMonomial(weight)
        factorialSide = factorialSide + psiLower.scale(QQ(_factorialProduct(lower), denominator))
    binomialResidual = binomialSide - psiQ1(p)
    factorialResidual = factorialSide - psiAtQ1(p)
    if not binomialResidual.isZero():
        return Outcome(False, binomialResidual, {'form': 'binomial'})
    return Outcome(factorialResidual.isZero(), factorialResidual, {'form': 'factorial'})

def dimensionCheck(p, n=None):
    """
        psi at z = 1 equals prod binom(n, n-i)^(p_{i+1} - p_i), the dimension of the
        tensor product of fundamental modules; negative p_1 is translated away first.
    """
    p = tuple(p)
    n = len(p) if n is None else n
    if not isDominant(p):
        raise QWhittakerError('Dimension check needs a sorted point, got {}'.format(p))
    base = tuple(x - min(p[0], 0) for x in p)
    expected = math.comb(n, n) ** base[0]
    for i in range(1, n):
        expected *= math.comb(n, n - i) ** (base[i] - base[i - 1])
    value = psiQ1(base).valueAtOnes()
    passed = value == expected
    return Outcome(passed, None if passed else toQQ(int(value) - expected), {'dimension': int(value), 'expected': expected})
