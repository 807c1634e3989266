"""
    q-deformed gl(n) Whittaker functions on the lattice.

    All values are Laurent polynomials in z_1..z_n, with z_k standing for
    q^(lambda_k). Points are weakly increasing top rows p_1 <= ... <= p_n;
    everywhere else the function vanishes.
"""
import itertools
import logging
from functools import lru_cache

from QWhittaker.ExactArith import DOMAIN_Q, DOMAIN_QF, FieldQ, RingQ, normalizeRatfun
from QWhittaker.Errors import OutsideConeError, RankMismatchError
from QWhittaker.Laurent import LaurentPolynomial
from QWhittaker.QCombinatorics import (enumerateGZ, enumerateInterlacing, interlaces, isDominant,
                                       qBinomial, qFactorial, theta)

logger = logging.getLogger(__name__)

def _checkRank(p, n):
    p = tuple(p)
    if n is not None and len(p) != n:
        raise RankMismatchError('Point {} is not of rank {}'.format(p, n))
    return p

def _gapFactorials(row):
    value = RingQ.one
    for a, b in zip(row, row[1:]):
        value *= qFactorial(b - a)
    return value

def _kernelDenominator(upper, lower):
    value = RingQ.one
    for i, entry in enumerate(lower):
        value *= qFactorial(entry - upper[i]) * qFactorial(upper[i + 1] - entry)
    return value

def deltaFactor(p):
    """
        Delta(p) = prod_j (p_{j+1} - p_j)_q!, defined on the dominant cone only.
    """
    p = tuple(p)
    if not isDominant(p):
        raise OutsideConeError(p)
    return _gapFactorials(p)

def deltaPrime(p):
    """
        Theta-gated version of Delta used as the lattice measure; 0 off the cone.
    """
    p = tuple(p)
    for a, b in zip(p, p[1:]):
        if not theta(b - a):
            return RingQ.zero
    return _gapFactorials(p)

def kernelQ(upper, lower):
    """
        Lattice kernel Q_{l+1,l}(upper, lower) = 1 / prod (lower_i - upper_i)_q! (upper_{i+1} - lower_i)_q!
        when the rows interlace, 0 otherwise.
    """
    upper, lower = tuple(upper), tuple(lower)
    if len(upper) != len(lower) + 1:
        raise RankMismatchError('Kernel rows of length {} and {}'.format(len(upper), len(lower)))
    if not interlaces(upper, lower):
        return FieldQ.zero
    return normalizeRatfun(RingQ.one, _kernelDenominator(upper, lower))

def _patternCoefficient(pattern):
    rows = pattern.rows
    numer = RingQ.one
    for row in rows[1:-1]:
        numer *= _gapFactorials(row)
    denom = RingQ.one
    for k in range(len(rows) - 1):
        denom *= _kernelDenominator(rows[k + 1], rows[k])
    return numer, denom

@lru_cache(maxsize=None)
def _psiDirect(p):
    n = len(p)
    numerators = {}
    for pattern in enumerateGZ(p):
        numer, denom = _patternCoefficient(pattern)
        weight = pattern.weight()
        term = normalizeRatfun(numer, denom)
        numerators[weight] = numerators.get(weight, FieldQ.zero) + term
    return LaurentPolynomial(DOMAIN_QF, n, numerators)

def psiDirect(p, n=None):
    """
        Psi(p) as the sum over Gelfand-Zetlin patterns with top row p.
    """
    return _psiDirect(_checkRank(p, n))

@lru_cache(maxsize=None)
def _psiTilde(p):
    n = len(p)
    terms = {}
    for pattern in enumerateGZ(p):
        rows = pattern.rows
        coefficient = RingQ.one
        for k in range(n - 1):
            upper, lower = rows[k + 1], rows[k]
            for i, entry in enumerate(lower):
                coefficient *= qBinomial(upper[i + 1] - upper[i], entry - upper[i])
        weight = pattern.weight()
        terms[weight] = terms.get(weight, RingQ.zero) + coefficient
    return LaurentPolynomial(DOMAIN_Q, n, terms)

def psiTilde(p, n=None):
    """
        Character form Delta(p) * Psi(p), a Laurent polynomial over N[q].
    """
    return _psiTilde(_checkRank(p, n))

@lru_cache(maxsize=None)
def _psiRecursive(p):
    n = len(p)
    if not isDominant(p):
        return LaurentPolynomial.zero(DOMAIN_QF, n)
    if n == 1:
        return LaurentPolynomial.monomial(DOMAIN_QF, p)
    total = LaurentPolynomial.zero(DOMAIN_QF, n)
    size = sum(p)
    for lower in enumerateInterlacing(p):
        coefficient = kernelQ(p, lower) * FieldQ(deltaPrime(lower))
        lifted = _psiRecursive(lower).extend(n)
        total = total + lifted.mulMonomial((0,) * (n - 1) + (size - sum(lower),), coefficient)
    return total

def psiRecursive(p, n=None):
    """
        Psi(p) from the rank-lowering recursion through the kernel Q, memoized
        per lattice point; rank-l values live in l variables and are lifted on use.
    """
    return _psiRecursive(_checkRank(p, n))

def gl2ClosedForm(p):
    """
        Psi(p1, p2) = sum_{p1 <= s <= p2} z1^s z2^(p1+p2-s) / ((s-p1)_q! (p2-s)_q!)
    """
    p1, p2 = p
    terms = {}
    for s in range(p1, p2 + 1):
        terms[(s, p1 + p2 - s)] = normalizeRatfun(RingQ.one, qFactorial(s - p1) * qFactorial(p2 - s))
    return LaurentPolynomial(DOMAIN_QF, 2, terms)

def weightCheck(p):
    value = psiDirect(p)
    return all(sum(e) == sum(p) for e in value.exponents())

def translate(p, k):
    return tuple(x + k for x in p)

def translationCheck(p, k):
    n = len(p)
    expected = psiDirect(p).mulMonomial((k,) * n)
    return psiDirect(translate(p, k)) == expected

def symmetryCheck(p):
    """
        Psi-tilde is invariant under every permutation of z_1..z_n.
    """
    value = psiTilde(p)
    return all(value.permute(sigma) == value for sigma in itertools.permutations(range(len(p))))

def positivityCheck(p):
    """
        Every coefficient of Psi-tilde(p) is a polynomial with nonnegative integer coefficients.
    """
    for c in psiTilde(p).coefficients():
        for _, a in c.iterterms():
            if a < 0 or a.denominator != 1:
                return False
    return True
