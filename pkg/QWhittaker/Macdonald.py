"""
    Small-rank Macdonald polynomials over Q(q,t).

    Symmetric functions of a fixed degree are kept in the monomial basis of
    all partitions of that degree, so Gram-Schmidt runs in the full space of
    symmetric functions and only the final restriction depends on the number
    of variables.
"""
import itertools
import logging
import math
from collections import Counter
from functools import lru_cache

from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import ring
from sympy.utilities.iterables import multiset_permutations

from QWhittaker.ExactArith import DOMAIN_QF, DOMAIN_QTF, FieldQ, FieldQT, coerce, qRatT, tRat
from QWhittaker.Errors import InternalError, PoleError, QWhittakerError
from QWhittaker.Laurent import LaurentPolynomial
from QWhittaker.QCombinatorics import dominates, fromPartition, isDominant, partitionsOf, subsets, toPartition
from QWhittaker.Report import Outcome

logger = logging.getLogger(__name__)

MAX_TOTAL_DOMINANCE_DEGREE = 5

def checkTopRow(topRow):
    """
        Top rows are ascending partitions: 0 <= Lambda_1 <= ... <= Lambda_n.
    """
    topRow = tuple(topRow)
    if not isDominant(topRow) or (topRow and topRow[0] < 0):
        raise QWhittakerError('Top row {} must be nonnegative and weakly increasing'.format(topRow))
    return topRow

def _partitionOf(topRow):
    return tuple(x for x in toPartition(checkTopRow(topRow)) if x)

def monomialSym(topRow, n=None):
    """
        m_Lambda(x_1..x_n), summed over distinct permutations of the exponent vector.
    """
    topRow = tuple(topRow)
    n = len(topRow) if n is None else n
    exponent = list(toPartition(fromPartition(_partitionOf(topRow), n)))
    return LaurentPolynomial(ZZ, n, {tuple(e): 1 for e in multiset_permutations(exponent)})

def powerSum(k, n):
    return LaurentPolynomial(ZZ, n, {tuple(k if i == j else 0 for j in range(n)): 1 for i in range(n)})

def powerSumProduct(topRow, n=None):
    """
        pi_Lambda = prod over nonzero parts of pi_k = sum_i x_i^k.
    """
    topRow = tuple(topRow)
    n = len(topRow) if n is None else n
    value = LaurentPolynomial.one(ZZ, n)
    for part in _partitionOf(topRow):
        value = value * powerSum(part, n)
    return value

def zLambda(partition):
    """
        z_Lambda(q,t) = prod_k k^(m_k) m_k! * prod_parts (1 - q^part) / (1 - t^part).
    """
    value = FieldQT.one
    for part, multiplicity in Counter(partition).items():
        value *= FieldQT(part ** multiplicity * math.factorial(multiplicity))
    for part in partition:
        value *= (FieldQT.one - qRatT ** part) / (FieldQT.one - tRat ** part)
    return value

@lru_cache(maxsize=None)
def _powerSumBasis(degree):
    """
        Partitions of ``degree`` and the matrix taking m-coordinates to p-coordinates.
    """
    parts = partitionsOf(degree)
    # p_lambda expanded in ``degree`` variables sees every m_mu
    rows = []
    for lam in parts:
        expanded = powerSumProduct(fromPartition(lam, max(degree, 1)))
        rows.append([expanded.coefficientOf(toPartition(fromPartition(mu, max(degree, 1)))) for mu in parts])
    matrix = DomainMatrix.from_list(rows, QQ)
    inverse = matrix.inv().to_list()
    return parts, inverse

class SymmetricFunction:
    """
        Homogeneous symmetric function sum_mu a_mu m_mu with coefficients in Q(q,t).
    """
    def __init__(self, degree, coefficients):
        self.degree = degree
        self.coefficients = {tuple(mu): FieldQT(c) for mu, c in coefficients.items() if c}

    @classmethod
    def monomial(cls, partition):
        return cls(sum(partition), {tuple(partition): 1})

    @classmethod
    def fromLaurent(cls, poly, n):
        """
            Read m-coordinates off a symmetric polynomial in n variables; exact only while degree <= n.
        """
        degrees = poly.totalDegrees()
        if len(degrees) > 1:
            raise QWhittakerError('Polynomial is not homogeneous: degrees {}'.format(sorted(degrees)))
        degree = degrees.pop() if degrees else 0
        if degree > n:
            raise QWhittakerError('degree too large for faithful power-sum expansion: {} > {}'.format(degree, n))
        coefficients = {}
        for mu in partitionsOf(degree, n):
            coefficients[mu] = coerce(poly.coefficientOf(toPartition(fromPartition(mu, n))), DOMAIN_QTF)
        return cls(degree, coefficients)

    def __add__(self, other):
        coefficients = dict(self.coefficients)
        for mu, c in other.coefficients.items():
            coefficients[mu] = coefficients.get(mu, FieldQT.zero) + c
        return SymmetricFunction(self.degree, coefficients)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return SymmetricFunction(self.degree, {mu: value * c for mu, value in self.coefficients.items()})

    def coefficient(self, partition):
        return self.coefficients.get(tuple(partition), FieldQT.zero)

    def powerSumCoordinates(self):
        parts, inverse = _powerSumBasis(self.degree)
        index = {mu: i for i, mu in enumerate(parts)}
        out = [FieldQT.zero] * len(parts)
        for mu, a in self.coefficients.items():
            row = inverse[index[mu]]
            for j, entry in enumerate(row):
                if entry:
                    out[j] += a * FieldQT(entry)
        return dict(zip(parts, out))

    def inner(self, other):
        """
            <f, g>_{q,t} = sum_lambda f_lambda g_lambda z_lambda(q,t) in power-sum coordinates.
        """
        if self.degree != other.degree:
            return FieldQT.zero
        left, right = self.powerSumCoordinates(), other.powerSumCoordinates()
        total = FieldQT.zero
        for lam, a in left.items():
            if a and right[lam]:
                total += a * right[lam] * zLambda(lam)
        return total

    def restrict(self, n):
        """
            The symmetric polynomial in x_1..x_n.
        """
        value = LaurentPolynomial.zero(DOMAIN_QTF, n)
        for mu, c in self.coefficients.items():
            if len(mu) <= n:
                value = value + monomialSym(fromPartition(mu, n)).scale(c)
        return value

    def isZero(self):
        return not self.coefficients

def innerProductQT(f, g, n, degreeBound):
    """
        (q,t) scalar product of two symmetric polynomials in n variables.
    """
    first = SymmetricFunction.fromLaurent(f, n)
    second = SymmetricFunction.fromLaurent(g, n)
    for value in (first, second):
        if value.degree > degreeBound:
            raise QWhittakerError('Degree {} exceeds the bound {}'.format(value.degree, degreeBound))
    return first.inner(second)

@lru_cache(maxsize=None)
def macdonaldFunction(partition):
    """
        P_lambda by Gram-Schmidt on monomial functions in lexicographic order,
        which refines dominance and is total up to degree 5.
    """
    partition = tuple(x for x in partition if x)
    degree = sum(partition)
    if degree > MAX_TOTAL_DOMINANCE_DEGREE:
        raise QWhittakerError('Dominance order is not total in degree {}'.format(degree))
    lower = [mu for mu in partitionsOf(degree) if mu < partition]
    for mu in lower:
        if not dominates(partition, mu):
            raise InternalError('Lexicographic order does not refine dominance: {} vs {}'.format(partition, mu))
    value = SymmetricFunction.monomial(partition)
    start = value
    for mu in sorted(lower):
        previous = macdonaldFunction(mu)
        value = value - previous.scale(start.inner(previous) / previous.inner(previous))
    logger.debug('Computed P{} with {} monomial terms'.format(partition, len(value.coefficients)))
    return value

def macdonaldPoly(topRow, n=None):
    topRow = tuple(topRow)
    n = len(topRow) if n is None else n
    return macdonaldFunction(_partitionOf(topRow)).restrict(n)

@lru_cache(maxsize=None)
def _xRing(n):
    return ring(['x{}'.format(i + 1) for i in range(n)], DOMAIN_QTF)

def _toRing(poly, xRing):
    if not poly.isPolynomial():
        raise QWhittakerError('Macdonald operators act on polynomials, got negative exponents')
    return xRing.from_dict({e: coerce(c, DOMAIN_QTF) for e, c in poly.items()})

def _shifted(element, subset, xRing):
    terms = {}
    for exponent, c in element.iterterms():
        power = sum(exponent[i] for i in subset)
        terms[exponent] = c * qRatT ** power
    return xRing.from_dict(terms)

def macdonaldOperatorApply(r, n, f):
    """
        H_r f = sum_{I_r} t^(r(r-1)/2) prod_{i in I, j not in I} (t x_i - x_j)/(x_i - x_j) T_I f,
        T_i x_i = q x_i, computed over a common Vandermonde denominator.
    """
    if not 1 <= r <= n:
        raise QWhittakerError('Operator index r={} out of range for {} variables'.format(r, n))
    xRing, *xs = _xRing(n)
    element = _toRing(f, xRing)
    vandermonde = xRing.one
    for i, j in itertools.combinations(range(n), 2):
        vandermonde *= xs[i] - xs[j]
    total = xRing.zero
    prefactor = tRat ** (r * (r - 1) // 2)
    for subset in subsets(n, r):
        numer = xRing.one
        denom = xRing.one
        for i in subset:
            for j in range(n):
                if j not in subset:
                    numer *= xs[i] * tRat - xs[j]
                    denom *= xs[i] - xs[j]
        total += numer * vandermonde.exquo(denom) * _shifted(element, subset, xRing) * prefactor
    try:
        result = total.exquo(vandermonde)
    except ExactQuotientFailed:
        raise InternalError('Macdonald operator H{} left a non-polynomial result'.format(r))
    return LaurentPolynomial(DOMAIN_QTF, n, dict(result.iterterms()))

def _leading(topRow, n):
    return toPartition(fromPartition(_partitionOf(topRow), n))

def eigenvalueFormula(topRow, r, n=None, literal=False):
    """
        c_Lambda^r = e_r(q^(Lambda_i) t^(i-1)) with ascending Lambda, i.e. the largest
        part paired with the highest power of t. ``literal=True`` gives the
        pairing q^(Lambda_i) t^(n-i) read literally on the ascending row.
    """
    topRow = tuple(topRow)
    n = len(topRow) if n is None else n
    row = fromPartition(_partitionOf(topRow), n)
    values = []
    for i, part in enumerate(row):
        tPower = n - 1 - i if literal else i
        values.append(qRatT ** part * tRat ** tPower)
    total = FieldQT.zero
    for subset in subsets(n, r):
        term = FieldQT.one
        for i in subset:
            term *= values[i]
        total += term
    return total

def measureEigenvalue(topRow, r, n=None):
    topRow = tuple(topRow)
    n = len(topRow) if n is None else n
    poly = macdonaldPoly(topRow, n)
    image = macdonaldOperatorApply(r, n, poly)
    value = image.coefficientOf(_leading(topRow, n))
    residual = image - poly.scale(value)
    return value, residual

def macdonaldEigencheck(topRow, r, n=None):
    """
        H_r P_Lambda = c P_Lambda with c measured on the leading monomial and
        compared with the eigenvalue formula.
    """
    value, residual = measureEigenvalue(topRow, r, n)
    formula = eigenvalueFormula(topRow, r, n)
    details = {'eigenvalue': value, 'formula': formula,
               'literalFormulaMatches': value == eigenvalueFormula(topRow, r, n, literal=True)}
    if not residual.isZero():
        return Outcome(False, residual, details)
    mismatch = value - formula
    return Outcome(not mismatch, mismatch if mismatch else None, details)

def generatingSeriesCheck(topRow, n=None):
    """
        sum_r xi^(n-r) c_r = prod_i (xi + q^(Lambda_sigma(i)) t^(n-i)) for some pairing sigma.
    """
    topRow = tuple(topRow)
    n = len(topRow) if n is None else n
    xiRing, xi = ring('xi', DOMAIN_QTF)
    measured = xiRing(xi ** n)
    for r in range(1, n + 1):
        value, residual = measureEigenvalue(topRow, r, n)
        if not residual.isZero():
            return Outcome(False, residual, {'r': r})
        measured += xi ** (n - r) * value
    row = fromPartition(_partitionOf(topRow), n)
    for sigma in itertools.permutations(range(n)):
        product = xiRing.one
        for i in range(n):
            product *= xi + qRatT ** row[sigma[i]] * tRat ** (n - 1 - i)
        if product == measured:
            return Outcome(True, None, {'pairing': list(sigma)})
    return Outcome(False, None, {'series': str(measured)})

def specializeTToQ(value):
    """
        Substitute t = q in an element of Q(q,t).
    """
    value = FieldQT(value)
    q, t = value.numer.ring.gens
    numer = FieldQ.ring(value.numer.compose(t, q).drop(t))
    denom = FieldQ.ring(value.denom.compose(t, q).drop(t))
    if not denom:
        raise PoleError()
    return FieldQ.new(numer, denom)

def schurCheck(topRow, n=None):
    """
        At t = q the Macdonald polynomial is the Schur polynomial.
    """
    from QWhittaker.Characters import charGZ

    topRow = tuple(topRow)
    n = len(topRow) if n is None else n
    specialized = macdonaldPoly(topRow, n).mapCoefficients(specializeTToQ, DOMAIN_QF)
    residual = specialized - charGZ(fromPartition(_partitionOf(topRow), n))
    return Outcome(residual.isZero(), residual)

def orthogonalityCheck(first, second):
    value = macdonaldFunction(_partitionOf(first)).inner(macdonaldFunction(_partitionOf(second)))
    return Outcome(not value, value if value else None)

def symmetryPreservedCheck(r, topRow, n=None):
    """
        H_r maps a symmetric homogeneous polynomial to one of the same kind and degree.
    """
    topRow = tuple(topRow)
    n = len(topRow) if n is None else n
    f = monomialSym(topRow, n)
    image = macdonaldOperatorApply(r, n, f)
    symmetric = all(image.permute(sigma) == image for sigma in itertools.permutations(range(n)))
    sameDegree = image.isZero() or image.totalDegrees() == f.totalDegrees()
    return Outcome(symmetric and sameDegree, None if symmetric and sameDegree else image)

def macdonaldPartitions(n, degreeBound):
    """
        Ascending top rows of length n with |Lambda| <= degreeBound.
    """
    out = []
    for size in range(degreeBound + 1):
        for partition in partitionsOf(size, n):
            out.append(fromPartition(partition, n))
    return out
