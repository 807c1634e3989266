import logging
from fractions import Fraction

from sympy import symbols, sympify
from sympy.polys.domains import QQ, ZZ
from sympy.polys.fields import FracElement, field
from sympy.polys.rings import PolyElement, ring

from QWhittaker.Errors import DivisionByZeroPolynomial, PoleError, QWhittakerError

logger = logging.getLogger(__name__)

Q_SYMBOL, T_SYMBOL = symbols('q t')

# Q[q], Q(q), Q[q,t], Q(q,t)
RingQ, qPoly = ring([Q_SYMBOL], QQ)
FieldQ, qRat = field([Q_SYMBOL], QQ)
RingQT, qPolyT, tPoly = ring([Q_SYMBOL, T_SYMBOL], QQ)
FieldQT, qRatT, tRat = field([Q_SYMBOL, T_SYMBOL], QQ)

DOMAIN_Q = RingQ.to_domain()
DOMAIN_QF = FieldQ.to_domain()
DOMAIN_QT = RingQT.to_domain()
DOMAIN_QTF = FieldQT.to_domain()

_PARSE_LOCALS = {'q': Q_SYMBOL, 't': T_SYMBOL}

def toFraction(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    return Fraction(int(c.numerator), int(c.denominator))

def toQQ(value):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)

def domainOf(value):
    if isinstance(value, (PolyElement, FracElement)):
        return value.parent()
    if isinstance(value, int) or ZZ.of_type(value):
        return ZZ
    if QQ.of_type(value):
        return QQ
    if isinstance(value, Fraction):
        return QQ
    raise QWhittakerError('No coefficient domain for value of type {}'.format(type(value).__name__))

def unifyDomains(first, second):
    if first == second:
        return first
    # ground numbers fold into any composite domain over QQ
    if first in (ZZ, QQ) and second.is_Composite and second.domain == QQ:
        return second
    if second in (ZZ, QQ) and first.is_Composite and first.domain == QQ:
        return first
    return first.unify(second)

def coerce(value, domain):
    if isinstance(value, Fraction):
        value = toQQ(value)
    return domain.convert(value)

def polyGcd(a, b):
    """
        Monic greatest common divisor in Q[q]; gcd(0, 0) = 0.
    """
    a, b = RingQ(a), RingQ(b)
    if not a and not b:
        return RingQ.zero
    return a.gcd(b).monic()

def normalizeRatfun(numer, denom, target=FieldQ):
    """
        Canonical form of numer/denom in ``target``: coprime integer
        polynomials with a positive leading denominator coefficient.
    """
    numer = target.ring(numer)
    denom = target.ring(denom)
    if not denom:
        raise DivisionByZeroPolynomial()
    return target.new(numer, denom)

def _evalPoly(poly, q0):
    return toFraction(poly.evaluate(poly.ring.gens[0], toQQ(q0)))

def evalAtQ(x, q0):
    """
        Exact substitution q = q0.

        Rational functions and polynomials evaluate to a Fraction; anything
        carrying a ``mapCoefficients`` method (Laurent polynomials) is
        evaluated coefficient-wise into QQ.
    """
    q0 = Fraction(q0)
    if hasattr(x, 'mapCoefficients'):
        return x.mapCoefficients(lambda c: toQQ(evalAtQ(c, q0)), QQ)
    if isinstance(x, FracElement):
        denom = _evalPoly(x.denom, q0)
        if denom == 0:
            raise PoleError(q0)
        return _evalPoly(x.numer, q0) / denom
    if isinstance(x, PolyElement):
        return _evalPoly(x, q0)
    return toFraction(x)

def oneMinusQPower(e):
    """
        1 - q^e in Q(q), e of either sign.
    """
    return FieldQ.one - qRat ** e

def _formatNumber(c):
    c = toFraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return '{}/{}'.format(c.numerator, c.denominator)

def _formatMonomial(names, exponents):
    parts = []
    for name, e in zip(names, exponents):
        if e == 1:
            parts.append(name)
        elif e != 0:
            parts.append('{}^{}'.format(name, e))
    return '*'.join(parts)

def formatPolynomial(poly):
    """
        Ascending string form, e.g. ``1 - q^2`` or ``1 + q*t``.
    """
    if isinstance(poly, (int, Fraction)) or ZZ.of_type(poly) or QQ.of_type(poly):
        return _formatNumber(poly)
    names = [str(s) for s in poly.ring.symbols]
    terms = sorted(poly.iterterms(), key=lambda term: (sum(term[0]), tuple(term[0])))
    if not terms:
        return '0'
    out = ''
    for index, (monom, c) in enumerate(terms):
        c = toFraction(c)
        negative = c < 0
        magnitude = -c if negative else c
        monomial = _formatMonomial(names, monom)
        if not monomial:
            body = _formatNumber(magnitude)
        elif magnitude == 1:
            body = monomial
        else:
            body = '{}*{}'.format(_formatNumber(magnitude), monomial)
        if index == 0:
            out = '-' + body if negative else body
        else:
            out += (' - ' if negative else ' + ') + body
    return out

def numerDenom(value):
    """
        Numerator and denominator strings for any supported coefficient.
    """
    if isinstance(value, FracElement):
        return formatPolynomial(value.numer), formatPolynomial(value.denom)
    if isinstance(value, PolyElement):
        return formatPolynomial(value), '1'
    c = toFraction(value)
    return str(c.numerator), str(c.denominator)

def parseRatfun(numer, denom, target=FieldQT):
    """
        Inverse of ``numerDenom``; the target field has to carry every symbol used.
    """
    num = target.ring.from_expr(sympify(numer, locals=_PARSE_LOCALS))
    den = target.ring.from_expr(sympify(denom, locals=_PARSE_LOCALS))
    return normalizeRatfun(num, den, target)

def polynomialToList(poly):
    """
        Univariate polynomial as [[exponent, numerator, denominator], ...], ascending.
    """
    poly = RingQ(poly)
    out = []
    for (k,), c in sorted(poly.iterterms()):
        c = toFraction(c)
        out.append([k, str(c.numerator), str(c.denominator)])
    return out

def polynomialFromList(rows):
    return RingQ.from_dict({(int(k),): QQ(int(num), int(den)) for k, num, den in rows})
