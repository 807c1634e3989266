import logging
import numbers
from fractions import Fraction

import numpy as np
from sympy.polys.domains import QQ, ZZ
from sympy.polys.fields import FracElement
from sympy.polys.rings import PolyElement

from QWhittaker.ExactArith import DOMAIN_QF, coerce, numerDenom, parseRatfun
from QWhittaker.Errors import QWhittakerError
from QWhittaker.Laurent import LaurentPolynomial
from QWhittaker.QCombinatorics import GZPattern
from QWhittaker.Report import VerificationReport

logger = logging.getLogger(__name__)

def normalizeCoefficient(value):
    numer, denom = numerDenom(value)
    return {'num': numer, 'den': denom}

def normalizeLaurent(poly):
    """
        [{"z": [e1..en], "coeff": {"num": ..., "den": ...}}, ...] in lexicographic exponent order.
    """
    return [{'z': list(exponent), 'coeff': normalizeCoefficient(c)} for exponent, c in poly.items()]

def normalizeReport(report):
    out = {
        'check': report.check,
        'params': report.params,
        'status': report.status,
        'wallTime': round(report.wallTime, 6),
    }
    if not report.passed:
        out['residual'] = report.residual
    if report.details:
        out['details'] = report.details
    return out

def _parseCoefficient(coeff, domain):
    if domain.is_FractionField:
        return parseRatfun(coeff['num'], coeff['den'], domain.field)
    if domain.is_PolynomialRing:
        value = parseRatfun(coeff['num'], coeff['den'], domain.ring.to_field())
        if value.denom != 1:
            raise QWhittakerError('Coefficient {} is not a polynomial'.format(coeff))
        return domain.convert(value.numer)
    return coerce(Fraction(coeff['num']) / Fraction(coeff['den']), domain)

def _groundType(otype):
    return otype in (type(ZZ.one), type(QQ.one)) and otype is not int

class NormalizerManager:
    def __init__(self, app):
        self._normalizers   = []
        self._denormalizers = {}

        self.addNormalizer(lambda otype: issubclass(otype, Exception), lambda obj: str(obj))
        self.addNormalizer(lambda otype: issubclass(otype, (Fraction, FracElement, PolyElement)) or _groundType(otype),
                           normalizeCoefficient)
        self.addNormalizer(lambda otype: otype is LaurentPolynomial, normalizeLaurent)
        self.addNormalizer(lambda otype: otype is VerificationReport, normalizeReport)
        self.addNormalizer(lambda otype: otype is GZPattern, lambda obj: obj.toList(), tagged=True)
        self.addNormalizer(lambda otype: issubclass(otype, np.ndarray), lambda obj: obj.tolist())
        self.addNormalizer(lambda otype: issubclass(otype, np.generic), lambda obj: obj.item())
        self.addNormalizer(lambda otype: otype is tuple, list)

        self.addDenormalizer(GZPattern.__name__, GZPattern)

    def addDenormalizer(self, name, denormalizerFunc):
        self._denormalizers[name] = denormalizerFunc
        return self

    def addNormalizer(self, applicableFunc, normalizeFunc, tagged=False):
        """
            Tagged normalizers wrap their output as {"__obj__": type name, "__content__": ...}
            so that ``denormalize`` can rebuild the object.
        """
        self._normalizers.insert(0, (applicableFunc, normalizeFunc, tagged))
        return self

    def getNormalizer(self, oType):
        for applicableFunc, normalizerFunc, tagged in self._normalizers:
            if applicableFunc(oType):
                return normalizerFunc, tagged
        return None

    def denormalize(self, node):
        if type(node) is list:
            return [self.denormalize(element) for element in node]
        elif type(node) is dict:
            if '__obj__' in node:
                name = node['__obj__']
                if name not in self._denormalizers:
                    raise QWhittakerError('Cannot denormalize object of type {}'.format(name))
                return self._denormalizers[name](node['__content__'])
            return {key: self.denormalize(element) for key, element in node.items()}
        return node

    def denormalizeLaurent(self, rows, nvars=None, domain=DOMAIN_QF):
        """
            Inverse of ``normalizeLaurent`` for coefficients in a field of
            rational functions, a polynomial ring over Q, or Q itself.
        """
        if not rows and nvars is None:
            raise QWhittakerError('The rank of an empty Laurent polynomial has to be given')
        nvars = len(rows[0]['z']) if nvars is None else nvars
        terms = {}
        for row in rows:
            terms[tuple(row['z'])] = _parseCoefficient(row['coeff'], domain)
        return LaurentPolynomial(domain, nvars, terms)

    def normalize(self, node):
        oType = type(node)
        if node is None or isinstance(node, (bool, str)):
            return node
        normalizer = self.getNormalizer(oType)
        if normalizer is not None:
            normalizeFunc, tagged = normalizer
            content = self.normalize(normalizeFunc(node))
            if tagged:
                return {'__obj__': oType.__name__, '__content__': content}
            return content
        if oType is list:
            return [self.normalize(element) for element in node]
        elif oType is dict:
            return {str(key): self.normalize(element) for key, element in node.items()}
        elif isinstance(node, numbers.Number):
            return node
        raise QWhittakerError('Cannot normalize current object of type {}, please register a normalizer for this type.'.format(oType.__name__))
