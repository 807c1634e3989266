import logging

from QWhittaker.ExactArith import coerce, domainOf, unifyDomains
from QWhittaker.Errors import QWhittakerError, RankMismatchError

logger = logging.getLogger(__name__)

class LaurentPolynomial:
    """
        Finitely supported map from integer exponent vectors in z_1..z_n to
        coefficients of a sympy domain (ZZ, QQ, Q[q], Q(q), Q(q,t), ...).

        Values are immutable: every operation returns a new polynomial.
        Zero coefficients are never stored.
    """
    __slots__ = ('domain', 'nvars', '_terms')

    def __init__(self, domain, nvars, terms=None):
        self.domain = domain
        self.nvars = nvars
        store = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for exponent, coefficient in items:
                exponent = tuple(int(e) for e in exponent)
                if len(exponent) != nvars:
                    raise RankMismatchError('Exponent {} does not have {} entries'.format(exponent, nvars))
                value = coerce(coefficient, domain)
                if exponent in store:
                    value = store[exponent] + value
                if value:
                    store[exponent] = value
                else:
                    store.pop(exponent, None)
        self._terms = store

    @classmethod
    def _raw(cls, domain, nvars, store):
        obj = cls.__new__(cls)
        obj.domain = domain
        obj.nvars = nvars
        obj._terms = store
        return obj

    @classmethod
    def zero(cls, domain, nvars):
        return cls._raw(domain, nvars, {})

    @classmethod
    def one(cls, domain, nvars):
        return cls.monomial(domain, (0,) * nvars)

    @classmethod
    def monomial(cls, domain, exponent, coefficient=1):
        return cls(domain, len(exponent), {tuple(exponent): coefficient})

    @classmethod
    def variable(cls, domain, nvars, index):
        exponent = [0] * nvars
        exponent[index] = 1
        return cls.monomial(domain, exponent)

    def items(self):
        """
            Terms in lexicographic order of exponent vectors.
        """
        return sorted(self._terms.items())

    def exponents(self):
        return sorted(self._terms)

    def coefficients(self):
        return [c for _, c in self.items()]

    def coefficientOf(self, exponent):
        exponent = tuple(exponent)
        if len(exponent) != self.nvars:
            raise RankMismatchError('Exponent {} does not have {} entries'.format(exponent, self.nvars))
        return self._terms.get(exponent, self.domain.zero)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def isZero(self):
        return not self._terms

    def _checkRank(self, other):
        if self.nvars != other.nvars:
            raise RankMismatchError('Variable count mismatch: {} != {}'.format(self.nvars, other.nvars))

    def convert(self, domain):
        if domain == self.domain:
            return self
        return LaurentPolynomial(domain, self.nvars, self._terms)

    def _unified(self, other):
        self._checkRank(other)
        domain = unifyDomains(self.domain, other.domain)
        return self.convert(domain), other.convert(domain)

    def __add__(self, other):
        if not isinstance(other, LaurentPolynomial):
            other = LaurentPolynomial.monomial(domainOf(other), (0,) * self.nvars, other)
        left, right = self._unified(other)
        store = dict(left._terms)
        for exponent, c in right._terms.items():
            value = store.get(exponent, left.domain.zero) + c
            if value:
                store[exponent] = value
            else:
                store.pop(exponent, None)
        return LaurentPolynomial._raw(left.domain, left.nvars, store)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial._raw(self.domain, self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, LaurentPolynomial):
            other = LaurentPolynomial.monomial(domainOf(other), (0,) * self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, scalar):
        domain = unifyDomains(self.domain, domainOf(scalar))
        value = coerce(scalar, domain)
        if not value:
            return LaurentPolynomial.zero(domain, self.nvars)
        source = self.convert(domain)
        store = {}
        for exponent, c in source._terms.items():
            product = c * value
            if product:
                store[exponent] = product
        return LaurentPolynomial._raw(domain, self.nvars, store)

    def __mul__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return self.scale(other)
        left, right = self._unified(other)
        store = {}
        zero = left.domain.zero
        for e1, c1 in left._terms.items():
            for e2, c2 in right._terms.items():
                exponent = tuple(a + b for a, b in zip(e1, e2))
                store[exponent] = store.get(exponent, zero) + c1 * c2
        store = {e: c for e, c in store.items() if c}
        return LaurentPolynomial._raw(left.domain, left.nvars, store)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, power):
        if power < 0:
            if len(self._terms) != 1:
                raise QWhittakerError('Only monomials have negative powers in a Laurent ring')
            (exponent, c), = self._terms.items()
            field = self.domain if self.domain.is_Field else self.domain.get_field()
            inverse = field.quo(field.one, field.convert(c))
            return LaurentPolynomial(field, self.nvars, {tuple(e * power for e in exponent): field.pow(inverse, -power)})
        result = LaurentPolynomial.one(self.domain, self.nvars)
        base = self
        while power:
            if power & 1:
                result = result * base
            power >>= 1
            if power:
                base = base * base
        return result

    def mulMonomial(self, exponent, coefficient=None):
        exponent = tuple(exponent)
        if len(exponent) != self.nvars:
            raise RankMismatchError('Exponent {} does not have {} entries'.format(exponent, self.nvars))
        store = {tuple(a + b for a, b in zip(e, exponent)): c for e, c in self._terms.items()}
        shifted = LaurentPolynomial._raw(self.domain, self.nvars, store)
        return shifted if coefficient is None else shifted.scale(coefficient)

    def extend(self, nvars):
        """
            Same polynomial viewed in more variables, new ones appended with exponent 0.
        """
        return self.embed(nvars, 0)

    def embed(self, nvars, offset):
        if offset + self.nvars > nvars:
            raise RankMismatchError('Cannot place {} variables at offset {} among {}'.format(self.nvars, offset, nvars))
        pad = nvars - offset - self.nvars
        store = {(0,) * offset + e + (0,) * pad: c for e, c in self._terms.items()}
        return LaurentPolynomial._raw(self.domain, nvars, store)

    def permute(self, permutation):
        """
            Substitute z_i -> z_{permutation[i]}.
        """
        store = {}
        for exponent, c in self._terms.items():
            image = [0] * self.nvars
            for i, e in enumerate(exponent):
                image[permutation[i]] = e
            store[tuple(image)] = c
        return LaurentPolynomial._raw(self.domain, self.nvars, store)

    def select(self, predicate):
        store = {e: c for e, c in self._terms.items() if predicate(e)}
        return LaurentPolynomial._raw(self.domain, self.nvars, store)

    def mapCoefficients(self, func, domain):
        return LaurentPolynomial(domain, self.nvars, {e: func(c) for e, c in self._terms.items()})

    def totalDegrees(self):
        return {sum(e) for e in self._terms}

    def isPolynomial(self):
        return all(min(e, default=0) >= 0 for e in self._terms)

    def valueAtOnes(self):
        """
            The sum of all coefficients, i.e. the value at z = (1, ..., 1).
        """
        total = self.domain.zero
        for c in self._terms.values():
            total += c
        return total

    def __eq__(self, other):
        if isinstance(other, LaurentPolynomial):
            if self.nvars != other.nvars or set(self._terms) != set(other._terms):
                return False
            left, right = self._unified(other)
            return left._terms == right._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __repr__(self):
        return 'LaurentPolynomial({}, {}, {})'.format(self.domain, self.nvars, self.items())

    def __str__(self):
        if not self._terms:
            return '0'
        names = ['z{}'.format(i + 1) for i in range(self.nvars)]
        out = []
        for exponent, c in self.items():
            factors = []
            for name, e in zip(names, exponent):
                if e == 1:
                    factors.append(name)
                elif e != 0:
                    factors.append('{}^{}'.format(name, e))
            monomial = '*'.join(factors)
            if not monomial:
                out.append('({})'.format(c))
            elif c == self.domain.one:
                out.append(monomial)
            else:
                out.append('({})*{}'.format(c, monomial))
        return ' + '.join(out)
