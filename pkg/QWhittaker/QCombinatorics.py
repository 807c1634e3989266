import itertools
import logging
from fractions import Fraction
from functools import lru_cache

from sympy.utilities.iterables import partitions

from QWhittaker.ExactArith import RingQ, qPoly
from QWhittaker.Errors import QWhittakerError

logger = logging.getLogger(__name__)

@lru_cache(maxsize=None)
def qFactorial(n):
    """
        (n)_q! = (1-q)(1-q^2)...(1-q^n), with (0)_q! = 1.
    """
    if n < 0:
        raise QWhittakerError('q-factorial of negative integer {}'.format(n))
    if n == 0:
        return RingQ.one
    return qFactorial(n - 1) * (RingQ.one - qPoly ** n)

@lru_cache(maxsize=None)
def qBinomial(n, k):
    if n < 0 or k < 0 or k > n:
        return RingQ.zero
    return qFactorial(n).exquo(qFactorial(k) * qFactorial(n - k))

def theta(n):
    return 1 if n >= 0 else 0

def isDominant(point):
    """
        True for weakly increasing points, the dominant cone.
    """
    return all(a <= b for a, b in zip(point, point[1:]))

def interlaces(upper, lower):
    if len(upper) != len(lower) + 1:
        return False
    return all(upper[i] <= lower[i] <= upper[i + 1] for i in range(len(lower)))

class GZPattern:
    """
        Gelfand-Zetlin pattern stored bottom-up: rows[0] has one entry,
        rows[-1] is the top row of length n.
    """
    __slots__ = ('rows',)

    def __init__(self, rows):
        self.rows = tuple(tuple(row) for row in rows)

    @property
    def top(self):
        return self.rows[-1]

    @property
    def rank(self):
        return len(self.rows)

    def rowSums(self):
        return [sum(row) for row in self.rows]

    def weight(self):
        """
            Exponent vector (s_1, s_2 - s_1, ..., s_n - s_{n-1}) with s_k the k-th row sum.
        """
        sums = self.rowSums()
        return tuple(s - previous for s, previous in zip(sums, [0] + sums[:-1]))

    def isValid(self):
        for k, row in enumerate(self.rows):
            if len(row) != k + 1:
                return False
        return all(interlaces(self.rows[k + 1], self.rows[k]) for k in range(len(self.rows) - 1))

    def toList(self):
        return [list(row) for row in self.rows]

    def __eq__(self, other):
        return isinstance(other, GZPattern) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return 'GZPattern({})'.format(self.toList())

def enumerateInterlacing(upper):
    """
        Rows of length len(upper) - 1 interlacing ``upper``, in lexicographic order.
    """
    upper = tuple(upper)
    if not isDominant(upper):
        return
    ranges = [range(upper[i], upper[i + 1] + 1) for i in range(len(upper) - 1)]
    for lower in itertools.product(*ranges):
        yield lower

def enumerateGZ(topRow):
    """
        Lazy depth-first enumeration of all patterns with the given top row.
        Unsorted top rows give nothing.
    """
    topRow = tuple(topRow)
    if not topRow or not isDominant(topRow):
        return

    def descend(rows):
        if len(rows[0]) == 1:
            yield GZPattern(rows)
            return
        for lower in enumerateInterlacing(rows[0]):
            yield from descend([lower] + rows)

    yield from descend([topRow])

def weylDimension(topRow):
    """
        Dimension of the irreducible gl_n module of highest weight ``topRow``
        (ascending convention), by the Weyl dimension formula.
    """
    n = len(topRow)
    value = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            value *= Fraction(topRow[j] - topRow[i] + j - i, j - i)
    return int(value)

def toPartition(topRow):
    """
        Ascending top row to the descending partition convention.
    """
    return tuple(reversed(tuple(topRow)))

def fromPartition(partition, n):
    """
        Descending partition to an ascending top row of length n, padded with zeros.
    """
    parts = [x for x in partition if x]
    if len(parts) > n:
        raise QWhittakerError('Partition {} has more than {} parts'.format(tuple(partition), n))
    return tuple([0] * (n - len(parts)) + sorted(parts))

def partitionsOf(total, maxParts=None):
    """
        Partitions of ``total`` as descending tuples, in decreasing lexicographic order.
    """
    out = []
    if total == 0:
        return [()]
    for p in partitions(total, m=maxParts):
        out.append(tuple(sorted(itertools.chain.from_iterable([k] * v for k, v in p.items()), reverse=True)))
    return sorted(out, reverse=True)

def dominates(first, second):
    """
        Dominance order on partitions of equal size.
    """
    a = sum(first)
    if a != sum(second):
        return False
    partialFirst = partialSecond = 0
    for i in range(max(len(first), len(second))):
        partialFirst += first[i] if i < len(first) else 0
        partialSecond += second[i] if i < len(second) else 0
        if partialFirst < partialSecond:
            return False
    return True

def sortedPoints(n, low, high):
    """
        Weakly increasing points of {low..high}^n in lexicographic order.
    """
    return [tuple(c) for c in itertools.combinations_with_replacement(range(low, high + 1), n)]

def windowPoints(n, low, high):
    return [tuple(c) for c in itertools.product(range(low, high + 1), repeat=n)]

def subsets(n, r):
    """
        Ordered r-subsets of {0..n-1}.
    """
    return list(itertools.combinations(range(n), r))
