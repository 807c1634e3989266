"""
    q-Toda difference operators on integer lattice functions.

    An operator is a list of terms (subset I, shift e_I, coefficient rule);
    applied at a point p it gives sum_I c_I(p) f(p + e_I).
"""
import logging
from dataclasses import dataclass
from typing import Callable, Tuple

from sympy.polys.domains import ZZ

from QWhittaker.ExactArith import DOMAIN_Q, FieldQ, oneMinusQPower
from QWhittaker.Errors import OutsideConeError, QWhittakerError, RankMismatchError
from QWhittaker.Laurent import LaurentPolynomial
from QWhittaker.QCombinatorics import interlaces, isDominant, subsets
from QWhittaker.Report import Outcome
from QWhittaker.Whittaker import deltaFactor, deltaPrime, kernelQ, psiDirect, psiTilde

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class OperatorTerm:
    subset: Tuple[int, ...]
    shift: Tuple[int, ...]
    coefficient: Callable

class DifferenceOperator:
    def __init__(self, name, rank, terms):
        self.name = name
        self.rank = rank
        self.terms = tuple(terms)

    def coefficientsAt(self, p):
        return [(term.shift, term.coefficient(tuple(p))) for term in self.terms]

    def apply(self, f, p):
        return apply(self, f, p)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        labels = ['c{}*T{}'.format(''.join(str(i + 1) for i in term.subset),
                                   ''.join(str(i + 1) for i in term.subset)) for term in self.terms]
        return '{}[rank {}]: {}'.format(self.name, self.rank, ' + '.join(labels) or '0')

class LatticeFunction:
    """
        A function on Z^rank, given either as a finite table or as a rule.
        Points missing from a table map to ``zero``.
    """
    def __init__(self, rank, zero, rule=None, table=None):
        if (rule is None) == (table is None):
            raise QWhittakerError('A lattice function needs exactly one of rule or table')
        self.rank = rank
        self.zero = zero
        self._rule = rule
        self._table = None if table is None else {tuple(p): v for p, v in table.items() if v}

    @classmethod
    def fromRule(cls, rank, rule, zero):
        return cls(rank, zero, rule=rule)

    @classmethod
    def fromTable(cls, rank, table, zero=FieldQ.zero):
        return cls(rank, zero, table=table)

    def support(self):
        if self._table is None:
            raise QWhittakerError('Rule-based lattice functions have no finite support')
        return sorted(self._table)

    def restrict(self, predicate):
        return LatticeFunction.fromTable(self.rank, {p: v for p, v in self._table.items() if predicate(p)}, self.zero)

    def __call__(self, p):
        p = tuple(p)
        if len(p) != self.rank:
            raise RankMismatchError('Point {} is not of rank {}'.format(p, self.rank))
        if self._table is not None:
            return self._table.get(p, self.zero)
        return self._rule(p)

def psiFunction(n):
    return LatticeFunction.fromRule(n, psiDirect, LaurentPolynomial.zero(FieldQ.to_domain(), n))

def psiTildeFunction(n):
    return LatticeFunction.fromRule(n, psiTilde, LaurentPolynomial.zero(DOMAIN_Q, n))

def apply(op, f, p):
    """
        (op f)(p) = sum over terms of c_I(p) f(p + e_I).
    """
    p = tuple(p)
    if op.rank != f.rank or len(p) != op.rank:
        raise RankMismatchError('Operator of rank {} applied to function of rank {} at {}'.format(op.rank, f.rank, p))
    total = f.zero
    for term in op.terms:
        coefficient = term.coefficient(p)
        if not coefficient:
            continue
        value = f(tuple(a + b for a, b in zip(p, term.shift)))
        if value:
            total = total + value * coefficient
    return total

def composed(op, f):
    """
        The lattice function p -> (op f)(p).
    """
    return LatticeFunction.fromRule(f.rank, lambda p: apply(op, f, p), f.zero)

def _shiftOf(subset, n):
    return tuple(1 if i in subset else 0 for i in range(n))

def _checkRange(r, n, low=1):
    if not low <= r <= n:
        raise QWhittakerError('Operator index r={} out of range for rank {}'.format(r, n))

def buildH(r, n):
    """
        q-Toda Hamiltonian H_r of rank n. The term I carries
        prod X_i over i in I with i-1 not in I and i > 1, X_i(p) = 1 - q^(p_i - p_{i-1} + 1).
    """
    _checkRange(r, n)
    terms = []
    for subset in subsets(n, r):
        factors = [i for i in subset if i >= 1 and (i - 1) not in subset]

        def coefficient(p, factors=factors):
            value = FieldQ.one
            for i in factors:
                value *= oneMinusQPower(p[i] - p[i - 1] + 1)
            return value

        terms.append(OperatorTerm(subset, _shiftOf(subset, n), coefficient))
    return DifferenceOperator('H{}'.format(r), n, terms)

def buildHTilde(r, n):
    """
        Adjoint Hamiltonian on rank-n functions. The term I carries
        prod Y_i over i in I with i+1 not in I and i < n, Y_i(u) = 1 - q^(u_i - u_{i+1} + 1).
        r = 0 is the identity; r = n + 1 is the zero operator.
    """
    if r == 0:
        return DifferenceOperator('Htilde0', n, [OperatorTerm((), (0,) * n, lambda p: FieldQ.one)])
    if r == n + 1:
        return DifferenceOperator('Htilde{}'.format(r), n, [])
    _checkRange(r, n)
    terms = []
    for subset in subsets(n, r):
        factors = [i for i in subset if i <= n - 2 and (i + 1) not in subset]

        def coefficient(u, factors=factors):
            value = FieldQ.one
            for i in factors:
                value *= oneMinusQPower(u[i] - u[i + 1] + 1)
            return value

        terms.append(OperatorTerm(subset, _shiftOf(subset, n), coefficient))
    return DifferenceOperator('Htilde{}'.format(r), n, terms)

def buildJ(r, n):
    """
        Conjugated Hamiltonian J_r = Delta H_r Delta^-1. The term I carries
        prod (1 - q^(p_{i+1} - p_i)) over i in I with i+1 not in I and i < n.
    """
    _checkRange(r, n)
    terms = []
    for subset in subsets(n, r):
        factors = [i for i in subset if i <= n - 2 and (i + 1) not in subset]

        def coefficient(p, factors=factors):
            value = FieldQ.one
            for i in factors:
                value *= oneMinusQPower(p[i + 1] - p[i])
            return value

        terms.append(OperatorTerm(subset, _shiftOf(subset, n), coefficient))
    return DifferenceOperator('J{}'.format(r), n, terms)

def buildShift(r, n):
    """
        h_r = T_{n-r+1} ... T_n, the pure shift on the last r coordinates.
    """
    _checkRange(r, n)
    subset = tuple(range(n - r, n))
    return DifferenceOperator('h{}'.format(r), n, [OperatorTerm(subset, _shiftOf(subset, n), lambda p: FieldQ.one)])

def elementarySymmetric(r, n, domain=ZZ):
    if r < 0 or r > n:
        return LaurentPolynomial.zero(domain, n)
    return LaurentPolynomial(domain, n, {_shiftOf(subset, n): 1 for subset in subsets(n, r)})

def eigencheck(r, p, n=None):
    """
        H_r Psi = e_r(z) Psi at p, boundary and off-cone points included.
    """
    p = tuple(p)
    n = len(p) if n is None else n
    lhs = apply(buildH(r, n), psiFunction(n), p)
    residual = lhs - elementarySymmetric(r, n) * psiDirect(p, n)
    return Outcome(residual.isZero(), residual)

def commutativityCheck(r, s, p, n=None):
    p = tuple(p)
    n = len(p) if n is None else n
    psi = psiFunction(n)
    hr, hs = buildH(r, n), buildH(s, n)
    residual = apply(hr, composed(hs, psi), p) - apply(hs, composed(hr, psi), p)
    return Outcome(residual.isZero(), residual)

def conjugationCheck(r, p, n=None):
    """
        J_r Psi-tilde = e_r(z) Psi-tilde on the cone, and on the open cone
        (J_r Psi-tilde)(p) = Delta(p) (H_r Psi)(p).
    """
    p = tuple(p)
    n = len(p) if n is None else n
    if not isDominant(p):
        raise OutsideConeError(p)
    lhs = apply(buildJ(r, n), psiTildeFunction(n), p)
    residual = lhs - elementarySymmetric(r, n) * psiTilde(p, n)
    strict = all(a < b for a, b in zip(p, p[1:]))
    if strict and residual.isZero():
        residual = lhs - apply(buildH(r, n), psiFunction(n), p).scale(FieldQ(deltaFactor(p)))
    return Outcome(residual.isZero(), residual, {'strict': strict})

def intertwineCheck(k, upper, lower):
    """
        (H_k Q(., lower))(upper) = ((Htilde_{k-1} + Htilde_k) Q(upper, -.))(-lower),
        H acting on the upper row of the kernel and Htilde on the reflected lower row.
    """
    upper, lower = tuple(upper), tuple(lower)
    n, l = len(upper), len(lower)
    if n != l + 1:
        raise RankMismatchError('Rows of length {} and {}'.format(n, l))
    _checkRange(k, n)
    lhs = FieldQ.zero
    for term in buildH(k, n).terms:
        coefficient = term.coefficient(upper)
        if coefficient:
            lhs += coefficient * kernelQ(tuple(a + b for a, b in zip(upper, term.shift)), lower)
    reflectedKernel = LatticeFunction.fromRule(l, lambda u: kernelQ(upper, tuple(-x for x in u)), FieldQ.zero)
    reflected = tuple(-x for x in lower)
    rhs = FieldQ.zero
    for r in (k - 1, k):
        rhs += apply(buildHTilde(r, l), reflectedKernel, reflected)
    residual = lhs - rhs
    return Outcome(not residual, residual, {'lhs': lhs, 'rhs': rhs})

def intertwineSupport(k, upper, lower):
    """
        True when some kernel value read by intertwineCheck sits on interlacing rows;
        otherwise both sides vanish identically.
    """
    upper, lower = tuple(upper), tuple(lower)
    for term in buildH(k, len(upper)).terms:
        if interlaces(tuple(a + b for a, b in zip(upper, term.shift)), lower):
            return True
    for r in (k - 1, k):
        for term in buildHTilde(r, len(lower)).terms:
            if interlaces(upper, tuple(a - b for a, b in zip(lower, term.shift))):
                return True
    return False

def latticePairing(f, g):
    """
        <f, g> = sum_p Delta'(p) f(-p) g(p) for finitely supported g.
    """
    total = FieldQ.zero
    for p in g.support():
        weight = deltaPrime(p)
        if weight:
            total += FieldQ(weight) * f(tuple(-x for x in p)) * g(p)
    return total

def adjointCheck(f, g, r):
    """
        <f, H_r g> = <Htilde_r f, g> for finitely supported rank-l f and g.

        The pairing is taken on its natural domain: g restricted to the
        dominant cone and f to the reflected cone {w : -w weakly increasing}.
    """
    if f.rank != g.rank:
        raise RankMismatchError('Functions of rank {} and {}'.format(f.rank, g.rank))
    l = f.rank
    _checkRange(r, l)
    f = f.restrict(lambda w: isDominant(tuple(-x for x in w)))
    g = g.restrict(isDominant)
    h, hTilde = buildH(r, l), buildHTilde(r, l)

    lhs = FieldQ.zero
    for w in f.support():
        p = tuple(-x for x in w)
        weight = deltaPrime(p)
        if weight:
            lhs += FieldQ(weight) * f(w) * apply(h, g, p)
    rhs = latticePairing(composed(hTilde, f), g)
    residual = lhs - rhs
    logger.debug('Adjoint check r={} rank={}: {} = {}'.format(r, l, lhs, rhs))
    return Outcome(not residual, residual, {'lhs': lhs, 'rhs': rhs})
