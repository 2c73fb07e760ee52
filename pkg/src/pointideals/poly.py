"""Sparse multivariate polynomials over Q, term orders, and Buchberger's algorithm.

Variable convention, fixed for the whole package: index 0 of an exponent
vector is the smallest variable.  In the full ring of a projective problem
that index is X1, the homogenizing variable, and the variables satisfy
X1 < X2 < ... < X{n+1}.  lex therefore compares the exponent of the largest
variable (the last index) first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

LEX = "lex"
DEGLEX = "deglex"
DEGREVLEX = "degrevlex"
ORDERS = (LEX, DEGLEX, DEGREVLEX)


# ---------------------------------------------------------------------------
# exponent vectors

def total_degree(exp):
    return sum(exp)


def exp_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def exp_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def exp_divides(a, b):
    """True if X^a divides X^b, i.e. a <= b componentwise."""
    return all(x <= y for x, y in zip(a, b))


def exp_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def monomials_of_degree(arity, d):
    """Yield all exponent vectors of the given arity and total degree d."""
    if arity == 0:
        if d == 0:
            yield ()
        return
    for i in range(d + 1):
        for rest in monomials_of_degree(arity - 1, d - i):
            yield (i,) + rest


# ---------------------------------------------------------------------------
# term orders

def order_key(order):
    """Sort key realizing the order: key(a) < key(b) iff X^a < X^b."""
    if order == LEX:
        return lambda e: tuple(reversed(e))
    if order == DEGLEX:
        return lambda e: (sum(e), tuple(reversed(e)))
    if order == DEGREVLEX:
        # ties broken at the smallest variable: larger exponent there loses
        return lambda e: (sum(e), tuple(-x for x in e))
    raise ValueError("unknown term order %r" % (order,))


def compare(order, a, b):
    """Compare two exponent vectors; returns -1, 0 or 1."""
    if len(a) != len(b):
        raise ValueError("exponent vectors have different lengths: %d vs %d" % (len(a), len(b)))
    key = order_key(order)
    ka, kb = key(a), key(b)
    if ka < kb:
        return -1
    if ka > kb:
        return 1
    return 0


# ---------------------------------------------------------------------------
# polynomials

class Polynomial:
    """Sparse polynomial: map from exponent vector to nonzero Fraction.

    Instances are treated as immutable; all arithmetic returns new objects.
    """

    __slots__ = ("arity", "terms")

    def __init__(self, arity, terms=()):
        acc = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for exp, coeff in items:
            exp = tuple(exp)
            if len(exp) != arity:
                raise ValueError("exponent %r does not match arity %d" % (exp, arity))
            if any(x < 0 for x in exp):
                raise ValueError("negative exponent in %r" % (exp,))
            c = acc.get(exp, Fraction(0)) + Fraction(coeff)
            if c:
                acc[exp] = c
            else:
                acc.pop(exp, None)
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "terms", acc)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def zero(cls, arity):
        return cls(arity)

    @classmethod
    def constant(cls, arity, c):
        return cls(arity, [((0,) * arity, c)])

    @classmethod
    def monomial(cls, arity, exp, c=1):
        return cls(arity, [(exp, c)])

    @classmethod
    def variable(cls, arity, i):
        exp = tuple(int(j == i) for j in range(arity))
        return cls(arity, [(exp, 1)])

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.arity == other.arity
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def __neg__(self):
        return Polynomial(self.arity, [(e, -c) for e, c in self.terms.items()])

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.arity != other.arity:
            raise ValueError("arity mismatch: %d vs %d" % (self.arity, other.arity))
        return Polynomial(self.arity, list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial(self.arity, [(e, c * other) for e, c in self.terms.items()])
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.arity != other.arity:
            raise ValueError("arity mismatch: %d vs %d" % (self.arity, other.arity))
        out = []
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out.append((exp_add(e1, e2), c1 * c2))
        return Polynomial(self.arity, out)

    __rmul__ = __mul__

    def times(self, exp, coeff=1):
        """Multiply by the single term coeff * X^exp."""
        return Polynomial(self.arity, [(exp_add(e, exp), c * coeff) for e, c in self.terms.items()])

    def total_degree(self):
        if not self.terms:
            raise ValueError("zero polynomial has no total degree")
        return max(total_degree(e) for e in self.terms)

    def is_homogeneous(self):
        degrees = {total_degree(e) for e in self.terms}
        return len(degrees) <= 1

    def leading(self, order):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self.terms, key=order_key(order))
        return exp, self.terms[exp]

    def monic(self, order):
        _, c = self.leading(order)
        return self * (Fraction(1) / c)

    def __repr__(self):
        return "Polynomial(%d, %r)" % (self.arity, sorted(self.terms.items()))

    def __str__(self):
        return poly_str(self)


def leading(p, order):
    """Leading (exponent, coefficient) of p under order."""
    return p.leading(order)


def evaluate(p, point):
    """Exact evaluation of p at a vector of rationals."""
    if len(point) != p.arity:
        raise ValueError("point has length %d, expected %d" % (len(point), p.arity))
    point = [Fraction(x) for x in point]
    total = Fraction(0)
    for exp, coeff in p.terms.items():
        v = coeff
        for x, e in zip(point, exp):
            if e:
                v *= x ** e
        total += v
    return total


# ---------------------------------------------------------------------------
# homogenization

def homogenize(g):
    """Homogenize by a fresh smallest variable prepended at index 0.

    Each monomial is padded with the smallest power of the new variable
    bringing its total degree up to the total degree of g.
    """
    if g.is_zero():
        raise ValueError("cannot homogenize the zero polynomial")
    d = g.total_degree()
    return Polynomial(
        g.arity + 1,
        [((d - total_degree(e),) + e, c) for e, c in g.terms.items()],
    )


def dehomogenize(h):
    """Substitute 1 for the smallest variable (index 0) and re-collect."""
    return Polynomial(h.arity - 1, [(e[1:], c) for e, c in h.terms.items()])


# ---------------------------------------------------------------------------
# division, S-polynomials, Buchberger

def normal_form(f, divisors, order):
    """Remainder of f on division by the listed divisors.

    Deterministic strategy: always reduce the order-largest reducible
    monomial of the running remainder, by the first applicable divisor in
    list order.  No monomial of the result is divisible by any divisor's
    leading monomial.
    """
    divisors = list(divisors)
    if any(g.is_zero() for g in divisors):
        raise ValueError("zero divisor in reduction list")
    leads = [g.leading(order) for g in divisors]
    key = order_key(order)
    r = f
    while True:
        step = None
        for exp in sorted(r.terms, key=key, reverse=True):
            for (le, lc), g in zip(leads, divisors):
                if exp_divides(le, exp):
                    step = (exp, le, lc, g)
                    break
            if step:
                break
        if step is None:
            return r
        exp, le, lc, g = step
        r = r - g.times(exp_sub(exp, le), r.terms[exp] / lc)


def s_polynomial(f, g, order):
    """Standard S-polynomial of f and g."""
    if f.is_zero() or g.is_zero():
        raise ValueError("S-polynomial of a zero polynomial")
    ef, cf = f.leading(order)
    eg, cg = g.leading(order)
    l = exp_lcm(ef, eg)
    return f.times(exp_sub(l, ef), Fraction(1) / cf) - g.times(exp_sub(l, eg), Fraction(1) / cg)


@dataclass(frozen=True)
class GroebnerBasis:
    """A Groebner basis together with its term order.

    elements are monic and sorted by increasing leading exponent.  An empty
    element tuple denotes the zero ideal; a single nonzero constant denotes
    the unit ideal.
    """

    order: str
    elements: tuple

    @property
    def arity(self):
        if not self.elements:
            raise ValueError("zero-ideal basis carries no arity")
        return self.elements[0].arity

    def is_zero_ideal(self):
        return not self.elements

    def is_unit(self):
        return any(
            len(g.terms) == 1 and next(iter(g.terms)) == (0,) * g.arity
            for g in self.elements
        )

    def leading_exponents(self):
        return tuple(g.leading(self.order)[0] for g in self.elements)


def unit_basis(arity, order=DEGLEX):
    return GroebnerBasis(order, (Polynomial.constant(arity, 1),))


def _autoreduce(basis, order):
    """Minimalize and tail-reduce a basis whose S-pairs all reduce to zero."""
    key = order_key(order)
    basis = sorted((g.monic(order) for g in basis), key=lambda g: key(g.leading(order)[0]))
    minimal = []
    for g in basis:
        le = g.leading(order)[0]
        if not any(exp_divides(h.leading(order)[0], le) for h in minimal):
            minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        reduced.append(normal_form(g, others, order).monic(order) if others else g)
    reduced.sort(key=lambda g: key(g.leading(order)[0]))
    return tuple(reduced)


def buchberger(gens, order):
    """Reduced Groebner basis of the ideal generated by gens.

    Pair selection: smallest lcm of leading monomials under the active
    order first.  Pairs with coprime leading monomials are discarded.
    """
    polys = [g for g in gens if not g.is_zero()]
    if not polys:
        raise ValueError("all generators are zero")
    key = order_key(order)
    basis = []
    for g in polys:
        g = g.monic(order)
        if g not in basis:
            basis.append(g)
    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    while pairs:
        def pair_key(p):
            i, j = p
            l = exp_lcm(basis[i].leading(order)[0], basis[j].leading(order)[0])
            return (key(l), i, j)

        i, j = min(pairs, key=pair_key)
        pairs.discard((i, j))
        ei = basis[i].leading(order)[0]
        ej = basis[j].leading(order)[0]
        if exp_lcm(ei, ej) == exp_add(ei, ej):
            continue
        r = normal_form(s_polynomial(basis[i], basis[j], order), basis, order)
        if not r.is_zero():
            basis.append(r.monic(order))
            k = len(basis) - 1
            pairs.update((i2, k) for i2 in range(k))
    return GroebnerBasis(order, _autoreduce(basis, order))


# ---------------------------------------------------------------------------
# text rendering

def poly_str(p, order=DEGLEX, first_var=1):
    """Canonical text form: terms in decreasing order, variables X{first_var}...

    Examples: "X1*X2^2 - X1^2*X2", "X2 - 3", "0".
    """
    if p.is_zero():
        return "0"
    key = order_key(order)
    parts = []
    for exp in sorted(p.terms, key=key, reverse=True):
        coeff = p.terms[exp]
        mono = "*".join(
            "X%d" % (i + first_var) if e == 1 else "X%d^%d" % (i + first_var, e)
            for i, e in enumerate(exp)
            if e
        )
        if not mono:
            body = str(abs(coeff))
        elif abs(coeff) == 1:
            body = mono
        else:
            body = "%s*%s" % (abs(coeff), mono)
        if not parts:
            parts.append(body if coeff > 0 else "-" + body)
        else:
            parts.append(("+ " if coeff > 0 else "- ") + body)
    return " ".join(parts)
