"""Finite rational point sets and their vanishing ideals.

The Groebner basis of the ideal of a finite affine point set is computed by
incremental evaluation-matrix rank tests: monomials are enumerated in
increasing term order, and a monomial whose evaluation vector depends
linearly on those already kept produces a basis element, otherwise it is a
standard monomial.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import linalg
from .poly import (
    DEGLEX,
    GroebnerBasis,
    Polynomial,
    exp_divides,
    monomials_of_degree,
    normal_form,
    order_key,
    total_degree,
)

AFFINE = "affine"
PROJECTIVE = "projective"


@dataclass(frozen=True)
class PointSet:
    """A finite list of rational coordinate vectors, affine or projective.

    For affine mode each point has `dimension` coordinates; for projective
    mode each point has dimension+1 homogeneous coordinates normalized so
    that the first nonzero one equals 1.
    """

    mode: str
    dimension: int
    points: tuple


def _check_duplicates(points, label):
    seen = {}
    for i, p in enumerate(points):
        if p in seen:
            raise ValueError(
                "duplicate %s point at indices %d and %d: %r"
                % (label, seen[p], i, [str(x) for x in p])
            )
        seen[p] = i


def affine_points(dimension, coords):
    """Build a validated affine PointSet; duplicates are rejected."""
    pts = []
    for row in coords:
        row = tuple(Fraction(x) for x in row)
        if len(row) != dimension:
            raise ValueError("affine point %r has %d coordinates, expected %d" % (row, len(row), dimension))
        pts.append(row)
    _check_duplicates(pts, "affine")
    return PointSet(AFFINE, dimension, tuple(pts))


def projective_points(dimension, coords):
    """Build a projective PointSet, scaling each vector so its first nonzero
    coordinate is 1; zero vectors and duplicates (after normalization) are
    rejected."""
    pts = []
    for row in coords:
        row = tuple(Fraction(x) for x in row)
        if len(row) != dimension + 1:
            raise ValueError(
                "projective point %r has %d coordinates, expected %d" % (row, len(row), dimension + 1)
            )
        lead = next((x for x in row if x != 0), None)
        if lead is None:
            raise ValueError("zero vector is not a projective point")
        pts.append(tuple(x / lead for x in row))
    _check_duplicates(pts, "projective")
    return PointSet(PROJECTIVE, dimension, tuple(pts))


@dataclass(frozen=True)
class Staircase:
    """The monomial staircase of an ideal, given by its corner set.

    C is the union of the upward cones of the corners; D is the complement
    (the standard monomials).
    """

    arity: int
    corners: tuple

    def contains(self, exp):
        """True iff exp lies in C."""
        if len(exp) != self.arity:
            raise ValueError("exponent %r does not match arity %d" % (exp, self.arity))
        return any(exp_divides(b, exp) for b in self.corners)

    def membership(self, exp):
        return "in_C" if self.contains(exp) else "in_D"

    def standard_count(self, degree):
        """Number of degree-d standard monomials."""
        return sum(1 for e in monomials_of_degree(self.arity, degree) if not self.contains(e))

    def standard_monomials_upto(self, degree, order=DEGLEX):
        out = []
        for d in range(degree + 1):
            out.extend(e for e in monomials_of_degree(self.arity, d) if not self.contains(e))
        out.sort(key=order_key(order))
        return out

    def standard_monomials(self):
        """All standard monomials; raises if D is infinite."""
        bounds = []
        for i in range(self.arity):
            pure = [b[i] for b in self.corners if all(x == 0 for j, x in enumerate(b) if j != i)]
            if not pure:
                raise ValueError("staircase complement is infinite (no pure power in direction %d)" % (i + 1))
            bounds.append(min(pure))
        return [e for e in product(*(range(b) for b in bounds)) if not self.contains(e)]

    def max_corner_degree(self):
        return max((total_degree(b) for b in self.corners), default=0)


def staircase_of(gb):
    """Staircase of the initial ideal of a reduced Groebner basis."""
    if gb.is_zero_ideal():
        raise ValueError("zero ideal has no staircase arity; construct Staircase directly")
    return Staircase(gb.arity, tuple(sorted(gb.leading_exponents())))


def _eval_monomial(exp, point):
    v = Fraction(1)
    for x, e in zip(point, exp):
        if e:
            v *= x ** e
    return v


def buchberger_moeller(pointset, order):
    """Reduced Groebner basis of the vanishing ideal of an affine point set.

    Returns (basis, staircase, standard monomials in increasing order).
    The number of standard monomials equals the number of points.
    """
    if pointset.mode != AFFINE:
        raise ValueError("buchberger_moeller needs an affine point set")
    n = pointset.dimension
    pts = pointset.points
    if not pts:
        origin = (0,) * n
        gb = GroebnerBasis(order, (Polynomial.constant(n, 1),))
        return gb, Staircase(n, (origin,)), []
    key = order_key(order)
    origin = (0,) * n
    heap = [(key(origin), origin)]
    seen = {origin}
    standard = []
    std_vecs = []
    corners = []
    basis = []
    while heap:
        _, exp = heapq.heappop(heap)
        if any(exp_divides(b, exp) for b in corners):
            continue
        vec = [_eval_monomial(exp, p) for p in pts]
        if standard:
            a = linalg.Matrix(
                len(pts), len(standard), [std_vecs[j][i] for i in range(len(pts)) for j in range(len(standard))]
            )
            sol = linalg.solve(a, vec)
        else:
            sol = ((), True) if all(v == 0 for v in vec) else None
        if sol is not None:
            coeffs = sol[0]
            terms = [(exp, Fraction(1))]
            terms.extend((standard[j], -c) for j, c in enumerate(coeffs) if c)
            corners.append(exp)
            basis.append(Polynomial(n, terms))
        else:
            standard.append(exp)
            std_vecs.append(vec)
            for i in range(n):
                ne = tuple(e + int(j == i) for j, e in enumerate(exp))
                if ne not in seen:
                    seen.add(ne)
                    heapq.heappush(heap, (key(ne), ne))
    assert len(standard) == len(pts), "standard monomial count must equal point count"
    basis.sort(key=lambda g: key(g.leading(order)[0]))
    gb = GroebnerBasis(order, tuple(basis))
    return gb, Staircase(n, tuple(sorted(corners))), standard


def canonical_element(sigma, gb):
    """The unique monic ideal element with leading exponent sigma whose
    other exponents are all standard."""
    stair = staircase_of(gb)
    if not stair.contains(sigma):
        raise ValueError("exponent %r is standard; the ideal has no element led by it" % (sigma,))
    mono = Polynomial.monomial(len(sigma), sigma)
    f = mono - normal_form(mono, gb.elements, gb.order)
    assert all(
        e == sigma or not stair.contains(e) for e in f.terms
    ), "canonical element tail must avoid the staircase"
    return f
