"""Vanishing ideals of finite projective point sets.

A projective point set is split into charts by the index of the first
nonzero coordinate.  The deglex basis of the cone over the finite chart is
built from the lex basis of the affine chart by homogenization
(cone_basis); the hyperplane-at-infinity part is lifted, and the two bases
are merged degree by degree into the basis of the union.  The result is
certified independently: vanishing, Buchberger's criterion, and a
Hilbert-function match via evaluation-matrix ranks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import linalg
from .affine import (
    AFFINE,
    PROJECTIVE,
    PointSet,
    Staircase,
    affine_points,
    buchberger_moeller,
    canonical_element,
    staircase_of,
)
from .poly import (
    DEGLEX,
    LEX,
    GroebnerBasis,
    Polynomial,
    evaluate,
    exp_divides,
    homogenize,
    monomials_of_degree,
    normal_form,
    order_key,
    s_polynomial,
    total_degree,
    unit_basis,
)


# ---------------------------------------------------------------------------
# chart decomposition

def split_charts(pointset):
    """Partition a projective point set by the index of its first nonzero
    coordinate.  Chart j (1-based) collects the points whose first nonzero
    coordinate is the j-th, truncated to their trailing n+1-j coordinates."""
    if pointset.mode != PROJECTIVE:
        raise ValueError("split_charts needs a projective point set")
    n = pointset.dimension
    buckets = [[] for _ in range(n + 1)]
    for p in pointset.points:
        j = next(i for i, x in enumerate(p) if x != 0)
        buckets[j].append(p[j + 1 :])
    return tuple(affine_points(n - j, buckets[j]) for j in range(n + 1))


# ---------------------------------------------------------------------------
# chart-1 basis via homogenization

def cone_basis(chart, trace=None):
    """Reduced deglex basis of the ideal of the lines through the chart's
    affine representatives, inside the ring with one extra (smallest)
    variable.

    Starts from the lex basis of the affine vanishing ideal; for each
    candidate leading projection, a linear system on canonical-element
    coefficients decides the minimal homogenized total degree.  When a
    dict is passed as `trace`, it records for every emitted projected
    corner the degree offset r at which its system first became solvable.
    """
    if chart.mode != AFFINE:
        raise ValueError("cone_basis needs an affine chart")
    if not chart.points:
        raise ValueError("cone_basis needs a nonempty chart")
    n = chart.dimension
    glex, stair, dstd = buchberger_moeller(chart, LEX)
    m = 2 + max((total_degree(b) for b in dstd), default=0)
    lexkey = order_key(LEX)
    remaining = set(product(range(m + 1), repeat=n))
    canon = {}

    def f_of(beta):
        if beta not in canon:
            canon[beta] = canonical_element(beta, glex)
        return canon[beta]

    found = []  # (projected leading exponent, total degree of its g)
    found_full = []  # full-ring leading exponents emitted so far
    out = []
    while remaining:
        alpha = min(remaining, key=lexkey)
        if not stair.contains(alpha):
            remaining.discard(alpha)
            continue
        g = None
        found_r = None
        for r in range(m - total_degree(alpha) + 1):
            target = total_degree(alpha) + r
            ys = []
            for d in range(target + 1):
                for beta in monomials_of_degree(n, d):
                    if lexkey(beta) >= lexkey(alpha) or not stair.contains(beta):
                        continue
                    if all(
                        target + total_degree(ap) - dg < d
                        for ap, dg in found
                        if exp_divides(ap, beta)
                    ):
                        ys.append(beta)
            fa = f_of(alpha)
            fy = [f_of(b) for b in ys]
            high = sorted(
                {e for poly in [fa] + fy for e in poly.terms if total_degree(e) > target}
            )
            mat = linalg.Matrix(
                len(high), len(ys), [fy[j].terms.get(e, 0) for e in high for j in range(len(ys))]
            )
            rhs = [-fa.terms.get(e, Fraction(0)) for e in high]
            sol = linalg.solve(mat, rhs)
            if sol is not None:
                g = fa
                for j, c in enumerate(sol[0]):
                    if c:
                        g = g + fy[j] * c
                found_r = r
                break
        if g is not None:
            lead_full = (g.total_degree() - total_degree(alpha),) + alpha
            if any(exp_divides(lf, lead_full) for lf in found_full):
                # reducible by an earlier output: not a corner, and larger r
                # only adds more powers of the homogenizing variable
                remaining.discard(alpha)
                continue
            out.append(homogenize(g))
            found.append((alpha, g.total_degree()))
            found_full.append(lead_full)
            if trace is not None:
                trace[alpha] = found_r
            if found_r == 0:
                remaining = {e for e in remaining if not exp_divides(alpha, e)}
            else:
                remaining.discard(alpha)
        else:
            remaining.discard(alpha)
    key = order_key(DEGLEX)
    out.sort(key=lambda h: key(h.leading(DEGLEX)[0]))
    return GroebnerBasis(DEGLEX, tuple(out))


# ---------------------------------------------------------------------------
# lifting the part at infinity

def lift_infinite_part(gb_sub):
    """Re-embed the basis of a point set inside the hyperplane {X1 = 0}.

    Adds X1 as a generator and shifts every exponent by a leading zero;
    the result is again a reduced deglex basis in the enlarged ring."""
    if gb_sub.is_zero_ideal():
        # zero ideal of the sub-space: the hyperplane itself remains
        raise ValueError("lift of a zero ideal needs an explicit arity; wrap it first")
    arity = gb_sub.arity + 1
    if gb_sub.is_unit():
        return unit_basis(arity)
    elements = [Polynomial.variable(arity, 0)]
    for g in gb_sub.elements:
        elements.append(Polynomial(arity, [((0,) + e, c) for e, c in g.terms.items()]))
    key = order_key(DEGLEX)
    elements.sort(key=lambda h: key(h.leading(DEGLEX)[0]))
    return GroebnerBasis(DEGLEX, tuple(elements))


def _lift(gb_sub, sub_arity):
    """lift_infinite_part that also handles the zero ideal (whole space)."""
    if gb_sub.is_zero_ideal():
        return GroebnerBasis(DEGLEX, (Polynomial.variable(sub_arity + 1, 0),))
    return lift_infinite_part(gb_sub)


# ---------------------------------------------------------------------------
# merging

def _canonical_homogeneous(gb, exp, cache):
    if exp not in cache:
        mono = Polynomial.monomial(len(exp), exp)
        cache[exp] = mono - normal_form(mono, gb.elements, DEGLEX)
    return cache[exp]


def merge(gb0, gb1, s):
    """Reduced deglex basis of the intersection of two homogeneous
    vanishing ideals, given their reduced deglex bases and the total point
    count s.

    Candidate leading exponents are the staircase intersection, enumerated
    in increasing deglex order; each candidate is accepted iff a linear
    system matching the two canonical-element expansions is solvable.
    Enumeration stops once the standard-monomial count is constant over two
    consecutive degrees at a value not exceeding the lower degree and no
    corner lies beyond it (Macaulay growth makes the count persist); the
    stabilized count must equal s."""
    if gb0.order != DEGLEX or gb1.order != DEGLEX:
        raise ValueError("merge needs deglex bases")
    if gb1.is_unit():
        return gb0
    if gb0.is_unit():
        return gb1
    if gb0.is_zero_ideal() or gb1.is_zero_ideal():
        return GroebnerBasis(DEGLEX, ())
    m = gb0.arity
    if gb1.arity != m:
        raise ValueError("arity mismatch: %d vs %d" % (m, gb1.arity))
    s0 = staircase_of(gb0)
    s1 = staircase_of(gb1)
    key = order_key(DEGLEX)
    cache0 = {}
    cache1 = {}
    found = []
    elements = []
    counts = {}
    d = 0
    while True:
        monos = sorted(monomials_of_degree(m, d), key=key)
        for gamma in monos:
            if not (s0.contains(gamma) and s1.contains(gamma)):
                continue
            if any(exp_divides(b, gamma) for b in found):
                continue
            free = [
                e
                for e in monos
                if key(e) < key(gamma) and not any(exp_divides(b, e) for b in found)
            ]
            deltas = [e for e in free if s0.contains(e)]
            etas = [e for e in free if s1.contains(e)]
            f0g = _canonical_homogeneous(gb0, gamma, cache0)
            f1g = _canonical_homogeneous(gb1, gamma, cache1)
            f0s = [_canonical_homogeneous(gb0, e, cache0) for e in deltas]
            f1s = [_canonical_homogeneous(gb1, e, cache1) for e in etas]
            target = f0g - f1g
            support = set(target.terms)
            for poly in f0s + f1s:
                support.update(poly.terms)
            support = sorted(support)
            entries = []
            for e in support:
                entries.extend(p.terms.get(e, Fraction(0)) for p in f1s)
                entries.extend(-p.terms.get(e, Fraction(0)) for p in f0s)
            mat = linalg.Matrix(len(support), len(etas) + len(deltas), entries)
            rhs = [target.terms.get(e, Fraction(0)) for e in support]
            sol = linalg.solve(mat, rhs)
            if sol is not None:
                fg = f0g
                for j, c in enumerate(sol[0][len(etas) :]):
                    if c:
                        fg = fg + f0s[j] * c
                elements.append(fg)
                found.append(gamma)
        counts[d] = sum(
            1 for e in monos if not any(exp_divides(b, e) for b in found)
        )
        if d >= 1 and counts[d - 1] == counts[d]:
            c = counts[d]
            max_corner = max((total_degree(b) for b in found), default=0)
            if max_corner <= d - 1 and c <= d - 1:
                if c != s:
                    raise ValueError(
                        "merged staircase stabilizes at %d standard monomials per degree, "
                        "expected %d; the merged point sets are inconsistent" % (c, s)
                    )
                break
        d += 1
        if d > 4 * s + 8:
            raise RuntimeError("merge failed to stabilize by degree %d" % d)
    elements.sort(key=lambda g: key(g.leading(DEGLEX)[0]))
    return GroebnerBasis(DEGLEX, tuple(elements))


# ---------------------------------------------------------------------------
# the full recursion

def projective_gb(pointset):
    """Reduced deglex Groebner basis of the vanishing ideal of a projective
    point set, built chart by chart over the dimension and certified before
    return."""
    if pointset.mode != PROJECTIVE:
        raise ValueError("projective_gb needs a projective point set")
    n = pointset.dimension
    if not pointset.points:
        return unit_basis(n + 1)
    charts = split_charts(pointset)
    current = unit_basis(0)
    count = 0
    for j in range(n + 1, 0, -1):
        arity = n + 2 - j
        gb0 = _lift(current, arity - 1)
        chart = charts[j - 1]
        if chart.points:
            gb1 = cone_basis(chart)
            count += len(chart.points)
        else:
            gb1 = unit_basis(arity)
        current = merge(gb0, gb1, count)
    report = certify(current, pointset)
    if not report.passed:
        raise ArithmeticError("internal certification failed: %s" % "; ".join(report.reasons))
    return current


# ---------------------------------------------------------------------------
# axis census

@dataclass(frozen=True)
class AxisReport:
    """All axes contained in the staircase complement D.

    axes holds (direction j, base) pairs with 1-based directions and
    base[j-1] == 0; per_direction counts them by j."""

    arity: int
    axes: tuple
    per_direction: tuple
    total: int


def axis_census(stair):
    """Enumerate every axis base + N*e_j contained in D.

    The axis lies in D iff no corner divides some translate, i.e. iff no
    corner is componentwise below the base outside direction j.  Bases are
    searched in the box bounded by the maximal corner entries."""
    m = stair.arity
    corners = stair.corners
    bounds = [max((b[i] for b in corners), default=0) for i in range(m)]
    axes = []
    per_direction = []
    for j in range(m):
        count = 0
        ranges = [range(bounds[i] + 1) if i != j else range(1) for i in range(m)]
        for base in product(*ranges):
            if not any(
                all(b[i] <= base[i] for i in range(m) if i != j) for b in corners
            ):
                axes.append((j + 1, base))
                count += 1
        per_direction.append(count)
    return AxisReport(m, tuple(axes), tuple(per_direction), len(axes))


# ---------------------------------------------------------------------------
# independent oracle and certificate

def hilbert_function(pointset, d):
    """Rank of the evaluation matrix of all degree-d monomials at the
    normalized representatives; the degree-d Hilbert function of the
    homogeneous coordinate ring."""
    if pointset.mode != PROJECTIVE:
        raise ValueError("hilbert_function needs a projective point set")
    if d < 0:
        raise ValueError("degree must be nonnegative")
    monos = list(monomials_of_degree(pointset.dimension + 1, d))
    entries = []
    for p in pointset.points:
        for e in monos:
            v = Fraction(1)
            for x, k in zip(p, e):
                if k:
                    v *= x ** k
            entries.append(v)
    return linalg.rank(linalg.Matrix(len(pointset.points), len(monos), entries))


@dataclass(frozen=True)
class CertReport:
    passed: bool
    reasons: tuple


def certify(gb, pointset):
    """Certificate that gb is the reduced deglex basis of the vanishing
    ideal of the point set.

    Checks: every element homogeneous, monic and vanishing at every point;
    autoreducedness; every S-polynomial reduces to zero; and the staircase
    standard-monomial counts match the Hilbert function degree by degree
    until both stabilize at the point count."""
    reasons = []
    s = len(pointset.points)
    m = pointset.dimension + 1
    elements = gb.elements
    if elements and gb.arity != m:
        reasons.append("basis arity %d does not match ambient %d" % (gb.arity, m))
        return CertReport(False, tuple(reasons))
    for idx, g in enumerate(elements):
        if g.is_zero():
            reasons.append("element %d is zero" % idx)
            continue
        if not g.is_homogeneous():
            reasons.append("element %d is not homogeneous: %s" % (idx, g))
        if g.leading(DEGLEX)[1] != 1:
            reasons.append("element %d is not monic" % idx)
        for p in pointset.points:
            if evaluate(g, p) != 0:
                reasons.append("element %d does not vanish at %r" % (idx, [str(x) for x in p]))
                break
    for i, g in enumerate(elements):
        for j, h in enumerate(elements):
            if i == j:
                continue
            lh = h.leading(DEGLEX)[0]
            if any(exp_divides(lh, e) for e in g.terms):
                reasons.append("element %d is reducible by element %d" % (i, j))
    if not reasons:
        for i in range(len(elements)):
            for j in range(i + 1, len(elements)):
                r = normal_form(s_polynomial(elements[i], elements[j], DEGLEX), elements, DEGLEX)
                if not r.is_zero():
                    reasons.append("S-polynomial of elements %d and %d does not reduce to zero" % (i, j))
    if not reasons:
        if elements:
            stair = staircase_of(gb)
        else:
            stair = Staircase(m, ())
        d = 0
        stable = 0
        max_deg = stair.max_corner_degree()
        while True:
            std = stair.standard_count(d)
            hf = hilbert_function(pointset, d) if pointset.points else 0
            if std != hf:
                reasons.append(
                    "degree %d: %d standard monomials but Hilbert function %d" % (d, std, hf)
                )
                break
            stable = stable + 1 if std == s else 0
            if d >= max_deg + 1 and stable >= 2:
                break
            d += 1
            if d > 4 * max(s, 1) + max_deg + 8:
                reasons.append("Hilbert comparison failed to stabilize by degree %d" % d)
                break
    return CertReport(not reasons, tuple(reasons))


def affine_certify(gb, pointset):
    """Affine analogue of certify: vanishing, autoreducedness, Buchberger's
    criterion, and a finite staircase complement of size equal to the point
    count."""
    reasons = []
    s = len(pointset.points)
    n = pointset.dimension
    elements = gb.elements
    if elements and gb.arity != n:
        reasons.append("basis arity %d does not match ambient %d" % (gb.arity, n))
        return CertReport(False, tuple(reasons))
    order = gb.order
    for idx, g in enumerate(elements):
        if g.is_zero():
            reasons.append("element %d is zero" % idx)
            continue
        if g.leading(order)[1] != 1:
            reasons.append("element %d is not monic" % idx)
        for p in pointset.points:
            if evaluate(g, p) != 0:
                reasons.append("element %d does not vanish at %r" % (idx, [str(x) for x in p]))
                break
    for i, g in enumerate(elements):
        for j, h in enumerate(elements):
            if i == j:
                continue
            lh = h.leading(order)[0]
            if any(exp_divides(lh, e) for e in g.terms):
                reasons.append("element %d is reducible by element %d" % (i, j))
    if not reasons:
        for i in range(len(elements)):
            for j in range(i + 1, len(elements)):
                r = normal_form(s_polynomial(elements[i], elements[j], order), elements, order)
                if not r.is_zero():
                    reasons.append("S-polynomial of elements %d and %d does not reduce to zero" % (i, j))
    if not reasons:
        if not elements:
            reasons.append("zero ideal cannot be the ideal of a finite point set")
        else:
            stair = staircase_of(gb)
            try:
                std = stair.standard_monomials()
            except ValueError:
                reasons.append("staircase complement is infinite")
            else:
                if len(std) != s:
                    reasons.append("%d standard monomials but %d points" % (len(std), s))
    return CertReport(not reasons, tuple(reasons))
