"""Shared random-instance generators for the test suite.

Coordinates are rationals p/q with |p| <= 5 and q <= 3 so exact
arithmetic stays cheap while still exercising non-integer points.
"""

from fractions import Fraction

from pointideals import affine_points, projective_points


def random_fraction(rng):
    return Fraction(rng.randint(-5, 5), rng.randint(1, 3))


def random_affine(rng, n, s):
    pts = set()
    while len(pts) < s:
        pts.add(tuple(random_fraction(rng) for _ in range(n)))
    return affine_points(n, [list(p) for p in sorted(pts)])


def random_projective(rng, n, s):
    pts = set()
    while len(pts) < s:
        row = tuple(random_fraction(rng) for _ in range(n + 1))
        if any(row):
            lead = next(x for x in row if x)
            pts.add(tuple(x / lead for x in row))
    return projective_points(n, [list(p) for p in sorted(pts)])
