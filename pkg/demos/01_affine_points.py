"""Vanishing ideal of a handful of affine points.

Computes the reduced Groebner basis of all polynomials vanishing at four
rational points in the plane, and shows that the staircase complement
(the standard monomials) has exactly one monomial per point.
"""

from fractions import Fraction

from pointideals import DEGLEX, LEX, affine_points, buchberger_moeller, poly_str

points = affine_points(2, [[0, 0], [1, 1], [2, 4], [Fraction(1, 2), Fraction(1, 4)]])
print("points:", [[str(x) for x in p] for p in points.points])

for order in (LEX, DEGLEX):
    gb, stair, standard = buchberger_moeller(points, order)
    print("\n%s basis:" % order)
    for g in gb.elements:
        print("  ", poly_str(g, order, first_var=2))
    print("corners:", list(stair.corners))
    print("standard monomials:", standard)
    assert len(standard) == len(points.points)

print("\nIn both orders the number of standard monomials equals the number")
print("of points: the quotient ring has one basis monomial per point.")
