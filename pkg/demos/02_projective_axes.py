"""Counting projective points by staircase axes.

For a finite set in projective space, the staircase complement D of the
deglex basis of the vanishing ideal is infinite, but its infinity is
structured: D contains exactly one coordinate-parallel axis per point,
split by direction according to the chart decomposition.
"""

from pointideals import (
    axis_census,
    poly_str,
    projective_gb,
    projective_points,
    render_staircase,
    split_charts,
    staircase_of,
)

# three points in the projective line: two affine, one at infinity
points = projective_points(1, [[1, 0], [1, 1], [0, 1]])
gb = projective_gb(points)
print("basis:")
for g in gb.elements:
    print("  ", poly_str(g))

stair = staircase_of(gb)
print("\n" + render_staircase(stair))

census = axis_census(stair)
charts = split_charts(points)
print("axes per direction:", list(census.per_direction))
print("chart sizes:       ", [len(c.points) for c in charts])
assert census.total == len(points.points)

print("\nA bigger example: five points in the projective plane.")
points5 = projective_points(2, [[1, 0, 0], [1, 1, 1], [1, 2, 3], [0, 1, 4], [0, 0, 1]])
gb5 = projective_gb(points5)
census5 = axis_census(staircase_of(gb5))
print("axes per direction:", list(census5.per_direction))
print("total axes:", census5.total, "= number of points:", len(points5.points))
