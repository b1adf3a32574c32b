"""
Polyhedral cones
================

A polyhedral cone is described by the unit vectors along its edges.  On the
unit sphere those edges cut out a spherical polygon, and the solid angle of
the cone is that polygon's area.
"""

import numpy as np

from solidangle import (SphericalPolygon, polygon_solid_angle, polygon_solid_angle_naive,
                        spherical_cap_solid_angle, triangle_solid_angle)

# The face of a cube seen from its center: the four corners of one face,
# listed counterclockwise when viewed from outside.
face = np.array([(1, -1, 1), (1, 1, 1), (-1, 1, 1), (-1, -1, 1)]) / np.sqrt(3)
print("cube face       ", polygon_solid_angle(face), "expected", 2 * np.pi / 3)

# Six such faces tile the sphere.
print("six faces       ", 6 * polygon_solid_angle(face), "= 4 pi", 4 * np.pi)

# Traversing the same vertices clockwise selects the rest of the sphere.
print("reversed face   ", polygon_solid_angle(face[::-1]))

# The positive octant is a triangle with three right angles.  Its corner
# factors multiply to -i, so a principal-value argument alone would give the
# wrong branch; the running winding count fixes that.
octant = np.eye(3)
print("octant          ", polygon_solid_angle(octant), triangle_solid_angle(*octant))

# Vertices do not need to be unit length if they come through from_rays.
raw = SphericalPolygon.from_rays([(2, -2, 2), (1, 1, 1), (-5, 5, 5), (-1, -1, 1)])
print("from raw rays   ", raw.solid_angle())

# Inscribed polygons converge to a circular cone, with the error falling by
# a factor of four each time the vertex count doubles.
theta = 1.0
for n in (64, 128, 256, 512, 1024):
    phi = np.arange(n) * 2 * np.pi / n
    ring = np.column_stack((np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi),
                            np.full(n, np.cos(theta))))
    err = spherical_cap_solid_angle(theta) - polygon_solid_angle(ring)
    print(f"{n:5d}-gon error  {err:.3e}")

# The product form and the sum of per-corner angles agree to rounding.
rng = np.random.default_rng(0)
pts = rng.normal(size=(40, 3)) * [0.3, 0.3, 0.0] + [0, 0, 1]
order = np.argsort(np.arctan2(pts[:, 1], pts[:, 0]))
star = pts[order] / np.linalg.norm(pts[order], axis=1, keepdims=True)
print("product - naive ", polygon_solid_angle(star) - polygon_solid_angle_naive(star))
