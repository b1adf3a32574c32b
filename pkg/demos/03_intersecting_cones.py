"""
Intersecting circular cones
===========================

Two circular cones with a common apex overlap in a lens-shaped region of the
sphere.  Its area depends on the two half-angles and on the angle between
the axes.  Here we compare the closed form with a Monte-Carlo estimate and
with the straight line drawn between the two touching configurations.
"""

import numpy as np

from solidangle import (CapMembership, IntersectionMembership, cones_intersection,
                        contact_points, estimate, intersection_details, linear_approximation,
                        union_solid_angle)

# Two hemispheres whose axes are one radian apart.
print("two hemispheres ", cones_intersection(np.pi / 2, np.pi / 2, 1.0), 2 * (np.pi - 1.0))

# Each evaluation records which formula produced it.
for args in [(0.3, 0.5, 1.0), (0.2, 0.9, 0.5), (0.6, 0.9, 0.8), (2.0, 0.7, 1.1)]:
    r = intersection_details(*args)
    print(f"{args}  {r.omega:.6f}  {r.branch}")

# A sweep over the axis angle for a wide cone and a narrower one.
theta1, theta2 = np.arccos(-0.2), np.arccos(0.6)
a_in, w_in, a_out, w_out = contact_points(theta1, theta2)
print(f"touching inside at alpha={a_in:.4f}, outside at alpha={a_out:.4f}")

north = np.array([0.0, 0.0, 1.0])
print(" alpha    exact     linear    monte carlo  (stderr)")
for k, alpha in enumerate(np.linspace(0, np.pi, 9)):
    axis2 = np.array([np.sin(alpha), 0.0, np.cos(alpha)])
    both = IntersectionMembership(CapMembership(north, theta1), CapMembership(axis2, theta2))
    mc = estimate(both, 200_000, seed=1, stream=k)
    print(f"{alpha:6.3f}  {cones_intersection(theta1, theta2, alpha):8.5f}  "
          f"{linear_approximation(theta1, theta2, alpha):8.5f}  "
          f"{mc.omega_hat:8.5f}  ({mc.stderr:.5f})")

# The union follows from inclusion and exclusion.
print("union           ", union_solid_angle(theta1, theta2, 1.0))
