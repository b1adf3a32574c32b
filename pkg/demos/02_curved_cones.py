"""
Cones over smooth curves
========================

A cone can also be generated by a closed curve ``L(t)`` with known first and
second derivatives.  The solid angle then comes from the geodesic curvature
of the projected curve, integrated with adaptive Simpson, plus the turn
angle at every corner.
"""

import numpy as np

from solidangle import (CurveCallbacks, QuadratureConfig, circle_curve, curve_solid_angle,
                        polygon_curve, polygon_solid_angle, sampled_curve_solid_angle,
                        spherical_cap_solid_angle)

# A circular cone of half-angle theta.  The closed form is 2 pi (1 - cos theta).
for theta in (0.1, 0.5, 1.0, 1.4):
    omega = curve_solid_angle(circle_curve(theta))
    print(f"circle {theta:.1f}  {omega:.15f}  error {omega - spherical_cap_solid_angle(theta):.1e}")

# Only directions matter: the same circle drawn 100 times larger.
print("scaled circle ", curve_solid_angle(circle_curve(0.5, radius=100.0)))

# A three-lobed curve around the pole, rho(phi) = 0.6 + 0.25 cos 3 phi.  It
# bends both ways, which is where the sign of the curvature matters.
def rho(p): return 0.6 + 0.25 * np.cos(3 * p)
def drho(p): return -0.75 * np.sin(3 * p)
def ddrho(p): return -2.25 * np.cos(3 * p)


def position(p):
    r = rho(p)
    return np.array([np.sin(r) * np.cos(p), np.sin(r) * np.sin(p), np.cos(r)])


def first(p):
    r, r1 = rho(p), drho(p)
    a, a1 = np.sin(r), np.cos(r) * r1
    return np.array([a1 * np.cos(p) - a * np.sin(p), a1 * np.sin(p) + a * np.cos(p),
                     -np.sin(r) * r1])


def second(p):
    r, r1, r2 = rho(p), drho(p), ddrho(p)
    a, a1 = np.sin(r), np.cos(r) * r1
    a2 = -np.sin(r) * r1**2 + np.cos(r) * r2
    return np.array([a2 * np.cos(p) - 2 * a1 * np.sin(p) - a * np.cos(p),
                     a2 * np.sin(p) + 2 * a1 * np.cos(p) - a * np.sin(p),
                     -np.cos(r) * r1**2 - np.sin(r) * r2])


lobes = CurveCallbacks(position, first, second)
# For a curve that is star-shaped about the pole the enclosed area is the
# integral of 1 - cos(rho); the rectangle rule is very accurate for periodic
# integrands.
phi = np.arange(4096) * 2 * np.pi / 4096
area = 2 * np.pi * np.mean(1 - np.cos(rho(phi)))
print("three lobes   ", curve_solid_angle(lobes), "area integral", area)

# The same curve known only through samples: each sample becomes a polygon
# vertex, and accuracy improves with the square of the sample count.
for n in (50, 200, 800):
    samples = np.array([position(p) for p in np.arange(n) * 2 * np.pi / n])
    print(f"{n:4d} samples  ", sampled_curve_solid_angle(samples))

# Straight chords between vertices project onto great-circle arcs, so a
# polyline curve reproduces the spherical polygon, corners included.
face = np.array([(1, -1, 1), (1, 1, 1), (-1, 1, 1), (-1, -1, 1)]) / np.sqrt(3)
print("cube face      ", curve_solid_angle(polygon_curve(face)), polygon_solid_angle(face))

# A looser tolerance trades accuracy for fewer evaluations.
print("tol 1e-4       ", curve_solid_angle(lobes, QuadratureConfig(tol=1e-4)))
