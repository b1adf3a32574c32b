"""
Solid angle of conical surfaces generated by closed curves.

A cone with its apex at the origin is described by a closed curve ``L(t)``
anywhere in space; only the directions ``s = L / |L|`` matter.  Its solid
angle is

    omega = 2*pi - sum(turn angles at corners) - integral(k_g dt)

where ``k_g dt`` is the geodesic curvature of the projected curve times its
arc length element.  With ``L1`` and ``L2`` the components of ``L'`` and
``L''`` orthogonal to ``s``,

    k_g dt = s . (L1 x L2) / |L1|**2 dt,

whose magnitude ``|L1 x L2| / |L1|**2`` is reported by :func:`integrand_at`.
The sign (positive where the curve bends to the left) is what makes the
formula correct for non-convex curves and for clockwise traversal.

Curves known only through samples go through :func:`sampled_curve_solid_angle`,
which treats every sample as a polygon vertex.
"""

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from .exceptions import DegenerateGeometryError, DomainError
from .polycone import SphericalPolygon, polygon_solid_angle
from .quadrature import QuadratureConfig, adaptive_simpson
from .sphere import fold_solid_angle, tangent_turn_angle

__all__ = [
    "CurveCallbacks",
    "SampledCurve",
    "circle_curve",
    "polygon_curve",
    "integrand_at",
    "geodesic_curvature_at",
    "corner_turn_angles",
    "curve_solid_angle",
    "sampled_curve_solid_angle",
]

Vector = Callable[[float], np.ndarray]

# |L1| / |L| below this is treated as a stationary point
_STATIONARY = 1e-14


@dataclass(frozen=True)
class CurveCallbacks:
    """A closed curve given by analytic evaluators.

    ``position(t)`` need not have unit length but must never vanish.  The
    parameter domain ``[t0, t1]`` is periodic: the curve must close on
    itself (as a direction) at the ends.  ``corner_params`` lists the
    parameters where the first derivative jumps; the derivative callbacks
    may return either one-sided value there.

    Callbacks may be invoked from several threads at once.
    """

    position: Vector
    first_derivative: Vector
    second_derivative: Vector
    t0: float = 0.0
    t1: float = 2.0 * np.pi
    corner_params: Sequence[float] = field(default_factory=tuple)

    def __post_init__(self):
        if not self.t1 > self.t0:
            raise DomainError(f"empty parameter domain [{self.t0}, {self.t1}]")
        period = self.t1 - self.t0
        corners = sorted(self.t0 + (float(c) - self.t0) % period for c in self.corner_params)
        object.__setattr__(self, "corner_params", tuple(corners))
        start = _direction(self.position(self.t0))
        end = _direction(self.position(self.t1))
        if np.linalg.norm(start - end) > 1e-9:
            raise DomainError("curve is not closed: position(t0) and position(t1) differ")

    @property
    def period(self):
        return self.t1 - self.t0

    def wrap(self, t):
        """Map `t` into ``[t0, t1)`` using the periodic identification."""
        return self.t0 + (t - self.t0) % self.period


@dataclass(frozen=True)
class SampledCurve:
    """A closed curve given by dense samples (3-vectors of any nonzero length).

    ``corner_flags`` marks samples that sit on genuine corners.  The polygon
    reduction treats every sample as a vertex, so the flags are kept only as
    metadata for callers.
    """

    samples: np.ndarray
    corner_flags: Optional[np.ndarray] = None

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=float)
        if samples.ndim != 2 or samples.shape[1] != 3:
            raise DomainError(f"samples must be an (n, 3) array, got shape {samples.shape}")
        if len(samples) < 3:
            raise DegenerateGeometryError(
                f"a closed curve needs at least 3 samples, got {len(samples)}"
            )
        if np.any(np.all(samples == np.roll(samples, -1, axis=0), axis=1)):
            raise DegenerateGeometryError("consecutive samples must be distinct")
        flags = self.corner_flags
        flags = np.zeros(len(samples), bool) if flags is None else np.asarray(flags, bool)
        if flags.shape != (len(samples),):
            raise DomainError("corner_flags needs one entry per sample")
        object.__setattr__(self, "samples", samples)
        object.__setattr__(self, "corner_flags", flags)


def _direction(p):
    p = np.asarray(p, dtype=float)
    r = np.linalg.norm(p)
    if r == 0.0:
        raise DegenerateGeometryError("curve passes through the origin")
    return p / r


def _tangential(v, s):
    return v - s * (s @ v)


def _projected_derivatives(c, t):
    s = _direction(c.position(t))
    l1 = _tangential(np.asarray(c.first_derivative(t), dtype=float), s)
    l2 = _tangential(np.asarray(c.second_derivative(t), dtype=float), s)
    l1_sq = float(l1 @ l1)
    if np.sqrt(l1_sq) <= _STATIONARY * np.linalg.norm(c.position(t)):
        raise DegenerateGeometryError(
            f"stationary point at t={t!r}: the projected velocity vanishes"
        )
    return s, l1, l2, l1_sq


def integrand_at(c, t):
    """Unsigned curvature integrand ``|L1 x L2| / |L1|**2`` at parameter `t`.

    For a curve on the unit sphere parameterized by arc length this equals
    ``sqrt(u**2 - (s.u)**2)`` with ``u = s''``.  It vanishes on great circles.
    """
    _, l1, l2, l1_sq = _projected_derivatives(c, t)
    return float(np.linalg.norm(np.cross(l1, l2))) / l1_sq


def geodesic_curvature_at(c, t):
    """Signed version of :func:`integrand_at`; positive on left-bending arcs."""
    s, l1, l2, l1_sq = _projected_derivatives(c, t)
    return float(s @ np.cross(l1, l2)) / l1_sq


def corner_turn_angles(c, quad=QuadratureConfig()):
    """Signed turn angle at each corner of `c`, in corner order.

    One-sided tangents are taken ``corner_eps * period`` away from the corner
    and extrapolated back to it with the second derivative, then projected
    onto the tangent plane at the corner point.
    """
    eps = quad.corner_eps * c.period
    angles = []
    for tc in c.corner_params:
        s = _direction(c.position(tc))
        tm, tp = c.wrap(tc - eps), c.wrap(tc + eps)
        tau_minus = (np.asarray(c.first_derivative(tm), dtype=float)
                     + eps * np.asarray(c.second_derivative(tm), dtype=float))
        tau_plus = (np.asarray(c.first_derivative(tp), dtype=float)
                    - eps * np.asarray(c.second_derivative(tp), dtype=float))
        angles.append(tangent_turn_angle(_tangential(tau_minus, s),
                                         _tangential(tau_plus, s), s))
    return angles


def _pieces(c):
    corners = c.corner_params
    if not corners:
        return [(c.t0, c.t1)]
    pieces = list(zip(corners[:-1], corners[1:]))
    pieces.append((corners[-1], corners[0] + c.period))
    return [(a, b) for a, b in pieces if b > a]


def curve_solid_angle(c, quad=QuadratureConfig()):
    """Solid angle of the cone generated by the closed curve `c`.

    The enclosed region is on the left of the direction of increasing `t`
    (as seen from outside the sphere).  Smooth pieces between corners are
    integrated separately with adaptive Simpson, each with an equal share of
    ``quad.tol``.

    Raises
    ------
    QuadratureError
        If a piece does not reach its tolerance.
    DegenerateGeometryError
        If the curve reaches the origin or has a stationary point.

    Examples
    --------
    >>> theta = 0.5
    >>> omega = curve_solid_angle(circle_curve(theta))
    >>> bool(abs(omega - 2 * np.pi * (1 - np.cos(theta))) < 1e-9)
    True
    """
    pieces = _pieces(c)
    piece_tol = quad.tol / len(pieces)
    # keep endpoint samples on the piece's own side of a corner
    nudge = 1e-12 * c.period if c.corner_params else 0.0

    curvature = 0.0
    for a, b in pieces:
        def k(t, lo=a + nudge, hi=b - nudge):
            return geodesic_curvature_at(c, c.wrap(min(max(t, lo), hi)))

        curvature += adaptive_simpson(k, a, b, tol=piece_tol,
                                      max_level=quad.max_level,
                                      min_level=quad.min_level).value
    turning = sum(corner_turn_angles(c, quad))
    return fold_solid_angle(2.0 * np.pi - turning - curvature)


def sampled_curve_solid_angle(c):
    """Solid angle of a sampled closed curve, every sample taken as a vertex.

    Accuracy is that of the inscribed polygon: the error falls off as the
    inverse square of the sample count on smooth arcs.
    """
    if not isinstance(c, SampledCurve):
        c = SampledCurve(c)
    return polygon_solid_angle(SphericalPolygon.from_rays(c.samples))


def circle_curve(theta, radius=1.0):
    """Cone of half-angle `theta` about +z, traced counterclockwise.

    `radius` scales the generating curve, which leaves the cone unchanged.
    """
    st, ct = np.sin(theta), np.cos(theta)
    return CurveCallbacks(
        position=lambda t: radius * np.array([st * np.cos(t), st * np.sin(t), ct]),
        first_derivative=lambda t: radius * np.array([-st * np.sin(t), st * np.cos(t), 0.0]),
        second_derivative=lambda t: radius * np.array([-st * np.cos(t), -st * np.sin(t), 0.0]),
        t0=0.0,
        t1=2.0 * np.pi,
    )


def polygon_curve(vertices):
    """Closed polyline through `vertices`, one unit of parameter per edge.

    Straight chords project onto great-circle arcs, so this is the smooth-curve
    description of a spherical polygon with a corner at every vertex.
    """
    v = np.asarray(vertices, dtype=float)
    n = len(v)
    edges = np.roll(v, -1, axis=0) - v

    def piece(t):
        t = t % n
        i = min(int(np.floor(t)), n - 1)
        return i, t - i

    def position(t):
        i, u = piece(t)
        return v[i] + u * edges[i]

    return CurveCallbacks(
        position=position,
        first_derivative=lambda t: edges[piece(t)[0]],
        second_derivative=lambda t: np.zeros(3),
        t0=0.0,
        t1=float(n),
        corner_params=tuple(float(i) for i in range(n)),
    )
