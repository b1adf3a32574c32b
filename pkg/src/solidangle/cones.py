"""
Intersection of two right circular cones with a common apex.

Two caps on the unit sphere, of half-angles ``theta1`` and ``theta2`` and
with axes ``alpha`` apart, overlap in a lens.  The plane through the apex
and both boundary-circle crossing points splits the lens into two cap
segments, one from each cone, so

    omega = segment(theta1, gamma1) + segment(theta2, gamma2),

with ``gamma_i`` the angle between that plane and cone ``i``'s axis
(``gamma1 + gamma2 == alpha``).  A segment bounded by an arc of half-width
``phi`` and meeting the chord plane at angle ``beta`` has area
``2*(beta - phi*cos(theta))``.

Before the general formula, :func:`cones_intersection` walks a fixed ladder
of special cases (inverted, co- and counter-directed cones, hemispheres,
needle-thin cones) where the general expressions lose accuracy.
"""

from dataclasses import dataclass
from typing import NamedTuple, Optional, Tuple

import numpy as np

from .exceptions import DomainError
from .sphere import FOUR_PI, spherical_cap_solid_angle

__all__ = [
    "ConePair",
    "LadderThresholds",
    "SegmentParams",
    "PlaneAngleIntermediates",
    "IntersectionResult",
    "segment_solid_angle",
    "plane_angle_intermediates",
    "plane_angle",
    "segment_params",
    "cones_intersection",
    "intersection_details",
    "union_solid_angle",
    "contact_points",
    "linear_approximation",
]

HALF_PI = 0.5 * np.pi


@dataclass(frozen=True)
class ConePair:
    """Half-angles of two cones (radians, in ``(0, pi)``) and the angle
    between their axes (radians, in ``[0, pi]``)."""

    theta1: float
    theta2: float
    alpha: float

    def __post_init__(self):
        for name in ("theta1", "theta2"):
            value = float(getattr(self, name))
            if not 0.0 < value < np.pi:
                raise DomainError(f"{name} must lie in (0, pi), got {value!r}")
        alpha = float(self.alpha)
        if not 0.0 <= alpha <= np.pi:
            raise DomainError(f"alpha must lie in [0, pi], got {alpha!r}")

    @property
    def omega1(self):
        return spherical_cap_solid_angle(self.theta1)

    @property
    def omega2(self):
        return spherical_cap_solid_angle(self.theta2)

    def swapped(self):
        return ConePair(self.theta2, self.theta1, self.alpha)


@dataclass(frozen=True)
class LadderThresholds:
    """Widths of the bands in which special-case formulas replace the
    general one.

    Attributes
    ----------
    eps_alpha : float
        Axes closer than this to parallel or antiparallel.
    eps_hemisphere : float
        Half-angles closer than this to ``pi/2``.
    eps_narrow : float
        Half-angles at or below this.
    """

    eps_alpha: float = 1e-9
    eps_hemisphere: float = 1e-7
    eps_narrow: float = 1e-5


class SegmentParams(NamedTuple):
    """Angles describing one cap segment.

    ``clamped`` is set when the cosine of ``phi`` fell outside ``[-1, 1]``
    and had to be limited, i.e. the chord plane misses the cap.
    """

    theta: float
    gamma: float
    phi: float
    beta: float
    clamped: bool = False


class PlaneAngleIntermediates(NamedTuple):
    t_y: float
    t_x: float


class IntersectionResult(NamedTuple):
    """Intersection solid angle with a record of how it was obtained.

    ``branch`` names the ladder rung(s) taken, outermost first and joined by
    ``">"``; ``segments`` holds the two segment parameter sets when the
    general formula was evaluated.
    """

    omega: float
    branch: str
    segments: Optional[Tuple[SegmentParams, SegmentParams]] = None


def _clip(x):
    return min(max(x, -1.0), 1.0)


def _check_segment_theta(theta):
    if not 0.0 < theta < HALF_PI:
        raise DomainError(f"segment half-angle must lie in (0, pi/2), got {theta!r}")


def _segment_area(theta, cos_phi, cos_beta):
    phi = np.arccos(cos_phi)
    beta = np.arccos(cos_beta)
    omega = 2.0 * (beta - phi * np.cos(theta))
    return min(max(float(omega), 0.0), spherical_cap_solid_angle(theta))


def segment_solid_angle(theta, gamma):
    """Area of the part of a cap beyond a plane through the apex.

    Parameters
    ----------
    theta : float
        Cone half-angle, in ``(0, pi/2)``.
    gamma : float
        Angle between the plane and the cone axis.  ``gamma = theta`` makes
        the plane tangent (empty segment), ``gamma = 0`` halves the cap and
        ``gamma = -theta`` leaves the whole cap.  Values beyond ``+-theta``
        saturate.
    """
    theta = float(theta)
    gamma = float(gamma)
    _check_segment_theta(theta)
    cos_phi = _clip(np.tan(gamma) / np.tan(theta))
    cos_beta = _clip(np.sin(gamma) / np.sin(theta))
    return _segment_area(theta, cos_phi, cos_beta)


def plane_angle_intermediates(pair):
    """Numerator and denominator of ``tan(gamma1)`` for cone 1."""
    c1, c2 = np.cos(pair.theta1), np.cos(pair.theta2)
    return PlaneAngleIntermediates(
        t_y=float(c2 - np.cos(pair.alpha) * c1),
        t_x=float(np.sin(pair.alpha) * c1),
    )


def plane_angle(pair):
    """Angles ``(gamma1, gamma2)`` between the chord plane and each axis.

    Valid for ``0 < alpha < pi`` and both half-angles below ``pi/2``.
    Negative values mean the plane lies on the far side of that axis.
    """
    t1 = plane_angle_intermediates(pair)
    t2 = plane_angle_intermediates(pair.swapped())
    return float(np.arctan2(t1.t_y, t1.t_x)), float(np.arctan2(t2.t_y, t2.t_x))


def segment_params(theta, t):
    """Segment angles for a cone from its :class:`PlaneAngleIntermediates`.

    The cosines of ``phi`` and ``beta`` are formed without computing
    ``gamma`` first and are clamped to ``[-1, 1]``.
    """
    st, ct = np.sin(theta), np.cos(theta)
    r = np.hypot(t.t_x, t.t_y)
    raw_phi = t.t_y * ct / (t.t_x * st)
    raw_beta = t.t_y / (st * r)
    return SegmentParams(
        theta=float(theta),
        gamma=float(np.arctan2(t.t_y, t.t_x)),
        phi=float(np.arccos(_clip(raw_phi))),
        beta=float(np.arccos(_clip(raw_beta))),
        clamped=bool(abs(raw_phi) >= 1.0),
    )


def _linear_ramp(omega_thin, theta_thin, gamma):
    if gamma > theta_thin:
        return 0.0
    if gamma < -theta_thin:
        return omega_thin
    return omega_thin * (gamma + theta_thin) / (2.0 * theta_thin)


def _intersect(theta1, theta2, alpha, eps):
    omega1 = spherical_cap_solid_angle(theta1)
    omega2 = spherical_cap_solid_angle(theta2)

    # cones wider than a hemisphere: intersect the complement instead
    lower = max(omega1 + omega2 - FOUR_PI, 0.0)
    upper = min(omega1, omega2)
    if theta1 > HALF_PI:
        inner = _intersect(np.pi - theta1, theta2, np.pi - alpha, eps)
        return IntersectionResult(min(max(omega2 - inner.omega, lower), upper),
                                  "inverted1>" + inner.branch, inner.segments)
    if theta2 > HALF_PI:
        inner = _intersect(theta1, np.pi - theta2, np.pi - alpha, eps)
        return IntersectionResult(min(max(omega1 - inner.omega, lower), upper),
                                  "inverted2>" + inner.branch, inner.segments)

    if alpha <= eps.eps_alpha:
        return IntersectionResult(min(omega1, omega2), "co-directed")
    if alpha >= np.pi - eps.eps_alpha:
        return IntersectionResult(max(omega1 + omega2 - FOUR_PI, 0.0), "counter-directed")

    hemi1 = abs(theta1 - HALF_PI) <= eps.eps_hemisphere
    hemi2 = abs(theta2 - HALF_PI) <= eps.eps_hemisphere
    if hemi1 and hemi2:
        return IntersectionResult(2.0 * (np.pi - alpha), "two-hemispheres")
    if hemi1:
        return IntersectionResult(segment_solid_angle(theta2, alpha - HALF_PI),
                                  "hemisphere1")
    if hemi2:
        return IntersectionResult(segment_solid_angle(theta1, alpha - HALF_PI),
                                  "hemisphere2")

    if theta1 <= eps.eps_narrow:
        return IntersectionResult(_linear_ramp(omega1, theta1, alpha - theta2), "narrow1")
    if theta2 <= eps.eps_narrow:
        return IntersectionResult(_linear_ramp(omega2, theta2, alpha - theta1), "narrow2")

    pair = ConePair(theta1, theta2, alpha)
    t1 = plane_angle_intermediates(pair)
    t2 = plane_angle_intermediates(pair.swapped())
    raw_phi1 = t1.t_y * np.cos(theta1) / (t1.t_x * np.sin(theta1))
    raw_phi2 = t2.t_y * np.cos(theta2) / (t2.t_x * np.sin(theta2))
    # The chord plane misses a cap entirely when cos(phi) leaves [-1, 1].
    # Both caps on the near side: disjoint.  A cap on the far side lies
    # inside the other cone.
    if raw_phi1 >= 1.0 and raw_phi2 >= 1.0:
        return IntersectionResult(0.0, "disjoint")
    if raw_phi1 <= -1.0:
        return IntersectionResult(omega1, "contained1")
    if raw_phi2 <= -1.0:
        return IntersectionResult(omega2, "contained2")

    seg1 = segment_params(theta1, t1)
    seg2 = segment_params(theta2, t2)
    omega = (_segment_area(theta1, np.cos(seg1.phi), np.cos(seg1.beta))
             + _segment_area(theta2, np.cos(seg2.phi), np.cos(seg2.beta)))
    omega = min(max(omega, 0.0), min(omega1, omega2))
    return IntersectionResult(omega, "general", (seg1, seg2))


def _unpack(pair_or_theta1, theta2, alpha):
    if isinstance(pair_or_theta1, ConePair):
        if theta2 is not None or alpha is not None:
            raise TypeError("pass either a ConePair or three angles, not both")
        return pair_or_theta1
    if theta2 is None or alpha is None:
        raise TypeError("theta2 and alpha are required with a bare theta1")
    return ConePair(pair_or_theta1, theta2, alpha)


def intersection_details(pair_or_theta1, theta2=None, alpha=None,
                         thresholds=LadderThresholds()):
    """Like :func:`cones_intersection` but also report the branch taken and
    the segment parameters of the general formula."""
    pair = _unpack(pair_or_theta1, theta2, alpha)
    return _intersect(float(pair.theta1), float(pair.theta2), float(pair.alpha),
                      thresholds)


def cones_intersection(pair_or_theta1, theta2=None, alpha=None,
                       thresholds=LadderThresholds()):
    """Solid angle common to two cones sharing their apex.

    Accepts a :class:`ConePair` or the three angles ``theta1, theta2,
    alpha`` in radians.

    Returns
    -------
    float
        Steradians, between 0 and the smaller cone's solid angle.

    Examples
    --------
    >>> round(cones_intersection(np.pi / 2, np.pi / 2, 1.0), 12)
    4.28318530718
    >>> cones_intersection(0.3, 0.5, 1.0)
    0.0
    """
    return intersection_details(pair_or_theta1, theta2, alpha, thresholds).omega


def union_solid_angle(pair_or_theta1, theta2=None, alpha=None,
                      thresholds=LadderThresholds()):
    """Solid angle covered by either cone, ``omega1 + omega2 - intersection``."""
    pair = _unpack(pair_or_theta1, theta2, alpha)
    inter = cones_intersection(pair, thresholds=thresholds)
    return min(pair.omega1 + pair.omega2 - inter, FOUR_PI)


def contact_points(theta1, theta2):
    """Axis angles at which the two boundary circles touch.

    Returns ``(alpha_in, omega_in, alpha_out, omega_out)``.  For
    ``alpha <= alpha_in`` one cone lies inside the other and the
    intersection is ``omega_in = min(omega1, omega2)``.  For
    ``alpha >= alpha_out`` the caps no longer cross and the intersection is
    the constant ``omega_out``: zero when the cones are disjoint, or
    ``omega1 + omega2 - 4*pi`` when together they cover the sphere.
    """
    omega1 = spherical_cap_solid_angle(theta1)
    omega2 = spherical_cap_solid_angle(theta2)
    alpha_in = abs(theta1 - theta2)
    alpha_out = min(theta1 + theta2, 2.0 * np.pi - theta1 - theta2)
    return alpha_in, min(omega1, omega2), alpha_out, max(omega1 + omega2 - FOUR_PI, 0.0)


def linear_approximation(theta1, theta2, alpha):
    """Straight-line interpolation of the intersection between the two
    contact configurations, constant outside them."""
    a_in, w_in, a_out, w_out = contact_points(theta1, theta2)
    if alpha <= a_in:
        return w_in
    if alpha >= a_out:
        return w_out
    return w_in + (w_out - w_in) * (alpha - a_in) / (a_out - a_in)
