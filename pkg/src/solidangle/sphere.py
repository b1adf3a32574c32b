"""
Vector algebra on the unit sphere.

Points on the sphere are plain ``numpy`` arrays of shape ``(3,)`` (or
``(n, 3)`` for lists of points).  The helpers here validate and normalize
them, compute the per-corner quantities of a spherical triangle and turn
angles at curve corners, and give the closed-form area of a spherical cap.
"""

from typing import NamedTuple

import numpy as np

from .exceptions import DegenerateGeometryError, DomainError, NormalizationError

__all__ = [
    "NORM_TOLERANCE",
    "FOUR_PI",
    "CornerQuantities",
    "unit_vector",
    "unit_vectors",
    "normalize_rays",
    "corner_quantities",
    "corner_turn_angle",
    "tangent_turn_angle",
    "spherical_cap_solid_angle",
    "fold_solid_angle",
]

#: Largest deviation of ``|v|`` from 1 that is silently renormalized.
NORM_TOLERANCE = 1e-6

FOUR_PI = 4.0 * np.pi


class CornerQuantities(NamedTuple):
    """Cosines of the sides of the triangle ``(prev, curr, next)`` and its
    signed parallelepiped volume.

    ``a = prev.next``, ``b = prev.curr``, ``c = curr.next`` and
    ``d = prev.(curr x next)``.
    """

    a: float
    b: float
    c: float
    d: float


def unit_vector(v, tol=NORM_TOLERANCE):
    """Return ``v`` as a unit-norm float array of shape ``(3,)``.

    Vectors whose norm differs from 1 by at most `tol` are renormalized;
    anything further off raises :class:`NormalizationError`.  Use
    :func:`normalize_rays` to project arbitrary nonzero directions instead.
    """
    return unit_vectors(np.reshape(np.asarray(v, dtype=float), (1, 3)), tol)[0]


def unit_vectors(vs, tol=NORM_TOLERANCE):
    """Vectorized :func:`unit_vector` for an ``(n, 3)`` array."""
    vs = np.asarray(vs, dtype=float)
    if vs.ndim != 2 or vs.shape[1] != 3:
        raise DomainError(f"expected an (n, 3) array of vectors, got shape {vs.shape}")
    if not np.all(np.isfinite(vs)):
        raise DomainError("vector components must be finite")
    norms = np.linalg.norm(vs, axis=1)
    bad = np.flatnonzero(np.abs(norms - 1.0) > tol)
    if bad.size:
        i = int(bad[0])
        raise NormalizationError(
            f"vector {i} has norm {norms[i]!r}, more than {tol:g} away from 1"
        )
    return vs / norms[:, None]


def normalize_rays(vs):
    """Project nonzero direction vectors of any length onto the unit sphere."""
    vs = np.asarray(vs, dtype=float)
    if vs.shape[-1] != 3:
        raise DomainError(f"expected 3-vectors, got shape {vs.shape}")
    if not np.all(np.isfinite(vs)):
        raise DomainError("vector components must be finite")
    norms = np.linalg.norm(vs, axis=-1, keepdims=True)
    if np.any(norms == 0.0):
        raise DegenerateGeometryError("the zero vector has no direction")
    return vs / norms


def corner_quantities(prev, curr, next):
    """Corner quantities of the spherical triangle ``(prev, curr, next)``.

    Satisfies ``d**2 == 1 + 2*a*b*c - a**2 - b**2 - c**2`` up to rounding.

    >>> q = corner_quantities([1, 0, 0], [0, 1, 0], [0, 0, 1])
    >>> tuple(float(x) for x in q)
    (0.0, 0.0, 0.0, 1.0)
    """
    prev = np.asarray(prev, dtype=float)
    curr = np.asarray(curr, dtype=float)
    next = np.asarray(next, dtype=float)
    return CornerQuantities(
        a=float(prev @ next),
        b=float(prev @ curr),
        c=float(curr @ next),
        d=float(prev @ np.cross(curr, next)),
    )


def corner_turn_angle(q, tol=1e-15):
    """Signed turn angle at the middle vertex of a corner, in ``(-pi, pi]``.

    Positive for a left (convex) turn when the polygon runs counterclockwise
    as seen from outside the sphere.  The two-argument arctangent keeps the
    result in the right quadrant when ``b*c - a`` is negative.

    Raises
    ------
    DegenerateGeometryError
        If either side adjacent to the corner has zero length or is a
        half great circle (``b`` or ``c`` equal to +-1).
    """
    a, b, c, d = q
    if 1.0 - b * b <= tol or 1.0 - c * c <= tol:
        raise DegenerateGeometryError(
            "corner has a degenerate adjacent side (coincident or antipodal vertices)"
        )
    return float(np.arctan2(d, b * c - a))


def tangent_turn_angle(tau_minus, tau_plus, point):
    """Signed angle turning the incoming tangent into the outgoing one.

    Both tangents are taken at the sphere point `point`.  The magnitude comes
    from ``atan2(|t- x t+|, t- . t+)`` and the sign from the orientation of
    ``t- x t+`` relative to `point`, so left turns are positive.
    """
    tau_minus = np.asarray(tau_minus, dtype=float)
    tau_plus = np.asarray(tau_plus, dtype=float)
    n_minus = np.linalg.norm(tau_minus)
    n_plus = np.linalg.norm(tau_plus)
    if n_minus == 0.0 or n_plus == 0.0:
        raise DegenerateGeometryError("turn angle needs two nonzero tangents")
    tau_minus = tau_minus / n_minus
    tau_plus = tau_plus / n_plus
    cross = np.cross(tau_minus, tau_plus)
    sin_mag = np.linalg.norm(cross)
    sign = -1.0 if float(np.dot(point, cross)) < 0.0 else 1.0
    return float(np.arctan2(sign * sin_mag, float(tau_minus @ tau_plus)))


def spherical_cap_solid_angle(theta):
    """Solid angle ``2*pi*(1 - cos(theta))`` of a right circular cone.

    Evaluated as ``4*pi*sin(theta/2)**2``, which keeps full relative
    accuracy for narrow cones.
    """
    theta = float(theta)
    if not 0.0 <= theta <= np.pi:
        raise DomainError(f"cone half-angle must lie in [0, pi], got {theta!r}")
    return FOUR_PI * np.sin(0.5 * theta) ** 2


def fold_solid_angle(omega):
    """Bring a solid angle into ``[0, 4*pi]``.

    Adds or subtracts ``4*pi`` at most once, then clamps away residual
    rounding at either end.
    """
    omega = float(omega)
    if omega < 0.0:
        omega += FOUR_PI
    elif omega >= FOUR_PI:
        omega -= FOUR_PI
    return min(max(omega, 0.0), FOUR_PI)
