"""
Solid angle of polyhedral cones.

A polyhedral cone is given by the ordered unit vectors of its edges, i.e. the
vertices of a spherical polygon.  The enclosed region is the one on the left
of the traversal, so a polygon that runs counterclockwise when seen from
outside the sphere encloses the small side.  Reversing the vertex order
yields the complementary region, of solid angle ``4*pi - omega``.

The fast path multiplies one complex number per corner,

    z_j = b_j c_j - a_j + i d_j,

whose argument is the turn angle at vertex ``j``, and takes a single
arctangent of the product at the end.  The principal argument of the
product only knows the sum of turn angles modulo ``2*pi``, so the product is
accumulated with a winding counter that records every pass across the
negative real axis.
"""

from dataclasses import dataclass

import numpy as np

from .exceptions import DegenerateGeometryError
from .sphere import FOUR_PI, fold_solid_angle, normalize_rays, unit_vectors

__all__ = [
    "MERGE_TOLERANCE",
    "SphericalPolygon",
    "WindingProduct",
    "corner_terms",
    "accumulated_argument",
    "polygon_solid_angle",
    "polygon_solid_angle_naive",
    "triangle_solid_angle",
]

#: Chord distance below which consecutive vertices are merged (and, measured
#: against the negated neighbour, considered antipodal).
MERGE_TOLERANCE = 1e-12

_BLOCK = 4096


class SphericalPolygon:
    """Ordered vertices of a spherical polygon with circular indexing.

    Consecutive duplicates (chord distance below `merge_tol`, including the
    pair last/first) are merged on construction.  Consecutive antipodal
    vertices are rejected because the great-circle arc joining them is not
    unique, and at least three distinct vertices must remain.

    Parameters
    ----------
    vertices : array_like, shape (n, 3)
        Unit vectors; see :func:`solidangle.sphere.unit_vectors` for the
        normalization policy.
    merge_tol : float, optional
    """

    def __init__(self, vertices, merge_tol=MERGE_TOLERANCE):
        self.vertices = _clean(unit_vectors(vertices), merge_tol)
        self.vertices.setflags(write=False)

    @classmethod
    def from_rays(cls, directions, merge_tol=MERGE_TOLERANCE):
        """Build the polygon cut out by rays of arbitrary nonzero length."""
        return cls(normalize_rays(directions), merge_tol)

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __repr__(self):
        return f"{type(self).__name__}({self.vertices.tolist()!r})"

    def reversed(self):
        """The same boundary traversed the other way (the complement region)."""
        return SphericalPolygon(self.vertices[::-1])

    def solid_angle(self):
        return polygon_solid_angle(self)


def _clean(vertices, merge_tol):
    step = np.linalg.norm(np.diff(vertices, axis=0), axis=1)
    out = vertices[np.concatenate(([True], step >= merge_tol))]
    while len(out) > 1 and np.linalg.norm(out[0] - out[-1]) < merge_tol:
        out = out[:-1]
    if len(out) < 3:
        raise DegenerateGeometryError(
            f"a spherical polygon needs at least 3 distinct vertices, got {len(out)}"
        )
    antipodal = np.linalg.norm(out + np.roll(out, -1, axis=0), axis=1) < merge_tol
    if np.any(antipodal):
        i = int(np.flatnonzero(antipodal)[0])
        raise DegenerateGeometryError(
            f"vertices {i} and {(i + 1) % len(out)} are antipodal; "
            "the edge between them is ambiguous"
        )
    return out


def _as_polygon(p):
    return p if isinstance(p, SphericalPolygon) else SphericalPolygon(p)


def corner_terms(vertices):
    """Per-vertex corner quantities ``(a, b, c, d)`` as arrays.

    Uses ``3n`` dot products and ``n`` cross products: ``c_j`` is the
    ``b`` of the following vertex and is obtained by rolling, not recomputed.
    """
    s = np.asarray(vertices, dtype=float)
    prev = np.roll(s, 1, axis=0)
    nxt = np.roll(s, -1, axis=0)
    b = np.einsum("ij,ij->i", prev, s)
    c = np.roll(b, -1)
    a = np.einsum("ij,ij->i", prev, nxt)
    d = np.einsum("ij,ij->i", prev, np.cross(s, nxt))
    return a, b, c, d


def _upper(re, im):
    # principal argument in (0, pi]
    return (im > 0.0) | ((im == 0.0) & (re < 0.0))


def _winding_steps(old_re, old_im, new_re, new_im, z_re, z_im):
    """Change of the winding counter for each step old -> new = old * z.

    A step that moves between the upper (argument in (0, pi]) and lower
    (argument in (-pi, 0]) half planes crossed the real axis.  Passing the
    negative real axis from above adds one turn, from below removes one.
    For ``|arg z| <= pi/2`` the crossed half-axis is read off the sign of
    ``re(old) + re(new)``; for wider steps it follows from the rotation
    direction, i.e. the sign of ``im(z)``.
    """
    up_old = _upper(old_re, old_im)
    up_new = _upper(new_re, new_im)
    changed = up_old != up_new
    narrow = z_re >= 0.0
    ccw = (z_im > 0.0) | (z_im == 0.0)
    negative_axis = np.where(narrow, old_re + new_re < 0.0, up_old == ccw)
    return np.where(changed & negative_axis, np.where(up_old, 1, -1), 0)


@dataclass
class WindingProduct:
    """Running product of complex factors that remembers its total argument.

    The product is kept at unit magnitude; only its phase carries
    information.  ``winding`` counts net passes across the negative real
    axis, so ``angle()`` returns the sum of the factors' principal
    arguments rather than that sum reduced modulo ``2*pi``.

    >>> w = WindingProduct()
    >>> for _ in range(3):
    ...     w.multiply(0.0, 1.0)
    >>> round(w.angle() / np.pi, 12)
    1.5
    """

    re: float = 1.0
    im: float = 0.0
    winding: int = 0

    def multiply(self, z_re, z_im):
        if z_re == 0.0 and z_im == 0.0:
            raise DegenerateGeometryError("zero factor has no argument")
        re = self.re * z_re - self.im * z_im
        im = self.re * z_im + self.im * z_re
        r = np.hypot(re, im)
        re, im = re / r, im / r
        self.winding += int(_winding_steps(self.re, self.im, re, im, z_re, z_im))
        self.re, self.im = float(re), float(im)

    def angle(self):
        return float(np.arctan2(self.im, self.re)) + 2.0 * np.pi * self.winding


def accumulated_argument(z_re, z_im):
    """Sum of the principal arguments of ``z_re + 1j*z_im`` using one arctangent.

    Vectorized equivalent of feeding every factor to :class:`WindingProduct`.
    Factors are scaled to unit modulus, multiplied in blocks with
    ``numpy.cumprod`` and the running carry is renormalized between blocks.
    """
    z = np.asarray(z_re, dtype=float) + 1j * np.asarray(z_im, dtype=float)
    mod = np.abs(z)
    if np.any(mod == 0.0):
        raise DegenerateGeometryError("zero factor has no argument")
    z = z / mod
    run = np.empty_like(z)
    carry = 1.0 + 0.0j
    for start in range(0, len(z), _BLOCK):
        stop = start + _BLOCK
        np.cumprod(z[start:stop], out=run[start:stop])
        run[start:stop] *= carry
        carry = run[min(stop, len(z)) - 1]
        carry /= abs(carry)
    old = np.concatenate(([1.0 + 0.0j], run[:-1]))
    winding = int(_winding_steps(old.real, old.imag, run.real, run.imag,
                                 z.real, z.imag).sum())
    return float(np.arctan2(carry.imag, carry.real)) + 2.0 * np.pi * winding


def polygon_solid_angle(p):
    """Solid angle enclosed by a spherical polygon, with a single arctangent.

    Parameters
    ----------
    p : SphericalPolygon or array_like, shape (n, 3)

    Returns
    -------
    float
        Steradians in ``[0, 4*pi]``.  For self-intersecting boundaries the
        value is winding-weighted and carries no geometric guarantee.

    Examples
    --------
    >>> octant = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    >>> round(polygon_solid_angle(octant) / np.pi, 12)
    0.5
    """
    s = _as_polygon(p).vertices
    a, b, c, d = corner_terms(s)
    total_turn = accumulated_argument(b * c - a, d)
    return fold_solid_angle(2.0 * np.pi - total_turn)


def polygon_solid_angle_naive(p):
    """Reference version of :func:`polygon_solid_angle` with one arctangent
    per vertex."""
    s = _as_polygon(p).vertices
    a, b, c, d = corner_terms(s)
    return fold_solid_angle(2.0 * np.pi - np.sum(np.arctan2(d, b * c - a)))


def triangle_solid_angle(v1, v2, v3, tol=1e-14):
    """Solid angle of the spherical triangle ``(v1, v2, v3)``.

    Uses ``tan(omega/2) = d / (1 + a + b + c)`` with the two-argument
    arctangent, so the result agrees with :func:`polygon_solid_angle` on the
    same three vertices, clockwise orientation included.

    Raises
    ------
    DegenerateGeometryError
        When both ``d`` and ``1 + a + b + c`` vanish: the vertices lie on a
        great circle with two of them antipodal, and the region is undefined.
    """
    v1, v2, v3 = unit_vectors([v1, v2, v3])
    d = float(v1 @ np.cross(v2, v3))
    denom = 1.0 + float(v1 @ v2) + float(v2 @ v3) + float(v1 @ v3)
    if abs(d) <= tol and abs(denom) <= tol:
        raise DegenerateGeometryError(
            "triangle vertices are coplanar with an antipodal pair"
        )
    omega = 2.0 * float(np.arctan2(d, denom))
    if omega < 0.0:
        omega += FOUR_PI
    return min(max(omega, 0.0), FOUR_PI)
