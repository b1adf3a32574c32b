"""
Monte-Carlo solid angles.

Points are drawn uniformly on the unit sphere (``z`` uniform in ``[-1, 1]``,
azimuth uniform in ``[0, 2*pi)``) and a membership predicate decides which
of them fall in the region.  The hit fraction times ``4*pi`` is an unbiased
estimate of the solid angle with binomial standard error.

Random numbers come from numpy's PCG64 generator (128-bit LCG state with an
xorshift/rotate output permutation, period ``2**128``), keyed by
``SeedSequence(seed, spawn_key=(stream, worker))``.  The generator name is
recorded on every :class:`MonteCarloEstimate`.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .exceptions import DomainError
from .sphere import FOUR_PI, unit_vector, unit_vectors

__all__ = [
    "GENERATOR",
    "MonteCarloEstimate",
    "CapMembership",
    "IntersectionMembership",
    "PolygonMembership",
    "whole_sphere",
    "sample_sphere",
    "estimate",
]

GENERATOR = "numpy PCG64"
CHUNK = 1 << 18


@dataclass(frozen=True)
class MonteCarloEstimate:
    omega_hat: float
    stderr: float
    samples: int
    seed: int
    generator: str = GENERATOR
    workers: int = 1

    @property
    def fraction(self):
        return self.omega_hat / FOUR_PI

    def agrees_with(self, omega, k=4.0):
        """True when `omega` lies within `k` standard errors of the estimate."""
        return abs(self.omega_hat - omega) <= k * self.stderr


class CapMembership:
    """Points within angle `theta` of `axis` (any ``theta`` in ``[0, pi]``)."""

    def __init__(self, axis, theta):
        self.axis = unit_vector(axis)
        self.theta = float(theta)
        self._cos = np.cos(self.theta)

    def __call__(self, points):
        return points @ self.axis >= self._cos


class IntersectionMembership:
    """Points that belong to every one of `members`."""

    def __init__(self, *members):
        self.members = members

    def __call__(self, points):
        inside = np.ones(len(points), dtype=bool)
        for m in self.members:
            inside &= m(points)
        return inside


class PolygonMembership:
    """Points inside a simple spherical polygon.

    The interior is the region to the left of the traversal, matching
    :func:`solidangle.polycone.polygon_solid_angle`.  A reference point is
    placed just to the left of the first edge's midpoint, and a sample is
    inside when the minor great-circle arc from the reference to the sample
    crosses the boundary an even number of times.  Points within rounding
    distance of an edge may land on either side.

    The reference offset `offset` (radians) must be smaller than the distance
    from the first edge's midpoint to any other edge.
    """

    def __init__(self, vertices, offset=1e-7):
        v = unit_vectors(vertices)
        nxt = np.roll(v, -1, axis=0)
        mid = v[0] + v[1]
        mid /= np.linalg.norm(mid)
        left = np.cross(v[0], v[1])
        left /= np.linalg.norm(left)
        ref = mid + offset * left
        self.reference = ref / np.linalg.norm(ref)
        self.vertices = v
        r = self.reference
        # arcs (r, p) and (a, b) cross iff det(r,a,p), det(r,p,b), det(a,p,b)
        # and det(a,b,r) share one strict sign; the first three are linear in p
        self._lin = np.concatenate(
            [np.cross(r, v), np.cross(nxt, r), np.cross(nxt, v)], axis=0
        ).T
        self._const = np.einsum("ij,ij->i", np.cross(v, nxt), np.broadcast_to(r, v.shape))
        self._n = len(v)

    def crossings(self, points):
        s = points @ self._lin
        n = self._n
        s1, s2, s3 = s[:, :n], s[:, n:2 * n], s[:, 2 * n:]
        s4 = self._const[None, :]
        pos = (s1 > 0) & (s2 > 0) & (s3 > 0) & (s4 > 0)
        neg = (s1 < 0) & (s2 < 0) & (s3 < 0) & (s4 < 0)
        return np.count_nonzero(pos | neg, axis=1)

    def __call__(self, points):
        return self.crossings(points) % 2 == 0


def whole_sphere(points):
    return np.ones(len(points), dtype=bool)


def _rng(seed, stream, worker):
    ss = np.random.SeedSequence(int(seed), spawn_key=(int(stream), int(worker)))
    return np.random.Generator(np.random.PCG64(ss))


def _chunks(rng, n, chunk=CHUNK):
    done = 0
    while done < n:
        m = min(chunk, n - done)
        z = rng.uniform(-1.0, 1.0, m)
        phi = rng.uniform(0.0, 2.0 * np.pi, m)
        r = np.sqrt(1.0 - z * z)
        yield np.column_stack((r * np.cos(phi), r * np.sin(phi), z))
        done += m


def sample_sphere(n, seed, stream=0):
    """Return `n` uniform points on the unit sphere as an ``(n, 3)`` array.

    The points are exactly those a single-worker :func:`estimate` with the
    same `seed` and `stream` would test.
    """
    if n < 1:
        raise DomainError(f"need at least one sample, got {n}")
    return np.concatenate(list(_chunks(_rng(seed, stream, 0), n)))


def _count_hits(membership, n, seed, stream, worker):
    hits = 0
    for pts in _chunks(_rng(seed, stream, worker), n):
        hits += int(np.count_nonzero(membership(pts)))
    return hits


def estimate(membership, n, seed, stream=0, workers=1):
    """Estimate the solid angle of the region selected by `membership`.

    Parameters
    ----------
    membership : callable
        Maps an ``(m, 3)`` array of unit vectors to a boolean array.  It is
        called from several threads when ``workers > 1``.
    n : int
        Total number of samples, at least 100.
    seed : int
    stream : int, optional
        Selects an independent random stream for the same seed, e.g. one per
        row of a sweep.
    workers : int, optional
        Samples are split across this many threads, each drawing from its own
        substream.  Results are reproducible for a fixed worker count; use 1
        for a bit-exact single-threaded baseline.
    """
    n = int(n)
    if n < 100:
        raise DomainError(f"need at least 100 samples, got {n}")
    workers = max(1, int(workers))
    sizes = [n // workers + (i < n % workers) for i in range(workers)]
    if workers == 1:
        hits = _count_hits(membership, n, seed, stream, 0)
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_count_hits, membership, m, seed, stream, i)
                       for i, m in enumerate(sizes) if m]
            hits = sum(f.result() for f in futures)
    p = hits / n
    return MonteCarloEstimate(
        omega_hat=FOUR_PI * p,
        stderr=FOUR_PI * np.sqrt(p * (1.0 - p) / n),
        samples=n,
        seed=int(seed),
        workers=workers,
    )
