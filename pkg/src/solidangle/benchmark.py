"""Timing of the single-arctangent polygon formula against the per-vertex sum."""

import time
from dataclasses import dataclass

import numpy as np

from .polycone import SphericalPolygon, polygon_solid_angle, polygon_solid_angle_naive

__all__ = ["random_star_polygon", "BenchmarkReport", "time_call", "run_benchmark"]


def random_star_polygon(n, rng, center=None, min_radius=0.2, max_radius=1.2):
    """Random simple spherical polygon, star-shaped about `center`.

    Vertices sit at sorted random azimuths around `center` (a random
    direction by default) at random angular distances in
    ``[min_radius, max_radius]``.  The result is generally non-convex and runs
    counterclockwise seen from outside, so it encloses the small region around
    `center`.
    """
    rng = np.random.default_rng(rng)
    if center is None:
        center = rng.normal(size=3)
    center = np.asarray(center, dtype=float)
    center = center / np.linalg.norm(center)
    helper = np.array([1.0, 0.0, 0.0]) if abs(center[0]) < 0.9 else np.array([0.0, 1.0, 0.0])
    e1 = np.cross(center, helper)
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(center, e1)
    # jittered strata keep azimuths distinct; gaps below pi keep every fan
    # triangle non-overlapping
    while True:
        az = 2.0 * np.pi * (np.arange(n) + 0.9 * rng.uniform(size=n)) / n
        gaps = np.diff(np.concatenate((az, [az[0] + 2.0 * np.pi])))
        if gaps.max() < 0.9 * np.pi:
            break
    rad = rng.uniform(min_radius, max_radius, n)
    dirs = np.cos(az)[:, None] * e1 + np.sin(az)[:, None] * e2
    return np.cos(rad)[:, None] * center + np.sin(rad)[:, None] * dirs


def time_call(fn, arg, reps):
    """Best wall time per call over `reps` repetitions, in seconds."""
    best = np.inf
    for _ in range(max(1, reps)):
        t = time.perf_counter()
        fn(arg)
        best = min(best, time.perf_counter() - t)
    return best


@dataclass(frozen=True)
class BenchmarkReport:
    vertices: int
    reps: int
    product_seconds: float
    naive_seconds: float
    difference: float
    product_doubling_ratio: float
    naive_doubling_ratio: float


def run_benchmark(n, reps=5, seed=0):
    """Time both formulas on one random polygon with `n` vertices.

    The doubling ratios compare against a second polygon with ``2n``
    vertices; values near 2 indicate linear scaling.
    """
    rng = np.random.default_rng(seed)
    poly = SphericalPolygon(random_star_polygon(n, rng))
    poly2 = SphericalPolygon(random_star_polygon(2 * n, rng))
    t_prod = time_call(polygon_solid_angle, poly, reps)
    t_naive = time_call(polygon_solid_angle_naive, poly, reps)
    t_prod2 = time_call(polygon_solid_angle, poly2, reps)
    t_naive2 = time_call(polygon_solid_angle_naive, poly2, reps)
    diff = abs(polygon_solid_angle(poly) - polygon_solid_angle_naive(poly))
    return BenchmarkReport(
        vertices=n,
        reps=reps,
        product_seconds=t_prod,
        naive_seconds=t_naive,
        difference=diff,
        product_doubling_ratio=t_prod2 / t_prod,
        naive_doubling_ratio=t_naive2 / t_naive,
    )
