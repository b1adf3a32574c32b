"""Command-line interface: ``solidangle <command> ...``.

Exit status is 0 on success, 2 for usage, input and domain errors and 3 when
a numerical method fails to converge.
"""

import argparse
import csv
import sys

import numpy as np

from .benchmark import run_benchmark
from .cones import ConePair, intersection_details, linear_approximation
from .curve import circle_curve, curve_solid_angle
from .exceptions import DegenerateGeometryError, DomainError, QuadratureError
from .montecarlo import (GENERATOR, CapMembership, IntersectionMembership,
                         estimate)
from .polycone import SphericalPolygon, polygon_solid_angle
from .quadrature import QuadratureConfig
from .sphere import NORM_TOLERANCE, spherical_cap_solid_angle

__all__ = ["main", "format_value", "read_polygon_file", "sweep_rows", "SweepRow"]

SWEEP_HEADER = ("alpha", "omega_exact", "omega_linear", "omega_mc", "mc_stderr")


class InputError(Exception):
    """Malformed command input (exit status 2)."""


def format_value(x):
    """13 significant digits, trailing zeros kept: ``2.094395102393``."""
    return format(float(x), "#.13g")


def read_polygon_file(path, rays=False):
    """Parse a polygon file into an ``(n, 3)`` array.

    One vertex per line as three whitespace-separated decimals; blank lines
    and lines starting with ``#`` are skipped.  Unless `rays` is set every
    vector must already be unit length within the normalization tolerance.
    """
    vectors = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            fields = text.split()
            if len(fields) != 3:
                raise InputError(f"{path}:{lineno}: expected 3 numbers, got {len(fields)}")
            try:
                v = np.array([float(f) for f in fields])
            except ValueError:
                raise InputError(f"{path}:{lineno}: not a number in {text!r}") from None
            if not np.all(np.isfinite(v)):
                raise InputError(f"{path}:{lineno}: non-finite component")
            norm = np.linalg.norm(v)
            if rays and norm == 0.0:
                raise InputError(f"{path}:{lineno}: zero vector has no direction")
            if not rays and abs(norm - 1.0) > NORM_TOLERANCE:
                raise InputError(
                    f"{path}:{lineno}: vector norm {norm!r} is not 1 "
                    f"(tolerance {NORM_TOLERANCE:g}); use --rays for unnormalized directions"
                )
            vectors.append(v / norm)
    if len(vectors) < 3:
        raise InputError(
            f"{path}: a spherical polygon needs at least 3 vertices, found {len(vectors)}"
        )
    return np.array(vectors)


class SweepRow:
    __slots__ = SWEEP_HEADER

    def __init__(self, alpha, omega_exact, omega_linear, omega_mc, mc_stderr):
        self.alpha = alpha
        self.omega_exact = omega_exact
        self.omega_linear = omega_linear
        self.omega_mc = omega_mc
        self.mc_stderr = mc_stderr

    def as_tuple(self):
        return tuple(getattr(self, k) for k in SWEEP_HEADER)


def sweep_rows(theta1, theta2, steps, mc_samples, seed, threads=1):
    """Intersection over ``alpha`` in ``[0, pi]``, exact and Monte-Carlo.

    Row ``i`` uses random stream ``i`` of `seed`, so rows are independent and
    the sweep is reproducible for a fixed thread count.
    """
    if steps < 2:
        raise DomainError(f"a sweep needs at least 2 steps, got {steps}")
    cap1 = CapMembership([0.0, 0.0, 1.0], theta1)
    rows = []
    for i, alpha in enumerate(np.linspace(0.0, np.pi, steps)):
        alpha = float(alpha)
        exact = intersection_details(ConePair(theta1, theta2, alpha)).omega
        linear = linear_approximation(theta1, theta2, alpha)
        cap2 = CapMembership([np.sin(alpha), 0.0, np.cos(alpha)], theta2)
        mc = estimate(IntersectionMembership(cap1, cap2), mc_samples, seed,
                      stream=i, workers=threads)
        rows.append(SweepRow(alpha, exact, linear, mc.omega_hat, mc.stderr))
    return rows


def _angle(args, value):
    return np.radians(value) if args.degrees else float(value)


def cmd_polycone(args, out):
    poly = SphericalPolygon(read_polygon_file(args.file, rays=args.rays))
    print(format_value(polygon_solid_angle(poly)), file=out)


def cmd_intersect(args, out):
    pair = ConePair(_angle(args, args.theta1), _angle(args, args.theta2),
                    _angle(args, args.alpha))
    result = intersection_details(pair)
    if not args.verbose:
        print(format_value(result.omega), file=out)
        return
    print(f"intersection {format_value(result.omega)}", file=out)
    print(f"omega1 {format_value(pair.omega1)}", file=out)
    print(f"omega2 {format_value(pair.omega2)}", file=out)
    print(f"union {format_value(pair.omega1 + pair.omega2 - result.omega)}", file=out)
    print(f"branch {result.branch}", file=out)


def cmd_sweep(args, out):
    theta1, theta2 = _angle(args, args.theta1), _angle(args, args.theta2)
    ConePair(theta1, theta2, 0.0)
    rows = sweep_rows(theta1, theta2, args.steps, args.mc_samples, args.seed, args.threads)
    print(f"# generator={GENERATOR} seed={args.seed} mc_samples={args.mc_samples} "
          f"threads={args.threads}", file=sys.stderr)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(SWEEP_HEADER)
    for row in rows:
        writer.writerow([repr(float(v)) for v in row.as_tuple()])


def cmd_bench(args, out):
    if args.vertices < 3:
        raise DomainError("a polygon needs at least 3 vertices")
    r = run_benchmark(args.vertices, args.reps, args.seed)
    print(f"vertices {r.vertices}", file=out)
    print(f"product_seconds {r.product_seconds:.6e}", file=out)
    print(f"naive_seconds {r.naive_seconds:.6e}", file=out)
    print(f"difference {r.difference:.3e}", file=out)
    print(f"product_doubling_ratio {r.product_doubling_ratio:.3f}", file=out)
    print(f"naive_doubling_ratio {r.naive_doubling_ratio:.3f}", file=out)


def cmd_curve_circle(args, out):
    theta = _angle(args, args.theta)
    if not 0.0 < theta < np.pi:
        raise DomainError(f"theta must lie in (0, pi), got {theta!r}")
    omega = curve_solid_angle(circle_curve(theta), QuadratureConfig(tol=args.tol))
    exact = spherical_cap_solid_angle(theta)
    print(f"quadrature {format_value(omega)}", file=out)
    print(f"closed_form {format_value(exact)}", file=out)
    print(f"abs_error {abs(omega - exact):.3e}", file=out)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="solidangle",
        description="Solid angles of polyhedral cones, curved cones and cone intersections.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def angles(p):
        p.add_argument("--degrees", action="store_true",
                       help="read angle arguments in degrees (output stays in radians)")

    p = sub.add_parser("polycone", help="solid angle of a polygon file")
    p.add_argument("file")
    p.add_argument("--rays", action="store_true",
                   help="accept nonzero vectors of any length and normalize them")
    p.set_defaults(func=cmd_polycone)

    p = sub.add_parser("intersect", help="intersection of two circular cones")
    p.add_argument("--theta1", type=float, required=True)
    p.add_argument("--theta2", type=float, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--verbose", action="store_true",
                   help="also print both cone solid angles, the union and the branch used")
    angles(p)
    p.set_defaults(func=cmd_intersect)

    p = sub.add_parser("sweep", help="CSV of the intersection versus axis angle")
    p.add_argument("--theta1", type=float, required=True)
    p.add_argument("--theta2", type=float, required=True)
    p.add_argument("--steps", type=int, default=64)
    p.add_argument("--mc-samples", type=int, default=10**6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)
    angles(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("bench", help="time the product formula against the naive sum")
    p.add_argument("--vertices", type=int, default=10**5)
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("curve-circle", help="quadrature demo on a circular cone")
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-9)
    angles(p)
    p.set_defaults(func=cmd_curve_circle)
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        args.func(args, out)
    except (InputError, DomainError, DegenerateGeometryError, OSError) as err:
        print(f"solidangle: error: {err}", file=sys.stderr)
        return 2
    except QuadratureError as err:
        print(f"solidangle: numerical failure: {err}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
