"""Solid angles of polyhedral cones, cones over closed curves, and
intersections of two circular cones, with a Monte-Carlo cross-check."""

from .cones import (ConePair, LadderThresholds, cones_intersection,
                    contact_points, intersection_details, linear_approximation,
                    plane_angle, segment_solid_angle, union_solid_angle)
from .curve import (CurveCallbacks, SampledCurve, circle_curve,
                    curve_solid_angle, integrand_at, polygon_curve,
                    sampled_curve_solid_angle)
from .exceptions import (DegenerateGeometryError, DomainError,
                         NormalizationError, QuadratureError, SolidAngleError)
from .montecarlo import (CapMembership, IntersectionMembership,
                         MonteCarloEstimate, PolygonMembership, estimate,
                         sample_sphere)
from .polycone import (SphericalPolygon, WindingProduct, polygon_solid_angle,
                       polygon_solid_angle_naive, triangle_solid_angle)
from .quadrature import QuadratureConfig
from .sphere import (CornerQuantities, corner_quantities, corner_turn_angle,
                     spherical_cap_solid_angle, tangent_turn_angle, unit_vector)

__version__ = "0.1.0"
