"""Exact intersection geometry of a disc at the origin and an offset ball.

All functions work on the pair of circles C(O, R), centred at the origin,
and C((c, 0), s), centred on the non-negative x-axis.  The intersection
area of the two open discs is assembled from circular segments.  Writing

    seg(r, d) = r^2 * arccos(d/r) - d * sqrt(r^2 - d^2)

for the area of the piece of a radius-r disc cut off by a chord at signed
distance d from its centre (d < 0 gives the major piece, the complement of
the minor segment at |d|), and

    x = (c^2 + R^2 - s^2) / (2c)

for the x-coordinate of the chord through the two intersection points, the
two-point cases decompose as

    centre right of chord, origin left:  seg(R, x) + seg(s, c - x)
    centre left of chord,  origin left:  seg(R, x) + (pi s^2 - seg(s, x - c))
    centre right of chord, origin right: (pi R^2 - seg(R, -x)) + seg(s, c - x)

The fourth sign combination (centre left of the chord with the origin to
its right) would force c < x < 0 <= c and cannot occur; it is kept in the
case enumeration for completeness only.  The remaining cases are the
constant ones: disjoint circles (area 0), ball inside the disc (pi s^2),
and disc inside the ball (pi R^2).

Case boundaries in the (c, s) plane are the five relations

    c + s = R      ball internally tangent to the disc
    s - c = R      disc internally tangent to the ball
    c - s = R      external tangency
    c^2 + s^2 = R^2    centre (c, 0) on the chord
    s^2 - c^2 = R^2    origin on the chord

Dispatch resolves points exactly on a boundary to one fixed side (the
constant cases use closed inequalities, the chord-side splits use <=); the
adjacent formulas agree there, so the choice has no effect on values.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import InternalInconsistencyError

# Offsets below this are treated as exactly concentric, which removes the
# 1/c singularity of the chord coordinate from the dispatch.
CONCENTRIC_EPS = 1e-12

# Arguments of sqrt/arccos may leave their legal domain by at most this
# relative amount before we call it a case-dispatch bug.
CLAMP_TOL = 1e-9


class LensCase(enum.Enum):
    DISJOINT = "disjoint"
    SMALL_BALL_INSIDE = "small_ball_inside"
    DISC_INSIDE_BALL = "disc_inside_ball"
    TWO_POINTS_CENTRE_LEFT_ORIGIN_RIGHT = "two_points_centre_left_origin_right"
    TWO_POINTS_CENTRE_RIGHT_ORIGIN_RIGHT = "two_points_centre_right_origin_right"
    TWO_POINTS_CENTRE_LEFT_ORIGIN_LEFT = "two_points_centre_left_origin_left"
    TWO_POINTS_CENTRE_RIGHT_ORIGIN_LEFT = "two_points_centre_right_origin_left"


TWO_POINT_CASES = frozenset(
    {
        LensCase.TWO_POINTS_CENTRE_LEFT_ORIGIN_RIGHT,
        LensCase.TWO_POINTS_CENTRE_RIGHT_ORIGIN_RIGHT,
        LensCase.TWO_POINTS_CENTRE_LEFT_ORIGIN_LEFT,
        LensCase.TWO_POINTS_CENTRE_RIGHT_ORIGIN_LEFT,
    }
)


@dataclass(frozen=True)
class CirclePair:
    """Disc of radius R at the origin and ball of radius s centred at (c, 0)."""

    R: float
    s: float
    c: float

    def __post_init__(self):
        if not self.R > 0:
            raise ValueError(f"R must be positive, got {self.R}")
        if not self.s > 0:
            raise ValueError(f"s must be positive, got {self.s}")
        if not self.c >= 0:
            raise ValueError(f"c must be non-negative, got {self.c}")


def _safe_sqrt(v: float, scale: float) -> float:
    if v < -CLAMP_TOL * scale:
        raise InternalInconsistencyError(
            f"sqrt argument {v} below domain by more than {CLAMP_TOL * scale}"
        )
    return math.sqrt(max(v, 0.0))


def _segment(r: float, d: float) -> float:
    """Area cut off a radius-r disc by a chord at signed distance d from centre.

    The half-chord y = sqrt(r^2 - d^2) feeds both terms (arccos(d/r) is
    written as atan2(y, d)), so the float noise of a near-tangent chord
    cancels instead of leaking into the area.
    """
    y = _safe_sqrt(r * r - d * d, r * r)
    return r * r * math.atan2(y, d) - d * y


def _chord_x(pair: CirclePair) -> float:
    return (pair.c * pair.c + pair.R * pair.R - pair.s * pair.s) / (2.0 * pair.c)


def classify_lens(pair: CirclePair) -> LensCase:
    """Determine which area formula applies to the pair.

    Total and deterministic; points exactly on a delimiting curve go to a
    fixed side as described in the module docstring.
    """
    R, s, c = pair.R, pair.s, pair.c
    if c < CONCENTRIC_EPS:
        return LensCase.SMALL_BALL_INSIDE if s <= R else LensCase.DISC_INSIDE_BALL
    if c >= R + s:
        return LensCase.DISJOINT
    if c + s <= R:
        return LensCase.SMALL_BALL_INSIDE
    if s - c >= R:
        return LensCase.DISC_INSIDE_BALL
    centre_left = c * c + s * s <= R * R
    origin_left = s * s - c * c <= R * R
    if centre_left:
        # centre left forces the origin left as well; the remaining
        # combination is geometrically empty.
        return LensCase.TWO_POINTS_CENTRE_LEFT_ORIGIN_LEFT
    if origin_left:
        return LensCase.TWO_POINTS_CENTRE_RIGHT_ORIGIN_LEFT
    return LensCase.TWO_POINTS_CENTRE_RIGHT_ORIGIN_RIGHT


def lens_area_for_case(pair: CirclePair, case: LensCase) -> float:
    """Evaluate the area formula of a specific case at the pair.

    Used by tests to confirm that adjacent formulas agree on the curves
    that delimit the cases; normal callers want :func:`lens_area`.
    """
    R, s, c = pair.R, pair.s, pair.c
    if case is LensCase.DISJOINT:
        return 0.0
    if case is LensCase.SMALL_BALL_INSIDE:
        return math.pi * s * s
    if case is LensCase.DISC_INSIDE_BALL:
        return math.pi * R * R
    x = _chord_x(pair)
    if case is LensCase.TWO_POINTS_CENTRE_RIGHT_ORIGIN_LEFT:
        return _segment(R, x) + _segment(s, c - x)
    if case is LensCase.TWO_POINTS_CENTRE_LEFT_ORIGIN_LEFT:
        return _segment(R, x) + (math.pi * s * s - _segment(s, x - c))
    if case is LensCase.TWO_POINTS_CENTRE_RIGHT_ORIGIN_RIGHT:
        return (math.pi * R * R - _segment(R, -x)) + _segment(s, c - x)
    if case is LensCase.TWO_POINTS_CENTRE_LEFT_ORIGIN_RIGHT:
        raise InternalInconsistencyError(
            "centre-left/origin-right intersection cannot occur"
        )
    raise ValueError(f"unknown case {case!r}")


def lens_area(pair: CirclePair) -> float:
    """Area of the intersection of the disc B(O, R) with the ball B((c, 0), s).

    Continuous in (R, s, c), non-increasing in c, and bounded by the area
    of the smaller disc.
    """
    raw = lens_area_for_case(pair, classify_lens(pair))
    bound = math.pi * min(pair.R * pair.R, pair.s * pair.s)
    return min(max(raw, 0.0), bound)


def chord_half_height(pair: CirclePair) -> float:
    """Largest y-coordinate of the circle intersection points; 0 if none.

    When the circles meet in two points these are (x, +-y) with
    x = (c^2 + R^2 - s^2) / (2c) and y = sqrt(R^2 - x^2).
    """
    if classify_lens(pair) not in TWO_POINT_CASES:
        return 0.0
    x = _chord_x(pair)
    return _safe_sqrt(pair.R * pair.R - x * x, pair.R * pair.R)


def lens_area_derivative(pair: CirclePair) -> float:
    """Rate of change of lens_area in c: exactly -2 * chord_half_height."""
    return -2.0 * chord_half_height(pair)
