"""The weighted annulus model and its ball-measure profile.

The model is the disc of radius Q carrying a two-step radial density: mass
w spread uniformly over the open inner disc of radius R (density a), mass
1 - w spread uniformly over the annulus R <= |p| <= Q (density b).  The
"weighted annulus" condition a < b is enforced by the constructor; w = 0
is allowed and restricts the underlying space to the annulus itself.

nu(model, s, c) is the measure of the open ball of radius s centred at
distance c from the origin.  It is unimodal in c; omega(model, s) locates
its leftmost maximizer, and superlevel_inner_radius inverts it from the
left.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .disc_geometry import CirclePair, chord_half_height, lens_area
from .errors import DomainError, InternalInconsistencyError

BISECT_TOL = 1e-12
BISECT_MAX_ITER = 200

# Sign slack (relative to the density scale) allowed at the bracket ends of
# the peak-locus root before we call the geometry inconsistent.
BRACKET_SLACK = 1e-9


@dataclass(frozen=True)
class AnnulusModel:
    """Radii and inner-disc mass of a weighted annulus."""

    R: float
    Q: float
    w: float

    def __post_init__(self):
        if not 0 < self.R < self.Q:
            raise ValueError(f"need 0 < R < Q, got R={self.R}, Q={self.Q}")
        if not 0 <= self.w < 1:
            raise ValueError(f"need 0 <= w < 1, got w={self.w}")
        if self.inner_density >= self.annulus_density:
            raise ValueError(
                f"not a weighted annulus: inner density {self.inner_density} "
                f"must be below annulus density {self.annulus_density}"
            )

    @property
    def inner_density(self) -> float:
        return self.w / (math.pi * self.R * self.R)

    @property
    def annulus_density(self) -> float:
        return (1.0 - self.w) / (math.pi * (self.Q * self.Q - self.R * self.R))

    @property
    def domain_left(self) -> float:
        """Left end of the centre-offset domain: 0, or R when w = 0."""
        return 0.0 if self.w > 0 else self.R


class Regime(enum.Enum):
    SMALL_S = "small_s"
    MIDDLE_S = "middle_s"
    LARGE_S = "large_s"


@dataclass(frozen=True)
class PeakLocus:
    """Leftmost maximizer omega of nu_s together with the peak value M."""

    s: float
    omega: float
    M: float
    regime: Regime


def nu(model: AnnulusModel, s: float, c: float) -> float:
    """Measure of the open ball of radius s centred at (c, 0)."""
    if not s > 0:
        raise DomainError(f"s must be positive, got {s}")
    if not model.domain_left <= c <= model.Q:
        raise DomainError(
            f"centre offset {c} outside [{model.domain_left}, {model.Q}]"
        )
    a, b = model.inner_density, model.annulus_density
    inner = lens_area(CirclePair(model.R, s, c))
    outer = lens_area(CirclePair(model.Q, s, c))
    return min(1.0, max(0.0, a * inner + b * (outer - inner)))


@dataclass(frozen=True)
class BallMeasureProfile:
    """The function c -> nu_s(c) on its domain, for a fixed radius s."""

    model: AnnulusModel
    s: float

    def __post_init__(self):
        if not self.s > 0:
            raise ValueError(f"s must be positive, got {self.s}")

    @property
    def domain(self) -> tuple[float, float]:
        return (self.model.domain_left, self.model.Q)

    def __call__(self, c: float) -> float:
        return nu(self.model, self.s, c)


def _chord_gap(model: AnnulusModel, s: float, c: float) -> float:
    """(b - a) * y_R(c) - b * y_Q(c); nu_s'(c) = 2 * this in the crossing region."""
    a, b = model.inner_density, model.annulus_density
    y_r = chord_half_height(CirclePair(model.R, s, c))
    y_q = chord_half_height(CirclePair(model.Q, s, c))
    return (b - a) * y_r - b * y_q


def omega(model: AnnulusModel, s: float) -> PeakLocus:
    """Leftmost maximizer of nu_s over the model's domain.

    For s up to half the annulus gap the maximizing plateau starts where
    the ball first fits inside the annulus, at c = R + s.  Past half the
    radius sum the profile is non-increasing and the maximizer sits at the
    left domain end.  In between the maximizer is the unique root of
    (b - a) * y_R(c) = b * y_Q(c) on [Q - s, z], z = sqrt((R^2+Q^2)/2 - s^2),
    clamped to the domain when w = 0.
    """
    if not s > 0:
        raise DomainError(f"s must be positive, got {s}")
    R, Q = model.R, model.Q
    if s <= 0.5 * (Q - R):
        om, regime = R + s, Regime.SMALL_S
    elif s >= 0.5 * (Q + R):
        om, regime = model.domain_left, Regime.LARGE_S
    else:
        om = max(_middle_regime_root(model, s), model.domain_left)
        regime = Regime.MIDDLE_S
    return PeakLocus(s=s, omega=om, M=nu(model, s, om), regime=regime)


def _middle_regime_root(model: AnnulusModel, s: float) -> float:
    R, Q = model.R, model.Q
    lo = Q - s
    hi = math.sqrt(0.5 * (R * R + Q * Q) - s * s)
    g_lo = _chord_gap(model, s, lo)
    g_hi = _chord_gap(model, s, hi)
    scale = model.annulus_density * Q
    if g_lo < -BRACKET_SLACK * scale or g_hi > BRACKET_SLACK * scale:
        raise InternalInconsistencyError(
            f"peak root not bracketed on [{lo}, {hi}]: g={g_lo}, {g_hi}"
        )
    # With w = 0 the root is the right endpoint itself and g(hi) may round
    # to either sign; the sign-based bisection still converges to it.
    for _ in range(BISECT_MAX_ITER):
        if hi - lo <= BISECT_TOL:
            break
        mid = 0.5 * (lo + hi)
        if _chord_gap(model, s, mid) >= 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def superlevel_inner_radius(model: AnnulusModel, s: float, k: float):
    """Left endpoint of {c : nu_s(c) >= k}, or None when the set is empty.

    Uses the unimodal shape of nu_s: bisection on [domain left, omega]
    keeps nu(lo) < k <= nu(hi), so it converges to the leftmost point of
    the superlevel set even across plateaus.
    """
    peak = omega(model, s)
    if k > peak.M:
        return None
    lo = model.domain_left
    if nu(model, s, lo) >= k:
        return lo
    hi = peak.omega
    for _ in range(BISECT_MAX_ITER):
        if hi - lo <= BISECT_TOL:
            break
        mid = 0.5 * (lo + hi)
        if nu(model, s, mid) >= k:
            hi = mid
        else:
            lo = mid
    return hi
