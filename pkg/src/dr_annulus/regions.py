"""Boundary curves and homotopy-type classification in the (s, k) plane.

For each scale s the thresholds phi_ell(s) = nu_s(min(rho_ell(s), omega(s)))
cut the density axis into bands: above phi_0 the superlevel set is empty,
between phi_ell and phi_{ell+1} it is an annulus whose Vietoris-Rips complex
at scale s has the homotopy type of the odd sphere S^{2*ell+1}, and below
phi_inf it is contractible.  rho_ell(s) is the radius at which the circle's
Euclidean Vietoris-Rips complex at scale s sits exactly at the ell-th
odd-sphere threshold; on the unit-circumference geodesic circle those
thresholds are the intervals (ell/(2ell+1), (ell+1)/(2ell+3)].

With w = 0 the thresholds phi_ell vanish once rho_ell(s) <= R (the inner
circle can no longer realize that sphere) and the curves are discontinuous.

Two independent classification routes are provided: `classify` walks the
curve values, `classify_via_radius` inverts nu_s to the superlevel inner
radius and looks up the circle's complex directly.  They must agree away
from the curves; near a curve (within `tol`) the first route answers
Boundary, a deliberate non-answer for parameters the region diagram does
not decide.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from .annulus import AnnulusModel, nu, omega, superlevel_inner_radius
from .errors import DomainError

ELL_MAX = 64
DEFAULT_TOL = 1e-9

INF = math.inf


@dataclass(frozen=True)
class RegionLabel:
    """Classifier output: empty / sphere(ell) / point / boundary.

    `sphere` with index ell stands for the homotopy type S^{2*ell+1}.
    """

    kind: str
    ell: Optional[int] = None

    def __post_init__(self):
        if self.kind not in ("empty", "sphere", "point", "boundary"):
            raise ValueError(f"unknown label kind {self.kind!r}")
        if (self.kind == "sphere") != (self.ell is not None):
            raise ValueError("sphere labels carry an index, others do not")


EMPTY = RegionLabel("empty")
POINT = RegionLabel("point")
BOUNDARY = RegionLabel("boundary")


def sphere(ell: int) -> RegionLabel:
    return RegionLabel("sphere", ell)


def rho(ell, s: float) -> float:
    """Radius at which the circle's VR complex at scale s hits threshold ell."""
    if not s > 0:
        raise DomainError(f"s must be positive, got {s}")
    if ell == INF:
        return 0.5 * s
    if ell < 1:
        raise DomainError("rho is undefined for ell = 0")
    return s / (2.0 * math.sin(math.pi * ell / (2 * ell + 1)))


def geodesic_ratio(r: float, s: float) -> float:
    """Geodesic scale on the unit-circumference circle matching Euclidean s.

    Equals arcsin(s / 2r) / pi, clamped at the diameter; the value for
    r = rho_ell(s) is exactly ell / (2*ell + 1).
    """
    if not r > 0:
        raise DomainError(f"r must be positive, got {r}")
    if not s > 0:
        raise DomainError(f"s must be positive, got {s}")
    return math.asin(min(s / (2.0 * r), 1.0)) / math.pi


def circle_vr_homotopy_type(r: float, s: float, ell_max: int = ELL_MAX) -> RegionLabel:
    """Homotopy type of the Euclidean VR complex of the radius-r circle at scale s.

    Scales past the diameter give the full simplex, hence a point.  The
    sphere intervals are closed on the right, so a ratio exactly at
    (ell+1)/(2ell+3) still belongs to sphere ell.
    """
    if 2.0 * r < s:
        return POINT
    ratio = geodesic_ratio(r, s)
    for ell in range(ell_max + 1):
        if ratio <= (ell + 1) / (2 * ell + 3):
            return sphere(ell)
    return BOUNDARY


@lru_cache(maxsize=65536)
def phi(model: AnnulusModel, ell, s: float) -> float:
    """Threshold curve value phi_ell(s) (phi-tilde for w = 0 models)."""
    peak = omega(model, s)
    if ell == 0:
        return peak.M
    r = rho(ell, s)
    if model.w == 0 and r <= model.R:
        return 0.0
    return nu(model, s, min(r, peak.omega))


def classify(
    model: AnnulusModel,
    s: float,
    k: float,
    tol: float = DEFAULT_TOL,
    ell_max: int = ELL_MAX,
) -> RegionLabel:
    """Region label at (s, k) by walking the curve values.

    Answers Boundary within tol of any curve, and in the accumulation band
    between phi_{ell_max+1} and phi_inf where the sphere index overflows
    the cap.
    """
    if not 0 <= k <= 1:
        raise DomainError(f"k must lie in [0, 1], got {k}")
    upper = phi(model, 0, s)
    if k > upper + tol:
        return EMPTY
    if k < phi(model, INF, s) - tol:
        return POINT
    for ell in range(ell_max + 1):
        if k >= upper - tol:
            return BOUNDARY  # within tol of curve ell
        lower = phi(model, ell + 1, s)
        if k > lower + tol:
            return sphere(ell)
        upper = lower
    return BOUNDARY  # accumulation band past the index cap


def classify_via_radius(
    model: AnnulusModel, s: float, k: float, ell_max: int = ELL_MAX
) -> RegionLabel:
    """Region label at (s, k) through the superlevel inner radius.

    Inverts nu_s to the inner radius P of the superlevel annulus and reads
    off the circle's VR homotopy type at scale s.  P below s/2 (including
    a full-disc superlevel set, P = 0) is contractible.
    """
    if not 0 <= k <= 1:
        raise DomainError(f"k must lie in [0, 1], got {k}")
    p = superlevel_inner_radius(model, s, k)
    if p is None:
        return EMPTY
    if p < 0.5 * s:
        return POINT
    return circle_vr_homotopy_type(p, s, ell_max)


@dataclass(frozen=True)
class CurveTable:
    """phi_ell sampled on an s-grid, one row per index in `ells`."""

    model: AnnulusModel
    s_values: tuple
    ells: tuple
    values: tuple  # same order as ells; each entry a tuple over s_values

    def row(self, ell) -> np.ndarray:
        return np.asarray(self.values[self.ells.index(ell)])


def curve_table(
    model: AnnulusModel, s_values: Sequence[float], ells: Sequence
) -> CurveTable:
    s_values = tuple(float(s) for s in s_values)
    ells = tuple(ells)
    values = tuple(
        tuple(phi(model, ell, s) for s in s_values) for ell in ells
    )
    return CurveTable(model=model, s_values=s_values, ells=ells, values=values)
