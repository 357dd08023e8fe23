"""Shared plot styling: curve colors, band fills, deterministic output."""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

# curve colors by index; the fill of the band below curve ell uses the
# color of curve ell + 1 (the circle band sits between curves 0 and 1 and
# is drawn in the color of curve 1)
CURVE_COLORS = {0: "red", 1: "blue", 2: "gold", math.inf: "black"}
FALLBACK_COLOR = "dimgray"

SAVEFIG_KWARGS = {
    "dpi": 150,
    # no timestamps: re-rendering must produce identical bytes
    "metadata": {"Date": None},
}


def curve_color(ell) -> str:
    return CURVE_COLORS.get(ell, FALLBACK_COLOR)


def curve_label(ell) -> str:
    suffix = "inf" if ell == math.inf else str(int(ell))
    return f"level {suffix}"
