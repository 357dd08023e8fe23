"""Output formats and grid construction shared by the CLI.

All files are written atomically (temp file in the target directory, then
rename).  CSVs start with a single `#`-prefixed metadata comment line
followed by the schema header; floats are printed with 17 significant
digits so values round-trip exactly.  Grid axes are built in exact
rational arithmetic from their decimal string endpoints, with both
endpoints included.
"""

from __future__ import annotations

import json
import os
import tempfile
from fractions import Fraction
from pathlib import Path
from typing import Sequence


def fmt(x: float) -> str:
    return f"{float(x):.17g}"


def metadata_comment(meta: dict) -> str:
    return "# " + json.dumps(meta, sort_keys=True, separators=(",", ":"))


def atomic_write_text(path, text: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or Path("."), prefix=path.name)
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def fraction_axis(lo, hi, steps: int) -> list[Fraction]:
    """Inclusive grid of `steps` points from lo to hi, exact rationals.

    Accepts decimal strings, Fractions, ints, or floats (floats at their
    exact binary value).  steps = 1 yields just the left endpoint.
    """
    if steps < 1:
        raise ValueError(f"steps must be at least 1, got {steps}")
    lo_f, hi_f = Fraction(lo), Fraction(hi)
    if hi_f < lo_f:
        raise ValueError(f"grid endpoints out of order: {lo} > {hi}")
    if steps == 1:
        return [lo_f]
    span = hi_f - lo_f
    return [lo_f + span * i / (steps - 1) for i in range(steps)]


def float_axis(lo, hi, steps: int) -> list[float]:
    return [float(v) for v in fraction_axis(lo, hi, steps)]


def curves_csv(meta: dict, rows: Sequence[tuple]) -> str:
    """rows of (ell, s, value); ell may be an int or math.inf."""
    lines = [metadata_comment(meta), "s,ell,phi"]
    for ell, s, value in rows:
        ell_str = "inf" if ell == float("inf") else str(int(ell))
        lines.append(f"{fmt(s)},{ell_str},{fmt(value)}")
    return "\n".join(lines) + "\n"


def hilbert_csv(meta: dict, grid) -> str:
    lines = [metadata_comment(meta), "s,k,h0,h1"]
    for i, s in enumerate(grid.s_values):
        for j, k in enumerate(grid.k_values):
            lines.append(
                f"{fmt(s)},{fmt(float(k))},{int(grid.h0[i, j])},{int(grid.h1[i, j])}"
            )
    return "\n".join(lines) + "\n"


def json_text(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"
