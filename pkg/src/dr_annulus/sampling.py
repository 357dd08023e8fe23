"""Deterministic seeded sampling from the weighted annulus.

The generator is counter-based so that sampling is reproducible bit for
bit and parallelizable by construction: point i is derived from Philox
counter block i of the keyed stream (philox4x64-10, key = seed).  Each
block yields four 64-bit words; a word maps to a double in [0, 1) as
(word >> 11) * 2**-53, matching numpy's convention.  Word 0 chooses the
branch (inner disc with probability w), word 1 drives the radius, word 2
the angle; word 3 is reserved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from numpy.random import Generator, Philox

from .annulus import AnnulusModel

PRNG_ID = "philox4x64-10 key=seed, block i -> point i, double=(word>>11)*2^-53"


@dataclass(frozen=True)
class PointCloud:
    """Finite planar sample with its seed and model provenance."""

    points: np.ndarray  # (n, 2) float64
    seed: int
    model: AnnulusModel

    @property
    def n(self) -> int:
        return self.points.shape[0]


def sample(model: AnnulusModel, n: int, seed: int) -> PointCloud:
    """Draw n independent points from the model, deterministically in seed.

    Inner-disc radii are R * sqrt(u), annulus radii sqrt(R^2 + u(Q^2 - R^2)),
    angles uniform; the inner branch is taken with probability w.
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    words = Generator(Philox(key=seed)).integers(
        0, 2**64, size=4 * n, dtype=np.uint64, endpoint=False
    )
    u = ((words >> np.uint64(11)) * 2.0**-53).reshape(n, 4)
    inner = u[:, 0] < model.w
    radius = np.where(
        inner,
        model.R * np.sqrt(u[:, 1]),
        np.sqrt(model.R**2 + u[:, 1] * (model.Q**2 - model.R**2)),
    )
    angle = 2.0 * math.pi * u[:, 2]
    points = np.column_stack((radius * np.cos(angle), radius * np.sin(angle)))
    return PointCloud(points=points, seed=int(seed), model=model)


def cloud_metadata(cloud: PointCloud) -> dict:
    return {
        "model": {"R": cloud.model.R, "Q": cloud.model.Q, "w": cloud.model.w},
        "n": cloud.n,
        "seed": cloud.seed,
        "prng": PRNG_ID,
    }


def points_csv_lines(cloud: PointCloud, header_comment: str) -> list[str]:
    lines = [f"# {header_comment}", "x,y"]
    for x, y in cloud.points:
        lines.append(f"{x:.17g},{y:.17g}")
    return lines


def sidecar_path(csv_path) -> Path:
    p = Path(csv_path)
    return p.with_name(p.stem + ".meta.json")


def read_points_csv(path) -> np.ndarray:
    """Read an x,y points CSV, skipping leading # comment lines.

    Raises ValueError naming the offending line on malformed input.
    """
    rows = []
    with open(path, newline="") as fh:
        lineno = 0
        header_seen = False
        for raw in fh:
            lineno += 1
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                if header_seen:
                    raise ValueError(f"{path}: line {lineno}: comment after header")
                continue
            if not header_seen:
                if [f.strip() for f in line.split(",")] != ["x", "y"]:
                    raise ValueError(
                        f"{path}: line {lineno}: expected header 'x,y', got {line!r}"
                    )
                header_seen = True
                continue
            fields = line.split(",")
            if len(fields) != 2:
                raise ValueError(
                    f"{path}: line {lineno}: expected 2 fields, got {len(fields)}"
                )
            try:
                rows.append((float(fields[0]), float(fields[1])))
            except ValueError:
                raise ValueError(
                    f"{path}: line {lineno}: non-numeric coordinate in {line!r}"
                ) from None
    if not header_seen:
        raise ValueError(f"{path}: missing 'x,y' header")
    return np.asarray(rows, dtype=np.float64).reshape(-1, 2)
