"""Readers for the dr-annulus CSV contracts, with schema validation."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


class SchemaError(ValueError):
    """Input file does not match the expected CSV contract."""


def _data_lines(path) -> list[str]:
    with open(path, newline="") as fh:
        lines = [ln.rstrip("\n") for ln in fh]
    return [ln for ln in lines if ln.strip() and not ln.startswith("#")]


@dataclass
class CurveSet:
    """phi values per index, sampled on a common s grid."""

    s: np.ndarray
    by_ell: dict  # ell (int or math.inf) -> np.ndarray of phi values


def read_curves_csv(path) -> CurveSet:
    lines = _data_lines(path)
    if not lines or lines[0].strip() != "s,ell,phi":
        raise SchemaError(f"{path}: expected header 's,ell,phi'")
    rows = []
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split(",")
        if len(parts) != 3:
            raise SchemaError(f"{path}: row {lineno}: expected 3 fields")
        try:
            s = float(parts[0])
            ell = math.inf if parts[1].strip() == "inf" else int(parts[1])
            value = float(parts[2])
        except ValueError:
            raise SchemaError(f"{path}: row {lineno}: unparsable values") from None
        rows.append((ell, s, value))
    by_ell: dict = {}
    for ell, s, value in rows:
        by_ell.setdefault(ell, []).append((s, value))
    s_ref = None
    curves = {}
    for ell, pairs in by_ell.items():
        s_vals = np.array([p[0] for p in pairs])
        if s_ref is None:
            s_ref = s_vals
        elif len(s_vals) != len(s_ref) or not np.array_equal(s_vals, s_ref):
            raise SchemaError(f"{path}: curves sampled on different s grids")
        curves[ell] = np.array([p[1] for p in pairs])
    if s_ref is None:
        raise SchemaError(f"{path}: no curve rows")
    return CurveSet(s=s_ref, by_ell=curves)


@dataclass
class HilbertTable:
    """H0/H1 values on a full rectangular (s, k) grid."""

    s: np.ndarray
    k: np.ndarray
    h0: np.ndarray  # shape (len(s), len(k))
    h1: np.ndarray


def read_hilbert_csv(path) -> HilbertTable:
    lines = _data_lines(path)
    if not lines or lines[0].strip() != "s,k,h0,h1":
        raise SchemaError(f"{path}: expected header 's,k,h0,h1'")
    rows = []
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split(",")
        if len(parts) != 4:
            raise SchemaError(f"{path}: row {lineno}: expected 4 fields")
        try:
            rows.append(
                (float(parts[0]), float(parts[1]), int(parts[2]), int(parts[3]))
            )
        except ValueError:
            raise SchemaError(f"{path}: row {lineno}: unparsable values") from None
    if not rows:
        raise SchemaError(f"{path}: no grid rows")
    s_vals = sorted({r[0] for r in rows})
    k_vals = sorted({r[1] for r in rows})
    if len(rows) != len(s_vals) * len(k_vals):
        raise SchemaError(f"{path}: rows do not form a full (s, k) grid")
    s_pos = {v: i for i, v in enumerate(s_vals)}
    k_pos = {v: j for j, v in enumerate(k_vals)}
    h0 = np.zeros((len(s_vals), len(k_vals)), dtype=np.int64)
    h1 = np.zeros_like(h0)
    seen = np.zeros(h0.shape, dtype=bool)
    for s, k, a, b in rows:
        i, j = s_pos[s], k_pos[k]
        if seen[i, j]:
            raise SchemaError(f"{path}: duplicate grid point ({s}, {k})")
        seen[i, j] = True
        h0[i, j] = a
        h1[i, j] = b
    return HilbertTable(
        s=np.array(s_vals), k=np.array(k_vals), h0=h0, h1=h1
    )
