"""Degree-Rips bifiltration of a finite planar cloud and its Hilbert functions.

Conventions, fixed throughout:

* balls are open: the ball count of point i at scale s is the number of
  points j (including i itself) with squared distance d(i,j)^2 < s^2, and
  edges require strict d^2 < s^2;
* vertex survival at density threshold k is the exact integer statement
  count >= k * n, decided in rational arithmetic so no float rounding can
  flip a vertex (k given as a Fraction is used exactly; a float k is used
  at its exact binary value);
* homology is over Z/2, through dimension 1.

The degree convention is normalized: thresholds are measures k in [0, 1]
and a point's own membership counts toward its ball.  Tools that filter
by raw degree >= k' - 1 in the one-skeleton relate to this by
k' = k * n (the ball count equals one-skeleton degree plus one), so pixel
output of such tools is an affine reparameterization of ours.

`hilbert_grid` evaluates a whole (s, k) grid.  Cells in a row share the
survival threshold t = ceil(k * n), and for fixed t the frames form a
filtration in s: a vertex enters once its t-th nearest squared distance
drops below s^2, an edge once all of its own and its endpoints' entry
values do.  One persistence reduction per distinct t therefore yields the
whole row; the result is identical to building every frame separately,
which remains available as method="naive" and is what the test-suite
cross-checks against.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .annulus import AnnulusModel
from .errors import DomainError
from .homology import rank_gf2
from .regions import ELL_MAX, EMPTY, INF, POINT, classify, phi, sphere


def survival_threshold(k, n: int) -> int:
    """Minimal integer ball count with count >= k * n, computed exactly."""
    frac = k if isinstance(k, Fraction) else Fraction(k)
    if frac < 0 or frac > 1:
        raise DomainError(f"k must lie in [0, 1], got {k}")
    p, q = frac.numerator, frac.denominator
    return -((-p * n) // q)


@dataclass(frozen=True)
class DistanceIndex:
    """Squared pairwise distances of a cloud, with per-point sorted rows."""

    points: np.ndarray  # (n, 2)
    d2: np.ndarray  # (n, n) squared distances
    neighbor_d2: np.ndarray  # (n, n) each row sorted ascending

    @property
    def n(self) -> int:
        return self.points.shape[0]


def distance_index(points) -> DistanceIndex:
    pts = np.ascontiguousarray(points, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise ValueError(f"expected an (n, 2) array of points, got {pts.shape}")
    diff = pts[:, None, :] - pts[None, :, :]
    d2 = np.einsum("ijk,ijk->ij", diff, diff)
    return DistanceIndex(points=pts, d2=d2, neighbor_d2=np.sort(d2, axis=1))


def _entry_radius2(index: DistanceIndex, t: int) -> np.ndarray:
    """Squared scale past which each vertex reaches ball count t."""
    if t <= 1:
        return np.zeros(index.n)
    if t > index.n:
        return np.full(index.n, np.inf)
    return index.neighbor_d2[:, t - 1].copy()


@dataclass(frozen=True)
class DegreeRipsFrame:
    """2-skeleton of the degree-Rips complex at one parameter pair."""

    s: float
    k: object  # as passed in (float or Fraction)
    threshold: int
    vertices: tuple
    edges: tuple  # (i, j) with i < j, sorted by (d2, i, j)
    triangles: tuple  # (i, j, l) with i < j < l, sorted by (max d2, lex)


def build_frame(index: DistanceIndex, s: float, k) -> DegreeRipsFrame:
    if not s > 0:
        raise DomainError(f"s must be positive, got {s}")
    s2 = s * s
    t = survival_threshold(k, index.n)
    counts = (index.d2 < s2).sum(axis=1)
    alive = np.flatnonzero(counts >= t)
    sub = index.d2[np.ix_(alive, alive)]
    adj = sub < s2
    np.fill_diagonal(adj, False)
    ii, jj = np.nonzero(np.triu(adj, 1))
    edges = sorted(
        ((int(alive[a]), int(alive[b])) for a, b in zip(ii, jj)),
        key=lambda e: (index.d2[e[0], e[1]], e),
    )
    triangles = []
    for a, b in zip(ii, jj):
        common = np.flatnonzero(adj[a] & adj[b])
        for c in common[common > b]:
            tri = (int(alive[a]), int(alive[b]), int(alive[c]))
            triangles.append(tri)
    triangles.sort(
        key=lambda tr: (
            max(
                index.d2[tr[0], tr[1]],
                index.d2[tr[0], tr[2]],
                index.d2[tr[1], tr[2]],
            ),
            tr,
        )
    )
    return DegreeRipsFrame(
        s=float(s),
        k=k,
        threshold=t,
        vertices=tuple(int(v) for v in alive),
        edges=tuple(edges),
        triangles=tuple(triangles),
    )


def homology_ranks(frame: DegreeRipsFrame) -> tuple[int, int]:
    """Ranks of H0 and H1 over Z/2 via sparse column elimination."""
    n_vert = len(frame.vertices)
    if n_vert == 0:
        return 0, 0
    vpos = {v: i for i, v in enumerate(frame.vertices)}
    epos = {e: i for i, e in enumerate(frame.edges)}
    rank1 = rank_gf2(
        (1 << vpos[i]) | (1 << vpos[j]) for i, j in frame.edges
    )
    rank2 = rank_gf2(
        (1 << epos[(i, j)]) | (1 << epos[(i, l)]) | (1 << epos[(j, l)])
        for i, j, l in frame.triangles
    )
    h0 = n_vert - rank1
    h1 = len(frame.edges) - rank1 - rank2
    return h0, h1


@dataclass(frozen=True)
class HilbertGrid:
    """Ranks of H0 and H1 at every point of an (s, k) grid."""

    s_values: tuple
    k_values: tuple
    h0: np.ndarray  # shape (len(s_values), len(k_values))
    h1: np.ndarray


def _static_complex(index: DistanceIndex, s2max: float):
    """Edges and triangles that can ever appear below the largest scale."""
    d2 = index.d2
    n = index.n
    close = d2 < s2max
    np.fill_diagonal(close, False)
    ei, ej = np.nonzero(np.triu(close, 1))
    edge_d2 = d2[ei, ej]
    edge_id = {}
    for idx, (a, b) in enumerate(zip(ei.tolist(), ej.tolist())):
        edge_id[(a, b)] = idx
    masks = []
    for v in range(n):
        row = close[v]
        m = 0
        for u in np.flatnonzero(row):
            m |= 1 << int(u)
        masks.append(m)
    tri_edges = []
    for idx, (a, b) in enumerate(zip(ei.tolist(), ej.tolist())):
        common = masks[a] & masks[b]
        common &= ~((1 << (b + 1)) - 1)  # only third vertices above b
        while common:
            bit = common & -common
            c = bit.bit_length() - 1
            common ^= bit
            tri_edges.append((idx, edge_id[(a, c)], edge_id[(b, c)]))
    if tri_edges:
        tri = np.asarray(tri_edges, dtype=np.int64)
    else:
        tri = np.empty((0, 3), dtype=np.int64)
    return ei, ej, edge_d2, tri


class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        root = x
        while p[root] != root:
            root = p[root]
        while p[x] != root:
            p[x], x = root, p[x]
        return root

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        self.parent[ry] = rx
        return True


def _row_ranks(payload):
    """h0/h1 along the s axis for one survival threshold.

    payload = (a2, s2_grid, ei, ej, edge_d2, tri).  Returns two int arrays
    over the s grid.
    """
    a2, s2_grid, ei, ej, edge_d2, tri = payload
    s2max = s2_grid[-1]
    fe = np.maximum(edge_d2, np.maximum(a2[ei], a2[ej]))
    keep_e = np.flatnonzero(fe < s2max)
    fe_kept = fe[keep_e]
    order = np.lexsort((ej[keep_e], ei[keep_e], fe_kept))
    sorted_e = keep_e[order]
    fe_sorted = fe_kept[order]
    # filtration position of every static edge that survives
    pos = np.full(len(fe), -1, dtype=np.int64)
    pos[sorted_e] = np.arange(len(sorted_e))

    # H0: vertices enter at a2, tree edges kill components
    alive_v = np.sort(a2[a2 < s2max])
    uf = _UnionFind(len(a2))
    tree_f = []
    nontree_f = []
    nontree_positions = []
    ei_sorted = ei[sorted_e]
    ej_sorted = ej[sorted_e]
    for p in range(len(sorted_e)):
        if uf.union(int(ei_sorted[p]), int(ej_sorted[p])):
            tree_f.append(fe_sorted[p])
        else:
            nontree_f.append(fe_sorted[p])
            nontree_positions.append(p)
    tree_f = np.asarray(tree_f)
    births = np.asarray(nontree_f)

    h0 = np.searchsorted(alive_v, s2_grid, side="left") - np.searchsorted(
        tree_f, s2_grid, side="left"
    )

    # H1 deaths: pair triangles against edges in filtration order
    deaths = []
    if len(tri):
        ft = np.maximum(
            np.maximum(fe[tri[:, 0]], fe[tri[:, 1]]), fe[tri[:, 2]]
        )
        keep_t = np.flatnonzero(ft < s2max)
        ft_kept = ft[keep_t]
        t_order = keep_t[
            np.lexsort(
                (tri[keep_t, 2], tri[keep_t, 1], tri[keep_t, 0], ft_kept)
            )
        ]
        pivots: dict[int, int] = {}
        tri_sorted = tri[t_order]
        ft_sorted = ft[t_order]
        for row, f_tri in zip(tri_sorted.tolist(), ft_sorted.tolist()):
            col = (
                (1 << int(pos[row[0]]))
                | (1 << int(pos[row[1]]))
                | (1 << int(pos[row[2]]))
            )
            while col:
                low = col.bit_length() - 1
                other = pivots.get(low)
                if other is None:
                    pivots[low] = col
                    deaths.append(f_tri)
                    break
                col ^= other
    deaths = np.sort(np.asarray(deaths)) if deaths else np.empty(0)

    h1 = np.searchsorted(births, s2_grid, side="left") - np.searchsorted(
        deaths, s2_grid, side="left"
    )
    return h0.astype(np.int64), h1.astype(np.int64)


def default_workers() -> int:
    """Worker cap from the DRA_THREADS environment variable (default 1)."""
    raw = os.environ.get("DRA_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def hilbert_grid(
    index: DistanceIndex,
    s_values: Sequence[float],
    k_values: Sequence,
    method: str = "fast",
    n_jobs: Optional[int] = None,
) -> HilbertGrid:
    """H0/H1 ranks at every grid point; axes must be ascending.

    method="fast" shares one persistence reduction per distinct survival
    threshold, method="naive" builds and reduces every frame on its own;
    the two agree exactly.
    """
    s_list = [float(s) for s in s_values]
    if not s_list or sorted(s_list) != s_list or s_list[0] <= 0:
        raise DomainError("s_values must be ascending and positive")
    k_list = list(k_values)
    thresholds = [survival_threshold(k, index.n) for k in k_list]
    if thresholds != sorted(thresholds):
        raise DomainError("k_values must be ascending")

    shape = (len(s_list), len(k_list))
    h0 = np.zeros(shape, dtype=np.int64)
    h1 = np.zeros(shape, dtype=np.int64)

    if method == "naive":
        for i, s in enumerate(s_list):
            for j, k in enumerate(k_list):
                h0[i, j], h1[i, j] = homology_ranks(build_frame(index, s, k))
        return HilbertGrid(tuple(s_list), tuple(k_list), h0, h1)
    if method != "fast":
        raise ValueError(f"unknown method {method!r}")

    s2_grid = np.asarray([s * s for s in s_list])
    ei, ej, edge_d2, tri = _static_complex(index, s2_grid[-1])
    distinct = sorted(set(thresholds))
    payloads = [
        (_entry_radius2(index, t), s2_grid, ei, ej, edge_d2, tri)
        for t in distinct
    ]
    workers = default_workers() if n_jobs is None else max(1, n_jobs)
    if workers > 1 and len(payloads) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_row_ranks, payloads))
    else:
        rows = [_row_ranks(p) for p in payloads]
    by_t = dict(zip(distinct, rows))
    for j, t in enumerate(thresholds):
        row_h0, row_h1 = by_t[t]
        h0[:, j] = row_h0
        h1[:, j] = row_h1
    return HilbertGrid(tuple(s_list), tuple(k_list), h0, h1)


def _band_position(model: AnnulusModel, s: float, k: float, ell_max: int):
    """Label by curve bands plus the point's distance to the nearest curve.

    Returns (label, distance, scale).  The distance is measured in k units
    to the closest bounding curve of the point's region; the scale is the
    local height of the circle band, phi_0(s) - phi_1(s), which is the
    band the comparison is about.  (Using each region's own height would
    make the empty region unreachable inside any plotting window, since
    its band extends up to k = 1.)
    """
    top = phi(model, 0, s)
    scale = top - phi(model, 1, s)
    if k > top:
        return EMPTY, k - top, scale
    bottom = phi(model, INF, s)
    if k < bottom:
        return POINT, bottom - k, scale
    upper = top
    for ell in range(ell_max + 1):
        lower = phi(model, ell + 1, s)
        if lower <= k <= upper:
            return sphere(ell), min(upper - k, k - lower), scale
        upper = lower
    return None, 0.0, scale


def region_agreement(
    grid: HilbertGrid,
    model: AnnulusModel,
    margin: float,
    ell_max: int = ELL_MAX,
) -> dict:
    """Score the empirical H1 grid against the analytic region diagram.

    Only grid points farther than `margin` times the local circle-band
    height from every bounding curve are scored: inside the circle band
    H1 should be 1, inside the empty and contractible regions it should
    be 0.  Fractions over zero checked points are reported as 1.0
    (vacuous).
    """
    n_checked = n_agree = 0
    n_triv = n_triv_agree = 0
    for i, s in enumerate(grid.s_values):
        for j, k in enumerate(grid.k_values):
            kf = float(k)
            label, dist, scale = _band_position(model, s, kf, ell_max)
            if label is None or scale <= 0 or dist <= margin * scale:
                continue
            if label != classify(model, s, kf, ell_max=ell_max):
                continue
            if label == sphere(0):
                n_checked += 1
                n_agree += int(grid.h1[i, j] == 1)
            elif label in (EMPTY, POINT):
                n_triv += 1
                n_triv_agree += int(grid.h1[i, j] == 0)
    s_vals, k_vals = grid.s_values, grid.k_values
    return {
        "n_checked": n_checked,
        "n_agree": n_agree,
        "fraction": (n_agree / n_checked) if n_checked else 1.0,
        "margin": margin,
        "grid_spec": {
            "s_min": s_vals[0],
            "s_max": s_vals[-1],
            "s_steps": len(s_vals),
            "k_min": float(k_vals[0]),
            "k_max": float(k_vals[-1]),
            "k_steps": len(k_vals),
        },
        "trivial": {
            "n_checked": n_triv,
            "n_agree": n_triv_agree,
            "fraction": (n_triv_agree / n_triv) if n_triv else 1.0,
        },
    }
