"""Heat map of the H1 Hilbert function with the circle-band border overlay."""

from __future__ import annotations

import sys

import numpy as np

from .io import SchemaError, read_curves_csv, read_hilbert_csv
from .style import SAVEFIG_KWARGS


def _edges(centers: np.ndarray) -> np.ndarray:
    if len(centers) == 1:
        half = max(abs(centers[0]) * 0.05, 0.5)
        return np.array([centers[0] - half, centers[0] + half])
    mids = 0.5 * (centers[:-1] + centers[1:])
    first = centers[0] - (mids[0] - centers[0])
    last = centers[-1] + (centers[-1] - mids[-1])
    return np.concatenate(([first], mids, [last]))


def render_hilbert_overlay(hilbert_path, curves_path, out_path) -> None:
    import matplotlib.pyplot as plt
    from matplotlib.colors import BoundaryNorm, ListedColormap

    table = read_hilbert_csv(hilbert_path)
    curves = read_curves_csv(curves_path)

    top = int(table.h1.max())
    # white for 0, light grey for 1, darkening towards the maximum
    shades = ["white"]
    for level in range(1, top + 1):
        grey = 0.82 - 0.62 * (level - 1) / max(top - 1, 1)
        shades.append(str(grey))
    cmap = ListedColormap(shades)
    norm = BoundaryNorm(np.arange(-0.5, top + 1.0), cmap.N)

    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    mesh = ax.pcolormesh(
        _edges(table.s), _edges(table.k), table.h1.T, cmap=cmap, norm=norm
    )
    fig.colorbar(mesh, ax=ax, label="rank H1", ticks=np.arange(0, top + 1))

    # border of the circle band: curves 0 and 1, in black
    for ell in (0, 1):
        if ell in curves.by_ell:
            ax.plot(curves.s, curves.by_ell[ell], color="black", linewidth=1.2)
    ax.set_xlabel("scale s")
    ax.set_ylabel("density threshold k")
    if table.s[0] < table.s[-1]:
        ax.set_xlim(table.s[0], table.s[-1])
    if table.k[0] < table.k[-1]:
        ax.set_ylim(table.k[0], table.k[-1])
    fig.tight_layout()
    fig.savefig(out_path, **SAVEFIG_KWARGS)
    plt.close(fig)


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    if len(argv) != 3:
        print(
            "usage: render_hilbert <hilbert.csv> <curves.csv> <out.png>",
            file=sys.stderr,
        )
        return 1
    try:
        render_hilbert_overlay(argv[0], argv[1], argv[2])
    except (SchemaError, OSError) as exc:
        print(f"render_hilbert: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
