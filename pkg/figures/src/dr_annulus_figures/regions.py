"""Region plot: boundary curves with the bands between them filled."""

from __future__ import annotations

import math
import sys

from .io import SchemaError, read_curves_csv
from .style import SAVEFIG_KWARGS, curve_color, curve_label


def render_regions(curves_path, out_path) -> None:
    import matplotlib.pyplot as plt

    curves = read_curves_csv(curves_path)
    finite = sorted(ell for ell in curves.by_ell if ell != math.inf)
    order = finite + ([math.inf] if math.inf in curves.by_ell else [])

    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    # fill between consecutive curves; the band below curve ell wears the
    # color of curve ell + 1
    for upper, lower in zip(order, order[1:]):
        ax.fill_between(
            curves.s,
            curves.by_ell[lower],
            curves.by_ell[upper],
            color=curve_color(lower),
            alpha=0.25,
            linewidth=0,
        )
    for ell in order:
        ax.plot(
            curves.s,
            curves.by_ell[ell],
            color=curve_color(ell),
            linewidth=1.4,
            label=curve_label(ell),
        )
    ax.set_xlabel("scale s")
    ax.set_ylabel("density threshold k")
    ax.set_xlim(curves.s[0], curves.s[-1])
    ax.set_ylim(bottom=0)
    ax.legend(loc="upper left", frameon=False)
    fig.tight_layout()
    fig.savefig(out_path, **SAVEFIG_KWARGS)
    plt.close(fig)


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    if len(argv) != 2:
        print("usage: render_regions <curves.csv> <out.png>", file=sys.stderr)
        return 1
    try:
        render_regions(argv[0], argv[1])
    except (SchemaError, OSError) as exc:
        print(f"render_regions: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
