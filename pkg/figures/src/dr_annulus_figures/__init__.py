"""Figure rendering for dr-annulus CSV outputs.

Reads the curves and Hilbert CSV files produced by the dr-annulus CLI and
renders region plots and heat-map overlays.  All numbers come from the
input files; nothing is recomputed here.
"""

__version__ = "0.1.0"
