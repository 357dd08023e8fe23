"""Sparse linear algebra over Z/2 for boundary matrices.

Columns are Python integers used as bitmasks over row indices.  Pivoting
uses the highest set bit, so when rows are indexed in filtration order the
column reduction doubles as the standard persistence pairing.
"""

from __future__ import annotations


def rank_gf2(columns) -> int:
    """Rank of the matrix whose columns are the given bitmask ints."""
    pivots: dict[int, int] = {}
    rank = 0
    for col in columns:
        while col:
            low = col.bit_length() - 1
            other = pivots.get(low)
            if other is None:
                pivots[low] = col
                rank += 1
                break
            col ^= other
    return rank


def reduce_pairs(columns) -> list:
    """Column-reduce in order; return each column's final pivot row.

    Entry j is the pivot (highest set bit) of the reduced column j, or
    None when it reduced to zero.  Each pivot row is claimed by at most
    one column, which is the persistence pairing when rows and columns are
    both in filtration order.
    """
    pivots: dict[int, int] = {}
    lows: list = []
    for col in columns:
        low = None
        while col:
            low = col.bit_length() - 1
            other = pivots.get(low)
            if other is None:
                pivots[low] = col
                break
            col ^= other
            low = None
        lows.append(low)
    return lows
