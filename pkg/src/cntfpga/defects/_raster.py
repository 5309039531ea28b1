# -*- coding: utf-8 -*-

"""Rasterization of line segments onto the tile grid of the floorplan.

Floorplan coordinates are in μm: x grows with the column index, y with the
row index, and tile (r, c) covers [c*p, (c+1)*p) x [r*p, (r+1)*p) for
pitch p.

SPDX-FileCopyrightText: cntfpga developer group

SPDX-License-Identifier: MIT

"""

import math
from typing import NamedTuple


class TileCrossing(NamedTuple):
    """Part of a segment inside one tile: its y extent and length."""

    row: int
    col: int
    y_lo: float
    y_hi: float
    length: float


def clip_segment(x0, y0, x1, y1, width, height):
    """Clip a segment to the box [0, width] x [0, height] (Liang-Barsky).

    Returns the clipped end points or None if the segment misses the box.

    Examples
    --------
    >>> clip_segment(-1.0, 1.0, 3.0, 1.0, 2.0, 2.0)
    (0.0, 1.0, 2.0, 1.0)
    >>> clip_segment(-2.0, -2.0, -1.0, -1.0, 2.0, 2.0) is None
    True
    """
    dx = x1 - x0
    dy = y1 - y0
    p = (-dx, dx, -dy, dy)
    q = (x0, width - x0, y0, height - y0)
    u0, u1 = 0.0, 1.0
    for pi, qi in zip(p, q):
        if pi == 0:
            if qi < 0:
                return None
            continue
        r = qi / pi
        if pi < 0:
            if r > u1:
                return None
            u0 = max(u0, r)
        else:
            if r < u0:
                return None
            u1 = min(u1, r)
    return (x0 + u0 * dx, y0 + u0 * dy, x0 + u1 * dx, y0 + u1 * dy)


def _index_range(lo, hi, pitch, n):
    first = min(int(lo // pitch), n - 1)
    last = min(int(hi // pitch), n - 1)
    # An end point on a grid line only touches the next cell.
    if hi > lo and last > first and hi == last * pitch:
        last -= 1
    return first, last


def tiles_crossed(x0, y0, x1, y1, pitch, n_rows, n_cols):
    """Tiles crossed by a segment, with the crossing's y extent and length.

    The segment is clipped to the floorplan first. Tiles the segment only
    touches in a single point are skipped.

    Examples
    --------
    >>> [c[:2] for c in tiles_crossed(1.5, 0.0, 1.5, 3.2, 1.0, 8, 8)]
    [(0, 1), (1, 1), (2, 1), (3, 1)]
    """
    clipped = clip_segment(x0, y0, x1, y1, n_cols * pitch, n_rows * pitch)
    if clipped is None:
        return []
    x0, y0, x1, y1 = clipped
    if x1 < x0:
        x0, y0, x1, y1 = x1, y1, x0, y0
    dx = x1 - x0
    dy = y1 - y0
    seg_length = math.hypot(dx, dy)
    if seg_length == 0:
        return []

    crossings = []
    c_first, c_last = _index_range(x0, x1, pitch, n_cols)
    for col in range(c_first, c_last + 1):
        if dx == 0:
            t_a, t_b = 0.0, 1.0
        else:
            t_a = (max(x0, col * pitch) - x0) / dx
            t_b = (min(x1, (col + 1) * pitch) - x0) / dx
        if t_b <= t_a and dx != 0:
            continue
        ya = y0 + t_a * dy
        yb = y0 + t_b * dy
        y_lo, y_hi = min(ya, yb), max(ya, yb)
        r_first, r_last = _index_range(y_lo, y_hi, pitch, n_rows)
        for row in range(r_first, r_last + 1):
            o_lo = max(y_lo, row * pitch)
            o_hi = min(y_hi, (row + 1) * pitch)
            if dy == 0:
                length = (t_b - t_a) * seg_length
            else:
                length = (o_hi - o_lo) / abs(dy) * seg_length
            if length <= 0:
                continue
            crossings.append(TileCrossing(row, col, o_lo, o_hi, length))
    return crossings
