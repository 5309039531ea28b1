# -*- coding: utf-8 -*-

"""Spare-row sharing schemes and the grouping of 8×8 tiles.

SPDX-FileCopyrightText: cntfpga developer group

SPDX-License-Identifier: MIT

"""

import logging
from typing import NamedTuple
from typing import Tuple

import pandas as pd

from cntfpga._helpers import warn_suspicious

TILE_SIZE = (8, 8)


class SharingScheme(NamedTuple):
    scheme_id: int
    tiles_per_group: int
    spare_rows_per_group: int
    tile_size: Tuple[int, int] = TILE_SIZE

    @property
    def rows_per_tile(self):
        return self.spare_rows_per_group / self.tiles_per_group


SCHEMES = {
    i: SharingScheme(i, tiles, spares)
    for i, (tiles, spares) in enumerate(
        [(1, 1), (2, 2), (2, 3), (3, 3), (3, 4), (4, 4), (4, 5), (5, 4)]
    )
}


def get_scheme(scheme):
    """Scheme by id; a SharingScheme is passed through."""
    if isinstance(scheme, SharingScheme):
        return scheme
    try:
        return SCHEMES[int(scheme)]
    except (KeyError, ValueError):
        msg = "Unknown sharing scheme {0!r}, choose from {1}."
        raise ValueError(msg.format(scheme, sorted(SCHEMES)))


def scheme_overhead(scheme):
    """Spare rows per 8×8 tile and that number in percent of the largest
    one of all schemes.

    >>> rows, pct = scheme_overhead(5)
    >>> rows, round(pct, 1)
    (1.0, 66.7)
    """
    scheme = get_scheme(scheme)
    top = max(s.rows_per_tile for s in SCHEMES.values())
    return scheme.rows_per_tile, 100.0 * scheme.rows_per_tile / top


def scheme_table():
    """All schemes with their overhead.

    >>> scheme_table()["normalized_overhead_pct"].round(1).tolist()
    [66.7, 66.7, 100.0, 66.7, 88.9, 66.7, 83.3, 53.3]
    """
    rows = []
    for scheme in SCHEMES.values():
        per_tile, pct = scheme_overhead(scheme)
        rows.append(
            {
                "scheme": scheme.scheme_id,
                "tiles_per_group": scheme.tiles_per_group,
                "spare_rows_per_group": scheme.spare_rows_per_group,
                "rows_per_tile": per_tile,
                "normalized_overhead_pct": pct,
            }
        )
    return pd.DataFrame(rows)


class TileGroup(NamedTuple):
    """8×8 tiles of one block row sharing `spares` spare rows; `block_cols`
    are their block column indices from left to right."""

    block_row: int
    block_cols: Tuple[int, ...]
    spares: int


def group_tiles(geometry, scheme):
    """Group the 8×8 tiles of an array.

    Every block row is cut into groups of `tiles_per_group` neighbouring
    tiles from the left. A trailing partial group of m tiles gets
    floor(spares * m / tiles_per_group) spares.

    Examples
    --------
    >>> from cntfpga.fabric import ArrayGeometry
    >>> len(group_tiles(ArrayGeometry(8, 320), 7))
    8
    >>> group_tiles(ArrayGeometry(8, 32), 5)
    [TileGroup(block_row=0, block_cols=(0, 1, 2, 3), spares=4)]
    """
    scheme = get_scheme(scheme)
    height, width = scheme.tile_size
    n_block_rows = geometry.n_rows // height
    n_block_cols = geometry.n_cols // width
    if n_block_rows == 0 or n_block_cols == 0:
        msg = "{0} is smaller than one {1}×{2} tile."
        raise ValueError(msg.format(geometry, height, width))
    if geometry.n_rows % height or geometry.n_cols % width:
        warn_suspicious(
            "{0} does not split into {1}×{2} tiles; the last {3} rows and "
            "{4} columns of CLBs are left out of every group.",
            geometry,
            height,
            width,
            geometry.n_rows % height,
            geometry.n_cols % width,
        )
    size = scheme.tiles_per_group
    groups = []
    for block_row in range(n_block_rows):
        for first in range(0, n_block_cols, size):
            cols = tuple(range(first, min(first + size, n_block_cols)))
            spares = scheme.spare_rows_per_group * len(cols) // size
            groups.append(TileGroup(block_row, cols, spares))
    logging.debug(
        "Scheme {0}: {1} groups over {2}×{3} tiles".format(
            scheme.scheme_id, len(groups), n_block_rows, n_block_cols
        )
    )
    return groups
