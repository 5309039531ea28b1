# -*- coding: utf-8 -*-

"""Row procedures that locate faulty tile segments along a scan line.

A scan line is a tile column by default, the direction in which aligned
CNTs run; `axis="row"` scans tile rows instead. Tiles left out by a usage
mask are skipped, so positions count the used tiles of a line only.

SPDX-FileCopyrightText: cntfpga developer group

SPDX-License-Identifier: MIT

"""

from enum import Enum
from typing import NamedTuple

import numpy as np

from cntfpga._helpers import warn_experimental


class TestMethod(Enum):
    __test__ = False

    RECURSIVE = "recursive"
    FIXED_STEP = "fixed_step"
    SINGLE_STEP = "single_step"


class ProbeOracle:
    """PASS/FAIL responses of the tiles of an array.

    Parameters
    ----------
    tile_flags : array-like of bool, shape (n_rows, n_cols)
        True for a faulty tile.
    axis : str
        "column" scans every tile column from row 0 down, "row" every tile
        row from column 0.
    mask : array-like of bool, optional
        Tiles in use; unused tiles are neither probed nor reported.

    Examples
    --------
    >>> oracle = ProbeOracle([[0, 1], [1, 1]])
    >>> oracle.probe(0, 1), oracle.probe(1, 0), oracle.probes
    (True, True, 2)
    """

    def __init__(self, tile_flags, axis="column", mask=None):
        flags = np.asarray(tile_flags, dtype=bool)
        if flags.ndim != 2:
            raise ValueError("Tile flags must be a 2-D grid.")
        if mask is None:
            mask = np.ones(flags.shape, dtype=bool)
        mask = np.asarray(mask, dtype=bool)
        if mask.shape != flags.shape:
            msg = "Mask of shape {0} does not match the array {1}."
            raise ValueError(msg.format(mask.shape, flags.shape))
        if axis == "column":
            flags, mask = flags.T, mask.T
        elif axis != "row":
            msg = "axis is 'column' or 'row', got {0!r}."
            raise ValueError(msg.format(axis))
        self.axis = axis
        self._lines = [
            (np.flatnonzero(used), line[used])
            for line, used in zip(flags, mask)
        ]
        self.probes = 0
        self.trace = []

    @property
    def n_lines(self):
        return len(self._lines)

    def length(self, line):
        """Used tiles on a scan line."""
        return len(self._lines[line][0])

    def tile_of(self, line, position):
        """(row, col) of a position on a scan line."""
        index = int(self._lines[line][0][position])
        return (index, line) if self.axis == "column" else (line, index)

    def probe(self, line, position):
        """True if the tile fails. Every call counts as one probe."""
        self.probes += 1
        self.trace.append((line, position))
        return bool(self._lines[line][1][position])


def halve_step(step):
    """Next recursive step: 3 and 5 are raised by one before halving.

    >>> [halve_step(s) for s in (8, 6, 5, 3, 2, 1)]
    [4, 3, 3, 2, 1, 1]
    """
    if step in (3, 5):
        return (step + 1) // 2
    return max(1, step // 2)


def recursive_steps(initial_step):
    """Jump steps a recursion walks through.

    >>> recursive_steps(8)
    [8, 4, 2, 1]
    >>> recursive_steps(12)
    [12, 6, 3, 2, 1]
    """
    steps = [initial_step]
    while steps[-1] > 1:
        steps.append(halve_step(steps[-1]))
    return steps


def _check_step(step, even=False):
    if step < 1:
        raise ValueError("Jump step must be at least 1, got {0}.".format(step))
    if even and step > 1 and step % 2:
        msg = "Initial jump step must be even, got {0}."
        raise ValueError(msg.format(step))


class _Bracket(NamedTuple):
    lo: int
    r_lo: bool
    hi: int


def _locate(oracle, line, bracket, step, strict_key):
    # Walks back from hi through the whole halving schedule down to step 1.
    # Probes stay inside [lo, hi]; the first position whose response
    # differs from the one at lo is hi once the schedule is spent.
    lo, r_lo, hi = bracket
    position, response = hi, not r_lo
    direction, key = -1, 1
    while step > 1:
        step = halve_step(step)
        nxt = min(max(position + direction * step, lo), hi)
        r_nxt = oracle.probe(line, nxt)
        changed = int(r_nxt != response)
        if strict_key:
            key = changed & key
            changed = key
        if changed:
            direction = -direction
        if r_nxt == r_lo:
            lo = max(lo, nxt)
        else:
            hi = min(hi, nxt)
        position, response = nxt, r_nxt
    return hi


def recursive_jump_row(oracle, line, initial_step, strict_key=False):
    """Locate the faulty segments of a scan line by recursive jumping.

    The initial phase probes positions 0, s, 2s, ... (the last one clamped
    to the end of the line). When two consecutive responses differ the
    recursive phase walks back from the later probe through every halved
    step down to 1, reversing whenever the last two responses differ; the
    boundary is the first tile after the last probe that matched the earlier
    response. The initial phase then resumes from the boundary.

    Parameters
    ----------
    oracle : ProbeOracle
    line : int
    initial_step : int
        Even, or 1.
    strict_key : bool
        Latch the reversal flag as `key = changed and key`; once two equal
        responses follow each other the walk never reverses again.

    Returns
    -------
    list of tuple
        (start, end) positions of the faulty segments, both inclusive.

    Examples
    --------
    >>> flags = np.zeros((1, 16), dtype=bool)
    >>> flags[0, 5:10] = True
    >>> oracle = ProbeOracle(flags, axis="row")
    >>> recursive_jump_row(oracle, 0, 4)
    [(5, 9)]
    >>> [p for _, p in oracle.trace]
    [0, 4, 8, 6, 5, 9, 13, 11, 10, 14, 15]
    """
    _check_step(initial_step, even=True)
    if strict_key:
        warn_experimental(
            "The latched reversal flag cannot locate the far end of most "
            "segments; use it for comparison only."
        )
    n = oracle.length(line)
    if n == 0:
        return []
    segments = []
    position = 0
    response = oracle.probe(line, 0)
    start = 0 if response else None
    while position < n - 1:
        nxt = min(position + initial_step, n - 1)
        r_nxt = oracle.probe(line, nxt)
        if r_nxt != response:
            boundary = _locate(
                oracle,
                line,
                _Bracket(position, response, nxt),
                initial_step,
                strict_key,
            )
            if r_nxt:
                start = boundary
            else:
                segments.append((start, boundary - 1))
                start = None
            nxt = boundary
        position, response = nxt, r_nxt
    if start is not None:
        segments.append((start, n - 1))
    return segments


def fixed_step_row(oracle, line, step):
    """Probe positions 0, s, 2s, ... only.

    A run of consecutive failing probes is reported as one segment from the
    first to the last failing probe; segments between probes are missed.

    >>> flags = np.zeros((1, 16), dtype=bool)
    >>> flags[0, 5:7] = True
    >>> oracle = ProbeOracle(flags, axis="row")
    >>> fixed_step_row(oracle, 0, 4), oracle.probes
    ([], 4)
    """
    _check_step(step)
    segments = []
    start = last = None
    for position in range(0, oracle.length(line), step):
        if oracle.probe(line, position):
            if start is None:
                start = position
            last = position
        elif start is not None:
            segments.append((start, last))
            start = None
    if start is not None:
        segments.append((start, last))
    return segments


def single_step_row(oracle, line):
    """Probe every position; the segments are exact."""
    return fixed_step_row(oracle, line, 1)
