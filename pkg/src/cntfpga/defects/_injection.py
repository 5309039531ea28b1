# -*- coding: utf-8 -*-

"""Direct fault injection at LUT level.

SPDX-FileCopyrightText: cntfpga developer group

SPDX-License-Identifier: MIT

"""

import logging
from enum import Enum

import numpy as np

from cntfpga._plumbing import make_rng
from cntfpga.defects._fault_map import FaultMap
from cntfpga.fabric import FaultType
from cntfpga.fabric import mux_override
from cntfpga.fabric import stuck_at

INJECTABLE_TYPES = (
    FaultType.STUCK_AT_0,
    FaultType.STUCK_AT_1,
    FaultType.MUX_OVERRIDE,
)


class InjectionPattern(Enum):
    RANDOM = "random"
    CLUSTERED = "clustered"
    ALIGNED = "aligned"


class OversubscriptionError(ValueError):
    """Raised when more faults are requested than there are LUT sites."""

    pass


def _normalize_counts(counts):
    normalized = {}
    for kind, count in counts.items():
        kind = FaultType(kind) if not isinstance(kind, FaultType) else kind
        if kind not in INJECTABLE_TYPES:
            msg = "Cannot inject {0}; choose from {1}."
            raise ValueError(
                msg.format(kind.value, [t.value for t in INJECTABLE_TYPES])
            )
        if count < 0:
            msg = "Fault count for {0} must not be negative, got {1}."
            raise ValueError(msg.format(kind.value, count))
        normalized[kind] = int(count)
    return normalized


def _ring(center, radius, shape):
    """Tiles at Chebyshev distance `radius` from `center`, row-major."""
    r0, c0 = center
    n_rows, n_cols = shape
    tiles = []
    for r in range(r0 - radius, r0 + radius + 1):
        if not 0 <= r < n_rows:
            continue
        for c in range(c0 - radius, c0 + radius + 1):
            if not 0 <= c < n_cols:
                continue
            if max(abs(r - r0), abs(c - c0)) == radius:
                tiles.append((r, c))
    return tiles


def _clustered_sites(geometry, total, clusters, rng):
    n_clusters = max(1, min(int(clusters), geometry.n_tiles))
    flat_centers = rng.choice(geometry.n_tiles, n_clusters, replace=False)
    centers = [divmod(int(i), geometry.n_cols) for i in flat_centers]
    quotas = [
        total // n_clusters + (1 if i < total % n_clusters else 0)
        for i in range(n_clusters)
    ]
    max_radius = max(geometry.n_rows, geometry.n_cols)
    used = set()
    sites = []
    for center, quota in zip(centers, quotas):
        radius = 0
        while quota > 0 and radius <= max_radius:
            for row, col in _ring(center, radius, geometry.shape):
                for lut in range(geometry.luts_per_clb):
                    if quota == 0:
                        break
                    if (row, col, lut) not in used:
                        used.add((row, col, lut))
                        sites.append((row, col, lut))
                        quota -= 1
            radius += 1
    return sites


def _random_sites(geometry, total, rng):
    flat = rng.choice(geometry.n_luts, total, replace=False)
    rows, cols, luts = np.unravel_index(
        flat, (geometry.n_rows, geometry.n_cols, geometry.luts_per_clb)
    )
    return [
        (int(r), int(c), int(lut)) for r, c, lut in zip(rows, cols, luts)
    ]


def _aligned_sites(geometry, total, run_lengths, scatter, rng):
    # Scattered share first, then runs down a tile column along the CNTs.
    shortest, longest = run_lengths
    n_scattered = int(round(total * scatter))
    sites = _random_sites(geometry, n_scattered, rng)
    used = set(sites)
    while len(sites) < total:
        row = int(rng.integers(geometry.n_rows))
        col = int(rng.integers(geometry.n_cols))
        length = int(rng.integers(shortest, longest + 1))
        for r in range(row, min(row + length, geometry.n_rows)):
            for lut in range(geometry.luts_per_clb):
                if len(sites) == total:
                    break
                if (r, col, lut) not in used:
                    used.add((r, col, lut))
                    sites.append((r, col, lut))
    return sites


def _check_aligned(run_lengths, scatter):
    shortest, longest = run_lengths
    if not 1 <= shortest <= longest:
        msg = "Run lengths must satisfy 1 <= shortest <= longest, got {0}."
        raise ValueError(msg.format(tuple(run_lengths)))
    if not 0 <= scatter <= 1:
        msg = "The scattered share must lie in [0, 1], got {0}."
        raise ValueError(msg.format(scatter))


def inject_faults(
    array, pattern, counts, seed, clusters=1, run_lengths=(4, 12), scatter=0.2
):
    """Inject stuck-at and MUX override faults into LUT sites.

    Parameters
    ----------
    array : FpgaArray or ArrayGeometry
    pattern : InjectionPattern or str
        "random": sites drawn uniformly without replacement.
        "clustered": each of `clusters` centers fills a square neighbourhood
        ring by ring until its share of the faults is placed.
        "aligned": a `scatter` share of the faults on random sites, the rest
        filling every LUT of runs of tiles down a column, the direction the
        CNTs grow in.
    counts : dict
        Number of faults per FaultType (or its value string), from
        stuck-at-0, stuck-at-1 and MUX override.
    seed : int
    clusters : int
        Number of cluster centers of the clustered pattern.
    run_lengths : tuple of int
        Shortest and longest run, in tiles, of the aligned pattern.
    scatter : float
        Share of the aligned pattern placed on random sites.

    Returns
    -------
    FaultMap

    Examples
    --------
    >>> from cntfpga.fabric import ArrayGeometry
    >>> geometry = ArrayGeometry(8, 8, lut_inputs=4)
    >>> fault_map = inject_faults(
    ...     geometry, "random", {"stuck_at_0": 5, "mux_override": 3}, seed=2
    ... )
    >>> len(fault_map)
    8
    """
    geometry = getattr(array, "geometry", array)
    pattern = InjectionPattern(pattern)
    counts = _normalize_counts(counts)
    if pattern is InjectionPattern.ALIGNED:
        _check_aligned(run_lengths, scatter)
    total = sum(counts.values())
    if total > geometry.n_luts:
        msg = "Cannot inject {0} faults into {1} LUT sites of {2}."
        raise OversubscriptionError(
            msg.format(total, geometry.n_luts, geometry)
        )

    fault_map = FaultMap(geometry)
    if total == 0:
        return fault_map

    rng = make_rng(seed)
    kinds = []
    for kind in INJECTABLE_TYPES:
        kinds.extend([kind] * counts.get(kind, 0))
    kinds = [kinds[i] for i in rng.permutation(len(kinds))]

    if pattern is InjectionPattern.RANDOM:
        sites = _random_sites(geometry, total, rng)
    elif pattern is InjectionPattern.ALIGNED:
        sites = _aligned_sites(geometry, total, run_lengths, scatter, rng)
    else:
        sites = _clustered_sites(geometry, total, clusters, rng)

    size = 2**geometry.lut_inputs
    for (row, col, lut), kind in zip(sites, kinds):
        if kind is FaultType.MUX_OVERRIDE:
            fault = mux_override(rng.integers(size))
        else:
            fault = stuck_at(1 if kind is FaultType.STUCK_AT_1 else 0)
        fault_map.add_lut_fault(row, col, lut, fault)
    logging.info(
        "Injected {0} faults ({1}) on {2} tiles".format(
            total, pattern.value, len(fault_map.faulty_tiles())
        )
    )
    return fault_map
