# -*- coding: utf-8 -*-

"""Assignment of faulty tile rows to shared spare rows.

SPDX-FileCopyrightText: cntfpga developer group

SPDX-License-Identifier: MIT

"""

import logging
from typing import Dict
from typing import List
from typing import NamedTuple
from typing import Tuple

import networkx as nx
import numpy as np
import pandas as pd

from cntfpga.redundancy._schemes import get_scheme
from cntfpga.redundancy._schemes import group_tiles
from cntfpga.redundancy._schemes import scheme_overhead


class FaultyRow(NamedTuple):
    """Row `row` (0..7) of the tile at position `tile` inside its group;
    with span 2 the row continues into the next tile of the group."""

    tile: int
    row: int
    span: int = 1


class FaultySegmentSet(NamedTuple):
    scheme: object
    groups: list
    rows: List[List[FaultyRow]]

    @property
    def total(self):
        return sum(len(r) for r in self.rows)


class RepairPlan(NamedTuple):
    assignments: Dict[Tuple[int, FaultyRow], Tuple[int, int]]
    unrepaired: List[Tuple[int, FaultyRow]]
    repaired_fraction: float

    @property
    def repaired(self):
        return len(self.assignments)


def _rows_of_tile(flags, top, left, height, width):
    block = flags[top : top + height, left : left + width]
    return block.any(axis=1)


def extract_faulty_rows(fault_map, scheme, groups=None):
    """Faulty rows per tile group.

    A tile row with at least one faulty CLB is a faulty row. If its last
    CLB and the first CLB of the same row in the next tile of the group are
    both faulty, the two rows merge into one entry of span 2. Merging pairs
    tiles from the left; a row merged with its left neighbour is not merged
    again.

    Examples
    --------
    >>> from cntfpga.defects import FaultMap
    >>> from cntfpga.fabric import ArrayGeometry, stuck_at
    >>> fault_map = FaultMap(ArrayGeometry(8, 16, lut_inputs=2))
    >>> _ = fault_map.add_lut_fault(3, 7, 0, stuck_at(0))
    >>> _ = fault_map.add_lut_fault(3, 8, 0, stuck_at(0))
    >>> extract_faulty_rows(fault_map, 1).rows
    [[FaultyRow(tile=0, row=3, span=2)]]
    """
    scheme = get_scheme(scheme)
    if groups is None:
        groups = group_tiles(fault_map.geometry, scheme)
    flags = np.asarray(fault_map.tile_flags(), dtype=bool)
    height, width = scheme.tile_size
    rows = []
    for group in groups:
        top = group.block_row * height
        faulty = [
            _rows_of_tile(flags, top, col * width, height, width)
            for col in group.block_cols
        ]
        merged = [np.zeros(height, dtype=bool) for _ in group.block_cols]
        entries = []
        for i, col in enumerate(group.block_cols):
            for r in np.flatnonzero(faulty[i]):
                if merged[i][r]:
                    continue
                span = 1
                if i + 1 < len(group.block_cols):
                    edge = (col + 1) * width
                    if flags[top + r, edge - 1] and flags[top + r, edge]:
                        span = 2
                        merged[i + 1][r] = True
                entries.append(FaultyRow(i, int(r), span))
        rows.append(entries)
    return FaultySegmentSet(scheme, groups, rows)


def assign_repairs(segments, scheme=None):
    """Match faulty rows to spare rows group by group.

    Any spare row of a group can replace any faulty row of the group, a
    span-2 row included. The matching is a maximum cardinality matching of
    the bipartite graph of faulty rows and spares.

    Returns
    -------
    RepairPlan
        Assignments map (group index, faulty row) to (group index, spare
        index). The repaired fraction is 1.0 if nothing needs repair.
    """
    if scheme is not None and get_scheme(scheme) != segments.scheme:
        msg = "Segments were extracted for {0}, not for {1}."
        raise ValueError(msg.format(segments.scheme, get_scheme(scheme)))
    assignments = {}
    unrepaired = []
    pairs = zip(segments.groups, segments.rows)
    for g, (group, entries) in enumerate(pairs):
        if not entries:
            continue
        faulty = [("row", g, e) for e in entries]
        spares = [("spare", g, s) for s in range(group.spares)]
        graph = nx.Graph()
        graph.add_nodes_from(faulty, bipartite=0)
        graph.add_nodes_from(spares, bipartite=1)
        graph.add_edges_from((f, s) for f in faulty for s in spares)
        matching = nx.bipartite.hopcroft_karp_matching(graph, faulty)
        for node in faulty:
            if node in matching:
                assignments[(g, node[2])] = matching[node][1:]
            else:
                unrepaired.append((g, node[2]))
    total = len(assignments) + len(unrepaired)
    fraction = len(assignments) / total if total else 1.0
    return RepairPlan(assignments, unrepaired, fraction)


def repair_record(fault_map, scheme, sample=0):
    """One line of the repair report for a fault map and a scheme."""
    scheme = get_scheme(scheme)
    segments = extract_faulty_rows(fault_map, scheme)
    plan = assign_repairs(segments)
    per_tile, pct = scheme_overhead(scheme)
    return {
        "scheme": scheme.scheme_id,
        "sample": sample,
        "faulty_rows": segments.total,
        "repaired": plan.repaired,
        "repair_rate": plan.repaired_fraction,
        "rows_per_tile": per_tile,
        "normalized_overhead_pct": pct,
    }


def repair_records(mc_samples, schemes=range(8)):
    """Repair report lines for every sample and scheme."""
    return pd.DataFrame(
        [
            repair_record(fault_map, scheme, i)
            for i, fault_map in enumerate(mc_samples)
            for scheme in schemes
        ]
    )


def evaluate_schemes(mc_samples, schemes=range(8)):
    """Repair rate of every scheme averaged over fault-map samples.

    Parameters
    ----------
    mc_samples : list of FaultMap
    schemes : iterable of int or SharingScheme

    Returns
    -------
    pandas.DataFrame
        scheme, repair_rate, rows_per_tile, normalized_overhead_pct.
    """
    if len(mc_samples) == 0:
        raise ValueError("Scheme evaluation needs at least one sample.")
    return summarize_repairs(repair_records(mc_samples, schemes))


def summarize_repairs(records):
    """Average per-sample repair records over the samples per scheme."""
    df = (
        records.groupby("scheme")
        .agg(
            repair_rate=("repair_rate", "mean"),
            rows_per_tile=("rows_per_tile", "first"),
            normalized_overhead_pct=("normalized_overhead_pct", "first"),
        )
        .reset_index()
    )
    for row in df.itertuples():
        logging.info(
            "Scheme {0}: repair rate {1:.2%}, overhead {2:.1f} %".format(
                row.scheme, row.repair_rate, row.normalized_overhead_pct
            )
        )
    return df
