# -*- coding: utf-8 -*-

"""Array-level test runs and their coverage and overhead.

SPDX-FileCopyrightText: cntfpga developer group

SPDX-License-Identifier: MIT

"""

import logging
from typing import Dict
from typing import FrozenSet
from typing import List
from typing import NamedTuple
from typing import Tuple

import numpy as np
import pandas as pd

from cntfpga._helpers import warn_suspicious
from cntfpga.array_test._probing import ProbeOracle
from cntfpga.array_test._probing import TestMethod
from cntfpga.array_test._probing import fixed_step_row
from cntfpga.array_test._probing import recursive_jump_row
from cntfpga.array_test._probing import single_step_row
from cntfpga.clb_test import fault_detected
from cntfpga.fabric import FaultType

KIND_LABELS = {
    FaultType.MUX_OVERRIDE: "MUX",
    FaultType.STUCK_AT_0: "S@0",
    FaultType.STUCK_AT_1: "S@1",
}


class TestReport(NamedTuple):
    __test__ = False

    method: TestMethod
    step: int
    coverage: float
    overhead: float
    probes: int
    segments: Dict[int, List[Tuple[int, int]]]
    identified: FrozenSet[Tuple[int, int]]

    @property
    def n_segments(self):
        return sum(len(s) for s in self.segments.values())

    def as_row(self):
        return {
            "method": self.method.value,
            "step": self.step,
            "coverage": self.coverage,
            "overhead": self.overhead,
            "probes": self.probes,
            "segments": self.n_segments,
        }


def _tile_flags(fault_map):
    if hasattr(fault_map, "tile_flags"):
        return fault_map.tile_flags()
    return np.asarray(fault_map, dtype=bool)


def _scan_line(oracle, line, method, step, strict_key):
    if method is TestMethod.RECURSIVE:
        return recursive_jump_row(oracle, line, step, strict_key)
    if method is TestMethod.FIXED_STEP:
        return fixed_step_row(oracle, line, step)
    return single_step_row(oracle, line)


def run_array_test(
    fault_map,
    method,
    initial_step=4,
    mask=None,
    axis="column",
    strict_key=False,
):
    """Scan every line of an array with one row procedure.

    Parameters
    ----------
    fault_map : FaultMap, FpgaArray or array-like of bool
        Source of the tile PASS/FAIL responses.
    method : TestMethod or str
    initial_step : int
        Jump step of the recursive and fixed-step procedures.
    mask : array-like of bool, optional
        Used tiles; the others are neither probed nor counted.
    axis : str
        Scan direction, see :class:`ProbeOracle`.

    Returns
    -------
    TestReport
        Coverage is the share of faulty used tiles lying in a located
        segment, 1.0 if there are none. Overhead is the number of probes
        over the number of used tiles, which a single-step test probes.

    Examples
    --------
    >>> flags = np.zeros((16, 2), dtype=bool)
    >>> flags[5:10, 1] = True
    >>> r = run_array_test(flags, "recursive", 4)
    >>> r.coverage, r.probes, r.segments[1]
    (1.0, 16, [(5, 9)])
    >>> run_array_test(flags, "single_step").overhead
    1.0
    """
    method = TestMethod(method)
    flags = _tile_flags(fault_map)
    if mask is None:
        mask = np.ones(flags.shape, dtype=bool)
    mask = np.asarray(mask, dtype=bool)
    oracle = ProbeOracle(flags, axis, mask)
    used = int(mask.sum())
    if used == 0:
        warn_suspicious("The usage mask excludes every tile of the array.")

    segments = {}
    identified = set()
    for line in range(oracle.n_lines):
        found = _scan_line(oracle, line, method, initial_step, strict_key)
        if not found:
            continue
        segments[line] = found
        for start, end in found:
            identified.update(
                oracle.tile_of(line, p) for p in range(start, end + 1)
            )

    truly = {tuple(int(i) for i in t) for t in np.argwhere(flags & mask)}
    coverage = len(identified & truly) / len(truly) if truly else 1.0
    overhead = oracle.probes / used if used else 0.0
    step = 1 if method is TestMethod.SINGLE_STEP else initial_step
    logging.debug(
        "{0} test, step {1}: coverage {2:.4f}, overhead {3:.4f}".format(
            method.value, step, coverage, overhead
        )
    )
    return TestReport(
        method,
        step,
        coverage,
        overhead,
        oracle.probes,
        segments,
        frozenset(identified & truly),
    )


def evaluate_fault_injection(
    fault_map,
    methods=("single_step", "recursive", "fixed_step"),
    initial_step=4,
    style="traditional",
    axis="column",
):
    """Detected injected faults per kind and method.

    A tile is tested if a row procedure places it in a faulty segment; a
    fault in a tested tile counts as detected if the CLB test session of
    `style` observes it.

    Returns
    -------
    pandas.DataFrame
        Rows MUX, S@0, S@1 and Total; an "injected" column and one column
        of detected faults per method.
    """
    g = fault_map.geometry
    kinds = [f.kind for f in fault_map.lut_faults.values()]
    injected = {
        label: kinds.count(kind) for kind, label in KIND_LABELS.items()
    }
    table = {"injected": injected}
    for method in methods:
        method = TestMethod(method)
        report = run_array_test(fault_map, method, initial_step, axis=axis)
        detected = {label: 0 for label in injected}
        for (row, col, lut), fault in fault_map.lut_faults.items():
            if (row, col) not in report.identified:
                continue
            if fault.kind in KIND_LABELS and fault_detected(
                fault, g.lut_inputs, style, "lut", lut, g.luts_per_clb
            ):
                detected[KIND_LABELS[fault.kind]] += 1
        table[method.value] = detected
    df = pd.DataFrame(table)
    df.loc["Total"] = df.sum()
    logging.info(
        "Fault injection: {0} faults, detected {1}".format(
            int(df.loc["Total", "injected"]),
            df.loc["Total"].drop("injected").to_dict(),
        )
    )
    return df
