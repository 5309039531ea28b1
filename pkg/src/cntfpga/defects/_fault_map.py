# -*- coding: utf-8 -*-

"""Fault state of an array, independent of its configuration.

SPDX-FileCopyrightText: cntfpga developer group

SPDX-License-Identifier: MIT

"""

from collections import Counter

import numpy as np

from cntfpga.fabric import check_fault


class FaultMap:
    """Faults per LUT site and per carry-chain gate of one array.

    Keys are `(tile_row, tile_col, lut_index)` for LUTs and
    `(tile_row, tile_col, stage, gate)` for carry-chain gates. A tile is
    faulty if any of its LUTs or gates holds a fault.

    Examples
    --------
    >>> from cntfpga.fabric import ArrayGeometry, stuck_at
    >>> fault_map = FaultMap(ArrayGeometry(4, 4, lut_inputs=2))
    >>> fault_map.add_lut_fault(1, 2, 0, stuck_at(0))
    True
    >>> fault_map.add_lut_fault(1, 2, 0, stuck_at(1))
    False
    >>> fault_map.faulty_tiles()
    [(1, 2)]
    """

    def __init__(self, geometry):
        self.geometry = geometry
        self.lut_faults = {}
        self.carry_faults = {}

    def _check_key(self, row, col, index):
        g = self.geometry
        if not (
            0 <= row < g.n_rows
            and 0 <= col < g.n_cols
            and 0 <= index < g.luts_per_clb
        ):
            msg = "Fault site ({0}, {1}, {2}) lies outside {3}."
            raise IndexError(msg.format(row, col, index, g))

    def add_lut_fault(self, row, col, lut, fault, overwrite=False):
        """Store a LUT fault. The first fault of a site is kept unless
        `overwrite` is set. Returns True if the fault was stored."""
        self._check_key(row, col, lut)
        check_fault(fault, self.geometry.lut_inputs)
        key = (int(row), int(col), int(lut))
        if not fault.is_fault or (key in self.lut_faults and not overwrite):
            return False
        self.lut_faults[key] = fault
        return True

    def add_carry_fault(self, row, col, stage, gate, fault):
        self._check_key(row, col, stage)
        key = (int(row), int(col), int(stage), gate)
        if not fault.is_fault or key in self.carry_faults:
            return False
        self.carry_faults[key] = fault
        return True

    def __len__(self):
        return len(self.lut_faults) + len(self.carry_faults)

    @property
    def is_clean(self):
        return len(self) == 0

    def tile_flags(self):
        """Boolean (n_rows, n_cols) grid, True for faulty tiles."""
        flags = np.zeros(self.geometry.shape, dtype=bool)
        for key in list(self.lut_faults) + list(self.carry_faults):
            flags[key[0], key[1]] = True
        return flags

    def faulty_tiles(self):
        rows, cols = np.nonzero(self.tile_flags())
        return [(int(r), int(c)) for r, c in zip(rows, cols)]

    def counts_by_kind(self):
        counts = Counter(f.kind for f in self.lut_faults.values())
        counts.update(f.kind for f in self.carry_faults.values())
        return counts

    def apply_to(self, array):
        """Write the faults into an array of the same geometry."""
        if array.geometry != self.geometry:
            msg = "Fault map of {0} does not fit an array of {1}."
            raise ValueError(msg.format(self.geometry, array.geometry))
        array.clear_faults()
        for (row, col, lut), fault in self.lut_faults.items():
            array.set_lut_fault(row, col, lut, fault)
        for (row, col, stage, gate), fault in self.carry_faults.items():
            array.set_carry_fault(row, col, stage, gate, fault)
        return array

    @classmethod
    def from_array(cls, array):
        fault_map = cls(array.geometry)
        fault_map.lut_faults.update(array.lut_faults)
        fault_map.carry_faults.update(array.carry_faults)
        return fault_map

    def __repr__(self):
        return "FaultMap({0} faults on {1} tiles of {2})".format(
            len(self), len(self.faulty_tiles()), self.geometry
        )
