# -*- coding: utf-8 -*-

"""Geometry and state of the simulated island-style FPGA.

The array is a grid of tiles holding one CLB each. A CLB has
`luts_per_clb` k-input LUTs and a carry chain with one stage per LUT.
Configuration bits are held in one dense array, faults in sparse
dictionaries keyed by site.

SPDX-FileCopyrightText: cntfpga developer group

SPDX-License-Identifier: MIT

"""

import logging
import math
from typing import List
from typing import NamedTuple

import numpy as np

from cntfpga.fabric._carry_chain import CarryChainStage
from cntfpga.fabric._faults import NO_FAULT
from cntfpga.fabric._faults import check_fault
from cntfpga.fabric._lut import LutInstance

# Baseline CNT-based CLB footprint in transistors and area per transistor
# at the 7 nm node in μm².
CLB_AREA_T = 27698
T_AREA_UM2 = 2.2e-3


class ArrayGeometry:
    """Logical size and physical floorplan of an FPGA array.

    Parameters
    ----------
    n_rows, n_cols : int
        Number of tiles.
    luts_per_clb : int
        LUTs (and carry-chain stages) per CLB.
    lut_inputs : int
        Inputs k of every LUT, 2 <= k <= 8.
    clb_area : float
        CLB footprint in transistor units T.
    t_area : float
        Area of one transistor unit in μm².

    Examples
    --------
    >>> g = ArrayGeometry(49, 49)
    >>> g.n_luts
    9604
    >>> round(g.clb_pitch_x, 3)
    7.806
    """

    def __init__(
        self,
        n_rows,
        n_cols,
        luts_per_clb=4,
        lut_inputs=6,
        clb_area=CLB_AREA_T,
        t_area=T_AREA_UM2,
    ):
        self.n_rows = n_rows
        self.n_cols = n_cols
        self.luts_per_clb = luts_per_clb
        self.lut_inputs = lut_inputs
        self.clb_area = clb_area
        self.t_area = t_area

        self._check_grid()
        self._check_lut_inputs()
        self._check_area()

    def _check_grid(self):
        if self.n_rows < 1 or self.n_cols < 1 or self.luts_per_clb < 1:
            msg = (
                "The array needs at least one tile and one LUT per CLB, got "
                "{0}x{1} tiles with {2} LUTs per CLB."
            )
            raise ValueError(
                msg.format(self.n_rows, self.n_cols, self.luts_per_clb)
            )

    def _check_lut_inputs(self):
        if not 2 <= self.lut_inputs <= 8:
            msg = "LUT input count k must lie in [2, 8], got {0}."
            raise ValueError(msg.format(self.lut_inputs))

    def _check_area(self):
        if not (self.clb_area > 0 and self.t_area > 0):
            msg = (
                "CLB area and area per transistor must be positive, got "
                "{0} T and {1} μm²/T."
            )
            raise ValueError(msg.format(self.clb_area, self.t_area))

    @property
    def clb_pitch_x(self):
        return clb_pitch(self)

    @property
    def clb_pitch_y(self):
        return clb_pitch(self)

    @property
    def shape(self):
        return (self.n_rows, self.n_cols)

    @property
    def n_tiles(self):
        return self.n_rows * self.n_cols

    @property
    def n_luts(self):
        return self.n_tiles * self.luts_per_clb

    @property
    def width(self):
        return self.n_cols * self.clb_pitch_x

    @property
    def height(self):
        return self.n_rows * self.clb_pitch_y

    def as_dict(self):
        return {
            "rows": self.n_rows,
            "cols": self.n_cols,
            "luts_per_clb": self.luts_per_clb,
            "lut_inputs": self.lut_inputs,
            "clb_area_T": self.clb_area,
            "t_area_um2": self.t_area,
        }

    def __eq__(self, other):
        if not isinstance(other, ArrayGeometry):
            return NotImplemented
        return self.as_dict() == other.as_dict()

    def __repr__(self):
        return "ArrayGeometry({0}x{1}, luts_per_clb={2}, k={3})".format(
            self.n_rows, self.n_cols, self.luts_per_clb, self.lut_inputs
        )


def clb_pitch(geometry):
    """Side of the square CLB floorplan in μm: sqrt(clb_area * t_area).

    >>> clb_pitch(ArrayGeometry(1, 1, lut_inputs=2, clb_area=1, t_area=1))
    1.0
    """
    if not (geometry.clb_area > 0 and geometry.t_area > 0):
        raise ValueError("CLB area and area per transistor must be positive.")
    return math.sqrt(geometry.clb_area * geometry.t_area)


class Site(NamedTuple):
    """A fault site inside a CLB: component "lut", "mux" or "xor" and the
    LUT or carry-stage index."""

    component: str
    index: int


class Clb(NamedTuple):
    """Read-only view on one CLB of an array."""

    row: int
    col: int
    luts: List[LutInstance]
    carry: List[CarryChainStage]

    @property
    def k(self):
        return self.luts[0].k

    @property
    def faulty_sites(self):
        sites = []
        for i, lut in enumerate(self.luts):
            if lut.fault.is_fault:
                sites.append(Site("lut", i))
        for i, stage in enumerate(self.carry):
            if stage.mux_fault.is_fault:
                sites.append(Site("mux", i))
            if stage.xor_fault.is_fault:
                sites.append(Site("xor", i))
        return sites


class FpgaArray:
    """Tile grid with per-LUT configuration and fault state.

    Use :func:`build_array` to create one.
    """

    def __init__(self, geometry, rng_seed):
        self.geometry = geometry
        self.rng_seed = int(rng_seed)
        g = geometry
        self.config = np.zeros(
            (g.n_rows, g.n_cols, g.luts_per_clb, 2**g.lut_inputs),
            dtype=np.uint8,
        )
        self.lut_faults = {}
        self.carry_faults = {}

    @property
    def shape(self):
        return self.geometry.shape

    def _check_site(self, row, col, index):
        g = self.geometry
        if not (
            0 <= row < g.n_rows
            and 0 <= col < g.n_cols
            and 0 <= index < g.luts_per_clb
        ):
            msg = "Site ({0}, {1}, {2}) lies outside {3}."
            raise IndexError(msg.format(row, col, index, g))

    def set_lut_fault(self, row, col, lut, fault):
        self._check_site(row, col, lut)
        check_fault(fault, self.geometry.lut_inputs)
        if fault.is_fault:
            self.lut_faults[(row, col, lut)] = fault
        else:
            self.lut_faults.pop((row, col, lut), None)

    def set_carry_fault(self, row, col, stage, gate, fault):
        """Put a stuck-at fault on the "mux" or "xor" gate of a stage."""
        self._check_site(row, col, stage)
        if gate not in ("mux", "xor"):
            raise ValueError("gate is 'mux' or 'xor', got {0}.".format(gate))
        CarryChainStage(**{gate + "_fault": fault}).check()
        if fault.is_fault:
            self.carry_faults[(row, col, stage, gate)] = fault
        else:
            self.carry_faults.pop((row, col, stage, gate), None)

    def clear_faults(self):
        self.lut_faults.clear()
        self.carry_faults.clear()

    def clb(self, row, col):
        """The CLB at tile (row, col) with its LUTs and carry chain."""
        self._check_site(row, col, 0)
        n = self.geometry.luts_per_clb
        luts = [
            LutInstance(
                self.config[row, col, i],
                self.lut_faults.get((row, col, i), NO_FAULT),
            )
            for i in range(n)
        ]
        carry = [
            CarryChainStage(
                self.carry_faults.get((row, col, i, "mux"), NO_FAULT),
                self.carry_faults.get((row, col, i, "xor"), NO_FAULT),
                i,
            )
            for i in range(n)
        ]
        return Clb(row, col, luts, carry)

    @property
    def tiles(self):
        """The CLBs as a list of rows."""
        g = self.geometry
        return [
            [self.clb(r, c) for c in range(g.n_cols)] for r in range(g.n_rows)
        ]

    def tile_flags(self):
        """Boolean grid, True where a tile holds at least one fault."""
        flags = np.zeros(self.shape, dtype=bool)
        for key in list(self.lut_faults) + list(self.carry_faults):
            flags[key[0], key[1]] = True
        return flags

    def same_state(self, other):
        return (
            self.geometry == other.geometry
            and self.rng_seed == other.rng_seed
            and np.array_equal(self.config, other.config)
            and self.lut_faults == other.lut_faults
            and self.carry_faults == other.carry_faults
        )


def build_array(geometry, seed):
    """Fault-free array with all configuration bits zero.

    Examples
    --------
    >>> array = build_array(ArrayGeometry(2, 3, lut_inputs=2), seed=1)
    >>> array.config.shape
    (2, 3, 4, 4)
    >>> array.clb(1, 2).faulty_sites
    []
    """
    logging.debug("Building {0} with seed {1}".format(geometry, seed))
    return FpgaArray(geometry, seed)
