# -*- coding: utf-8 -*-

"""Mapping of m-CNT geometry to LUT fault models.

Each CLB footprint is cut into `luts_per_clb` horizontal bands, one per LUT.
The fraction of a band's height an m-CNT covers selects the fault:

* the whole band: the decoder always selects SRAM-0 (MuxAlwaysSelect(0)),
* more than a tenth: two neighbouring SRAM cells are shorted (WiredAnd or
  WiredOr, seeded coin), the pair taken from where the m-CNT enters,
* up to a tenth: a single SRAM cell is hit, stuck-at-0 on even and
  stuck-at-1 on odd tile rows.

Removed m-CNTs that opened the circuit put an Open fault on every band
they cross.

SPDX-FileCopyrightText: cntfpga developer group

SPDX-License-Identifier: MIT

"""

import logging

from cntfpga._helpers import warn_suspicious
from cntfpga._plumbing import derive_seed
from cntfpga._plumbing import make_rng
from cntfpga.defects._fault_map import FaultMap
from cntfpga.defects._raster import tiles_crossed
from cntfpga.fabric import mux_always_select
from cntfpga.fabric import open_fault
from cntfpga.fabric import stuck_at
from cntfpga.fabric import wired_and
from cntfpga.fabric import wired_or

GRAZE_FRACTION = 0.1
MAPPING_STREAM = 1

# Tolerance for a band counted as fully crossed.
_FULL = 1.0 - 1e-9


def band_fault(fraction, entry, tile_row, k, coin):
    """Fault of one LUT band crossed over `fraction` of its height.

    `entry` is where the crossing starts inside the band (0 top, 1 bottom)
    and `coin` a uniform draw picking WiredAnd below 0.5.

    Examples
    --------
    >>> print(band_fault(1.0, 0.0, 0, 6, 0.3))
    mux_always_select(0)
    >>> band_fault(0.05, 0.2, 3, 6, 0.3).kind.value
    'stuck_at_1'
    >>> band_fault(0.5, 0.5, 0, 3, 0.7).pair
    (4, 5)
    """
    if fraction >= _FULL:
        return mux_always_select(0)
    if fraction > GRAZE_FRACTION:
        half = 2 ** (k - 1)
        a = 2 * min(int(entry * half), half - 1)
        return wired_and(a, a + 1) if coin < 0.5 else wired_or(a, a + 1)
    return stuck_at(tile_row % 2)


def map_defects_to_faults(defects, array):
    """Fault map of the m-CNTs surviving removal on an array.

    Parameters
    ----------
    defects : list of MCntDefect
    array : FpgaArray
        Supplies the geometry and the seed of the WiredAnd/WiredOr coins.

    Returns
    -------
    FaultMap
    """
    g = array.geometry
    pitch = g.clb_pitch_y
    band = pitch / g.luts_per_clb
    rng = make_rng(derive_seed(array.rng_seed, MAPPING_STREAM))
    fault_map = FaultMap(g)
    active = inside = 0
    for defect in defects:
        if defect.removed and not defect.opened:
            continue
        active += 1
        (x0, y0), (x1, y1) = defect.start, defect.end
        crossings = tiles_crossed(x0, y0, x1, y1, pitch, g.n_rows, g.n_cols)
        inside += bool(crossings)
        for crossing in crossings:
            top = crossing.row * pitch
            for lut in range(g.luts_per_clb):
                band_lo = top + lut * band
                overlap = min(crossing.y_hi, band_lo + band) - max(
                    crossing.y_lo, band_lo
                )
                if overlap <= 0:
                    continue
                if defect.opened:
                    fault = open_fault()
                else:
                    entry = (max(crossing.y_lo, band_lo) - band_lo) / band
                    fraction = overlap / band
                    coin = rng.random() if fraction > GRAZE_FRACTION else 1.0
                    fault = band_fault(
                        fraction, entry, crossing.row, g.lut_inputs, coin
                    )
                fault_map.add_lut_fault(crossing.row, crossing.col, lut, fault)
    if active and not inside:
        warn_suspicious(
            "None of the {0} active m-CNT defects crosses the floorplan of "
            "{1}; the fault map is clean.",
            active,
            g,
        )
    kinds = ", ".join(
        "{0}: {1}".format(kind.value, n)
        for kind, n in sorted(
            fault_map.counts_by_kind().items(), key=lambda kv: kv[0].value
        )
    )
    logging.debug(
        "Mapped {0} defects to {1} faults on {2} tiles ({3})".format(
            len(defects),
            len(fault_map),
            len(fault_map.faulty_tiles()),
            kinds or "none",
        )
    )
    return fault_map
