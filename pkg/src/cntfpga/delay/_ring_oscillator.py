# -*- coding: utf-8 -*-

"""Ring oscillators mapped onto the LUTs of an array.

Each oscillator chains `stage_count` LUTs, every one configured as an XNOR
of its inputs so that, with the side inputs I1.. held stable, it inverts
I0. An odd stage count closes an oscillating loop whose half period is the
sum of the LUT and interconnect delays.

SPDX-FileCopyrightText: cntfpga developer group

SPDX-License-Identifier: MIT

"""

import logging
from typing import NamedTuple
from typing import Tuple

import numpy as np

from cntfpga._plumbing import derive_seed
from cntfpga._plumbing import make_rng
from cntfpga.delay._mwcnt import NOMINAL_D_MAX
from cntfpga.delay._mwcnt import NOMINAL_P_METAL
from cntfpga.delay._mwcnt import NOMINAL_SIGMA_D
from cntfpga.delay._mwcnt import draw_mwcnt
from cntfpga.delay._mwcnt import segment_delay
from cntfpga.helpers import parity

RO_STREAM = 2
TRIALS = 3


class RoCell(NamedTuple):
    ro_id: int
    stage_count: int
    lut_refs: Tuple[Tuple[int, int, int], ...]
    interconnect_specs: tuple
    hop_length: float

    def check(self):
        if self.stage_count % 2 == 0:
            msg = "A ring oscillator needs an odd stage count, got {0}."
            raise ValueError(msg.format(self.stage_count))
        if not (
            len(self.lut_refs)
            == len(self.interconnect_specs)
            == self.stage_count
        ):
            raise ValueError(
                "A closed ring needs one LUT and one hop per stage."
            )
        return self


class RoMeasurement(NamedTuple):
    ro_id: int
    loop_delay: float
    trials: Tuple[float, ...]
    flagged: bool = False
    high_resistance: bool = False

    @property
    def period(self):
        return 2.0 * self.loop_delay


def xnor_config(k, side=0):
    """Configuration bits that invert I0 while the side inputs I1..I(k-1)
    hold the value `side`.

    Bit b is NOT(I0 XOR parity(side bits of b XOR `side`)); with side = 0
    this is the XNOR of all k inputs.

    Examples
    --------
    >>> xnor_config(2).tolist()
    [1, 0, 0, 1]
    """
    bits = np.arange(2**k)
    return np.array(
        [1 - ((b & 1) ^ parity((b >> 1) ^ side)) for b in bits],
        dtype=np.uint8,
    )


def build_ro_partition(
    array,
    stage_count=7,
    seed=None,
    mu_d=NOMINAL_D_MAX,
    sigma_d=NOMINAL_SIGMA_D,
    p_metal=NOMINAL_P_METAL,
    hop_length=None,
):
    """Partition the LUT sites of an array into closed ring oscillators.

    Sites are taken in row-major order (tile row, tile column, LUT) in
    consecutive groups of `stage_count`; leftover sites stay unused. Every
    used LUT is configured with :func:`xnor_config`. Each hop gets its own
    MWCNT drawn from `seed` (default: the array seed).

    Examples
    --------
    >>> from cntfpga.fabric import ArrayGeometry, build_array
    >>> array = build_array(ArrayGeometry(49, 49), seed=1)
    >>> len(build_ro_partition(array))
    1372
    """
    g = array.geometry
    n_ro = g.n_luts // stage_count
    if n_ro == 0:
        msg = "{0} has {1} LUT sites, a ring oscillator needs {2}."
        raise ValueError(msg.format(g, g.n_luts, stage_count))
    hop_length = g.clb_pitch_x if hop_length is None else hop_length
    seed = array.rng_seed if seed is None else seed
    rng = make_rng(derive_seed(seed, RO_STREAM))

    used = n_ro * stage_count
    flat = array.config.reshape(-1, 2**g.lut_inputs)
    flat[:used] = xnor_config(g.lut_inputs)
    rows, cols, luts = np.unravel_index(
        np.arange(used), (g.n_rows, g.n_cols, g.luts_per_clb)
    )
    refs = list(zip(rows.tolist(), cols.tolist(), luts.tolist()))

    cells = []
    for ro_id in range(n_ro):
        specs = tuple(
            draw_mwcnt(rng, mu_d, sigma_d, p_metal) for _ in range(stage_count)
        )
        lut_refs = tuple(refs[ro_id * stage_count : (ro_id + 1) * stage_count])
        cells.append(
            RoCell(ro_id, stage_count, lut_refs, specs, hop_length).check()
        )
    logging.debug(
        "Mapped {0} ring oscillators, {1} sites unused".format(
            n_ro, g.n_luts - used
        )
    )
    return cells


def loop_delay(ro, params):
    """Noise-free loop delay of a ring oscillator in s."""
    return sum(
        params.lut_stage_delay + segment_delay(spec, ro.hop_length, params)
        for spec in ro.interconnect_specs
    )


def measure_ro(ro, params, seed, noise_pct=1.0):
    """Measure a ring oscillator three times and average.

    Every trial adds Gaussian measurement noise with a standard deviation
    of `noise_pct` percent of the loop delay.
    """
    delay = loop_delay(ro, params)
    if noise_pct == 0:
        trials = (delay,) * TRIALS
        mean = delay
    else:
        noise = make_rng(seed).normal(0.0, noise_pct / 100 * delay, TRIALS)
        trials = tuple(float(delay + n) for n in noise)
        mean = float(np.mean(trials))
    high = any(spec.high_resistance for spec in ro.interconnect_specs)
    return RoMeasurement(ro.ro_id, mean, trials, False, high)


def detect_delay_faults(measurements, threshold_sigmas=3.0):
    """Ids of the oscillators whose loop delay exceeds the population mean
    by more than `threshold_sigmas` standard deviations.

    Examples
    --------
    >>> ms = [RoMeasurement(i, d, (d,) * 3) for i, d in enumerate([1, 1, 3])]
    >>> detect_delay_faults(ms, threshold_sigmas=1)
    [2]
    """
    if len(measurements) < 2:
        msg = "Delay faults need at least 2 measurements, got {0}."
        raise ValueError(msg.format(len(measurements)))
    delays = np.array([m.loop_delay for m in measurements])
    limit = delays.mean() + threshold_sigmas * delays.std()
    return [m.ro_id for m, d in zip(measurements, delays) if d > limit]


def flag_measurements(measurements, threshold_sigmas=3.0):
    """Measurements with their `flagged` field set."""
    flagged = set(detect_delay_faults(measurements, threshold_sigmas))
    return [m._replace(flagged=m.ro_id in flagged) for m in measurements]


def population_spread(measurements):
    """Mean, standard deviation and range of the loop delays of all
    oscillators without a high-resistance hop."""
    delays = np.array(
        [m.loop_delay for m in measurements if not m.high_resistance]
    )
    if len(delays) == 0:
        return {"n": 0}
    return {
        "n": int(len(delays)),
        "mean": float(delays.mean()),
        "std": float(delays.std()),
        "min": float(delays.min()),
        "max": float(delays.max()),
        "range": float(delays.max() - delays.min()),
    }
