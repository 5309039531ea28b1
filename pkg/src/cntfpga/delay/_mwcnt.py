# -*- coding: utf-8 -*-

"""Delay of multi-walled CNT (MWCNT) interconnect under process variation.

Every metallic shell conducts like a one-dimensional wire with the quantum
resistance h/4e² and a mean free path proportional to its diameter; the
shells of a bundle are in parallel. The wire delay is the single-lump
Elmore form 0.69 * R * C, scaled by one calibration constant.

SPDX-FileCopyrightText: cntfpga developer group

SPDX-License-Identifier: MIT

"""

import logging
import math
from typing import NamedTuple
from typing import Tuple

import numpy as np

from cntfpga._plumbing import make_rng

# Diameter step between neighbouring shells: twice the 0.34 nm van der Waals
# spacing, in nm.
SHELL_STEP_NM = 0.68
QUANTUM_RESISTANCE = 6453.2
ELMORE_FACTOR = 0.69
# A bundle without metallic shell conducts like its worst shell at 1 %.
NO_METAL_FACTOR = 100.0

NOMINAL_D_MAX = 11.0
NOMINAL_SIGMA_D = 1.65
NOMINAL_P_METAL = 1.0 / 3.0


class MwcntSpec(NamedTuple):
    """Shell structure of one MWCNT: outer diameter and, per shell from
    the outside in, its diameter in nm and whether it is metallic."""

    d_max: float
    shell_diameters: Tuple[float, ...]
    shell_is_metallic: Tuple[bool, ...]

    @property
    def n_metallic(self):
        return sum(self.shell_is_metallic)

    @property
    def high_resistance(self):
        return self.n_metallic == 0

    def check(self):
        d = self.shell_diameters
        if len(d) < 1 or len(d) != len(self.shell_is_metallic):
            raise ValueError(
                "An MWCNT needs at least one shell and one metallic flag "
                "per shell."
            )
        if any(b >= a for a, b in zip(d, d[1:])):
            raise ValueError("Shell diameters must strictly decrease.")
        if d[-1] < self.d_max / 2 - 1e-9:
            msg = "Innermost shell {0} nm is below half of d_max = {1} nm."
            raise ValueError(msg.format(d[-1], self.d_max))
        return self


def shell_diameters(d_max):
    """Shell diameters laid inward from `d_max` while not below d_max / 2.

    >>> len(shell_diameters(11.0))
    9
    >>> [round(d, 2) for d in shell_diameters(11.0)[:3]]
    [11.0, 10.32, 9.64]
    """
    if not d_max > 0:
        raise ValueError("d_max must be positive, got {0}.".format(d_max))
    n = int(math.floor(d_max / 2 / SHELL_STEP_NM + 1e-9)) + 1
    return tuple(d_max - i * SHELL_STEP_NM for i in range(n))


def draw_mwcnt(
    rng,
    mu_d=NOMINAL_D_MAX,
    sigma_d=NOMINAL_SIGMA_D,
    p_metal=NOMINAL_P_METAL,
    d_max=None,
):
    """Draw an MWCNT from a generator; see :func:`sample_mwcnt`."""
    if d_max is None:
        d_max = rng.normal(mu_d, sigma_d) if sigma_d > 0 else mu_d
        while d_max <= 0:
            d_max = rng.normal(mu_d, sigma_d)
    diameters = shell_diameters(float(d_max))
    metallic = rng.random(len(diameters)) < p_metal
    return MwcntSpec(
        float(d_max), diameters, tuple(bool(m) for m in metallic)
    )


def sample_mwcnt(
    seed,
    mu_d=NOMINAL_D_MAX,
    sigma_d=NOMINAL_SIGMA_D,
    p_metal=NOMINAL_P_METAL,
    d_max=None,
):
    """Draw one MWCNT.

    The outer diameter d_max follows N(mu_d, sigma_d²) truncated to positive
    values unless it is forced with `d_max`; every shell is metallic with
    probability `p_metal`.

    Examples
    --------
    >>> spec = sample_mwcnt(seed=4, d_max=11.0, p_metal=1.0)
    >>> len(spec.shell_diameters), spec.n_metallic
    (9, 9)
    """
    if not mu_d > 0:
        raise ValueError("mu_d must be positive, got {0}.".format(mu_d))
    return draw_mwcnt(make_rng(seed), mu_d, sigma_d, p_metal, d_max)


def nominal_mwcnt(d_max=NOMINAL_D_MAX, p_metal=NOMINAL_P_METAL):
    """MWCNT with metallic shells spread evenly at the rate `p_metal`.

    >>> nominal_mwcnt().n_metallic
    3
    """
    diameters = shell_diameters(d_max)
    metallic = tuple(
        math.floor((i + 1) * p_metal + 1e-9) - math.floor(i * p_metal + 1e-9)
        == 1
        for i in range(len(diameters))
    )
    return MwcntSpec(float(d_max), diameters, metallic)


def bundle_resistance(spec, length, params):
    """Resistance in Ω of the parallel metallic shells over `length` μm."""
    shells = [
        params.contact_resistance
        + QUANTUM_RESISTANCE * length / (params.mfp_per_diameter * d)
        for d, metallic in zip(spec.shell_diameters, spec.shell_is_metallic)
        if metallic
    ]
    if not shells:
        worst = params.contact_resistance + QUANTUM_RESISTANCE * length / (
            params.mfp_per_diameter * min(spec.shell_diameters)
        )
        return NO_METAL_FACTOR * worst
    return 1.0 / sum(1.0 / r for r in shells)


def segment_delay(spec, length, params):
    """Delay in s of an MWCNT wire of `length` μm driven by a LUT.

    Examples
    --------
    >>> from cntfpga import DelayModelParams
    >>> params = DelayModelParams()
    >>> full = nominal_mwcnt(p_metal=1.0)
    >>> segment_delay(full, 7.8, params) < segment_delay(
    ...     nominal_mwcnt(), 7.8, params)
    True
    """
    if not length > 0:
        msg = "Wire length must be positive, got {0}."
        raise ValueError(msg.format(length))
    resistance = params.driver_resistance + bundle_resistance(
        spec, length, params
    )
    capacitance = params.capacitance_per_length * length + (
        params.load_capacitance
    )
    return params.calibration_scale * ELMORE_FACTOR * resistance * capacitance


def calibrate(params, hop_length, target_loop_delay=2.70e-9, stage_count=7):
    """Parameters whose calibration scale puts the loop delay of a nominal
    ring oscillator at `target_loop_delay`.

    The nominal oscillator has `stage_count` LUT stages joined by hops of
    `hop_length` μm of nominal MWCNT (11 nm, a third of the shells
    metallic).
    """
    raw = segment_delay(
        nominal_mwcnt(), hop_length, params.replace(calibration_scale=1.0)
    )
    wire_budget = target_loop_delay / stage_count - params.lut_stage_delay
    if wire_budget <= 0:
        msg = (
            "LUT stage delay {0} s alone exceeds the target loop delay of "
            "{1} s over {2} stages."
        )
        raise ValueError(
            msg.format(params.lut_stage_delay, target_loop_delay, stage_count)
        )
    scale = wire_budget / raw
    logging.info("Calibrated the wire delay scale to {0:.4g}".format(scale))
    return params.replace(calibration_scale=scale)


def delay_population(
    params,
    length,
    n,
    seed,
    mu_d=NOMINAL_D_MAX,
    sigma_d=NOMINAL_SIGMA_D,
    p_metal=NOMINAL_P_METAL,
):
    """Monte Carlo delays of `n` adjacent-CLB MWCNT wires.

    Returns
    -------
    tuple of numpy.ndarray
        Delays in s and the high-resistance flag per wire.
    """
    rng = make_rng(seed)
    delays = np.empty(n)
    high = np.zeros(n, dtype=bool)
    for i in range(n):
        spec = draw_mwcnt(rng, mu_d, sigma_d, p_metal)
        delays[i] = segment_delay(spec, length, params)
        high[i] = spec.high_resistance
    return delays, high


def chirality_reduction(
    params, length, n, seed, p_low=0.33, p_high=0.53, **kwargs
):
    """Relative reduction in percent of the mean wire delay when the
    metallic-shell probability rises from `p_low` to `p_high`.

    High-resistance wires are left out of both means. Both populations use
    the same seed.
    """
    means = []
    for p_metal in (p_low, p_high):
        delays, high = delay_population(
            params, length, n, seed, p_metal=p_metal, **kwargs
        )
        means.append(float(np.mean(delays[~high])))
    return 100.0 * (means[0] - means[1]) / means[0], means
