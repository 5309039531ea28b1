# -*- coding: utf-8 -*-

"""Monte Carlo sampling of metallic CNT (m-CNT) defects.

SPDX-FileCopyrightText: cntfpga developer group

SPDX-License-Identifier: MIT

"""

import logging
import math
from typing import NamedTuple
from typing import Tuple

from scipy import stats

from cntfpga._plumbing import spawn_rngs


class MCntDefect(NamedTuple):
    """One m-CNT as a line segment of the floorplan.

    `start` is (x, y) in μm, `length` in μm and `angle` in degrees from the
    column axis. A removed m-CNT causes no fault unless the etching `opened`
    the circuit.
    """

    start: Tuple[float, float]
    length: float
    angle: float
    removed: bool = False
    opened: bool = False

    @property
    def end(self):
        theta = math.radians(self.angle)
        x, y = self.start
        return (
            x + self.length * math.sin(theta),
            y + self.length * math.cos(theta),
        )


def defect_count(p_m, n_sites, u):
    """Number of m-CNTs among `n_sites` CNTs for a uniform draw `u`.

    The count is the Binomial(n_sites, p_m) quantile of `u`, so for a fixed
    `u` it never decreases when `p_m` grows.

    Examples
    --------
    >>> defect_count(0.0, 1000, 0.5)
    0
    >>> defect_count(0.01, 1000, 0.5) <= defect_count(0.02, 1000, 0.5)
    True
    """
    if p_m <= 0 or n_sites <= 0:
        return 0
    return max(0, int(stats.binom.ppf(u, n_sites, p_m)))


def _positive_normal(rng, mu, sigma):
    if sigma == 0:
        return mu
    value = rng.normal(mu, sigma)
    while value <= 0:
        value = rng.normal(mu, sigma)
    return value


def _misalignment(rng, sigma):
    if sigma == 0:
        return 0.0
    angle = rng.normal(0.0, sigma)
    while abs(angle) >= 90:
        angle = rng.normal(0.0, sigma)
    return angle


def _draw_defect(rng, params, width, height):
    x = rng.uniform(0.0, width)
    y = rng.uniform(0.0, height)
    length = _positive_normal(rng, params.l_mu, params.l_sigma)
    u_mis, u_rm, u_open = rng.random(3)
    angle = 0.0
    if u_mis < params.p_mis:
        angle = _misalignment(rng, params.angle_sigma)
    removed = bool(u_rm < params.p_rm)
    opened = removed and bool(u_open < params.p_open)
    return MCntDefect((x, y), length, angle, removed, opened)


def sample_defects(params, geometry, seed):
    """Draw the m-CNT defects of one array.

    The count and the defect attributes come from two independent streams,
    so raising `p_m` with the same seed only appends defects.

    Parameters
    ----------
    params : DefectParams
    geometry : ArrayGeometry
    seed : int

    Returns
    -------
    list of MCntDefect

    Examples
    --------
    >>> from cntfpga import DefectParams
    >>> from cntfpga.fabric import ArrayGeometry
    >>> sample_defects(DefectParams(p_m=0), ArrayGeometry(8, 8), seed=1)
    []
    """
    count_rng, attribute_rng = spawn_rngs(seed, 2)
    n_sites = geometry.n_tiles * params.sites_per_tile
    count = defect_count(params.p_m, n_sites, count_rng.random())
    logging.info("Sampling {0} m-CNT defects".format(count))
    return [
        _draw_defect(attribute_rng, params, geometry.width, geometry.height)
        for _ in range(count)
    ]
