# -*- coding: utf-8 -*-

"""Parameter classes shared by the simulation modules.

SPDX-FileCopyrightText: cntfpga developer group

SPDX-License-Identifier: MIT

"""


def _check_probability(name, value):
    if not 0 <= value <= 1:
        msg = "'{0}' is a probability and must lie in [0, 1], got {1}."
        raise ValueError(msg.format(name, value))


def _check_positive(name, value):
    if not value > 0:
        msg = "'{0}' must be strictly positive, got {1}."
        raise ValueError(msg.format(name, value))


class _Parameters:
    """Common behaviour of the parameter classes: comparison by value,
    export to a plain dictionary and copying with changed fields."""

    _fields = ()

    def as_dict(self):
        return {name: getattr(self, name) for name in self._fields}

    def replace(self, **changes):
        values = self.as_dict()
        values.update(changes)
        return type(self)(**values)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.as_dict() == other.as_dict()

    def __repr__(self):
        args = ", ".join(
            "{0}={1!r}".format(k, v) for k, v in self.as_dict().items()
        )
        return "{0}({1})".format(type(self).__name__, args)


class DefectParams(_Parameters):
    """Defines the statistics of metallic CNT (m-CNT) defects.

    Parameters
    ----------
    p_m : float
        Probability that a CNT is metallic.
    p_rm : float
        Probability that an m-CNT is removed by the etching step.
    l_mu : float
        Mean CNT length in μm.
    l_sigma : float
        Standard deviation of the CNT length in μm.
    p_mis : float
        Probability that a CNT is misaligned.
    angle_sigma : float
        Standard deviation of the misalignment angle in degrees.
    p_open : float
        Probability that a removed m-CNT leaves an open circuit behind.
    sites_per_tile : int
        Number of candidate CNT sites per CLB tile. The expected number of
        defects is `p_m * n_rows * n_cols * sites_per_tile`.

    Examples
    --------
    >>> DefectParams(p_m=0.01).p_m
    0.01
    >>> DefectParams(p_rm=1.5)
    Traceback (most recent call last):
     ...
    ValueError: 'p_rm' is a probability and must lie in [0, 1], got 1.5.
    """

    _fields = (
        "p_m",
        "p_rm",
        "l_mu",
        "l_sigma",
        "p_mis",
        "angle_sigma",
        "p_open",
        "sites_per_tile",
    )

    def __init__(
        self,
        p_m=0.0005,
        p_rm=0.0,
        l_mu=62.0,
        l_sigma=15.0,
        p_mis=0.1,
        angle_sigma=2.0,
        p_open=0.0,
        sites_per_tile=1,
    ):
        self.p_m = p_m
        self.p_rm = p_rm
        self.l_mu = l_mu
        self.l_sigma = l_sigma
        self.p_mis = p_mis
        self.angle_sigma = angle_sigma
        self.p_open = p_open
        self.sites_per_tile = sites_per_tile

        self._check_probabilities()
        self._check_length()
        self._check_angle()
        self._check_sites()

    def _check_probabilities(self):
        for name in ("p_m", "p_rm", "p_mis", "p_open"):
            _check_probability(name, getattr(self, name))

    def _check_length(self):
        _check_positive("l_mu", self.l_mu)
        if self.l_sigma < 0:
            msg = "'l_sigma' must not be negative, got {0}."
            raise ValueError(msg.format(self.l_sigma))

    def _check_angle(self):
        if self.angle_sigma < 0:
            msg = "'angle_sigma' must not be negative, got {0}."
            raise ValueError(msg.format(self.angle_sigma))

    def _check_sites(self):
        if int(self.sites_per_tile) != self.sites_per_tile or (
            self.sites_per_tile < 1
        ):
            msg = "'sites_per_tile' must be a positive integer, got {0}."
            raise ValueError(msg.format(self.sites_per_tile))


class DelayModelParams(_Parameters):
    """Electrical parameters of the MWCNT interconnect delay model.

    Parameters
    ----------
    mfp_per_diameter : float
        Mean free path per shell diameter in μm/nm.
    contact_resistance : float
        Contact resistance of one shell in Ω.
    capacitance_per_length : float
        Wire capacitance in F/μm.
    driver_resistance : float
        Output resistance of the driving LUT in Ω.
    load_capacitance : float
        Input capacitance of the receiving LUT in F.
    lut_stage_delay : float
        Intrinsic delay of one LUT stage in s.
    calibration_scale : float
        Dimensionless factor on the interconnect delay, see
        :func:`cntfpga.delay.calibrate`.
    """

    _fields = (
        "mfp_per_diameter",
        "contact_resistance",
        "capacitance_per_length",
        "driver_resistance",
        "load_capacitance",
        "lut_stage_delay",
        "calibration_scale",
    )

    def __init__(
        self,
        mfp_per_diameter=1.0,
        contact_resistance=1.0e3,
        capacitance_per_length=2.0e-16,
        driver_resistance=400.0,
        load_capacitance=1.0e-15,
        lut_stage_delay=380.0e-12,
        calibration_scale=1.0,
    ):
        self.mfp_per_diameter = mfp_per_diameter
        self.contact_resistance = contact_resistance
        self.capacitance_per_length = capacitance_per_length
        self.driver_resistance = driver_resistance
        self.load_capacitance = load_capacitance
        self.lut_stage_delay = lut_stage_delay
        self.calibration_scale = calibration_scale

        self._check_positive_values()

    def _check_positive_values(self):
        for name in self._fields:
            _check_positive(name, getattr(self, name))


class TimingParams(_Parameters):
    """Timing base of the test-time model.

    Parameters
    ----------
    t_config : float
        Time to load one test configuration in s.
    t_pattern : float
        Time to apply one input pattern in s.
    t_readback : float
        Time per configuration bit read back once per session in s. Zero
        reduces the model to configurations plus patterns.

    The defaults put the improved LUT session 35.49 % below the
    traditional one for 6-input LUTs.

    Examples
    --------
    >>> TimingParams(t_config=0)
    Traceback (most recent call last):
     ...
    ValueError: 't_config' must be strictly positive, got 0.
    """

    _fields = ("t_config", "t_pattern", "t_readback")

    def __init__(self, t_config=1.0e-8, t_pattern=1.0e-8, t_readback=9.973e-8):
        self.t_config = t_config
        self.t_pattern = t_pattern
        self.t_readback = t_readback

        self._check_timing()

    def _check_timing(self):
        _check_positive("t_config", self.t_config)
        if self.t_pattern < 0 or self.t_readback < 0:
            msg = "'t_pattern' and 't_readback' must not be negative."
            raise ValueError(msg)
