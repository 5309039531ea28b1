# -*- coding: utf-8 -

"""Tests of the _options module.

SPDX-FileCopyrightText: cntfpga developer group

SPDX-License-Identifier: MIT
"""

import pytest

from cntfpga import DefectParams
from cntfpga import DelayModelParams
from cntfpga import TimingParams


@pytest.mark.parametrize("name", ["p_m", "p_rm", "p_mis", "p_open"])
def test_probabilities_are_checked(name):
    msg = "'{0}' is a probability".format(name)
    with pytest.raises(ValueError, match=msg):
        DefectParams(**{name: -0.1})


def test_cnt_length_must_be_positive():
    with pytest.raises(ValueError, match="'l_mu' must be strictly positive"):
        DefectParams(l_mu=0)
    with pytest.raises(ValueError, match="'l_sigma' must not be negative"):
        DefectParams(l_sigma=-1.0)


def test_zero_spreads_are_allowed():
    params = DefectParams(l_sigma=0.0, angle_sigma=0.0)
    assert params.l_sigma == 0.0
    assert params.angle_sigma == 0.0


@pytest.mark.parametrize("sites", [0, 2.5, -3])
def test_sites_per_tile_is_a_positive_integer(sites):
    with pytest.raises(ValueError, match="'sites_per_tile' must be"):
        DefectParams(sites_per_tile=sites)


def test_replace_keeps_the_other_fields():
    params = DefectParams(p_m=0.01, l_mu=5.0)
    changed = params.replace(p_m=0.02)
    assert changed.p_m == 0.02
    assert changed.l_mu == 5.0
    assert params.p_m == 0.01


def test_replace_validates_again():
    with pytest.raises(ValueError, match="'p_m' is a probability"):
        DefectParams().replace(p_m=2.0)


def test_comparison_by_value():
    assert DelayModelParams() == DelayModelParams()
    assert DelayModelParams() != DelayModelParams(calibration_scale=2.0)
    assert DefectParams() != TimingParams()


def test_as_dict_lists_every_field():
    assert list(TimingParams().as_dict()) == [
        "t_config",
        "t_pattern",
        "t_readback",
    ]


def test_repr_names_the_class():
    assert repr(TimingParams(t_readback=0.0)).startswith(
        "TimingParams(t_config="
    )


@pytest.mark.parametrize(
    "name",
    [
        "mfp_per_diameter",
        "contact_resistance",
        "capacitance_per_length",
        "driver_resistance",
        "load_capacitance",
        "lut_stage_delay",
        "calibration_scale",
    ],
)
def test_delay_parameters_must_be_positive(name):
    msg = "'{0}' must be strictly positive".format(name)
    with pytest.raises(ValueError, match=msg):
        DelayModelParams(**{name: 0})
