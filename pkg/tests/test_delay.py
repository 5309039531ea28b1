# -*- coding: utf-8 -

"""Tests of the MWCNT delay model and the ring-oscillator test.

SPDX-FileCopyrightText: cntfpga developer group

SPDX-License-Identifier: MIT
"""

import numpy as np
import pytest

from cntfpga import DelayModelParams
from cntfpga.delay import MwcntSpec
from cntfpga.delay import RoCell
from cntfpga.delay import RoMeasurement
from cntfpga.delay import build_ro_partition
from cntfpga.delay import calibrate
from cntfpga.delay import chirality_reduction
from cntfpga.delay import delay_population
from cntfpga.delay import detect_delay_faults
from cntfpga.delay import flag_measurements
from cntfpga.delay import loop_delay
from cntfpga.delay import measure_ro
from cntfpga.delay import nominal_mwcnt
from cntfpga.delay import population_spread
from cntfpga.delay import sample_mwcnt
from cntfpga.delay import segment_delay
from cntfpga.delay import shell_diameters
from cntfpga.delay import xnor_config
from cntfpga.fabric import NO_FAULT
from cntfpga.fabric import ArrayGeometry
from cntfpga.fabric import all_input_vectors
from cntfpga.fabric import build_array
from cntfpga.fabric import lut_eval_many
from cntfpga.helpers import parity

PITCH = ArrayGeometry(1, 1).clb_pitch_x


def test_shells_of_an_11_nm_tube():
    diameters = shell_diameters(11.0)
    assert len(diameters) == 9
    assert diameters[0] == 11.0
    steps = [a - b for a, b in zip(diameters, diameters[1:])]
    assert steps == pytest.approx([0.68] * 8)
    assert diameters[-1] >= 5.5


def test_sampled_tube_is_consistent():
    for seed in range(20):
        spec = sample_mwcnt(seed).check()
        assert spec.d_max > 0
        assert len(spec.shell_diameters) == len(spec.shell_is_metallic)


def test_all_metallic_and_no_metallic_shells():
    assert sample_mwcnt(1, d_max=11.0, p_metal=1.0).n_metallic == 9
    spec = sample_mwcnt(1, d_max=11.0, p_metal=0.0)
    assert spec.high_resistance


def test_spec_check_rejects_broken_shells():
    with pytest.raises(ValueError, match="strictly decrease"):
        MwcntSpec(11.0, (11.0, 11.0), (True, True)).check()
    with pytest.raises(ValueError, match="below half"):
        MwcntSpec(11.0, (11.0, 5.0), (True, True)).check()
    with pytest.raises(ValueError, match="at least one shell"):
        MwcntSpec(11.0, (), ()).check()


def test_more_metallic_shells_mean_less_delay():
    params = DelayModelParams()
    none = nominal_mwcnt(p_metal=0.0)
    third = nominal_mwcnt()
    full = nominal_mwcnt(p_metal=1.0)
    delays = [segment_delay(s, PITCH, params) for s in (none, third, full)]
    assert delays[0] > delays[1] > delays[2]


def test_doubling_the_length_more_than_doubles_the_delay():
    params = DelayModelParams()
    spec = nominal_mwcnt()
    assert segment_delay(spec, 2 * PITCH, params) > 2 * segment_delay(
        spec, PITCH, params
    )


def test_segment_delay_needs_a_positive_length():
    with pytest.raises(ValueError, match="must be positive, got 0"):
        segment_delay(nominal_mwcnt(), 0, DelayModelParams())


def test_delay_model_parameters_must_be_positive():
    with pytest.raises(ValueError, match="'driver_resistance' must be"):
        DelayModelParams(driver_resistance=0)


def test_calibrated_nominal_ring_oscillator_runs_at_2_70_ns():
    params = calibrate(DelayModelParams(), PITCH, 2.70e-9, 7)
    specs = (nominal_mwcnt(),) * 7
    ro = RoCell(0, 7, ((0, 0, 0),) * 7, specs, PITCH).check()
    assert loop_delay(ro, params) == pytest.approx(2.70e-9, abs=0.01e-9)


def test_calibration_fails_if_the_luts_alone_are_too_slow():
    with pytest.raises(ValueError, match="alone exceeds the target"):
        calibrate(DelayModelParams(), PITCH, 2.0e-9, 7)


def test_higher_chirality_cuts_the_mean_delay_by_about_37_pct():
    params = calibrate(DelayModelParams(), PITCH)
    reduction, means = chirality_reduction(params, PITCH, 10000, seed=12)
    assert means[1] < means[0]
    assert 30.0 < reduction < 44.0


def test_delay_population_is_reproducible():
    params = DelayModelParams()
    a, high_a = delay_population(params, PITCH, 50, seed=3)
    b, high_b = delay_population(params, PITCH, 50, seed=3)
    np.testing.assert_array_equal(a, b)
    np.testing.assert_array_equal(high_a, high_b)


def test_xnor_configuration_inverts_i0():
    for k in range(2, 7):
        config = xnor_config(k)
        vectors = all_input_vectors(k)
        expected = [1 - parity(b) for b in range(2**k)]
        assert lut_eval_many(config, NO_FAULT, vectors).tolist() == expected
        side = np.zeros((2, k), dtype=int)
        side[1, 0] = 1
        assert lut_eval_many(config, NO_FAULT, side).tolist() == [1, 0]


def test_partition_sizes():
    array = build_array(ArrayGeometry(49, 49), seed=1)
    assert len(build_ro_partition(array)) == 1372
    array = build_array(ArrayGeometry(1, 7, luts_per_clb=1), seed=1)
    (ro,) = build_ro_partition(array)
    assert ro.lut_refs == tuple((0, c, 0) for c in range(7))


def test_partition_configures_the_used_luts():
    geometry = ArrayGeometry(2, 2, lut_inputs=3)
    array = build_array(geometry, seed=4)
    cells = build_ro_partition(array, stage_count=7)
    assert len(cells) == 2
    np.testing.assert_array_equal(array.config[0, 0, 0], xnor_config(3))
    # 16 sites, 14 used: the last two stay unconfigured
    assert not array.config[1, 1, 2].any()
    assert not array.config[1, 1, 3].any()


def test_partition_needs_enough_sites():
    array = build_array(ArrayGeometry(1, 1), seed=1)
    with pytest.raises(ValueError, match="a ring oscillator needs 7"):
        build_ro_partition(array)


def test_ring_oscillator_needs_an_odd_stage_count():
    with pytest.raises(ValueError, match="odd stage count, got 6"):
        RoCell(0, 6, ((0, 0, 0),) * 6, (nominal_mwcnt(),) * 6, 1.0).check()


def test_noise_free_measurement_repeats_itself():
    array = build_array(ArrayGeometry(2, 2, lut_inputs=3), seed=4)
    ro = build_ro_partition(array)[0]
    m = measure_ro(ro, DelayModelParams(), seed=1, noise_pct=0)
    assert len(set(m.trials)) == 1
    assert m.loop_delay == m.trials[0]
    assert m.period == 2 * m.loop_delay


def test_noisy_measurement_averages_three_trials():
    array = build_array(ArrayGeometry(2, 2, lut_inputs=3), seed=4)
    ro = build_ro_partition(array)[1]
    m = measure_ro(ro, DelayModelParams(), seed=2, noise_pct=1.0)
    assert len(m.trials) == 3
    assert m.loop_delay == pytest.approx(np.mean(m.trials))


def measurements(delays):
    return [RoMeasurement(i, d, (d,) * 3) for i, d in enumerate(delays)]


def test_identical_delays_raise_no_flag():
    assert detect_delay_faults(measurements([2.7e-9] * 10)) == []


def test_one_slow_oscillator_among_a_thousand_is_flagged():
    delays = [1.0 + 0.01 * (-1) ** i for i in range(999)] + [2.0]
    assert detect_delay_faults(measurements(delays)) == [999]
    flagged = flag_measurements(measurements(delays))
    assert [m.ro_id for m in flagged if m.flagged] == [999]


def test_zero_threshold_flags_everything_above_the_mean():
    assert detect_delay_faults(measurements([1, 2, 3, 4]), 0) == [2, 3]


def test_flagging_needs_two_measurements():
    with pytest.raises(ValueError, match="at least 2 measurements"):
        detect_delay_faults(measurements([1.0]))


def test_population_spread_leaves_out_high_resistance_loops():
    ms = measurements([1.0, 2.0, 4.0])
    ms[2] = ms[2]._replace(high_resistance=True)
    spread = population_spread(ms)
    assert spread["n"] == 2
    assert spread["range"] == 1.0
    assert spread["std"] == pytest.approx(0.5)
    assert population_spread(ms[2:]) == {"n": 0}
