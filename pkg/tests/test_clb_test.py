# -*- coding: utf-8 -

"""Tests of the CLB test sessions, their fault coverage and test time.

SPDX-FileCopyrightText: cntfpga developer group

SPDX-License-Identifier: MIT
"""

import itertools
import json

import pytest

from cntfpga import TimingParams
from cntfpga.clb_test import SessionStyle
from cntfpga.clb_test import configuration_overhead
from cntfpga.clb_test import coverage_of
from cntfpga.clb_test import estimate_test_time
from cntfpga.clb_test import fault_detected
from cntfpga.clb_test import gen_session
from cntfpga.clb_test import session_time_table
from cntfpga.clb_test import simulate_session
from cntfpga.clb_test import time_reduction
from cntfpga.clb_test import transistors_ta_tb
from cntfpga.fabric import ArrayGeometry
from cntfpga.fabric import Site
from cntfpga.fabric import build_array
from cntfpga.fabric import mux_always_select
from cntfpga.fabric import mux_override
from cntfpga.fabric import open_fault
from cntfpga.fabric import stuck_at
from cntfpga.fabric import stuck_on
from cntfpga.fabric import wired_and
from cntfpga.fabric import wired_or


def single_lut_faults(k):
    size = 2**k
    faults = [stuck_at(0), stuck_at(1), open_fault()]
    for cell in range(size):
        faults += [
            stuck_at(0, cell),
            stuck_at(1, cell),
            mux_always_select(cell),
        ]
    for a, b in itertools.combinations(range(size), 2):
        faults += [wired_and(a, b), wired_or(a, b)]
    return faults


def test_traditional_session_of_a_3_input_lut():
    session = gen_session(3, "traditional")
    assert session.n_configurations == 4
    assert [len(p) for p in session.patterns] == [8] * 4
    assert not session.extra_pattern


def test_improved_session_of_a_3_input_lut():
    session = gen_session(3, SessionStyle.IMPROVED)
    assert session.n_configurations == 2
    assert [len(p) for p in session.patterns] == [4, 5]
    assert session.patterns[1][-1].tolist() == [1, 1, 1]
    assert [c.et_mode for c in session.configurations] == [False, False]


def test_improved_session_without_the_extra_pattern():
    session = gen_session(3, "improved", extra_pattern=False)
    assert [len(p) for p in session.patterns] == [4, 4]


@pytest.mark.parametrize("k", [3, 4, 5, 6])
def test_carry_chain_session_adds_two_configurations(k):
    session = gen_session(k, "with_carry_chain")
    assert session.n_configurations == k + 3
    assert configuration_overhead(k) == (k + 3, 2)
    assert configuration_overhead(k, carry_chain=False) == (k + 1, 2)


def test_session_patterns_are_read_only():
    session = gen_session(4, "traditional")
    with pytest.raises(ValueError):
        session.patterns[0][0, 0] = 1


def test_session_size_limits():
    with pytest.raises(ValueError, match="2 <= k <= 8, got k = 9"):
        gen_session(9, "traditional")
    with pytest.raises(ValueError):
        gen_session(4, "exhaustive")


def test_session_export_is_json():
    exported = gen_session(2, "with_carry_chain").as_dict()
    text = json.dumps(exported)
    assert exported["configurations"][0]["lut_config_bits"] == "0101"
    assert exported["configurations"][-1]["carry_chain"] == {
        "carry_in": 1,
        "external": 1,
    }
    assert "CC2" in text


@pytest.mark.parametrize("k", [2, 3, 4])
def test_traditional_session_detects_every_single_lut_fault(k):
    for fault in single_lut_faults(k):
        assert fault_detected(fault, k, "traditional"), str(fault)
    for value in range(2**k):
        assert fault_detected(mux_override(value), k, "traditional")
    for transistor in range(2**k):
        assert fault_detected(stuck_on(transistor), k, "traditional")


@pytest.mark.parametrize("k", [2, 3, 4])
def test_improved_session_detects_the_mapped_lut_faults(k):
    size = 2**k
    faults = [stuck_at(0), stuck_at(1), open_fault()]
    for cell in range(size):
        faults += [stuck_at(0, cell), stuck_at(1, cell)]
        faults += [mux_always_select(cell), mux_override(cell)]
    for a in range(0, size, 2):
        faults += [wired_and(a, a + 1), wired_or(a, a + 1)]
    for fault in faults:
        assert fault_detected(fault, k, "improved"), str(fault)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_stuck_on_of_ta_and_tb_needs_the_extra_pattern(k):
    for transistor in transistors_ta_tb(k):
        fault = stuck_on(transistor)
        assert fault_detected(fault, k, "improved", extra_pattern=True)
        assert not fault_detected(fault, k, "improved", extra_pattern=False)


def test_other_stuck_on_faults_show_in_test_mode():
    for transistor in (0, 1, 3, 5):
        fault = stuck_on(transistor)
        assert fault_detected(fault, 3, "improved", extra_pattern=False)


@pytest.mark.parametrize("n_stages", [1, 4, 16])
def test_carry_configurations_detect_every_gate_stuck_at(n_stages):
    for stage, gate, value in itertools.product(
        range(n_stages), ("mux", "xor"), (0, 1)
    ):
        assert fault_detected(
            stuck_at(value),
            2,
            "with_carry_chain",
            component=gate,
            index=stage,
            n_luts=n_stages,
        )


def test_traditional_session_cannot_see_the_carry_chain():
    assert not fault_detected(
        stuck_at(1), 3, "traditional", component="mux", index=0
    )


def test_simulate_session_reports_the_detected_sites():
    array = build_array(ArrayGeometry(1, 1, lut_inputs=3), seed=0)
    array.set_lut_fault(0, 0, 1, stuck_at(1, 4))
    array.set_carry_fault(0, 0, 2, "xor", stuck_at(0))
    clb = array.clb(0, 0)

    result = simulate_session(clb, gen_session(3, "with_carry_chain"))
    assert not result.passed
    assert result.detected == {Site("lut", 1), Site("xor", 2)}

    result = simulate_session(clb, gen_session(3, "traditional"))
    assert result.detected == {Site("lut", 1)}


def test_fault_free_clb_passes():
    array = build_array(ArrayGeometry(1, 1, lut_inputs=3), seed=0)
    result = simulate_session(array.clb(0, 0), gen_session(3, "improved"))
    assert result.passed
    assert result.detected == frozenset()


def test_simulate_session_needs_matching_lut_size():
    array = build_array(ArrayGeometry(1, 1, lut_inputs=3), seed=0)
    with pytest.raises(ValueError, match="k = 4 applied to a CLB with k = 3"):
        simulate_session(array.clb(0, 0), gen_session(4, "traditional"))


def test_coverage_of_a_fault_list():
    faults = [stuck_on(t) for t in transistors_ta_tb(3)] + [stuck_at(0)]
    assert coverage_of(faults, 3, "improved") == 1.0
    assert coverage_of(
        faults, 3, "improved", extra_pattern=False
    ) == pytest.approx(1 / 3)
    assert coverage_of([], 3, "improved") == 1.0


def test_test_time_without_readback_counts_configs_and_patterns():
    timing = TimingParams(t_config=2.0, t_pattern=0.5, t_readback=0.0)
    session = gen_session(3, "improved")
    assert estimate_test_time(session, timing) == 2 * 2.0 + 9 * 0.5


def test_improved_session_is_35_49_pct_faster_for_6_inputs():
    assert time_reduction(6) == pytest.approx(35.49, abs=0.5)


def test_mean_reduction_over_lut_sizes():
    table = session_time_table((3, 4, 5, 6))
    assert table["k"].tolist() == [3, 4, 5, 6]
    assert table.attrs["mean"] == pytest.approx(28.77, abs=2.0)
    assert (table["time_improved"] < table["time_traditional"]).all()


def test_timing_parameters_are_checked():
    with pytest.raises(ValueError, match="'t_config' must be strictly"):
        TimingParams(t_config=0)
    with pytest.raises(ValueError, match="must not be negative"):
        TimingParams(t_pattern=-1.0)
