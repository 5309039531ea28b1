# -*- coding: utf-8 -

"""Tests of the row procedures, array test runs and usage masks.

SPDX-FileCopyrightText: cntfpga developer group

SPDX-License-Identifier: MIT
"""

import numpy as np
import pytest

from cntfpga import DefectParams
from cntfpga.array_test import ProbeOracle
from cntfpga.array_test import TestMethod
from cntfpga.array_test import benchmark_mask
from cntfpga.array_test import evaluate_fault_injection
from cntfpga.array_test import fixed_step_row
from cntfpga.array_test import halve_step
from cntfpga.array_test import load_usage_mask
from cntfpga.array_test import make_usage_mask
from cntfpga.array_test import parse_mask
from cntfpga.array_test import read_mask
from cntfpga.array_test import recursive_jump_row
from cntfpga.array_test import recursive_steps
from cntfpga.array_test import run_array_test
from cntfpga.array_test import single_step_row
from cntfpga.array_test import write_benchmark_masks
from cntfpga.array_test import write_mask
from cntfpga.defects import inject_faults
from cntfpga.defects import map_defects_to_faults
from cntfpga.defects import sample_defects
from cntfpga.fabric import ArrayGeometry
from cntfpga.fabric import build_array


def row_oracle(bits):
    return ProbeOracle(np.array([bits], dtype=bool), axis="row")


def segments_of(bits):
    """Exhaustive ground truth: runs of faulty tiles."""
    runs = []
    start = None
    for i, bit in enumerate(list(bits) + [False]):
        if bit and start is None:
            start = i
        elif not bit and start is not None:
            runs.append((start, i - 1))
            start = None
    return runs


def test_step_halving():
    assert [halve_step(s) for s in (20, 10, 5, 3, 2, 1)] == [
        10,
        5,
        3,
        2,
        1,
        1,
    ]
    assert recursive_steps(20) == [20, 10, 5, 3, 2, 1]
    assert recursive_steps(1) == [1]


def test_recursive_jump_finds_the_worked_example():
    bits = [False] * 16
    bits[5:10] = [True] * 5
    oracle = row_oracle(bits)
    assert recursive_jump_row(oracle, 0, 4) == [(5, 9)]
    assert oracle.probes == 11
    # Both walks run the whole schedule 2, 1 and resume at the boundary.
    trace = [p for _, p in oracle.trace]
    assert trace == [0, 4, 8, 6, 5, 9, 13, 11, 10, 14, 15]


def test_clean_row_costs_one_probe_per_jump():
    oracle = row_oracle([False] * 17)
    assert recursive_jump_row(oracle, 0, 4) == []
    assert [p for _, p in oracle.trace] == [0, 4, 8, 12, 16]


def test_fully_faulty_row_is_one_segment():
    oracle = row_oracle([True] * 10)
    assert recursive_jump_row(oracle, 0, 4) == [(0, 9)]


def test_segments_touching_the_ends():
    bits = [True] * 3 + [False] * 10 + [True] * 7
    assert recursive_jump_row(row_oracle(bits), 0, 2) == [(0, 2), (13, 19)]


def test_recursive_jump_is_exact_on_random_single_segment_rows():
    rng = np.random.default_rng(2024)
    for _ in range(10000):
        n = int(rng.integers(16, 65))
        step = int(rng.choice([2, 4, 8, 16]))
        length = int(rng.integers(1, n + 1))
        start = int(rng.integers(0, n - length + 1))
        bits = np.zeros(n, dtype=bool)
        bits[start : start + length] = True
        truth = [(start, start + length - 1)]

        oracle = row_oracle(bits)
        found = recursive_jump_row(oracle, 0, step)
        if length >= step:
            assert found == truth, (n, step, start, length)
            assert oracle.probes < n
        else:
            assert found in ([], truth), (n, step, start, length)


def test_short_segments_between_probes_are_missed():
    bits = [False] * 16
    bits[5:7] = [True, True]
    assert recursive_jump_row(row_oracle(bits), 0, 4) == []


def test_odd_initial_step_is_refused():
    with pytest.raises(ValueError, match="must be even, got 7"):
        recursive_jump_row(row_oracle([False] * 8), 0, 7)
    with pytest.raises(ValueError, match="at least 1, got 0"):
        fixed_step_row(row_oracle([False] * 8), 0, 0)


def test_initial_step_one_is_single_stepping():
    bits = [False, True, True, False, True]
    oracle = row_oracle(bits)
    assert recursive_jump_row(oracle, 0, 1) == [(1, 2), (4, 4)]
    assert oracle.probes == 5


def test_single_step_matches_the_ground_truth():
    rng = np.random.default_rng(7)
    for _ in range(200):
        bits = rng.random(40) < 0.3
        oracle = row_oracle(bits)
        assert single_step_row(oracle, 0) == segments_of(bits)
        assert oracle.probes == 40


def test_fixed_step_reports_first_and_last_failing_probe():
    bits = [False] * 20
    bits[3:14] = [True] * 11
    oracle = row_oracle(bits)
    assert fixed_step_row(oracle, 0, 4) == [(4, 12)]
    assert oracle.probes == 5


def test_oracle_scans_columns_and_skips_masked_tiles():
    flags = np.zeros((4, 3), dtype=bool)
    flags[2, 1] = True
    mask = np.ones((4, 3), dtype=bool)
    mask[0, 1] = False
    oracle = ProbeOracle(flags, mask=mask)
    assert oracle.n_lines == 3
    assert oracle.length(1) == 3
    assert oracle.probe(1, 1)
    assert oracle.tile_of(1, 1) == (2, 1)


def test_oracle_rejects_bad_input():
    with pytest.raises(ValueError, match="does not match"):
        ProbeOracle(np.zeros((2, 2)), mask=np.ones((3, 2)))
    with pytest.raises(ValueError, match="'column' or 'row'"):
        ProbeOracle(np.zeros((2, 2)), axis="diagonal")
    with pytest.raises(ValueError, match="2-D"):
        ProbeOracle(np.zeros(4))


def test_clean_array_has_full_coverage():
    flags = np.zeros((12, 12), dtype=bool)
    for method in TestMethod:
        report = run_array_test(flags, method, 4)
        assert report.coverage == 1.0
        assert report.n_segments == 0


def test_single_step_overhead_is_one_and_coverage_full():
    rng = np.random.default_rng(3)
    flags = rng.random((20, 20)) < 0.1
    report = run_array_test(flags, "single_step")
    assert report.coverage == 1.0
    assert report.overhead == 1.0
    assert report.step == 1


def test_recursive_beats_single_step_on_long_segments():
    flags = np.zeros((49, 10), dtype=bool)
    flags[10:30, 2] = True
    flags[25:45, 7] = True
    recursive = run_array_test(flags, "recursive", 8)
    single = run_array_test(flags, "single_step")
    assert recursive.coverage == 1.0
    assert recursive.probes < single.probes
    assert recursive.segments == {2: [(10, 29)], 7: [(25, 44)]}


def test_masked_tiles_leave_coverage_and_overhead():
    flags = np.zeros((8, 2), dtype=bool)
    flags[:, 0] = True
    mask = np.ones((8, 2), dtype=bool)
    mask[:, 0] = False
    report = run_array_test(flags, "single_step", mask=mask)
    assert report.coverage == 1.0
    assert report.probes == 8
    assert report.identified == frozenset()


def test_row_axis_scans_rows():
    flags = np.zeros((3, 16), dtype=bool)
    flags[1, 4:12] = True
    report = run_array_test(flags, "recursive", 4, axis="row")
    assert report.segments == {1: [(4, 11)]}
    assert report.as_row()["method"] == "recursive"


def alternating_runs(rng, n, shortest, longest):
    """A line of alternating clean and faulty runs of bounded length."""
    bits = np.zeros(n, dtype=bool)
    position = int(rng.integers(0, shortest))
    faulty = bool(rng.integers(0, 2))
    while position < n:
        length = int(rng.integers(shortest, longest + 1))
        bits[position : position + length] = faulty
        position += length
        faulty = not faulty
    return bits


def test_step_twelve_costs_more_than_step_eight_on_long_runs():
    # 12 recurses through 6, 3, 2, 1; 8 only through 4, 2, 1.
    rng = np.random.default_rng(5)
    flags = np.array([alternating_runs(rng, 120, 12, 16) for _ in range(60)])
    step8 = run_array_test(flags, "recursive", 8, axis="row")
    step12 = run_array_test(flags, "recursive", 12, axis="row")
    assert step12.overhead > step8.overhead
    assert step8.coverage == step12.coverage == 1.0


def seeded_flags(p_m, seed):
    """Tile grid of a 49x49 array under the shipped array-test defects."""
    params = DefectParams(
        p_m=p_m, l_mu=28.0, l_sigma=4.0, sites_per_tile=600
    )
    geometry = ArrayGeometry(49, 49, lut_inputs=2)
    defects = sample_defects(params, geometry, seed)
    return map_defects_to_faults(defects, build_array(geometry, seed))


@pytest.mark.parametrize("p_m", [1e-4, 5e-4])
def test_recursive_dominates_fixed_step_per_array(p_m):
    for seed in range(3):
        fault_map = seeded_flags(p_m, seed)
        for step in (4, 8, 12, 16, 20):
            recursive = run_array_test(fault_map, "recursive", step)
            fixed = run_array_test(fault_map, "fixed_step", step)
            assert recursive.coverage >= fixed.coverage, (seed, step)
            assert recursive.overhead <= 1.0
            assert recursive.overhead >= fixed.overhead


def test_step_four_coverage_and_overhead_on_a_seeded_run():
    reports = {"recursive": [], "fixed_step": []}
    for seed in range(4):
        fault_map = seeded_flags(3e-4, seed)
        for method, found in reports.items():
            found.append(run_array_test(fault_map, method, 4))
    recursive = reports["recursive"]
    fixed = reports["fixed_step"]
    assert np.mean([r.coverage for r in recursive]) >= 0.97
    assert 0.5 <= np.mean([r.coverage for r in fixed]) <= 0.8
    assert 0.4 <= np.mean([r.overhead for r in recursive]) <= 0.65


class TestFaultInjectionTable:
    @classmethod
    def setup_class(cls):
        geometry = ArrayGeometry(16, 16, lut_inputs=4)
        counts = {"stuck_at_0": 40, "stuck_at_1": 30, "mux_override": 20}
        cls.fault_map = inject_faults(
            geometry, "clustered", counts, seed=11, clusters=4
        )
        cls.table = evaluate_fault_injection(
            cls.fault_map, ("single_step", "recursive", "fixed_step")
        )

    def test_shape(self):
        assert self.table.index.tolist() == ["MUX", "S@0", "S@1", "Total"]
        assert self.table.columns.tolist() == [
            "injected",
            "single_step",
            "recursive",
            "fixed_step",
        ]
        assert self.table.loc["Total", "injected"] == 90
        assert self.table.loc["MUX", "injected"] == 20

    def test_single_step_finds_every_injected_fault(self):
        assert (self.table["single_step"] == self.table["injected"]).all()

    def test_no_method_beats_single_step(self):
        for method in ("recursive", "fixed_step"):
            assert (self.table[method] <= self.table["single_step"]).all()


class TestAlignedInjectionRates:
    """Detection shares of a seeded aligned injection on 49x49 arrays."""

    @classmethod
    def setup_class(cls):
        geometry = ArrayGeometry(49, 49, lut_inputs=4)
        counts = {"stuck_at_0": 347, "stuck_at_1": 232, "mux_override": 231}
        tables = [
            evaluate_fault_injection(
                inject_faults(geometry, "aligned", counts, seed=seed),
                ("single_step", "recursive", "fixed_step"),
            )
            for seed in range(10)
        ]
        cls.total = sum(tables)

    def share(self, method):
        return self.total.loc["Total", method] / self.total.loc[
            "Total", "injected"
        ]

    def test_single_step_detects_everything(self):
        assert self.share("single_step") == 1.0

    def test_recursive_and_fixed_step_shares(self):
        assert 0.84 <= self.share("recursive") <= 0.94
        assert 0.53 <= self.share("fixed_step") <= 0.66

    def test_stuck_at_zero_is_the_most_detected_kind(self):
        for method in ("recursive", "fixed_step"):
            assert self.total[method].drop("Total").idxmax() == "S@0"


def test_parse_mask_errors():
    with pytest.raises(ValueError, match="other than 0 and 1"):
        parse_mask("0102\n")
    with pytest.raises(ValueError, match="same length"):
        parse_mask("01\n011\n")
    with pytest.raises(ValueError, match="empty"):
        parse_mask("\n\n")


def test_mask_files(tmp_path):
    mask = make_usage_mask((6, 9), 0.5, seed=4)
    path = write_mask(str(tmp_path / "m.txt"), mask)
    np.testing.assert_array_equal(read_mask(path), mask)
    np.testing.assert_array_equal(load_usage_mask(path, (6, 9), 0), mask)


def test_benchmark_masks_are_reproducible(tmp_path):
    a = load_usage_mask("benchmark:mem", (49, 49), seed=2)
    b = benchmark_mask("MEM", (49, 49), seed=2)
    np.testing.assert_array_equal(a, b)
    assert 0.5 < a.mean() < 0.7
    paths = write_benchmark_masks(str(tmp_path), (10, 10), seed=1)
    assert len(paths) == 10
    assert read_mask(paths["PCI"]).shape == (10, 10)


def test_unknown_benchmark_and_bad_utilisation():
    with pytest.raises(ValueError, match="Unknown benchmark 'XYZ'"):
        benchmark_mask("XYZ", (4, 4), seed=1)
    with pytest.raises(ValueError, match="must lie in \\[0, 1\\]"):
        make_usage_mask((4, 4), 1.5, seed=1)
