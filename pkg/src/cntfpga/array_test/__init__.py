from ._masks import BENCHMARK_PREFIX
from ._masks import BENCHMARK_UTILISATION
from ._masks import benchmark_mask
from ._masks import load_usage_mask
from ._masks import make_usage_mask
from ._masks import parse_mask
from ._masks import read_mask
from ._masks import write_benchmark_masks
from ._masks import write_mask
from ._probing import ProbeOracle
from ._probing import TestMethod
from ._probing import fixed_step_row
from ._probing import halve_step
from ._probing import recursive_jump_row
from ._probing import recursive_steps
from ._probing import single_step_row
from ._report import KIND_LABELS
from ._report import TestReport
from ._report import evaluate_fault_injection
from ._report import run_array_test

__all__ = [
    "BENCHMARK_PREFIX",
    "BENCHMARK_UTILISATION",
    "KIND_LABELS",
    "ProbeOracle",
    "TestMethod",
    "TestReport",
    "benchmark_mask",
    "evaluate_fault_injection",
    "fixed_step_row",
    "load_usage_mask",
    "halve_step",
    "make_usage_mask",
    "parse_mask",
    "read_mask",
    "recursive_jump_row",
    "recursive_steps",
    "run_array_test",
    "single_step_row",
    "write_benchmark_masks",
    "write_mask",
]
