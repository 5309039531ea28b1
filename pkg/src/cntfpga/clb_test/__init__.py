from ._sessions import CarrySettings
from ._sessions import SessionStyle
from ._sessions import TestConfiguration
from ._sessions import TestSession
from ._sessions import compressed_patterns
from ._sessions import gen_carry_chain_configs
from ._sessions import gen_session
from ._sessions import improved_configs
from ._sessions import traditional_configs
from ._sessions import transistors_ta_tb
from ._simulation import SessionResult
from ._simulation import coverage_of
from ._simulation import fault_detected
from ._simulation import session_detects
from ._simulation import simulate_session
from ._timing import configuration_overhead
from ._timing import estimate_test_time
from ._timing import session_time_table
from ._timing import time_reduction

__all__ = [
    "CarrySettings",
    "SessionResult",
    "SessionStyle",
    "TestConfiguration",
    "TestSession",
    "compressed_patterns",
    "configuration_overhead",
    "coverage_of",
    "estimate_test_time",
    "fault_detected",
    "gen_carry_chain_configs",
    "gen_session",
    "improved_configs",
    "session_detects",
    "session_time_table",
    "simulate_session",
    "time_reduction",
    "traditional_configs",
    "transistors_ta_tb",
]
