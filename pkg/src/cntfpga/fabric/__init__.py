from ._array import CLB_AREA_T
from ._array import T_AREA_UM2
from ._array import ArrayGeometry
from ._array import Clb
from ._array import FpgaArray
from ._array import Site
from ._array import build_array
from ._array import clb_pitch
from ._carry_chain import CarryChainStage
from ._carry_chain import carry_chain_eval
from ._carry_chain import carry_chain_trace
from ._faults import KIND_CODES
from ._faults import NO_FAULT
from ._faults import Fault
from ._faults import FaultType
from ._faults import check_fault
from ._faults import mux_always_select
from ._faults import mux_override
from ._faults import open_fault
from ._faults import stuck_at
from ._faults import stuck_on
from ._faults import wired_and
from ._faults import wired_or
from ._lut import LutInstance
from ._lut import all_input_vectors
from ._lut import lut_eval
from ._lut import lut_eval_many
from ._lut import lut_eval_selected
from ._lut import lut_index

__all__ = [
    "ArrayGeometry",
    "CarryChainStage",
    "Clb",
    "CLB_AREA_T",
    "Fault",
    "FaultType",
    "FpgaArray",
    "KIND_CODES",
    "LutInstance",
    "NO_FAULT",
    "Site",
    "T_AREA_UM2",
    "all_input_vectors",
    "build_array",
    "carry_chain_eval",
    "carry_chain_trace",
    "check_fault",
    "clb_pitch",
    "lut_eval",
    "lut_eval_many",
    "lut_eval_selected",
    "lut_index",
    "mux_always_select",
    "mux_override",
    "open_fault",
    "stuck_at",
    "stuck_on",
    "wired_and",
    "wired_or",
]
