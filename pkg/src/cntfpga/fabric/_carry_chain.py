# -*- coding: utf-8 -*-

"""Carry chain of a CLB.

Stage i holds a MUX and an XOR gate. The LUT output selects the MUX input:
0 passes the external terminal, 1 propagates the incoming carry. The XOR
gate adds the incoming carry and the external terminal.

SPDX-FileCopyrightText: cntfpga developer group

SPDX-License-Identifier: MIT

"""

from typing import NamedTuple

from cntfpga.fabric._faults import CARRY_FAULT_TYPES
from cntfpga.fabric._faults import NO_FAULT
from cntfpga.fabric._faults import Fault
from cntfpga.fabric._faults import FaultType


class CarryChainStage(NamedTuple):
    mux_fault: Fault = NO_FAULT
    xor_fault: Fault = NO_FAULT
    lut_ref: int = 0

    def check(self):
        for name in ("mux_fault", "xor_fault"):
            fault = getattr(self, name)
            if fault.kind not in CARRY_FAULT_TYPES:
                msg = "Only stuck-at faults fit a carry-chain gate, got {0}."
                raise ValueError(msg.format(fault))
        return self


def _gate(value, fault):
    if fault.kind is FaultType.STUCK_AT_0:
        return 0
    if fault.kind is FaultType.STUCK_AT_1:
        return 1
    return value


def carry_chain_trace(stages, lut_outputs, carry_in, external):
    """Outputs of every MUX and XOR gate of the chain.

    Returns
    -------
    tuple of two lists
        MUX outputs (the carry leaving each stage) and XOR outputs (sums).
    """
    if not len(stages) == len(lut_outputs) == len(external):
        msg = (
            "Carry chain needs one LUT output and one external bit per "
            "stage: {0} stages, {1} LUT outputs, {2} external bits."
        )
        raise ValueError(
            msg.format(len(stages), len(lut_outputs), len(external))
        )
    carry = int(carry_in)
    muxes = []
    sums = []
    for stage, select, ext in zip(stages, lut_outputs, external):
        sums.append(_gate(carry ^ int(ext), stage.xor_fault))
        mux = carry if int(select) else int(ext)
        carry = _gate(mux, stage.mux_fault)
        muxes.append(carry)
    return muxes, sums


def carry_chain_eval(stages, lut_outputs, carry_in, external):
    """Sum bits and carry-out of a carry chain.

    Parameters
    ----------
    stages : list of CarryChainStage
    lut_outputs : sequence of {0, 1}
        MUX select per stage.
    carry_in : {0, 1}
    external : sequence of {0, 1}
        External terminal per stage.

    Examples
    --------
    >>> carry_chain_eval([CarryChainStage()], [1], 0, [1])
    ([1], 0)
    >>> carry_chain_eval([CarryChainStage()] * 3, [0, 0, 0], 1, [1, 0, 1])
    ([0, 1, 1], 1)
    """
    muxes, sums = carry_chain_trace(stages, lut_outputs, carry_in, external)
    return sums, muxes[-1] if muxes else int(carry_in)
