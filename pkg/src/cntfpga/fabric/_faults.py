# -*- coding: utf-8 -*-

"""Fault taxonomy of the CNT-based CLB.

A fault is a small immutable value: its kind plus the SRAM cell, forced
bit, pass transistor or shorted SRAM pair it refers to. Faults are hashable
so detection results can be cached per fault.

SPDX-FileCopyrightText: cntfpga developer group

SPDX-License-Identifier: MIT

"""

from enum import Enum
from typing import NamedTuple
from typing import Optional
from typing import Tuple


class FaultType(Enum):
    NONE = "none"
    STUCK_AT_0 = "stuck_at_0"
    STUCK_AT_1 = "stuck_at_1"
    MUX_OVERRIDE = "mux_override"
    MUX_ALWAYS_SELECT = "mux_always_select"
    WIRED_AND = "wired_and"
    WIRED_OR = "wired_or"
    STUCK_ON = "stuck_on"
    OPEN = "open"


# Kind codes of exported fault maps.
KIND_CODES = {
    FaultType.STUCK_AT_0: "0",
    FaultType.STUCK_AT_1: "1",
    FaultType.MUX_OVERRIDE: "M",
    FaultType.MUX_ALWAYS_SELECT: "A",
    FaultType.WIRED_AND: "W",
    FaultType.WIRED_OR: "W",
    FaultType.OPEN: "O",
    FaultType.STUCK_ON: "S",
}

CARRY_FAULT_TYPES = (
    FaultType.NONE,
    FaultType.STUCK_AT_0,
    FaultType.STUCK_AT_1,
)


class Fault(NamedTuple):
    """One fault of a LUT or carry-chain gate.

    `index` is the forced bit of MuxOverride, the SRAM cell of
    MuxAlwaysSelect, the pass transistor of StuckOn and, when given, the
    SRAM cell of a stuck-at fault. Without a cell a stuck-at fault holds the
    LUT output. `pair` holds the shorted cells of WiredAnd and WiredOr.
    """

    kind: FaultType = FaultType.NONE
    index: Optional[int] = None
    pair: Optional[Tuple[int, int]] = None

    @property
    def is_fault(self):
        return self.kind is not FaultType.NONE

    @property
    def code(self):
        return KIND_CODES.get(self.kind, "")

    def __str__(self):
        if self.pair is not None:
            return "{0}{1}".format(self.kind.value, tuple(self.pair))
        if self.index is not None:
            return "{0}({1})".format(self.kind.value, self.index)
        return self.kind.value


NO_FAULT = Fault()


def stuck_at(value, cell=None):
    """Stuck-at fault on the LUT output or, with `cell`, on one SRAM cell.

    >>> stuck_at(1).kind
    <FaultType.STUCK_AT_1: 'stuck_at_1'>
    """
    if value not in (0, 1):
        raise ValueError("A stuck-at value is 0 or 1, got {0}.".format(value))
    kind = FaultType.STUCK_AT_1 if value else FaultType.STUCK_AT_0
    return Fault(kind, cell)


def mux_override(forced_bit):
    return Fault(FaultType.MUX_OVERRIDE, int(forced_bit))


def mux_always_select(cell):
    return Fault(FaultType.MUX_ALWAYS_SELECT, int(cell))


def wired_and(a, b):
    return Fault(FaultType.WIRED_AND, pair=(int(a), int(b)))


def wired_or(a, b):
    return Fault(FaultType.WIRED_OR, pair=(int(a), int(b)))


def stuck_on(transistor):
    return Fault(FaultType.STUCK_ON, int(transistor))


def open_fault():
    return Fault(FaultType.OPEN)


def check_fault(fault, k):
    """Raise a ValueError if `fault` does not fit a `k`-input LUT.

    >>> check_fault(wired_and(2, 2), 3)
    Traceback (most recent call last):
     ...
    ValueError: The shorted SRAM cells of wired_and(2, 2) must differ.
    """
    size = 2**k
    if fault.index is not None and not 0 <= fault.index < size:
        msg = "Index of {0} must be smaller than 2^k = {1}."
        raise ValueError(msg.format(fault, size))
    if fault.kind in (FaultType.WIRED_AND, FaultType.WIRED_OR):
        a, b = fault.pair
        if a == b:
            msg = "The shorted SRAM cells of {0} must differ."
            raise ValueError(msg.format(fault))
        if not (0 <= a < size and 0 <= b < size):
            msg = "Shorted SRAM cells of {0} must be smaller than 2^k = {1}."
            raise ValueError(msg.format(fault, size))
    needs_index = (
        FaultType.MUX_OVERRIDE,
        FaultType.MUX_ALWAYS_SELECT,
        FaultType.STUCK_ON,
    )
    if fault.kind in needs_index and fault.index is None:
        msg = "{0} needs an index."
        raise ValueError(msg.format(fault.kind.value))
