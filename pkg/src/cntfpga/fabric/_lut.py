# -*- coding: utf-8 -*-

"""LUT evaluation under faults.

SRAM cell `b` of a k-input LUT holds the output for the input vector whose
bits, I0 first, spell `b`: index(inputs) = sum(inputs[i] * 2**i).

SPDX-FileCopyrightText: cntfpga developer group

SPDX-License-Identifier: MIT

"""

import numpy as np

from cntfpga.fabric._faults import NO_FAULT
from cntfpga.fabric._faults import FaultType
from cntfpga.fabric._faults import check_fault


def lut_inputs_of(config_bits):
    """Number of inputs k of a LUT with the given configuration length."""
    size = len(config_bits)
    k = size.bit_length() - 1
    if size < 1 or 2**k != size:
        msg = "Configuration length {0} is not a power of two."
        raise ValueError(msg.format(size))
    return k


class LutInstance:
    """A k-input LUT: 2^k configuration bits and at most one fault.

    Parameters
    ----------
    config_bits : sequence of {0, 1}
        Contents of the SRAM cells, cell 0 first.
    fault : Fault
        Fault of the LUT, `NO_FAULT` by default.
    """

    def __init__(self, config_bits, fault=NO_FAULT):
        self.config_bits = np.asarray(config_bits, dtype=np.uint8)
        self.k = lut_inputs_of(self.config_bits)
        check_fault(fault, self.k)
        self.fault = fault

    def __repr__(self):
        bits = "".join(str(b) for b in self.config_bits)
        return "LutInstance(config_bits='{0}', fault={1})".format(
            bits, self.fault
        )


def lut_index(inputs):
    """Selected SRAM cell for an input vector, I0 first.

    >>> lut_index([1, 0, 1])
    5
    """
    return sum(int(bit) << i for i, bit in enumerate(inputs))


def lut_eval_many(config_bits, fault, inputs):
    """Evaluate a LUT for every row of an (n, k) matrix of input bits.

    Parameters
    ----------
    config_bits : array-like of {0, 1}, length 2^k
    fault : Fault
    inputs : array-like of {0, 1}, shape (n, k)

    Returns
    -------
    numpy.ndarray of uint8, shape (n,)

    Examples
    --------
    >>> from cntfpga.fabric import NO_FAULT
    >>> lut_eval_many([0, 1, 1, 0], NO_FAULT, [[0, 0], [1, 0], [1, 1]])
    array([0, 1, 0], dtype=uint8)
    """
    config = np.asarray(config_bits, dtype=np.uint8)
    k = lut_inputs_of(config)
    inputs = np.atleast_2d(np.asarray(inputs, dtype=np.int64))
    if inputs.shape[1] != k:
        msg = "Expected {0} input bits per vector, got {1}."
        raise ValueError(msg.format(k, inputs.shape[1]))
    selected = inputs @ (1 << np.arange(k, dtype=np.int64))
    return lut_eval_selected(config, fault, selected)


def lut_eval_selected(config, fault, selected):
    """Output of a LUT when the SRAM cells `selected` are addressed.

    >>> from cntfpga.fabric import stuck_on
    >>> lut_eval_selected([0, 1, 1, 0], stuck_on(2), [2, 3]).tolist()
    [1, 1]
    """
    config = np.asarray(config, dtype=np.uint8)
    selected = np.asarray(selected, dtype=np.int64)
    kind = fault.kind
    n = len(selected)
    if kind is FaultType.NONE:
        return config[selected]
    if kind in (FaultType.STUCK_AT_0, FaultType.STUCK_AT_1):
        value = 1 if kind is FaultType.STUCK_AT_1 else 0
        if fault.index is None:
            return np.full(n, value, dtype=np.uint8)
        config = config.copy()
        config[fault.index] = value
        return config[selected]
    if kind in (FaultType.MUX_OVERRIDE, FaultType.MUX_ALWAYS_SELECT):
        return np.full(n, config[fault.index], dtype=np.uint8)
    if kind in (FaultType.WIRED_AND, FaultType.WIRED_OR):
        a, b = fault.pair
        if kind is FaultType.WIRED_AND:
            shorted = config[a] & config[b]
        else:
            shorted = config[a] | config[b]
        out = config[selected]
        out[(selected == a) | (selected == b)] = shorted
        return out
    if kind is FaultType.STUCK_ON:
        # The conducting sibling wins when its neighbour path is selected.
        out = config[selected]
        out[selected == (fault.index ^ 1)] = config[fault.index]
        return out
    if kind is FaultType.OPEN:
        return np.zeros(n, dtype=np.uint8)
    raise ValueError("Unknown fault kind {0}.".format(kind))


def lut_eval(lut, inputs):
    """Output bit of `lut` for one input vector.

    Examples
    --------
    >>> lut = LutInstance([0, 1, 1, 0, 1, 0, 0, 1])
    >>> lut_eval(lut, [1, 0, 1])
    0
    """
    inputs = np.asarray(inputs)
    if inputs.ndim != 1 or len(inputs) != lut.k:
        msg = "Expected {0} input bits, got {1}."
        raise ValueError(msg.format(lut.k, len(np.atleast_1d(inputs))))
    return int(lut_eval_many(lut.config_bits, lut.fault, inputs[None, :])[0])


def all_input_vectors(k):
    """All 2^k input vectors of a k-input LUT in address order.

    >>> all_input_vectors(2).tolist()
    [[0, 0], [1, 0], [0, 1], [1, 1]]
    """
    addresses = np.arange(2**k, dtype=np.int64)
    return ((addresses[:, None] >> np.arange(k)) & 1).astype(np.uint8)
