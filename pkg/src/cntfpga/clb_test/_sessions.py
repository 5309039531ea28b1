# -*- coding: utf-8 -*-

"""Test sessions of a single CLB.

A session is an ordered list of (configuration, input patterns) pairs.

* Traditional: k + 1 configurations with all 2^k patterns each.
  Configuration C_i (i < k) stores bit i of the address in every SRAM cell,
  C_k stores the complement of bit 0.
* WithCarryChain: the traditional configurations and the two carry-chain
  configurations, one pattern each.
* Improved: the split LUT multiplexer observes path j on output O2 and path
  j + 2^(k-1) on O2' at once in test mode (ET = 0). Two configurations, the
  address parity and its complement, with 2^(k-1) patterns each. C2 gets
  the all-ones pattern in normal mode to expose stuck-on faults of the two
  pass transistors TA and TB that join the halves.

SPDX-FileCopyrightText: cntfpga developer group

SPDX-License-Identifier: MIT

"""

from enum import Enum
from functools import lru_cache
from typing import NamedTuple
from typing import Optional
from typing import Tuple

import numpy as np

from cntfpga.fabric import all_input_vectors
from cntfpga.helpers import parity


class SessionStyle(Enum):
    TRADITIONAL = "traditional"
    WITH_CARRY_CHAIN = "with_carry_chain"
    IMPROVED = "improved"


class CarrySettings(NamedTuple):
    """Drive of the carry chain: carry-in and the value on every external
    terminal. The LUTs of a carry configuration output 1 and so select the
    propagated carry in every stage."""

    carry_in: int
    external: int


class TestConfiguration(NamedTuple):
    __test__ = False

    config_id: str
    lut_config_bits: Tuple[int, ...]
    et_mode: bool = True
    carry_chain_settings: Optional[CarrySettings] = None


class TestSession(NamedTuple):
    __test__ = False

    k: int
    style: SessionStyle
    configurations: Tuple[TestConfiguration, ...]
    patterns: Tuple[np.ndarray, ...]
    extra_pattern: bool = False

    @property
    def n_configurations(self):
        return len(self.configurations)

    @property
    def n_patterns(self):
        return sum(len(p) for p in self.patterns)

    def as_dict(self):
        return {
            "k": self.k,
            "style": self.style.value,
            "extra_pattern": self.extra_pattern,
            "configurations": [
                {
                    "config_id": c.config_id,
                    "lut_config_bits": "".join(
                        str(b) for b in c.lut_config_bits
                    ),
                    "et_mode": c.et_mode,
                    "carry_chain": (
                        None
                        if c.carry_chain_settings is None
                        else c.carry_chain_settings._asdict()
                    ),
                    "patterns": [
                        "".join(str(b) for b in row) for row in p.tolist()
                    ],
                }
                for c, p in zip(self.configurations, self.patterns)
            ],
        }


def _check_k(k):
    if not 2 <= k <= 8:
        msg = "Sessions are defined for 2 <= k <= 8, got k = {0}."
        raise ValueError(msg.format(k))


def traditional_configs(k):
    """The k + 1 walking-bit configurations.

    >>> [c.lut_config_bits for c in traditional_configs(2)]
    [(0, 1, 0, 1), (0, 0, 1, 1), (1, 0, 1, 0)]
    """
    _check_k(k)
    size = 2**k
    configs = [
        TestConfiguration(
            "C{0}".format(i + 1),
            tuple((b >> i) & 1 for b in range(size)),
        )
        for i in range(k)
    ]
    configs.append(
        TestConfiguration(
            "C{0}".format(k + 1), tuple(1 - (b & 1) for b in range(size))
        )
    )
    return configs


def gen_carry_chain_configs(k=6):
    """The two carry-chain test configurations.

    Every LUT outputs 1, so every MUX propagates the carry, and every
    external terminal is 1. Configuration 1 feeds carry-in 0: each MUX
    outputs 0 and each XOR 1. Configuration 2 feeds carry-in 1 and flips
    every pair.

    >>> [c.carry_chain_settings for c in gen_carry_chain_configs(2)]
    [CarrySettings(carry_in=0, external=1), \
CarrySettings(carry_in=1, external=1)]
    """
    ones = (1,) * 2**k
    return [
        TestConfiguration("CC1", ones, True, CarrySettings(0, 1)),
        TestConfiguration("CC2", ones, True, CarrySettings(1, 1)),
    ]


def improved_configs(k):
    size = 2**k
    c1 = tuple(parity(b) for b in range(size))
    c2 = tuple(1 - bit for bit in c1)
    return [
        TestConfiguration("C1", c1, et_mode=False),
        TestConfiguration("C2", c2, et_mode=False),
    ]


def compressed_patterns(k):
    """Test-mode patterns of the split LUT: all addresses with I(k-1) = 0.

    >>> compressed_patterns(3).tolist()
    [[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 0]]
    """
    lower = all_input_vectors(k - 1)
    return np.hstack([lower, np.zeros((len(lower), 1), dtype=np.uint8)])


def transistors_ta_tb(k):
    """Pass transistors TA and TB joining the halves of the split LUT."""
    half = 2 ** (k - 1)
    return half - 2, 2**k - 2


@lru_cache(maxsize=None)
def gen_session(k, style, extra_pattern=True):
    """Build the test session of a k-input CLB.

    Parameters
    ----------
    k : int
        LUT inputs, 2 <= k <= 8.
    style : SessionStyle or str
    extra_pattern : bool
        Append the all-ones pattern to C2 of an improved session.

    Examples
    --------
    >>> s = gen_session(3, "traditional")
    >>> s.n_configurations, [len(p) for p in s.patterns]
    (4, [8, 8, 8, 8])
    >>> s = gen_session(3, "improved")
    >>> s.n_configurations, [len(p) for p in s.patterns]
    (2, [4, 5])
    >>> gen_session(6, "with_carry_chain").n_configurations
    9
    """
    _check_k(k)
    style = SessionStyle(style)
    if style is SessionStyle.IMPROVED:
        configs = improved_configs(k)
        compressed = compressed_patterns(k)
        second = compressed
        if extra_pattern:
            second = np.vstack([compressed, np.ones((1, k), dtype=np.uint8)])
        patterns = [compressed, second]
    else:
        configs = traditional_configs(k)
        patterns = [all_input_vectors(k)] * len(configs)
        extra_pattern = False
        if style is SessionStyle.WITH_CARRY_CHAIN:
            carry = gen_carry_chain_configs(k)
            configs += carry
            patterns += [np.zeros((1, k), dtype=np.uint8)] * len(carry)
    for p in patterns:
        p.setflags(write=False)
    return TestSession(
        k, style, tuple(configs), tuple(patterns), bool(extra_pattern)
    )
