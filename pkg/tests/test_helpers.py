# -*- coding: utf-8 -*-

"""This module is designed to test the helper functions.

SPDX-FileCopyrightText: cntfpga developer group

SPDX-License-Identifier: MIT

"""

import os

from cntfpga import helpers


def test_creation_of_output_path(tmp_path):
    p = helpers.get_output_path(str(tmp_path / "a" / "b"))
    assert os.path.isdir(p)
    assert os.path.isabs(p)
    assert helpers.get_output_path(p) == p


def test_flatten():
    nested = {"a": {"b": {"c": 1}, "d": 2}, "e": 3}
    assert helpers.flatten(nested) == {"a_b_c": 1, "a_d": 2, "e": 3}
    assert helpers.flatten({}) == {}


def test_parity():
    assert [helpers.parity(v) for v in range(8)] == [0, 1, 1, 0, 1, 0, 0, 1]
