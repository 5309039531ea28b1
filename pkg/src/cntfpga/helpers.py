# -*- coding: utf-8 -*-

"""
This is a collection of helper functions which work on their own and can be
used by various classes.

SPDX-FileCopyrightText: cntfpga developer group

SPDX-License-Identifier: MIT

"""

import os
from collections.abc import MutableMapping


def get_output_path(path):
    """Returns the output directory and creates it if necessary."""
    path = os.path.abspath(os.path.expanduser(path))
    if not os.path.isdir(path):
        os.makedirs(path)
    return path


def flatten(d, parent_key="", sep="_"):
    """
    Flatten dictionary by compressing keys.

    d : (dictionary)
    parent_key : (do not use this, used internally for recursion)
    sep : separator for flattening keys

    Returns
    -------
    dict

    Examples
    --------
    >>> flatten({"geometry": {"rows": 8, "cols": 8}, "samples": 1}, sep=".")
    {'geometry.rows': 8, 'geometry.cols': 8, 'samples': 1}
    """
    items = []
    for k, v in d.items():
        new_key = parent_key + sep + str(k) if parent_key else str(k)
        if isinstance(v, MutableMapping):
            items.extend(flatten(v, new_key, sep=sep).items())
        else:
            items.append((new_key, v))
    return dict(items)


def parity(value):
    """Returns the parity of the set bits of an integer.

    Examples
    --------
    >>> parity(0b1011)
    1
    >>> parity(0)
    0
    """
    return bin(value).count("1") & 1
