# -*- coding: utf-8 -*-

"""
Private helper functions.

SPDX-FileCopyrightText: cntfpga developer group

SPDX-License-Identifier: MIT

"""

from warnings import warn

from oemof.tools import debugging


def warn_suspicious(msg, *args):
    """Raises a SuspiciousUsageWarning with a formatted message."""
    text = msg.format(*args) + (
        " If this is intended and you know what you are doing you can "
        "disable the SuspiciousUsageWarning globally."
    )
    warn(text, debugging.SuspiciousUsageWarning, stacklevel=3)


def warn_experimental(msg, *args):
    """Raises an ExperimentalFeatureWarning with a formatted message."""
    warn(
        msg.format(*args),
        debugging.ExperimentalFeatureWarning,
        stacklevel=3,
    )
