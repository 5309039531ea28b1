# -*- coding: utf-8 -*-

"""Apply a test session to a CLB and compare against the fault-free
responses.

Every fault site of the CLB is simulated on its own; a site counts as
detected if any observed output of any configuration differs from the
golden output.

SPDX-FileCopyrightText: cntfpga developer group

SPDX-License-Identifier: MIT

"""

import logging
from functools import lru_cache
from typing import FrozenSet
from typing import NamedTuple

import numpy as np

from cntfpga.clb_test._sessions import gen_session
from cntfpga.clb_test._sessions import transistors_ta_tb
from cntfpga.fabric import NO_FAULT
from cntfpga.fabric import CarryChainStage
from cntfpga.fabric import FaultType
from cntfpga.fabric import Site
from cntfpga.fabric import carry_chain_trace
from cntfpga.fabric import lut_eval_many
from cntfpga.fabric import lut_eval_selected


class SessionResult(NamedTuple):
    passed: bool
    detected: FrozenSet[Site]


def _split_lut_mismatch(config, fault, patterns, k):
    # Rows with I(k-1) = 0 run in test mode with TA and TB cut off. Every
    # row reads the contacts behind both halves, the normal-mode row too.
    half = 2 ** (k - 1)
    config = np.asarray(config, dtype=np.uint8)
    address = patterns.astype(np.int64) @ (1 << np.arange(k, dtype=np.int64))
    low = address & (half - 1)
    test = address < half
    masked = fault
    if fault.kind is FaultType.STUCK_ON:
        if fault.index in transistors_ta_tb(k):
            masked = NO_FAULT
    for rows, active in ((test, masked), (~test, fault)):
        if not rows.any():
            continue
        for path in (low[rows], low[rows] + half):
            observed = lut_eval_selected(config, active, path)
            if np.any(observed != config[path]):
                return True
    return False


def _lut_mismatch(configuration, fault, patterns, k):
    if not configuration.et_mode:
        return _split_lut_mismatch(
            configuration.lut_config_bits, fault, patterns, k
        )
    config = configuration.lut_config_bits
    observed = lut_eval_many(config, fault, patterns)
    golden = lut_eval_many(config, NO_FAULT, patterns)
    return bool(np.any(observed != golden))


def _carry_mismatch(configuration, pattern, n_stages, lut_faults, gates):
    settings = configuration.carry_chain_settings
    config = configuration.lut_config_bits
    external = [settings.external] * n_stages

    def run(lut_faults, gates):
        selects = [
            int(lut_eval_many(config, lut_faults.get(i, NO_FAULT), pattern)[0])
            for i in range(n_stages)
        ]
        stages = [
            CarryChainStage(
                gates.get((i, "mux"), NO_FAULT),
                gates.get((i, "xor"), NO_FAULT),
                i,
            )
            for i in range(n_stages)
        ]
        return carry_chain_trace(stages, selects, settings.carry_in, external)

    return run(lut_faults, gates) != run({}, {})


def session_detects(session, n_luts, lut_faults=None, carry_faults=None):
    """True if `session` observes a difference caused by the faults.

    Parameters
    ----------
    session : TestSession
    n_luts : int
        LUTs and carry stages of the CLB.
    lut_faults : dict
        LUT index to Fault.
    carry_faults : dict
        (stage, "mux" | "xor") to Fault.
    """
    lut_faults = lut_faults or {}
    carry_faults = carry_faults or {}
    for configuration, patterns in zip(
        session.configurations, session.patterns
    ):
        if configuration.carry_chain_settings is not None:
            if (lut_faults or carry_faults) and _carry_mismatch(
                configuration, patterns, n_luts, lut_faults, carry_faults
            ):
                return True
            continue
        for fault in lut_faults.values():
            if _lut_mismatch(configuration, fault, patterns, session.k):
                return True
    return False


@lru_cache(maxsize=None)
def fault_detected(
    fault, k, style, component="lut", index=0, n_luts=4, extra_pattern=True
):
    """Whether the session of `style` detects a single fault.

    Examples
    --------
    >>> from cntfpga.fabric import stuck_on
    >>> fault_detected(stuck_on(2), 3, "improved")
    True
    >>> fault_detected(stuck_on(2), 3, "improved", extra_pattern=False)
    False
    """
    session = gen_session(k, style, extra_pattern)
    if component == "lut":
        return session_detects(session, n_luts, lut_faults={index: fault})
    return session_detects(
        session, n_luts, carry_faults={(index, component): fault}
    )


def _site_fault(clb, site):
    if site.component == "lut":
        return clb.luts[site.index].fault
    stage = clb.carry[site.index]
    return getattr(stage, site.component + "_fault")


def simulate_session(clb, session):
    """Apply `session` to `clb`.

    Returns
    -------
    SessionResult
        `passed` is False if at least one fault site is detected;
        `detected` holds the detected sites.
    """
    if clb.k != session.k:
        msg = "Session for k = {0} applied to a CLB with k = {1}."
        raise ValueError(msg.format(session.k, clb.k))
    n_luts = len(clb.luts)
    detected = set()
    for site in clb.faulty_sites:
        fault = _site_fault(clb, site)
        if site.component == "lut":
            faults = {"lut_faults": {site.index: fault}}
        else:
            faults = {"carry_faults": {(site.index, site.component): fault}}
        if session_detects(session, n_luts, **faults):
            detected.add(site)
    logging.debug(
        "CLB ({0}, {1}): {2} of {3} fault sites detected".format(
            clb.row, clb.col, len(detected), len(clb.faulty_sites)
        )
    )
    return SessionResult(not detected, frozenset(detected))


def coverage_of(faults, k, style, extra_pattern=True):
    """Fraction of the LUT `faults` detected by the session of `style`."""
    faults = list(faults)
    if not faults:
        return 1.0
    hits = sum(
        fault_detected(f, k, style, extra_pattern=extra_pattern)
        for f in faults
    )
    return hits / len(faults)
