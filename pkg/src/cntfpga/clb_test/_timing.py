# -*- coding: utf-8 -*-

"""Test-time model of a CLB test session.

SPDX-FileCopyrightText: cntfpga developer group

SPDX-License-Identifier: MIT

"""

import pandas as pd

from cntfpga._options import TimingParams
from cntfpga.clb_test._sessions import SessionStyle
from cntfpga.clb_test._sessions import gen_session


def estimate_test_time(session, timing=None):
    """Time in s to run `session`.

    Every configuration is written once, every pattern applied once, and the
    2^k configuration cells are read back once.

    Examples
    --------
    >>> from cntfpga import TimingParams
    >>> t = TimingParams(t_config=1, t_pattern=0.5, t_readback=0)
    >>> estimate_test_time(gen_session(3, "traditional"), t)
    20.0
    """
    timing = TimingParams() if timing is None else timing
    return float(
        session.n_configurations * timing.t_config
        + session.n_patterns * timing.t_pattern
        + 2**session.k * timing.t_readback
    )


def time_reduction(k, timing=None, baseline="traditional"):
    """Reduction in percent of the improved session's test time against
    `baseline`.

    >>> round(time_reduction(6), 2)
    35.49
    """
    base = estimate_test_time(gen_session(k, baseline), timing)
    improved = gen_session(k, SessionStyle.IMPROVED)
    improved = estimate_test_time(improved, timing)
    return 100.0 * (base - improved) / base


def configuration_overhead(k, carry_chain=True):
    """Configurations needed by the walking-bit session and by the improved
    one.

    >>> configuration_overhead(6)
    (9, 2)
    """
    style = "with_carry_chain" if carry_chain else "traditional"
    return (
        gen_session(k, style).n_configurations,
        gen_session(k, SessionStyle.IMPROVED).n_configurations,
    )


def session_time_table(ks=(3, 4, 5, 6), timing=None):
    """Session sizes, test times and reductions per LUT size.

    Returns
    -------
    pandas.DataFrame
        One row per k; the mean reduction is in ``df.attrs["mean"]``.
    """
    rows = []
    for k in ks:
        traditional = gen_session(k, SessionStyle.TRADITIONAL)
        improved = gen_session(k, SessionStyle.IMPROVED)
        rows.append(
            {
                "k": k,
                "configs_traditional": traditional.n_configurations,
                "patterns_traditional": traditional.n_patterns,
                "time_traditional": estimate_test_time(traditional, timing),
                "configs_improved": improved.n_configurations,
                "patterns_improved": improved.n_patterns,
                "time_improved": estimate_test_time(improved, timing),
                "reduction_pct": time_reduction(k, timing),
            }
        )
    df = pd.DataFrame(rows)
    df.attrs["mean"] = float(df["reduction_pct"].mean())
    return df
