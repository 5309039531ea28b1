# -*- coding: utf-8 -*-

"""Helpers to derive reproducible random streams.

Every stochastic operation of the package takes an integer seed. Monte Carlo
samples get their own seed, derived from the master seed and the sample
index, so that samples can run in any order or in parallel.

SPDX-FileCopyrightText: cntfpga developer group

SPDX-License-Identifier: MIT

"""

import numpy as np


def derive_seed(master_seed, index):
    """Return a stable 64-bit seed for sample `index` of a run.

    Parameters
    ----------
    master_seed : int
        Seed of the whole run.
    index : int
        Sample (or sub-stream) index.

    Examples
    --------
    >>> derive_seed(1, 0) == derive_seed(1, 0)
    True
    >>> derive_seed(1, 0) == derive_seed(1, 1)
    False
    >>> 0 <= derive_seed(7, 3) < 2**64
    True
    """
    state = np.random.SeedSequence([int(master_seed), int(index)])
    return int(state.generate_state(1, np.uint64)[0])


def make_rng(seed):
    """Return a numpy Generator for an integer seed or pass a Generator on.

    Examples
    --------
    >>> rng = make_rng(3)
    >>> make_rng(rng) is rng
    True
    """
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def spawn_rngs(seed, n):
    """Return `n` independent generators spawned from one seed.

    The streams do not depend on how many values are drawn from each other,
    so one of them can be used for counts and another for attributes.

    Examples
    --------
    >>> a, b = spawn_rngs(5, 2)
    >>> c, d = spawn_rngs(5, 2)
    >>> float(a.random()) == float(c.random())
    True
    """
    children = np.random.SeedSequence(int(seed)).spawn(n)
    return [np.random.default_rng(child) for child in children]
