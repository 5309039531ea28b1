# -*- coding: utf-8 -*-

"""Tile-usage masks for application-dependent testing.

A mask file holds one line per tile row with a 0 or 1 per tile; blanks
between the digits are ignored.

SPDX-FileCopyrightText: cntfpga developer group

SPDX-License-Identifier: MIT

"""

import logging
import os

import numpy as np

from cntfpga._plumbing import make_rng
from cntfpga.helpers import get_output_path

# Share of used tiles of the synthetic benchmark placements.
BENCHMARK_UTILISATION = {
    "PCI": 0.35,
    "I2C": 0.20,
    "SPI": 0.30,
    "FIR": 0.55,
    "FPU": 0.70,
    "VGA": 0.45,
    "PCM": 0.25,
    "DMA": 0.40,
    "USB": 0.50,
    "MEM": 0.60,
}


def parse_mask(text):
    """Parse the text of a mask file.

    >>> parse_mask("0110\\n1 0 0 1\\n").astype(int).tolist()
    [[0, 1, 1, 0], [1, 0, 0, 1]]
    """
    rows = []
    for number, line in enumerate(text.splitlines(), start=1):
        digits = "".join(line.split())
        if not digits:
            continue
        if set(digits) - {"0", "1"}:
            msg = "Mask line {0} holds characters other than 0 and 1: {1!r}."
            raise ValueError(msg.format(number, line))
        rows.append([ch == "1" for ch in digits])
    if not rows:
        raise ValueError("The mask is empty.")
    if len({len(r) for r in rows}) != 1:
        raise ValueError("All mask lines must have the same length.")
    return np.array(rows, dtype=bool)


def read_mask(path):
    with open(path) as f:
        mask = parse_mask(f.read())
    logging.debug(
        "Read {0} mask from {1}, {2} tiles used".format(
            mask.shape, path, int(mask.sum())
        )
    )
    return mask


def write_mask(path, mask):
    mask = np.asarray(mask, dtype=bool)
    with open(path, "w") as f:
        for row in mask.astype(int):
            f.write("".join(str(v) for v in row) + "\n")
    return path


def make_usage_mask(shape, utilisation, seed):
    """Synthetic placement: every tile is used with probability
    `utilisation`.

    >>> m = make_usage_mask((49, 49), 0.35, seed=3)
    >>> m.shape, 0.25 < m.mean() < 0.45
    ((49, 49), True)
    """
    if not 0 <= utilisation <= 1:
        msg = "Utilisation is a share and must lie in [0, 1], got {0}."
        raise ValueError(msg.format(utilisation))
    return make_rng(seed).random(shape) < utilisation


def benchmark_mask(name, shape, seed):
    """Synthetic usage mask of a named benchmark circuit."""
    try:
        utilisation = BENCHMARK_UTILISATION[name.upper()]
    except KeyError:
        msg = "Unknown benchmark {0!r}, choose from {1}."
        raise ValueError(msg.format(name, sorted(BENCHMARK_UTILISATION)))
    return make_usage_mask(shape, utilisation, seed)


def write_benchmark_masks(directory, shape, seed):
    """Write one mask file per benchmark circuit into `directory`."""
    directory = get_output_path(directory)
    paths = {}
    for i, name in enumerate(BENCHMARK_UTILISATION):
        mask = make_usage_mask(shape, BENCHMARK_UTILISATION[name], seed + i)
        paths[name] = write_mask(
            os.path.join(directory, "{0}.mask".format(name.lower())), mask
        )
    return paths


BENCHMARK_PREFIX = "benchmark:"


def load_usage_mask(entry, shape, seed):
    """Mask named by a configuration entry.

    An entry ``benchmark:NAME`` stands for the synthetic mask of a
    benchmark circuit with the array shape; any other entry is the path of
    a mask file.

    >>> load_usage_mask("benchmark:fir", (8, 8), seed=1).shape
    (8, 8)
    """
    if entry.startswith(BENCHMARK_PREFIX):
        return benchmark_mask(entry[len(BENCHMARK_PREFIX) :], shape, seed)
    return read_mask(entry)
