# -*- coding: utf-8 -*-

"""Result tables and the files a run writes.

Every tabular artifact is a pandas DataFrame written as UTF-8 CSV with a
header row and fixed float formatting, so that an unchanged configuration
reproduces the same bytes.

SPDX-FileCopyrightText: cntfpga developer group

SPDX-License-Identifier: MIT

"""

import json
import logging
import os
import platform

import networkx
import numpy as np
import pandas as pd
import scipy

from cntfpga import __version__
from cntfpga._config import config_hash
from cntfpga.helpers import get_output_path

FLOAT_FORMAT = "%.10g"

FAULT_MAP_COLUMNS = ["row", "col", "lut", "kind", "site"]


def fault_map_frame(fault_map):
    """Fault map as a table of (row, col, lut, kind, site).

    `kind` is the one-letter code of the fault, "X" for carry-chain faults.
    `site` is "lut", "mux" or "xor"; a carry-chain fault sits in the stage
    of the LUT it is listed under.

    Examples
    --------
    >>> from cntfpga.defects import FaultMap
    >>> from cntfpga.fabric import ArrayGeometry, mux_override, stuck_at
    >>> fault_map = FaultMap(ArrayGeometry(2, 2, lut_inputs=2))
    >>> _ = fault_map.add_lut_fault(1, 0, 3, mux_override(2))
    >>> _ = fault_map.add_carry_fault(0, 1, 2, "xor", stuck_at(1))
    >>> fault_map_frame(fault_map)["kind"].tolist()
    ['X', 'M']
    """
    rows = [
        (row, col, lut, fault.code, "lut")
        for (row, col, lut), fault in fault_map.lut_faults.items()
    ]
    rows += [
        (row, col, stage, "X", gate)
        for (row, col, stage, gate) in fault_map.carry_faults
    ]
    df = pd.DataFrame(rows, columns=FAULT_MAP_COLUMNS)
    return df.sort_values(["row", "col", "lut", "site"]).reset_index(
        drop=True
    )


def write_frame(df, path):
    """Write a result table as CSV and return the path."""
    df.to_csv(
        path,
        index=False,
        encoding="utf-8",
        lineterminator="\n",
        float_format=FLOAT_FORMAT,
    )
    logging.debug("Wrote {0} rows to {1}".format(len(df), path))
    return path


def _plain(obj):
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, (set, frozenset, tuple)):
        return sorted(obj)
    return str(obj)


def write_json(obj, path):
    with open(path, "w", encoding="utf-8") as f:
        json.dump(obj, f, indent=2, sort_keys=True, default=_plain)
        f.write("\n")
    return path


def versions():
    """Versions of the packages that shape the results."""
    return {
        "cntfpga": __version__,
        "python": platform.python_version(),
        "numpy": np.__version__,
        "pandas": pd.__version__,
        "scipy": scipy.__version__,
        "networkx": networkx.__version__,
    }


def manifest(config, artifacts, summary=None):
    """Manifest of a run: config hash, seed, versions and artifact names."""
    return {
        "experiment": config.experiment,
        "config_hash": config_hash(config),
        "master_seed": config.master_seed,
        "samples": config.samples,
        "versions": versions(),
        "artifacts": sorted(os.path.basename(a) for a in artifacts),
        "summary": summary or {},
        "config": config.raw,
    }


def write_artifacts(config, tables, summary=None, extra=None):
    """Write result tables and the manifest into the output directory.

    Parameters
    ----------
    config : RunConfig
    tables : dict
        File name to DataFrame.
    summary : dict, optional
        Scalar results recorded in the manifest.
    extra : dict, optional
        File name to a JSON-serialisable object.

    Returns
    -------
    list of str
        Paths of all files written, the manifest last.
    """
    out = get_output_path(config.output_dir)
    paths = [
        write_frame(df, os.path.join(out, name)) for name, df in tables.items()
    ]
    for name, obj in (extra or {}).items():
        paths.append(write_json(obj, os.path.join(out, name)))
    paths.append(
        write_json(
            manifest(config, paths, summary),
            os.path.join(out, "manifest.json"),
        )
    )
    logging.info("Wrote {0} artifacts to {1}".format(len(paths), out))
    return paths
