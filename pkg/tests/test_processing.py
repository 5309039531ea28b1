# -*- coding: utf-8 -

"""Tests the processing module of cntfpga.

SPDX-FileCopyrightText: cntfpga developer group

SPDX-License-Identifier: MIT
"""

import json
import os

import numpy as np
import pandas as pd

from cntfpga import config_hash
from cntfpga import load_config
from cntfpga import processing
from cntfpga.defects import FaultMap
from cntfpga.fabric import ArrayGeometry
from cntfpga.fabric import mux_override
from cntfpga.fabric import stuck_at


class TestFaultMapFrame:
    @classmethod
    def setup_class(cls):
        fault_map = FaultMap(ArrayGeometry(3, 3, lut_inputs=2))
        fault_map.add_lut_fault(2, 2, 1, stuck_at(1))
        fault_map.add_lut_fault(0, 1, 3, mux_override(2))
        fault_map.add_carry_fault(0, 1, 0, "mux", stuck_at(0))
        cls.df = processing.fault_map_frame(fault_map)

    def test_columns(self):
        assert self.df.columns.tolist() == processing.FAULT_MAP_COLUMNS

    def test_order(self):
        rows = self.df[["row", "col", "lut", "kind"]].values.tolist()
        assert rows == [[0, 1, 0, "X"], [0, 1, 3, "M"], [2, 2, 1, "1"]]

    def test_carry_faults_are_x(self):
        assert self.df.loc[self.df["site"] == "mux", "kind"].tolist() == ["X"]


def test_empty_fault_map_frame():
    df = processing.fault_map_frame(FaultMap(ArrayGeometry(2, 2)))
    assert len(df) == 0
    assert df.columns.tolist() == processing.FAULT_MAP_COLUMNS


def test_write_frame_is_byte_stable(tmp_path):
    df = pd.DataFrame({"a": [1, 2], "x": [1 / 3, 2.5e-9]})
    path = processing.write_frame(df, str(tmp_path / "t.csv"))
    with open(path, "rb") as f:
        content = f.read()
    assert content == b"a,x\n1,0.3333333333\n2,2.5e-09\n"


def test_write_json_of_numpy_values(tmp_path):
    obj = {"n": np.int64(3), "x": np.float64(0.5), "s": frozenset({2, 1})}
    path = processing.write_json(obj, str(tmp_path / "o.json"))
    with open(path, encoding="utf-8") as f:
        assert json.load(f) == {"n": 3, "x": 0.5, "s": [1, 2]}


def test_versions_name_the_numeric_stack():
    assert set(processing.versions()) >= {
        "cntfpga",
        "numpy",
        "pandas",
        "scipy",
        "networkx",
    }


def test_write_artifacts_writes_the_manifest_last(tmp_path):
    raw = {"samples": 2, "output_dir": str(tmp_path / "out")}
    config = load_config(raw)
    tables = {"a.csv": pd.DataFrame({"x": [1]})}
    paths = processing.write_artifacts(
        config, tables, {"rate": 0.5}, {"b.json": {"k": 1}}
    )
    assert [os.path.basename(p) for p in paths] == [
        "a.csv",
        "b.json",
        "manifest.json",
    ]
    with open(paths[-1], encoding="utf-8") as f:
        manifest = json.load(f)
    assert manifest["artifacts"] == ["a.csv", "b.json"]
    assert manifest["config_hash"] == config_hash(raw)
    assert manifest["summary"] == {"rate": 0.5}
    assert manifest["master_seed"] == 1
