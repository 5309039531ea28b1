# -*- coding: utf-8 -*-

"""Run configuration: JSON defaults, validation and the config hash.

A configuration file names only what it changes; everything else comes from
:data:`DEFAULTS`.

SPDX-FileCopyrightText: cntfpga developer group

SPDX-License-Identifier: MIT

"""

import copy
import hashlib
import json
import logging
import os
from dataclasses import dataclass
from typing import NamedTuple
from typing import Tuple

from cntfpga._options import DefectParams
from cntfpga._options import DelayModelParams
from cntfpga._options import TimingParams
from cntfpga.array_test import BENCHMARK_PREFIX
from cntfpga.array_test import BENCHMARK_UTILISATION
from cntfpga.clb_test import SessionStyle
from cntfpga.defects import INJECTABLE_TYPES
from cntfpga.defects import InjectionPattern
from cntfpga.fabric import ArrayGeometry
from cntfpga.helpers import flatten
from cntfpga.redundancy import SCHEMES

EXPERIMENT_NAMES = (
    "delay",
    "ro-test",
    "clb-test",
    "array-test",
    "inject",
    "repair",
)

# Fields that do not change any result.
NON_SEMANTIC = ("output_dir", "workers")

DEFAULTS = {
    "experiment": "array-test",
    "samples": 10,
    "master_seed": 1,
    "output_dir": "results",
    "workers": 1,
    "geometry": {
        "rows": 49,
        "cols": 49,
        "luts_per_clb": 4,
        "lut_inputs": 6,
        "clb_area_T": 27698,
        "t_area_um2": 2.2e-3,
    },
    "defects": DefectParams().as_dict(),
    "delay": {
        "mu_d": 11.0,
        "sigma_d": 1.65,
        "p_metal": 1.0 / 3.0,
        "stage_count": 7,
        "noise_pct": 1.0,
        "threshold_sigmas": 3.0,
        "target_loop_delay": 2.70e-9,
        "n_wires": 1000,
        "chirality_p": [0.33, 0.53],
        "d_max_sweep": [8.0, 9.0, 10.0, 11.0, 12.0, 13.0, 14.0],
        "model": DelayModelParams().as_dict(),
    },
    "test": {
        "styles": ["traditional", "with_carry_chain", "improved"],
        "lut_inputs": [3, 4, 5, 6],
        "methods": ["recursive", "fixed_step", "single_step"],
        "initial_steps": [4, 8, 12, 16, 20],
        "p_m_sweep": [1e-4, 2e-4, 3e-4, 4e-4, 5e-4],
        "axis": "column",
        "strict_key": False,
        "masks": [],
    },
    "timing": TimingParams().as_dict(),
    "redundancy": {"schemes": [0, 1, 2, 3, 4, 5, 6, 7]},
    "injection": {
        "pattern": "aligned",
        "clusters": 20,
        "run_lengths": [4, 12],
        "scatter": 0.2,
        "counts": {"stuck_at_0": 347, "stuck_at_1": 232, "mux_override": 231},
        "initial_step": 4,
        "style": "traditional",
    },
}

# Blocks whose keys are free-form and checked elsewhere.
_OPEN_BLOCKS = ("injection.counts",)


class Diagnostic(NamedTuple):
    level: str
    field: str
    message: str

    def __str__(self):
        return "{0}: {1}: {2}".format(self.level, self.field, self.message)


class ConfigError(ValueError):
    """Invalid run configuration; `diagnostics` lists every problem."""

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        errors = [d for d in self.diagnostics if d.level == "error"]
        super().__init__(
            "Invalid configuration:\n"
            + "\n".join("  " + str(d) for d in errors)
        )


@dataclass(frozen=True)
class DelayConfig:
    mu_d: float
    sigma_d: float
    p_metal: float
    stage_count: int
    noise_pct: float
    threshold_sigmas: float
    target_loop_delay: float
    n_wires: int
    chirality_p: Tuple[float, float]
    d_max_sweep: Tuple[float, ...]
    model: DelayModelParams


@dataclass(frozen=True)
class TestConfig:
    __test__ = False

    styles: Tuple[str, ...]
    lut_inputs: Tuple[int, ...]
    methods: Tuple[str, ...]
    initial_steps: Tuple[int, ...]
    p_m_sweep: Tuple[float, ...]
    axis: str
    strict_key: bool
    masks: Tuple[str, ...]


@dataclass(frozen=True)
class RedundancyConfig:
    schemes: Tuple[int, ...]


@dataclass(frozen=True)
class InjectionConfig:
    pattern: str
    clusters: int
    run_lengths: Tuple[int, int]
    scatter: float
    counts: Tuple[Tuple[str, int], ...]
    initial_step: int
    style: str


@dataclass(frozen=True)
class RunConfig:
    experiment: str
    samples: int
    master_seed: int
    output_dir: str
    workers: int
    geometry: ArrayGeometry
    defects: DefectParams
    delay: DelayConfig
    test: TestConfig
    timing: TimingParams
    redundancy: RedundancyConfig
    injection: InjectionConfig
    raw: dict

    @property
    def hash(self):
        return config_hash(self.raw)


def merge(base, changes):
    """Deep copy of `base` with the nested `changes` written over it.

    >>> merge({"a": {"b": 1, "c": 2}}, {"a": {"c": 3}})
    {'a': {'b': 1, 'c': 3}}
    """
    merged = copy.deepcopy(base)
    for key, value in changes.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = merge(merged[key], value)
        else:
            merged[key] = copy.deepcopy(value)
    return merged


def with_defaults(config):
    """`config` merged over :data:`DEFAULTS`; a given open block replaces
    its default instead of being merged with it.

    >>> counts = {"injection": {"counts": {"stuck_at_1": 4}}}
    >>> with_defaults(counts)["injection"]["counts"]
    {'stuck_at_1': 4}
    """
    raw = merge(DEFAULTS, config)
    for path in _OPEN_BLOCKS:
        block, key = path.split(".")
        given = config.get(block)
        if isinstance(given, dict) and isinstance(given.get(key), dict):
            raw[block][key] = copy.deepcopy(given[key])
    return raw


def _unknown_keys(raw, defaults, prefix=""):
    for key, value in raw.items():
        field = prefix + key
        if key not in defaults:
            yield field
        elif isinstance(value, dict) and field not in _OPEN_BLOCKS:
            if isinstance(defaults[key], dict):
                yield from _unknown_keys(value, defaults[key], field + ".")


def _geometry(block):
    return ArrayGeometry(
        block["rows"],
        block["cols"],
        block["luts_per_clb"],
        block["lut_inputs"],
        block["clb_area_T"],
        block["t_area_um2"],
    )


def _aligned_pattern(run_lengths, scatter):
    shortest, longest = run_lengths
    if not all(isinstance(v, int) for v in run_lengths) or not (
        1 <= shortest <= longest
    ):
        msg = "run_lengths must be integers 1 <= shortest <= longest, got {0}."
        raise ValueError(msg.format(list(run_lengths)))
    if not 0 <= float(scatter) <= 1:
        msg = "scatter must lie in [0, 1], got {0!r}."
        raise ValueError(msg.format(scatter))


def _check_build(diagnostics, field, build, *args):
    try:
        return build(*args)
    except (TypeError, ValueError, KeyError) as e:
        diagnostics.append(Diagnostic("error", field, str(e)))
        return None


def _check_positive_int(diagnostics, field, value, minimum=1):
    if isinstance(value, bool) or not isinstance(value, int):
        msg = "must be an integer, got {0!r}.".format(value)
        diagnostics.append(Diagnostic("error", field, msg))
    elif value < minimum:
        msg = "must be at least {0}, got {1}.".format(minimum, value)
        diagnostics.append(Diagnostic("error", field, msg))


def _check_choices(diagnostics, field, values, choices):
    for value in values:
        if value not in choices:
            msg = "unknown value {0!r}, choose from {1}.".format(
                value, sorted(choices)
            )
            diagnostics.append(Diagnostic("error", field, msg))


def validate(config):
    """Check a raw configuration dictionary, merged with the defaults.

    Returns
    -------
    list of Diagnostic
        Errors make the configuration unusable; warnings do not.

    Examples
    --------
    >>> [d.field for d in validate({"test": {"initial_steps": [4, 7]}})]
    ['test.initial_steps']
    >>> validate({"colour": "red"})[0].level
    'warning'
    """
    diagnostics = [
        Diagnostic("warning", field, "unknown key, it is ignored.")
        for field in _unknown_keys(config, DEFAULTS)
    ]
    raw = with_defaults(config)

    if raw["experiment"] not in EXPERIMENT_NAMES:
        msg = "unknown experiment {0!r}, choose from {1}.".format(
            raw["experiment"], ", ".join(EXPERIMENT_NAMES)
        )
        diagnostics.append(Diagnostic("error", "experiment", msg))
    _check_positive_int(diagnostics, "samples", raw["samples"])
    _check_positive_int(diagnostics, "workers", raw["workers"])
    _check_positive_int(diagnostics, "master_seed", raw["master_seed"], 0)

    _check_build(diagnostics, "geometry", _geometry, raw["geometry"])
    _check_build(
        diagnostics, "defects", lambda b: DefectParams(**b), raw["defects"]
    )
    _check_build(
        diagnostics, "timing", lambda b: TimingParams(**b), raw["timing"]
    )

    delay = raw["delay"]
    _check_build(
        diagnostics,
        "delay.model",
        lambda b: DelayModelParams(**b),
        delay["model"],
    )
    if not 0 <= delay["p_metal"] <= 1:
        msg = "is a probability and must lie in [0, 1], got {0}.".format(
            delay["p_metal"]
        )
        diagnostics.append(Diagnostic("error", "delay.p_metal", msg))
    if any(not 0 <= p <= 1 for p in delay["chirality_p"]):
        diagnostics.append(
            Diagnostic(
                "error",
                "delay.chirality_p",
                "both probabilities must lie in [0, 1].",
            )
        )
    if delay["stage_count"] % 2 == 0 or delay["stage_count"] < 3:
        msg = "a ring oscillator needs an odd stage count >= 3, got {0}."
        diagnostics.append(
            Diagnostic(
                "error", "delay.stage_count", msg.format(delay["stage_count"])
            )
        )
    if not delay["mu_d"] > 0 or delay["sigma_d"] < 0:
        diagnostics.append(
            Diagnostic(
                "error",
                "delay.mu_d",
                "mu_d must be positive and sigma_d not negative.",
            )
        )

    test = raw["test"]
    _check_choices(
        diagnostics,
        "test.styles",
        test["styles"],
        {s.value for s in SessionStyle},
    )
    _check_choices(
        diagnostics,
        "test.methods",
        test["methods"],
        {"recursive", "fixed_step", "single_step"},
    )
    _check_choices(diagnostics, "test.axis", [test["axis"]], {"column", "row"})
    bad_k = [k for k in test["lut_inputs"] if not 2 <= k <= 8]
    if bad_k:
        msg = "LUT input counts must lie in [2, 8], got {0}.".format(bad_k)
        diagnostics.append(Diagnostic("error", "test.lut_inputs", msg))
    odd = [s for s in test["initial_steps"] if s < 1 or (s > 1 and s % 2)]
    if odd:
        msg = "initial jump steps must be even (or 1), got {0}.".format(odd)
        diagnostics.append(Diagnostic("error", "test.initial_steps", msg))
    if any(not 0 <= p <= 1 for p in test["p_m_sweep"]):
        diagnostics.append(
            Diagnostic(
                "error",
                "test.p_m_sweep",
                "every p_m must lie in [0, 1].",
            )
        )
    for entry in test["masks"]:
        if entry.startswith(BENCHMARK_PREFIX):
            name = entry[len(BENCHMARK_PREFIX) :].upper()
            if name not in BENCHMARK_UTILISATION:
                msg = "unknown benchmark {0!r}, choose from {1}.".format(
                    name, sorted(BENCHMARK_UTILISATION)
                )
                diagnostics.append(Diagnostic("error", "test.masks", msg))
        elif not os.path.isfile(entry):
            msg = "mask file {0} does not exist.".format(entry)
            diagnostics.append(Diagnostic("error", "test.masks", msg))

    _check_choices(
        diagnostics,
        "redundancy.schemes",
        raw["redundancy"]["schemes"],
        set(SCHEMES),
    )

    injection = raw["injection"]
    _check_choices(
        diagnostics,
        "injection.pattern",
        [injection["pattern"]],
        {p.value for p in InjectionPattern},
    )
    _check_choices(
        diagnostics,
        "injection.counts",
        list(injection["counts"]),
        {t.value for t in INJECTABLE_TYPES},
    )
    for kind, count in injection["counts"].items():
        _check_positive_int(
            diagnostics, "injection.counts." + kind, count, minimum=0
        )
    _check_positive_int(
        diagnostics, "injection.clusters", injection["clusters"]
    )
    _check_build(
        diagnostics,
        "injection",
        _aligned_pattern,
        injection["run_lengths"],
        injection["scatter"],
    )
    _check_choices(
        diagnostics,
        "injection.style",
        [injection["style"]],
        {s.value for s in SessionStyle},
    )
    return diagnostics


def _resolve_masks(config, base_dir):
    masks = config.get("test", {}).get("masks")
    if not masks:
        return config
    resolved = [
        m
        if os.path.isabs(m) or m.startswith(BENCHMARK_PREFIX)
        else os.path.join(base_dir, m)
        for m in masks
    ]
    return merge(config, {"test": {"masks": resolved}})


def _build(raw):
    delay = raw["delay"]
    test = raw["test"]
    injection = raw["injection"]
    return RunConfig(
        experiment=raw["experiment"],
        samples=raw["samples"],
        master_seed=raw["master_seed"],
        output_dir=raw["output_dir"],
        workers=raw["workers"],
        geometry=_geometry(raw["geometry"]),
        defects=DefectParams(**raw["defects"]),
        delay=DelayConfig(
            mu_d=delay["mu_d"],
            sigma_d=delay["sigma_d"],
            p_metal=delay["p_metal"],
            stage_count=delay["stage_count"],
            noise_pct=delay["noise_pct"],
            threshold_sigmas=delay["threshold_sigmas"],
            target_loop_delay=delay["target_loop_delay"],
            n_wires=delay["n_wires"],
            chirality_p=tuple(delay["chirality_p"]),
            d_max_sweep=tuple(delay["d_max_sweep"]),
            model=DelayModelParams(**delay["model"]),
        ),
        test=TestConfig(
            styles=tuple(test["styles"]),
            lut_inputs=tuple(test["lut_inputs"]),
            methods=tuple(test["methods"]),
            initial_steps=tuple(test["initial_steps"]),
            p_m_sweep=tuple(test["p_m_sweep"]),
            axis=test["axis"],
            strict_key=bool(test["strict_key"]),
            masks=tuple(test["masks"]),
        ),
        timing=TimingParams(**raw["timing"]),
        redundancy=RedundancyConfig(tuple(raw["redundancy"]["schemes"])),
        injection=InjectionConfig(
            pattern=injection["pattern"],
            clusters=injection["clusters"],
            run_lengths=tuple(injection["run_lengths"]),
            scatter=float(injection["scatter"]),
            counts=tuple(sorted(injection["counts"].items())),
            initial_step=injection["initial_step"],
            style=injection["style"],
        ),
        raw=raw,
    )


def read_config(path):
    """Read a JSON run configuration; mask paths become absolute.

    Raises
    ------
    ConfigError
        If the file cannot be read or holds no JSON object.
    """
    try:
        with open(path, encoding="utf-8") as f:
            config = json.load(f)
    except OSError as e:
        msg = "cannot read the file: {0}".format(e.strerror)
        raise ConfigError([Diagnostic("error", str(path), msg)])
    except json.JSONDecodeError as e:
        msg = "invalid JSON: {0}".format(e)
        raise ConfigError([Diagnostic("error", str(path), msg)])
    if not isinstance(config, dict):
        msg = "expected a JSON object, got {0}.".format(
            type(config).__name__
        )
        raise ConfigError([Diagnostic("error", str(path), msg)])
    return _resolve_masks(config, os.path.dirname(os.path.abspath(path)))


def load_config(source=None, **overrides):
    """Read, merge, validate and build a run configuration.

    Parameters
    ----------
    source : str or dict, optional
        Path of a JSON file or an already parsed dictionary.
    **overrides
        Top-level fields that win over the file, e.g. `master_seed`,
        `samples`, `output_dir`, `experiment` or `workers`. None values are
        skipped.

    Raises
    ------
    ConfigError
        If validation reports at least one error.

    Examples
    --------
    >>> config = load_config({"geometry": {"rows": 8}}, samples=2)
    >>> config.geometry.n_rows, config.samples, config.geometry.n_cols
    (8, 2, 49)
    """
    if source is None:
        config = {}
    elif isinstance(source, dict):
        config = copy.deepcopy(source)
    else:
        config = read_config(source)
    config.update({k: v for k, v in overrides.items() if v is not None})

    diagnostics = validate(config)
    for d in diagnostics:
        if d.level == "warning":
            logging.warning(str(d))
    if any(d.level == "error" for d in diagnostics):
        raise ConfigError(diagnostics)
    return _build(with_defaults(config))


def config_hash(config):
    """SHA-256 of the semantic fields of a configuration.

    Examples
    --------
    >>> a = config_hash({"samples": 3})
    >>> a == config_hash({"samples": 3, "workers": 8, "output_dir": "x"})
    True
    >>> a == config_hash({"samples": 4})
    False
    """
    raw = config.raw if isinstance(config, RunConfig) else config
    raw = with_defaults(raw)
    semantic = {
        k: v for k, v in flatten(raw, sep=".").items() if k not in NON_SEMANTIC
    }
    canonical = json.dumps(semantic, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()
