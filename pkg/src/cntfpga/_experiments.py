# -*- coding: utf-8 -*-

"""The experiment pipelines behind ``cntfpga run``.

Every pipeline takes a :class:`~cntfpga._config.RunConfig` and returns its
result tables, a summary and optional JSON documents. Monte Carlo samples
are independent; sample `i` draws from ``derive_seed(master_seed, i)`` and
runs in a worker process when more than one worker is configured. Results
are gathered in sample order.

SPDX-FileCopyrightText: cntfpga developer group

SPDX-License-Identifier: MIT

"""

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from functools import partial

import numpy as np
import pandas as pd

from cntfpga import processing
from cntfpga._config import ConfigError
from cntfpga._config import RunConfig
from cntfpga._config import load_config
from cntfpga._plumbing import derive_seed
from cntfpga._plumbing import make_rng
from cntfpga.array_test import evaluate_fault_injection
from cntfpga.array_test import BENCHMARK_PREFIX
from cntfpga.array_test import load_usage_mask
from cntfpga.array_test import run_array_test
from cntfpga.clb_test import SessionStyle
from cntfpga.clb_test import configuration_overhead
from cntfpga.clb_test import estimate_test_time
from cntfpga.clb_test import fault_detected
from cntfpga.clb_test import gen_session
from cntfpga.clb_test import time_reduction
from cntfpga.defects import inject_faults
from cntfpga.defects import map_defects_to_faults
from cntfpga.defects import sample_defects
from cntfpga.delay import build_ro_partition
from cntfpga.delay import calibrate
from cntfpga.delay import chirality_reduction
from cntfpga.delay import delay_population
from cntfpga.delay import draw_mwcnt
from cntfpga.delay import flag_measurements
from cntfpga.delay import measure_ro
from cntfpga.delay import nominal_mwcnt
from cntfpga.delay import population_spread
from cntfpga.delay import segment_delay
from cntfpga.fabric import build_array
from cntfpga.fabric import mux_always_select
from cntfpga.fabric import open_fault
from cntfpga.fabric import stuck_at
from cntfpga.fabric import stuck_on
from cntfpga.fabric import wired_and
from cntfpga.fabric import wired_or
from cntfpga.redundancy import repair_records
from cntfpga.redundancy import summarize_repairs

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_FAILURE = 3

# Sub-streams of one sample seed.
NOISE_STREAM = 3


def map_samples(function, config):
    """Run `function(config, i)` for every sample, in order."""
    indices = range(config.samples)
    if config.workers > 1 and config.samples > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            return list(pool.map(partial(function, config), indices))
    return [function(config, i) for i in indices]


def calibrated_model(config):
    return calibrate(
        config.delay.model,
        config.geometry.clb_pitch_x,
        config.delay.target_loop_delay,
        config.delay.stage_count,
    )


def sample_fault_map(config, i, defects=None):
    """Array of sample `i` with the faults of its m-CNT defects."""
    seed = derive_seed(config.master_seed, i)
    array = build_array(config.geometry, seed)
    if defects is None:
        defects = config.defects
    population = sample_defects(defects, config.geometry, seed)
    return map_defects_to_faults(population, array)


def delay_experiment(config):
    """Delay population of adjacent-CLB MWCNT wires, the effect of the
    metallic-shell share and a sweep of the outer diameter."""
    d = config.delay
    params = calibrated_model(config)
    length = config.geometry.clb_pitch_x
    seed = derive_seed(config.master_seed, 0)
    delays, high = delay_population(
        params, length, d.n_wires, seed, d.mu_d, d.sigma_d, d.p_metal
    )
    population = pd.DataFrame(
        {
            "wire": np.arange(d.n_wires),
            "delay_s": delays,
            "high_resistance": high,
        }
    )
    reduction, means = chirality_reduction(
        params,
        length,
        d.n_wires,
        seed,
        d.chirality_p[0],
        d.chirality_p[1],
        mu_d=d.mu_d,
        sigma_d=d.sigma_d,
    )
    rng = make_rng(derive_seed(config.master_seed, 1))
    sweep = []
    for d_max in d.d_max_sweep:
        drawn = [
            draw_mwcnt(rng, p_metal=d.p_metal, d_max=d_max)
            for _ in range(d.n_wires)
        ]
        delays_at = [
            segment_delay(s, length, params)
            for s in drawn
            if not s.high_resistance
        ]
        sweep.append(
            {
                "d_max_nm": d_max,
                "nominal_delay_s": segment_delay(
                    nominal_mwcnt(d_max, d.p_metal), length, params
                ),
                "mean_delay_s": float(np.mean(delays_at))
                if delays_at
                else float("nan"),
                "high_resistance_share": 1 - len(delays_at) / len(drawn),
            }
        )
    normal = delays[~high]
    summary = {
        "calibration_scale": params.calibration_scale,
        "mean_delay_s": float(normal.mean()) if len(normal) else None,
        "std_delay_s": float(normal.std()) if len(normal) else None,
        "high_resistance_share": float(high.mean()),
        "chirality_p": list(d.chirality_p),
        "chirality_mean_delay_s": means,
        "chirality_reduction_pct": reduction,
    }
    logging.info(
        "Raising the metallic share from {0} to {1} cuts the mean wire "
        "delay by {2:.2f} %".format(*d.chirality_p, reduction)
    )
    tables = {
        "interconnect_delays.csv": population,
        "delay_dmax_sweep.csv": pd.DataFrame(sweep),
    }
    return tables, summary, {}


def _ro_sample(config, i):
    seed = derive_seed(config.master_seed, i)
    d = config.delay
    params = calibrated_model(config)
    array = build_array(config.geometry, seed)
    cells = build_ro_partition(
        array, d.stage_count, None, d.mu_d, d.sigma_d, d.p_metal
    )
    noise = make_rng(derive_seed(seed, NOISE_STREAM))
    measurements = flag_measurements(
        [measure_ro(ro, params, noise, d.noise_pct) for ro in cells],
        d.threshold_sigmas,
    )
    logging.debug("RO sample {0}: {1} oscillators".format(i, len(cells)))
    return [
        {
            "sample": i,
            "ro_id": m.ro_id,
            "loop_delay_ns": m.loop_delay * 1e9,
            "loop_delay_s": m.loop_delay,
            "period_s": m.period,
            "high_resistance": m.high_resistance,
            "flagged": m.flagged,
        }
        for m in measurements
    ], population_spread(measurements)


def loop_delay_histogram(delays, bins=50):
    """Summary and binned counts of the loop delays of all oscillators.

    Examples
    --------
    >>> df = pd.DataFrame({"loop_delay_ns": [1.0, 1.5, 2.0]})
    >>> h = loop_delay_histogram(df, bins=2)
    >>> h["n"], h["min"], h["max"], h["counts"]
    (3, 1.0, 2.0, [1, 2])
    """
    ns = delays["loop_delay_ns"].to_numpy(dtype=float)
    if len(ns) == 0:
        return {"n": 0}
    counts, edges = np.histogram(ns, bins=bins)
    return {
        "n": int(len(ns)),
        "mean_ns": float(ns.mean()),
        "std_ps": float(ns.std() * 1e3),
        "min": float(ns.min()),
        "max": float(ns.max()),
        "counts": counts.tolist(),
        "edges_ns": edges.tolist(),
    }


def ro_test_experiment(config):
    """Ring-oscillator delay-fault detection over Monte Carlo arrays."""
    results = map_samples(_ro_sample, config)
    delays = pd.DataFrame([row for rows, _ in results for row in rows])
    spread = pd.DataFrame(
        [dict(sample=i, **s) for i, (_, s) in enumerate(results)]
    )
    high = delays["high_resistance"]
    flagged = delays["flagged"]
    summary = {
        "oscillators": int(len(delays)),
        "high_resistance": int(high.sum()),
        "flagged": int(flagged.sum()),
        "flagged_high_resistance": int((high & flagged).sum()),
        "detection_rate": float((high & flagged).sum() / high.sum())
        if high.any()
        else 1.0,
        "mean_loop_delay_s": float(spread["mean"].mean())
        if "mean" in spread
        else None,
    }
    logging.info(
        "Flagged {0} of {1} oscillators with a high-resistance hop".format(
            summary["flagged_high_resistance"], summary["high_resistance"]
        )
    )
    tables = {"ro_delays.csv": delays, "ro_spread.csv": spread}
    return tables, summary, {"ro_histogram.json": loop_delay_histogram(delays)}


def lut_fault_universe(k):
    """Every single LUT fault of the fault models on a k-input LUT."""
    size = 2**k
    faults = [stuck_at(0), stuck_at(1), open_fault()]
    faults += [stuck_at(v, cell) for cell in range(size) for v in (0, 1)]
    faults += [mux_always_select(cell) for cell in range(size)]
    faults += [stuck_on(t) for t in range(size)]
    faults += [
        f(a, a + 1) for a in range(0, size, 2) for f in (wired_and, wired_or)
    ]
    return faults


def carry_fault_universe(n_stages):
    return [
        (stage, gate, stuck_at(v))
        for stage in range(n_stages)
        for gate in ("mux", "xor")
        for v in (0, 1)
    ]


def clb_test_experiment(config):
    """Session sizes, test time and fault coverage per LUT size and
    session style."""
    n_luts = config.geometry.luts_per_clb
    rows = []
    sessions = {}
    for k in config.test.lut_inputs:
        faults = lut_fault_universe(k)
        carry = carry_fault_universe(n_luts)
        with_carry, _ = configuration_overhead(k)
        extra_cfg_pct = 100.0 * (with_carry - (k + 1)) / (k + 1)
        for style in config.test.styles:
            session = gen_session(k, style)
            sessions["k{0}_{1}".format(k, style)] = session.as_dict()
            style = SessionStyle(style)
            lut_hits = sum(fault_detected(f, k, style) for f in faults)
            carry_hits = sum(
                fault_detected(fault, k, style, gate, stage, n_luts)
                for stage, gate, fault in carry
            )
            rows.append(
                {
                    "clb_id": "k{0}".format(k),
                    "k": k,
                    "style": style.value,
                    "configs": session.n_configurations,
                    "patterns": session.n_patterns,
                    "time_s": estimate_test_time(session, config.timing),
                    "detected_faults": lut_hits + carry_hits,
                    "faults": len(faults) + len(carry),
                    "lut_coverage": lut_hits / len(faults),
                    "carry_coverage": carry_hits / len(carry),
                    "reduction_pct": (
                        time_reduction(k, config.timing)
                        if style is SessionStyle.IMPROVED
                        else 0.0
                    ),
                    "config_overhead_pct": (
                        extra_cfg_pct
                        if style is SessionStyle.WITH_CARRY_CHAIN
                        else 0.0
                    ),
                }
            )
    report = pd.DataFrame(rows)
    improved = report[report["style"] == SessionStyle.IMPROVED.value]
    summary = {
        "mean_reduction_pct": float(improved["reduction_pct"].mean())
        if len(improved)
        else None
    }
    return {"clb_test_report.csv": report}, summary, {
        "clb_sessions.json": sessions
    }


def _mask_label(entry):
    if entry.startswith(BENCHMARK_PREFIX):
        return entry[len(BENCHMARK_PREFIX) :].upper()
    return os.path.splitext(os.path.basename(entry))[0]


def _masks(config):
    shape = (config.geometry.n_rows, config.geometry.n_cols)
    masks = [("", None)]
    masks += [
        (_mask_label(e), load_usage_mask(e, shape, config.master_seed))
        for e in config.test.masks
    ]
    return masks


def _array_sample(config, i):
    rows = []
    masks = _masks(config)
    for p_m in config.test.p_m_sweep:
        fault_map = sample_fault_map(
            config, i, config.defects.replace(p_m=p_m)
        )
        for mask_name, mask in masks:
            for method in config.test.methods:
                steps = (
                    [1]
                    if method == "single_step"
                    else config.test.initial_steps
                )
                for step in steps:
                    report = run_array_test(
                        fault_map,
                        method,
                        step,
                        mask,
                        config.test.axis,
                        config.test.strict_key,
                    )
                    row = {"sample": i, "p_m": p_m, "mask": mask_name}
                    row.update(report.as_row())
                    row["faulty_tiles"] = len(fault_map.faulty_tiles())
                    rows.append(row)
    logging.debug("Array-test sample {0} done".format(i))
    return rows


def array_test_experiment(config):
    """Coverage and overhead of the row procedures over defect rates and
    initial steps, optionally per usage mask."""
    logging.info(
        "Running array tests with initial steps {0}".format(
            list(config.test.initial_steps)
        )
    )
    results = map_samples(_array_sample, config)
    report = pd.DataFrame([row for rows in results for row in rows])
    aggregate = (
        report.groupby(["mask", "p_m", "method", "step"], sort=True)[
            ["coverage", "overhead", "probes"]
        ]
        .mean()
        .reset_index()
    )
    # Sweep averages at the smallest step of a method, unmasked arrays.
    summary = {}
    unmasked = aggregate[aggregate["mask"] == ""]
    for method, frame in unmasked.groupby("method"):
        step = int(frame["step"].min())
        at_step = frame[frame["step"] == step]
        probes = frame.groupby("step")["probes"].mean()
        summary[method] = {
            "step": step,
            "coverage": float(at_step["coverage"].mean()),
            "overhead": float(at_step["overhead"].mean()),
            "probes": {str(s): float(p) for s, p in probes.items()},
        }
    tables = {
        "array_test_report.csv": report,
        "array_test_summary.csv": aggregate,
    }
    return tables, summary, {}


def _inject_sample(config, i):
    inj = config.injection
    seed = derive_seed(config.master_seed, i)
    fault_map = inject_faults(
        config.geometry,
        inj.pattern,
        dict(inj.counts),
        seed,
        inj.clusters,
        inj.run_lengths,
        inj.scatter,
    )
    table = evaluate_fault_injection(
        fault_map,
        config.test.methods,
        inj.initial_step,
        inj.style,
        config.test.axis,
    )
    table.index.name = "kind"
    table = table.reset_index()
    table.insert(0, "sample", i)
    frame = processing.fault_map_frame(fault_map) if i == 0 else None
    return table, frame


def inject_experiment(config):
    """Detection of injected faults per kind and method."""
    results = map_samples(_inject_sample, config)
    per_sample = pd.concat([t for t, _ in results], ignore_index=True)
    totals = (
        per_sample.drop(columns="sample").groupby("kind", sort=False).sum()
    )
    for column in totals.columns.drop("injected"):
        totals[column + "_pct"] = 100.0 * totals[column] / totals["injected"]
    totals = totals.reset_index()
    total = totals[totals["kind"] == "Total"].iloc[0]
    summary = {
        c: float(total[c]) for c in totals.columns if c.endswith("_pct")
    }
    tables = {
        "fault_injection.csv": per_sample,
        "fault_injection_summary.csv": totals,
        "fault_map_sample0.csv": results[0][1],
    }
    return tables, summary, {}


def _repair_sample(config, i):
    fault_map = sample_fault_map(config, i)
    return repair_records([fault_map], config.redundancy.schemes).assign(
        sample=i
    )


def repair_experiment(config):
    """Repair rate and spare-row overhead of the sharing schemes."""
    records = pd.concat(
        map_samples(_repair_sample, config), ignore_index=True
    )
    aggregate = summarize_repairs(records)
    summary = {
        str(row.scheme): row.repair_rate for row in aggregate.itertuples()
    }
    tables = {
        "repair_report.csv": records,
        "repair_summary.csv": aggregate,
    }
    return tables, summary, {}


EXPERIMENTS = {
    "delay": delay_experiment,
    "ro-test": ro_test_experiment,
    "clb-test": clb_test_experiment,
    "array-test": array_test_experiment,
    "inject": inject_experiment,
    "repair": repair_experiment,
}


def run(config, **overrides):
    """Run the configured experiment and write its artifacts.

    Parameters
    ----------
    config : RunConfig, dict or str
        A built configuration, a raw dictionary or the path of a JSON file.
    **overrides
        Passed to :func:`~cntfpga._config.load_config` when `config` is
        not built yet.

    Returns
    -------
    int
        0 on success, 2 for an invalid configuration, 3 if the pipeline
        failed.
    """
    try:
        if not isinstance(config, RunConfig):
            config = load_config(config, **overrides)
        elif overrides:
            config = load_config(config.raw, **overrides)
    except ConfigError as e:
        logging.error(str(e))
        return EXIT_CONFIG
    try:
        logging.info(
            "Running {0} with {1} samples, master seed {2}".format(
                config.experiment, config.samples, config.master_seed
            )
        )
        tables, summary, extra = EXPERIMENTS[config.experiment](config)
        processing.write_artifacts(config, tables, summary, extra)
    except Exception:
        msg = "The {0} experiment failed.".format(config.experiment)
        logging.exception(msg)
        return EXIT_FAILURE
    return EXIT_OK
