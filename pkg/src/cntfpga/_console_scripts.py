# -*- coding: utf-8 -*-

"""Command line interface of cntfpga.

Three subcommands: ``run`` executes the experiment of a configuration,
``validate`` prints its diagnostics and ``schemes`` prints the table of
spare-row sharing schemes.

SPDX-FileCopyrightText: cntfpga developer group

SPDX-License-Identifier: MIT

"""

import argparse
import logging
import sys

from oemof.tools import logger

from cntfpga import __version__
from cntfpga._config import EXPERIMENT_NAMES
from cntfpga._config import ConfigError
from cntfpga._config import load_config
from cntfpga._config import read_config
from cntfpga._config import validate
from cntfpga._experiments import EXIT_CONFIG
from cntfpga._experiments import EXIT_FAILURE
from cntfpga._experiments import EXIT_OK
from cntfpga._experiments import run
from cntfpga.helpers import get_output_path
from cntfpga.redundancy import scheme_table


def _overrides(args):
    return {
        "master_seed": args.seed,
        "samples": args.samples,
        "output_dir": args.out,
        "experiment": args.experiment,
        "workers": args.workers,
    }


def _parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="PATH", help="JSON run config")
    common.add_argument(
        "--seed", type=int, metavar="N", help="override master_seed"
    )
    common.add_argument("--samples", type=int, metavar="N")
    common.add_argument("--out", metavar="DIR", help="output directory")
    common.add_argument("--experiment", choices=EXPERIMENT_NAMES)
    common.add_argument("--workers", type=int, metavar="N")
    common.add_argument(
        "-v", "--verbose", action="store_true", help="debug output on screen"
    )

    parser = argparse.ArgumentParser(
        prog="cntfpga",
        description="Test and repair simulator for CNT-based FPGAs.",
    )
    parser.add_argument(
        "--version", action="version", version="%(prog)s " + __version__
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser(
        "run", parents=[common], help="run the configured experiment"
    )
    sub.add_parser(
        "validate", parents=[common], help="check a configuration"
    )
    sub.add_parser("schemes", help="print the spare-row sharing schemes")
    return parser


def _run(args):
    try:
        config = load_config(args.config, **_overrides(args))
    except ConfigError as e:
        print(str(e), file=sys.stderr)
        return EXIT_CONFIG
    try:
        out = get_output_path(config.output_dir)
    except OSError as e:
        msg = "Cannot create the output directory {0}: {1}"
        print(msg.format(config.output_dir, e), file=sys.stderr)
        return EXIT_FAILURE
    logger.define_logging(
        logpath=out,
        logfile="cntfpga.log",
        screen_level=logging.DEBUG if args.verbose else logging.INFO,
        file_level=logging.DEBUG,
    )
    return run(config)


def _validate(args):
    try:
        raw = read_config(args.config) if args.config else {}
    except ConfigError as e:
        print(str(e), file=sys.stderr)
        return EXIT_CONFIG
    raw.update({k: v for k, v in _overrides(args).items() if v is not None})
    diagnostics = validate(raw)
    for d in diagnostics:
        print(str(d))
    if any(d.level == "error" for d in diagnostics):
        return EXIT_CONFIG
    print("Configuration is valid.")
    return EXIT_OK


def _schemes(args):
    print(scheme_table().to_string(index=False, float_format="{:.1f}".format))
    return EXIT_OK


COMMANDS = {"run": _run, "validate": _validate, "schemes": _schemes}


def main(argv=None):
    """Entry point of the ``cntfpga`` command; returns the exit code."""
    args = _parser().parse_args(argv)
    return COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
