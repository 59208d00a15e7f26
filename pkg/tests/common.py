#!/usr/bin/env python3
#
# -*- coding: utf-8 -*-
# vim: ts=4 sw=4 tw=100 et ai si
#
# Copyright (C) 2020-2021 Intel Corporation
# SPDX-License-Identifier: BSD-3-Clause
#
# Author: Antti Laakso <antti.laakso@linux.intel.com>

"""Common bits for the 'lgpc' tests."""

import sys
import json
from io import StringIO
from pathlib import Path
from lgpclibs import Quiver, LGFormat
from lgpclibs.helperlibs import Logging
from lgpclibs import lgpc

DATA_PATH = Path(__file__).parent.resolve() / "data"
GOLDEN_PATH = DATA_PATH / "golden"

def data_file(name):
    """Return the path to test data file 'name' as a string."""
    return str(DATA_PATH / name)

def load_pair(name):
    """
    Load test data file 'name' and return the '(pair, sigma, field)' tuple, same as
    'LGFormat.to_pair()'.
    """
    return LGFormat.to_pair(LGFormat.read(DATA_PATH / name))

def load_golden(name):
    """Load golden JSON file 'name'."""

    with open(GOLDEN_PATH / name, "r", encoding="utf-8") as fobj:
        return json.load(fobj)

def make_pair(vertices, arrows, relations=()):
    """
    Build a validated locally gentle pair. The 'vertices' argument is a string of white-space
    separated vertex names, 'arrows' is a list of '(name, tail, head)' tuples, 'relations' is a
    list of "b*a" strings.
    """

    rels = [Quiver.Relation(*rel.split("*")) for rel in relations]
    return Quiver.validate_locally_gentle(Quiver.Quiver(vertices.split(), arrows), rels)

def run_lgpc(arguments, exp_ret=None):
    """
    Run the 'lgpc' command with arguments 'arguments' and return the '(exit code, output)' tuple,
    where 'output' is what the command printed to the standard output. The 'exp_ret' value is the
    exit code the command is expected to return. The test will pass, if the 'exp_ret' is not
    provided, or it is equal to the exit code. Otherwise the test will fail.
    """

    info_stream = StringIO()
    error_stream = StringIO()
    sys.argv = [f"{lgpc.__file__}"] + arguments.split()
    Logging.setup_logger(prefix=lgpc.OWN_NAME, loglevel=Logging.INFO, colored=False,
                         info_stream=info_stream, error_stream=error_stream)

    try:
        ret = lgpc.main()
    except SystemExit as err:
        # Raised by 'argparse' on bad command line and by '-h' and '--version'.
        ret = err.code

    if exp_ret is not None:
        assert ret == exp_ret, f"'lgpc {arguments}' exited with {ret}, expected {exp_ret}, " \
                               f"errors:\n{error_stream.getvalue()}"

    return ret, info_stream.getvalue()

def run_lgpc_json(arguments, exp_ret=0):
    """Same as 'run_lgpc()', but adds the '--json' option and returns the parsed report."""

    _, output = run_lgpc(f"{arguments} --json", exp_ret=exp_ret)
    return json.loads(output)
