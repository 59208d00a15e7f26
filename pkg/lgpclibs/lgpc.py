#!/usr/bin/python3
#
# -*- coding: utf-8 -*-
# vim: ts=4 sw=4 tw=100 et ai si
#
# Copyright (C) 2020-2021 Intel Corporation
# SPDX-License-Identifier: BSD-3-Clause
#
# Author: Artem Bityutskiy <artem.bityutskiy@linux.intel.com>

"""
lgpc - locally gentle pair calculator: excision, surface models, words, semilinear modules and
nodal checks.
"""

import sys
import json
import logging
try:
    import argcomplete
except ImportError:
    # We can live without argcomplete, we only lose tab completions.
    argcomplete = None

from lgpclibs.helperlibs import ArgParse, Logging, Human, Trivial
from lgpclibs.helperlibs.Exceptions import Error, ErrorBadFormat, ErrorNotSupported
from lgpclibs.helperlibs.Exceptions import ErrorUndecided
from lgpclibs import Quiver, Zembyk, Surface, Words, Galois, Reps, Nodal, LGFormat, Reports
from lgpclibs import Figures

if sys.version_info < (3,6):
    raise SystemExit("Error: this tool requires python version 3.6 or higher")

VERSION = "1.0.0"
OWN_NAME = "lgpc"

LOG = logging.getLogger()
Logging.setup_logger(prefix=OWN_NAME)

# Exit codes.
EXIT_OK = 0
EXIT_FAILED = 1
EXIT_BAD_FORMAT = 2
EXIT_NOT_SUPPORTED = 3
EXIT_UNDECIDED = 4

def _load(args):
    """Read the input file and return the '(pair, sigma, field)' tuple."""
    return LGFormat.to_pair(LGFormat.read(args.infile))

def _concrete(pair, sigma, field):
    """
    Return the '(sigma, field)' tuple with concrete automorphisms. Inputs without a field get the
    identity automorphisms over 'F_2'.
    """

    if field is not None:
        return sigma, field

    LOG.notice("no field is given, using F_2 with identity automorphisms")
    field = Galois.FiniteField(2)
    return Galois.frobenius_sigma(pair, field), field

def _print_json(info):
    """Print info dictionary 'info' as JSON."""
    LOG.info("%s", json.dumps(info, indent=2, ensure_ascii=False))

def _print_text(text):
    """Print a multi-line text."""
    LOG.info("%s", text.rstrip("\n"))

def validate_command(args):
    """Implements the 'validate' command."""

    doc = LGFormat.read(args.infile)
    info = Reports.validate_info(LGFormat.to_quiver(doc), doc.relations)

    if args.json:
        _print_json(info)
    elif info["locally_gentle"]:
        keys_descr = Reports.VALIDATE_KEYS_DESCR
        LOG.info("%s: %s", keys_descr["locally_gentle"], Human.bool2str(True))
        LOG.info("%s: %s", keys_descr["gentle"], Human.bool2str(info["gentle"]))
    else:
        LOG.info("%s: %s", Reports.VALIDATE_KEYS_DESCR["locally_gentle"], Human.bool2str(False))
        for viol in info["violations"]:
            LOG.info("  * [%s] %s", viol["code"], viol["msg"])

    return EXIT_OK if info["locally_gentle"] else EXIT_FAILED

def classify_command(args):
    """Implements the 'classify' command."""

    pair, _, _ = _load(args)
    info = Reports.classify_info(pair)

    if args.json:
        _print_json(info)
        return EXIT_OK

    for vinfo in info["vertices"]:
        witnesses = [f"{key}={vinfo[key]}" for key in ("a", "b", "c", "d") if vinfo[key]]
        if witnesses:
            LOG.info("%s: %s (%s)", vinfo["vertex"], vinfo["kind"], ", ".join(witnesses))
        else:
            LOG.info("%s: %s", vinfo["vertex"], vinfo["kind"])
    return EXIT_OK

def _print_quiver_info(qinfo, indent=""):
    """Print the vertices and arrows of a quiver info dictionary."""

    keys_descr = Reports.PAIR_KEYS_DESCR
    LOG.info("%s%s: %s", indent, keys_descr["vertices"], Human.seq2str(qinfo["vertices"]))
    arrows = [f"{name}: {tail}->{head}" for name, tail, head in qinfo["arrows"]]
    LOG.info("%s%s: %s", indent, keys_descr["arrows"], Human.seq2str(arrows))

def excise_command(args):
    """Implements the 'excise' command."""

    pair, _, _ = _load(args)
    order = None
    if args.order:
        order = Trivial.split_csv_line(args.order)
    info = Reports.excise_info(pair, Zembyk.excision(pair, order=order))

    if args.json:
        _print_json(info)
        return EXIT_OK

    keys_descr = Reports.EXCISE_KEYS_DESCR
    LOG.info("%s:", keys_descr["levees"])
    for lev in info["levees"]:
        LOG.info("  %s -> %s, %s", lev["vertex"], lev["sharp"], lev["flat"])
    if not info["levees"]:
        LOG.info("  none, there are no relations")

    LOG.info("%s:", keys_descr["components"])
    for idx, comp in enumerate(info["components"], start=1):
        LOG.info("  %d. %s", idx, comp["kind"])
        _print_quiver_info(comp, indent="     ")
    LOG.info("%s: %s", keys_descr["acyclic"], Human.bool2str(info["acyclic"]))
    return EXIT_OK

def levee_command(args):
    """Implements the 'levee' command."""

    pair, _, _ = _load(args)
    info = Reports.levee_info(pair, args.vertex)

    if args.json:
        _print_json(info)
        return EXIT_OK

    LOG.info("Levee at %s vertex '%s': '%s' and '%s'", info["kind"].lower(), info["vertex"],
             info["sharp"], info["flat"])
    _print_quiver_info(info)
    LOG.info("%s: %s", Reports.PAIR_KEYS_DESCR["relations"], Human.seq2str(info["relations"]))
    return EXIT_OK

def _thread_str(thread):
    """Return the text form of a fan or face info dictionary."""

    if not thread["arrows"]:
        return "empty at " + ":".join(str(elt) for elt in thread["anchor"])
    text = ", ".join(thread["arrows"])
    if thread["cyclic"]:
        text += " (cyclic)"
    return text

def surface_command(args):
    """Implements the 'surface' command."""

    pair, _, _ = _load(args)
    if args.dual:
        pair = Surface.dual(pair)
    info = Reports.surface_info(Surface.build_surface(pair))
    info["dual"] = args.dual

    if args.json:
        _print_json(info)
        return EXIT_OK

    keys_descr = Reports.SURFACE_KEYS_DESCR
    for key in ("euler_characteristic", "genus", "boundary_components", "punctures_v",
                "punctures_vstar"):
        LOG.info("%s: %s", keys_descr[key], info[key])
    for key in ("fans", "faces"):
        LOG.info("%s:", keys_descr[key])
        for idx, thread in enumerate(info[key]):
            LOG.info("  %d: %s", idx, _thread_str(thread))
    LOG.info("%s:", keys_descr["boundary_walks"])
    for walk in info["boundary_walks"]:
        LOG.info("  %s", " ".join(f"({fan},{face})" for fan, face in walk))
    return EXIT_OK

def split_command(args):
    """Implements the 'split' command."""

    pair, _, _ = _load(args)
    info = Reports.split_info(Surface.split(pair))

    if args.json:
        _print_json(info)
        return EXIT_OK

    for idx, piece in enumerate(info["pieces"], start=1):
        LOG.info("%d. %s (%s): arcs %s", idx, piece["kind"], piece["component_kind"],
                 Human.seq2str(piece["arcs"]))
    return EXIT_OK

def strings_command(args):
    """Implements the 'strings' command."""

    pair, _, _ = _load(args)
    max_len = ArgParse.parse_natural(args.max_len, "maximum string length")
    words = Words.enumerate_strings(pair, max_len)
    info = Reports.words_info("strings", "max_len", max_len, words)

    if args.json:
        _print_json(info)
    else:
        for text in info["words"]:
            LOG.info("%s", text)
    return EXIT_OK

def bands_command(args):
    """Implements the 'bands' command."""

    pair, _, _ = _load(args)
    max_period = ArgParse.parse_natural(args.max_period, "maximum band period")
    words = Words.enumerate_bands(pair, max_period)
    info = Reports.words_info("bands", "max_period", max_period, words)

    if args.json:
        _print_json(info)
    elif not words:
        LOG.info("No bands of period up to %d", max_period)
    else:
        for text in info["words"]:
            LOG.info("%s", text)
    return EXIT_OK

def pi_command(args):
    """Implements the 'pi' command."""

    pair, sigma, field = _load(args)
    word = LGFormat.parse_word(args.word)
    pis = Galois.pi_sequence(pair, word, sigma, field)
    info = Reports.pi_info(pair, word, pis)

    if args.json:
        _print_json(info)
        return EXIT_OK

    for idx, autom in enumerate(info["pi"]):
        LOG.info("π_%d = %s", idx, autom)
    if "pi_band" in info:
        LOG.info("π_C = %s", info["pi_band"])
    return EXIT_OK

def _word_module(pair, sigma, field, text, matrix_path):
    """Parse word 'text' and build its string or band module."""

    word = LGFormat.parse_word(text)
    if word.kind != Words.BAND:
        if matrix_path:
            raise Error(f"'{text}' is not a band, band parameter matrix is not needed")
        return word, Reps.string_module(pair, sigma, field, word)

    if matrix_path:
        mat = LGFormat.read_matrix(matrix_path, field)
    else:
        LOG.notice("no band parameter matrix is given, using the 1x1 matrix [1]")
        mat = [[1]]
    param = Reps.band_parameter(field, mat)
    return word, Reps.band_module(pair, sigma, field, word, param)

def module_command(args):
    """Implements the 'module' command."""

    pair, sigma, field = _load(args)
    sigma, field = _concrete(pair, sigma, field)
    word, rep = _word_module(pair, sigma, field, args.word, args.band_matrix)
    check = Reps.check_rep(rep, pair)

    limit = None
    if args.end_limit is not None:
        limit = ArgParse.parse_natural(args.end_limit, "endomorphism ring size limit")

    undecided = False
    try:
        indecomposable = Reps.is_indecomposable(rep, pair, limit=limit)
    except ErrorUndecided as err:
        LOG.warning("cannot decide indecomposability: %s", err)
        indecomposable = None
        undecided = True

    info = Reports.module_info(word, rep, check, indecomposable)
    if args.json:
        _print_json(info)
    else:
        keys_descr = Reports.MODULE_KEYS_DESCR
        for key in ("word", "field", "dimension"):
            LOG.info("%s: %s", keys_descr[key], info[key])
        LOG.info("%s:\n%s", keys_descr["dimension_vector"],
                 Human.dict2str(info["dimension_vector"]))
        for name, mat in rep.maps.items():
            if mat.size:
                LOG.info("Arrow %s (%s):\n%s", name, sigma[name],
                         Human.matrix2str(field, mat, indent="  "))
        LOG.info("%s: %s", keys_descr["check_ok"], Human.bool2str(check.ok))
        for failure in check.failures:
            LOG.info("  * %s", failure)
        if not undecided:
            LOG.info("%s: %s", keys_descr["indecomposable"], Human.bool2str(indecomposable))

    if not check.ok:
        return EXIT_FAILED
    if undecided:
        return EXIT_UNDECIDED
    return EXIT_OK

def hom_command(args):
    """Implements the 'hom' command."""

    pair, sigma, field = _load(args)
    sigma, field = _concrete(pair, sigma, field)
    word1, rep1 = _word_module(pair, sigma, field, args.word, args.band_matrix)
    word2, rep2 = _word_module(pair, sigma, field, args.word2, args.band_matrix2)

    dim12 = Reps.hom_space(rep1, rep2, pair).dimension
    dim21 = Reps.hom_space(rep2, rep1, pair).dimension
    info = Reports.hom_info(word1, word2, field, dim12, dim21)

    if args.json:
        _print_json(info)
        return EXIT_OK

    keys_descr = Reports.HOM_KEYS_DESCR
    LOG.info("%s: %d (over %s)", keys_descr["dim_hom_12"], dim12, info["prime_field"])
    LOG.info("%s: %d (over %s)", keys_descr["dim_hom_21"], dim21, info["prime_field"])
    return EXIT_OK

def nodal_command(args):
    """Implements the 'nodal' command."""

    pair, sigma, field = _load(args)
    report = Nodal.check_nodal(pair, sigma, field)
    info = Reports.nodal_info(report)

    if args.json:
        _print_json(info)
    else:
        keys_descr = Nodal.NODAL_KEYS_DESCR
        for key, descr in keys_descr.items():
            val = info[key]
            if isinstance(val, bool):
                LOG.info("%s: %s", descr, Human.bool2str(val))
            elif isinstance(val, dict):
                LOG.info("%s:\n%s", descr, Human.dict2str(val))
            else:
                LOG.info("%s: %s", descr, val)

    return EXIT_OK if report.verdict else EXIT_FAILED

def dot_command(args):
    """Implements the 'dot' command."""

    pair, _, _ = _load(args)
    exc = Zembyk.excision(pair) if args.excision else None
    text = Figures.to_dot(pair, exc=exc)

    if args.json:
        info = {"format_version" : Reports.FORMAT_VERSION, "command" : "dot", "dot" : text}
        _print_json(info)
    else:
        _print_text(text)
    return EXIT_OK

def tiling_command(args):
    """Implements the 'tiling' command."""

    pair, sigma, _ = _load(args)
    tiling = Surface.labeled_tiling(pair, sigma)
    info = Reports.tiling_info(tiling)

    if args.tikz:
        info["tikz"] = Figures.to_tikz(tiling)

    if args.json:
        _print_json(info)
        return EXIT_OK

    LOG.info("Relational dual arcs: %s", Human.seq2str(info["rstar"]))
    for idx, piece in enumerate(info["pieces"]):
        label = piece["label"] if piece["label"] is not None else "-"
        LOG.info("%3d  face %-3d sides %-12s corner %-10s label %s", idx, piece["face"],
                 ",".join(piece["sides"]), piece["corner"] or "-", label)
    if args.tikz:
        _print_text(info["tikz"])
    return EXIT_OK

def paths_command(args):
    """Implements the 'paths' command."""

    pair, _, _ = _load(args)
    max_len = ArgParse.parse_natural(args.max_len, "maximum path length")
    info = Reports.paths_info(pair, max_len)

    if args.json:
        _print_json(info)
        return EXIT_OK

    for text in info["paths"]:
        LOG.info("%s", text)
    LOG.info("Algebra dimension: %s", info["dimension"])
    return EXIT_OK

def dual_command(args):
    """Implements the 'dual' command."""

    pair, sigma, field = _load(args)
    dpair = Surface.dual(pair)
    text = LGFormat.render(LGFormat.from_pair(dpair, field, sigma))

    if args.json:
        info = Reports.dual_info(pair, dpair)
        info["document"] = text
        _print_json(info)
    else:
        _print_text(text)
    return EXIT_OK

def random_command(args):
    """Implements the 'random' command."""

    seed = ArgParse.parse_natural(args.seed, "random seed")
    nverts = ArgParse.parse_natural(args.vertices, "vertices count")
    narrows = ArgParse.parse_natural(args.arrows, "arrows count")
    if not nverts:
        raise ErrorBadFormat("bad vertices count '0', need at least one vertex")

    pair = Quiver.random_locally_gentle(seed, nverts, narrows)
    _print_text(LGFormat.render(LGFormat.from_pair(pair)))
    return EXIT_OK

def build_arguments_parser():
    """A helper function which parses the input arguments."""

    text = "lgpc - locally gentle pair calculator."
    parser = ArgParse.ArgsParser(description=text, prog=OWN_NAME, ver=VERSION)

    text = "Force coloring of the text output."
    parser.add_argument("--force-color", action="store_true", help=text)
    subparsers = parser.add_subparsers(title="commands", metavar="")
    subparsers.required = True

    word_txt = """Words are comma-separated letters, an inverse letter has the '^-1' suffix, e.g.
                  'nu,zeta^-1'. Bands start with 'band:', trivial words are written as
                  'triv:VERTEX'."""

    #
    # Create parser for the 'validate' command.
    #
    text = "Check the locally gentle conditions."
    descr = """Check the locally gentle conditions and list all the violations. The exit code is 1
               if the conditions do not hold."""
    subpars = subparsers.add_parser("validate", help=text, description=descr)
    subpars.set_defaults(func=validate_command)
    ArgParse.add_input_options(subpars)

    #
    # Create parser for the 'classify' command.
    #
    text = "Classify the vertices."
    descr = """Classify every vertex as a stream, tributary, distributary, quadbutary or a
               non-relational vertex, and print the witnessing arrows."""
    subpars = subparsers.add_parser("classify", help=text, description=descr)
    subpars.set_defaults(func=classify_command)
    ArgParse.add_input_options(subpars)

    #
    # Create parser for the 'excise' command.
    #
    text = "Take the Zembyk excision."
    descr = """Take levees at all the relational vertices and list the components of the excised
               quiver: line quivers and cycles."""
    subpars = subparsers.add_parser("excise", help=text, description=descr)
    subpars.set_defaults(func=excise_command)
    ArgParse.add_input_options(subpars)

    text = """Comma-separated order of the relational vertices to take levees at (declaration
              order by default). The result does not depend on the order up to renaming."""
    subpars.add_argument("--order", help=text)

    #
    # Create parser for the 'levee' command.
    #
    text = "Take a single levee."
    descr = """Split a relational vertex into its sharp and flat copies and print the resulting
               quiver with relations."""
    subpars = subparsers.add_parser("levee", help=text, description=descr)
    subpars.set_defaults(func=levee_command)
    ArgParse.add_input_options(subpars)

    text = """The relational vertex to take the levee at."""
    subpars.add_argument("--vertex", required=True, help=text)

    #
    # Create parser for the 'surface' command.
    #
    text = "Build the dissected surface model."
    descr = """Build the marked surface with a dissection of the quiver with relations and print
               its fans, faces, boundary walks and invariants."""
    subpars = subparsers.add_parser("surface", help=text, description=descr)
    subpars.set_defaults(func=surface_command)
    ArgParse.add_input_options(subpars)

    text = """Build the surface of the dual pair instead (the complementary relations)."""
    subpars.add_argument("--dual", action="store_true", help=text)

    #
    # Create parser for the 'split' command.
    #
    text = "Split the surface along the relational dual arcs."
    descr = """Cut the surface along the dual arcs of the relational vertices and classify the
               pieces as polygons, annuli and once-punctured disks."""
    subpars = subparsers.add_parser("split", help=text, description=descr)
    subpars.set_defaults(func=split_command)
    ArgParse.add_input_options(subpars)

    #
    # Create parser for the 'strings' command.
    #
    text = "Enumerate strings."
    descr = """List canonical representatives of all the admissible strings up to the given
               length, trivial words included."""
    subpars = subparsers.add_parser("strings", help=text, description=descr)
    subpars.set_defaults(func=strings_command)
    ArgParse.add_input_options(subpars)

    text = """Maximum string length, default is 3."""
    subpars.add_argument("--max-len", default="3", help=text)

    #
    # Create parser for the 'bands' command.
    #
    text = "Enumerate bands."
    descr = """List canonical representatives of all the primitive admissible bands up to the
               given period."""
    subpars = subparsers.add_parser("bands", help=text, description=descr)
    subpars.set_defaults(func=bands_command)
    ArgParse.add_input_options(subpars)

    text = """Maximum band period, default is 4."""
    subpars.add_argument("--max-period", default="4", help=text)

    #
    # Create parser for the 'pi' command.
    #
    text = "Compute the automorphism sequence of a word."
    descr = f"""Compute the running composition of arrow automorphisms along a word. Without a
                field in the input file the automorphisms are symbolic. {word_txt}"""
    subpars = subparsers.add_parser("pi", help=text, description=descr)
    subpars.set_defaults(func=pi_command)
    ArgParse.add_input_options(subpars)
    subpars.add_argument("--word", required=True, help="The admissible word.")

    #
    # Create parser for the 'module' command.
    #
    text = "Build a string or band module."
    descr = f"""Build the semilinear string or band module of a word, check it and test it for
                indecomposability. Without a field in the input file, 'F_2' is used. The exit code
                is 4 if the endomorphism ring is too large to decide. {word_txt}"""
    subpars = subparsers.add_parser("module", help=text, description=descr)
    subpars.set_defaults(func=module_command)
    ArgParse.add_input_options(subpars)
    subpars.add_argument("--word", required=True, help="The admissible string or band.")

    text = """Path to the band parameter matrix file: one row per line, entries are coefficient
              digits, lowest degree first (e.g., '01' is 'x'). The default is the 1x1 matrix
              [1]."""
    subpars.add_argument("--band-matrix", help=text)

    text = f"""The largest endomorphism ring to enumerate, default is {Reps.END_ENUM_LIMIT}
               elements."""
    subpars.add_argument("--end-limit", help=text)

    #
    # Create parser for the 'hom' command.
    #
    text = "Compute homomorphism dimensions."
    descr = f"""Compute the dimensions of the homomorphism spaces between the modules of two words,
                over the prime field. {word_txt}"""
    subpars = subparsers.add_parser("hom", help=text, description=descr)
    subpars.set_defaults(func=hom_command)
    ArgParse.add_input_options(subpars)
    subpars.add_argument("--word", required=True, help="The first word.")
    subpars.add_argument("--word2", required=True, help="The second word.")
    subpars.add_argument("--band-matrix", help="Band parameter matrix file of the first word.")
    subpars.add_argument("--band-matrix2", help="Band parameter matrix file of the second word.")

    #
    # Create parser for the 'nodal' command.
    #
    text = "Check the nodal conditions."
    descr = """Embed the algebra of a gentle pair into the algebra of its excision and check the
               nodal conditions. The exit code is 1 if the verdict is negative and 3 if the pair
               is not gentle."""
    subpars = subparsers.add_parser("nodal", help=text, description=descr)
    subpars.set_defaults(func=nodal_command)
    ArgParse.add_input_options(subpars)

    #
    # Create parser for the 'dot' command.
    #
    text = "Print the quiver in the DOT format."
    descr = """Print the quiver with relations in the DOT graph format, relations are dashed."""
    subpars = subparsers.add_parser("dot", help=text, description=descr)
    subpars.set_defaults(func=dot_command)
    ArgParse.add_input_options(subpars)

    text = """Draw the excised quiver as well."""
    subpars.add_argument("--excision", action="store_true", help=text)

    #
    # Create parser for the 'tiling' command.
    #
    text = "Print the labeled tiling."
    descr = """Print the pieces of the faces cut by the relational dual arcs, with the automorphism
               labels of the pieces having a corner."""
    subpars = subparsers.add_parser("tiling", help=text, description=descr)
    subpars.set_defaults(func=tiling_command)
    ArgParse.add_input_options(subpars)

    text = """Print a TikZ skeleton of the surface as well."""
    subpars.add_argument("--tikz", action="store_true", help=text)

    #
    # Create parser for the 'paths' command.
    #
    text = "List admissible paths."
    descr = """List the admissible paths up to the given length and print the dimension of the
               algebra."""
    subpars = subparsers.add_parser("paths", help=text, description=descr)
    subpars.set_defaults(func=paths_command)
    ArgParse.add_input_options(subpars)

    text = """Maximum path length, default is 3."""
    subpars.add_argument("--max-len", default="3", help=text)

    #
    # Create parser for the 'dual' command.
    #
    text = "Print the dual pair."
    descr = """Print the dual quiver with relations, which has the complementary relations, in the
               '.lg' format."""
    subpars = subparsers.add_parser("dual", help=text, description=descr)
    subpars.set_defaults(func=dual_command)
    ArgParse.add_input_options(subpars)

    #
    # Create parser for the 'random' command.
    #
    text = "Generate a random locally gentle pair."
    descr = """Generate a random locally gentle pair and print it in the '.lg' format. The result
               is fully determined by the seed."""
    subpars = subparsers.add_parser("random", help=text, description=descr)
    subpars.set_defaults(func=random_command)
    subpars.add_argument("--seed", default="0", help="The random seed, default is 0.")
    subpars.add_argument("--vertices", default="6", help="Vertices count, default is 6.")
    subpars.add_argument("--arrows", default="7", help="Arrows count, default is 7.")

    if argcomplete:
        argcomplete.autocomplete(parser)

    return parser

def parse_arguments():
    """Parse input arguments."""

    parser = build_arguments_parser()
    args = parser.parse_args()

    return args

def main():
    """Script entry point."""

    try:
        args = parse_arguments()
    except Error as err:
        LOG.error(err)
        return EXIT_BAD_FORMAT

    if not getattr(args, "func", None):
        LOG.error("please, run '%s -h' for help.", OWN_NAME)
        return EXIT_BAD_FORMAT

    try:
        ret = args.func(args)
    except KeyboardInterrupt:
        LOG.info("\nInterrupted, exiting")
        return EXIT_FAILED
    except ErrorBadFormat as err:
        LOG.error(err)
        return EXIT_BAD_FORMAT
    except ErrorNotSupported as err:
        LOG.error(err)
        return EXIT_NOT_SUPPORTED
    except ErrorUndecided as err:
        LOG.error(err)
        return EXIT_UNDECIDED
    except Error as err:
        # Exits with 'EXIT_FAILED', prints the traceback in debug mode.
        LOG.error_out(err)

    return ret or EXIT_OK

if __name__ == "__main__":
    sys.exit(main())
