# -*- coding: utf-8 -*-
# vim: ts=4 sw=4 tw=100 et ai si
#
# Copyright (C) 2020-2021 Intel Corporation
# SPDX-License-Identifier: BSD-3-Clause
#
# Author: Artem Bityutskiy <artem.bityutskiy@linux.intel.com>

"""
This module implements the '.lg' text format describing a quiver with relations, as well as the
text forms of words and band parameter matrices.

The '.lg' format is line-oriented, the statements may come in any order:
    # A comment, empty lines are ignored too.
    field 2 2 111                    # F_2[x]/(x^2+x+1), modulus coefficients lowest degree first
    vertices 1 2 3                   # may be repeated, the vertices accumulate
    arrow alpha 1 2                  # arrow 'alpha' from vertex 1 to vertex 2
    arrow beta 2 3 frob 1            # optional Frobenius exponent of the arrow automorphism
    relations beta*alpha             # "beta after alpha", may be repeated

Semantic checks (unknown vertices, the locally gentle conditions) are not done by 'parse()', they
are done when the document is turned into a pair by 'to_pair()'.
"""

import logging
from collections import namedtuple
import numpy
from lgpclibs import Quiver, Galois, Words
from lgpclibs.helperlibs import Trivial
from lgpclibs.helperlibs.Exceptions import Error, ErrorBadFormat

_LOG = logging.getLogger()

FieldSpec = namedtuple("FieldSpec", ["p", "n", "modulus"])
ArrowSpec = namedtuple("ArrowSpec", ["name", "tail", "head", "frob"])
InputDocument = namedtuple("InputDocument", ["field", "vertices", "arrows", "relations"])

def _parse_int(token, what, lineno):
    """Turn 'token' into a non-negative integer or raise 'ErrorBadFormat'."""

    if not Trivial.is_int(token) or int(token) < 0:
        raise ErrorBadFormat(f"bad {what} '{token}', should be a non-negative integer",
                             lineno=lineno)
    return int(token)

def _parse_field(tokens, lineno):
    """Parse the arguments of the 'field' statement."""

    if len(tokens) not in (2, 3):
        raise ErrorBadFormat("the 'field' statement needs the characteristic, the degree and "
                             "optionally the modulus coefficients, e.g. 'field 2 2 111'",
                             lineno=lineno)

    p = _parse_int(tokens[0], "field characteristic", lineno)
    n = _parse_int(tokens[1], "field degree", lineno)
    modulus = None
    if len(tokens) == 3:
        text = tokens[2]
        parts = text.split(":") if ":" in text else list(text)
        if not all(Trivial.is_int(part) for part in parts):
            raise ErrorBadFormat(f"bad modulus coefficients '{text}'", lineno=lineno)
        modulus = tuple(int(part) for part in parts)
    return FieldSpec(p, n, modulus)

def _parse_arrow(tokens, lineno):
    """Parse the arguments of the 'arrow' statement."""

    if len(tokens) == 3:
        return ArrowSpec(tokens[0], tokens[1], tokens[2], None)
    if len(tokens) == 5 and tokens[3] == "frob":
        return ArrowSpec(tokens[0], tokens[1], tokens[2],
                         _parse_int(tokens[4], "Frobenius exponent", lineno))
    raise ErrorBadFormat("bad 'arrow' statement, expected 'arrow NAME TAIL HEAD [frob K]'",
                         lineno=lineno)

def _parse_relation(token, lineno):
    """Parse a single "b*a" relation token."""

    parts = token.split("*")
    if len(parts) != 2 or not all(parts):
        raise ErrorBadFormat(f"bad relation '{token}', expected 'OUTER*INNER', e.g. 'beta*alpha'",
                             lineno=lineno)
    return Quiver.Relation(parts[0], parts[1])

def parse(text):
    """Parse '.lg' document 'text' and return the 'InputDocument' tuple."""

    field = None
    vertices = []
    arrows = []
    relations = []
    frob_lineno = None

    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue

        keyword, *tokens = line.split()
        if keyword == "field":
            if field is not None:
                raise ErrorBadFormat("the 'field' statement is given more than once",
                                     lineno=lineno)
            field = _parse_field(tokens, lineno)
        elif keyword == "vertices":
            if not tokens:
                raise ErrorBadFormat("the 'vertices' statement lists no vertices", lineno=lineno)
            vertices += tokens
        elif keyword == "arrow":
            arrow = _parse_arrow(tokens, lineno)
            if arrow.frob is not None and frob_lineno is None:
                frob_lineno = lineno
            arrows.append(arrow)
        elif keyword == "relations":
            relations += [_parse_relation(token, lineno) for token in tokens]
        else:
            raise ErrorBadFormat(f"unknown statement '{keyword}', expected one of: field, "
                                 f"vertices, arrow, relations", lineno=lineno)

    if not vertices:
        raise ErrorBadFormat("no vertices")
    if frob_lineno is not None and field is None:
        raise ErrorBadFormat("a Frobenius exponent is given, but there is no 'field' statement",
                             lineno=frob_lineno)

    return InputDocument(field, tuple(vertices), tuple(arrows), tuple(relations))

def render(doc):
    """
    Render 'InputDocument' tuple 'doc' in the canonical '.lg' form, so that 'parse(render(doc))'
    is 'doc'.
    """

    lines = []
    if doc.field is not None:
        line = f"field {doc.field.p} {doc.field.n}"
        if doc.field.modulus is not None:
            sep = ":" if doc.field.p > 10 else ""
            line += " " + sep.join(str(coef) for coef in doc.field.modulus)
        lines.append(line)

    lines.append("vertices " + " ".join(doc.vertices))
    for arrow in doc.arrows:
        line = f"arrow {arrow.name} {arrow.tail} {arrow.head}"
        if arrow.frob is not None:
            line += f" frob {arrow.frob}"
        lines.append(line)

    if doc.relations:
        lines.append("relations " + " ".join(Quiver.relation_str(rel) for rel in doc.relations))
    return "\n".join(lines) + "\n"

def read(path):
    """Read and parse the '.lg' file at 'path'."""

    try:
        with open(path, "r", encoding="utf-8") as fobj:
            text = fobj.read()
    except OSError as err:
        raise Error(f"failed to read '{path}':\n{err}") from None

    try:
        return parse(text)
    except ErrorBadFormat as err:
        raise ErrorBadFormat(f"{path}: {err}") from None

def make_field(doc):
    """Return the 'FiniteField' object of document 'doc', or 'None' if it has no field."""

    if doc.field is None:
        return None
    return Galois.FiniteField(doc.field.p, doc.field.n, doc.field.modulus)

def to_quiver(doc):
    """Return the 'Quiver' object of document 'doc', relations are not looked at."""
    return Quiver.Quiver(doc.vertices, [arrow[:3] for arrow in doc.arrows])

def to_pair(doc):
    """
    Turn 'InputDocument' tuple 'doc' into a validated locally gentle pair and return the
    '(pair, sigma, field)' tuple. Without a field the automorphisms are symbolic, with a field they
    are Frobenius powers ('frob 0' when no exponent is given) and 'field' is the 'FiniteField'
    object. Raise 'ErrorNotLocallyGentle' if the conditions do not hold.
    """

    pair = Quiver.validate_locally_gentle(to_quiver(doc), doc.relations)

    field = make_field(doc)
    if field is None:
        sigma = Galois.symbolic_sigma(pair)
    else:
        exponents = {arrow.name : arrow.frob for arrow in doc.arrows if arrow.frob}
        sigma = Galois.frobenius_sigma(pair, field, exponents)

    _LOG.debug("loaded a pair with %d vertices, %d arrows and %d relations",
               len(pair.vertices), len(pair.arrows), len(pair.relations))
    return pair, sigma, field

def from_pair(pair, field=None, sigma=None):
    """
    Return the 'InputDocument' tuple describing 'pair'. If 'field' is given, the Frobenius
    exponents of 'sigma' (a '{arrow: FrobPower}' dictionary) are recorded too.
    """

    fspec = None
    if field is not None:
        fspec = FieldSpec(field.p, field.n, tuple(field.modulus) if field.n > 1 else None)

    arrows = []
    for arr in pair.arrows.values():
        frob = None
        if sigma and isinstance(sigma.get(arr.name), Galois.FrobPower) and sigma[arr.name].k:
            frob = sigma[arr.name].k
        arrows.append(ArrowSpec(arr.name, arr.tail, arr.head, frob))

    return InputDocument(fspec, tuple(pair.vertices), tuple(arrows), tuple(pair.relations))

def _parse_letter(token):
    """Parse a single word letter: "nu" or "nu^-1"."""

    if token.endswith("^-1"):
        name, direct = token[:-3], False
    else:
        name, direct = token, True
    if not name or any(char in name for char in "^:,* \t"):
        raise ErrorBadFormat(f"bad word letter '{token}', expected 'NAME' or 'NAME^-1'")
    return Words.Letter(name, direct)

def parse_word(text):
    """
    Parse a word written as comma-separated letters ("nu,zeta^-1"), a band ("band:nu,beta,alpha")
    or a trivial word ("triv:2" or "triv:2:-" for the negative sign), and return the 'Word' tuple.
    Whether the word is admissible is not checked.
    """

    text = text.strip()
    if not text:
        raise ErrorBadFormat("empty word")

    if text.startswith("triv:"):
        parts = text.split(":")
        if len(parts) == 2 and parts[1]:
            return Words.trivial_word(parts[1])
        if len(parts) == 3 and parts[1] and parts[2] == "-":
            return Words.trivial_word(parts[1], -1)
        raise ErrorBadFormat(f"bad trivial word '{text}', expected 'triv:VERTEX' or "
                             f"'triv:VERTEX:-'")

    band = text.startswith("band:")
    if band:
        text = text[len("band:"):]

    tokens = [token.strip() for token in text.split(",")]
    if not all(tokens):
        raise ErrorBadFormat(f"bad word '{text}': empty letter")
    letters = [_parse_letter(token) for token in tokens]

    if band:
        return Words.band_word(letters)
    return Words.string_word(letters)

def parse_matrix(text, field):
    """
    Parse a square matrix over 'field' (a 'FiniteField' object): one row per line, entries
    separated by white-space in the 'FiniteField.parse_element()' format, '#' starts a comment.
    Return a numpy array of element indices.
    """

    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append([field.parse_element(token) for token in line.split()])
        except ErrorBadFormat as err:
            raise ErrorBadFormat(str(err), lineno=lineno) from None
        if len(rows[-1]) != len(rows[0]):
            raise ErrorBadFormat(f"row has {len(rows[-1])} entries, but the first row has "
                                 f"{len(rows[0])}", lineno=lineno)

    if not rows:
        raise ErrorBadFormat("empty matrix")
    if len(rows) != len(rows[0]):
        raise ErrorBadFormat(f"the matrix is {len(rows)}x{len(rows[0])}, expected a square one")
    return numpy.array(rows, dtype=int)

def read_matrix(path, field):
    """Read and parse the band parameter matrix file at 'path'."""

    try:
        with open(path, "r", encoding="utf-8") as fobj:
            text = fobj.read()
    except OSError as err:
        raise Error(f"failed to read '{path}':\n{err}") from None

    try:
        return parse_matrix(text, field)
    except ErrorBadFormat as err:
        raise ErrorBadFormat(f"{path}: {err}") from None
