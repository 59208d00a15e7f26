# -*- coding: utf-8 -*-
# vim: ts=4 sw=4 tw=100 et ai si
#
# Copyright (C) 2020-2021 Intel Corporation
# SPDX-License-Identifier: BSD-3-Clause
#
# Author: Artem Bityutskiy <artem.bityutskiy@linux.intel.com>

"""
This module emits pictures as text: quivers with relations in the DOT graph format, and a TikZ
skeleton of the dissected surface with the labeled tiling.
"""

import re
import math
from lgpclibs import Quiver

# Transliterated Greek letter names which are turned back into TeX macros.
GREEK = ("alpha", "beta", "gamma", "delta", "epsilon", "zeta", "eta", "theta", "iota", "kappa",
         "lambda", "mu", "nu", "xi", "pi", "rho", "sigma", "tau", "upsilon", "phi", "chi", "psi",
         "omega")

# Radius of the circle the marked points are placed on, in centimeters.
TIKZ_RADIUS = 3

def _quote(name):
    """Quote a DOT identifier."""

    name = str(name).replace("\\", "\\\\").replace('"', '\\"')
    return f'"{name}"'

def _dot_body(pair, prefix="", indent="    "):
    """Return the DOT statements of 'pair', node names get the 'prefix' prefix."""

    lines = []
    for vertex in pair.vertices:
        lines.append(f"{indent}{_quote(prefix + vertex)} [label={_quote(vertex)}];")
    for arr in pair.arrows.values():
        lines.append(f"{indent}{_quote(prefix + arr.tail)} -> {_quote(prefix + arr.head)} "
                     f"[label={_quote(arr.name)}];")

    # A relation 'ba' is drawn as a dashed line from the tail of 'a' to the head of 'b'.
    quiver = pair.quiver
    for rel in pair.relations:
        src = prefix + quiver.tail(rel.inner)
        dst = prefix + quiver.head(rel.outer)
        lines.append(f"{indent}{_quote(src)} -> {_quote(dst)} "
                     f"[style=dashed, arrowhead=none, constraint=false, "
                     f"label={_quote(Quiver.relation_str(rel))}];")
    return lines

def to_dot(pair, exc=None, name="lgpc"):
    """
    Return the DOT text of 'pair'. If 'exc' (an 'ExcisionResult' tuple) is given, the excised
    quiver is drawn as a separate cluster.
    """

    lines = [f"digraph {_quote(name)} {{", "    rankdir=LR;"]
    if exc is None:
        lines += _dot_body(pair)
    else:
        lines.append("    subgraph cluster_pair {")
        lines.append('        label="quiver with relations";')
        lines += _dot_body(pair, prefix="q:", indent="        ")
        lines.append("    }")
        lines.append("    subgraph cluster_excision {")
        lines.append('        label="excision";')
        lines += _dot_body(Quiver.LocallyGentlePair(exc.quiver, ()), prefix="x:",
                           indent="        ")
        lines.append("    }")
    lines.append("}")
    return "\n".join(lines) + "\n"

def tex_name(name):
    """
    Return the TeX form of arrow or vertex name 'name': "alpha" becomes "\\alpha", "theta1"
    becomes "\\theta_{1}", other names are typeset upright.
    """

    matchobj = re.match(r"^([a-z]+)(\d*)$", name)
    if matchobj and matchobj.group(1) in GREEK:
        result = "\\" + matchobj.group(1)
        if matchobj.group(2):
            result += f"_{{{matchobj.group(2)}}}"
        return result
    return f"\\mathrm{{{name}}}"

def _autom_tex(autom):
    """Return the TeX form of an automorphism label."""

    text = str(autom)
    if text == "id":
        return "\\mathrm{id}"
    text = re.sub(r"^Frob", r"\\mathrm{Fr}", text)
    text = re.sub(r"σ_([A-Za-z0-9#]+)", lambda mobj: f"\\sigma_{{{tex_name(mobj.group(1))}}}",
                  text)
    return text.replace("^-1", "^{-1}")

def _arc_fans(surface):
    """Return the '{(arc, end): fan index}' dictionary."""

    pair = surface.pair
    ends = surface.end_assignment
    result = {}
    for idx, fan in enumerate(surface.v_fans):
        if not fan.arrows:
            result[fan.anchor] = idx
            continue
        for name in fan.arrows:
            arr = pair.arrows[name]
            result[(arr.tail, ends[(name, "tail")])] = idx
            result[(arr.head, ends[(name, "head")])] = idx
    return result

def to_tikz(tiling):
    """
    Return a TikZ skeleton of the surface of 'tiling' (a 'LabeledTiling' tuple): the marked
    points are placed on a circle, punctures are drawn hollow, every arc joins the marked points at
    its ends, and the arcs of the relational vertices are dashed. The face labels follow as
    comments.
    """

    surface = tiling.surface
    fans = surface.v_fans
    count = max(len(fans), 1)
    relational = set(tiling.rstar)

    lines = ["\\begin{tikzpicture}"]
    for idx, fan in enumerate(fans):
        angle = 90 + 360 * idx / count
        xpos = TIKZ_RADIUS * math.cos(math.radians(angle))
        ypos = TIKZ_RADIUS * math.sin(math.radians(angle))
        style = "draw, circle, inner sep=1.5pt" + ("" if fan.cyclic else ", fill")
        lines.append(f"  \\node[{style}] (p{idx}) at ({xpos:.3f}, {ypos:.3f}) {{}};")

    arc_fans = _arc_fans(surface)
    for arc in surface.arcs:
        start, stop = arc_fans[(arc, 0)], arc_fans[(arc, 1)]
        style = "thick, dashed" if arc in relational else "thick"
        if start == stop:
            edge = "to[out=45, in=135, looseness=8]"
        else:
            edge = "--"
        lines.append(f"  \\draw[{style}] (p{start}) {edge} node[midway, fill=white] "
                     f"{{$\\tau_{{{tex_name(arc)}}}$}} (p{stop});")

    lines.append("  % Labeled tiling pieces: face, sides, label.")
    for idx, piece in enumerate(tiling.pieces):
        sides = ", ".join(piece.sides)
        label = ""
        if idx in tiling.face_label:
            label = f" ${_autom_tex(tiling.face_label[idx])}$"
        lines.append(f"  % face {piece.face}: [{sides}]{label}")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"

