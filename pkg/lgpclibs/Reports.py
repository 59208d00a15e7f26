# -*- coding: utf-8 -*-
# vim: ts=4 sw=4 tw=100 et ai si
#
# Copyright (C) 2020-2021 Intel Corporation
# SPDX-License-Identifier: BSD-3-Clause
#
# Author: Artem Bityutskiy <artem.bityutskiy@linux.intel.com>

"""
This module turns the results of the library operations into info dictionaries. The dictionaries
contain only strings, numbers, booleans, lists and dictionaries, so they can be dumped as JSON
as-is, and their key order is deterministic. The '*_KEYS_DESCR' dictionaries describe the keys for
the human-readable output.

The machine-readable format is documented by 'docs/lgpc-report.schema.json'.
"""

import math
from lgpclibs import Quiver, Zembyk, Words, Algebra, Nodal

# Version of the machine-readable report format.
FORMAT_VERSION = 1

PAIR_KEYS_DESCR = {
    "vertices" : "Vertices",
    "arrows" : "Arrows",
    "relations" : "Relations",
}

VALIDATE_KEYS_DESCR = {
    "locally_gentle" : "Locally gentle",
    "gentle" : "Gentle (finite-dimensional algebra)",
    "violations" : "Violations",
}

EXCISE_KEYS_DESCR = {
    "levees" : "Levees",
    "components" : "Components",
    "acyclic" : "Excised quiver is acyclic",
}

SURFACE_KEYS_DESCR = {
    "euler_characteristic" : "Euler characteristic",
    "genus" : "Genus",
    "boundary_components" : "Boundary components",
    "punctures_v" : "Punctures (marked points)",
    "punctures_vstar" : "Internal faces",
    "fans" : "Fans (marked points)",
    "faces" : "Faces",
    "boundary_walks" : "Boundary walks (fan, face)",
}

MODULE_KEYS_DESCR = {
    "word" : "Word",
    "field" : "Field",
    "dimension" : "Dimension",
    "dimension_vector" : "Dimension vector",
    "check_ok" : "Representation check passed",
    "indecomposable" : "Indecomposable",
}

HOM_KEYS_DESCR = {
    "dim_hom_12" : "Hom dimension, first to second",
    "dim_hom_21" : "Hom dimension, second to first",
}

def _header(command):
    """Return the common report header."""
    return {"format_version" : FORMAT_VERSION, "command" : command}

def pair_info(pair):
    """Return the info dictionary describing 'pair' itself."""

    return {"vertices" : list(pair.vertices),
            "arrows" : [[arr.name, arr.tail, arr.head] for arr in pair.arrows.values()],
            "relations" : [Quiver.relation_str(rel) for rel in pair.relations]}

def validate_info(quiver, relations):
    """Return the 'validate' report for 'quiver' with 'relations'."""

    violations = Quiver.check_locally_gentle(quiver, relations)
    info = _header("validate")
    info["locally_gentle"] = not violations
    info["violations"] = [{"code" : viol.code, "where" : viol.where, "msg" : viol.msg}
                          for viol in violations]
    gentle = None
    if not violations:
        gentle = Quiver.is_gentle(Quiver.LocallyGentlePair(quiver, relations))
    info["gentle"] = gentle
    return info

def classify_info(pair):
    """Return the 'classify' report: the class and the witnesses of every vertex."""

    info = _header("classify")
    info["vertices"] = []
    for vertex in pair.vertices:
        cls = Quiver.classify_vertex(pair, vertex)
        info["vertices"].append({"vertex" : vertex, "kind" : cls.kind, "a" : cls.a, "b" : cls.b,
                                 "c" : cls.c, "d" : cls.d})
    info["gentle"] = Quiver.is_gentle(pair)
    return info

def _quiver_info(quiver):
    """Return the vertices and arrows of 'quiver'."""

    return {"vertices" : list(quiver.vertices),
            "arrows" : [[arr.name, arr.tail, arr.head] for arr in quiver.arrows.values()]}

def excise_info(pair, exc=None):
    """Return the 'excise' report."""

    if exc is None:
        exc = Zembyk.excision(pair)

    info = _header("excise")
    info["levees"] = [{"vertex" : lev.vertex, "sharp" : lev.sharp, "flat" : lev.flat}
                      for lev in exc.levees]
    info["vertex_map"] = {vertex : list(images) for vertex, images in exc.vertex_map.items()}
    info["components"] = []
    for comp in exc.components:
        cinfo = _quiver_info(comp.quiver)
        cinfo["kind"] = comp.kind
        info["components"].append(cinfo)
    info["acyclic"] = Zembyk.is_acyclic(exc.quiver)
    return info

def levee_info(pair, vertex):
    """Return the 'levee' report for the levee of 'pair' at 'vertex'."""

    res = Zembyk.levee(pair, vertex)
    violations = Quiver.check_locally_gentle(res.pair.quiver, res.pair.relations)

    info = _header("levee")
    info["vertex"] = vertex
    info["kind"] = Quiver.classify_vertex(pair, vertex).kind
    info["sharp"] = res.sharp
    info["flat"] = res.flat
    info.update(pair_info(res.pair))
    info["locally_gentle"] = not violations
    return info

def _thread_info(thread):
    """Return the info dictionary of a fan or face thread."""

    anchor = None
    if thread.anchor is not None:
        anchor = list(thread.anchor)
    return {"arrows" : list(thread.arrows), "anchor" : anchor, "cyclic" : thread.cyclic}

def surface_info(surface, command="surface"):
    """Return the 'surface' report of 'DissectedSurface' tuple 'surface'."""

    info = _header(command)
    info["arcs"] = list(surface.arcs)
    info["fans"] = [_thread_info(fan) for fan in surface.v_fans]
    info["faces"] = [_thread_info(face) for face in surface.faces]
    info["euler_characteristic"] = surface.euler_characteristic
    info["genus"] = surface.genus
    info["boundary_components"] = surface.boundary_components
    info["boundary_walks"] = [[list(step) for step in walk] for walk in surface.boundary_walks]
    info["punctures_v"] = surface.punctures_v
    info["punctures_vstar"] = surface.punctures_vstar
    info["components"] = [{"arcs" : list(comp.arcs),
                           "euler_characteristic" : comp.euler_characteristic,
                           "genus" : comp.genus,
                           "boundary_components" : comp.boundary_components,
                           "punctures" : comp.punctures} for comp in surface.components]
    return info

def split_info(pieces):
    """Return the 'split' report for the list of 'SplitPiece' tuples 'pieces'."""

    info = _header("split")
    info["pieces"] = []
    for piece in pieces:
        surf = piece.surface
        info["pieces"].append({"arcs" : list(surf.arcs), "kind" : piece.kind,
                               "component_kind" : piece.component_kind,
                               "euler_characteristic" : surf.euler_characteristic,
                               "genus" : surf.genus,
                               "boundary_components" : surf.boundary_components,
                               "punctures" : surf.punctures_v})
    return info

def words_info(command, limit_name, limit, words):
    """Return the 'strings' or 'bands' report for the list of words 'words'."""

    info = _header(command)
    info[limit_name] = limit
    info["count"] = len(words)
    info["words"] = [Words.word_str(word) for word in words]
    return info

def pi_info(pair, word, pis):
    """Return the 'pi' report for 'word' and its automorphism sequence 'pis'."""

    info = _header("pi")
    info["word"] = Words.word_str(word)
    info["vertices"] = Words.word_vertices(pair.quiver, word)
    info["pi"] = [str(autom) for autom in pis]
    if word.kind == Words.BAND:
        info["pi_band"] = str(pis[-1].invert())
    return info

def _matrix_info(field, mat):
    """Return a matrix as a list of rows of element texts in the '.lg' matrix file format."""
    return [[field.render_element(idx) for idx in row] for row in mat.tolist()]

def module_info(word, rep, check, indecomposable):
    """
    Return the 'module' report for representation 'rep' of 'word'. The 'check' argument is the
    'RepCheck' tuple, 'indecomposable' is a boolean or 'None' if it was not decided.
    """

    info = _header("module")
    info["word"] = Words.word_str(word)
    info["field"] = str(rep.field)
    info["dimension"] = rep.dimension()
    info["dimension_vector"] = rep.dimension_vector()
    info["maps"] = {name : _matrix_info(rep.field, mat) for name, mat in rep.maps.items()}
    info["check_ok"] = check.ok
    info["check_failures"] = list(check.failures)
    info["indecomposable"] = indecomposable
    return info

def hom_info(word1, word2, field, dim12, dim21):
    """Return the 'hom' report."""

    info = _header("hom")
    info["word"] = Words.word_str(word1)
    info["word2"] = Words.word_str(word2)
    info["field"] = str(field)
    info["prime_field"] = f"F_{field.p}"
    info["dim_hom_12"] = dim12
    info["dim_hom_21"] = dim21
    return info

def nodal_info(report):
    """Return the 'nodal' report for 'NodalReport' tuple 'report'."""

    info = _header("nodal")
    for key in Nodal.NODAL_KEYS_DESCR:
        val = getattr(report, key)
        if isinstance(val, dict):
            val = dict(val)
        info[key] = val
    return info

def tiling_info(tiling):
    """Return the 'tiling' report for 'LabeledTiling' tuple 'tiling'."""

    info = _header("tiling")
    info["rstar"] = list(tiling.rstar)
    info["pieces"] = []
    for idx, piece in enumerate(tiling.pieces):
        label = None
        if idx in tiling.face_label:
            label = str(tiling.face_label[idx])
        info["pieces"].append({"face" : piece.face, "sides" : list(piece.sides),
                               "corner" : piece.corner, "label" : label})
    return info

def paths_info(pair, max_len):
    """Return the 'paths' report: admissible paths up to length 'max_len' and the dimension."""

    paths = Quiver.admissible_paths(pair, max_len)
    dim = Algebra.dimension(pair)

    info = _header("paths")
    info["max_len"] = max_len
    info["count"] = len(paths)
    info["paths"] = [Quiver.path_str(path) for path in paths]
    info["dimension"] = "infinite" if dim == math.inf else dim
    return info

def dual_info(pair, dpair):
    """Return the 'dual' report: the relations of the dual pair 'dpair'."""

    info = _header("dual")
    info["relations"] = [Quiver.relation_str(rel) for rel in pair.relations]
    info["dual_relations"] = [Quiver.relation_str(rel) for rel in dpair.relations]
    return info

