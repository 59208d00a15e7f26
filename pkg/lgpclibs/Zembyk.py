# -*- coding: utf-8 -*-
# vim: ts=4 sw=4 tw=100 et ai si
#
# Copyright (C) 2020-2021 Intel Corporation
# SPDX-License-Identifier: BSD-3-Clause
#
# Author: Artem Bityutskiy <artem.bityutskiy@linux.intel.com>

"""
This module implements the levee of a locally gentle pair at a relational vertex and the Zembyk
excision, which takes levees until no relations remain. The excised quiver is a disjoint union of
line quivers and relation-free cycles, and this module classifies the components.

Arrow names never change: the arrow 'a^v' of the levee carries the name of 'a'. Only the split
vertex 'v' is replaced, by 'v#' (the tail of the outgoing relation witness 'b') and 'vb' (the head
of the incoming relation witness 'a').
"""

import logging
from collections import namedtuple
import networkx
from lgpclibs import Quiver
from lgpclibs.helperlibs.Exceptions import Error

_LOG = logging.getLogger()

LINE_A = "LineA"
CYCLE_EQUIORIENTED = "CycleEquioriented"
CYCLE_MIXED = "CycleMixed"

LeveeResult = namedtuple("LeveeResult", ["pair", "vertex", "sharp", "flat", "arrow_map"])
ExcisionResult = namedtuple("ExcisionResult", ["quiver", "vertex_map", "arrow_map", "components",
                                               "levees"])
Component = namedtuple("Component", ["quiver", "kind"])

def _new_name(base, taken):
    """Return 'base', or 'base' with a numeric suffix, whichever is not in 'taken'."""

    name = base
    idx = 2
    while name in taken:
        name = f"{base}{idx}"
        idx += 1
    return name

def levee(pair, vertex):
    """
    Split locally gentle pair 'pair' at relational vertex 'vertex' and return the 'LeveeResult'
    tuple. The levee relation set keeps exactly the relations not passing through 'vertex'.
    """

    cls = Quiver.classify_vertex(pair, vertex)
    if cls.kind == Quiver.NON_RELATIONAL:
        raise Error(f"vertex '{vertex}' is not relational, cannot take the levee there")

    quiver = pair.quiver
    taken = set(quiver.vertices)
    sharp = _new_name(f"{vertex}#", taken)
    taken.add(sharp)
    flat = _new_name(f"{vertex}b", taken)

    tails = {cls.b : sharp, cls.d : flat}
    heads = {cls.c : sharp, cls.a : flat}

    arrows = []
    for arr in quiver.arrows.values():
        tail, head = arr.tail, arr.head
        if tail == vertex:
            tail = tails[arr.name]
        if head == vertex:
            head = heads[arr.name]
        arrows.append((arr.name, tail, head))

    vertices = []
    for vtx in quiver.vertices:
        if vtx == vertex:
            vertices += [sharp, flat]
        else:
            vertices.append(vtx)

    relations = [rel for rel in pair.relations if quiver.tail(rel.outer) != vertex]
    lpair = Quiver.LocallyGentlePair(Quiver.Quiver(vertices, arrows), relations)

    _LOG.debug("levee at %s vertex '%s': '%s' and '%s', %d relations left",
               cls.kind.lower(), vertex, sharp, flat, len(relations))

    arrow_map = {name : name for name in quiver.arrows}
    return LeveeResult(lpair, vertex, sharp, flat, arrow_map)

def classify_component(quiver):
    """
    Classify connected relation-free quiver 'quiver' (a component of an excision) and return one
    of 'LINE_A', 'CYCLE_EQUIORIENTED' and 'CYCLE_MIXED'.
    """

    nverts = len(quiver.vertices)
    narrows = len(quiver.arrows)
    degrees = {vertex : len(quiver.arrows_in(vertex)) + len(quiver.arrows_out(vertex))
               for vertex in quiver.vertices}

    if len(quiver.connected_components()) != 1 or max(degrees.values(), default=0) > 2:
        raise Error(f"internal error: excision component is neither a line nor a cycle: "
                    f"{quiver!r}")

    if narrows == nverts - 1:
        return LINE_A

    if narrows == nverts and all(deg == 2 for deg in degrees.values()):
        for vertex in quiver.vertices:
            if len(quiver.arrows_in(vertex)) != 1:
                return CYCLE_MIXED
        return CYCLE_EQUIORIENTED

    raise Error(f"internal error: excision component is neither a line nor a cycle: {quiver!r}")

def excision(pair, order=None):
    """
    Take levees of locally gentle pair 'pair' at all its relational vertices and return the
    'ExcisionResult' tuple. By default vertices are processed in declaration order, the 'order'
    argument can be used to pass a different order (a permutation of the relational vertices).
    """

    relational = Quiver.relational_vertices(pair)
    if order is None:
        order = relational
    elif sorted(order) != sorted(relational):
        raise Error(f"bad excision order '{', '.join(order)}': it must be a permutation of the "
                    f"relational vertices '{', '.join(relational)}'")

    vertex_map = {vertex : (vertex,) for vertex in pair.vertices}
    levees = []
    cur = pair
    for vertex in order:
        res = levee(cur, vertex)
        vertex_map[vertex] = (res.sharp, res.flat)
        levees.append(res)
        cur = res.pair

    if cur.relations:
        raise Error(f"internal error: {len(cur.relations)} relations survived the excision")

    quiver = cur.quiver
    components = []
    for verts in quiver.connected_components():
        sub = quiver.subquiver(verts)
        components.append(Component(sub, classify_component(sub)))

    _LOG.debug("excision: %d levees, %d components", len(levees), len(components))

    arrow_map = {name : name for name in pair.arrows}
    return ExcisionResult(quiver, vertex_map, arrow_map, components, levees)

def quivers_isomorphic(quiver1, quiver2):
    """
    Return 'True' if quivers 'quiver1' and 'quiver2' are isomorphic once vertex and arrow names
    are forgotten.
    """

    if len(quiver1.vertices) != len(quiver2.vertices) or \
       len(quiver1.arrows) != len(quiver2.arrows):
        return False
    return networkx.is_isomorphic(quiver1.to_networkx(), quiver2.to_networkx())

def is_acyclic(quiver):
    """Return 'True' if 'quiver' has no oriented cycles, loops included."""
    return networkx.is_directed_acyclic_graph(quiver.to_networkx())
