# -*- coding: utf-8 -*-
# vim: ts=4 sw=4 tw=100 et ai si
#
# Copyright (C) 2020-2021 Intel Corporation
# SPDX-License-Identifier: BSD-3-Clause
#
# Author: Artem Bityutskiy <artem.bityutskiy@linux.intel.com>

"""
This module provides the combinatorial surface model of a locally gentle pair.

Every vertex 'v' of the quiver is an arc 'τ_v' of a dissection. Arcs have two ends (0 and 1) and two
sides ("L" and "R"), so four quarters '(arc, end, side)'. An arrow 'a' is a corner between the arcs
'τ_t(a)' and 'τ_h(a)' at a common marked point, and it uses one quarter of each arc.

  * Fans are the maximal chains of arrows composing outside the relations. They are the marked
    points of the surface, cyclic fans are punctures. Arc ends with no arrows are empty fans.
  * Faces are the maximal chains of arrows composing through the relations. Cyclic faces are
    internal (punctured) faces, the others have one boundary segment each. Arc sides with no arrows
    are empty faces.

The boundary components are traced by matching the free quarters of linear fans and faces.
"""

import logging
from collections import namedtuple
from lgpclibs import Quiver, Zembyk, Words, Galois
from lgpclibs.helperlibs.Exceptions import Error

_LOG = logging.getLogger()

ADMISSIBLE = "admissible"
RELATIONAL = "relational"

POLYGON = "Polygon"
ANNULUS = "Annulus"
ONCE_PUNCTURED_DISK = "OncePuncturedDisk"

# The split piece type of each excision component type.
COMPONENT_SURFACES = {
    Zembyk.LINE_A : POLYGON,
    Zembyk.CYCLE_MIXED : ANNULUS,
    Zembyk.CYCLE_EQUIORIENTED : ONCE_PUNCTURED_DISK,
}

# The arc side where an arrow attached at a given arc end sits, for the head and for the tail.
IN_SIDE = {0 : "L", 1 : "R"}
OUT_SIDE = {0 : "R", 1 : "L"}

Thread = namedtuple("Thread", ["arrows", "anchor", "cyclic"])
Quarter = namedtuple("Quarter", ["arc", "end", "side"])
SurfaceComponent = namedtuple("SurfaceComponent", ["arcs", "euler_characteristic", "genus",
                                                   "boundary_components", "punctures"])
DissectedSurface = namedtuple("DissectedSurface", ["pair", "arcs", "v_fans", "faces",
                                                   "end_assignment", "euler_characteristic",
                                                   "genus", "boundary_components",
                                                   "boundary_walks", "punctures_v",
                                                   "punctures_vstar", "components",
                                                   "fan_of_arrow", "face_of_arrow"])
SplitPiece = namedtuple("SplitPiece", ["surface", "pair", "kind", "component_kind"])
TilingPiece = namedtuple("TilingPiece", ["face", "sides", "corner"])
LabeledTiling = namedtuple("LabeledTiling", ["surface", "rstar", "pieces", "arrow_face",
                                             "face_label"])
ArcCrossings = namedtuple("ArcCrossings", ["arcs", "steps", "corners"])

def end_assignment(pair):
    """
    Attach every arrow incidence to an arc end and return the '{(arrow, "head"|"tail"): end}'
    dictionary. Arrows entering a vertex take ends 0 and 1 in declaration order. An arrow leaving
    a vertex shares the end of the arrow it composes with outside the relations, or takes the end
    opposite to the only entering arrow, or, at vertices with no entering arrows, ends 0 and 1 in
    declaration order.
    """

    quiver = pair.quiver
    ends = {}
    for vertex in quiver.vertices:
        ins = quiver.arrows_in(vertex)
        outs = quiver.arrows_out(vertex)

        for end, name in enumerate(ins):
            ends[(name, "head")] = end

        for idx, name in enumerate(outs):
            pred = pair.admissible_predecessor(name)
            if pred is not None:
                end = ends[(pred, "head")]
            elif len(ins) == 1:
                end = 1 - ends[(ins[0], "head")]
            elif not ins:
                end = idx
            else:
                raise Error(f"internal error: arrow '{name}' leaving vertex '{vertex}' composes "
                            f"with no arrow outside the relations")
            ends[(name, "tail")] = end

        for end in (0, 1):
            nin = sum(1 for name in ins if ends[(name, "head")] == end)
            nout = sum(1 for name in outs if ends[(name, "tail")] == end)
            if nin > 1 or nout > 1:
                raise Error(f"internal error: inconsistent end assignment at vertex '{vertex}', "
                            f"end {end}")
    return ends

def _arrow_quarters(pair, ends):
    """Return the '{arrow: (out-quarter, in-quarter)}' dictionary."""

    quarters = {}
    for arr in pair.arrows.values():
        etail = ends[(arr.name, "tail")]
        ehead = ends[(arr.name, "head")]
        quarters[arr.name] = (Quarter(arr.tail, etail, OUT_SIDE[etail]),
                              Quarter(arr.head, ehead, IN_SIDE[ehead]))
    return quarters

def _chains(pair, succ, pred):
    """
    Return the maximal chains of arrows under the successor function 'succ' (with the matching
    predecessor function 'pred') as 'Thread' tuples, ordered by their first arrow. Cyclic chains
    start at their earliest declared arrow.
    """

    quiver = pair.quiver
    seen = set()
    threads = []
    for name in quiver.arrows:
        if name in seen:
            continue

        start = name
        cyclic = False
        while True:
            prev = pred(start)
            if prev is None:
                break
            if prev == name:
                cyclic = True
                break
            start = prev

        chain = [start]
        while True:
            nxt = succ(chain[-1])
            if nxt is None or nxt == start:
                break
            chain.append(nxt)

        if cyclic:
            first = min(range(len(chain)), key=lambda idx: quiver.arrow_index(chain[idx]))
            chain = chain[first:] + chain[:first]

        seen.update(chain)
        threads.append(Thread(tuple(chain), None, cyclic))

    return sorted(threads, key=lambda thread: quiver.arrow_index(thread.arrows[0]))

def threads(pair, mode):
    """
    Return the threads of locally gentle pair 'pair'. In the 'ADMISSIBLE' mode these are the fans,
    followed by one empty thread per arc end with no arrows, anchored at '(arc, end)'. In the
    'RELATIONAL' mode these are the faces, followed by one empty thread per arc side with no
    arrows, anchored at '(arc, side)'.
    """

    quiver = pair.quiver
    ends = end_assignment(pair)

    if mode == ADMISSIBLE:
        result = _chains(pair, pair.admissible_successor, pair.admissible_predecessor)
        used = {(arr.tail, ends[(arr.name, "tail")]) for arr in pair.arrows.values()}
        used |= {(arr.head, ends[(arr.name, "head")]) for arr in pair.arrows.values()}
        for vertex in quiver.vertices:
            for end in (0, 1):
                if (vertex, end) not in used:
                    result.append(Thread((), (vertex, end), False))
        return result

    if mode == RELATIONAL:
        result = _chains(pair, pair.relational_successor, pair.relational_predecessor)
        used = set()
        for out_q, in_q in _arrow_quarters(pair, ends).values():
            used.add((out_q.arc, out_q.side))
            used.add((in_q.arc, in_q.side))
        for vertex in quiver.vertices:
            for side in ("L", "R"):
                if (vertex, side) not in used:
                    result.append(Thread((), (vertex, side), False))
        return result

    raise Error(f"bad thread mode '{mode}', use '{ADMISSIBLE}' or '{RELATIONAL}'")

def _fan_quarters(pair, fan, ends):
    """Return the free '(in-quarter, out-quarter)' of linear fan 'fan'."""

    if not fan.arrows:
        vertex, end = fan.anchor
        return Quarter(vertex, end, IN_SIDE[end]), Quarter(vertex, end, OUT_SIDE[end])

    first, last = pair.arrows[fan.arrows[0]], pair.arrows[fan.arrows[-1]]
    etail = ends[(first.name, "tail")]
    ehead = ends[(last.name, "head")]
    return Quarter(first.tail, etail, IN_SIDE[etail]), Quarter(last.head, ehead, OUT_SIDE[ehead])

def _face_quarters(pair, face, ends):
    """Return the free '(exit-quarter, entry-quarter)' of linear face 'face'."""

    if not face.arrows:
        vertex, side = face.anchor
        if side == "R":
            return Quarter(vertex, 1, "R"), Quarter(vertex, 0, "R")
        return Quarter(vertex, 0, "L"), Quarter(vertex, 1, "L")

    first, last = pair.arrows[face.arrows[0]], pair.arrows[face.arrows[-1]]
    etail = 1 - ends[(first.name, "tail")]
    ehead = 1 - ends[(last.name, "head")]
    return Quarter(first.tail, etail, IN_SIDE[etail]), Quarter(last.head, ehead, OUT_SIDE[ehead])

def _boundary_walks(pair, fans, faces, ends):
    """
    Trace the boundary components and return them as lists of '(fan index, face index)' tuples.
    From a linear fan, the walk continues to the face leaving through the fan's free in-quarter,
    then to the fan entered through the face's free entry quarter.
    """

    fan_in = {}
    fan_by_out = {}
    for idx, fan in enumerate(fans):
        if fan.cyclic:
            continue
        in_q, out_q = _fan_quarters(pair, fan, ends)
        fan_in[idx] = in_q
        fan_by_out[out_q] = idx

    face_by_exit = {}
    face_entry = {}
    for idx, face in enumerate(faces):
        if face.cyclic:
            continue
        exit_q, entry_q = _face_quarters(pair, face, ends)
        if exit_q in face_by_exit:
            raise Error(f"internal error: two faces leave through quarter {exit_q}")
        face_by_exit[exit_q] = idx
        face_entry[idx] = entry_q

    if len(fan_by_out) != len(fan_in) or len(face_by_exit) != len(face_entry) or \
       len(fan_in) != len(face_entry):
        raise Error(f"internal error: {len(fan_in)} linear fans do not match {len(face_entry)} "
                    f"linear faces")

    walks = []
    visited = set()
    for start in fan_in:
        if start in visited:
            continue
        walk = []
        fan = start
        while True:
            visited.add(fan)
            try:
                face = face_by_exit[fan_in[fan]]
                nxt = fan_by_out[face_entry[face]]
            except KeyError as err:
                raise Error(f"internal error: boundary walk broke at quarter {err}") from None
            walk.append((fan, face))
            if nxt == start:
                break
            if nxt in visited:
                raise Error("internal error: boundary walk does not close up")
            fan = nxt
        walks.append(walk)

    for idx in face_entry:
        if sum(1 for walk in walks for _, face in walk if face == idx) != 1:
            raise Error(f"internal error: face {idx} is not on exactly one boundary walk")
    return walks

def _thread_arc(thread, pair):
    """Return an arc the thread touches."""

    if thread.arrows:
        return pair.quiver.tail(thread.arrows[0])
    return thread.anchor[0]

def build_surface(pair):
    """Build and return the 'DissectedSurface' model of locally gentle pair 'pair'."""

    quiver = pair.quiver
    ends = end_assignment(pair)
    fans = threads(pair, ADMISSIBLE)
    faces = threads(pair, RELATIONAL)
    walks = _boundary_walks(pair, fans, faces, ends)

    fan_of_arrow = {name : idx for idx, fan in enumerate(fans) for name in fan.arrows}
    face_of_arrow = {name : idx for idx, face in enumerate(faces) for name in face.arrows}

    components = []
    comp_of_arc = {}
    for comp in quiver.connected_components():
        for vertex in comp:
            comp_of_arc[vertex] = len(components)
        components.append(comp)

    punct = [0] * len(components)
    nfaces = [0] * len(components)
    nwalks = [0] * len(components)
    for fan in fans:
        if fan.cyclic:
            punct[comp_of_arc[_thread_arc(fan, pair)]] += 1
    for face in faces:
        nfaces[comp_of_arc[_thread_arc(face, pair)]] += 1
    for walk in walks:
        nwalks[comp_of_arc[_thread_arc(fans[walk[0][0]], pair)]] += 1

    scomps = []
    for idx, comp in enumerate(components):
        euler = punct[idx] - len(comp) + nfaces[idx]
        twice_genus = 2 - euler - nwalks[idx]
        if twice_genus < 0 or twice_genus % 2:
            raise Error(f"internal error: Euler characteristic {euler} and {nwalks[idx]} boundary "
                        f"components do not give a genus")
        scomps.append(SurfaceComponent(comp, euler, twice_genus // 2, nwalks[idx], punct[idx]))

    pvstar = sum(1 for face in faces if face.cyclic)
    surface = DissectedSurface(pair, quiver.vertices, fans, faces, ends,
                               sum(comp.euler_characteristic for comp in scomps),
                               sum(comp.genus for comp in scomps), len(walks), walks, sum(punct),
                               pvstar, scomps, fan_of_arrow, face_of_arrow)

    _LOG.debug("surface: %d arcs, %d fans, %d faces, chi %d, genus %d, %d boundary components",
               len(quiver.vertices), len(fans), len(faces), surface.euler_characteristic,
               surface.genus, surface.boundary_components)
    return surface

def surface_kind(surface):
    """
    Return the split piece type ('POLYGON', 'ANNULUS' or 'ONCE_PUNCTURED_DISK') matching the
    invariants of connected surface 'surface', or 'None' if none matches.
    """

    if len(surface.components) != 1 or surface.genus != 0:
        return None
    if surface.boundary_components == 1 and surface.punctures_v == 0:
        return POLYGON
    if surface.boundary_components == 2 and surface.punctures_v == 0:
        return ANNULUS
    if surface.boundary_components == 1 and surface.punctures_v == 1:
        return ONCE_PUNCTURED_DISK
    return None

def dual(pair):
    """
    Return the dual locally gentle pair: the same quiver, with the complement of the relations
    among all the length-2 paths.
    """

    rels = [rel for rel in pair.quiver.composable_pairs() if not pair.in_z(*rel)]
    return Quiver.validate_locally_gentle(pair.quiver, rels)

def relational_dual_arcs(pair):
    """
    Return the dual arcs 'τ*_v' of the relational vertices 'v' of 'pair', identified by 'v', in
    declaration order.
    """
    return Quiver.relational_vertices(pair)

def split(pair):
    """
    Split the surface of 'pair' along the relational dual arcs and return the list of
    'SplitPiece' tuples, one per excision component.
    """

    exc = Zembyk.excision(pair)
    pieces = []
    for comp in exc.components:
        sub = Quiver.LocallyGentlePair(comp.quiver, ())
        surface = build_surface(sub)
        kind = COMPONENT_SURFACES[comp.kind]
        if surface_kind(surface) != kind:
            raise Error(f"internal error: excision component '{', '.join(comp.quiver.vertices)}' "
                        f"is {comp.kind}, but its surface is not a {kind}")
        pieces.append(SplitPiece(surface, sub, kind, comp.kind))
    return pieces

def _face_boundary(pair, face):
    """
    Return the boundary of face 'face' as a cyclic list of items: '("seg",)' for the boundary
    segment, '("side", arc)' for an arc side and '("corner", arrow)' for an arrow corner.
    """

    if not face.arrows:
        return [("seg",), ("side", face.anchor[0])]

    items = [] if face.cyclic else [("seg",)]
    items.append(("side", pair.quiver.tail(face.arrows[0])))
    for name in face.arrows:
        items.append(("corner", name))
        if not face.cyclic or name != face.arrows[-1]:
            items.append(("side", pair.quiver.head(name)))
    return items

def _cut_face(pair, face, relational):
    """
    Cut the boundary of face 'face' at the midpoints of sides of relational arcs and at the
    boundary segment, and return the pieces as lists of items. A side cut at its midpoint shows up
    in both neighboring pieces.
    """

    items = _face_boundary(pair, face)
    cuts = [idx for idx, item in enumerate(items)
            if item[0] == "seg" or (item[0] == "side" and item[1] in relational)]
    if not cuts:
        return [items]

    pieces = []
    for num, start in enumerate(cuts):
        stop = cuts[(num + 1) % len(cuts)]
        if stop <= start:
            stop += len(items)
        piece = [items[idx % len(items)] for idx in range(start, stop + 1)]
        pieces.append([item for item in piece if item[0] != "seg"])
    return pieces

def labeled_tiling(pair, sigma):
    """
    Subdivide the faces of the surface of 'pair' by the relational dual arcs and label the pieces
    with a corner by the automorphism of the arrow at that corner. The 'sigma' argument is the
    '{arrow: automorphism}' dictionary. Return the 'LabeledTiling' tuple.
    """

    Galois.check_sigma(pair, sigma)

    surface = build_surface(pair)
    rstar = relational_dual_arcs(pair)
    relational = set(rstar)

    pieces = []
    arrow_face = {}
    for fidx, face in enumerate(surface.faces):
        if not face.cyclic and sum(1 for item in _face_boundary(pair, face)
                                   if item[0] == "seg") != 1:
            raise Error(f"internal error: face {fidx} has more than one boundary segment")

        for items in _cut_face(pair, face, relational):
            sides = tuple(item[1] for item in items if item[0] == "side")
            corners = [item[1] for item in items if item[0] == "corner"]
            if len(corners) > 1 or len(sides) > 2 or (corners and len(sides) != 2):
                raise Error(f"internal error: tiling piece of face {fidx} has sides "
                            f"{', '.join(sides)} and corners {', '.join(corners)}")
            corner = corners[0] if corners else None
            if corner is not None:
                arrow_face[corner] = len(pieces)
            pieces.append(TilingPiece(fidx, sides, corner))

    face_label = {idx : sigma[piece.corner] for idx, piece in enumerate(pieces)
                  if piece.corner is not None}

    _LOG.debug("tiling: %d pieces, %d of them with two arcs", len(pieces), len(face_label))
    return LabeledTiling(surface, rstar, pieces, arrow_face, face_label)

def arc_semilinearity(tiling, word):
    """
    Return the semilinearity automorphisms 'σ_0, σ_1, ..., σ_n' of the arc (or closed curve) given
    by admissible word 'word', read off the face labels of labeled tiling 'tiling'. The curve is
    followed through its 'arc_crossings()': every step passes a corner of a labeled piece. Passing
    it on the right composes with the inverse label, passing it on the left composes with the label
    itself.
    """

    surface = tiling.surface
    crossings = arc_crossings(surface, word)

    quarters = _arrow_quarters(surface.pair, surface.end_assignment)
    piece_at = {quarters[piece.corner][1] : idx for idx, piece in enumerate(tiling.pieces)
                if piece.corner is not None}

    result = [Galois.sigma_identity(tiling.face_label)]
    for (_, side), corner in zip(crossings.steps, crossings.corners):
        if corner not in piece_at:
            raise Error(f"internal error: no labeled tiling piece has corner {corner}")
        autom = tiling.face_label[piece_at[corner]]
        if side == "right":
            autom = autom.invert()
        result.append(autom.compose(result[-1]))
    return result

def arc_crossings(surface, word):
    """
    Return the 'ArcCrossings' tuple for admissible word 'word' read as a permissible arc or closed
    curve: the arcs it crosses, in order, and for each step between two crossings the index of
    the fan (marked point) they share and whether it lies on the "right" (direct letter) or on the
    "left" (inverse letter). The 'corners' list gives, per step, the quarter where the corner the
    curve passes meets the arc it enters at its head end.
    """

    Words.check_admissible(surface.pair, word)

    quiver = surface.pair.quiver
    arcs = Words.word_vertices(quiver, word)
    if word.kind == Words.BAND:
        arcs.append(arcs[0])

    steps = []
    corners = []
    for idx, letter in enumerate(word.letters, start=1):
        side = "right" if letter.direct else "left"
        steps.append((surface.fan_of_arrow[letter.arrow], side))
        # A direct letter goes from its head arc to its tail arc, an inverse one the other way.
        arc = arcs[idx - 1] if letter.direct else arcs[idx]
        end = surface.end_assignment[(letter.arrow, "head")]
        corners.append(Quarter(arc, end, IN_SIDE[end]))
    return ArcCrossings(arcs, steps, corners)
