# -*- coding: utf-8 -*-
# vim: ts=4 sw=4 tw=100 et ai si
#
# Copyright (C) 2020-2021 Intel Corporation
# SPDX-License-Identifier: BSD-3-Clause
#
# Author: Artem Bityutskiy <artem.bityutskiy@linux.intel.com>

"""
This module provides the quiver and the locally gentle pair data structures, the locally gentle
conditions validator, classification of vertices, admissible paths enumeration and random instance
generation.

Terminology and conventions.
  * A relation 'Relation(outer=b, inner=a)' stands for the length-2 path "ba": first 'a', then 'b'.
    So 'tail(b) == head(a)'.
  * Paths are stored in the same written order: 'Path(arrows=("nu", "beta", "alpha"))' is the path
    "alpha, then beta, then nu". Trivial paths have empty 'arrows' and carry their vertex.
  * Everything iterates in declaration order.
"""

import random
import logging
import itertools
from collections import namedtuple
import networkx
from lgpclibs.helperlibs import DamerauLevenshtein
from lgpclibs.helperlibs.Exceptions import Error, ErrorNotFound, ErrorNotLocallyGentle

_LOG = logging.getLogger()

# How many random arrow placements 'random_locally_gentle()' tries for a single arrow before giving
# up.
RANDOM_MAX_TRIES = 1000

Arrow = namedtuple("Arrow", ["name", "tail", "head"])
Relation = namedtuple("Relation", ["outer", "inner"])
Path = namedtuple("Path", ["arrows", "vertex"])
Violation = namedtuple("Violation", ["code", "where", "msg"])
VertexClass = namedtuple("VertexClass", ["kind", "a", "b", "c", "d"])

STREAM = "Stream"
TRIBUTARY = "Tributary"
DISTRIBUTARY = "Distributary"
QUADBUTARY = "Quadbutary"
NON_RELATIONAL = "NonRelational"

# Reason codes of the locally gentle conditions violations, along with the description.
VIOLATION_CODES_DESCR = {
    "in-degree" : "vertex is the head of more than two arrows",
    "out-degree" : "vertex is the tail of more than two arrows",
    "admissible-successors" : "arrow is followed by more than one arrow outside the relations",
    "relational-successors" : "arrow is followed by more than one arrow through relations",
    "admissible-predecessors" : "arrow follows more than one arrow outside the relations",
    "relational-predecessors" : "arrow follows more than one arrow through relations",
}

def relation_str(rel):
    """Return the "b*a" text representation of relation 'rel'."""
    return f"{rel.outer}*{rel.inner}"

class Quiver:
    """
    A finite quiver with named vertices and arrows. Loops and parallel arrows are allowed, and the
    empty quiver is legal. Objects of this class are not supposed to be modified after
    construction.
    """

    def _check_vertex(self, vertex):
        """Raise 'ErrorNotFound' if 'vertex' is not a vertex of the quiver."""

        if vertex not in self._vidx:
            hint = DamerauLevenshtein.hint(str(vertex), self.vertices, "vertex")
            raise ErrorNotFound(f"unknown vertex '{vertex}'{hint}")

    def check_vertex(self, vertex):
        """Validate vertex name 'vertex' and return it."""

        self._check_vertex(vertex)
        return vertex

    def arrow(self, name):
        """Return the 'Arrow' tuple for arrow 'name'."""

        try:
            return self.arrows[name]
        except KeyError:
            hint = DamerauLevenshtein.hint(str(name), list(self.arrows), "arrow")
            raise ErrorNotFound(f"unknown arrow '{name}'{hint}") from None

    def tail(self, name):
        """Return the tail vertex of arrow 'name'."""
        return self.arrow(name).tail

    def head(self, name):
        """Return the head vertex of arrow 'name'."""
        return self.arrow(name).head

    def arrows_in(self, vertex):
        """Return the names of arrows with head 'vertex', in declaration order."""

        self._check_vertex(vertex)
        return self._in[vertex]

    def arrows_out(self, vertex):
        """Return the names of arrows with tail 'vertex', in declaration order."""

        self._check_vertex(vertex)
        return self._out[vertex]

    def vertex_index(self, vertex):
        """Return the declaration index of 'vertex'."""

        self._check_vertex(vertex)
        return self._vidx[vertex]

    def arrow_index(self, name):
        """Return the declaration index of arrow 'name'."""

        self.arrow(name)
        return self._aidx[name]

    def composable_pairs(self):
        """
        Return the list of all length-2 paths of the quiver as 'Relation' tuples, ordered by the
        middle vertex, then by the inner arrow, then by the outer arrow.
        """

        pairs = []
        for vertex in self.vertices:
            for inner in self._in[vertex]:
                for outer in self._out[vertex]:
                    pairs.append(Relation(outer, inner))
        return pairs

    def subquiver(self, vertices):
        """
        Return the full sub-quiver on 'vertices': all the arrows with both ends in 'vertices' are
        kept. Declaration order is preserved.
        """

        for vertex in vertices:
            self._check_vertex(vertex)

        keep = set(vertices)
        verts = [vertex for vertex in self.vertices if vertex in keep]
        arrows = [arr for arr in self.arrows.values() if arr.tail in keep and arr.head in keep]
        return Quiver(verts, arrows)

    def to_networkx(self):
        """Return the quiver as a 'networkx.MultiDiGraph' keyed by arrow names."""

        graph = networkx.MultiDiGraph()
        graph.add_nodes_from(self.vertices)
        for arr in self.arrows.values():
            graph.add_edge(arr.tail, arr.head, key=arr.name)
        return graph

    def connected_components(self):
        """
        Return the list of connected components of the underlying graph. Every component is a
        tuple of vertices in declaration order, and components are ordered by their first vertex.
        """

        graph = self.to_networkx()
        comps = []
        for comp in networkx.weakly_connected_components(graph):
            comps.append(tuple(sorted(comp, key=self._vidx.__getitem__)))
        return sorted(comps, key=lambda comp: self._vidx[comp[0]])

    def __init__(self, vertices, arrows):
        """
        The class constructor. The arguments are as follows.
          * vertices - iterable of vertex names (strings).
          * arrows - iterable of '(name, tail, head)' tuples (or 'Arrow' tuples).
        """

        self.vertices = tuple(vertices)
        self.arrows = {}

        self._vidx = {}
        for idx, vertex in enumerate(self.vertices):
            if vertex in self._vidx:
                raise Error(f"vertex '{vertex}' is declared more than once")
            self._vidx[vertex] = idx

        self._in = {vertex : [] for vertex in self.vertices}
        self._out = {vertex : [] for vertex in self.vertices}

        for name, tail, head in arrows:
            if name in self.arrows:
                raise Error(f"arrow '{name}' is declared more than once")
            for vertex in (tail, head):
                self._check_vertex(vertex)
            self.arrows[name] = Arrow(name, tail, head)
            self._out[tail].append(name)
            self._in[head].append(name)

        self._aidx = {name : idx for idx, name in enumerate(self.arrows)}
        self._in = {vertex : tuple(names) for vertex, names in self._in.items()}
        self._out = {vertex : tuple(names) for vertex, names in self._out.items()}

    def __eq__(self, other):
        """Quivers are equal if they have the same vertices and the same arrows."""

        if not isinstance(other, Quiver):
            return NotImplemented
        return set(self.vertices) == set(other.vertices) and \
               set(self.arrows.values()) == set(other.arrows.values())

    def __hash__(self):
        """Hash consistently with '__eq__()'."""
        return hash((frozenset(self.vertices), frozenset(self.arrows.values())))

    def __repr__(self):
        """Return a short description of the quiver."""

        arrows = ", ".join(f"{arr.name}:{arr.tail}->{arr.head}" for arr in self.arrows.values())
        return f"Quiver(vertices={list(self.vertices)}, arrows=[{arrows}])"

class LocallyGentlePair:
    """
    A quiver together with a set of quadratic zero-relations. The constructor only checks that the
    relations refer to composable arrows. Use 'validate_locally_gentle()' to get a pair which is
    guaranteed to satisfy the locally gentle conditions: the methods returning unique successors
    and predecessors rely on them.
    """

    def in_z(self, outer, inner):
        """Return 'True' if the path "outer after inner" is one of the relations."""
        return (outer, inner) in self._zset

    def _pick(self, names, what, name):
        """Return the only element of 'names', 'None' if it is empty, fail otherwise."""

        if not names:
            return None
        if len(names) > 1:
            raise ErrorNotLocallyGentle(f"arrow '{name}' has more than one {what}")
        return names[0]

    def admissible_successor(self, name):
        """Return the arrow 'b' with 'ba' composable and not a relation, where 'a' is 'name'."""

        names = [b for b in self.quiver.arrows_out(self.quiver.head(name))
                 if not self.in_z(b, name)]
        return self._pick(names, "admissible successor", name)

    def relational_successor(self, name):
        """Return the arrow 'b' with 'ba' a relation, where 'a' is 'name'."""

        names = [b for b in self.quiver.arrows_out(self.quiver.head(name)) if self.in_z(b, name)]
        return self._pick(names, "relational successor", name)

    def admissible_predecessor(self, name):
        """Return the arrow 'a' with 'ba' composable and not a relation, where 'b' is 'name'."""

        names = [a for a in self.quiver.arrows_in(self.quiver.tail(name))
                 if not self.in_z(name, a)]
        return self._pick(names, "admissible predecessor", name)

    def relational_predecessor(self, name):
        """Return the arrow 'a' with 'ba' a relation, where 'b' is 'name'."""

        names = [a for a in self.quiver.arrows_in(self.quiver.tail(name)) if self.in_z(name, a)]
        return self._pick(names, "relational predecessor", name)

    def path_head(self, path):
        """Return the head vertex of path 'path'."""

        if not path.arrows:
            return path.vertex
        return self.quiver.head(path.arrows[0])

    def path_tail(self, path):
        """Return the tail vertex of path 'path'."""

        if not path.arrows:
            return path.vertex
        return self.quiver.tail(path.arrows[-1])

    def is_admissible_path(self, path):
        """Return 'True' if 'path' is a path of the quiver with no relation as a subpath."""

        if not path.arrows:
            return path.vertex in self.quiver.vertices
        for outer, inner in zip(path.arrows, path.arrows[1:]):
            if self.quiver.tail(outer) != self.quiver.head(inner) or self.in_z(outer, inner):
                return False
        return True

    @property
    def vertices(self):
        """The vertices of the quiver."""
        return self.quiver.vertices

    @property
    def arrows(self):
        """The arrows dictionary of the quiver."""
        return self.quiver.arrows

    def __init__(self, quiver, relations):
        """
        The class constructor. The arguments are as follows.
          * quiver - the 'Quiver' object.
          * relations - iterable of '(outer, inner)' arrow name pairs, each standing for the path
                        "outer after inner".
        """

        self.quiver = quiver

        rels = []
        for outer, inner in relations:
            quiver.arrow(outer)
            quiver.arrow(inner)
            if quiver.tail(outer) != quiver.head(inner):
                raise Error(f"bad relation '{outer}*{inner}': the tail of '{outer}' is "
                            f"'{quiver.tail(outer)}', but the head of '{inner}' is "
                            f"'{quiver.head(inner)}'")
            rels.append(Relation(outer, inner))

        seen = set()
        self.relations = tuple(rel for rel in rels if not (rel in seen or seen.add(rel)))
        self._zset = frozenset(self.relations)

    def __eq__(self, other):
        """Pairs are equal if the quivers and the relation sets are equal."""

        if not isinstance(other, LocallyGentlePair):
            return NotImplemented
        return self.quiver == other.quiver and self._zset == other._zset

    def __hash__(self):
        """Hash consistently with '__eq__()'."""
        return hash((self.quiver, self._zset))

    def __repr__(self):
        """Return a short description of the pair."""

        rels = ", ".join(relation_str(rel) for rel in self.relations)
        return f"LocallyGentlePair({self.quiver!r}, relations=[{rels}])"

def check_locally_gentle(quiver, relations):
    """
    Check the locally gentle conditions for 'quiver' and 'relations' (an iterable of '(outer,
    inner)' arrow name pairs) and return the list of 'Violation' tuples, empty if the conditions
    hold. Malformed relations (unknown arrows, non-composable arrows) raise an exception instead.
    """

    pair = LocallyGentlePair(quiver, relations)
    violations = []

    for vertex in quiver.vertices:
        for names, code, what in ((quiver.arrows_in(vertex), "in-degree", "head"),
                                  (quiver.arrows_out(vertex), "out-degree", "tail")):
            if len(names) > 2:
                msg = f"vertex '{vertex}' is the {what} of {len(names)} arrows: " \
                      f"{', '.join(names)}"
                violations.append(Violation(code, vertex, msg))

    for name in quiver.arrows:
        succs = quiver.arrows_out(quiver.head(name))
        preds = quiver.arrows_in(quiver.tail(name))
        checks = (("admissible-successors", [b for b in succs if not pair.in_z(b, name)]),
                  ("relational-successors", [b for b in succs if pair.in_z(b, name)]),
                  ("admissible-predecessors", [a for a in preds if not pair.in_z(name, a)]),
                  ("relational-predecessors", [a for a in preds if pair.in_z(name, a)]))
        for code, names in checks:
            if len(names) > 1:
                msg = f"arrow '{name}': {VIOLATION_CODES_DESCR[code]}: {', '.join(names)}"
                violations.append(Violation(code, name, msg))

    return violations

def validate_locally_gentle(quiver, relations):
    """
    Validate the locally gentle conditions for 'quiver' and 'relations' and return the
    'LocallyGentlePair' object. Raise 'ErrorNotLocallyGentle' listing all the violations
    otherwise.
    """

    violations = check_locally_gentle(quiver, relations)
    if violations:
        raise ErrorNotLocallyGentle("the quiver with relations is not locally gentle",
                                    violations=violations)
    return LocallyGentlePair(quiver, relations)

def _witness(pair, outer, inner, kind, what):
    """Return the 'VertexClass' for the given witnesses, after verifying the pattern."""

    a, b, c, d = what
    zin = [(b, a)] + ([(d, c)] if kind == QUADBUTARY else [])
    zout = []
    if c is not None:
        zout.append((b, c))
    if d is not None:
        zout.append((d, a))

    for rel in zin:
        if not pair.in_z(*rel):
            raise Error(f"internal error: '{rel[0]}*{rel[1]}' expected to be a relation")
    for rel in zout:
        if pair.in_z(*rel):
            raise Error(f"internal error: '{rel[0]}*{rel[1]}' expected not to be a relation")

    _LOG.debug("vertex between '%s' and '%s' is a %s", outer, inner, kind)
    return VertexClass(kind, a, b, c, d)

def classify_vertex(pair, vertex):
    """
    Classify vertex 'vertex' of locally gentle pair 'pair' and return the 'VertexClass' tuple. The
    arrows 'a', 'b', 'c', 'd' are the witnesses: 'ba' is a relation through the vertex, 'c' is the
    other arrow entering it, 'd' is the other arrow leaving it. For quadbutaries the witness 'ba' is
    chosen so that 'a' is the last declared arrow entering the vertex.
    """

    quiver = pair.quiver
    ins = quiver.arrows_in(vertex)
    outs = quiver.arrows_out(vertex)

    rels = [rel for rel in pair.relations if quiver.tail(rel.outer) == vertex]
    if not rels:
        return VertexClass(NON_RELATIONAL, None, None, None, None)

    if len(outs) == 1 and len(ins) == 1:
        return _witness(pair, outs[0], ins[0], STREAM, (ins[0], outs[0], None, None))

    if len(outs) == 1 and len(ins) == 2:
        b = outs[0]
        a = pair.relational_predecessor(b)
        c = ins[1] if ins[0] == a else ins[0]
        return _witness(pair, b, a, TRIBUTARY, (a, b, c, None))

    if len(outs) == 2 and len(ins) == 1:
        a = ins[0]
        b = pair.relational_successor(a)
        d = outs[1] if outs[0] == b else outs[0]
        return _witness(pair, b, a, DISTRIBUTARY, (a, b, None, d))

    a = ins[-1]
    c = ins[0]
    b = pair.relational_successor(a)
    d = pair.relational_successor(c)
    return _witness(pair, b, a, QUADBUTARY, (a, b, c, d))

def relational_vertices(pair):
    """Return the tuple of relational vertices of 'pair' in declaration order."""

    middles = {pair.quiver.tail(rel.outer) for rel in pair.relations}
    return tuple(vertex for vertex in pair.vertices if vertex in middles)

def is_gentle(pair):
    """
    Return 'True' if 'pair' has finitely many admissible paths, which is the case if and only if
    there is no oriented cycle with every cyclically consecutive composition outside the relations.
    """

    count = len(pair.arrows)
    for name in pair.arrows:
        cur = name
        for _ in range(count):
            cur = pair.admissible_successor(cur)
            if cur is None:
                break
            if cur == name:
                _LOG.debug("admissible cycle through arrow '%s', the pair is not gentle", name)
                return False
    return True

def path_sort_key(pair, path):
    """The (length, lexicographic) sort key of path 'path'."""

    if not path.arrows:
        return (0, (pair.quiver.vertex_index(path.vertex),))
    return (len(path.arrows), tuple(pair.quiver.arrow_index(name) for name in path.arrows))

def path_str(path):
    """Return the text representation of path 'path': "e_v" or "b*a"-style."""

    if not path.arrows:
        return f"e_{path.vertex}"
    return "*".join(path.arrows)

def admissible_paths(pair, max_len):
    """
    Return the list of all admissible paths of 'pair' of length at most 'max_len', trivial paths
    included, ordered by length, then lexicographically by arrow declaration order.
    """

    paths = [Path((), vertex) for vertex in pair.vertices]
    if max_len < 1:
        return paths

    level = [Path((name,), None) for name in pair.arrows]
    length = 1
    while level:
        paths += sorted(level, key=lambda path: path_sort_key(pair, path))
        if length == max_len:
            break
        length += 1

        nxt = []
        for path in level:
            first = path.arrows[0]
            for outer in pair.quiver.arrows_out(pair.quiver.head(first)):
                if not pair.in_z(outer, first):
                    nxt.append(Path((outer,) + path.arrows, None))
        level = nxt

    return paths

def _local_relation_choices(pair_ins, pair_outs):
    """
    Return all the relation sets at a single vertex that satisfy the locally gentle conditions,
    given the arrows entering ('pair_ins') and leaving ('pair_outs') it.
    """

    candidates = [(outer, inner) for inner in pair_ins for outer in pair_outs]
    choices = []
    for mask in itertools.product((False, True), repeat=len(candidates)):
        chosen = {cand for cand, keep in zip(candidates, mask) if keep}
        good = True
        for inner in pair_ins:
            inz = [outer for outer in pair_outs if (outer, inner) in chosen]
            if len(inz) > 1 or len(pair_outs) - len(inz) > 1:
                good = False
        for outer in pair_outs:
            inz = [inner for inner in pair_ins if (outer, inner) in chosen]
            if len(inz) > 1 or len(pair_ins) - len(inz) > 1:
                good = False
        if good:
            choices.append(sorted(chosen))
    return choices

def random_locally_gentle(seed, n_vertices, n_arrows):
    """
    Generate and return a random locally gentle pair with 'n_vertices' vertices named "1", "2", ...
    and 'n_arrows' arrows named "a1", "a2", .... The result is fully determined by 'seed'.
    """

    if n_arrows > 2 * n_vertices:
        raise Error(f"unsatisfiable parameters: {n_arrows} arrows do not fit {n_vertices} "
                    f"vertices, at most {2 * n_vertices} arrows are possible")

    rng = random.Random(seed)
    vertices = [str(idx) for idx in range(1, n_vertices + 1)]
    indeg = dict.fromkeys(vertices, 0)
    outdeg = dict.fromkeys(vertices, 0)

    arrows = []
    for idx in range(1, n_arrows + 1):
        for _ in range(RANDOM_MAX_TRIES):
            tail = rng.choice(vertices)
            head = rng.choice(vertices)
            if outdeg[tail] < 2 and indeg[head] < 2:
                break
        else:
            raise Error(f"unsatisfiable parameters: failed to place arrow number {idx} after "
                        f"{RANDOM_MAX_TRIES} attempts")

        outdeg[tail] += 1
        indeg[head] += 1
        arrows.append((f"a{idx}", tail, head))

    quiver = Quiver(vertices, arrows)
    relations = []
    for vertex in vertices:
        choices = _local_relation_choices(quiver.arrows_in(vertex), quiver.arrows_out(vertex))
        relations += rng.choice(choices)

    _LOG.debug("random pair (seed %s): %d vertices, %d arrows, %d relations", seed, n_vertices,
               n_arrows, len(relations))
    return validate_locally_gentle(quiver, relations)
