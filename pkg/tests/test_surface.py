#!/usr/bin/env python3
#
# -*- coding: utf-8 -*-
# vim: ts=4 sw=4 tw=100 et ai si
#
# Copyright (C) 2020-2021 Intel Corporation
# SPDX-License-Identifier: BSD-3-Clause
#
# Author: Antti Laakso <antti.laakso@linux.intel.com>

"""Test module for the dissected surface model, the split and the labeled tiling."""

import pytest
from common import load_pair, make_pair
from lgpclibs import Quiver, Surface, Words, Galois, LGFormat, Figures, Zembyk
from lgpclibs.helperlibs.Exceptions import Error

@pytest.fixture(name="running")
def fixture_running():
    """The running example pair and its symbolic automorphisms."""

    pair, sigma, _ = load_pair("running.lg")
    return pair, sigma

def test_threads_running(running):
    """Fans and faces of the running example."""

    pair, _ = running

    fans = Surface.threads(pair, Surface.ADMISSIBLE)
    assert [(fan.arrows, fan.cyclic) for fan in fans[:4]] == \
           [(("alpha", "beta", "nu"), True), (("delta",), False), (("epsilon", "eta"), False),
            (("zeta",), False)]
    assert [fan.anchor for fan in fans[4:]] == [("1", 1), ("6", 1)]

    faces = Surface.threads(pair, Surface.RELATIONAL)
    assert len(faces) == 6
    assert faces[1] == Surface.Thread(("beta", "zeta", "epsilon", "delta"), None, True)
    assert [face.arrows for face in faces if face.arrows and not face.cyclic] == \
           [("alpha",), ("nu",), ("eta",)]
    assert len([face for face in faces if not face.arrows]) == 2

    with pytest.raises(Error):
        Surface.threads(pair, "bogus")

def test_surface_running(running):
    """Invariants of the running example surface."""

    pair, _ = running
    surface = Surface.build_surface(pair)

    assert surface.euler_characteristic == 1
    assert surface.genus == 0
    assert surface.boundary_components == 1
    assert surface.punctures_v == 1
    assert surface.punctures_vstar == 1

    # The boundary walk alternates between all the linear fans and all the linear faces.
    walk = surface.boundary_walks[0]
    assert len(walk) == 5
    assert sorted(fan for fan, _ in walk) == [1, 2, 3, 4, 5]
    assert sorted(face for _, face in walk) == [idx for idx, face in enumerate(surface.faces)
                                                if not face.cyclic]

    assert surface.fan_of_arrow["beta"] == 0
    assert surface.face_of_arrow["beta"] == 1

def test_small_surfaces():
    """Surfaces of the smallest pairs."""

    surface = Surface.build_surface(make_pair("1", []))
    assert (surface.euler_characteristic, surface.genus, surface.boundary_components) == (1, 0, 1)
    assert len(surface.v_fans) == 2
    assert len(surface.faces) == 2
    assert Surface.surface_kind(surface) == Surface.POLYGON

    loop = make_pair("1", [("a", "1", "1")])
    assert Surface.surface_kind(Surface.build_surface(loop)) == Surface.ONCE_PUNCTURED_DISK

    kronecker = make_pair("1 2", [("a", "1", "2"), ("b", "1", "2")])
    assert Surface.surface_kind(Surface.build_surface(kronecker)) == Surface.ANNULUS

    arrow = make_pair("1 2", [("a", "1", "2")])
    assert Surface.surface_kind(Surface.build_surface(arrow)) == Surface.POLYGON

    # Two components give two surface components.
    surface = Surface.build_surface(make_pair("1 2 3", [("a", "1", "2")]))
    assert len(surface.components) == 2
    assert Surface.surface_kind(surface) is None

def test_dual(running):
    """Test 'dual()'."""

    pair, _ = running
    dpair = Surface.dual(pair)
    assert set(dpair.relations) == {Quiver.Relation("beta", "alpha"), Quiver.Relation("nu", "beta"),
                                    Quiver.Relation("alpha", "nu"),
                                    Quiver.Relation("eta", "epsilon")}
    assert Surface.dual(dpair) == pair

    # Punctures of the surface and internal faces trade places.
    surface = Surface.build_surface(pair)
    dsurface = Surface.build_surface(dpair)
    assert dsurface.punctures_v == surface.punctures_vstar
    assert dsurface.punctures_vstar == surface.punctures_v

def test_split(running):
    """Test 'split()'."""

    pair, _ = running
    pieces = Surface.split(pair)
    assert [(piece.kind, len(piece.surface.arcs)) for piece in pieces] == \
           [(Surface.ONCE_PUNCTURED_DISK, 3), (Surface.POLYGON, 2), (Surface.POLYGON, 2),
            (Surface.POLYGON, 3)]

    pair, _, _ = load_pair("loop-gentle.lg")
    pieces = Surface.split(pair)
    assert len(pieces) == 1
    assert pieces[0].kind == Surface.POLYGON
    assert len(pieces[0].surface.arcs) == 4

    pair, _, _ = load_pair("loop-not-gentle.lg")
    kinds = sorted(piece.kind for piece in Surface.split(pair))
    assert kinds == sorted([Surface.POLYGON, Surface.ONCE_PUNCTURED_DISK])

def test_relational_dual_arcs(running):
    """Test 'relational_dual_arcs()'."""

    pair, _ = running
    assert Surface.relational_dual_arcs(pair) == ("2", "3", "4", "5")

    pair, _, _ = load_pair("loop-gentle.lg")
    assert Surface.relational_dual_arcs(pair) == ("2",)

def test_labeled_tiling(running):
    """Test 'labeled_tiling()'."""

    pair, sigma = running
    tiling = Surface.labeled_tiling(pair, sigma)

    assert tiling.rstar == ("2", "3", "4", "5")
    assert len(tiling.face_label) == 7
    assert set(tiling.arrow_face) == set(pair.arrows)
    labels = {str(label) for label in tiling.face_label.values()}
    assert labels == {f"σ_{name}" for name in pair.arrows}

    for idx, piece in enumerate(tiling.pieces):
        if piece.corner is not None:
            assert len(piece.sides) == 2
            assert tiling.face_label[idx] == sigma[piece.corner]

    with pytest.raises(Error):
        Surface.labeled_tiling(pair, {})

def test_arc_semilinearity(running):
    """Arc semilinearity read off the tiling matches the automorphisms of the word."""

    pair, sigma = running
    tiling = Surface.labeled_tiling(pair, sigma)

    for text in ("nu,zeta^-1", "eta,delta^-1,alpha,nu,beta,alpha,nu,zeta^-1",
                 "band:nu,beta,alpha", "triv:4"):
        word = LGFormat.parse_word(text)
        assert Surface.arc_semilinearity(tiling, word) == \
               Galois.pi_sequence(pair, word, sigma)

    word = LGFormat.parse_word("nu,zeta^-1")
    crossings = Surface.arc_crossings(tiling.surface, word)
    assert crossings.arcs == ["1", "3", "4"]
    assert crossings.steps == [(0, "right"), (3, "left")]
    assert crossings.corners == [Surface.Quarter("1", 0, "L"), Surface.Quarter("4", 0, "L")]

    band = LGFormat.parse_word("band:nu,beta,alpha")
    crossings = Surface.arc_crossings(tiling.surface, band)
    assert crossings.arcs == ["1", "3", "2", "1"]
    assert {fan for fan, _ in crossings.steps} == {0}

    with pytest.raises(Error):
        Surface.arc_crossings(tiling.surface, Words.string_word([("beta", True),
                                                                 ("delta", True)]))

def test_figures(running):
    """Test the DOT and TikZ output."""

    pair, sigma = running
    dot = Figures.to_dot(pair)
    assert dot.startswith('digraph "lgpc" {')
    assert '"3" -> "1" [label="nu"];' in dot
    assert dot.count("style=dashed") == 4

    dot = Figures.to_dot(pair, exc=Zembyk.excision(pair))
    assert "cluster_excision" in dot
    assert '"x:3b" -> "x:1" [label="nu"];' in dot

    assert Figures.tex_name("alpha") == "\\alpha"
    assert Figures.tex_name("theta12") == "\\theta_{12}"
    assert Figures.tex_name("a1") == "\\mathrm{a1}"

    tikz = Figures.to_tikz(Surface.labeled_tiling(pair, sigma))
    assert tikz.startswith("\\begin{tikzpicture}")
    assert tikz.rstrip().endswith("\\end{tikzpicture}")
    assert tikz.count("\\draw[thick, dashed]") == 4
    assert "\\sigma_{\\alpha}" in tikz
