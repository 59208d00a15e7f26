#!/usr/bin/env python3
#
# -*- coding: utf-8 -*-
# vim: ts=4 sw=4 tw=100 et ai si
#
# Copyright (C) 2020-2021 Intel Corporation
# SPDX-License-Identifier: BSD-3-Clause
#
# Author: Antti Laakso <antti.laakso@linux.intel.com>

"""Test module for levees and the Zembyk excision."""

import pytest
from common import load_pair, make_pair
from lgpclibs import Quiver, Zembyk
from lgpclibs.helperlibs.Exceptions import Error

def _arrows(pair_or_quiver):
    """Return the '{name: (tail, head)}' dictionary."""
    return {arr.name : (arr.tail, arr.head) for arr in pair_or_quiver.arrows.values()}

def test_levee_quadbutary():
    """Levees at the quadbutary of the loop examples."""

    pair, _, _ = load_pair("loop-gentle.lg")
    res = Zembyk.levee(pair, "2")
    assert (res.sharp, res.flat) == ("2#", "2b")
    assert res.pair.vertices == ("1", "2#", "2b", "3")
    assert _arrows(res.pair) == {"alpha" : ("1", "2#"), "beta" : ("2#", "2b"), "nu" : ("2b", "3")}
    assert not res.pair.relations

    pair, _, _ = load_pair("loop-not-gentle.lg")
    res = Zembyk.levee(pair, "2")
    assert _arrows(res.pair) == {"alpha" : ("1", "2#"), "beta" : ("2b", "2b"), "nu" : ("2#", "3")}
    assert not res.pair.relations

def test_levee_running():
    """Levees of the running example."""

    pair, _, _ = load_pair("running.lg")

    res = Zembyk.levee(pair, "4")
    assert _arrows(res.pair)["zeta"] == ("3", "4b")
    assert _arrows(res.pair)["epsilon"] == ("4#", "5")
    # Only the relation through vertex 4 goes away.
    assert len(res.pair.relations) == 3
    assert Quiver.Relation("epsilon", "zeta") not in res.pair.relations
    assert Quiver.check_locally_gentle(res.pair.quiver, res.pair.relations) == []
    assert res.arrow_map == {name : name for name in pair.arrows}

    res = Zembyk.levee(pair, "2")
    assert _arrows(res.pair)["alpha"] == ("1", "2#")
    assert _arrows(res.pair)["beta"] == ("2#", "3")
    assert _arrows(res.pair)["delta"] == ("5", "2b")

    with pytest.raises(Error):
        Zembyk.levee(pair, "1")

def test_levee_name_clash():
    """Levee vertex names do not clash with the existing ones."""

    pair = make_pair("1 2 2# 3", [("a", "1", "2"), ("b", "2", "3"), ("c", "2#", "2#")], ["b*a"])
    res = Zembyk.levee(pair, "2")
    assert res.sharp not in pair.vertices
    assert res.flat not in pair.vertices
    assert len(set(res.pair.vertices)) == 5

def test_excision_running():
    """Test the excision of the running example."""

    pair, _, _ = load_pair("running.lg")
    exc = Zembyk.excision(pair)

    assert [lev.vertex for lev in exc.levees] == ["2", "3", "4", "5"]
    assert exc.vertex_map["1"] == ("1",)
    assert exc.vertex_map["3"] == ("3#", "3b")

    comps = [(comp.quiver.vertices, comp.kind) for comp in exc.components]
    assert comps == [(("1", "2#", "3b"), Zembyk.CYCLE_EQUIORIENTED),
                     (("2b", "5#"), Zembyk.LINE_A),
                     (("3#", "4b"), Zembyk.LINE_A),
                     (("4#", "5b", "6"), Zembyk.LINE_A)]
    assert not Zembyk.is_acyclic(exc.quiver)

    # Arrows keep their names.
    assert set(exc.quiver.arrows) == set(pair.arrows)
    assert len(exc.quiver.vertices) == len(pair.vertices) + 4

def test_excision_order():
    """The excision does not depend on the order of the levees up to isomorphism."""

    pair, _, _ = load_pair("running.lg")
    exc1 = Zembyk.excision(pair)
    exc2 = Zembyk.excision(pair, order=["5", "3", "4", "2"])

    assert Zembyk.quivers_isomorphic(exc1.quiver, exc2.quiver)
    assert sorted(comp.kind for comp in exc1.components) == \
           sorted(comp.kind for comp in exc2.components)

    with pytest.raises(Error):
        Zembyk.excision(pair, order=["2", "3"])
    with pytest.raises(Error):
        Zembyk.excision(pair, order=["1", "2", "3", "4", "5"])

def test_excision_gentle():
    """Excision of the gentle loop example is a single line."""

    pair, _, _ = load_pair("loop-gentle.lg")
    exc = Zembyk.excision(pair)
    assert len(exc.components) == 1
    assert exc.components[0].kind == Zembyk.LINE_A
    assert len(exc.components[0].quiver.vertices) == 4
    assert Zembyk.is_acyclic(exc.quiver)

    # No relations: the excision is the quiver itself.
    pair = make_pair("1 2 3", [("a", "1", "2"), ("b", "2", "3")])
    exc = Zembyk.excision(pair)
    assert not exc.levees
    assert exc.quiver == pair.quiver

def test_classify_component():
    """Test 'classify_component()'."""

    line = Quiver.Quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "3", "2")])
    assert Zembyk.classify_component(line) == Zembyk.LINE_A

    single = Quiver.Quiver(["1"], [])
    assert Zembyk.classify_component(single) == Zembyk.LINE_A

    cycle = Quiver.Quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1")])
    assert Zembyk.classify_component(cycle) == Zembyk.CYCLE_EQUIORIENTED

    loop = Quiver.Quiver(["1"], [("a", "1", "1")])
    assert Zembyk.classify_component(loop) == Zembyk.CYCLE_EQUIORIENTED

    kronecker = Quiver.Quiver(["1", "2"], [("a", "1", "2"), ("b", "1", "2")])
    assert Zembyk.classify_component(kronecker) == Zembyk.CYCLE_MIXED

    star = Quiver.Quiver(["1", "2", "3", "4"], [("a", "1", "2"), ("b", "3", "2"),
                                                ("c", "4", "2")])
    with pytest.raises(Error):
        Zembyk.classify_component(star)
