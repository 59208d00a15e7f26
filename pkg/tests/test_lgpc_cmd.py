#!/usr/bin/env python3
#
# -*- coding: utf-8 -*-
# vim: ts=4 sw=4 tw=100 et ai si
#
# Copyright (C) 2020-2021 Intel Corporation
# SPDX-License-Identifier: BSD-3-Clause
#
# Author: Antti Laakso <antti.laakso@linux.intel.com>

"""Test module for the 'lgpc' command-line tool."""

import pytest
from common import data_file, load_pair, load_golden, run_lgpc, run_lgpc_json
from lgpclibs import LGFormat, Quiver, Surface

RUNNING = data_file("running.lg")
RUNNING_F4 = data_file("running-f4.lg")
LOOP = data_file("loop-gentle.lg")

def test_validate():
    """Test the 'validate' command."""

    info = run_lgpc_json(f"validate {RUNNING}")
    assert info["locally_gentle"]
    assert info["gentle"] is False
    assert info["violations"] == []

    info = run_lgpc_json(f"validate {data_file('not-locally-gentle.lg')}", exp_ret=1)
    assert not info["locally_gentle"]
    assert info["gentle"] is None
    assert "in-degree" in [viol["code"] for viol in info["violations"]]

    _, output = run_lgpc(f"validate {LOOP}", exp_ret=0)
    assert "Gentle (finite-dimensional algebra): yes" in output

    run_lgpc(f"validate {data_file('bad-syntax.lg')}", exp_ret=2)
    run_lgpc(f"validate {data_file('no-such-file.lg')}", exp_ret=1)

def test_classify():
    """Test the 'classify' command."""

    info = run_lgpc_json(f"classify {RUNNING}")
    kinds = {vinfo["vertex"] : vinfo["kind"] for vinfo in info["vertices"]}
    assert kinds == {"1" : "NonRelational", "2" : "Tributary", "3" : "Distributary",
                     "4" : "Stream", "5" : "Distributary", "6" : "NonRelational"}

    _, output = run_lgpc(f"classify {LOOP}", exp_ret=0)
    assert "2: Quadbutary (a=beta, b=beta, c=alpha, d=nu)" in output

def test_excise():
    """Test the 'excise' and 'levee' commands."""

    assert run_lgpc_json(f"excise {RUNNING}") == load_golden("excise-running.json")

    info = run_lgpc_json(f"excise {RUNNING} --order 5,3,4,2")
    assert [lev["vertex"] for lev in info["levees"]] == ["5", "3", "4", "2"]
    assert sorted(comp["kind"] for comp in info["components"]) == \
           ["CycleEquioriented", "LineA", "LineA", "LineA"]
    run_lgpc(f"excise {RUNNING} --order 2,3", exp_ret=1)

    info = run_lgpc_json(f"levee {RUNNING} --vertex 4")
    assert (info["kind"], info["sharp"], info["flat"]) == ("Stream", "4#", "4b")
    assert info["locally_gentle"]
    assert len(info["relations"]) == 3
    run_lgpc(f"levee {RUNNING} --vertex 1", exp_ret=1)
    run_lgpc(f"levee {RUNNING} --vertex 7", exp_ret=1)

def test_surface():
    """Test the 'surface' and 'split' commands."""

    info = run_lgpc_json(f"surface {RUNNING}")
    assert (info["euler_characteristic"], info["genus"], info["boundary_components"]) == (1, 0, 1)
    assert (info["punctures_v"], info["punctures_vstar"]) == (1, 1)
    assert info["fans"][0] == {"arrows" : ["alpha", "beta", "nu"], "anchor" : None,
                               "cyclic" : True}
    assert len(info["boundary_walks"]) == 1
    assert not info["dual"]

    info = run_lgpc_json(f"surface {RUNNING} --dual")
    assert info["dual"]
    assert (info["punctures_v"], info["punctures_vstar"]) == (1, 1)

    _, output = run_lgpc(f"surface {RUNNING}", exp_ret=0)
    assert "Euler characteristic: 1" in output
    assert "alpha, beta, nu (cyclic)" in output

    assert run_lgpc_json(f"split {RUNNING}") == load_golden("split-running.json")

def test_words():
    """Test the 'strings', 'bands' and 'pi' commands."""

    info = run_lgpc_json(f"strings {LOOP} --max-len 1")
    assert info["words"] == ["triv:1", "triv:2", "triv:3", "alpha", "beta", "nu"]
    assert info["count"] == 6

    run_lgpc(f"strings {LOOP} --max-len x", exp_ret=2)
    run_lgpc(f"strings {LOOP} --max-len -1", exp_ret=2)

    info = run_lgpc_json(f"bands {RUNNING} --max-period 3")
    assert "band:alpha,nu,beta" in info["words"]
    run_lgpc(f"bands {data_file('bad-syntax.lg')}", exp_ret=2)

    info = run_lgpc_json(f"pi {RUNNING} --word nu,zeta^-1")
    assert info["vertices"] == ["1", "3", "4"]
    assert info["pi"] == ["id", "σ_nu^-1", "σ_zeta σ_nu^-1"]
    assert "pi_band" not in info

    info = run_lgpc_json(f"pi {RUNNING} --word band:nu,beta,alpha")
    assert info["pi_band"] == "σ_nu σ_beta σ_alpha"

    info = run_lgpc_json(f"pi {RUNNING_F4} --word band:nu,beta,alpha")
    assert info["pi_band"] == "Frob"

    run_lgpc(f"pi {RUNNING} --word beta,delta", exp_ret=1)
    run_lgpc(f"pi {RUNNING} --word nu^2", exp_ret=2)

def test_module():
    """Test the 'module' and 'hom' commands."""

    info = run_lgpc_json(f"module {RUNNING} --word nu,zeta^-1")
    assert info["field"] == "F_2"
    assert info["dimension"] == 3
    assert {key : val for key, val in info["dimension_vector"].items() if val} == \
           {"1" : 1, "3" : 1, "4" : 1}
    assert info["check_ok"]
    assert info["indecomposable"] is True

    info = run_lgpc_json(f"module {RUNNING} --word nu,zeta^-1 --end-limit 1", exp_ret=4)
    assert info["indecomposable"] is None
    run_lgpc(f"module {RUNNING} --word nu,zeta^-1 --end-limit no", exp_ret=2)

    matrix = data_file("param-x.txt")
    info = run_lgpc_json(f"module {RUNNING_F4} --word band:nu,beta,alpha --band-matrix {matrix}")
    assert info["field"] == "F_4 = F_2[x]/(x^2+x+1)"
    assert info["dimension"] == 3
    assert info["maps"]["alpha"] == [["01"]]
    assert info["check_ok"]

    run_lgpc(f"module {RUNNING_F4} --word nu --band-matrix {matrix}", exp_ret=1)
    run_lgpc(f"module {RUNNING} --word beta,delta", exp_ret=1)

    _, output = run_lgpc(f"module {RUNNING} --word band:nu,beta,alpha", exp_ret=0)
    assert "Indecomposable: yes" in output

    info = run_lgpc_json(f"hom {RUNNING} --word triv:1 --word2 nu,zeta^-1")
    assert (info["dim_hom_12"], info["dim_hom_21"]) == (1, 0)
    assert info["prime_field"] == "F_2"

def test_nodal():
    """Test the 'nodal' command."""

    assert run_lgpc_json(f"nodal {LOOP}") == load_golden("nodal-loop-gentle.json")
    run_lgpc(f"nodal {RUNNING}", exp_ret=3)
    run_lgpc(f"nodal {data_file('loop-not-gentle.lg')}", exp_ret=3)

    _, output = run_lgpc(f"nodal {LOOP}", exp_ret=0)
    assert "Nodal: yes" in output

def test_pictures():
    """Test the 'dot' and 'tiling' commands."""

    _, output = run_lgpc(f"dot {RUNNING}", exp_ret=0)
    assert output.startswith('digraph "lgpc" {')

    info = run_lgpc_json(f"dot {RUNNING} --excision")
    assert "cluster_excision" in info["dot"]

    info = run_lgpc_json(f"tiling {RUNNING}")
    assert info["rstar"] == ["2", "3", "4", "5"]
    labels = [piece["label"] for piece in info["pieces"] if piece["label"] is not None]
    assert sorted(labels) == sorted(f"σ_{name}" for name in ("alpha", "beta", "nu", "delta",
                                                            "epsilon", "zeta", "eta"))
    assert "tikz" not in info

    _, output = run_lgpc(f"tiling {RUNNING} --tikz", exp_ret=0)
    assert "\\begin{tikzpicture}" in output

def test_paths_dual_random():
    """Test the 'paths', 'dual' and 'random' commands."""

    info = run_lgpc_json(f"paths {LOOP} --max-len 1")
    assert info["paths"] == ["e_1", "e_2", "e_3", "alpha", "beta", "nu"]
    assert info["dimension"] == 9
    assert run_lgpc_json(f"paths {RUNNING}")["dimension"] == "infinite"

    _, output = run_lgpc(f"dual {RUNNING}", exp_ret=0)
    pair, _, _ = load_pair("running.lg")
    dpair, _, _ = LGFormat.to_pair(LGFormat.parse(output))
    assert dpair == Surface.dual(pair)

    info = run_lgpc_json(f"dual {RUNNING_F4}")
    assert set(info["dual_relations"]) == {"beta*alpha", "nu*beta", "alpha*nu", "eta*epsilon"}
    assert "frob 1" in info["document"]

    _, output1 = run_lgpc("random --seed 7 --vertices 6 --arrows 7", exp_ret=0)
    _, output2 = run_lgpc("random --seed 7 --vertices 6 --arrows 7", exp_ret=0)
    assert output1 == output2
    doc = LGFormat.parse(output1)
    assert Quiver.check_locally_gentle(LGFormat.to_quiver(doc), doc.relations) == []
    assert len(doc.vertices) == 6

    run_lgpc("random --vertices 0", exp_ret=2)

@pytest.mark.parametrize("arguments", ["bogus", "validate", f"-q -d validate {RUNNING}",
                                       f"strings {RUNNING} --bogus"])
def test_bad_arguments(arguments):
    """Bad command lines exit with code 2."""
    run_lgpc(arguments, exp_ret=2)
