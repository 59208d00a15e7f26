#!/usr/bin/env python3
#
# -*- coding: utf-8 -*-
# vim: ts=4 sw=4 tw=100 et ai si
#
# Copyright (C) 2020-2021 Intel Corporation
# SPDX-License-Identifier: BSD-3-Clause
#
# Author: Antti Laakso <antti.laakso@linux.intel.com>

"""Test module for the semilinear algebra arithmetic."""

import math
import pytest
from common import load_pair, make_pair
from lgpclibs import Algebra, Galois, Quiver
from lgpclibs.helperlibs.Exceptions import Error, ErrorNotSupported

F4 = Galois.FiniteField(2, 2, [1, 1, 1])
X = F4.gen.idx

def test_dimension():
    """Test 'dimension()' and 'idempotent_and_radical_basis()'."""

    gentle, _, _ = load_pair("loop-gentle.lg")
    not_gentle, _, _ = load_pair("loop-not-gentle.lg")
    running, _, _ = load_pair("running.lg")

    assert Algebra.dimension(gentle) == 9
    assert Algebra.dimension(not_gentle) == math.inf
    assert Algebra.dimension(running) == math.inf
    assert Algebra.dimension(running, up_to=2) == 17
    assert Algebra.dimension(not_gentle, up_to=0) == 3

    bases = Algebra.idempotent_and_radical_basis(gentle)
    assert (bases.dim_algebra, bases.dim_radical) == (9, 6)
    assert [path.vertex for path in bases.idempotents] == ["1", "2", "3"]
    assert all(path.arrows for path in bases.radical)

    with pytest.raises(ErrorNotSupported):
        Algebra.idempotent_and_radical_basis(running)

def test_multiply():
    """Products of paths and the relations."""

    gentle, sigma, _ = load_pair("loop-gentle.lg")
    alg = Algebra.SemilinearAlgebra(gentle, sigma, Galois.FiniteField(2))

    alpha, beta, nu = alg.arrow("alpha"), alg.arrow("beta"), alg.arrow("nu")
    assert nu * beta * alpha == alg.path(["nu", "beta", "alpha"])
    assert (nu * alpha).is_zero()
    assert (beta * beta).is_zero()
    # Paths that do not compose.
    assert (alpha * nu).is_zero()

    assert alg.one() * beta == beta
    assert beta * alg.one() == beta
    assert alg.idempotent("2") * alpha == alpha
    assert (alg.idempotent("1") * alpha).is_zero()
    assert (beta + beta).is_zero()
    assert beta - beta == alg.zero()
    assert str(alg.zero()) == "0"
    assert str(nu * beta) == "nu*beta"

    with pytest.raises(Error):
        alg.path(["beta", "beta"])
    with pytest.raises(Error):
        beta * Algebra.SemilinearAlgebra(gentle, sigma, Galois.FiniteField(2)).arrow("beta")

def test_twist():
    """Scalars pass through arrows by the twist rule."""

    pair = make_pair("1 2", [("a", "1", "2")])
    sigma = Galois.frobenius_sigma(pair, F4, {"a" : 1})
    alg = Algebra.SemilinearAlgebra(pair, sigma, F4)

    arrow = alg.arrow("a")
    x_squared = (F4.gen * F4.gen).idx
    assert arrow * alg.scalar(X) == alg.scalar(x_squared) * arrow
    assert arrow * alg.scalar(X) != alg.scalar(X) * arrow
    assert arrow.rmul(X) == arrow.lmul(x_squared)
    assert str(arrow.lmul(X)) == "(x)*a"

    # With the identity automorphism scalars commute with arrows.
    alg = Algebra.SemilinearAlgebra(pair, Galois.frobenius_sigma(pair, F4), F4)
    arrow = alg.arrow("a")
    assert arrow * alg.scalar(X) == alg.scalar(X) * arrow

def test_backends():
    """Symbolic automorphisms are accepted over prime fields only."""

    pair = make_pair("1 2", [("a", "1", "2")])
    with pytest.raises(ErrorNotSupported):
        Algebra.SemilinearAlgebra(pair, Galois.symbolic_sigma(pair), F4)

    f8 = Galois.FiniteField(2, 3)
    with pytest.raises(ErrorNotSupported):
        Algebra.SemilinearAlgebra(pair, Galois.frobenius_sigma(pair, f8), F4)

    alg = Algebra.SemilinearAlgebra(pair, Galois.symbolic_sigma(pair), Galois.FiniteField(3))
    assert alg.arrow("a") * alg.scalar(2) == alg.scalar(2) * alg.arrow("a")
    assert alg.element({Quiver.Path(("a",), None) : 2}).terms == {Quiver.Path(("a",), None) : 2}
