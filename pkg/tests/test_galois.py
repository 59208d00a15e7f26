#!/usr/bin/env python3
#
# -*- coding: utf-8 -*-
# vim: ts=4 sw=4 tw=100 et ai si
#
# Copyright (C) 2020-2021 Intel Corporation
# SPDX-License-Identifier: BSD-3-Clause
#
# Author: Antti Laakso <antti.laakso@linux.intel.com>

"""Unittests for the 'Galois' module: finite fields and automorphism backends."""

import unittest
import numpy
from common import load_pair, make_pair
from lgpclibs import Galois, LGFormat
from lgpclibs.helperlibs.Exceptions import Error, ErrorNotFound, ErrorNotSupported, ErrorBadFormat

class TestFiniteField(unittest.TestCase):
    """Unittests for the 'FiniteField' class."""

    def test_construct(self):
        """Test field construction and the modulus checks."""

        f4 = Galois.FiniteField(2, 2, [1, 1, 1])
        self.assertEqual(str(f4), "F_4 = F_2[x]/(x^2+x+1)")
        self.assertEqual(f4.order, 4)
        self.assertEqual(f4, Galois.FiniteField(2, 2))
        self.assertEqual(str(Galois.FiniteField(5)), "F_5")
        self.assertEqual(str(Galois.FiniteField(2, 3)), "F_8 = F_2[x]/(x^3+x^2+1)")

        self.assertTrue(Galois.is_irreducible([1, 1, 1], 2))
        self.assertFalse(Galois.is_irreducible([1, 0, 1], 2))
        self.assertTrue(Galois.is_irreducible([1, 0, 1], 3))

        with self.assertRaises(Error):
            Galois.FiniteField(4)
        with self.assertRaises(Error):
            Galois.FiniteField(2, 0)
        with self.assertRaises(ErrorNotSupported):
            Galois.FiniteField(2, 11)
        with self.assertRaises(Error):
            Galois.FiniteField(2, 2, [1, 0, 1])
        with self.assertRaises(Error):
            Galois.FiniteField(2, 2, [1, 1])

    def test_arithmetic(self):
        """Test element arithmetic."""

        f4 = Galois.FiniteField(2, 2, [1, 1, 1])
        x = f4.gen
        self.assertEqual(str(x * x), "x+1")
        self.assertEqual(x * x, x + 1)
        self.assertEqual(x + x, f4.zero)
        self.assertEqual(x * x * x, f4.one)
        self.assertEqual(x ** -1, x + 1)
        self.assertEqual(x / x, 1)

        f9 = Galois.FiniteField(3, 2)
        y = f9.gen
        self.assertEqual(y * y, 2)
        for elt in f9.elements()[1:]:
            self.assertEqual(elt * elt.inverse(), f9.one)
        self.assertEqual(-f9.one, 2)

        with self.assertRaises(Error):
            f4.one.inverse() * f9.one
        with self.assertRaises(Error):
            f4.zero.inverse()

        mat = numpy.array([[0, 1], [2, 3]])
        self.assertTrue(numpy.array_equal(f4.matmul(f4.identity(2), mat), mat))
        with self.assertRaises(Error):
            f4.matmul(mat, f4.identity(3))

    def test_frobenius(self):
        """Test the Frobenius automorphism."""

        f4 = Galois.FiniteField(2, 2, [1, 1, 1])
        x = f4.gen
        self.assertEqual(x.frobenius(), x * x)
        self.assertEqual(x.frobenius(2), x)

        frob = Galois.FrobPower(1, f4)
        self.assertEqual(str(frob), "Frob")
        self.assertEqual(frob.apply(x), x + 1)
        self.assertEqual(frob.apply(numpy.array([0, 1, 2, 3])).tolist(), [0, 1, 3, 2])
        self.assertEqual(frob.compose(frob), Galois.FrobPower(0, f4))
        self.assertTrue(frob.compose(frob).is_identity())
        self.assertEqual(frob.invert(), frob)

        f8 = Galois.FiniteField(2, 3)
        frob8 = Galois.FrobPower(1, f8)
        self.assertEqual(str(frob8.invert()), "Frob^2")
        for elt in f8.elements():
            self.assertEqual(frob8.compose(frob8.invert()).apply(elt), elt)

        with self.assertRaises(ErrorNotSupported):
            frob.compose(frob8)

    def test_frobenius_order(self):
        """The Frobenius automorphism is 'e -> e^p' and has order 'n'."""

        for p in (2, 3, 5):
            for n in range(1, 5):
                field = Galois.FiniteField(p, n)
                for elt in field.elements():
                    self.assertEqual(elt.frobenius(), elt ** p)
                    cur = elt
                    for _ in range(n):
                        cur = cur.frobenius()
                    self.assertEqual(cur, elt, f"F_{p}^{n}: {elt}")
                    self.assertEqual(elt.frobenius(n), elt)

    def test_elements_text(self):
        """Test the element text format used by band parameter files."""

        f4 = Galois.FiniteField(2, 2, [1, 1, 1])
        self.assertEqual(f4.parse_element("01"), 2)
        self.assertEqual(f4.parse_element("0:1"), 2)
        self.assertEqual(f4.render_element(3), "11")
        self.assertEqual(f4.element_str(3), "x+1")

        for text in ("2", "011", "a"):
            with self.assertRaises(ErrorBadFormat):
                f4.parse_element(text)

        mat = LGFormat.parse_matrix("# T\n01 0\n1 11\n", f4)
        self.assertEqual(mat.tolist(), [[2, 0], [1, 3]])
        with self.assertRaises(ErrorBadFormat):
            LGFormat.parse_matrix("1 0\n1\n", f4)
        with self.assertRaises(ErrorBadFormat):
            LGFormat.parse_matrix("1 0\n", f4)

class TestAutomorphisms(unittest.TestCase):
    """Unittests for the automorphism assignments and the automorphisms of words."""

    def test_free_word(self):
        """Test the symbolic backend."""

        word = Galois.FreeWord([("a", 1), ("b", -1)])
        self.assertEqual(str(word), "σ_a σ_b^-1")
        self.assertTrue(word.compose(word.invert()).is_identity())
        self.assertEqual(str(Galois.FreeWord()), "id")

        f8 = Galois.FiniteField(2, 3)
        assignment = {"a" : Galois.FrobPower(1, f8), "b" : Galois.FrobPower(2, f8)}
        self.assertEqual(word.evaluate(assignment), Galois.FrobPower(2, f8))

        with self.assertRaises(Error):
            word.evaluate({"a" : Galois.FrobPower(1, f8)})
        with self.assertRaises(ErrorNotSupported):
            word.apply(f8.one)
        with self.assertRaises(ErrorNotSupported):
            word.compose(Galois.FrobPower(1, f8))
        with self.assertRaises(Error):
            Galois.FreeWord([("a", 2)])

    def test_sigma(self):
        """Test the automorphism assignments of pairs."""

        pair, sigma, field = load_pair("running.lg")
        self.assertIsNone(field)
        self.assertEqual(sigma["alpha"], Galois.FreeWord.generator("alpha"))

        pair, sigma, field = load_pair("running-f4.lg")
        self.assertEqual(field, Galois.FiniteField(2, 2, [1, 1, 1]))
        self.assertEqual(sigma["alpha"], Galois.FrobPower(1, field))
        self.assertTrue(sigma["beta"].is_identity())

        with self.assertRaises(ErrorNotFound):
            Galois.frobenius_sigma(pair, field, {"omega" : 1})
        with self.assertRaises(Error):
            Galois.check_sigma(pair, {"alpha" : sigma["alpha"]})

    def test_pi_sequence(self):
        """Test 'pi_sequence()' and 'pi_band()'."""

        pair, sigma, _ = load_pair("running.lg")
        pis = Galois.pi_sequence(pair, LGFormat.parse_word("nu,zeta^-1"), sigma)
        self.assertEqual([str(pi) for pi in pis], ["id", "σ_nu^-1", "σ_zeta σ_nu^-1"])

        pis = Galois.pi_sequence(pair, LGFormat.parse_word("triv:3"), sigma)
        self.assertEqual(pis, [Galois.FreeWord()])

        band = LGFormat.parse_word("band:nu,beta,alpha")
        self.assertEqual(str(Galois.pi_band(pair, band, sigma)), "σ_nu σ_beta σ_alpha")
        with self.assertRaises(Error):
            Galois.pi_band(pair, LGFormat.parse_word("nu,zeta^-1"), sigma)

        f4 = Galois.FiniteField(2, 2, [1, 1, 1])
        loop = make_pair("1", [("a", "1", "1")])
        sigma = Galois.frobenius_sigma(loop, f4, {"a" : 1})
        self.assertEqual(Galois.pi_band(loop, LGFormat.parse_word("band:a"), sigma),
                         Galois.FrobPower(1, f4))
