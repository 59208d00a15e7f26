# -*- coding: utf-8 -*-
# vim: ts=4 sw=4 tw=100 et ai si
#
# Copyright (C) 2020-2021 Intel Corporation
# SPDX-License-Identifier: BSD-3-Clause
#
# Author: Artem Bityutskiy <artem.bityutskiy@linux.intel.com>

"""
This module provides arithmetic in the semilinear algebra of a locally gentle pair. The algebra has
the admissible paths as a left basis over a finite field, scalars pass through arrows by the twist
rule 'a λ = σ_a(λ) a', and products of paths that do not compose or contain a relation vanish.
"""

import math
import logging
from collections import namedtuple
from lgpclibs import Quiver, Galois
from lgpclibs.helperlibs.Exceptions import Error, ErrorNotSupported

_LOG = logging.getLogger()

AlgebraBases = namedtuple("AlgebraBases", ["idempotents", "radical", "dim_algebra",
                                           "dim_radical"])

class AlgebraElement:
    """
    An element of a 'SemilinearAlgebra': a finite '{path: coefficient}' dictionary, coefficients
    are field element indices written on the left of the paths. Zero coefficients are never
    stored.
    """

    def _check(self, other):
        """Make sure 'other' belongs to the same algebra."""

        if not isinstance(other, AlgebraElement) or other.algebra is not self.algebra:
            raise Error("cannot combine elements of different semilinear algebras")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for path, coef in other.terms.items():
            terms[path] = int(self.algebra.field.add(terms.get(path, 0), coef))
        return AlgebraElement(self.algebra, terms)

    def __neg__(self):
        field = self.algebra.field
        return AlgebraElement(self.algebra, {path : int(field.neg(coef))
                                             for path, coef in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        return self.algebra.multiply(self, other)

    def lmul(self, scalar):
        """Return 'scalar * self', 'scalar' is a field element index."""

        field = self.algebra.field
        return AlgebraElement(self.algebra, {path : int(field.mul(scalar, coef))
                                             for path, coef in self.terms.items()})

    def rmul(self, scalar):
        """Return 'self * scalar': the scalar is moved to the left through every path."""

        alg = self.algebra
        terms = {}
        for path, coef in self.terms.items():
            terms[path] = int(alg.field.mul(coef, alg.twist(path, scalar)))
        return AlgebraElement(alg, terms)

    def is_zero(self):
        """Return 'True' for the zero element."""
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra is other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"

        field = self.algebra.field
        pair = self.algebra.pair
        parts = []
        for path in sorted(self.terms, key=lambda path: Quiver.path_sort_key(pair, path)):
            coef = self.terms[path]
            pstr = Quiver.path_str(path)
            if coef == 1:
                parts.append(pstr)
            else:
                parts.append(f"({field.element_str(coef)})*{pstr}")
        return " + ".join(parts)

    __repr__ = __str__

    def __init__(self, algebra, terms):
        """
        The class constructor. The arguments are as follows.
          * algebra - the 'SemilinearAlgebra' object.
          * terms - the '{path: coefficient}' dictionary.
        """

        self.algebra = algebra
        self.terms = {path : int(coef) for path, coef in terms.items() if coef}

class SemilinearAlgebra:
    """
    The semilinear algebra of a locally gentle pair with an automorphism for every arrow, over a
    finite field. Symbolic automorphisms are accepted over prime fields only, where every
    automorphism is trivial.
    """

    def twist(self, path, scalar):
        """
        Return the scalar 'μ'' such that 'path * μ = μ' * path'. For the path 'a_1 ... a_k' this is
        'σ_{a_1}(... σ_{a_k}(μ))'.
        """

        if self._trivial_twist or not path.arrows:
            return scalar

        autom = self._identity
        for name in path.arrows:
            autom = autom.compose(self.sigma[name])
        return int(autom.apply(scalar))

    def multiply_paths(self, path1, path2):
        """Return the product path of 'path1' and 'path2' (in this order), or 'None' if zero."""

        pair = self.pair
        if pair.path_tail(path1) != pair.path_head(path2):
            return None
        if not path1.arrows:
            return path2
        if not path2.arrows:
            return path1
        if pair.in_z(path1.arrows[-1], path2.arrows[0]):
            return None
        return Quiver.Path(path1.arrows + path2.arrows, None)

    def multiply(self, elt1, elt2):
        """Return the product of algebra elements 'elt1' and 'elt2'."""

        field = self.field
        terms = {}
        for path1, coef1 in elt1.terms.items():
            for path2, coef2 in elt2.terms.items():
                prod = self.multiply_paths(path1, path2)
                if prod is None:
                    continue
                coef = field.mul(coef1, self.twist(path1, coef2))
                terms[prod] = int(field.add(terms.get(prod, 0), coef))
        return AlgebraElement(self, terms)

    def element(self, terms):
        """Return the element with the '{path: coefficient}' terms."""

        for path in terms:
            if not self.pair.is_admissible_path(path):
                raise Error(f"path '{Quiver.path_str(path)}' is not admissible")
        return AlgebraElement(self, terms)

    def zero(self):
        """Return the zero element."""
        return AlgebraElement(self, {})

    def idempotent(self, vertex):
        """Return the trivial path 'e_vertex'."""

        self.pair.quiver.check_vertex(vertex)
        return AlgebraElement(self, {Quiver.Path((), vertex) : 1})

    def arrow(self, name):
        """Return the arrow 'name' as an algebra element."""

        self.pair.quiver.arrow(name)
        return AlgebraElement(self, {Quiver.Path((name,), None) : 1})

    def path(self, arrows):
        """Return the path with arrows 'arrows' (written order) as an algebra element."""
        return self.element({Quiver.Path(tuple(arrows), None) : 1})

    def one(self):
        """Return the unit element, the sum of all the trivial paths."""
        return AlgebraElement(self, {Quiver.Path((), vertex) : 1 for vertex in self.pair.vertices})

    def scalar(self, scalar):
        """Return the element 'scalar * 1'."""
        return self.one().lmul(scalar)

    def __init__(self, pair, sigma, field):
        """
        The class constructor. The arguments are as follows.
          * pair - the 'LocallyGentlePair' object.
          * sigma - the '{arrow: automorphism}' dictionary.
          * field - the 'FiniteField' object the coefficients come from.
        """

        Galois.check_sigma(pair, sigma)

        self.pair = pair
        self.sigma = sigma
        self.field = field

        symbolic = [autom for autom in sigma.values() if isinstance(autom, Galois.FreeWord)]
        if symbolic and not field.is_prime_field():
            raise ErrorNotSupported(f"symbolic automorphisms need a prime field of coefficients, "
                                    f"got {field}")
        for autom in sigma.values():
            if isinstance(autom, Galois.FrobPower) and autom.field != field:
                raise ErrorNotSupported(f"automorphism '{autom}' is defined over {autom.field}, "
                                        f"not over {field}")

        self._trivial_twist = bool(symbolic) or field.is_prime_field() or \
                              all(autom.is_identity() for autom in sigma.values())
        self._identity = Galois.FrobPower(0, field)

def dimension(pair, up_to=None):
    """
    Return the dimension of the algebra of 'pair': the number of admissible paths, or 'math.inf'
    if there are infinitely many. If 'up_to' is given, count only the paths of length at most
    'up_to'.
    """

    if up_to is not None:
        return len(Quiver.admissible_paths(pair, up_to))
    if not Quiver.is_gentle(pair):
        return math.inf
    return len(Quiver.admissible_paths(pair, len(pair.arrows)))

def idempotent_and_radical_basis(pair):
    """
    Return the 'AlgebraBases' tuple for gentle pair 'pair': the trivial paths (the primitive
    idempotents) and the admissible paths of positive length (a basis of the radical).
    """

    if not Quiver.is_gentle(pair):
        raise ErrorNotSupported("the algebra is infinite-dimensional: the pair is not gentle")

    paths = Quiver.admissible_paths(pair, len(pair.arrows))
    idempotents = [path for path in paths if not path.arrows]
    radical = [path for path in paths if path.arrows]
    return AlgebraBases(idempotents, radical, len(paths), len(radical))
