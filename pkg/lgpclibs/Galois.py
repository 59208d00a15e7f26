# -*- coding: utf-8 -*-
# vim: ts=4 sw=4 tw=100 et ai si
#
# Copyright (C) 2020-2021 Intel Corporation
# SPDX-License-Identifier: BSD-3-Clause
#
# Author: Artem Bityutskiy <artem.bityutskiy@linux.intel.com>

"""
This module provides finite fields 'F_{p^n}', field automorphisms in two flavors, and the
automorphism sequences of words.

Automorphisms come from one of the two backends.
  * 'FrobPower' - a power of the Frobenius automorphism of a 'FiniteField'. These can be applied to
    field elements.
  * 'FreeWord' - a reduced word in formal generators, one generator per arrow. This is the symbolic
    backend: it stands for an arbitrary automorphism group and cannot be applied to elements.

Composition follows the usual notation: 'compose(f, g)' is "f after g".

Field elements are coded by integer indices: the index of 'c_0 + c_1*x + ... + c_{n-1}*x^{n-1}'
has base-p digits 'c_0, c_1, ...', least significant first. Arithmetic is done with numpy lookup
tables, so it works element-wise on integer arrays as well as on plain integers.
"""

import logging
import itertools
import numpy
from lgpclibs import Words
from lgpclibs.helperlibs import Trivial
from lgpclibs.helperlibs.Exceptions import Error, ErrorNotSupported, ErrorBadFormat

_LOG = logging.getLogger()

# Fields are backed by 'order x order' lookup tables, this is the largest supported order.
FIELD_MAX_ORDER = 1024

def _poly_rem(num, den, prime):
    """
    Return the remainder of polynomial 'num' divided by monic polynomial 'den', both coefficient
    lists over 'F_prime', lowest degree first.
    """

    rem = list(num)
    deg = len(den) - 1
    for idx in range(len(rem) - 1, deg - 1, -1):
        coef = rem[idx] % prime
        if coef:
            for jdx, dcoef in enumerate(den):
                rem[idx - deg + jdx] = (rem[idx - deg + jdx] - coef * dcoef) % prime
    return [coef % prime for coef in rem[:deg]]

def _poly_str(coeffs):
    """Return polynomial text like "x^2+2x+1" for coefficient list 'coeffs', lowest degree first."""

    terms = []
    for deg, coef in reversed(list(enumerate(coeffs))):
        if not coef:
            continue
        scoef = "" if coef == 1 else str(coef)
        if deg == 0:
            terms.append(str(coef))
        elif deg == 1:
            terms.append(f"{scoef}x")
        else:
            terms.append(f"{scoef}x^{deg}")
    return "+".join(terms) if terms else "0"

def is_irreducible(coeffs, prime):
    """
    Return 'True' if monic polynomial 'coeffs' (lowest degree first) is irreducible over
    'F_prime'. Trial division by all monic polynomials of degree up to half the degree.
    """

    deg = len(coeffs) - 1
    if deg < 1:
        return False

    for ddeg in range(1, deg // 2 + 1):
        for low in itertools.product(range(prime), repeat=ddeg):
            if not any(_poly_rem(coeffs, list(low) + [1], prime)):
                return False
    return True

class FiniteField:
    """The finite field 'F_p[x]/(modulus)' with 'p^n' elements."""

    def _reduce(self, coeffs):
        """Reduce a coefficient list modulo the field modulus and 'p'."""

        coeffs = [int(coef) % self.p for coef in coeffs]
        if len(coeffs) > self.n:
            coeffs = _poly_rem(coeffs, self.modulus, self.p)
        return coeffs + [0] * (self.n - len(coeffs))

    def _polymul(self, idx1, idx2):
        """Multiply the elements with indices 'idx1' and 'idx2' the slow way."""

        prod = numpy.convolve(self.coefficients(idx1), self.coefficients(idx2)) % self.p
        return Trivial.undigits(self._reduce(prod.tolist()), self.p)

    def _build_tables(self):
        """Build the addition, negation, multiplication, inversion and Frobenius tables."""

        order = self.order
        weights = self.p ** numpy.arange(self.n)
        digs = numpy.array([Trivial.digits(idx, self.p, self.n) for idx in range(order)])

        self._digits = digs
        self._weights = weights
        self._add = ((digs[:, None, :] + digs[None, :, :]) % self.p) @ weights
        self._neg = ((-digs) % self.p) @ weights

        # Find a generator of the multiplicative group and build the exp/log tables.
        for gen in range(1, order):
            exp = [1]
            while len(exp) < order:
                nxt = self._polymul(exp[-1], gen)
                if nxt == 1:
                    break
                exp.append(nxt)
            if len(exp) == order - 1:
                break
        else:
            raise Error(f"internal error: no generator of the multiplicative group of {self}")

        self._exp = numpy.array(exp)
        self._log = numpy.zeros(order, dtype=int)
        self._log[self._exp] = numpy.arange(order - 1)

        logs = (self._log[:, None] + self._log[None, :]) % (order - 1)
        self._mul = self._exp[logs]
        self._mul[0, :] = 0
        self._mul[:, 0] = 0

        self._inv = self._exp[(-self._log) % (order - 1)]
        self._inv[0] = 0

        self._frob = []
        for k in range(self.n):
            table = self._exp[(self._log * self.p ** k) % (order - 1)]
            table[0] = 0
            self._frob.append(table)

    def coefficients(self, idx):
        """Return the coefficient list (lowest degree first) of the element with index 'idx'."""
        return Trivial.digits(int(idx), self.p, self.n)

    def index(self, coeffs):
        """Return the index of the element with coefficient list 'coeffs'."""
        return Trivial.undigits(self._reduce(coeffs), self.p)

    def prime_coords(self, idx):
        """
        Return the coordinates over the prime field of element indices 'idx': an array with one
        more trailing axis of length 'n'.
        """
        return self._digits[numpy.asarray(idx, dtype=int)]

    def from_prime_coords(self, coords):
        """The opposite of 'prime_coords()'."""
        return (numpy.asarray(coords, dtype=int) % self.p) @ self._weights

    def add(self, idx1, idx2):
        """Add field elements (indices or index arrays)."""
        return self._add[idx1, idx2]

    def sub(self, idx1, idx2):
        """Subtract field elements."""
        return self._add[idx1, self._neg[idx2]]

    def neg(self, idx):
        """Negate field elements."""
        return self._neg[idx]

    def mul(self, idx1, idx2):
        """Multiply field elements."""
        return self._mul[idx1, idx2]

    def inv(self, idx):
        """Invert a field element."""

        if numpy.any(numpy.asarray(idx) == 0):
            raise Error(f"cannot invert zero in {self}")
        return self._inv[idx]

    def frobenius(self, idx, k=1):
        """Apply 'f -> f^(p^k)' to field elements."""
        return self._frob[k % self.n][idx]

    def matmul(self, mat1, mat2):
        """Multiply two matrices of element indices."""

        mat1 = numpy.asarray(mat1, dtype=int)
        mat2 = numpy.asarray(mat2, dtype=int)
        if mat1.shape[1] != mat2.shape[0]:
            raise Error(f"cannot multiply a {mat1.shape[0]}x{mat1.shape[1]} matrix by a "
                        f"{mat2.shape[0]}x{mat2.shape[1]} matrix")

        result = numpy.zeros((mat1.shape[0], mat2.shape[1]), dtype=int)
        for col in range(mat1.shape[1]):
            prod = self._mul[mat1[:, col][:, None], mat2[col, :][None, :]]
            result = self._add[result, prod]
        return result

    def matadd(self, mat1, mat2):
        """Add two matrices of element indices."""
        return self._add[numpy.asarray(mat1, dtype=int), numpy.asarray(mat2, dtype=int)]

    def identity(self, size):
        """Return the 'size x size' identity matrix."""
        return numpy.eye(size, dtype=int)

    def is_prime_field(self):
        """Return 'True' if this is the prime field 'F_p'."""
        return self.n == 1

    def elements(self):
        """Return the list of all the elements as 'FFElem' objects, in index order."""
        return [FFElem(self, idx) for idx in range(self.order)]

    def element(self, coeffs):
        """Return the 'FFElem' object with coefficient list 'coeffs'."""
        return FFElem(self, self.index(coeffs))

    @property
    def zero(self):
        """The zero element."""
        return FFElem(self, 0)

    @property
    def one(self):
        """The unit element."""
        return FFElem(self, 1)

    @property
    def gen(self):
        """The class of 'x' (equals zero in a prime field defined by the modulus 'x')."""
        return self.element([0, 1])

    def element_str(self, idx):
        """Return the polynomial text of element with index 'idx', e.g., "x^2+2x+1"."""
        return _poly_str(self.coefficients(idx))

    def parse_element(self, text):
        """
        Parse a field element given as coefficient digits, lowest degree first: "01" is 'x' in
        'F_4'. Colon-separated coefficients ("0:1") are accepted too, which is useful for 'p > 10'.
        """

        text = text.strip()
        parts = text.split(":") if ":" in text else list(text)
        if not parts or len(parts) > self.n or not all(Trivial.is_int(part) for part in parts):
            raise ErrorBadFormat(f"bad field element '{text}': expected at most {self.n} "
                                 f"coefficients, lowest degree first")
        coeffs = [int(part) for part in parts]
        if any(coef < 0 or coef >= self.p for coef in coeffs):
            raise ErrorBadFormat(f"bad field element '{text}': coefficients must be in "
                                 f"[0, {self.p - 1}]")
        return self.index(coeffs)

    def render_element(self, idx):
        """The opposite of 'parse_element()'."""

        coeffs = self.coefficients(idx)
        if self.p > 10:
            return ":".join(str(coef) for coef in coeffs)
        return "".join(str(coef) for coef in coeffs)

    def __init__(self, p, n=1, modulus=None):
        """
        The class constructor. The arguments are as follows.
          * p - the characteristic, a prime number.
          * n - the degree over the prime field.
          * modulus - the list of 'n + 1' coefficients of the monic irreducible modulus
                      polynomial, lowest degree first. By default, 'x' for 'n = 1' and the first
                      irreducible polynomial in coefficient index order otherwise.
        """

        if not Trivial.is_prime(p):
            raise Error(f"bad field characteristic '{p}': not a prime number")
        if n < 1:
            raise Error(f"bad field degree '{n}': should be at least 1")
        if p ** n > FIELD_MAX_ORDER:
            raise ErrorNotSupported(f"field with {p}^{n} elements is too large, the maximum "
                                    f"supported order is {FIELD_MAX_ORDER}")

        self.p = p
        self.n = n
        self.order = p ** n

        if modulus is None:
            if n == 1:
                modulus = [0, 1]
            else:
                for low in itertools.product(range(p), repeat=n):
                    if is_irreducible(list(low) + [1], p):
                        modulus = list(low) + [1]
                        break

        modulus = [int(coef) for coef in modulus]
        if len(modulus) != n + 1 or modulus[-1] != 1:
            raise Error(f"bad modulus '{''.join(str(c) for c in modulus)}': expected a monic "
                        f"polynomial of degree {n}, {n + 1} coefficients, lowest degree first")
        if any(coef < 0 or coef >= p for coef in modulus):
            raise Error(f"bad modulus '{''.join(str(c) for c in modulus)}': coefficients must be "
                        f"in [0, {p - 1}]")
        if not is_irreducible(modulus, p):
            raise Error(f"bad modulus '{''.join(str(c) for c in modulus)}': the polynomial is "
                        f"reducible over F_{p}")

        self.modulus = tuple(modulus)
        self._build_tables()
        _LOG.debug("built %s", self)

    def __eq__(self, other):
        """Fields are equal if they have the same characteristic and modulus."""

        if not isinstance(other, FiniteField):
            return NotImplemented
        return (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self):
        """Hash consistently with '__eq__()'."""
        return hash((self.p, self.modulus))

    def __str__(self):
        """Return text like "F_4 = F_2[x]/(x^2+x+1)"."""

        if self.n == 1:
            return f"F_{self.p}"
        return f"F_{self.order} = F_{self.p}[x]/({_poly_str(self.modulus)})"

    __repr__ = __str__

class FFElem:
    """An element of a 'FiniteField', a thin wrapper over the element index."""

    def _check(self, other):
        """Return the index of 'other', which must belong to the same field."""

        if isinstance(other, int):
            return self.field.index([other])
        if other.field != self.field:
            raise Error(f"cannot mix elements of {self.field} and {other.field}")
        return other.idx

    def __add__(self, other):
        return FFElem(self.field, int(self.field.add(self.idx, self._check(other))))

    def __sub__(self, other):
        return FFElem(self.field, int(self.field.sub(self.idx, self._check(other))))

    def __mul__(self, other):
        return FFElem(self.field, int(self.field.mul(self.idx, self._check(other))))

    def __neg__(self):
        return FFElem(self.field, int(self.field.neg(self.idx)))

    def __truediv__(self, other):
        return self * FFElem(self.field, int(self.field.inv(self._check(other))))

    def __pow__(self, exp):
        result = self.field.one
        base = self if exp >= 0 else self.inverse()
        for _ in range(abs(exp)):
            result = result * base
        return result

    def inverse(self):
        """Return the multiplicative inverse."""
        return FFElem(self.field, int(self.field.inv(self.idx)))

    def frobenius(self, k=1):
        """Return 'self^(p^k)'."""
        return FFElem(self.field, int(self.field.frobenius(self.idx, k)))

    @property
    def coefficients(self):
        """The coefficient list, lowest degree first."""
        return self.field.coefficients(self.idx)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.idx == self.field.index([other])
        if not isinstance(other, FFElem):
            return NotImplemented
        return self.field == other.field and self.idx == other.idx

    def __hash__(self):
        return hash((self.field, self.idx))

    def __str__(self):
        return self.field.element_str(self.idx)

    def __repr__(self):
        return f"FFElem({self}, {self.field})"

    def __init__(self, field, idx):
        """
        The class constructor. The arguments are as follows.
          * field - the 'FiniteField' object.
          * idx - the element index.
        """

        if not 0 <= idx < field.order:
            raise Error(f"bad element index '{idx}' for {field}")
        self.field = field
        self.idx = int(idx)

class FrobPower:
    """The automorphism 'f -> f^(p^k)' of a 'FiniteField'."""

    def compose(self, other):
        """Return 'self' after 'other'."""

        _check_backends(self, other)
        return FrobPower(self.k + other.k, self.field)

    def invert(self):
        """Return the inverse automorphism."""
        return FrobPower(-self.k, self.field)

    def apply(self, elt):
        """
        Apply the automorphism to 'elt', which is an 'FFElem' object, an element index, or a numpy
        array of element indices.
        """

        if isinstance(elt, FFElem):
            return elt.frobenius(self.k)
        return self.field.frobenius(elt, self.k)

    def is_identity(self):
        """Return 'True' for the identity automorphism."""
        return self.k == 0

    def __eq__(self, other):
        if not isinstance(other, FrobPower):
            return NotImplemented
        return (self.k, self.field) == (other.k, other.field)

    def __hash__(self):
        return hash((self.k, self.field))

    def __str__(self):
        if self.k == 0:
            return "id"
        if self.k == 1:
            return "Frob"
        return f"Frob^{self.k}"

    def __repr__(self):
        return f"FrobPower({self.k}, {self.field})"

    def __init__(self, k, field):
        """
        The class constructor. The arguments are as follows.
          * k - the Frobenius exponent, reduced modulo the field degree.
          * field - the 'FiniteField' object.
        """

        self.field = field
        self.k = k % field.n

class FreeWord:
    """
    A freely reduced word in formal automorphism generators 'σ_a'. The generators are stored as
    '(name, exponent)' tuples with exponent 1 or -1, leftmost applied last.
    """

    @staticmethod
    def generator(name):
        """Return the generator 'σ_name'."""
        return FreeWord(((name, 1),))

    def compose(self, other):
        """Return 'self' after 'other'."""

        _check_backends(self, other)
        return FreeWord(self.gens + other.gens)

    def invert(self):
        """Return the inverse word."""
        return FreeWord((name, -exp) for name, exp in reversed(self.gens))

    def apply(self, elt):
        """Symbolic automorphisms cannot be applied to field elements."""
        raise ErrorNotSupported(f"cannot apply symbolic automorphism '{self}' to '{elt}', use a "
                                f"field to get concrete automorphisms")

    def evaluate(self, assignment):
        """
        Map the word to a concrete automorphism. The 'assignment' argument is a dictionary from
        generator names to 'FrobPower' objects, and must cover all the generators of the word.
        """

        if not assignment:
            raise Error("cannot evaluate a symbolic automorphism without an assignment")

        result = identity_like(next(iter(assignment.values())))
        for name, exp in reversed(self.gens):
            try:
                value = assignment[name]
            except KeyError:
                raise Error(f"no value for generator 'σ_{name}'") from None
            if exp < 0:
                value = value.invert()
            result = value.compose(result)
        return result

    def is_identity(self):
        """Return 'True' for the empty word."""
        return not self.gens

    def __eq__(self, other):
        if not isinstance(other, FreeWord):
            return NotImplemented
        return self.gens == other.gens

    def __hash__(self):
        return hash(self.gens)

    def __str__(self):
        if not self.gens:
            return "id"
        return " ".join(f"σ_{name}" if exp > 0 else f"σ_{name}^-1" for name, exp in self.gens)

    def __repr__(self):
        return f"FreeWord({self})"

    def __init__(self, gens=()):
        """
        The class constructor. The 'gens' argument is an iterable of '(name, exponent)' tuples,
        the word gets freely reduced.
        """

        reduced = []
        for name, exp in gens:
            if exp not in (1, -1):
                raise Error(f"bad generator exponent '{exp}', should be 1 or -1")
            if reduced and reduced[-1] == (name, -exp):
                reduced.pop()
            else:
                reduced.append((name, exp))
        self.gens = tuple(reduced)

def _check_backends(first, second):
    """Raise 'ErrorNotSupported' if the two automorphisms cannot be composed."""

    if type(first) is not type(second):
        raise ErrorNotSupported(f"cannot compose automorphisms of different kinds: '{first}' and "
                                f"'{second}'")
    if isinstance(first, FrobPower) and first.field != second.field:
        raise ErrorNotSupported(f"cannot compose automorphisms of different fields: "
                                f"{first.field} and {second.field}")

def compose(first, second):
    """Return automorphism 'first' after 'second'."""
    return first.compose(second)

def invert(autom):
    """Return the inverse of automorphism 'autom'."""
    return autom.invert()

def apply(autom, elt):
    """Apply automorphism 'autom' to field element 'elt'."""
    return autom.apply(elt)

def identity_like(autom):
    """Return the identity automorphism of the same kind as 'autom'."""

    if isinstance(autom, FrobPower):
        return FrobPower(0, autom.field)
    return FreeWord()

def sigma_identity(sigma, field=None):
    """
    Return the identity automorphism matching the automorphism assignment 'sigma': Frobenius when
    'sigma' holds Frobenius powers or 'field' is given, symbolic otherwise.
    """

    for autom in sigma.values():
        return identity_like(autom)
    if field is not None:
        return FrobPower(0, field)
    return FreeWord()

def symbolic_sigma(pair):
    """Return the assignment of the formal generator 'σ_a' to every arrow 'a' of 'pair'."""
    return {name : FreeWord.generator(name) for name in pair.arrows}

def frobenius_sigma(pair, field, exponents=None):
    """
    Return the assignment of Frobenius powers to the arrows of 'pair'. The 'exponents' dictionary
    maps arrow names to exponents, missing arrows get the identity.
    """

    if exponents is None:
        exponents = {}
    for name in exponents:
        pair.quiver.arrow(name)
    return {name : FrobPower(exponents.get(name, 0), field) for name in pair.arrows}

def check_sigma(pair, sigma):
    """Verify that automorphism assignment 'sigma' covers every arrow of 'pair'."""

    missing = [name for name in pair.arrows if name not in sigma]
    if missing:
        raise Error(f"no automorphism assigned to arrow(s) {', '.join(missing)}")

def pi_sequence(pair, word, sigma, field=None):
    """
    Return the list of automorphisms 'π_0, π_1, ..., π_n' of admissible word 'word' of locally
    gentle pair 'pair' with automorphisms 'sigma' (a dictionary from arrow names). 'π_0' is the
    identity, a direct letter 'a' gives 'π_i = σ_a^-1 π_{i-1}' and an inverse letter gives
    'π_i = σ_a π_{i-1}'. For bands the sequence covers one period. The 'field' argument is only
    used to pick the identity when 'sigma' is empty.
    """

    Words.check_admissible(pair, word)
    check_sigma(pair, sigma)

    pis = [sigma_identity(sigma, field)]
    for letter in word.letters:
        autom = sigma[letter.arrow]
        if letter.direct:
            autom = autom.invert()
        pis.append(autom.compose(pis[-1]))
    return pis

def pi_band(pair, word, sigma):
    """Return the band automorphism 'π_C = π_n^-1' of band 'word'."""

    if word.kind != Words.BAND:
        raise Error(f"'{Words.word_str(word)}' is not a band")
    return pi_sequence(pair, word, sigma)[-1].invert()
