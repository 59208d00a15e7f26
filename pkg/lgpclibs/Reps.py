# -*- coding: utf-8 -*-
# vim: ts=4 sw=4 tw=100 et ai si
#
# Copyright (C) 2020-2021 Intel Corporation
# SPDX-License-Identifier: BSD-3-Clause
#
# Author: Artem Bityutskiy <artem.bityutskiy@linux.intel.com>

"""
This module provides semilinear representations of locally gentle pairs over finite fields: string
modules, band modules, representation checks, homomorphism spaces and indecomposability testing.

A representation has a vector space 'K^d' at every vertex, and every arrow 'a' acts by the
semilinear map 'x -> M_a σ_a(x)', where 'σ_a' is applied to the coordinates. Matrices are numpy
arrays of field element indices (see 'Galois').
"""

import random
import logging
import itertools
from collections import namedtuple
import numpy
from lgpclibs import Words, Galois
from lgpclibs.helperlibs.Exceptions import Error, ErrorNotSupported, ErrorUndecided

_LOG = logging.getLogger()

# The largest endomorphism ring (number of elements) 'is_indecomposable()' agrees to enumerate.
END_ENUM_LIMIT = 2**14
# How many random scalars and vectors 'check_rep()' tries per arrow when checking semilinearity.
CHECK_SAMPLES = 8

BandParameter = namedtuple("BandParameter", ["m", "T"])
RepCheck = namedtuple("RepCheck", ["ok", "failures"])
HomSpace = namedtuple("HomSpace", ["dimension", "basis"])

class SemilinearRep:
    """A semilinear representation of a locally gentle pair."""

    def apply(self, name, vector):
        """Apply the map of arrow 'name' to coordinate vector 'vector'."""

        vector = numpy.asarray(vector, dtype=int).reshape(-1, 1)
        return self.field.matmul(self.maps[name], self.sigma[name].apply(vector)).reshape(-1)

    def dimension_vector(self):
        """Return the '{vertex: dimension}' dictionary."""
        return dict(self.dims)

    def dimension(self):
        """Return the total dimension over the field."""
        return sum(self.dims.values())

    def __init__(self, pair, field, sigma, dims, maps):
        """
        The class constructor. The arguments are as follows.
          * pair - the 'LocallyGentlePair' object.
          * field - the 'FiniteField' object.
          * sigma - the '{arrow: FrobPower}' automorphisms.
          * dims - the '{vertex: dimension}' dictionary.
          * maps - the '{arrow: matrix}' dictionary, a matrix maps the tail space to the head space.
        """

        _check_concrete(sigma, field)
        Galois.check_sigma(pair, sigma)

        self.pair = pair
        self.field = field
        self.sigma = sigma
        self.dims = {vertex : int(dims.get(vertex, 0)) for vertex in pair.vertices}
        self.maps = {}
        for name in pair.arrows:
            if name in maps:
                self.maps[name] = numpy.asarray(maps[name], dtype=int)
            else:
                arr = pair.arrows[name]
                self.maps[name] = numpy.zeros((self.dims[arr.head], self.dims[arr.tail]),
                                              dtype=int)

def _check_concrete(sigma, field):
    """Verify that all the automorphisms in 'sigma' are Frobenius powers of 'field'."""

    for name, autom in sigma.items():
        if not isinstance(autom, Galois.FrobPower):
            raise ErrorNotSupported(f"representations need concrete automorphisms, but arrow "
                                    f"'{name}' has symbolic automorphism '{autom}'")
        if autom.field != field:
            raise ErrorNotSupported(f"automorphism of arrow '{name}' is defined over "
                                    f"{autom.field}, not over {field}")

def _row_reduce(field, mat):
    """
    Bring matrix 'mat' to the reduced row echelon form over 'field'. Return the reduced matrix and
    the list of pivot columns.
    """

    mat = numpy.array(mat, dtype=int)
    if mat.size == 0:
        return mat, []

    rows, cols = mat.shape
    pivots = []
    for col in range(cols):
        row = len(pivots)
        if row == rows:
            break
        nonzero = numpy.nonzero(mat[row:, col])[0]
        if not nonzero.size:
            continue
        pivot = row + nonzero[0]
        mat[[row, pivot]] = mat[[pivot, row]]
        mat[row] = field.mul(field.inv(mat[row, col]), mat[row])
        for other in range(rows):
            if other != row and mat[other, col]:
                mat[other] = field.sub(mat[other], field.mul(mat[other, col], mat[row]))
        pivots.append(col)
    return mat, pivots

def rank(field, mat):
    """Return the rank of matrix 'mat' over 'field'."""
    return len(_row_reduce(field, mat)[1])

def inverse(field, mat):
    """Return the inverse of square matrix 'mat' over 'field'."""

    mat = numpy.asarray(mat, dtype=int)
    size = mat.shape[0]
    if mat.ndim != 2 or mat.shape[1] != size:
        raise Error(f"cannot invert a non-square {'x'.join(str(dim) for dim in mat.shape)} "
                    f"matrix")

    red, pivots = _row_reduce(field, numpy.hstack([mat, field.identity(size)]))
    if pivots[:size] != list(range(size)):
        raise Error("the matrix is singular")
    return red[:, size:]

def nullspace(field, mat):
    """Return a basis of the right null space of matrix 'mat' over 'field', as a list of vectors."""

    mat = numpy.asarray(mat, dtype=int)
    cols = mat.shape[1]
    red, pivots = _row_reduce(field, mat)

    basis = []
    for free in range(cols):
        if free in pivots:
            continue
        vec = numpy.zeros(cols, dtype=int)
        vec[free] = 1
        for row, pcol in enumerate(pivots):
            vec[pcol] = field.neg(red[row, free])
        basis.append(vec)
    return basis

def band_parameter(field, mat):
    """
    Return the 'BandParameter' tuple for invertible square matrix 'mat' (field element indices).
    """

    mat = numpy.asarray(mat, dtype=int)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1] or not mat.shape[0]:
        raise Error("band parameter matrix must be a non-empty square matrix")
    try:
        inverse(field, mat)
    except Error:
        raise Error("band parameter matrix is singular") from None
    return BandParameter(mat.shape[0], mat)

def _positions(verts):
    """Return the '{index: position in its vertex space}' dictionary and the vertex dimensions."""

    pos = {}
    counts = {}
    for idx, vertex in enumerate(verts):
        pos[idx] = counts.get(vertex, 0)
        counts[vertex] = pos[idx] + 1
    return pos, counts

def string_module(pair, sigma, field, word):
    """
    Build and return the string module 'M(C)' of admissible string or trivial word 'word'. Basis
    vector 'b_i' lives at vertex 'v_i(C)', and every letter maps one basis vector to its neighbor.
    """

    if word.kind == Words.BAND:
        raise Error(f"'{Words.word_str(word)}' is a band, use 'band_module()'")
    Words.check_admissible(pair, word)
    _check_concrete(sigma, field)

    quiver = pair.quiver
    verts = Words.word_vertices(quiver, word)
    pos, dims = _positions(verts)

    maps = {name : numpy.zeros((dims.get(arr.head, 0), dims.get(arr.tail, 0)), dtype=int)
            for name, arr in pair.arrows.items()}
    for idx, letter in enumerate(word.letters, start=1):
        src, dst = (idx, idx - 1) if letter.direct else (idx - 1, idx)
        maps[letter.arrow][pos[dst], pos[src]] = 1

    _LOG.debug("string module of '%s': dimension %d", Words.word_str(word), len(verts))
    return SemilinearRep(pair, field, sigma, dims, maps)

def band_module(pair, sigma, field, word, param):
    """
    Build and return the band module 'M(C) ⊗ V' of admissible band 'word' with band parameter
    'param' (a 'BandParameter' tuple). Basis vectors 'b_j ⊗ e_l' are grouped in blocks of size 'm'
    per index 'j'. Letters inside the period act by identity blocks. The letter crossing the seam
    acts by 'π_{n-1}(T)' if it is direct, and by 'π_n(T^-1)' if it is inverse, where 'π' are the
    automorphisms of the word.
    """

    if word.kind != Words.BAND:
        raise Error(f"'{Words.word_str(word)}' is not a band")
    if not Words.is_primitive(word):
        raise Error(f"band '{Words.word_str(word)}' is not primitive")
    Words.check_admissible(pair, word)
    _check_concrete(sigma, field)

    size = param.m
    tmat = numpy.asarray(param.T, dtype=int)
    tinv = inverse(field, tmat)

    quiver = pair.quiver
    verts = Words.word_vertices(quiver, word)
    period = len(verts)
    pos, counts = _positions(verts)
    dims = {vertex : cnt * size for vertex, cnt in counts.items()}
    pis = Galois.pi_sequence(pair, word, sigma, field)

    maps = {name : numpy.zeros((dims.get(arr.head, 0), dims.get(arr.tail, 0)), dtype=int)
            for name, arr in pair.arrows.items()}
    for idx, letter in enumerate(word.letters, start=1):
        if letter.direct:
            src, dst = idx % period, idx - 1
        else:
            src, dst = idx - 1, idx % period

        if idx < period:
            block = field.identity(size)
        elif letter.direct:
            block = pis[period - 1].apply(tmat)
        else:
            block = pis[period].apply(tinv)

        rows = slice(pos[dst] * size, (pos[dst] + 1) * size)
        cols = slice(pos[src] * size, (pos[src] + 1) * size)
        cur = maps[letter.arrow]
        cur[rows, cols] = field.matadd(cur[rows, cols], block)

    _LOG.debug("band module of '%s' with a %dx%d parameter: dimension %d",
               Words.word_str(word), size, size, period * size)
    return SemilinearRep(pair, field, sigma, dims, maps)

def direct_sum(rep1, rep2):
    """Return the direct sum of representations 'rep1' and 'rep2'."""

    _check_compatible(rep1, rep2)

    dims = {vertex : rep1.dims[vertex] + rep2.dims[vertex] for vertex in rep1.pair.vertices}
    maps = {}
    for name, arr in rep1.pair.arrows.items():
        mat = numpy.zeros((dims[arr.head], dims[arr.tail]), dtype=int)
        hdim, tdim = rep1.dims[arr.head], rep1.dims[arr.tail]
        mat[:hdim, :tdim] = rep1.maps[name]
        mat[hdim:, tdim:] = rep2.maps[name]
        maps[name] = mat
    return SemilinearRep(rep1.pair, rep1.field, rep1.sigma, dims, maps)

def _shape_failures(rep):
    """Return the list of matrix shape failures of 'rep'."""

    failures = []
    for name, arr in rep.pair.arrows.items():
        exp = (rep.dims[arr.head], rep.dims[arr.tail])
        if rep.maps[name].shape != exp:
            failures.append(f"arrow '{name}': matrix shape {rep.maps[name].shape}, expected "
                            f"{exp}")
    return failures

def check_rep(rep, pair):
    """
    Check representation 'rep' of locally gentle pair 'pair' and return the 'RepCheck' tuple: the
    matrix shapes, the relations ('M_b σ_b(M_a) = 0' for every relation 'ba') and the
    semilinearity of every arrow map on sampled scalars and vectors.
    """

    failures = _shape_failures(rep)
    if failures:
        return RepCheck(False, failures)

    field = rep.field
    for rel in pair.relations:
        prod = field.matmul(rep.maps[rel.outer], rep.sigma[rel.outer].apply(rep.maps[rel.inner]))
        if numpy.any(prod):
            failures.append(f"relation '{rel.outer}*{rel.inner}' does not act by zero")

    rng = random.Random(0)
    for name, arr in pair.arrows.items():
        tdim = rep.dims[arr.tail]
        if not tdim:
            continue
        autom = rep.sigma[name]
        for _ in range(CHECK_SAMPLES):
            scalar = rng.randrange(field.order)
            vec = numpy.array([rng.randrange(field.order) for _ in range(tdim)], dtype=int)
            lhs = rep.apply(name, field.mul(scalar, vec))
            rhs = field.mul(int(autom.apply(scalar)), rep.apply(name, vec))
            if not numpy.array_equal(lhs, rhs):
                failures.append(f"arrow '{name}' is not {autom}-semilinear")
                break

    return RepCheck(not failures, failures)

def _check_compatible(rep1, rep2):
    """Make sure 'rep1' and 'rep2' are representations of the same pair over the same field."""

    if rep1.field != rep2.field:
        raise Error(f"representations over different fields: {rep1.field} and {rep2.field}")
    if rep1.pair != rep2.pair:
        raise Error("representations of different quivers with relations")
    if rep1.sigma != rep2.sigma:
        raise Error("representations with different automorphisms")
    for rep in (rep1, rep2):
        failures = _shape_failures(rep)
        if failures:
            raise Error(f"bad representation: {failures[0]}")

def hom_space(rep1, rep2, pair):
    """
    Compute the space of homomorphisms from 'rep1' to 'rep2' over the prime field and return the
    'HomSpace' tuple. A homomorphism is a family of matrices 'φ_u' with
    'φ_h(a) M1_a = M2_a σ_a(φ_t(a))' for every arrow 'a'. The condition is linear over the prime
    field only, so every coordinate is expanded into its prime field coordinates. Basis elements
    are '{vertex: matrix}' dictionaries.
    """

    _check_compatible(rep1, rep2)

    field = rep1.field
    prime = Galois.FiniteField(field.p)
    verts = pair.vertices

    unknowns = []
    for vertex in verts:
        for row in range(rep2.dims[vertex]):
            for col in range(rep1.dims[vertex]):
                for deg in range(field.n):
                    unknowns.append((vertex, row, col, deg))

    def _residual(phis):
        """The prime field coordinates of all the equations for homomorphism candidate 'phis'."""

        parts = []
        for name, arr in pair.arrows.items():
            lhs = field.matmul(phis[arr.head], rep1.maps[name])
            rhs = field.matmul(rep2.maps[name], rep1.sigma[name].apply(phis[arr.tail]))
            parts.append(field.prime_coords(field.sub(lhs, rhs)).reshape(-1))
        if not parts:
            return numpy.zeros(0, dtype=int)
        return numpy.concatenate(parts)

    def _zero_phis():
        """All-zero homomorphism candidate."""
        return {vertex : numpy.zeros((rep2.dims[vertex], rep1.dims[vertex]), dtype=int)
                for vertex in verts}

    columns = []
    for vertex, row, col, deg in unknowns:
        phis = _zero_phis()
        coeffs = [0] * field.n
        coeffs[deg] = 1
        phis[vertex][row, col] = field.index(coeffs)
        columns.append(_residual(phis))

    if not unknowns:
        return HomSpace(0, [])

    system = numpy.array(columns, dtype=int).T
    if not system.size:
        system = numpy.zeros((1, len(unknowns)), dtype=int)

    basis = []
    for vec in nullspace(prime, system):
        phis = _zero_phis()
        for (vertex, row, col, deg), coef in zip(unknowns, vec):
            if coef:
                coeffs = [0] * field.n
                coeffs[deg] = int(coef)
                phis[vertex][row, col] = field.add(phis[vertex][row, col], field.index(coeffs))
        basis.append(phis)

    _LOG.debug("hom space: %d unknowns, dimension %d over F_%d", len(unknowns), len(basis),
               field.p)
    return HomSpace(len(basis), basis)

def _is_nilpotent(field, mat):
    """Return 'True' if square matrix 'mat' is nilpotent."""

    power = mat
    for _ in range(mat.shape[0]):
        if not numpy.any(power):
            return True
        power = field.matmul(power, mat)
    return not numpy.any(power)

def is_indecomposable(rep, pair, limit=None):
    """
    Return 'True' if representation 'rep' is indecomposable: its endomorphism ring is local. All
    the endomorphisms are enumerated and every one of them must be nilpotent or invertible. Raise
    'ErrorUndecided' if the endomorphism ring has more than 'limit' elements ('END_ENUM_LIMIT' by
    default).
    """

    if limit is None:
        limit = END_ENUM_LIMIT

    if not rep.dimension():
        return False

    field = rep.field
    end = hom_space(rep, rep, pair)
    size = field.p ** end.dimension
    if size > limit:
        raise ErrorUndecided(f"the endomorphism ring has {field.p}^{end.dimension} elements, "
                             f"more than the limit of {limit}")

    _LOG.debug("enumerating %d endomorphisms", size)
    verts = [vertex for vertex in pair.vertices if rep.dims[vertex]]

    for coefs in itertools.product(range(field.p), repeat=end.dimension):
        phis = {vertex : numpy.zeros((rep.dims[vertex],) * 2, dtype=int) for vertex in verts}
        for coef, elt in zip(coefs, end.basis):
            if not coef:
                continue
            for vertex in verts:
                phis[vertex] = field.add(phis[vertex], field.mul(coef, elt[vertex]))

        if all(rank(field, phis[vertex]) == rep.dims[vertex] for vertex in verts):
            continue
        if not all(_is_nilpotent(field, phis[vertex]) for vertex in verts):
            return False

    return True
