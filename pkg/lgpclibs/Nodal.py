# -*- coding: utf-8 -*-
# vim: ts=4 sw=4 tw=100 et ai si
#
# Copyright (C) 2020-2021 Intel Corporation
# SPDX-License-Identifier: BSD-3-Clause
#
# Author: Artem Bityutskiy <artem.bityutskiy@linux.intel.com>

"""
This module embeds the semilinear algebra 'Λ' of a gentle pair into the semilinear path algebra
'Γ' of its Zembyk excision, and checks the conditions that make 'Λ' a nodal algebra: the embedding
is injective, the radicals agree, and every simple module of 'Λ' induces a module of length at most
2 over 'Γ'.
"""

import logging
from collections import namedtuple
from lgpclibs import Quiver, Zembyk, Galois, Algebra
from lgpclibs.helperlibs.Exceptions import Error, ErrorNotSupported

_LOG = logging.getLogger()

NodalReport = namedtuple("NodalReport", ["injective", "rad_equal", "dim_rad_lambda",
                                         "dim_rad_gamma", "dim_lambda", "dim_gamma",
                                         "tensor_lengths", "verdict", "hereditary_assumed"])

# Description of the 'NodalReport' fields, used for printing.
NODAL_KEYS_DESCR = {
    "injective" : "Embedding is injective",
    "rad_equal" : "Radicals are equal",
    "dim_rad_lambda" : "Radical dimension of the algebra",
    "dim_rad_gamma" : "Radical dimension of the excised algebra",
    "dim_lambda" : "Dimension of the algebra",
    "dim_gamma" : "Dimension of the excised algebra",
    "tensor_lengths" : "Lengths of induced simple modules",
    "verdict" : "Nodal",
    "hereditary_assumed" : "Heredity of the excised algebra is assumed",
}

class NodalEmbedding:
    """
    The ring embedding 'Δ' of the semilinear algebra of a gentle pair into the semilinear algebra
    of its excision. Arrow names survive the excision, so the excised algebra uses the same
    automorphism assignment.
    """

    def delta_path(self, path):
        """Return the list of paths of the excised quiver that path 'path' of 'Λ' maps to."""

        if path.arrows:
            return [Quiver.Path(path.arrows, None)]
        return [Quiver.Path((), vertex) for vertex in self.excision.vertex_map[path.vertex]]

    def delta(self, elt):
        """Return the image of element 'elt' of 'Λ' in 'Γ'."""

        if elt.algebra is not self.lam:
            raise Error("the element does not belong to the algebra being embedded")

        terms = {}
        for path, coef in elt.terms.items():
            for image in self.delta_path(path):
                terms[image] = int(self.field.add(terms.get(image, 0), coef))
        return Algebra.AlgebraElement(self.gamma, terms)

    def __init__(self, pair, sigma, field):
        """
        The class constructor. The arguments are as follows.
          * pair - the gentle 'LocallyGentlePair' object.
          * sigma - the '{arrow: automorphism}' dictionary.
          * field - the 'FiniteField' object of coefficients.
        """

        if not Quiver.is_gentle(pair):
            raise ErrorNotSupported("the pair is not gentle, its algebra is infinite-dimensional "
                                    "and cannot be nodal")

        self.pair = pair
        self.sigma = sigma
        self.field = field
        self.excision = Zembyk.excision(pair)
        self.lam = Algebra.SemilinearAlgebra(pair, sigma, field)

        gpair = Quiver.LocallyGentlePair(self.excision.quiver, ())
        gsigma = {self.excision.arrow_map[name] : autom for name, autom in sigma.items()}
        self.gamma = Algebra.SemilinearAlgebra(gpair, gsigma, field)

def delta_embed(embedding, elt):
    """Map element 'elt' of 'Λ' to 'Γ' with 'embedding' (a 'NodalEmbedding' object)."""
    return embedding.delta(elt)

def _default_field(sigma):
    """Pick the coefficient field for 'sigma': the field of its Frobenius powers, or 'F_2'."""

    for autom in sigma.values():
        if isinstance(autom, Galois.FrobPower):
            return autom.field
    return Galois.FiniteField(2)

def check_nodal(pair, sigma=None, field=None):
    """
    Check the nodal conditions for the semilinear algebra of gentle pair 'pair' and return the
    'NodalReport' tuple. The arguments are as follows.
      * pair - the 'LocallyGentlePair' object, must be gentle.
      * sigma - the '{arrow: automorphism}' dictionary, symbolic automorphisms by default.
      * field - the coefficient field, by default the field of 'sigma', or 'F_2' for symbolic
                automorphisms.

    Raise 'ErrorNotSupported' if the pair is not gentle.
    """

    if sigma is None:
        sigma = Galois.symbolic_sigma(pair)
    if field is None:
        field = _default_field(sigma)

    emb = NodalEmbedding(pair, sigma, field)

    lam_paths = Quiver.admissible_paths(pair, len(pair.arrows))
    gamma_paths = Quiver.admissible_paths(emb.gamma.pair, len(pair.arrows))

    # The images are sums of basis paths with unit coefficients, so they are linearly independent
    # exactly when their supports are non-empty and pairwise disjoint.
    seen = set()
    injective = True
    for path in lam_paths:
        support = emb.delta_path(path)
        if not support or seen.intersection(support):
            injective = False
        seen.update(support)

    rad_lambda = {img for path in lam_paths if path.arrows for img in emb.delta_path(path)}
    rad_gamma = {path for path in gamma_paths if path.arrows}
    rad_equal = rad_lambda == rad_gamma

    tensor_lengths = {}
    for vertex in pair.vertices:
        image = emb.delta(emb.lam.idempotent(vertex))
        length = 0
        for other in emb.gamma.pair.vertices:
            if not (emb.gamma.idempotent(other) * image).is_zero():
                length += 1
        tensor_lengths[vertex] = length

    verdict = injective and rad_equal and all(length <= 2 for length in tensor_lengths.values())

    _LOG.debug("nodal check: dim Λ = %d, dim Γ = %d, verdict %s", len(lam_paths),
               len(gamma_paths), verdict)

    dim_rad_lambda = len([path for path in lam_paths if path.arrows])
    return NodalReport(injective, rad_equal, dim_rad_lambda, len(rad_gamma), len(lam_paths),
                       len(gamma_paths), tensor_lengths, verdict, True)
