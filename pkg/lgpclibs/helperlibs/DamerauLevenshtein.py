# -*- coding: utf-8 -*-
# vim: ts=4 sw=4 tw=100 et ai si
#
# Copyright (C) 2020-2021 Intel Corporation
# SPDX-License-Identifier: BSD-3-Clause
#
# Author: Jan-Kristian Herring

"""
This module provides the Damerau–Levenshtein distance calculation helpers. They are used for
suggesting the intended sub-command, vertex or arrow name when the user makes a typo.
"""

def osa_distance(first, second):
    """
    Return the optimal string alignment distance between strings 'first' and 'second': the number
    of deletions, insertions, substitutions and transpositions of adjacent characters needed to
    turn one into the other.
    """

    rows = [[idx] + [0] * len(second) for idx in range(len(first) + 1)]
    rows[0] = list(range(len(second) + 1))

    for fdx in range(1, len(first) + 1):
        for sdx in range(1, len(second) + 1):
            cost = 0 if first[fdx-1] == second[sdx-1] else 1
            rows[fdx][sdx] = min(rows[fdx-1][sdx] + 1, rows[fdx][sdx-1] + 1,
                                 rows[fdx-1][sdx-1] + cost)
            if fdx > 1 and sdx > 1 and first[fdx-1] == second[sdx-2] and \
               first[fdx-2] == second[sdx-1]:
                rows[fdx][sdx] = min(rows[fdx][sdx], rows[fdx-2][sdx-2] + cost)

    return rows[len(first)][len(second)]

def closest_match(string, strings, max_distance=2, case_sensitive=False):
    """
    Return the closest match to 'string' in 'strings'. The 'max_distance' argument limits how far
    the returned string is allowed to be, and 'None' is returned if nothing is close enough. If
    'case_sensitive' is 'False', case is ignored.
    """

    options = {option if case_sensitive else option.lower() : option for option in strings}
    if not case_sensitive:
        string = string.lower()

    best = (max_distance + 1, None)
    for option in options:
        score = osa_distance(string, option)
        if score < best[0]:
            best = (score, option)

    if best[1] is None:
        return None
    return options[best[1]]

def hint(string, strings, what):
    """
    Return a "did you mean" hint string suggesting the closest match to 'string' among 'strings',
    or an empty string if there is no close match. The 'what' argument names the kind of object,
    e.g., "vertex".
    """

    suggestion = closest_match(string, strings, case_sensitive=True)
    if suggestion is None:
        return ""
    return f", did you mean {what} '{suggestion}'?"
