# -*- coding: utf-8 -*-
# vim: ts=4 sw=4 tw=100 et ai si
#
# Copyright (C) 2020-2021 Intel Corporation
# SPDX-License-Identifier: BSD-3-Clause
#
# Author: Artem Bityutskiy <artem.bityutskiy@linux.intel.com>

"""
This module contains misc. helper functions with the common theme of representing something in a
human-readable format.
"""

from itertools import zip_longest
import numpy

def bool2str(value):
    """Return "yes" or "no"."""
    return "yes" if value else "no"

def seq2str(seq, empty="none"):
    """Join the elements of 'seq' with commas, return 'empty' for an empty sequence."""

    seq = [str(elt) for elt in seq]
    if not seq:
        return empty
    return ", ".join(seq)

def dict2str(dct, ncols=3):
    """
    Format dictionary 'dct' as aligned "key: value" columns and return the resulting string. The
    'ncols' argument is the number of columns.
    """

    if not dct:
        return ""

    # Printing one element per line takes too many lines and it is hard to read, so split the
    # items into columns and align them.
    keys = [str(key) for key in dct]
    split = [list(column) for column in numpy.array_split(numpy.array(keys), ncols)]
    vals = {str(key) : val for key, val in dct.items()}

    columns = []
    for column in split:
        if not column:
            continue
        strs = [str(vals[key]) for key in column]
        longest_key = max(len(key) for key in column)
        longest_val = max(len(val) for val in strs)
        columns.append([f"{(key + ':').ljust(longest_key + 1)} {val.ljust(longest_val)}"
                        for key, val in zip(column, strs)])

    return "\n".join(["    ".join(row).strip() for row in zip_longest(*columns, fillvalue="")])

def matrix2str(field, mat, indent=""):
    """
    Format matrix 'mat' of field element indices of 'field' (a 'FiniteField' object) as aligned
    rows of polynomial texts, one row per line.
    """

    mat = numpy.asarray(mat, dtype=int)
    if not mat.size:
        return f"{indent}({mat.shape[0]}x{mat.shape[1]} empty matrix)"

    cells = [[field.element_str(idx) for idx in row] for row in mat]
    width = max(len(cell) for row in cells for cell in row)
    return "\n".join(indent + "[ " + " ".join(cell.rjust(width) for cell in row) + " ]"
                     for row in cells)
