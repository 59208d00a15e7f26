# -*- coding: utf-8 -*-
# vim: ts=4 sw=4 tw=100 et ai si
#
# Copyright (C) 2020-2021 Intel Corporation
# SPDX-License-Identifier: BSD-3-Clause
#
# Author: Artem Bityutskiy <artem.bityutskiy@linux.intel.com>

"""
This module contains common trivial helpers.
"""

from lgpclibs.helperlibs.Exceptions import Error

def is_int(value, base=10):
    """
    Return 'True' if 'value' can be converted to integer using 'int()' and 'False' otherwise.
    """

    try:
        int(str(value), base)
    except (ValueError, TypeError):
        try:
            int(value)
        except (ValueError, TypeError):
            return False
    return True

def is_prime(num):
    """Return 'True' if integer 'num' is a prime number (trial division)."""

    if num < 2:
        return False
    div = 2
    while div * div <= num:
        if num % div == 0:
            return False
        div += 1
    return True

def split_csv_line(csv_line, sep=","):
    """
    Split a comma-separated values line and return the list of the comma separated values. The 'sep'
    argument can be used to change the separator from comma to something else.
    """
    return [val.strip() for val in csv_line.strip(sep).split(sep) if val.strip()]

def digits(num, base, width):
    """
    Return the list of 'width' base-'base' digits of non-negative integer 'num', least significant
    digit first.
    """

    if num < 0 or num >= base ** width:
        raise Error(f"cannot represent {num} with {width} base-{base} digits")

    result = []
    for _ in range(width):
        num, digit = divmod(num, base)
        result.append(digit)
    return result

def undigits(digs, base):
    """The opposite of 'digits()': turn a least-significant-first digits list into an integer."""

    num = 0
    for digit in reversed(digs):
        num = num * base + digit
    return num

def rotations(seq):
    """Yield all cyclic rotations of tuple 'seq', starting with 'seq' itself."""

    for idx in range(len(seq)):
        yield seq[idx:] + seq[:idx]
