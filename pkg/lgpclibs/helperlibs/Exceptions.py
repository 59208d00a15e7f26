# -*- coding: utf-8 -*-
# vim: ts=4 sw=4 tw=100 et ai si
#
# Copyright (C) 2020-2021 Intel Corporation
# SPDX-License-Identifier: BSD-3-Clause
#
# Author: Artem Bityutskiy <artem.bityutskiy@linux.intel.com>

"""
Exception types used by all the modules in this package.
"""

class Error(Exception):
    """The base class for all exceptions raised by this project."""

    def __init__(self, msg, *args):
        """The constructor."""

        super().__init__(msg)
        if args:
            self.msg = str(msg) % tuple(args)
        else:
            self.msg = str(msg)

    def __str__(self):
        """The string representation of the exception."""
        return self.msg

class ErrorNotFound(Error):
    """A vertex, an arrow or some other named object was not found."""

class ErrorBadFormat(Error):
    """Input text (a '.lg' document, a word, a matrix file) could not be parsed."""

    def __init__(self, msg, *args, lineno=None):
        """
        The constructor. The 'lineno' argument is the 1-based number of the offending line, it is
        prepended to the message when provided.
        """

        if lineno is not None:
            msg = f"line {lineno}: {msg}"
        super().__init__(msg, *args)
        self.lineno = lineno

class ErrorNotLocallyGentle(Error):
    """A quiver with relations violates the locally gentle conditions."""

    def __init__(self, msg, *args, violations=None):
        """
        The constructor. The 'violations' argument is the list of 'Quiver.Violation' tuples
        describing every failed condition.
        """

        if violations:
            msg = str(msg) + "\n" + "\n".join(f"  * {viol.msg}" for viol in violations)
        super().__init__(msg, *args)
        self.violations = list(violations) if violations else []

class ErrorNotSupported(Error):
    """The operation does not apply to the input (e.g., a non-gentle pair)."""

class ErrorUndecided(Error):
    """The computation was refused because it is too large to carry out exhaustively."""
