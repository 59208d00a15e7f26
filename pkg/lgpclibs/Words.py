# -*- coding: utf-8 -*-
# vim: ts=4 sw=4 tw=100 et ai si
#
# Copyright (C) 2020-2021 Intel Corporation
# SPDX-License-Identifier: BSD-3-Clause
#
# Author: Artem Bityutskiy <artem.bityutskiy@linux.intel.com>

"""
This module provides words in the letters 'a' and 'a^-1' over the arrows of a quiver: trivial
words, finite words (strings) and periodic words (bands), their admissibility with respect to a
locally gentle pair, the word equivalence and its canonical representatives, enumeration of strings
and bands, and the quiver 'Q(C)' of a word together with its map to the original quiver.

Words are written like paths: in 'C = C_1 C_2 ... C_n' the tail of 'C_i' is the head of 'C_{i+1}'.
A band is stored by one period.
"""

import logging
from collections import namedtuple
from lgpclibs import Quiver
from lgpclibs.helperlibs import Trivial
from lgpclibs.helperlibs.Exceptions import Error, ErrorNotFound

_LOG = logging.getLogger()

TRIVIAL = "trivial"
STRING = "string"
BAND = "band"

Letter = namedtuple("Letter", ["arrow", "direct"])
# The 'vertex' and 'sign' fields are used only by trivial words, the 'letters' field only by
# strings and bands.
Word = namedtuple("Word", ["kind", "letters", "vertex", "sign"])
WordQuiver = namedtuple("WordQuiver", ["quiver", "f_vertices", "f_arrows", "wrap"])

def trivial_word(vertex, sign=1):
    """Return the trivial word at vertex 'vertex' with sign 'sign' (1 or -1)."""

    if sign not in (1, -1):
        raise Error(f"bad trivial word sign '{sign}', should be 1 or -1")
    return Word(TRIVIAL, (), vertex, sign)

def string_word(letters):
    """Return the finite word made of 'letters' (an iterable of 'Letter' tuples)."""

    letters = tuple(Letter(*letter) for letter in letters)
    if not letters:
        raise Error("a finite word needs at least one letter, use a trivial word instead")
    return Word(STRING, letters, None, None)

def band_word(letters):
    """Return the periodic word with period 'letters' (an iterable of 'Letter' tuples)."""

    letters = tuple(Letter(*letter) for letter in letters)
    if not letters:
        raise Error("a band needs at least one letter in its period")
    return Word(BAND, letters, None, None)

def letter_str(letter):
    """Return the text form of 'letter': "nu" or "nu^-1"."""

    if letter.direct:
        return letter.arrow
    return f"{letter.arrow}^-1"

def word_str(word):
    """Return the text form of 'word', the one accepted by 'LGFormat.parse_word()'."""

    if word.kind == TRIVIAL:
        if word.sign == -1:
            return f"triv:{word.vertex}:-"
        return f"triv:{word.vertex}"

    text = ",".join(letter_str(letter) for letter in word.letters)
    if word.kind == BAND:
        return f"band:{text}"
    return text

def inverse_letter(letter):
    """Return the inverse of 'letter'."""
    return Letter(letter.arrow, not letter.direct)

def letter_head(quiver, letter):
    """Return the head of 'letter' in 'quiver'."""

    if letter.direct:
        return quiver.head(letter.arrow)
    return quiver.tail(letter.arrow)

def letter_tail(quiver, letter):
    """Return the tail of 'letter' in 'quiver'."""

    if letter.direct:
        return quiver.tail(letter.arrow)
    return quiver.head(letter.arrow)

def _junctions(word):
    """Yield consecutive letter pairs of 'word', including the wrap-around pair for bands."""

    letters = word.letters
    yield from zip(letters, letters[1:])
    if word.kind == BAND:
        yield letters[-1], letters[0]

def _letters_compose(quiver, left, right):
    """Return 'True' if letter 'right' may follow letter 'left' in a word."""

    return letter_tail(quiver, left) == letter_head(quiver, right) and \
           inverse_letter(left) != right

def _junction_admissible(pair, left, right):
    """Check the relations at the junction of letters 'left' and 'right'."""

    if left.direct and right.direct:
        return not pair.in_z(left.arrow, right.arrow)
    if not left.direct and not right.direct:
        return not pair.in_z(right.arrow, left.arrow)
    return True

def check_word(quiver, word):
    """
    Verify that 'word' is a word over 'quiver': the arrows exist, consecutive letters compose and
    no letter is followed by its inverse (cyclically for bands). Raise an exception otherwise.
    """

    if word.kind == TRIVIAL:
        quiver.check_vertex(word.vertex)
        return

    for letter in word.letters:
        quiver.arrow(letter.arrow)

    for idx, (left, right) in enumerate(_junctions(word)):
        if not _letters_compose(quiver, left, right):
            raise Error(f"bad word '{word_str(word)}': letter '{letter_str(right)}' cannot follow "
                        f"letter '{letter_str(left)}' (position {idx + 1})")

def is_word(quiver, word):
    """Same as 'check_word()', but return 'True' or 'False' instead of raising on bad letters."""

    try:
        check_word(quiver, word)
    except ErrorNotFound:
        raise
    except Error:
        return False
    return True

def is_admissible(pair, word):
    """
    Return 'True' if 'word' is an admissible word of locally gentle pair 'pair': it is a word and
    no two consecutive direct (or inverse) letters form a relation. Unknown arrows raise
    'ErrorNotFound'.
    """

    if not is_word(pair.quiver, word):
        return False
    return all(_junction_admissible(pair, left, right) for left, right in _junctions(word))

def check_admissible(pair, word):
    """Raise an exception unless 'word' is an admissible word of 'pair'."""

    check_word(pair.quiver, word)
    for left, right in _junctions(word):
        if not _junction_admissible(pair, left, right):
            raise Error(f"word '{word_str(word)}' is not admissible: letters "
                        f"'{letter_str(left)}' and '{letter_str(right)}' form a relation")

def inverse(word):
    """Return the inverse word 'C^-1 = C_n^-1 ... C_1^-1'."""

    if word.kind == TRIVIAL:
        return trivial_word(word.vertex, -word.sign)
    letters = tuple(inverse_letter(letter) for letter in reversed(word.letters))
    return word._replace(letters=letters)

def shift(word, dist):
    """
    Return the shift 'C[dist]' of 'word'. Only bands change: their period is rotated so that the
    letter at position 'dist + 1' comes first.
    """

    if word.kind != BAND:
        return word
    dist %= len(word.letters)
    return word._replace(letters=word.letters[dist:] + word.letters[:dist])

def _letters_key(letters):
    """Sort key of a letter sequence: by arrow name, direct letters before inverse ones."""
    return tuple((letter.arrow, not letter.direct) for letter in letters)

def canonical(word):
    """
    Return the least representative of the equivalence class of 'word'. Trivial words lose their
    sign, strings are compared with their inverses, bands with all the rotations of themselves and
    of their inverses.
    """

    if word.kind == TRIVIAL:
        return trivial_word(word.vertex)

    candidates = [word.letters, inverse(word).letters]
    if word.kind == BAND:
        candidates = [rot for letters in candidates for rot in Trivial.rotations(letters)]
    return word._replace(letters=min(candidates, key=_letters_key))

def word_sort_key(word):
    """Deterministic sort key for canonical words: trivial words first, then by length."""

    if word.kind == TRIVIAL:
        return (0, (), str(word.vertex))
    return (len(word.letters), _letters_key(word.letters), "")

def primitive_root(word):
    """
    Return the band whose period is the shortest period of band 'word'. Strings and trivial words
    are returned unchanged.
    """

    if word.kind != BAND:
        return word

    letters = word.letters
    size = len(letters)
    for period in range(1, size + 1):
        if size % period == 0 and letters[:period] * (size // period) == letters:
            return word._replace(letters=letters[:period])
    return word

def is_primitive(word):
    """Return 'True' unless 'word' is a band whose period is a proper power."""
    return primitive_root(word) == word

def repetition_equivalent(word1, word2):
    """
    Return 'True' if 'word1' and 'word2' represent repetition equivalent closed curves or
    equivalent arcs: their primitive roots are equivalent words.
    """

    return canonical(primitive_root(word1)) == canonical(primitive_root(word2))

def _all_letters(quiver):
    """Return all the letters of 'quiver' in deterministic order."""
    return [Letter(name, direct) for name in quiver.arrows for direct in (True, False)]

def _next_letters(pair, letter):
    """Return the letters that may follow 'letter' in an admissible word of 'pair'."""

    result = []
    for nxt in _all_letters(pair.quiver):
        if _letters_compose(pair.quiver, letter, nxt) and _junction_admissible(pair, letter, nxt):
            result.append(nxt)
    return result

def _admissible_sequences(pair, length):
    """Yield all the admissible letter sequences of length 'length' (not closed up)."""

    follow = {letter : _next_letters(pair, letter) for letter in _all_letters(pair.quiver)}
    stack = [(letter,) for letter in reversed(_all_letters(pair.quiver))]
    while stack:
        seq = stack.pop()
        if len(seq) == length:
            yield seq
            continue
        for nxt in reversed(follow[seq[-1]]):
            stack.append(seq + (nxt,))

def enumerate_strings(pair, max_len):
    """
    Return the canonical representatives of all the admissible strings of 'pair' of length at most
    'max_len', one trivial word per vertex included, without duplicates and in deterministic order.
    """

    result = [trivial_word(vertex) for vertex in pair.vertices]
    for length in range(1, max_len + 1):
        seen = set()
        for seq in _admissible_sequences(pair, length):
            seen.add(canonical(string_word(seq)))
        result += sorted(seen, key=word_sort_key)
        _LOG.debug("%d strings of length %d", len(seen), length)
    return result

def enumerate_bands(pair, max_period):
    """
    Return the canonical representatives of all the primitive admissible bands of 'pair' with period
    at most 'max_period', without duplicates and in deterministic order.
    """

    result = []
    for period in range(1, max_period + 1):
        seen = set()
        for seq in _admissible_sequences(pair, period):
            band = band_word(seq)
            if is_admissible(pair, band) and is_primitive(band):
                seen.add(canonical(band))
        result += sorted(seen, key=word_sort_key)
        _LOG.debug("%d bands of period %d", len(seen), period)
    return result

def word_vertices(quiver, word):
    """
    Return the list of vertices 'v_0(C), v_1(C), ...' visited by 'word': 'v_0' is the head of the
    first letter and 'v_i' is the tail of letter 'i'. For bands the list has one entry per letter
    of the period, since 'v_n = v_0'.
    """

    if word.kind == TRIVIAL:
        return [word.vertex]

    verts = [letter_head(quiver, word.letters[0])]
    verts += [letter_tail(quiver, letter) for letter in word.letters]
    if word.kind == BAND:
        verts.pop()
    return verts

def word_quiver(pair, word):
    """
    Build and return the 'WordQuiver' of admissible word 'word'. The vertices are "0", "1", ...,
    the arrows are "theta1", "theta2", ..., and a direct letter 'C_i' gives the arrow from "i" to
    "i-1", an inverse one gives the arrow from "i-1" to "i". For bands, index 'n' is identified with
    "0" and the 'wrap' field names the arrow crossing the seam.
    """

    check_admissible(pair, word)

    quiver = pair.quiver
    verts = word_vertices(quiver, word)
    nverts = len(verts)
    names = [str(idx) for idx in range(nverts)]

    arrows = []
    f_arrows = {}
    for idx, letter in enumerate(word.letters, start=1):
        name = f"theta{idx}"
        prev, cur = names[idx - 1], names[idx % nverts]
        if letter.direct:
            arrows.append((name, cur, prev))
        else:
            arrows.append((name, prev, cur))
        f_arrows[name] = letter.arrow

    wrap = None
    if word.kind == BAND:
        wrap = f"theta{len(word.letters)}"

    f_vertices = dict(zip(names, verts))
    return WordQuiver(Quiver.Quiver(names, arrows), f_vertices, f_arrows, wrap)
