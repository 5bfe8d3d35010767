"""Brute-force enumeration, the reference every series is checked against.

Nothing here uses correlations, determinants or series arithmetic: the
counts come from generating compositions (or strings) one at a time and
testing them against the forbidden words.
"""

from dataclasses import dataclass

from .errors import BoundTooLarge, IndexOutOfRange, LetterOutOfAlphabet

MAX_ORACLE_WEIGHT = 22
MAX_STRING_WORK = 10**7


@dataclass(frozen=True)
class CoefficientTriangle:
    """``counts[n][m]``: objects of weight ``n`` with ``m`` parts, ``m <= n``."""

    max_weight: int
    counts: tuple

    @classmethod
    def tally(cls, max_weight, compositions):
        counts = [[0] * (n + 1) for n in range(max_weight + 1)]
        for c in compositions:
            counts[sum(c)][len(c)] += 1
        return cls(max_weight, tuple(tuple(r) for r in counts))

    def coeff(self, n, m):
        return self.counts[n][m]

    def total(self, n):
        return sum(self.counts[n])

    @property
    def rows(self):
        return self.counts


def _check_weight(max_weight):
    if max_weight < 0:
        raise ValueError("max_weight must be nonnegative")
    if max_weight > MAX_ORACLE_WEIGHT:
        raise BoundTooLarge(
            f"brute force limited to weight {MAX_ORACLE_WEIGHT}, asked for {max_weight}"
        )


def _suffix_hits(comp, words):
    """Indices of forbidden words that end exactly at the last part of ``comp``."""
    n = len(comp)
    return [
        idx for idx, w in enumerate(words)
        if len(w) <= n and tuple(comp[n - len(w):]) == w
    ]


def _walk(words, max_weight):
    """Depth-first over avoiders; yields ``(comp, hits)`` for every one-part
    extension of an avoider, where ``hits`` lists forbidden suffixes."""
    comp = []

    def rec(weight):
        for part in range(1, max_weight - weight + 1):
            comp.append(part)
            hits = _suffix_hits(comp, words)
            yield comp, hits
            if not hits:
                yield from rec(weight + part)
            comp.pop()

    yield from rec(0)


def iter_avoiders(fset, max_weight):
    """Every composition of weight <= max_weight avoiding ``fset``, empty one first."""
    _check_weight(max_weight)
    words = [tuple(w) for w in fset]
    yield ()
    for comp, hits in _walk(words, max_weight):
        if not hits:
            yield tuple(comp)


def iter_quasi_avoiders(fset, i, max_weight):
    """Compositions whose only forbidden occurrence is ``fset[i]`` as a suffix."""
    _check_weight(max_weight)
    if not 0 <= i < len(fset):
        raise IndexOutOfRange(f"word index {i} outside 0..{len(fset) - 1}")
    words = [tuple(w) for w in fset]
    # the prefix before the last part avoids everything, so the only
    # occurrences possible are the ones ending at the last part
    for comp, hits in _walk(words, max_weight):
        if hits == [i]:
            yield tuple(comp)


def enumerate_avoiders(fset, max_weight):
    return CoefficientTriangle.tally(max_weight, iter_avoiders(fset, max_weight))


def enumerate_quasi_avoiders(fset, i, max_weight):
    return CoefficientTriangle.tally(max_weight, iter_quasi_avoiders(fset, i, max_weight))


def enumerate_string_avoiders(fset, alphabet_size, max_length):
    """Counts of strings over ``{1..alphabet_size}`` avoiding ``fset``, for
    lengths ``0..max_length``."""
    if alphabet_size < 1:
        raise LetterOutOfAlphabet(f"alphabet size must be at least 1, got {alphabet_size}")
    if alphabet_size**max_length > MAX_STRING_WORK:
        raise BoundTooLarge(
            f"{alphabet_size}^{max_length} strings exceeds the brute-force cap {MAX_STRING_WORK}"
        )
    words = [tuple(w) for w in fset]
    for w in words:
        if max(w) > alphabet_size:
            raise LetterOutOfAlphabet(f"word {w} uses a letter outside [1, {alphabet_size}]")
    counts = [0] * (max_length + 1)
    counts[0] = 1
    s = []

    def rec():
        for letter in range(1, alphabet_size + 1):
            s.append(letter)
            if not _suffix_hits(s, words):
                counts[len(s)] += 1
                if len(s) < max_length:
                    rec()
            s.pop()

    if max_length:
        rec()
    return tuple(counts)
