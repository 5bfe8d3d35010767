"""Tiny exhaustive generators shared by the tests.

Deliberately naive and separate from ``avoidgf.oracle``: compositions come
from subsets of cut points, strings from ``itertools.product``.
"""

from itertools import combinations, product


def compositions(n):
    if n == 0:
        yield ()
        return
    for k in range(n):
        for cuts in combinations(range(1, n), k):
            edges = (0,) + cuts + (n,)
            yield tuple(b - a for a, b in zip(edges, edges[1:]))


def occurs(s, b):
    return any(tuple(s[i:i + len(b)]) == tuple(b) for i in range(len(s) - len(b) + 1))


def occurrences(s, b):
    return [i for i in range(len(s) - len(b) + 1) if tuple(s[i:i + len(b)]) == tuple(b)]


def triangle(max_weight, keep):
    rows = [[0] * (n + 1) for n in range(max_weight + 1)]
    for n in range(max_weight + 1):
        for c in compositions(n):
            if keep(c):
                rows[n][len(c)] += 1
    return tuple(tuple(r) for r in rows)


def avoider_triangle(words, max_weight):
    return triangle(max_weight, lambda c: not any(occurs(c, w) for w in words))


def quasi_triangle(words, i, max_weight):
    target = tuple(words[i])

    def keep(c):
        hits = [(j, p) for j, w in enumerate(words) for p in occurrences(c, w)]
        return hits == [(i, len(c) - len(target))]

    return triangle(max_weight, keep)


def string_counts(words, alphabet, max_length):
    return [
        sum(
            1 for s in product(range(1, alphabet + 1), repeat=L)
            if not any(occurs(s, w) for w in words)
        )
        for L in range(max_length + 1)
    ]
