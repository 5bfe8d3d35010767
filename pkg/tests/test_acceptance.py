"""Exit criteria.  Every comparison is exact; runtimes are bounded per criterion.

Run ``pytest tests/test_acceptance.py`` and read the "acceptance criteria"
section of the summary for one PASS/FAIL line per criterion.
"""

import random
import re
from itertools import combinations

from avoidgf.correlate import ForbiddenSet, Word, correlation_bits
from avoidgf.engine import composition_gf, string_gf, verify_proof_identities
from avoidgf.errors import ValidationError
from avoidgf.family import ExponentSet, family_gf, family_words
from avoidgf.oracle import (
    enumerate_avoiders,
    enumerate_quasi_avoiders,
    enumerate_string_avoiders,
)

N = 12

# published series, one cell per power of x (index = weight)
EXAMPLE_1 = [
    "1", "q", "q+q^2", "q+2q^2+q^3", "q+2q^2+3q^3+q^4",
    "q+4q^2+3q^3+4q^4+q^5", "q+5q^2+9q^3+5q^4+5q^5+q^6",
]
EXAMPLE_2 = [
    "1", "q", "q+q^2", "q+2q^2+q^3", "q+2q^2+3q^3+q^4",
    "q+4q^2+4q^3+4q^4+q^5", "q+5q^2+9q^3+6q^4+5q^5+q^6",
    "q+6q^2+13q^3+16q^4+9q^5+6q^6+q^7", "q+7q^2+19q^3+28q^4+26q^5+12q^6+7q^7+q^8",
]
EXAMPLE_3 = [
    "1", "q", "q+q^2", "q+2q^2+q^3", "q+3q^2+3q^3+q^4",
    "q+4q^2+5q^3+4q^4+q^5", "q+5q^2+10q^3+8q^4+5q^5+q^6",
    "q+6q^2+15q^3+18q^4+11q^5+6q^6+q^7", "q+7q^2+21q^3+33q^4+30q^5+15q^6+7q^7+q^8",
]


def parse_cell(text, n):
    row = [0] * (n + 1)
    for term in text.split("+"):
        m = re.fullmatch(r"(\d*)(q(?:\^(\d+))?)?", term.strip())
        coeff = int(m.group(1)) if m.group(1) else 1
        power = 0 if not m.group(2) else int(m.group(3) or 1)
        row[power] += coeff
    return tuple(row)


def golden(cells):
    return tuple(parse_cell(c, n) for n, c in enumerate(cells))


def exponent_sets_up_to_five():
    return [ExponentSet(a) for k in (1, 2, 3) for a in combinations(range(1, 6), k)]


def random_sets(count=25, seed=20240611):
    rng = random.Random(seed)
    out, seen = [], set()
    while len(out) < count:
        k = rng.randint(1, 3)
        words = [tuple(rng.randint(1, 3) for _ in range(rng.randint(1, 4))) for _ in range(k)]
        try:
            fs = ForbiddenSet(tuple(Word(w) for w in words))
        except ValidationError:
            continue
        key = frozenset(words)
        if key not in seen:
            seen.add(key)
            out.append(fs)
    return out


def test_golden_parser():
    assert parse_cell("q+4q^2+3q^3", 4) == (0, 1, 4, 3, 0)
    assert parse_cell("1", 0) == (1,)


def test_criterion_1_example_one(criterion):
    with criterion("criterion 1: {22, 212} series through x^6", 1.0):
        fs = ForbiddenSet.of(Word.of(2, 2), Word.of(2, 1, 2))
        assert composition_gf(fs, 6).gf.rows == golden(EXAMPLE_1)


def test_criterion_2_example_two(criterion):
    with criterion("criterion 2: odd exponents {1,3,5} series through x^8", 1.0):
        assert family_gf(ExponentSet.of(1, 3, 5), 8).rows == golden(EXAMPLE_2)


def test_criterion_3_example_three(criterion):
    with criterion("criterion 3: even exponents {2,4} series through x^8", 1.0):
        assert family_gf(ExponentSet.of(2, 4), 8).rows == golden(EXAMPLE_3)


def test_criterion_4_closed_form_cross_check(criterion):
    with criterion("criterion 4: closed form = determinant = oracle, 25 exponent sets, N=12", 30.0):
        sets = exponent_sets_up_to_five()
        assert len(sets) == 25
        for e in sets:
            fs = family_words(e)
            closed = family_gf(e, N)
            assert closed == composition_gf(fs, N).gf, e
            assert closed.rows == enumerate_avoiders(fs, N).rows, e


def test_criterion_5_oracle_sweep(criterion):
    with criterion("criterion 5: 25 random sets match brute force, N=12", 60.0):
        sets = random_sets()
        assert len(sets) == 25
        for fs in sets:
            assert all(w.length <= 4 and max(w) <= 3 for w in fs) and fs.k <= 3
            assert composition_gf(fs, N).gf.rows == enumerate_avoiders(fs, N).rows, str(fs)


def test_criterion_6_proof_identities(criterion):
    with criterion("criterion 6: grow/split identities and quasi-avoider counts, N=12"):
        sets = [family_words(e) for e in exponent_sets_up_to_five()] + random_sets()
        for fs in sets:
            res = composition_gf(fs, N)
            report = verify_proof_identities(res, fs)
            assert report.all_passed, f"{fs}\n{report}"
            for i, b in enumerate(res.quasi):
                assert b.rows == enumerate_quasi_avoiders(fs, i, N).rows, (str(fs), i)


def test_criterion_7_strings_fibonacci(criterion):
    with criterion("criterion 7: strings avoiding 11 over [2] are Fibonacci, length 12"):
        fib = [1, 2]
        while len(fib) < N + 1:
            fib.append(fib[-1] + fib[-2])
        got = string_gf(ForbiddenSet.of(Word.of(1, 1)), 2, N).coeffs
        assert list(got) == fib
        assert tuple(got) == enumerate_string_avoiders(ForbiddenSet.of(Word.of(1, 1)), 2, N)
        assert got[:7] == (1, 2, 3, 5, 8, 13, 21)


def test_criterion_8_correlation_tables(criterion):
    with criterion("criterion 8: correlations of 110 and 1011"):
        assert correlation_bits((1, 1, 0), (1, 0, 1, 1)) == (0, 1, 1)
        assert correlation_bits((1, 0, 1, 1), (1, 1, 0)) == (0, 0, 1, 0)
        assert correlation_bits((1, 0, 1, 1), (1, 0, 1, 1)) == (1, 0, 0, 1)


def test_criterion_9_degenerate_cases(criterion):
    with criterion("criterion 9: empty set gives 2^(n-1); forbidding 1 matches brute force"):
        free = composition_gf(ForbiddenSet(()), 15).gf
        assert free.total(0) == 1
        for n in range(1, 16):
            assert free.total(n) == 2 ** (n - 1)
        no_ones = ForbiddenSet.of(Word.of(1))
        assert composition_gf(no_ones, N).gf.rows == enumerate_avoiders(no_ones, N).rows
