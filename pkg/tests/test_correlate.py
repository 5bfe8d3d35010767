import pytest
from hypothesis import given
from hypothesis import strategies as st

from avoidgf.correlate import (
    ForbiddenSet,
    Word,
    contains,
    correlation_bits,
    correlation_poly_q,
    correlation_poly_xq,
    validate_antichain,
)
from avoidgf.errors import ContainmentViolation, DuplicateWord, ValidationError
from avoidgf.series import BiPoly, UniPoly

x, q = BiPoly.x(), BiPoly.q()
W = Word.of


def slide_bits(a, b):
    """Place ``b`` so its last letter sits ``j`` cells left of the end of
    ``a`` and compare every cell where both are present."""
    m, l = len(a), len(b)
    bits = []
    for j in range(m):
        start = m - j - l
        cells = {start + i: b[i] for i in range(l)}
        bits.append(int(all(a[p] == cells[p] for p in range(m) if p in cells)))
    return tuple(bits)


def test_word_fields():
    w = W(2, 1, 2)
    assert (w.weight, w.length) == (5, 3)
    assert str(w) == "2 1 2"
    assert Word.parse(" 3  10 ") == W(3, 10)


@pytest.mark.parametrize("parts", [(), (0,), (2, -1), (1.5,), (True,)])
def test_word_rejects_bad_parts(parts):
    with pytest.raises(ValidationError):
        Word(parts)


def test_contains():
    assert contains(W(2, 1, 2), W(1, 2))
    assert not contains(W(2, 1, 2), W(2, 2))
    assert contains(W(2, 1, 2), W(2, 1, 2))
    assert not contains(W(1, 2), W(2, 1, 2))


def test_antichain_valid():
    fs = validate_antichain([W(2, 2), W(2, 1, 2)])
    assert fs.k == 2


def test_antichain_containment():
    with pytest.raises(ContainmentViolation) as info:
        validate_antichain([W(1, 2), W(3, 1, 2)])
    assert (info.value.i, info.value.j) == (0, 1)
    with pytest.raises(ContainmentViolation) as info:
        validate_antichain([W(3, 1, 2), W(1, 2)])
    assert (info.value.i, info.value.j) == (1, 0)


def test_antichain_duplicate():
    with pytest.raises(DuplicateWord):
        validate_antichain([W(2, 2), W(2, 2)])


def test_empty_set_allowed():
    assert ForbiddenSet(()).k == 0


def test_bits_worked_example():
    # 110 and 1011 over {0, 1}, taken as raw symbols
    assert correlation_bits((1, 1, 0), (1, 0, 1, 1)) == (0, 1, 1)
    assert correlation_bits((1, 0, 1, 1), (1, 1, 0)) == (0, 0, 1, 0)
    assert correlation_bits((1, 0, 1, 1), (1, 0, 1, 1)) == (1, 0, 0, 1)


def test_bits_worked_example_recoded():
    # 0 -> 1, 1 -> 2 keeps the equality pattern, so the bits cannot change
    a, b = W(2, 2, 1), W(2, 1, 2, 2)
    assert correlation_bits(a, b) == (0, 1, 1)
    assert correlation_bits(b, a) == (0, 0, 1, 0)
    assert correlation_bits(b, b) == (1, 0, 0, 1)


def test_poly_q():
    assert correlation_poly_q(W(1, 1), W(1, 1)) == 1 + UniPoly.q()
    assert correlation_poly_q(W(4), W(4)) == 1
    assert correlation_poly_q(W(2, 2, 1), W(2, 1, 2, 2)) == UniPoly.q() + UniPoly.q() ** 2


def test_poly_xq_uses_tail_weight_for_x():
    # tail 1 1 2 has weight 4, length 3
    assert correlation_poly_xq(W(2, 1, 1, 2), W(2, 1, 2)) == x**4 * q**3
    assert correlation_poly_xq(W(2, 2), W(2, 2)) == 1 + x**2 * q
    assert correlation_poly_xq(W(5), W(5)) == 1


def test_poly_xq_worked_example_recoded():
    a, b = W(2, 2, 1), W(2, 1, 2, 2)
    assert correlation_poly_xq(a, b) == x * q + x**3 * q**2
    assert correlation_poly_xq(b, a) == x**4 * q**2
    assert correlation_poly_xq(a, a) == 1
    assert correlation_poly_xq(b, b) == 1 + x**5 * q**3


words = st.lists(st.integers(1, 4), min_size=1, max_size=6).map(tuple)


@given(words, words)
def test_bits_match_sliding_reference(a, b):
    assert correlation_bits(a, b) == slide_bits(a, b)


@given(words)
def test_self_overlap_bit(a):
    assert correlation_bits(a, a)[0] == 1


@given(words, words)
def test_x_equals_one_gives_length_polynomial(a, b):
    pxq = correlation_poly_xq(Word(a), Word(b))
    assert pxq.at_x_one() == correlation_poly_q(a, b)
    bits = correlation_bits(a, b)
    for j, c in enumerate(bits):
        assert correlation_poly_q(a, b).coeff(j) == c


@given(words, words)
def test_nonconstant_terms_divisible_by_xq(a, b):
    for (n, m) in correlation_poly_xq(Word(a), Word(b)).terms:
        assert (n, m) == (0, 0) or (n >= m >= 1)


@given(st.lists(words, min_size=2, max_size=4, unique=True))
def test_antichain_offdiagonal_constant_zero(ws):
    try:
        fs = validate_antichain([Word(w) for w in ws])
    except ContainmentViolation:
        return
    for i, u in enumerate(fs):
        for j, v in enumerate(fs):
            if i != j:
                assert correlation_bits(u, v)[0] == 0


@given(st.lists(st.integers(1, 7), min_size=1, max_size=4, unique=True).map(sorted))
def test_family_correlations(exps):
    fam = [W(2, *([1] * (a - 1)), 2) for a in exps]
    for i, ai in enumerate(exps):
        for j in range(len(exps)):
            want = (1 if i == j else 0) + x * (x * q) ** ai
            assert correlation_poly_xq(fam[i], fam[j]) == want
