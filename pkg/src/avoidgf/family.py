"""Closed forms for avoiding the words ``2 1^(a-1) 2``.

For exponents ``a_1 < ... < a_k`` let ``P = sum_i (xq)^a_i``.  Every pair of
these words overlaps only in a single ``2``, so ``c_ij = [i == j] + x(xq)^a_i``
and both determinants collapse, giving

    V(x, q) = (1-x)(1 + xP) / ((1 - x(1+q) + (1-x)x^2 q)(1 + xP) - (1-x)x^2 q).
"""

from dataclasses import dataclass

from .correlate import ForbiddenSet, Word
from .errors import ValidationError
from .series import DEFAULT_MAX_WEIGHT, BiPoly, series_div

X = BiPoly.x()
Q = BiPoly.q()
XQ = X * Q

KINDS = ("consecutive", "odd", "even")


@dataclass(frozen=True)
class ExponentSet:
    a: tuple

    def __post_init__(self):
        a = tuple(self.a)
        if not a:
            raise ValidationError("exponent set must be nonempty")
        for v in a:
            if isinstance(v, bool) or not isinstance(v, int) or v < 1:
                raise ValidationError(f"exponents must be positive integers, got {v!r}")
        if any(u >= v for u, v in zip(a, a[1:])):
            raise ValidationError(f"exponents must be strictly increasing, got {list(a)}")
        object.__setattr__(self, "a", a)

    @classmethod
    def of(cls, *a):
        return cls(a)

    def __iter__(self):
        return iter(self.a)

    def __len__(self):
        return len(self.a)


def family_word(a):
    return Word((2,) + (1,) * (a - 1) + (2,))


def family_words(e):
    return ForbiddenSet(tuple(family_word(a) for a in e))


def family_rational(e):
    """Numerator and denominator polynomials of the closed form."""
    xp = X * sum((XQ ** a for a in e), BiPoly.zero())
    head = 1 - X * (1 + Q) + (1 - X) * X**2 * Q
    numer = (1 - X) * (1 + xp)
    denom = head * (1 + xp) - (1 - X) * X**2 * Q
    return numer, denom


def family_gf(e, max_weight=DEFAULT_MAX_WEIGHT):
    numer, denom = family_rational(e)
    return series_div(numer, denom, max_weight)


def special_exponents(kind, k):
    """``consecutive``: 1..k;  ``odd``: 1, 3, ..., 2k+1;  ``even``: 2, 4, ..., 2k."""
    if k < 1:
        raise ValidationError(f"k must be at least 1, got {k}")
    if kind == "consecutive":
        return ExponentSet(tuple(range(1, k + 1)))
    if kind == "odd":
        return ExponentSet(tuple(range(1, 2 * k + 2, 2)))
    if kind == "even":
        return ExponentSet(tuple(range(2, 2 * k + 1, 2)))
    raise ValidationError(f"unknown family kind {kind!r}; expected one of {', '.join(KINDS)}")


def family_gf_special(kind, k, max_weight=DEFAULT_MAX_WEIGHT):
    return family_gf(special_exponents(kind, k), max_weight)


def simplified_rational(kind, k):
    """Geometric-sum simplification of the closed form for the three families.

    Each sum ``P`` is a geometric progression ``P = lead (1 - r^k') / (1 - r)``,
    so numerator and denominator are scaled by ``1 - r``.  Display and
    cross-checking only; :func:`family_gf` never goes through this path.
    """
    special_exponents(kind, k)
    if kind == "consecutive":
        ratio, lead, count = XQ, XQ, k
    elif kind == "odd":
        ratio, lead, count = XQ**2, XQ, k + 1
    else:
        ratio, lead, count = XQ**2, XQ**2, k
    # (1 - r)(1 + xP)
    scaled = (1 - ratio) + X * lead * (1 - ratio**count)
    head = 1 - X * (1 + Q) + (1 - X) * X**2 * Q
    numer = (1 - X) * scaled
    denom = head * scaled - (1 - X) * X**2 * Q * (1 - ratio)
    return numer, denom
