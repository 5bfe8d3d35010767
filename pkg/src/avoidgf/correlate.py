"""Words, substring containment and correlation polynomials."""

from dataclasses import dataclass

from .errors import ContainmentViolation, DuplicateWord, ValidationError
from .series import BiPoly, UniPoly


@dataclass(frozen=True)
class Word:
    """A composition, or a string over the alphabet ``{1, 2, ...}``."""

    parts: tuple

    def __post_init__(self):
        parts = tuple(self.parts)
        if not parts:
            raise ValidationError("a word needs at least one part")
        for p in parts:
            if isinstance(p, bool) or not isinstance(p, int) or p < 1:
                raise ValidationError(f"parts must be positive integers, got {p!r}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts):
        return cls(parts)

    @classmethod
    def parse(cls, text):
        """``"2 1 2"`` -> ``Word((2, 1, 2))``."""
        try:
            return cls(tuple(int(t) for t in text.split()))
        except ValueError as exc:
            raise ValidationError(f"cannot read word {text!r}: {exc}") from None

    @property
    def weight(self):
        return sum(self.parts)

    @property
    def length(self):
        return len(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self):
        return " ".join(map(str, self.parts))


def contains(s, b):
    """True iff ``b`` occurs as a contiguous block of ``s``."""
    s, b = tuple(s), tuple(b)
    n = len(b)
    return any(s[i:i + n] == b for i in range(len(s) - n + 1))


@dataclass(frozen=True)
class ForbiddenSet:
    """Words to avoid, none a substring of another.

    Build through :func:`validate_antichain` (or ``ForbiddenSet.of``); the
    constructor re-checks the antichain property.  An empty set is allowed
    and means "no restriction".
    """

    words: tuple

    def __post_init__(self):
        words = tuple(w if isinstance(w, Word) else Word(tuple(w)) for w in self.words)
        _check_antichain(words)
        object.__setattr__(self, "words", words)

    @classmethod
    def of(cls, *words):
        return cls(tuple(words))

    @property
    def k(self):
        return len(self.words)

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __getitem__(self, i):
        return self.words[i]

    def __str__(self):
        return "{" + ", ".join(str(w) for w in self.words) + "}"


def _check_antichain(words):
    for i, u in enumerate(words):
        for j, v in enumerate(words):
            if i >= j:
                continue
            if u.parts == v.parts:
                raise DuplicateWord(i, j, u)
            if contains(v, u):
                raise ContainmentViolation(i, j, u, v)
            if contains(u, v):
                raise ContainmentViolation(j, i, v, u)


def validate_antichain(words):
    return ForbiddenSet(tuple(words))


def correlation_bits(X1, X2):
    """Correlation of ``X1`` against ``X2``, one bit per shift of ``X2``.

    Bit ``j`` is 1 when ``X2`` shifted ``j`` places left agrees with ``X1``
    on their overlap; the result has ``len(X1)`` bits.  Letters only need to
    support equality.
    """
    a, b = tuple(X1), tuple(X2)
    m, l = len(a), len(b)
    bits = []
    for j in range(m):
        if m > l and j <= m - l:
            # X2 lies wholly under X1, ending j letters before X1 does
            ok = all(b[i] == a[m - l + i - j] for i in range(l))
        else:
            ok = all(a[i] == b[l - m + i + j] for i in range(m - j))
        bits.append(int(ok))
    return tuple(bits)


def correlation_poly_q(X1, X2):
    bits = correlation_bits(X1, X2)
    return UniPoly({(j,): 1 for j, c in enumerate(bits) if c})


def correlation_poly_xq(X1, X2):
    """Bit ``j`` contributes ``x**w q**j`` where ``w`` is the weight of the
    last ``j`` parts of ``X1`` (the tail left uncovered by ``X2``)."""
    parts = tuple(X1)
    m = len(parts)
    bits = correlation_bits(X1, X2)
    return BiPoly(
        {(sum(parts[m - j:]), j): 1 for j, c in enumerate(bits) if c}
    )
