"""Exact polynomials and truncated power series over the integers.

Two variables are used throughout: ``x`` marks weight (sum of parts) and
``q`` marks length (number of parts).  :class:`BiPoly` is a sparse
polynomial in both, :class:`UniPoly` a sparse polynomial in ``q`` alone.
:class:`BiSeries` is a dense triangular array ``c[n][m]`` (``m <= n``)
holding a power series truncated after ``x**max_weight``; :class:`UniSeries`
is a plain coefficient list truncated after ``q**max_length``.

Coefficients are Python ints, so nothing is ever rounded.
"""

from types import MappingProxyType

from .errors import BoundMismatch, BoundTooLarge, NonTriangular, NonUnitConstant

DEFAULT_MAX_WEIGHT = 20
# Raise to allow longer expansions; cost grows like max_weight**4.
MAX_WEIGHT_CAP = 400


class _Poly:
    """Sparse integer polynomial keyed by exponent tuples of length ``nvars``."""

    nvars = 0
    names = ()
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms is None:
            terms = {}
        elif isinstance(terms, int):
            terms = {(0,) * self.nvars: terms}
        items = terms.items() if hasattr(terms, "items") else terms
        for exps, coeff in items:
            if isinstance(exps, int):
                exps = (exps,)
            exps = tuple(exps)
            if len(exps) != self.nvars or any(
                not isinstance(e, int) or e < 0 for e in exps
            ):
                raise ValueError(f"bad exponent tuple {exps!r} for {type(self).__name__}")
            if not isinstance(coeff, int):
                raise TypeError(f"coefficients must be int, got {type(coeff).__name__}")
            total = clean.get(exps, 0) + coeff
            if total:
                clean[exps] = total
            else:
                clean.pop(exps, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        # terms must already be canonical (no zero coefficients)
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def one(cls):
        return cls._raw({(0,) * cls.nvars: 1})

    @classmethod
    def const(cls, c):
        return cls._raw({(0,) * cls.nvars: c} if c else {})

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def coeff(self, *exps):
        return self._terms.get(tuple(exps), 0)

    @property
    def constant_term(self):
        return self._terms.get((0,) * self.nvars, 0)

    def is_zero(self):
        return not self._terms

    def degree(self, var=0):
        return max((e[var] for e in self._terms), default=-1)

    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, int):
            return self.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                del out[e]
        return self._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return self._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return self._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative int")
        result, base = self.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def exact_div(self, other):
        """Quotient of an exact division; raises ArithmeticError on a remainder.

        Plain multivariate division by lex-leading terms.  Used by the
        fraction-free determinant, where every division is known to be exact.
        """
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lead = max(other._terms)
        lead_c = other._terms[lead]
        rem = dict(self._terms)
        quot = {}
        while rem:
            top = max(rem)
            shift = tuple(a - b for a, b in zip(top, lead))
            c, r = divmod(rem[top], lead_c)
            if r or min(shift) < 0:
                raise ArithmeticError(f"{other} does not divide {self}")
            quot[shift] = c
            for e, d in other._terms.items():
                key = tuple(a + b for a, b in zip(shift, e))
                v = rem.get(key, 0) - c * d
                if v:
                    rem[key] = v
                else:
                    rem.pop(key, None)
        return self._raw(quot)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.const(other)
        if not isinstance(other, _Poly) or other.nvars != self.nvars:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms, key=lambda e: (sum(e), e)):
            c = self._terms[e]
            mono = "".join(
                name if k == 1 else f"{name}^{k}"
                for name, k in zip(self.names, e)
                if k
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


class BiPoly(_Poly):
    """Polynomial in ``x`` (weight) and ``q`` (length)."""

    nvars = 2
    names = ("x", "q")
    __slots__ = ()

    @classmethod
    def x(cls):
        return cls._raw({(1, 0): 1})

    @classmethod
    def q(cls):
        return cls._raw({(0, 1): 1})

    @classmethod
    def monomial(cls, n, m, c=1):
        return cls({(n, m): c})

    def at_x_one(self):
        """Specialize ``x = 1``, leaving a polynomial in ``q``."""
        out = {}
        for (_, m), c in self._terms.items():
            out[(m,)] = out.get((m,), 0) + c
        return UniPoly(out)


class UniPoly(_Poly):
    """Polynomial in ``q`` alone."""

    nvars = 1
    names = ("q",)
    __slots__ = ()

    @classmethod
    def q(cls):
        return cls._raw({(1,): 1})

    @classmethod
    def monomial(cls, m, c=1):
        return cls({(m,): c})

    def coefficients(self):
        """Dense coefficient list, lowest degree first."""
        out = [0] * (self.degree() + 1)
        for (m,), c in self._terms.items():
            out[m] = c
        return out


def poly_add(a, b):
    return a + b


def poly_mul(a, b):
    return a * b


# Row-level helpers.  A "rows" value is a list indexed by x-degree whose
# entries are lists of q-coefficients of arbitrary length, so they can hold
# intermediates that are not (yet) triangular.

def _row_mul_acc(acc, a, b):
    if len(acc) < len(a) + len(b) - 1:
        acc.extend([0] * (len(a) + len(b) - 1 - len(acc)))
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                if v:
                    acc[i + j] += u * v


def _rows_mul(a, b, n_max):
    out = []
    for n in range(n_max + 1):
        acc = []
        for i in range(n + 1):
            if a[i] and b[n - i]:
                _row_mul_acc(acc, a[i], b[n - i])
        out.append(acc)
    return out


def _rows_invert(a, n_max):
    a0 = _trim(list(a[0]))
    if len(a0) != 1 or a0[0] not in (1, -1):
        raise NonUnitConstant(
            f"weight-0 part of the series must be +1 or -1, got coefficients {a0 or [0]}"
        )
    unit = a0[0]
    out = [[unit]]
    for n in range(1, n_max + 1):
        acc = []
        for i in range(1, n + 1):
            if a[i] and out[n - i]:
                _row_mul_acc(acc, a[i], out[n - i])
        out.append([-unit * c for c in acc])
    return out


def _trim(row):
    while row and row[-1] == 0:
        row.pop()
    return row


def _poly_rows(p, n_max):
    rows = [[] for _ in range(n_max + 1)]
    for (n, m), c in p.terms.items():
        if n <= n_max:
            row = rows[n]
            if len(row) <= m:
                row.extend([0] * (m + 1 - len(row)))
            row[m] += c
    return rows


def _check_bound(n_max):
    if not isinstance(n_max, int) or n_max < 0:
        raise ValueError(f"truncation bound must be a nonnegative int, got {n_max!r}")
    if n_max > MAX_WEIGHT_CAP:
        raise BoundTooLarge(f"truncation bound {n_max} exceeds cap {MAX_WEIGHT_CAP}")


class BiSeries:
    """Bivariate series truncated after weight ``max_weight``.

    ``rows[n][m]`` is the coefficient of ``x**n q**m``; row ``n`` always has
    exactly ``n + 1`` entries.
    """

    __slots__ = ("max_weight", "rows")

    def __init__(self, max_weight, rows=None):
        _check_bound(max_weight)
        self.max_weight = max_weight
        if rows is None:
            rows = []
        if len(rows) > max_weight + 1:
            rows = rows[: max_weight + 1]
        fixed = []
        for n in range(max_weight + 1):
            row = list(rows[n]) if n < len(rows) else []
            if any(row[n + 1:]):
                m = next(m for m in range(n + 1, len(row)) if row[m])
                raise NonTriangular(
                    f"nonzero coefficient {row[m]} at x^{n} q^{m} (length exceeds weight)"
                )
            row = row[: n + 1] + [0] * (n + 1 - len(row))
            fixed.append(tuple(row))
        self.rows = tuple(fixed)

    @classmethod
    def one(cls, max_weight):
        return cls(max_weight, [[1]])

    def coeff(self, n, m):
        if 0 <= n <= self.max_weight and 0 <= m <= n:
            return self.rows[n][m]
        return 0

    def total(self, n):
        """Coefficient of ``x**n`` at ``q = 1``."""
        return sum(self.rows[n])

    def truncate(self, max_weight):
        if max_weight > self.max_weight:
            raise BoundMismatch(f"cannot extend a series known to x^{self.max_weight}")
        return BiSeries(max_weight, self.rows[: max_weight + 1])

    def to_poly(self):
        return BiPoly({(n, m): c for n, row in enumerate(self.rows) for m, c in enumerate(row) if c})

    def __mul__(self, other):
        return series_mul(self, other)

    def __add__(self, other):
        if not isinstance(other, BiSeries):
            return NotImplemented
        if other.max_weight != self.max_weight:
            raise BoundMismatch(f"truncation bounds differ: {self.max_weight} vs {other.max_weight}")
        return BiSeries(
            self.max_weight,
            [[u + v for u, v in zip(r, s)] for r, s in zip(self.rows, other.rows)],
        )

    def __sub__(self, other):
        if not isinstance(other, BiSeries):
            return NotImplemented
        return self + BiSeries(self.max_weight, [[-c for c in r] for r in other.rows])

    def __eq__(self, other):
        if not isinstance(other, BiSeries):
            return NotImplemented
        return self.max_weight == other.max_weight and self.rows == other.rows

    def __hash__(self):
        return hash((self.max_weight, self.rows))

    def __repr__(self):
        return f"BiSeries({self.max_weight}, {[list(r) for r in self.rows]!r})"

    def __str__(self):
        terms = []
        for n, row in enumerate(self.rows):
            cell = UniPoly({(m,): c for m, c in enumerate(row) if c})
            if cell.is_zero():
                continue
            if n == 0:
                terms.append(str(cell))
            else:
                xs = "x" if n == 1 else f"x^{n}"
                terms.append(f"({cell}){xs}" if len(cell.terms) > 1 else f"{cell}{xs}")
        return " + ".join(terms) + f" + O(x^{self.max_weight + 1})"


class UniSeries:
    """Power series in ``q`` truncated after ``q**max_length``."""

    __slots__ = ("max_length", "coeffs")

    def __init__(self, max_length, coeffs=()):
        _check_bound(max_length)
        self.max_length = max_length
        coeffs = list(coeffs[: max_length + 1])
        self.coeffs = tuple(coeffs + [0] * (max_length + 1 - len(coeffs)))

    def coeff(self, m):
        return self.coeffs[m] if 0 <= m <= self.max_length else 0

    def __mul__(self, other):
        if not isinstance(other, UniSeries):
            return NotImplemented
        if other.max_length != self.max_length:
            raise BoundMismatch(f"truncation bounds differ: {self.max_length} vs {other.max_length}")
        acc = []
        _row_mul_acc(acc, self.coeffs, other.coeffs)
        return UniSeries(self.max_length, acc)

    def invert(self):
        return uni_series_invert(self)

    def __eq__(self, other):
        if not isinstance(other, UniSeries):
            return NotImplemented
        return self.max_length == other.max_length and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.max_length, self.coeffs))

    def __repr__(self):
        return f"UniSeries({self.max_length}, {list(self.coeffs)!r})"


def series_from_poly(p, max_weight=DEFAULT_MAX_WEIGHT):
    bad = [(n, m) for (n, m) in p.terms if m > n]
    if bad:
        n, m = min(bad)
        raise NonTriangular(f"term x^{n} q^{m} of {p} has more parts than weight")
    _check_bound(max_weight)
    return BiSeries(max_weight, _poly_rows(p, max_weight))


def series_mul(a, b):
    if a.max_weight != b.max_weight:
        raise BoundMismatch(f"truncation bounds differ: {a.max_weight} vs {b.max_weight}")
    return BiSeries(a.max_weight, _rows_mul(a.rows, b.rows, a.max_weight))


def series_invert(a):
    """Reciprocal of a series whose constant term is +1 or -1."""
    return BiSeries(a.max_weight, _rows_invert(a.rows, a.max_weight))


def series_div(num, den, max_weight=DEFAULT_MAX_WEIGHT):
    """Expand ``num / den`` to weight ``max_weight``.

    The operands are arbitrary polynomials (determinants may carry terms with
    more ``q`` than ``x``); only the quotient must be triangular.
    """
    _check_bound(max_weight)
    inv = _rows_invert(_poly_rows(den, max_weight), max_weight)
    return BiSeries(max_weight, _rows_mul(_poly_rows(num, max_weight), inv, max_weight))


def uni_series_from_poly(p, max_length=DEFAULT_MAX_WEIGHT):
    _check_bound(max_length)
    out = [0] * (max_length + 1)
    for (m,), c in p.terms.items():
        if m <= max_length:
            out[m] = c
    return UniSeries(max_length, out)


def uni_series_invert(a):
    rows = [[c] for c in a.coeffs]
    inv = _rows_invert(rows, a.max_length)
    return UniSeries(a.max_length, [r[0] if r else 0 for r in inv])


def uni_series_div(num, den, max_length=DEFAULT_MAX_WEIGHT):
    return uni_series_from_poly(num, max_length) * uni_series_invert(
        uni_series_from_poly(den, max_length)
    )
