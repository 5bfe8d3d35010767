"""Determinant formulas for avoiding generating functions.

For a forbidden antichain ``S_1..S_k`` the avoider series ``G`` and the
quasi-avoider series ``B_1..B_k`` (compositions ending in ``S_i`` with no
other forbidden occurrence) solve the linear system

    [ 1-x(1+q)          1-x      ...  1-x     ] [ G  ]   [ 1-x ]
    [ x^w(S_1) q^l(S_1)  -c_11   ...  -c_1k   ] [ B_1] = [  0  ]
    [ ...                                      ] [ ...]   [ ... ]
    [ x^w(S_k) q^l(S_k)  -c_k1   ...  -c_kk   ] [ B_k]   [  0  ]

where ``c_ij`` are the bivariate correlation polynomials.  Every unknown is
a ratio of two exact polynomial determinants (Cramer), expanded as a series
only at the very end.  Strings over ``[n]`` use the same shape with
univariate correlations, corner ``1 - nq``, first row of ones and right-hand
side ``(1, 0, ..., 0)``.
"""

from dataclasses import dataclass, field

from .correlate import ForbiddenSet, correlation_poly_q, correlation_poly_xq
from .errors import InvariantError, LetterOutOfAlphabet, SizeLimitExceeded
from .series import (
    DEFAULT_MAX_WEIGHT,
    BiPoly,
    BiSeries,
    UniPoly,
    series_div,
    series_from_poly,
    uni_series_div,
)

MAX_SET_SIZE = 12
COFACTOR_MAX = 8
# bordered systems for a full-size set are one larger than the set
MAX_DET_SIZE = MAX_SET_SIZE + 1

X = BiPoly.x()
Q = BiPoly.q()


@dataclass(frozen=True)
class CorrelationMatrix:
    entries: tuple

    @property
    def k(self):
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]


def _check_set_size(fset):
    if fset.k > MAX_SET_SIZE:
        raise SizeLimitExceeded(f"{fset.k} forbidden words; at most {MAX_SET_SIZE} supported")


def _assemble(fset, corr):
    rows = tuple(tuple(corr(u, v) for v in fset) for u in fset)
    for i, row in enumerate(rows):
        for j, c in enumerate(row):
            want = 1 if i == j else 0
            if c.constant_term != want:
                raise InvariantError(
                    f"correlation ({i},{j}) has constant term {c.constant_term}, expected {want}"
                )
    return CorrelationMatrix(rows)


def build_matrix(fset):
    """Matrix of bivariate correlation polynomials ``c_ij(x, q)``."""
    _check_set_size(fset)
    return _assemble(fset, correlation_poly_xq)


def build_matrix_q(fset):
    """Matrix of length-only correlation polynomials ``c_ij(q)``."""
    _check_set_size(fset)
    return _assemble(fset, correlation_poly_q)


def _ring_of(matrix):
    for row in matrix:
        for e in row:
            return type(e)
    return BiPoly


def det_cofactor(matrix):
    """Laplace expansion along rows, memoised on the set of used columns."""
    k = len(matrix)
    ring = _ring_of(matrix)
    memo = {}

    def minor(row, used):
        if row == k:
            return ring.one()
        if used in memo:
            return memo[used]
        total = ring.zero()
        sign = 1
        for col in range(k):
            if used >> col & 1:
                continue
            entry = matrix[row][col]
            if entry:
                term = entry * minor(row + 1, used | 1 << col)
                total = total + term if sign > 0 else total - term
            sign = -sign
        memo[used] = total
        return total

    return minor(0, 0)


def det_bareiss(matrix):
    """Fraction-free (Bareiss) elimination with exact polynomial division."""
    k = len(matrix)
    ring = _ring_of(matrix)
    if k == 0:
        return ring.one()
    a = [list(row) for row in matrix]
    sign = 1
    prev = ring.one()
    for p in range(k - 1):
        if not a[p][p]:
            swap = next((r for r in range(p + 1, k) if a[r][p]), None)
            if swap is None:
                return ring.zero()
            a[p], a[swap] = a[swap], a[p]
            sign = -sign
        piv = a[p][p]
        for i in range(p + 1, k):
            for j in range(p + 1, k):
                a[i][j] = (a[i][j] * piv - a[i][p] * a[p][j]).exact_div(prev)
            a[i][p] = ring.zero()
        prev = piv
    return a[k - 1][k - 1] if sign > 0 else -a[k - 1][k - 1]


def det(matrix):
    """Exact determinant of a square matrix of polynomials."""
    k = len(matrix)
    if any(len(row) != k for row in matrix):
        raise ValueError("determinant of a non-square matrix")
    if k > MAX_DET_SIZE:
        raise SizeLimitExceeded(f"{k}x{k} determinant exceeds the {MAX_DET_SIZE}x{MAX_DET_SIZE} cap")
    if k <= COFACTOR_MAX:
        return det_cofactor(matrix)
    return det_bareiss(matrix)


def _replace_column(matrix, col, values):
    return [
        [values[i] if j == col else e for j, e in enumerate(row)]
        for i, row in enumerate(matrix)
    ]


def composition_system(fset):
    """The bordered coefficient matrix and right-hand side of the linear system."""
    corr = build_matrix(fset)
    k = corr.k
    top = [1 - X * (1 + Q)] + [1 - X] * k
    rows = [top]
    for i, w in enumerate(fset):
        rows.append([BiPoly.monomial(w.weight, w.length)] + [-c for c in corr.entries[i]])
    rhs = [1 - X] + [BiPoly.zero()] * k
    return rows, rhs


@dataclass(frozen=True)
class AvoidanceResult:
    """Output of :func:`composition_gf`.

    ``numer``/``denom`` are the exact polynomials with ``G = numer / denom``;
    ``quasi_numers[i] / denom`` is ``B_{i+1}``.
    """

    forbidden: ForbiddenSet
    gf: BiSeries
    quasi: tuple
    numer: BiPoly
    denom: BiPoly
    quasi_numers: tuple = field(default=(), repr=False)

    @property
    def max_weight(self):
        return self.gf.max_weight


def composition_gf(fset, max_weight=DEFAULT_MAX_WEIGHT):
    """Series of compositions avoiding ``fset``, by weight (x) and parts (q)."""
    _check_set_size(fset)
    if fset.k == 0:
        numer, denom = 1 - X, 1 - X * (1 + Q)
        gf = series_div(numer, denom, max_weight)
        return AvoidanceResult(fset, gf, (), numer, denom, ())

    system, rhs = composition_system(fset)
    denom = det(system)
    sign = -1 if fset.k % 2 else 1
    if denom.constant_term != sign:
        raise InvariantError(f"denominator constant term {denom.constant_term}, expected {sign}")

    core = [row[1:] for row in system[1:]]
    numer = (1 - X) * det(core)
    gf = series_div(numer, denom, max_weight)

    quasi_numers = tuple(
        det(_replace_column(system, col, rhs)) for col in range(1, fset.k + 1)
    )
    quasi = tuple(series_div(p, denom, max_weight) for p in quasi_numers)
    return AvoidanceResult(fset, gf, quasi, numer, denom, quasi_numers)


def string_gf(fset, alphabet_size, max_length=DEFAULT_MAX_WEIGHT):
    """Series of strings over ``{1..alphabet_size}`` avoiding ``fset``, by length."""
    if alphabet_size < 1:
        raise LetterOutOfAlphabet(f"alphabet size must be at least 1, got {alphabet_size}")
    for w in fset:
        if max(w) > alphabet_size:
            raise LetterOutOfAlphabet(f"word {w} uses a letter outside [1, {alphabet_size}]")
    _check_set_size(fset)
    q = UniPoly.q()
    if fset.k == 0:
        return uni_series_div(UniPoly.one(), 1 - alphabet_size * q, max_length)

    corr = build_matrix_q(fset)
    core = [[-c for c in row] for row in corr.entries]
    bordered = [[1 - alphabet_size * q] + [UniPoly.one()] * fset.k]
    for i, w in enumerate(fset):
        bordered.append([UniPoly.monomial(w.length)] + core[i])
    return uni_series_div(det(core), det(bordered), max_length)


@dataclass
class IdentityReport:
    checks: list = field(default_factory=list)

    def add(self, name, passed, detail=""):
        self.checks.append((name, bool(passed), detail))

    @property
    def all_passed(self):
        return all(ok for _, ok, _ in self.checks)

    def failures(self):
        return [c for c in self.checks if not c[1]]

    def __str__(self):
        return "\n".join(
            f"{'pass' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail else "")
            for name, ok, detail in self.checks
        )


def _first_difference(a, b):
    for n, (r, s) in enumerate(zip(a.rows, b.rows)):
        for m, (u, v) in enumerate(zip(r, s)):
            if u != v:
                return f"x^{n} q^{m}: {u} != {v}"
    return ""


def verify_proof_identities(result, fset):
    """Check the two relations tying ``G`` to the ``B_i`` up to truncation.

    * ``(1 - x - xq) G + (1 - x) sum_i B_i = 1 - x``
      (grow by bumping the last part or appending a 1);
    * ``x^w(S_i) q^l(S_i) G = sum_j c_ij(x, q) B_j`` for each ``i``
      (an avoider followed by ``S_i`` splits at the first occurrence).
    """
    n_max = result.max_weight
    report = IdentityReport()

    def ser(p):
        return series_from_poly(p, n_max)

    lhs = ser(1 - X - X * Q) * result.gf
    for b in result.quasi:
        lhs = lhs + ser(1 - X) * b
    rhs = ser(1 - X)
    report.add("grow: (1-x-xq)G + (1-x)sum B = 1-x", lhs == rhs, _first_difference(lhs, rhs))

    if fset.k:
        corr = build_matrix(fset)
        for i, w in enumerate(fset):
            left = ser(BiPoly.monomial(w.weight, w.length)) * result.gf
            right = BiSeries(n_max)
            for j, b in enumerate(result.quasi):
                right = right + ser(corr[i, j]) * b
            report.add(
                f"split [{w}]: x^{w.weight} q^{w.length} G = sum_j c_{i + 1}j B_j",
                left == right,
                _first_difference(left, right),
            )
    return report
