"""Exact counting triangles.

Four families are tabulated:

``Z``  ordered trees on ``[0, n]`` made of a decreasing tree with ``k`` edges
       plus ``n - k`` increasing leaves,
``F``  forests on ``[1, n]`` of ``k`` ordered trees with unordered roots,
``O``  ordered trees on ``[0, n]`` whose maximal decreasing subtree has
       ``k`` edges,
``R``  rooted (unordered) labeled trees on ``[1, n]`` with ``k`` improper
       edges.

``R`` is indexed from ``n = 1``; all other triangles start at ``n = 0``.
Rows are computed bottom-up and cached, so repeated queries are cheap.
"""

import threading
from dataclasses import dataclass
from enum import Enum

from mdtrees.numeric_core import binomial, double_factorial_odd, rising_factorial

__all__ = [
    "CountTriangle",
    "IntPolynomial",
    "Kind",
    "build_triangle",
    "f_count",
    "f_count_literal",
    "o_count",
    "prescribed_root_forest_count",
    "r_count",
    "ramanujan_poly",
    "z_count",
]


class Kind(str, Enum):
    Z = "Z"
    F = "F"
    O = "O"  # noqa: E741
    R = "R"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).upper())
        except ValueError:
            raise ValueError(f"unknown triangle kind {value!r}") from None

    @property
    def first_row(self):
        return 1 if self is Kind.R else 0


class _RowCache:
    """Grow a triangle row by row; ``step(n, previous_row)`` builds row n."""

    def __init__(self, first_row, step):
        self._rows = [first_row]
        self._step = step
        self._lock = threading.Lock()

    def row(self, index):
        rows = self._rows
        if index < len(rows):
            return rows[index]
        with self._lock:
            while len(rows) <= index:
                rows.append(self._step(len(rows), rows[-1]))
        return rows[index]


def _z_step(n, prev):
    # z(n, k) = n z(n-1, k) + (n+k-1) z(n-1, k-1), for 0 <= k < n
    row = [n * prev[0]]
    for k in range(1, n):
        row.append(n * prev[k] + (n + k - 1) * prev[k - 1])
    row.append(double_factorial_odd(n))
    return tuple(row)


def _r_step(i, prev):
    # row index i holds r(i+1, .); r(n, k) = (n-1) r(n-1, k) + (n+k-2) r(n-1, k-1)
    n = i + 1
    row = []
    for k in range(n):
        same = prev[k] if k < len(prev) else 0
        lower = prev[k - 1] if k >= 1 else 0
        row.append((n - 1) * same + (n + k - 2) * lower)
    return tuple(row)


_Z_ROWS = _RowCache((1,), _z_step)
_R_ROWS = _RowCache((1,), _r_step)


def z_count(n, k):
    """Number of ordered trees on ``[0, n]`` that are a decreasing tree with
    ``k`` edges carrying ``n - k`` increasing leaves.

    The recurrence is also applied at ``k = 0``, which gives ``z(n, 0) = n!``.
    """
    if n < 0 or k < 0 or k > n:
        return 0
    return _Z_ROWS.row(n)[k]


def prescribed_root_forest_count(n_prime, k_prime):
    """Forests on ``n_prime`` labels made of ``k_prime`` ordered trees whose
    root set is fixed in advance.

    Equal to ``f_count(n', k') / binomial(n', k')`` but computed without
    division as ``k' (n'+1)(n'+2)...(2n'-k'-1)``.
    """
    if k_prime < 0 or n_prime < 0:
        raise ValueError("arguments must be nonnegative")
    if k_prime > n_prime:
        raise ValueError(f"k_prime={k_prime} exceeds n_prime={n_prime}")
    if k_prime == n_prime:
        return 1
    if k_prime == 0:
        return 0
    return k_prime * rising_factorial(n_prime + 1, n_prime - k_prime - 1)


def f_count(n, k):
    """Number of forests on ``[1, n]`` with ``k`` ordered trees and unordered
    roots.

    ``f(n, n) = 1``: the only such forest is ``n`` isolated roots.  The
    closed-form product, read literally at ``k = n``, would give ``n`` instead;
    see :func:`f_count_literal`.
    """
    if n < 0 or k < 0:
        raise ValueError("arguments must be nonnegative")
    if k > n:
        return 0
    return binomial(n, k) * prescribed_root_forest_count(n, k)


def f_count_literal(n, k):
    """``binomial(n, k) * k * (n+1)(n+2)...(2n-k-1)`` taken at face value.

    An empty or reversed product range counts as 1.  Only used to annotate
    where the literal closed form departs from :func:`f_count`.
    """
    if n < 0 or k < 0:
        raise ValueError("arguments must be nonnegative")
    return binomial(n, k) * k * rising_factorial(n + 1, max(0, n - k - 1))


def o_count(n, k):
    """Number of ordered trees on ``[0, n]`` whose maximal decreasing subtree
    has exactly ``k`` edges."""
    if n < 0 or k < 0:
        raise ValueError("arguments must be nonnegative")
    if k > n:
        raise ValueError(f"k={k} exceeds n={n}")
    if k == n:
        return double_factorial_odd(n)
    # m + 1 = number of vertices in the MD subtree plus its increasing leaves
    return sum(
        binomial(n + 1, m + 1)
        * z_count(m, k)
        * prescribed_root_forest_count(n - k, m - k)
        for m in range(k, n + 1)
    )


def r_count(n, k):
    """Number of rooted labeled trees on ``[1, n]`` with ``k`` improper edges."""
    if n < 1:
        raise ValueError(f"r(n, k) is defined for n >= 1, got n={n}")
    if k < 0 or k >= n:
        return 0
    return _R_ROWS.row(n - 1)[k]


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial; ``coefficients[i]`` multiplies ``x**i``."""

    coefficients: tuple = ()

    def __post_init__(self):
        coeffs = list(self.coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(int(c) for c in coeffs))

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def __getitem__(self, i):
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return 0

    def __add__(self, other):
        size = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial(tuple(self[i] + other[i] for i in range(size)))

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(tuple(other * c for c in self.coefficients))
        if not self.coefficients or not other.coefficients:
            return IntPolynomial()
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def derivative(self):
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coefficients))[1:])

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"IntPolynomial({list(self.coefficients)})"


_ONE_PLUS_X = IntPolynomial((1, 1))
_X_SQUARED = IntPolynomial((0, 0, 1))


def ramanujan_poly(n):
    """Ramanujan polynomial ``R_n(x)`` from
    ``R_{n+1} = n (1 + x) R_n + x^2 R_n'`` with ``R_1 = 1``."""
    if n < 1:
        raise ValueError(f"R_n is defined for n >= 1, got n={n}")
    poly = IntPolynomial((1,))
    for i in range(1, n):
        poly = i * (_ONE_PLUS_X * poly) + _X_SQUARED * poly.derivative()
    return poly


@dataclass(frozen=True)
class CountTriangle:
    """Lower-triangular table of exact counts.

    ``rows[i]`` holds row ``first_n + i``.  Entries are looked up with
    ``triangle[n, k]``.
    """

    kind: Kind
    max_n: int
    rows: tuple

    @property
    def first_n(self):
        return self.kind.first_row

    def row(self, n):
        if not self.first_n <= n <= self.max_n:
            raise IndexError(f"row {n} outside {self.first_n}..{self.max_n}")
        return self.rows[n - self.first_n]

    def __getitem__(self, key):
        n, k = key
        row = self.row(n)
        if not 0 <= k < len(row):
            raise IndexError(f"entry ({n}, {k}) outside triangle {self.kind.value}")
        return row[k]

    def __contains__(self, key):
        n, k = key
        return self.first_n <= n <= self.max_n and 0 <= k < len(self.rows[n - self.first_n])

    def entries(self):
        """Yield ``(n, k, value)`` row by row."""
        for i, row in enumerate(self.rows):
            for k, value in enumerate(row):
                yield self.first_n + i, k, value

    def row_numbers(self):
        return range(self.first_n, self.max_n + 1)


def _o_row(n):
    return tuple(o_count(n, k) for k in range(n + 1))


def build_triangle(kind, max_n):
    """Materialize rows ``first_n..max_n`` of the requested triangle.

    For ``R`` with ``max_n < 1`` the triangle is empty.
    """
    kind = Kind.parse(kind)
    if max_n < 0:
        raise ValueError(f"max_n must be nonnegative, got {max_n}")
    if kind is Kind.Z:
        rows = tuple(_Z_ROWS.row(n) for n in range(max_n + 1))
    elif kind is Kind.R:
        rows = tuple(_R_ROWS.row(n - 1) for n in range(1, max_n + 1))
    elif kind is Kind.F:
        rows = tuple(tuple(f_count(n, k) for k in range(n + 1)) for n in range(max_n + 1))
    else:
        rows = tuple(_o_row(n) for n in range(max_n + 1))
    return CountTriangle(kind, max_n, rows)
