"""Exact integer primitives shared by the counting formulas.

Everything here works on Python ints, so results are arbitrary precision.
"""

from math import comb, factorial, prod

__all__ = [
    "binomial",
    "catalan",
    "double_factorial_odd",
    "factorial",
    "rising_factorial",
]


def _check_nonneg(name, value):
    if value < 0:
        raise ValueError(f"{name} must be nonnegative, got {value}")


def rising_factorial(m, k):
    """Return ``m (m+1) ... (m+k-1)``; the empty product (``k == 0``) is 1."""
    _check_nonneg("m", m)
    _check_nonneg("k", k)
    return prod(range(m, m + k))


def double_factorial_odd(n):
    """Return ``(2n-1)!! = (2n-1)(2n-3)...3*1``, with ``(-1)!! = 1`` for n = 0."""
    _check_nonneg("n", n)
    return prod(range(2 * n - 1, 0, -2))


def binomial(n, k):
    """Binomial coefficient, zero outside ``0 <= k <= n``."""
    _check_nonneg("n", n)
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def catalan(n):
    _check_nonneg("n", n)
    return comb(2 * n, n) // (n + 1)
