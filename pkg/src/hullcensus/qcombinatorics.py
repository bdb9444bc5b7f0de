"""Exact integer helpers and Gaussian binomial coefficients.

Counts are plain Python ints and exact ratios are ``fractions.Fraction``.
Every product formula is evaluated in rational arithmetic and converted back
to an integer through :func:`to_count`, which refuses to round.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


class IntegralityError(ArithmeticError):
    """A division that should have been exact was not."""

    def __init__(self, numerator, denominator, context: str = ""):
        self.numerator = numerator
        self.denominator = denominator
        msg = f"{numerator} is not divisible by {denominator}"
        super().__init__(f"{context}: {msg}" if context else msg)


def q_power(q: int, e: int) -> int:
    if e < 0:
        raise ValueError("negative exponent; use Fraction")
    return q**e


def exact_div(a: int, b: int) -> int:
    if b == 0:
        raise ZeroDivisionError(f"exact_div({a}, 0)")
    quot, rem = divmod(a, b)
    if rem:
        raise IntegralityError(a, b)
    return quot


def to_count(x: Fraction | int, context: str = "") -> int:
    """Convert an exact rational to a nonnegative int, or raise."""
    x = Fraction(x)
    if x.denominator != 1:
        raise IntegralityError(x.numerator, x.denominator, context)
    if x < 0:
        raise ArithmeticError(f"{context}: negative count {x}")
    return x.numerator


@lru_cache(maxsize=None)
def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of GF(q)^n."""
    if q < 2:
        raise ValueError("q must be at least 2")
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return 1
    if k > n:
        return 0
    k = min(k, n - k)
    r = 1
    for i in range(k):
        # after step i, r == [n; i+1]_q
        r = exact_div(r * (q ** (n - i) - 1), q ** (i + 1) - 1)
    return r


def gaussian_identity_suite(n: int, k: int, q: int) -> bool:
    """Check symmetry and the three step recurrences at (n, k)."""
    if not 0 <= k <= n - 1:
        raise ValueError(f"need 0 <= k <= n-1, got n={n}, k={k}")
    g = gaussian_binomial
    base = g(n, k, q)
    return (
        g(n, n - k, q) == base
        and g(n + 1, k, q) * (q ** (n - k + 1) - 1) == (q ** (n + 1) - 1) * base
        and g(n, k + 1, q) * (q ** (k + 1) - 1) == (q ** (n - k) - 1) * base
        and g(n + 1, k + 1, q) * (q ** (k + 1) - 1) == (q ** (n + 1) - 1) * base
    )


def subspace_count_by_bases(n: int, k: int, q: int) -> int:
    """Ordered bases of k-subspaces divided by |GL_k(q)|; a second route to [n; k]_q."""
    num = 1
    den = 1
    for i in range(k):
        num *= q**n - q**i
        den *= q**k - q**i
    return exact_div(num, den)
