"""Closed-form counts of linear codes by hull dimension.

``A(n, k, l, q)`` is the number of (labeled) [n, k]_q codes whose hull
C ∩ C⊥ has dimension ``l``.  Three independent routes are provided:

* :func:`sendrier_count` -- alternating sum over self-orthogonal counts;
* :func:`product_count_even_q` / :func:`product_count_odd_q` -- product
  formulas split into four cases on the parities of ``n`` and ``k - l``;
* :func:`lcd_count_closed` -- the dedicated ``l = 0`` formula for odd ``q``.

All public counters accept ``0 <= k <= n`` and reduce ``k > n/2`` through
``A(n, k, l) = A(n, n-k, l)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .gf_linalg import field_of_order
from .qcombinatorics import gaussian_binomial, to_count

METHODS = ("sendrier", "product_even", "product_odd", "lcd_closed", "brute_force")


class DomainError(ValueError):
    pass


@dataclass(frozen=True)
class HullSpectrum:
    q: int
    n: int
    k: int
    counts: tuple
    method: str

    @property
    def total(self) -> int:
        return sum(self.counts)

    def as_strings(self) -> list[str]:
        return [str(c) for c in self.counts]


@dataclass(frozen=True)
class ConditionStar:
    q: int
    n: int
    holds: bool


def eta_minus_one_power(n: int, q: int) -> int:
    """η((-1)^(n/2)) for odd q and even n."""
    f = field_of_order(q)
    x = f.minus_one if (n // 2) % 2 else 1
    return f.eta[x]


def condition_star(n: int, q: int) -> ConditionStar:
    holds = q % 2 == 1 and n % 4 == 2 and field_of_order(q).eta[field_of_order(q).minus_one] == -1
    return ConditionStar(q, n, holds)


def is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = next(d for d in range(2, q + 1) if q % d == 0)
    while q % p == 0:
        q //= p
    return q == 1


def _check(n: int, k: int, l: int, q: int) -> None:
    if not is_prime_power(q) or n < 1:
        raise DomainError(f"need a prime power q and n >= 1, got q={q}, n={n}")
    if not 0 <= k <= n:
        raise DomainError(f"need 0 <= k <= n, got n={n}, k={k}")
    if not 0 <= l <= k:
        raise DomainError(f"need 0 <= l <= k, got k={k}, l={l}")


def _half(x: int) -> int:
    if x % 2:
        raise ArithmeticError(f"odd exponent numerator {x}")
    return x // 2


def _qp(q: int, e: int) -> Fraction:
    return Fraction(q) ** e


@lru_cache(maxsize=None)
def sigma(n: int, k: int, q: int) -> int:
    """Number of self-orthogonal [n, k]_q codes."""
    m = n // 2
    if not is_prime_power(q):
        raise DomainError(f"q must be a prime power, got {q}")
    if not 0 <= k <= m:
        raise DomainError(f"sigma needs 0 <= k <= floor(n/2), got n={n}, k={k}")
    if k == 0:
        return 1
    pi = Fraction(1)
    for i in range(1, k + 1):
        pi *= Fraction(q ** (2 * m - 2 * i + 2) - 1, q**i - 1)
    if n % 2:
        val = pi
    elif q % 2 == 0:
        val = Fraction(q ** (n - k) - 1, q**n - 1) * pi
    elif n % 4 == 2 and q % 4 == 3:
        val = Fraction(q ** (m - k) - 1, q**m - 1) * pi
    else:
        val = Fraction(q ** (m - k) + 1, q**m + 1) * pi
    return to_count(val, f"sigma({n},{k},{q})")


def _reduce(n: int, k: int, l: int, q: int):
    """Apply duality; return reduced k or None when the count is zero."""
    _check(n, k, l, q)
    if k > n - k:
        k = n - k
    if l > k:
        return None
    return k


@lru_cache(maxsize=None)
def sendrier_count(n: int, k: int, l: int, q: int) -> int:
    k = _reduce(n, k, l, q)
    if k is None:
        return 0
    g = gaussian_binomial
    total = 0
    for i in range(l, k + 1):
        term = g(n - 2 * i, k - i, q) * g(i, l, q) * q ** comb(i - l, 2) * sigma(n, i, q)
        total += -term if (i - l) % 2 else term
    if total < 0:
        raise ArithmeticError(f"negative alternating sum at {(n, k, l, q)}")
    return total


# -- even q ------------------------------------------------------------------
# Each branch receives (n, k, l, q, k0) and returns a Fraction.

def _even_prod(n, l, q, k0, shift):
    p = Fraction(1)
    for i in range(1, l + 1):
        p *= Fraction(q ** (n - k0 - i) - q ** (i - 1 + shift), (q**i - 1)) / _qp(q, k0 + i - 1)
    return p


def _even_n_even_k0_odd(n, k, l, q, k0):
    return (_even_prod(n, l, q, k0, 0)
            * _qp(q, _half(n * k0 - k0 * k0 + n - 1))
            * gaussian_binomial(n // 2 - 1, (k0 - 1) // 2, q * q))


def _even_n_odd_k0_odd(n, k, l, q, k0):
    return (_even_prod(n, l, q, k0, 1)
            * Fraction(q ** (n - k0) - 1, q**l * (q ** (n - k - l) - 1))
            * _qp(q, _half((n - k0) * (k0 - 1)) + n - k)
            * gaussian_binomial((n - 1) // 2, (k0 - 1) // 2, q * q))


def _even_n_odd_k0_even(n, k, l, q, k0):
    return (_even_prod(n, l, q, k0, 0)
            * _qp(q, _half(k0 * (n - k0 + 1)))
            * gaussian_binomial((n - 1) // 2, k0 // 2, q * q))


def _even_n_even_k0_even(n, k, l, q, k0):
    return (_even_prod(n, l, q, k0, 1)
            * Fraction(q ** (n - l) - 1, q**l * (q ** (n - k - l) - 1))
            * _qp(q, _half(k0 * (n - k0)))
            * gaussian_binomial(n // 2 - 1, k0 // 2, q * q))


EVEN_BRANCHES = {
    (0, 1): (_even_n_even_k0_odd, "even q, n even, k-l odd"),
    (1, 1): (_even_n_odd_k0_odd, "even q, n odd, k-l odd"),
    (1, 0): (_even_n_odd_k0_even, "even q, n odd, k-l even"),
    (0, 0): (_even_n_even_k0_even, "even q, n even, k-l even"),
}


def _even_unreduced_products(n, k, l, q):
    """Four-case product formula before simplification; products run to l or l-1 (needs l >= 1)."""
    k0 = k - l

    def prod(upper, shift):
        p = Fraction(1)
        for i in range(1, upper + 1):
            p *= Fraction(q ** (n - k0 - i) - q ** (i - 1 + shift), q**i - 1) / _qp(q, k0 + i - 1)
        return p

    b = (n % 2, k0 % 2)
    if b == (0, 1):
        return prod(l, 0) * _qp(q, _half(n * k0 - k0 * k0 + n - 1)) * gaussian_binomial(n // 2 - 1, (k0 - 1) // 2, q * q)
    if b == (1, 1):
        return (prod(l - 1, 1) * _qp(q, _half((n - k0) * (k0 - 1)) + n - k)
                * Fraction(q ** (n - k0) - 1, (q**l - 1)) / _qp(q, k - 1)
                * gaussian_binomial((n - 1) // 2, (k0 - 1) // 2, q * q))
    if b == (1, 0):
        return prod(l, 0) * _qp(q, _half(k0 * (n - k0 + 1))) * gaussian_binomial((n - 1) // 2, k0 // 2, q * q)
    return (prod(l - 1, 1) * _qp(q, _half(k0 * (n - k0)))
            * Fraction(q ** (n - l) - 1, (q**l - 1)) / _qp(q, k - 1)
            * gaussian_binomial(n // 2 - 1, k0 // 2, q * q))


def _even_lcd_direct(n, k, q):
    """The l = 0 four-case formula for even q."""
    b = (n % 2, k % 2)
    if b == (0, 1):
        return _qp(q, _half(n * k - k * k + n - 1)) * gaussian_binomial(n // 2 - 1, (k - 1) // 2, q * q)
    if b == (1, 1):
        return _qp(q, _half((n - k) * (k - 1)) + n - k) * gaussian_binomial((n - 1) // 2, (k - 1) // 2, q * q)
    if b == (1, 0):
        return _qp(q, _half(k * (n - k + 1))) * gaussian_binomial((n - 1) // 2, k // 2, q * q)
    return (_qp(q, _half(k * (n - k))) * Fraction(q**n - 1, q ** (n - k) - 1)
            * gaussian_binomial(n // 2 - 1, k // 2, q * q))


@lru_cache(maxsize=None)
def product_count_even_q(n: int, k: int, l: int, q: int) -> int:
    if q % 2:
        raise DomainError(f"product_count_even_q needs even q, got {q}")
    k = _reduce(n, k, l, q)
    if k is None:
        return 0
    if k == n - l:
        # only reachable as k = l = n/2; the product formula divides by zero there
        return sigma(n, l, q)
    k0 = k - l
    fn, label = EVEN_BRANCHES[(n % 2, k0 % 2)]
    return to_count(fn(n, k, l, q, k0), f"{label} at (n,k,l,q)={(n, k, l, q)}")


# -- odd q -------------------------------------------------------------------

def _odd_prod(n, l, q, k0, shift):
    p = Fraction(1)
    for i in range(1, l + 1):
        p *= Fraction(q ** (n - k0 - 2 * i + shift) - 1, q**k0 * (q**i - 1))
    return p


def _odd_n_even_k0_odd(n, k, l, q, k0):
    eta = eta_minus_one_power(n, q)
    b1 = q ** (n // 2) - eta
    return (_odd_prod(n, l, q, k0, 1) * _qp(q, _half(k0 * (n - k0) - 1)) * b1
            * gaussian_binomial(n // 2 - 1, (k0 - 1) // 2, q * q))


def _odd_n_odd_k0_odd(n, k, l, q, k0):
    return (_odd_prod(n, l, q, k0, 2) * _qp(q, _half((n - k0) * (k0 + 1)) - l)
            * gaussian_binomial((n - 1) // 2, (k0 - 1) // 2, q * q))


def _odd_n_odd_k0_even(n, k, l, q, k0):
    return (_odd_prod(n, l, q, k0, 1) * _qp(q, _half(k0 * (n - k0 + 1)))
            * gaussian_binomial((n - 1) // 2, k0 // 2, q * q))


def _odd_n_even_k0_even(n, k, l, q, k0):
    eta = eta_minus_one_power(n, q)
    b2 = Fraction(q ** (n // 2 - l) + eta, q ** (n // 2) + eta)
    return (_odd_prod(n, l, q, k0, 2) * _qp(q, _half(k0 * (n - k0))) * b2
            * gaussian_binomial(n // 2, k0 // 2, q * q))


ODD_BRANCHES = {
    (0, 1): (_odd_n_even_k0_odd, "odd q, n even, k-l odd"),
    (1, 1): (_odd_n_odd_k0_odd, "odd q, n odd, k-l odd"),
    (1, 0): (_odd_n_odd_k0_even, "odd q, n odd, k-l even"),
    (0, 0): (_odd_n_even_k0_even, "odd q, n even, k-l even"),
}


@lru_cache(maxsize=None)
def product_count_odd_q(n: int, k: int, l: int, q: int) -> int:
    if q % 2 == 0:
        raise DomainError(f"product_count_odd_q needs odd q, got {q}")
    k = _reduce(n, k, l, q)
    if k is None:
        return 0
    k0 = k - l
    fn, label = ODD_BRANCHES[(n % 2, k0 % 2)]
    return to_count(fn(n, k, l, q, k0), f"{label} at (n,k,l,q)={(n, k, l, q)}")


def product_count(n: int, k: int, l: int, q: int) -> int:
    return (product_count_even_q if q % 2 == 0 else product_count_odd_q)(n, k, l, q)


@lru_cache(maxsize=None)
def lcd_count_closed(n: int, k: int, q: int) -> int:
    """Number of LCD [n, k]_q codes for odd q."""
    if q % 2 == 0 or not is_prime_power(q):
        raise DomainError(f"lcd_count_closed needs an odd prime power q, got {q}")
    if not 0 < k < n:
        raise DomainError(f"need 0 < k < n, got n={n}, k={k}")
    b = (n % 2, k % 2)
    if b == (0, 1):
        val = (_qp(q, _half(k * (n - k) - 1)) * (q ** (n // 2) - eta_minus_one_power(n, q))
               * gaussian_binomial(n // 2 - 1, (k - 1) // 2, q * q))
    elif b == (1, 1):
        val = _qp(q, _half((k + 1) * (n - k))) * gaussian_binomial((n - 1) // 2, (k - 1) // 2, q * q)
    elif b == (1, 0):
        val = _qp(q, _half(k * (n - k + 1))) * gaussian_binomial((n - 1) // 2, k // 2, q * q)
    else:
        val = _qp(q, _half(k * (n - k))) * gaussian_binomial(n // 2, k // 2, q * q)
    return to_count(val, f"lcd_count_closed({n},{k},{q})")


def spectrum(n: int, k: int, q: int, method: str = "product") -> HullSpectrum:
    """The sequence (A(n,k,0,q), ..., A(n,k,k,q)).

    ``method`` is one of ``sendrier``, ``product`` (parity-appropriate),
    ``product_even``, ``product_odd``, ``lcd_closed`` (odd q; the l = 0 entry
    comes from the dedicated LCD formula) or ``brute_force``.
    """
    if not 1 <= k <= n - 1:
        raise DomainError(f"spectrum needs 1 <= k <= n-1, got n={n}, k={k}")
    if method == "product":
        method = "product_even" if q % 2 == 0 else "product_odd"
    if method == "brute_force":
        from .brute_oracle import brute_spectrum
        return brute_spectrum(n, k, q)
    if method == "sendrier":
        counts = [sendrier_count(n, k, l, q) for l in range(k + 1)]
    elif method == "product_even":
        counts = [product_count_even_q(n, k, l, q) for l in range(k + 1)]
    elif method == "product_odd":
        counts = [product_count_odd_q(n, k, l, q) for l in range(k + 1)]
    elif method == "lcd_closed":
        counts = [lcd_count_closed(n, k, q)] + [product_count_odd_q(n, k, l, q) for l in range(1, k + 1)]
    else:
        raise DomainError(f"unknown method {method!r}")
    if sum(counts) != gaussian_binomial(n, k, q):
        raise ArithmeticError(f"{method} spectrum for {(n, k, q)} does not sum to [n; k]_q")
    return HullSpectrum(q, n, k, tuple(counts), method)
