"""Ratios between consecutive hull-dimension counts.

For ``0 <= l <= k-1`` and ``k <= n/2`` the ratio ``A(l) / A(l+1)`` equals
``alpha * (q^(l+1) - 1)`` where ``alpha`` has a closed form in four cases
per parity of ``q``.  ``mu`` is the integer floor of the ratio, computed
from the counts themselves so that the closed form for ``alpha`` can be
checked against it.
"""
from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Context, Decimal
from fractions import Fraction
from typing import Iterable

from .hull_census import DomainError, condition_star, eta_minus_one_power, sendrier_count


class DegenerateRatio(DomainError):
    """A(l+1) is zero: odd q with η((-1)^(n/2)) = -1 and l + 1 = k = n/2."""


@dataclass(frozen=True)
class RatioReport:
    q: int
    n: int
    k: int
    l: int
    alpha: Fraction
    ratio: Fraction
    mu: int
    bound: Fraction
    regime: str  # "strict": ratio > bound; "half": ratio >= bound
    branch: str

    @property
    def tight(self) -> bool:
        return self.ratio == self.bound

    @property
    def holds(self) -> bool:
        return self.ratio > self.bound if self.regime == "strict" else self.ratio >= self.bound


def _check(n: int, k: int, l: int, q: int) -> None:
    if not (1 <= k <= n // 2 and 0 <= l <= k - 1):
        raise DomainError(f"need 0 <= l <= k-1 and 1 <= k <= n/2, got n={n}, k={k}, l={l}")


def _degenerate(n: int, k: int, l: int, q: int) -> bool:
    return (q % 2 == 1 and n % 2 == 0 and l + 1 == k == n // 2
            and eta_minus_one_power(n, q) == -1)


def branch_name(n: int, k: int, l: int, q: int) -> str:
    return "{} q, n {}, k-l {}".format(
        "odd" if q % 2 else "even", "odd" if n % 2 else "even", "odd" if (k - l) % 2 else "even")


def alpha(n: int, k: int, l: int, q: int) -> Fraction:
    _check(n, k, l, q)
    if _degenerate(n, k, l, q):
        raise DegenerateRatio(
            f"A({n},{k},{l + 1},{q}) = sigma({n},{k},{q}) = 0 since n = 2 mod 4 and -1 is a nonsquare")
    n_odd, k0_odd = n % 2, (k - l) % 2
    h = n // 2
    if q % 2:
        if not n_odd and k0_odd:
            eta = eta_minus_one_power(n, q)
            return Fraction(q ** (h - 1), q ** (h - 1) + eta * q**l)
        if n_odd and k0_odd:
            return Fraction(q ** (n - k - l), q ** (n - k - l) - 1)
        if n_odd:
            return Fraction(q ** (k - l), q ** (k - l) - 1)
        eta = eta_minus_one_power(n, q)
        return Fraction(q ** (h - l) * (q ** (h - l) + eta), (q ** (n - k - l) - 1) * (q ** (k - l) - 1))
    if not n_odd and k0_odd:
        # n = 2k, l = k-1 gives q^k / (q^k - 1): the ratio is then exactly q^k
        return Fraction(q ** (n - l - 1), q ** (n - l - 1) - 1)
    if n_odd and k0_odd:
        return Fraction(q ** (n - k - l), q ** (n - k - l) - 1)
    if n_odd:
        return Fraction(q ** (k - l), q ** (k - l) - 1)
    return Fraction(q ** (n - l) - 1, q**l * (q ** (n - k - l) - 1) * (q ** (k - l) - 1))


def count_ratio(n: int, k: int, l: int, q: int) -> Fraction:
    _check(n, k, l, q)
    den = sendrier_count(n, k, l + 1, q)
    if den == 0:
        raise DegenerateRatio(f"A({n},{k},{l + 1},{q}) = 0 (no self-dual codes of this kind)")
    return Fraction(sendrier_count(n, k, l, q), den)


def mu(n: int, k: int, l: int, q: int) -> int:
    """Largest integer m with A(l) >= m * A(l+1), from exact counts."""
    _check(n, k, l, q)
    den = sendrier_count(n, k, l + 1, q)
    if den == 0:
        raise DegenerateRatio(f"A({n},{k},{l + 1},{q}) = 0; mu is unbounded")
    return sendrier_count(n, k, l, q) // den


def half_bound_regime(n: int, k: int, l: int, q: int) -> bool:
    """True where only ratio >= (q^(l+1)-1)/2 holds: odd q, n even, k-l odd, η((-1)^(n/2)) = +1."""
    return q % 2 == 1 and n % 2 == 0 and (k - l) % 2 == 1 and eta_minus_one_power(n, q) == 1


def ratio_report(n: int, k: int, l: int, q: int) -> RatioReport:
    a = alpha(n, k, l, q)
    r = count_ratio(n, k, l, q)
    base = q ** (l + 1) - 1
    half = half_bound_regime(n, k, l, q)
    return RatioReport(q, n, k, l, a, r, mu(n, k, l, q),
                       Fraction(base, 2) if half else Fraction(base),
                       "half" if half else "strict", branch_name(n, k, l, q))


def theorem_grid(qs: Iterable[int], max_n: int, min_n: int = 2):
    for q in sorted(qs):
        for n in range(min_n, max_n + 1):
            for k in range(1, n // 2 + 1):
                for l in range(k):
                    yield n, k, l, q


def verify_main_theorem(qs: Iterable[int], max_n: int, min_n: int = 2):
    """Check the ratio bound on every tuple of the grid.

    Returns ``(reports, violations, excluded)``.  A violation is any report
    whose bound fails or whose ratio differs from ``alpha * (q^(l+1) - 1)``.
    ``excluded`` lists the degenerate tuples where ``A(l+1) = 0``.
    """
    reports, violations, excluded = [], [], []
    for n, k, l, q in theorem_grid(qs, max_n, min_n):
        if _degenerate(n, k, l, q):
            excluded.append((q, n, k, l))
            continue
        rep = ratio_report(n, k, l, q)
        reports.append(rep)
        if not rep.holds or rep.ratio != rep.alpha * (q ** (l + 1) - 1):
            violations.append(rep)
    reports.sort(key=lambda r: (r.q, r.n, r.k, r.l))
    return reports, violations, excluded


def literal_condition_star_regime(n: int, k: int, l: int, q: int) -> bool:
    """Condition * together with k-l odd, read literally as the half-bound exception."""
    return condition_star(n, q).holds and (k - l) % 2 == 1


@dataclass(frozen=True)
class MuPrediction:
    kind: str  # "exact", "lower_bound" or "none"
    value: int | None
    reason: str


def predicted_mu(n: int, k: int, l: int, q: int) -> MuPrediction:
    _check(n, k, l, q)
    t = q ** (l + 1)
    n_odd, k0_odd = n % 2 == 1, (k - l) % 2 == 1
    if n_odd:
        # alpha = q^m / (q^m - 1); mu = q^(l+1) - 1 iff l + 1 < m
        m = (n - k - l) if k0_odd else (k - l)
        cond = (2 * l < n - k - 1) if k0_odd else (2 * l < k - 1)
        if cond:
            return MuPrediction("exact", t - 1, f"n odd, k-l {'odd' if k0_odd else 'even'}, l+1 < {m}")
        return MuPrediction("lower_bound", t, f"n odd, l+1 >= {m}")
    if q % 2 == 0:
        if not k0_odd:
            return MuPrediction("none", None, "even q, n even, k-l even")
        if n == 2 * k and l == k - 1:
            return MuPrediction("exact", t, "even q, n = 2k, l = k-1")
        return MuPrediction("exact", t - 1, "even q, n even, k-l odd")
    if k0_odd and eta_minus_one_power(n, q) == -1:
        if 4 * l < n - 4:
            return MuPrediction("exact", t - 1, "n = 2 mod 4, -1 nonsquare, l < n/4 - 1")
        return MuPrediction("lower_bound", t, "n = 2 mod 4, -1 nonsquare, l >= n/4 - 1")
    return MuPrediction("none", None, "no closed prediction for this case")


_DISPLAY = Context(prec=6, rounding=ROUND_HALF_UP)


def display_ratio(x: Fraction) -> str:
    """Six significant digits, ties rounded up; for display only."""
    d = _DISPLAY.divide(Decimal(x.numerator), Decimal(x.denominator))
    s = format(d.normalize(_DISPLAY), "f")
    return s
