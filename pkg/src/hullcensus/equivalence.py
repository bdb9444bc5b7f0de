"""Monomial equivalence classes of binary and ternary codes.

The group acting on GF(q)^n is {nonzero scalings per coordinate} ⋊ S_n
(just S_n for q = 2).  A group element is written ``(scales, perm)`` and
acts on a word as "scale then permute": coordinate ``j`` is multiplied by
``scales[j]`` and then moved to position ``perm[j]``.

Classes are found by closing each not-yet-seen RREF code under a small
generating set of the group (a transposition, an n-cycle and, for q = 3,
negation of coordinate 0).  The orbit size gives ``|Aut| = |G| / |orbit|``
and the canonical form is the lexicographically least RREF in the orbit.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .brute_oracle import check_guard, iter_rref, packed_to_code
from .gf_linalg import (CodeHandle, GFMatrix, dual_distance, field_of_order, hull_dimension,
                        is_even, make_code, min_distance, rref_bits, rref_rows,
                        unpack_row)
from .hull_census import sendrier_count
from .qcombinatorics import exact_div

SUPPORTED_Q = (2, 3)
CANON_MAX_N = 10
CLASSIFY_MAX_N = {2: 8, 3: 6}
MEMORY_GUARD = 10**7
TYPES = ("linear", "even", "SO", "LCD")


class ClassificationBoundError(ValueError):
    pass


def group_order(n: int, q: int) -> int:
    return (q - 1) ** n * math.factorial(n)


def _check(n: int, q: int, limit: int) -> None:
    if q not in SUPPORTED_Q:
        raise ClassificationBoundError(f"classification supports q in {SUPPORTED_Q}, got {q}")
    if n > limit:
        raise ClassificationBoundError(f"n = {n} exceeds the orbit-search bound {limit} for q = {q}")


def _perm_table(n: int, perm: Sequence[int]) -> list[int]:
    """Bitmask image of every row under a column permutation (column j -> perm[j])."""
    src = [1 << (n - 1 - j) for j in range(n)]
    dst = [1 << (n - 1 - perm[j]) for j in range(n)]
    tab = []
    for x in range(1 << n):
        y = 0
        for s, d in zip(src, dst):
            if x & s:
                y |= d
        tab.append(y)
    return tab


def _generator_perms(n: int) -> list[list[int]]:
    if n < 2:
        return []
    swap = list(range(n))
    swap[0], swap[1] = 1, 0
    cycle = [(j + 1) % n for j in range(n)]
    return [swap] if n == 2 else [swap, cycle]


class _Action:
    """Generators of the monomial group acting on packed RREF keys."""

    def __init__(self, n: int, q: int):
        self.n, self.q = n, q
        self.field = field_of_order(q)
        perms = _generator_perms(n)
        if q == 2:
            self.tables = [_perm_table(n, p) for p in perms]
        else:
            self.perms = perms

    def images(self, key: tuple):
        if self.q == 2:
            for tab in self.tables:
                yield rref_bits([tab[r] for r in key])
            return
        f, n = self.field, self.n
        for p in self.perms:
            rows = []
            for r in key:
                new = [0] * n
                for j, x in enumerate(r):
                    new[p[j]] = x
                rows.append(new)
            yield tuple(rref_rows(f, rows, n)[0])
        if n >= 1:
            neg = f.neg
            rows = [(neg[r[0]],) + tuple(r[1:]) for r in key]
            yield tuple(rref_rows(f, rows, n)[0])

    def orbit(self, key: tuple) -> set:
        orbit = {key}
        stack = [key]
        while stack:
            x = stack.pop()
            for y in self.images(x):
                if y not in orbit:
                    orbit.add(y)
                    stack.append(y)
        return orbit


def code_key(c: CodeHandle) -> tuple:
    return c.packed() if c.field.q == 2 else tuple(c.rows)


def key_to_code(key: tuple, n: int, q: int) -> CodeHandle:
    return packed_to_code(key, n, q)


def key_bytes(key: tuple, n: int, q: int) -> bytes:
    rows = [unpack_row(r, n) for r in key] if q == 2 else key
    return bytes(x for r in rows for x in r)


class _OrbitIndex:
    def __init__(self, n: int, q: int):
        self.action = _Action(n, q)
        self.member: dict = {}

    def lookup(self, key: tuple):
        hit = self.member.get(key)
        if hit is None:
            orbit = self.action.orbit(key)
            hit = (min(orbit), len(orbit))
            if len(self.member) + len(orbit) > MEMORY_GUARD:
                self.member.clear()
            for x in orbit:
                self.member[x] = hit
        return hit


_INDEX: dict = {}


def _index(n: int, q: int) -> _OrbitIndex:
    idx = _INDEX.get((n, q))
    if idx is None:
        idx = _INDEX[(n, q)] = _OrbitIndex(n, q)
    return idx


def canonical_form(c: CodeHandle) -> GFMatrix:
    """Least RREF generator (row-major lexicographic) over the code's orbit."""
    _check(c.n, c.field.q, CANON_MAX_N)
    canon, _ = _index(c.n, c.field.q).lookup(code_key(c))
    return key_to_code(canon, c.n, c.field.q).generator


def orbit_size(c: CodeHandle) -> int:
    _check(c.n, c.field.q, CANON_MAX_N)
    return _index(c.n, c.field.q).lookup(code_key(c))[1]


def aut_order(c: CodeHandle) -> int:
    """Order of the stabilizer of the code in the monomial group."""
    return exact_div(group_order(c.n, c.field.q), orbit_size(c))


def apply_monomial(c: CodeHandle, scales: Sequence[int], perm: Sequence[int]) -> CodeHandle:
    """Image of the code under "scale then permute"."""
    f = c.field
    rows = []
    for r in c.rows:
        new = [0] * c.n
        for j, x in enumerate(r):
            new[perm[j]] = f.mul[scales[j]][x]
        rows.append(new)
    return make_code(f, rows, c.n)


@dataclass(frozen=True)
class CodeClassRecord:
    canonical_generator: GFMatrix
    n: int
    k: int
    q: int
    hull_dim: int
    min_d: int
    dual_d: int
    aut_order: int
    flags: tuple

    @property
    def orbit_size(self) -> int:
        return exact_div(group_order(self.n, self.q), self.aut_order)

    def canonical_bytes(self) -> bytes:
        return bytes(self.canonical_generator.entries)

    def generator_hex(self) -> str:
        return "".join(format(x, "x") for x in self.canonical_generator.entries)


@dataclass
class CensusTable:
    q: int
    n: int
    k: int
    cells: Counter = field(default_factory=Counter)  # (type, hull_dim) -> class count
    filters: dict = field(default_factory=dict)

    def total(self, kind: str) -> int:
        return sum(v for (t, _), v in self.cells.items() if t == kind)

    def by_hull(self, kind: str = "linear") -> list[int]:
        return [self.cells.get((kind, l), 0) for l in range(self.k + 1)]

    def totals(self) -> dict:
        kinds = TYPES if self.q == 2 else ("linear", "SO", "LCD")
        return {t: self.total(t) for t in kinds}


@dataclass
class Classification:
    records: list
    census: CensusTable


def _record(key: tuple, orbit_len: int, n: int, k: int, q: int) -> CodeClassRecord:
    c = key_to_code(key, n, q)
    h = hull_dimension(c)
    flags = []
    if q == 2 and is_even(c):
        flags.append("even")
    if h == k:
        flags.append("SO")
    if h == 0:
        flags.append("LCD")
    return CodeClassRecord(c.generator, n, k, q, h, min_distance(c), dual_distance(c),
                           exact_div(group_order(n, q), orbit_len), tuple(flags))


def all_classes(n: int, k: int, q: int, limit: int | None = None) -> list[CodeClassRecord]:
    """One record per equivalence class of [n, k]_q codes, sorted by canonical bytes."""
    _check(n, q, CLASSIFY_MAX_N.get(q, 0) if limit is None else limit)
    check_guard(n, k, q, MEMORY_GUARD)
    action = _Action(n, q)
    seen: set = set()
    records = []
    for key in iter_rref(n, k, q):
        if key in seen:
            continue
        orbit = action.orbit(key)
        seen |= orbit
        records.append(_record(min(orbit), len(orbit), n, k, q))
    records.sort(key=CodeClassRecord.canonical_bytes)
    return records


def classify(n: int, k: int, q: int, min_d: int = 1, min_dd: int = 1,
             limit: int | None = None) -> Classification:
    """Classes of [n, k]_q codes with d >= min_d and dual distance >= min_dd."""
    every = all_classes(n, k, q, limit)
    kept = [r for r in every if r.min_d >= min_d and r.dual_d >= min_dd]
    census = CensusTable(q, n, k, Counter(), {"min_d": min_d, "min_dd": min_dd})
    for r in kept:
        census.cells[("linear", r.hull_dim)] += 1
        for t in r.flags:
            census.cells[(t, r.hull_dim)] += 1
    return Classification(kept, census)


@dataclass(frozen=True)
class MassCheck:
    l: int
    labeled_total: int
    formula_total: int

    @property
    def ok(self) -> bool:
        return self.labeled_total == self.formula_total

    def __bool__(self) -> bool:
        return self.ok


def mass_formula_check(records: Iterable[CodeClassRecord], n: int, k: int, l: int, q: int) -> MassCheck:
    """Compare the sum of |G|/|Aut| over hull-dimension-l classes with A(n,k,l,q).

    ``records`` must cover every class (no distance filters).
    """
    g = group_order(n, q)
    total = sum(exact_div(g, r.aut_order) for r in records if r.hull_dim == l)
    return MassCheck(l, total, sendrier_count(n, k, l, q))


def lcd_length_recursion(b_star, n: int, k: int) -> int:
    """Unfiltered LCD class count from LCD class counts with d, d⊥ >= 2.

    ``b_star[(m, j)]`` is the number of LCD [m, j, >=2] classes with dual
    distance >= 2.  Codes with zero columns reduce to shorter codes, and a
    code with a weight-1 word splits off that coordinate, giving
    ``B(n, k) = sum_{m=k+1}^{n} B*(m, k) + B(n-1, k-1)`` with ``B(n, 0) = 1``.
    """
    if k == 0:
        return 1
    if k > n:
        return 0
    try:
        head = sum(b_star[(m, k)] for m in range(k + 1, n + 1))
    except KeyError as e:
        raise KeyError(f"missing B* entry {e.args[0]}") from None
    return head + lcd_length_recursion(b_star, n - 1, k - 1)


def lcd_length_recursion_as_printed(b_star, b_lower, n: int, k: int) -> int:
    """The recursion with ``B(n, k-1)`` as the second term; ``b_lower`` supplies it."""
    return sum(b_star[(m, k)] for m in range(k + 1, n + 1)) + b_lower[(n, k - 1)]


@dataclass(frozen=True)
class ConjectureReport:
    n: int
    k: int
    q: int
    counts: tuple  # B(n,k,l,q) for l = 0..k
    holds: bool


def conjecture_check(n: int, k: int, q: int, limit: int | None = None) -> ConjectureReport:
    """Evaluate min{B0, B1} > B2 > ... > Bk on the class counts."""
    if n < 2 * k:
        raise ValueError("the chain is stated for n >= 2k")
    every = all_classes(n, k, q, limit)
    b = Counter(r.hull_dim for r in every)
    counts = tuple(b.get(l, 0) for l in range(k + 1))
    chain = ([min(counts[0], counts[1])] if k >= 1 else [counts[0]]) + list(counts[2:])
    holds = all(a > c for a, c in zip(chain, chain[1:]))
    return ConjectureReport(n, k, q, counts, holds)


CENSUS_COLUMNS = ("n", "k", "q", "hull_dim", "d", "dual_d", "flags", "aut_order", "generator")


def census_rows(records: Iterable[CodeClassRecord]) -> list[dict]:
    rows = []
    for r in sorted(records, key=CodeClassRecord.canonical_bytes):
        rows.append({"n": r.n, "k": r.k, "q": r.q, "hull_dim": r.hull_dim, "d": r.min_d,
                     "dual_d": r.dual_d, "flags": "|".join(r.flags), "aut_order": str(r.aut_order),
                     "generator": r.generator_hex()})
    return rows
