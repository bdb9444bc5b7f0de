"""Exhaustive enumeration of [n, k]_q codes through their RREF generators.

Every k-dimensional subspace of GF(q)^n has exactly one generator matrix in
reduced row echelon form.  Enumeration runs pivot-set major: pivot column
sets in lexicographic order, then the free cells (row-major, last cell
fastest) as an odometer over 0..q-1.  The position of a pivot set in that
order is its shard id.

Rows handed to visitors are *packed*: bitmask ints over GF(2) (column 0 is
the most significant bit), tuples of field elements otherwise.
"""
from __future__ import annotations

import json
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, product
from pathlib import Path
from typing import Callable, Iterable, Iterator, Sequence

from .gf_linalg import (CodeHandle, GFMatrix, field_of_order, hull_dim_bits, rank_rows,
                        unpack_row, dual_distance, min_distance, is_even)
from .hull_census import HullSpectrum
from .qcombinatorics import gaussian_binomial

DEFAULT_GUARD = 10**9
CHECKPOINT_SCHEMA = 1


class GuardExceeded(RuntimeError):
    def __init__(self, needed: int, guard: int):
        self.needed = needed
        self.guard = guard
        super().__init__(f"enumeration would visit {needed} subspaces; guard is {guard}")


def pivot_sets(n: int, k: int) -> list[tuple]:
    return list(combinations(range(n), k))


def _row_choices(n: int, q: int, pivots: Sequence[int]) -> list[list]:
    pset = set(pivots)
    out = []
    for p in pivots:
        free = [c for c in range(p + 1, n) if c not in pset]
        if q == 2:
            base = 1 << (n - 1 - p)
            bits = [1 << (n - 1 - c) for c in free]
            opts = []
            for v in range(1 << len(free)):
                x = base
                for j, b in enumerate(bits):
                    if (v >> (len(free) - 1 - j)) & 1:
                        x |= b
                opts.append(x)
        else:
            opts = []
            for digits in product(range(q), repeat=len(free)):
                row = [0] * n
                row[p] = 1
                for c, d in zip(free, digits):
                    row[c] = d
                opts.append(tuple(row))
        out.append(opts)
    return out


def iter_shard(n: int, k: int, q: int, pivots: Sequence[int]) -> Iterator[tuple]:
    if k == 0:
        yield ()
        return
    yield from product(*_row_choices(n, q, pivots))


def iter_rref(n: int, k: int, q: int, shards: Iterable[int] | None = None) -> Iterator[tuple]:
    sets = pivot_sets(n, k)
    for s in (range(len(sets)) if shards is None else shards):
        yield from iter_shard(n, k, q, sets[s])


def check_guard(n: int, k: int, q: int, guard: int = DEFAULT_GUARD) -> int:
    need = gaussian_binomial(n, k, q)
    if need > guard:
        raise GuardExceeded(need, guard)
    return need


def enumerate_rref(n: int, k: int, q: int, visitor: Callable[[tuple], object] | None = None,
                   guard: int = DEFAULT_GUARD, shards: Iterable[int] | None = None) -> int:
    """Visit every k-subspace once via its packed RREF rows; return the visit count."""
    check_guard(n, k, q, guard)
    count = 0
    for rows in iter_rref(n, k, q, shards):
        if visitor is not None:
            visitor(rows)
        count += 1
    return count


def packed_to_code(rows: tuple, n: int, q: int) -> CodeHandle:
    f = field_of_order(q)
    full = [unpack_row(r, n) for r in rows] if q == 2 else list(rows)
    return CodeHandle(GFMatrix.from_rows(f, full, n), n, len(rows))


def packed_hull_dim(rows: tuple, q: int) -> int:
    if q == 2:
        return hull_dim_bits(rows)
    f = field_of_order(q)
    gram = [[f.dot(a, b) for b in rows] for a in rows]
    return len(rows) - rank_rows(f, gram, len(rows))


def shard_tally(n: int, k: int, q: int, shard: int) -> list[int]:
    counts = [0] * (k + 1)
    piv = pivot_sets(n, k)[shard]
    if q == 2:
        for rows in iter_shard(n, k, q, piv):
            counts[hull_dim_bits(rows)] += 1
    else:
        for rows in iter_shard(n, k, q, piv):
            counts[packed_hull_dim(rows, q)] += 1
    return counts


def _shard_job(args):
    return args[3], shard_tally(*args)


def _load_checkpoint(path: Path, n: int, k: int, q: int) -> dict:
    if not path.exists():
        return {}
    doc = json.loads(path.read_text())
    if (doc.get("schema"), doc.get("n"), doc.get("k"), doc.get("q")) != (CHECKPOINT_SCHEMA, n, k, q):
        raise ValueError(f"checkpoint {path} belongs to a different task")
    return {int(s): [int(c) for c in v] for s, v in doc["shards"].items()}


def _save_checkpoint(path: Path, n: int, k: int, q: int, done: dict) -> None:
    doc = {"schema": CHECKPOINT_SCHEMA, "n": n, "k": k, "q": q,
           "shards": {str(s): [str(c) for c in done[s]] for s in sorted(done)}}
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(json.dumps(doc, indent=1))
    os.replace(tmp, path)


def brute_spectrum(n: int, k: int, q: int, *, threads: int = 1, guard: int = DEFAULT_GUARD,
                   shards: Iterable[int] | None = None, checkpoint: str | os.PathLike | None = None) -> HullSpectrum:
    """Hull-dimension tally over all [n, k]_q codes (or the given shards)."""
    check_guard(n, k, q, guard)
    all_shards = range(len(pivot_sets(n, k)))
    todo = list(all_shards if shards is None else shards)
    done: dict[int, list[int]] = {}
    ckpt = Path(checkpoint) if checkpoint is not None else None
    if ckpt is not None:
        done = {s: v for s, v in _load_checkpoint(ckpt, n, k, q).items() if s in set(todo)}
    pending = [s for s in todo if s not in done]
    jobs = [(n, k, q, s) for s in pending]
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as ex:
            for s, tally in ex.map(_shard_job, jobs):
                done[s] = tally
                if ckpt is not None:
                    _save_checkpoint(ckpt, n, k, q, done)
    else:
        for job in jobs:
            s, tally = _shard_job(job)
            done[s] = tally
            if ckpt is not None:
                _save_checkpoint(ckpt, n, k, q, done)
    counts = [0] * (k + 1)
    for s in sorted(done):
        for l, c in enumerate(done[s]):
            counts[l] += c
    if shards is None and sum(counts) != gaussian_binomial(n, k, q):
        raise AssertionError(f"visited {sum(counts)} codes, expected [n; k]_q")
    return HullSpectrum(q, n, k, tuple(counts), "brute_force")


TYPE_NAMES = ("even", "SO", "LCD")


@dataclass(frozen=True)
class EnumerationTask:
    q: int
    n: int
    k: int
    min_d: int = 1
    min_dd: int = 1
    types: frozenset = field(default_factory=frozenset)  # subset of TYPE_NAMES; all must hold
    shards: tuple | None = None


def code_flags(c: CodeHandle, hull: int) -> tuple:
    flags = []
    if c.field.q == 2 and is_even(c):
        flags.append("even")
    if hull == c.k:
        flags.append("SO")
    if hull == 0:
        flags.append("LCD")
    return tuple(flags)


def brute_filtered_count(task: EnumerationTask, guard: int = DEFAULT_GUARD) -> Counter:
    """Labeled codes passing the filters, keyed by (hull_dim, flags)."""
    bad = set(task.types) - set(TYPE_NAMES)
    if bad:
        raise ValueError(f"unknown type filters {sorted(bad)}")
    if "even" in task.types and task.q != 2:
        raise ValueError("the even filter needs q = 2")
    check_guard(task.n, task.k, task.q, guard)
    out: Counter = Counter()
    for rows in iter_rref(task.n, task.k, task.q, task.shards):
        c = packed_to_code(rows, task.n, task.q)
        h = packed_hull_dim(rows, task.q)
        flags = code_flags(c, h)
        if not set(task.types) <= set(flags):
            continue
        if task.min_d > 1 and min_distance(c) < task.min_d:
            continue
        if task.min_dd > 1 and dual_distance(c) < task.min_dd:
            continue
        out[(h, flags)] += 1
    return out
