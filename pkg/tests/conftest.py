import itertools
import random

import pytest

from hullcensus.gf_linalg import field_of_order, make_code


def span_set(f, rows, n):
    """All codewords of the span, by brute linear combination."""
    words = set()
    for coeffs in itertools.product(range(f.q), repeat=len(rows)):
        w = [0] * n
        for a, r in zip(coeffs, rows):
            w = [f.add[x][f.mul[a][y]] for x, y in zip(w, r)]
        words.add(tuple(w))
    return frozenset(words)


def all_subspaces(n, k, q):
    """Every k-dimensional subspace of GF(q)^n as a frozenset of words (tiny n only)."""
    f = field_of_order(q)
    vecs = [v for v in itertools.product(range(q), repeat=n) if any(v)]
    seen = set()
    for rows in itertools.combinations(vecs, k):
        s = span_set(f, rows, n)
        if len(s) == q**k:
            seen.add(s)
    return seen


def random_code(rng, n, k, q):
    f = field_of_order(q)
    rows = [[rng.randrange(q) for _ in range(n)] for _ in range(k)]
    return make_code(f, rows, n)


@pytest.fixture
def rng():
    return random.Random(20240611)


ACCEPTANCE_LINES: dict = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for key in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[key])
