"""Small finite fields and the matrix algebra used to handle linear codes.

Field elements are integers ``0..q-1``: the base-``p`` digits of an element
(least significant first) are the coefficients of its polynomial-basis
representation.  All arithmetic goes through precomputed tables.

Over GF(2) a matrix row is also available as a bitmask in which column 0
is the most significant of ``n`` bits, so that comparing two rows as
integers is the same as comparing them lexicographically.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

MAX_ORDER = 32
MAX_CODEWORDS = 2**24

#: Monic irreducible polynomials, little-endian coefficients.
IRREDUCIBLE = {
    (2, 2): (1, 1, 1),  # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),  # x^3 + x + 1
    (3, 2): (1, 0, 1),  # x^2 + 1
    (2, 4): (1, 1, 0, 0, 1),  # x^4 + x + 1
    (5, 2): (2, 0, 1),  # x^2 + 2
    (3, 3): (1, 2, 0, 1),  # x^3 + 2x + 1
    (2, 5): (1, 0, 1, 0, 0, 1),  # x^5 + x^2 + 1
}


class FieldError(ValueError):
    pass


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


@dataclass(frozen=True)
class FieldSpec:
    p: int
    e: int
    q: int
    add: tuple = dc_field(repr=False)
    mul: tuple = dc_field(repr=False)
    neg: tuple = dc_field(repr=False)
    inv: tuple = dc_field(repr=False)
    eta: tuple = dc_field(repr=False)

    @property
    def minus_one(self) -> int:
        return self.neg[1]

    def sub(self, a: int, b: int) -> int:
        return self.add[a][self.neg[b]]

    def power(self, a: int, k: int) -> int:
        r = 1
        for _ in range(k):
            r = self.mul[r][a]
        return r

    def dot(self, u: Sequence[int], v: Sequence[int]) -> int:
        add, mul = self.add, self.mul
        s = 0
        for a, b in zip(u, v):
            if a and b:
                s = add[s][mul[a][b]]
        return s


def _poly_tables(p: int, e: int):
    q = p**e

    def digits(x):
        return [(x // p**i) % p for i in range(e)]

    def index(d):
        return sum(c * p**i for i, c in enumerate(d))

    modulus = IRREDUCIBLE.get((p, e), (0, 1))
    add = [[index([(a + b) % p for a, b in zip(digits(x), digits(y))])
            for y in range(q)] for x in range(q)]
    mul = [[0] * q for _ in range(q)]
    for x in range(q):
        dx = digits(x)
        for y in range(q):
            dy = digits(y)
            prod = [0] * (2 * e - 1)
            for i, a in enumerate(dx):
                for j, b in enumerate(dy):
                    prod[i + j] = (prod[i + j] + a * b) % p
            for deg in range(2 * e - 2, e - 1, -1):
                c = prod[deg]
                if c:
                    for i, m in enumerate(modulus):
                        prod[deg - e + i] = (prod[deg - e + i] - c * m) % p
            mul[x][y] = index(prod[:e])
    return add, mul


def _check_axioms(f: FieldSpec) -> None:
    q, add, mul = f.q, f.add, f.mul
    r = range(q)
    for a in r:
        if add[a][0] != a or mul[a][1] != a:
            raise FieldError(f"identity fails at {a} in GF({q})")
        if a and mul[a][f.inv[a]] != 1:
            raise FieldError(f"{a} has no inverse in GF({q})")
        for b in r:
            if add[a][b] != add[b][a] or mul[a][b] != mul[b][a]:
                raise FieldError(f"commutativity fails in GF({q})")
            for c in r:
                if add[add[a][b]][c] != add[a][add[b][c]]:
                    raise FieldError(f"additive associativity fails in GF({q})")
                if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                    raise FieldError(f"multiplicative associativity fails in GF({q})")
                if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                    raise FieldError(f"distributivity fails in GF({q})")


@lru_cache(maxsize=None)
def make_field(p: int, e: int = 1) -> FieldSpec:
    """Build GF(p^e) with full tables, verifying the field axioms exhaustively."""
    if not _is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if e < 1 or p**e > MAX_ORDER:
        raise FieldError(f"order {p}^{e} outside 2..{MAX_ORDER}")
    if e > 1 and (p, e) not in IRREDUCIBLE:
        raise FieldError(f"no irreducible polynomial registered for GF({p}^{e})")
    q = p**e
    add, mul = _poly_tables(p, e)
    neg = [next(b for b in range(q) if add[a][b] == 0) for a in range(q)]
    inv = [0] + [next((b for b in range(1, q) if mul[a][b] == 1), 0) for a in range(1, q)]
    squares = {mul[a][a] for a in range(1, q)}
    eta = [0] + [1 if a in squares else -1 for a in range(1, q)]
    f = FieldSpec(p, e, q, tuple(map(tuple, add)), tuple(map(tuple, mul)),
                  tuple(neg), tuple(inv), tuple(eta))
    _check_axioms(f)
    return f


def field_of_order(q: int) -> FieldSpec:
    for p in range(2, q + 1):
        if q % p == 0:
            e, r = 0, q
            while r % p == 0:
                r //= p
                e += 1
            if r != 1:
                raise FieldError(f"{q} is not a prime power")
            return make_field(p, e)
    raise FieldError(f"invalid field order {q}")


@dataclass(frozen=True)
class GFMatrix:
    field: FieldSpec
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match shape")
        if any(not 0 <= x < self.field.q for x in self.entries):
            raise ValueError(f"entries must lie in 0..{self.field.q - 1}")

    @classmethod
    def from_rows(cls, f: FieldSpec, rows: Iterable[Sequence[int]], cols: int | None = None) -> "GFMatrix":
        rows = [tuple(int(x) for x in r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cols required for an empty matrix")
            cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(f, len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def parse(cls, f: FieldSpec, text: str) -> "GFMatrix":
        """``"1100 0011"`` -> 2x4 matrix (one digit per entry, q <= 10)."""
        rows = [[int(ch) for ch in word] for word in text.split()]
        return cls.from_rows(f, rows)

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[tuple]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> "GFMatrix":
        return GFMatrix.from_rows(self.field, zip(*self.to_rows()), self.rows) if self.rows else \
            GFMatrix(self.field, self.cols, 0, ())

    def __matmul__(self, other: "GFMatrix") -> "GFMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        f = self.field
        cols = list(zip(*other.to_rows())) if other.rows else [()] * other.cols
        out = [[f.dot(r, c) for c in cols] for r in self.to_rows()]
        return GFMatrix.from_rows(f, out, other.cols)

    def __str__(self) -> str:
        return "\n".join("".join(str(x) for x in r) for r in self.to_rows())


def rref_rows(f: FieldSpec, rows: Sequence[Sequence[int]], ncols: int):
    """Reduced row echelon form of a list of rows; zero rows dropped."""
    m = [list(r) for r in rows]
    add, mul, neg, inv = f.add, f.mul, f.neg, f.inv
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        s = inv[m[r][c]]
        if s != 1:
            m[r] = [mul[s][x] for x in m[r]]
        pr = m[r]
        for i in range(len(m)):
            a = m[i][c]
            if i != r and a:
                na = neg[a]
                m[i] = [add[x][mul[na][y]] for x, y in zip(m[i], pr)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [tuple(x) for x in m[:r]], tuple(pivots)


def rref(m: GFMatrix) -> tuple[GFMatrix, int, tuple]:
    rows, pivots = rref_rows(m.field, m.to_rows(), m.cols)
    return GFMatrix.from_rows(m.field, rows, m.cols), len(pivots), pivots


def rank_rows(f: FieldSpec, rows, ncols: int) -> int:
    return len(rref_rows(f, rows, ncols)[1])


# -- GF(2) bitmask helpers ---------------------------------------------------

def pack_row(row: Sequence[int]) -> int:
    x = 0
    for b in row:
        x = (x << 1) | b
    return x


def unpack_row(x: int, n: int) -> tuple:
    return tuple((x >> (n - 1 - j)) & 1 for j in range(n))


def rref_bits(rows: Iterable[int]) -> tuple:
    """RREF over GF(2) of bitmask rows; returns nonzero rows, leading bit first."""
    basis: list[int] = []
    for r in rows:
        for b in basis:
            if r ^ b < r:
                r ^= b
        if r:
            lead = 1 << (r.bit_length() - 1)
            basis = [b ^ r if b & lead else b for b in basis]
            basis.append(r)
    basis.sort(reverse=True)
    return tuple(basis)


def rank_bits(rows: Iterable[int]) -> int:
    basis: list[int] = []
    for r in rows:
        for b in basis:
            if r ^ b < r:
                r ^= b
        if r:
            basis.append(r)
            basis.sort(reverse=True)
    return len(basis)


def hull_dim_bits(rows: Sequence[int]) -> int:
    """k - rank(G G^T) with the Gram matrix built from popcount parities."""
    k = len(rows)
    gram = []
    for a in rows:
        g = 0
        for b in rows:
            g = (g << 1) | ((a & b).bit_count() & 1)
        gram.append(g)
    return k - rank_bits(gram)


# -- codes -------------------------------------------------------------------

@dataclass(frozen=True)
class CodeHandle:
    """A linear [n, k]_q code, held by its RREF generator matrix."""
    generator: GFMatrix
    n: int
    k: int

    @property
    def field(self) -> FieldSpec:
        return self.generator.field

    @property
    def rows(self) -> list[tuple]:
        return self.generator.to_rows()

    def packed(self) -> tuple:
        """Rows as GF(2) bitmasks; only valid for q = 2."""
        if self.field.q != 2:
            raise ValueError("bitmask rows only exist over GF(2)")
        return tuple(pack_row(r) for r in self.rows)

    def key(self) -> tuple:
        return tuple(self.rows)


def make_code(f: FieldSpec, rows: Iterable[Sequence[int]], n: int | None = None) -> CodeHandle:
    rows = [tuple(r) for r in rows]
    if n is None:
        if not rows:
            raise ValueError("length required for the zero code")
        n = len(rows[0])
    red, _ = rref_rows(f, rows, n)
    return CodeHandle(GFMatrix.from_rows(f, red, n), n, len(red))


def code_from_string(f: FieldSpec, text: str) -> CodeHandle:
    return make_code(f, GFMatrix.parse(f, text).to_rows())


def gram_matrix(c: CodeHandle) -> GFMatrix:
    g = c.generator
    return g @ g.transpose()


def hull_dimension(c: CodeHandle) -> int:
    if c.k == 0:
        return 0
    if c.field.q == 2:
        return hull_dim_bits(c.packed())
    f = c.field
    rows = c.rows
    gram = [[f.dot(a, b) for b in rows] for a in rows]
    return c.k - rank_rows(f, gram, c.k)


def null_space_rows(f: FieldSpec, rows: Sequence[Sequence[int]], n: int) -> list[tuple]:
    red, pivots = rref_rows(f, rows, n)
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = f.neg[red[i][fc]]
        basis.append(tuple(v))
    return basis


def dual_code(c: CodeHandle) -> CodeHandle:
    return make_code(c.field, null_space_rows(c.field, c.rows, c.n), c.n)


def hull_dimension_by_intersection(c: CodeHandle) -> int:
    """dim(C ∩ C⊥) = k + (n - k) - rank([G; H]); independent of the Gram route."""
    f = c.field
    h = null_space_rows(f, c.rows, c.n)
    return c.k + len(h) - rank_rows(f, list(c.rows) + h, c.n)


def hull_code(c: CodeHandle) -> CodeHandle:
    """Explicit basis of C ∩ C⊥: solve x·G whose image lies in C⊥."""
    f = c.field
    if c.k == 0:
        return c
    rows = c.rows
    gram = [[f.dot(a, b) for b in rows] for a in rows]
    coeffs = null_space_rows(f, gram, c.k)
    words = []
    for x in coeffs:
        w = [0] * c.n
        for a, r in zip(x, rows):
            if a:
                w = [f.add[u][f.mul[a][v]] for u, v in zip(w, r)]
        words.append(w)
    return make_code(f, words, c.n)


def codewords(c: CodeHandle):
    """Iterate all q^k codewords (as tuples; as bitmasks when q = 2)."""
    if c.field.q ** c.k > MAX_CODEWORDS:
        raise ValueError(f"q^k = {c.field.q}^{c.k} exceeds the sweep bound {MAX_CODEWORDS}")
    if c.field.q == 2:
        rows = c.packed()
        w = 0
        yield w
        for i in range(1, 1 << c.k):
            # Gray code: flip the row indexed by the lowest set bit of i
            w ^= rows[(i & -i).bit_length() - 1]
            yield w
        return
    f = c.field
    rows = c.rows
    for coeffs in product(range(f.q), repeat=c.k):
        w = [0] * c.n
        for a, r in zip(coeffs, rows):
            if a:
                w = [f.add[u][f.mul[a][v]] for u, v in zip(w, r)]
        yield tuple(w)


def _weight(w) -> int:
    return w.bit_count() if isinstance(w, int) else sum(1 for x in w if x)


def min_distance(c: CodeHandle) -> int:
    """Minimum nonzero weight; the zero code gets n + 1 by convention."""
    best = c.n + 1
    for w in codewords(c):
        wt = _weight(w)
        if 0 < wt < best:
            best = wt
            if best == 1:
                break
    return best


def dual_distance(c: CodeHandle) -> int:
    return min_distance(dual_code(c))


def has_zero_column(c: CodeHandle) -> bool:
    return any(all(r[j] == 0 for r in c.rows) for j in range(c.n))


def is_even(c: CodeHandle) -> bool:
    if c.field.q != 2:
        raise ValueError("evenness is defined here for binary codes only")
    return all(sum(r) % 2 == 0 for r in c.rows)


def is_self_orthogonal(c: CodeHandle) -> bool:
    return hull_dimension(c) == c.k


def is_lcd(c: CodeHandle) -> bool:
    return hull_dimension(c) == 0
