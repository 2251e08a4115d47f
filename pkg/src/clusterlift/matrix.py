"""Labeled integer matrices, exchange-matrix mutation, rank and symmetrizers."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

from clusterlift.errors import MalformedSeed, NotMutable, NotSkewSymmetrizable


class IntMatrix:
    """Integer matrix whose rows and columns are indexed by string labels."""

    __slots__ = ("rows", "cols", "entries", "_rindex", "_cindex")

    def __init__(self, rows: Sequence[str], cols: Sequence[str], entries: Sequence[Sequence[int]]):
        self.rows = tuple(str(r) for r in rows)
        self.cols = tuple(str(c) for c in cols)
        if len(set(self.rows)) != len(self.rows) or len(set(self.cols)) != len(self.cols):
            raise MalformedSeed("duplicate row or column label")
        ent = tuple(tuple(int(x) for x in row) for row in entries)
        if len(ent) != len(self.rows) or any(len(r) != len(self.cols) for r in ent):
            raise MalformedSeed(
                f"matrix entries must be {len(self.rows)} x {len(self.cols)}"
            )
        self.entries = ent
        self._rindex = {r: i for i, r in enumerate(self.rows)}
        self._cindex = {c: j for j, c in enumerate(self.cols)}

    @classmethod
    def from_function(cls, rows: Sequence[str], cols: Sequence[str], f) -> "IntMatrix":
        return cls(rows, cols, [[f(r, c) for c in cols] for r in rows])

    @classmethod
    def zeros(cls, rows: Sequence[str], cols: Sequence[str]) -> "IntMatrix":
        return cls(rows, cols, [[0] * len(cols) for _ in rows])

    def __getitem__(self, key: tuple[str, str]) -> int:
        r, c = key
        return self.entries[self._rindex[r]][self._cindex[c]]

    def get(self, r: str, c: str, default: int = 0) -> int:
        i, j = self._rindex.get(r), self._cindex.get(c)
        if i is None or j is None:
            return default
        return self.entries[i][j]

    def row(self, r: str) -> dict[str, int]:
        return dict(zip(self.cols, self.entries[self._rindex[r]]))

    def col(self, c: str) -> dict[str, int]:
        j = self._cindex[c]
        return {r: row[j] for r, row in zip(self.rows, self.entries)}

    def restrict(self, rows: Iterable[str], cols: Iterable[str]) -> "IntMatrix":
        rows, cols = list(rows), list(cols)
        return IntMatrix(rows, cols, [[self[r, c] for c in cols] for r in rows])

    def stack(self, other: "IntMatrix") -> "IntMatrix":
        """Vertical concatenation; both must share column labels."""
        if other.cols != self.cols:
            raise MalformedSeed("column labels differ in stack")
        return IntMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if set(self.cols) != set(other.rows):
            raise MalformedSeed("inner labels differ in product")
        return IntMatrix.from_function(
            self.rows, other.cols, lambda r, c: sum(self[r, m] * other[m, c] for m in self.cols)
        )

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, [[-x for x in row] for row in self.entries])

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows, list(zip(*self.entries)) if self.rows else [[] for _ in self.cols])

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self.entries == other.entries

    def same_entries(self, other: "IntMatrix") -> bool:
        """Equality of labeled entries regardless of row and column order."""
        if set(self.rows) != set(other.rows) or set(self.cols) != set(other.cols):
            return False
        return all(self[r, c] == other[r, c] for r in self.rows for c in self.cols)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"IntMatrix(rows={list(self.rows)}, cols={list(self.cols)}, entries={[list(r) for r in self.entries]})"

    def to_dict(self) -> dict:
        return {"rows": list(self.rows), "cols": list(self.cols), "entries": [list(r) for r in self.entries]}

    @classmethod
    def from_dict(cls, d: Mapping) -> "IntMatrix":
        try:
            return cls(d["rows"], d["cols"], d["entries"])
        except (KeyError, TypeError) as e:
            raise MalformedSeed(f"bad matrix document: {e}") from None


class ExchangeMatrix(IntMatrix):
    """Extended exchange matrix: rows are all vertices, columns the unfrozen ones."""

    __slots__ = ()

    def __init__(self, rows, cols, entries):
        super().__init__(rows, cols, entries)
        missing = [c for c in self.cols if c not in self._rindex]
        if missing:
            raise MalformedSeed(f"column vertices {missing} are not rows")

    @classmethod
    def coerce(cls, m: IntMatrix) -> "ExchangeMatrix":
        return m if isinstance(m, ExchangeMatrix) else cls(m.rows, m.cols, m.entries)

    def principal_part(self) -> IntMatrix:
        return self.restrict(self.cols, self.cols)


def mutate_matrix(B: ExchangeMatrix, k: str) -> ExchangeMatrix:
    """Matrix mutation at the column vertex ``k``."""
    if k not in B._cindex:
        raise NotMutable(f"vertex {k!r} is not mutable", vertex=k)
    kc = B._cindex[k]
    kr = B._rindex[k]
    rowk = B.entries[kr]
    out = []
    for i, row in enumerate(B.entries):
        bik = row[kc]
        if i == kr:
            out.append([-x for x in row])
            continue
        new = []
        for j, bij in enumerate(row):
            if j == kc:
                new.append(-bij)
                continue
            bkj = rowk[j]
            if bik > 0 and bkj > 0:
                bij += bik * bkj
            elif bik < 0 and bkj < 0:
                bij -= bik * bkj
            new.append(bij)
        out.append(new)
    return ExchangeMatrix(B.rows, B.cols, out)


def rank(entries: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals by fraction-free Gaussian elimination."""
    M = [list(r) for r in entries]
    if not M or not M[0]:
        return 0
    nrows, ncols = len(M), len(M[0])
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        p = M[r][c]
        for i in range(r + 1, nrows):
            a = M[i][c]
            M[i] = [(p * M[i][j] - a * M[r][j]) // prev for j in range(ncols)]
        prev = p
        r += 1
        if r == nrows:
            break
    return r


def determinant(entries: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by the Bareiss algorithm."""
    M = [list(r) for r in entries]
    n = len(M)
    if any(len(r) != n for r in M):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    sign, prev = 1, 1
    for c in range(n - 1):
        piv = next((i for i in range(c, n) if M[i][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            sign = -sign
        p = M[c][c]
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                M[i][j] = (p * M[i][j] - M[i][c] * M[c][j]) // prev
        prev = p
    return sign * M[n - 1][n - 1]


def inverse_unimodular(entries: Sequence[Sequence[int]]) -> list[list[int]]:
    """Exact inverse of an integer matrix with determinant ±1."""
    n = len(entries)
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(entries)]
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        M[c], M[piv] = M[piv], M[c]
        p = M[c][c]
        M[c] = [x / p for x in M[c]]
        for i in range(n):
            if i != c and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    inv = [row[n:] for row in M]
    if any(x.denominator != 1 for row in inv for x in row):
        raise ValueError("matrix is not unimodular")
    return [[int(x) for x in row] for row in inv]


def is_maximal_rank(B: IntMatrix) -> bool:
    """True iff the columns of ``B`` are linearly independent."""
    return rank(B.entries) == len(B.cols)


def skew_symmetrizer(B: IntMatrix) -> dict[str, int]:
    """Minimal positive integers d with d_i b_ij = -d_j b_ji on the principal part.

    ``B`` may be the full extended matrix; only rows that are also columns
    are used.  Ratios are propagated along the graph of nonzero entries and
    every edge is re-checked afterwards, which catches inconsistent cycles.
    """
    cols = list(B.cols)
    for i in cols:
        if B[i, i] != 0:
            raise NotSkewSymmetrizable(f"diagonal entry b[{i},{i}] = {B[i, i]} is nonzero")
    for a in cols:
        for b in cols:
            x, y = B[a, b], B[b, a]
            if (x == 0) != (y == 0) or (x != 0 and (x > 0) == (y > 0)):
                raise NotSkewSymmetrizable(f"sign condition fails at ({a},{b}): {x}, {y}")
    ratio: dict[str, Fraction] = {}
    components: list[list[str]] = []
    for start in cols:
        if start in ratio:
            continue
        ratio[start] = Fraction(1)
        comp, stack = [start], [start]
        while stack:
            i = stack.pop()
            for j in cols:
                bij = B[i, j]
                if bij == 0 or j in ratio:
                    continue
                # d_j = -d_i b_ij / b_ji
                ratio[j] = ratio[i] * Fraction(-bij, B[j, i])
                comp.append(j)
                stack.append(j)
        components.append(comp)
    for i in cols:
        for j in cols:
            if ratio[i] * B[i, j] != -ratio[j] * B[j, i]:
                raise NotSkewSymmetrizable(f"inconsistent cycle through ({i},{j})")
    d: dict[str, int] = {}
    for comp in components:
        den = lcm(*(ratio[v].denominator for v in comp))
        ints = [int(ratio[v] * den) for v in comp]
        g = gcd(*ints)
        for v, x in zip(comp, ints):
            d[v] = x // g
    return {v: d[v] for v in cols}
