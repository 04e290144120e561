"""Dense matrices over the rationals with explicit shape.

Zero-sized matrices are first class (a 3x0 matrix is not the same object as
a 0x3 one), which the quiver code relies on for vertices of dimension zero.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


def Q(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"refusing inexact or boolean scalar {x!r}")
    return Fraction(x)


class Mat:
    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, rows: Iterable[Sequence], nrows: int | None = None, ncols: int | None = None):
        data = tuple(tuple(Q(x) for x in r) for r in rows)
        if nrows is None:
            nrows = len(data)
        if ncols is None:
            ncols = len(data[0]) if data else 0
        if len(data) != nrows or any(len(r) != ncols for r in data):
            raise ValueError(f"ragged or mis-shaped matrix, expected {nrows}x{ncols}")
        self.nrows = nrows
        self.ncols = ncols
        self.rows = data

    # constructors

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Mat":
        z = Fraction(0)
        return cls._raw(tuple((z,) * ncols for _ in range(nrows)), nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "Mat":
        one, z = Fraction(1), Fraction(0)
        return cls._raw(tuple(tuple(one if i == j else z for j in range(n)) for i in range(n)), n, n)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: int) -> "Mat":
        return cls([[c[i] for c in cols] for i in range(nrows)], nrows, len(cols))

    @classmethod
    def _raw(cls, rows, nrows, ncols) -> "Mat":
        m = object.__new__(cls)
        m.nrows, m.ncols, m.rows = nrows, ncols, rows
        return m

    # basic protocol

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, Mat) and self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.shape, self.rows))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"Mat{self.nrows}x{self.ncols}[{body}]"

    def column(self, j: int) -> list[Fraction]:
        return [r[j] for r in self.rows]

    def columns(self) -> list[list[Fraction]]:
        return [self.column(j) for j in range(self.ncols)]

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.rows]

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    # arithmetic

    def __add__(self, other: "Mat") -> "Mat":
        self._same_shape(other)
        return Mat._raw(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)), *self.shape)

    def __sub__(self, other: "Mat") -> "Mat":
        self._same_shape(other)
        return Mat._raw(tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)), *self.shape)

    def __neg__(self) -> "Mat":
        return Mat._raw(tuple(tuple(-a for a in r) for r in self.rows), *self.shape)

    def scale(self, c) -> "Mat":
        c = Q(c)
        return Mat._raw(tuple(tuple(c * a for a in r) for r in self.rows), *self.shape)

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = other.T.rows
        z = Fraction(0)
        out = []
        for r in self.rows:
            nz = [(k, a) for k, a in enumerate(r) if a]
            out.append(tuple(sum((a * c[k] for k, a in nz), z) for c in cols))
        return Mat._raw(tuple(out), self.nrows, other.ncols)

    def apply(self, v: Sequence) -> list[Fraction]:
        if len(v) != self.ncols:
            raise ValueError("vector length mismatch")
        z = Fraction(0)
        nz = [(k, x) for k, x in enumerate(v) if x]
        return [sum((r[k] * x for k, x in nz), z) for r in self.rows]

    @property
    def T(self) -> "Mat":
        return Mat._raw(tuple(zip(*self.rows)) if self.nrows else tuple(() for _ in range(self.ncols)), self.ncols, self.nrows)

    def _same_shape(self, other: "Mat") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    # stacking

    @staticmethod
    def hstack(mats: Sequence["Mat"], nrows: int | None = None) -> "Mat":
        if not mats:
            return Mat.zeros(nrows or 0, 0)
        n = mats[0].nrows
        if any(m.nrows != n for m in mats):
            raise ValueError("hstack row mismatch")
        return Mat._raw(tuple(sum((m.rows[i] for m in mats), ()) for i in range(n)), n, sum(m.ncols for m in mats))

    @staticmethod
    def vstack(mats: Sequence["Mat"], ncols: int | None = None) -> "Mat":
        if not mats:
            return Mat.zeros(0, ncols or 0)
        n = mats[0].ncols
        if any(m.ncols != n for m in mats):
            raise ValueError("vstack column mismatch")
        return Mat._raw(sum((m.rows for m in mats), ()), sum(m.nrows for m in mats), n)

    @staticmethod
    def block_diag(mats: Sequence["Mat"]) -> "Mat":
        nr = sum(m.nrows for m in mats)
        nc = sum(m.ncols for m in mats)
        out = [[Fraction(0)] * nc for _ in range(nr)]
        r0 = c0 = 0
        for m in mats:
            for i, row in enumerate(m.rows):
                out[r0 + i][c0:c0 + m.ncols] = row
            r0 += m.nrows
            c0 += m.ncols
        return Mat(out, nr, nc)

    # elimination

    def rref(self) -> tuple["Mat", list[int]]:
        a = [list(r) for r in self.rows]
        pivots: list[int] = []
        r = 0
        for c in range(self.ncols):
            p = next((i for i in range(r, self.nrows) if a[i][c] != 0), None)
            if p is None:
                continue
            a[r], a[p] = a[p], a[r]
            inv = 1 / a[r][c]
            a[r] = [x * inv for x in a[r]]
            for i in range(self.nrows):
                if i != r and a[i][c] != 0:
                    f = a[i][c]
                    a[i] = [x - f * y for x, y in zip(a[i], a[r])]
            pivots.append(c)
            r += 1
            if r == self.nrows:
                break
        return Mat(a, self.nrows, self.ncols), pivots

    def rank(self) -> int:
        if self.nrows == 0 or self.ncols == 0:
            return 0
        # forward elimination only
        a = [list(r) for r in self.rows]
        rank = 0
        for c in range(self.ncols):
            p = next((i for i in range(rank, self.nrows) if a[i][c] != 0), None)
            if p is None:
                continue
            a[rank], a[p] = a[p], a[rank]
            piv = a[rank]
            for i in range(rank + 1, self.nrows):
                if a[i][c] != 0:
                    f = a[i][c] / piv[c]
                    a[i] = [x - f * y for x, y in zip(a[i], piv)]
            rank += 1
            if rank == self.nrows:
                break
        return rank

    def nullspace(self) -> list[list[Fraction]]:
        """Basis of {x : self x = 0}, one vector per free column."""
        R, pivots = self.rref()
        free = [c for c in range(self.ncols) if c not in set(pivots)]
        basis = []
        for f in free:
            v = [Fraction(0)] * self.ncols
            v[f] = Fraction(1)
            for i, pc in enumerate(pivots):
                v[pc] = -R.rows[i][f]
            basis.append(v)
        return basis

    def solve(self, b: Sequence) -> list[Fraction] | None:
        """One solution of ``self x = b`` or None when inconsistent."""
        aug = Mat.hstack([self, Mat([[x] for x in b], self.nrows, 1)])
        R, pivots = aug.rref()
        if pivots and pivots[-1] == self.ncols:
            return None
        x = [Fraction(0)] * self.ncols
        for i, pc in enumerate(pivots):
            x[pc] = R.rows[i][self.ncols]
        return x

    def solve_matrix(self, B: "Mat") -> "Mat":
        """X with ``self X = B``; raises ValueError when no solution exists."""
        cols = []
        for j in range(B.ncols):
            x = self.solve(B.column(j))
            if x is None:
                raise ValueError("inconsistent linear system")
            cols.append(x)
        return Mat.from_columns(cols, self.ncols)

    def inverse(self) -> "Mat":
        if self.nrows != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        R, pivots = Mat.hstack([self, Mat.identity(self.nrows)]).rref()
        if pivots[: self.nrows] != list(range(self.nrows)):
            raise ZeroDivisionError("singular matrix")
        return Mat([r[self.nrows:] for r in R.rows], self.nrows, self.nrows)

    def det(self) -> Fraction:
        if self.nrows != self.ncols:
            raise ValueError("det of a non-square matrix")
        a = [list(r) for r in self.rows]
        n = self.nrows
        d = Fraction(1)
        for c in range(n):
            p = next((i for i in range(c, n) if a[i][c] != 0), None)
            if p is None:
                return Fraction(0)
            if p != c:
                a[c], a[p] = a[p], a[c]
                d = -d
            d *= a[c][c]
            for i in range(c + 1, n):
                if a[i][c] != 0:
                    f = a[i][c] / a[c][c]
                    a[i] = [x - f * y for x, y in zip(a[i], a[c])]
        return d


def column_space_basis(m: Mat) -> list[list[Fraction]]:
    """Pivot columns of ``m``, a basis of its image."""
    _, pivots = m.rref()
    return [m.column(c) for c in pivots]


def complement_basis(vectors: Sequence[Sequence], dim: int) -> list[list[Fraction]]:
    """Standard basis vectors extending span(vectors) to the whole space.

    Greedy in index order, so the choice is deterministic.
    """
    rows = [list(map(Q, v)) for v in vectors]
    current = Mat(rows, len(rows), dim).rank() if rows else 0
    chosen: list[list[Fraction]] = []
    for k in range(dim):
        e = [Fraction(0)] * dim
        e[k] = Fraction(1)
        trial = Mat(rows + [e], len(rows) + 1, dim)
        r = trial.rank()
        if r > current:
            rows.append(e)
            chosen.append(e)
            current = r
        if current == dim:
            break
    return chosen
