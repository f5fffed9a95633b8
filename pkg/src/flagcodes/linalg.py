"""Dense exact matrix algebra over a finite field.

Matrices are immutable, stored row-major as integer element codes with a
handle to the owning field, which supplies all arithmetic.  Everything
here is exact; ambient dimensions stay at desk scale, so no sparse or
floating-point paths exist.
"""

from __future__ import annotations


class MatrixGF:
    """Immutable rows x cols matrix of element codes over a FiniteField."""

    __slots__ = ("field", "nrows", "ncols", "entries")

    def __init__(self, field, rows, ncols: int | None = None) -> None:
        entries = tuple(tuple(r) for r in rows)
        if entries:
            width = len(entries[0])
            if any(len(r) != width for r in entries):
                raise ValueError("rows have inconsistent lengths")
            if ncols is not None and ncols != width:
                raise ValueError(f"ncols {ncols} does not match row length {width}")
            ncols = width
        elif ncols is None:
            raise ValueError("ncols is required for a matrix with no rows")
        q = field.order
        for r in entries:
            for c in r:
                if not isinstance(c, int) or not 0 <= c < q:
                    raise ValueError(f"entry {c!r} is not an element code in [0, {q})")
        self.field = field
        self.nrows = len(entries)
        self.ncols = ncols
        self.entries = entries

    @classmethod
    def zeros(cls, field, nrows: int, ncols: int) -> "MatrixGF":
        return cls(field, [[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field, n: int) -> "MatrixGF":
        return cls(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def __getitem__(self, ij) -> int:
        i, j = ij
        return self.entries[i][j]

    def __add__(self, other: "MatrixGF") -> "MatrixGF":
        self._compat(other, same_shape=True)
        F = self.field
        return MatrixGF(F, [[F.add(a, b) for a, b in zip(ra, rb)]
                            for ra, rb in zip(self.entries, other.entries)], self.ncols)

    def __matmul__(self, other: "MatrixGF") -> "MatrixGF":
        self._compat(other)
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.nrows}x{self.ncols} by "
                             f"{other.nrows}x{other.ncols}")
        F = self.field
        cols = list(zip(*other.entries)) if other.entries else []
        out = []
        for ra in self.entries:
            row = []
            for cb in cols:
                acc = 0
                for a, b in zip(ra, cb):
                    if a and b:
                        acc = F.add(acc, F.mul(a, b))
                row.append(acc)
            out.append(row)
        return MatrixGF(F, out, other.ncols)

    def scale(self, code: int) -> "MatrixGF":
        F = self.field
        return MatrixGF(F, [[F.mul(code, c) for c in r] for r in self.entries], self.ncols)

    def transpose(self) -> "MatrixGF":
        return MatrixGF(self.field, list(zip(*self.entries)) if self.entries else
                        [[] for _ in range(self.ncols)][:0], self.nrows) \
            if self.entries else MatrixGF(self.field, [() for _ in range(self.ncols)], self.nrows) \
            if False else MatrixGF(self.field,
                                   [tuple(r[j] for r in self.entries) for j in range(self.ncols)],
                                   self.nrows)

    def to_lists(self) -> list:
        return [list(r) for r in self.entries]

    def _compat(self, other: "MatrixGF", same_shape: bool = False) -> None:
        if not isinstance(other, MatrixGF):
            raise TypeError(f"expected MatrixGF, got {type(other).__name__}")
        if other.field != self.field:
            raise ValueError("matrices belong to different fields")
        if same_shape and (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError(f"shape mismatch: {self.nrows}x{self.ncols} vs "
                             f"{other.nrows}x{other.ncols}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatrixGF):
            return NotImplemented
        return (self.field == other.field and self.ncols == other.ncols
                and self.entries == other.entries)

    def __hash__(self) -> int:
        return hash((self.field, self.ncols, self.entries))

    def __repr__(self) -> str:
        return f"MatrixGF({self.field!r}, {self.to_lists()!r})"


def rref(M: MatrixGF) -> tuple[MatrixGF, int, tuple[int, ...]]:
    """Reduced row echelon form of M.

    Returns (R, rank, pivot columns).  R is the unique RREF with the same
    row space as M; pivot columns are strictly increasing.
    """
    F = M.field
    rows = [list(r) for r in M.entries]
    nr, nc = M.nrows, M.ncols
    pivots = []
    r = 0
    for c in range(nc):
        if r == nr:
            break
        pr = next((i for i in range(r, nr) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        lead = rows[r][c]
        if lead != 1:
            inv = F.inv(lead)
            rows[r] = [F.mul(inv, x) for x in rows[r]]
        for i in range(nr):
            f = rows[i][c]
            if i != r and f != 0:
                top = rows[r]
                rows[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(rows[i], top)]
        pivots.append(c)
        r += 1
    return MatrixGF(F, rows, nc), r, tuple(pivots)


def rank(M: MatrixGF) -> int:
    return rref(M)[1]


def stack(A: MatrixGF, B: MatrixGF) -> MatrixGF:
    """Block matrix with A above B."""
    A._compat(B)
    if A.ncols != B.ncols:
        raise ValueError(f"column mismatch: {A.ncols} vs {B.ncols}")
    return MatrixGF(A.field, A.entries + B.entries, A.ncols)


def hconcat(A: MatrixGF, B: MatrixGF) -> MatrixGF:
    """Block matrix with A left of B."""
    A._compat(B)
    if A.nrows != B.nrows:
        raise ValueError(f"row mismatch: {A.nrows} vs {B.nrows}")
    return MatrixGF(A.field, [ra + rb for ra, rb in zip(A.entries, B.entries)],
                    A.ncols + B.ncols)


def intersection_dim(U: MatrixGF, V: MatrixGF) -> int:
    """dim of the intersection of the row spaces, via the rank formula.

    Both generator matrices must be full rank over the same ambient space;
    the result is dim(U) + dim(V) - rank(U stacked on V).
    """
    U._compat(V)
    if U.ncols != V.ncols:
        raise ValueError(f"ambient mismatch: {U.ncols} vs {V.ncols}")
    return U.nrows + V.nrows - rank(stack(U, V))


def intersection(U: MatrixGF, V: MatrixGF) -> MatrixGF:
    """RREF basis of the intersection of the row spaces (Zassenhaus)."""
    U._compat(V)
    if U.ncols != V.ncols:
        raise ValueError(f"ambient mismatch: {U.ncols} vs {V.ncols}")
    n = U.ncols
    top = [list(r) + list(r) for r in U.entries]
    bottom = [list(r) + [0] * n for r in V.entries]
    block, _, _ = rref(MatrixGF(U.field, top + bottom, 2 * n))
    inter = [r[n:] for r in block.entries
             if all(x == 0 for x in r[:n]) and any(x != 0 for x in r[n:])]
    R, rk, _ = rref(MatrixGF(U.field, inter, n))
    return MatrixGF(U.field, R.entries[:rk], n)


def orthogonal_complement(U: MatrixGF) -> MatrixGF:
    """RREF generator of {v : U v^T = 0} under the standard bilinear form."""
    R, rk, pivots = rref(U)
    if rk != U.nrows:
        raise ValueError("generator matrix is rank-deficient")
    F = U.field
    n = U.ncols
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for j in free:
        v = [0] * n
        v[j] = 1
        for i, p in enumerate(pivots):
            v[p] = F.neg(R.entries[i][j])
        basis.append(v)
    K, kr, _ = rref(MatrixGF(F, basis, n))
    return MatrixGF(F, K.entries[:kr], n)
