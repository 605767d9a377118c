"""Exact integer linear algebra: Smith/Hermite normal forms, kernels, cokernels.

Everything here works over plain Python ints, so coefficients are unbounded
and all results are exact.  Matrices are immutable; the functions are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    # Maintain the invariants:
    #          x * a +      y * b ==      g
    #     next_x * a + next_y * b == next_g
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, stored as a tuple of row tuples."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows:
            raise ValueError("row count mismatch")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("column count mismatch")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        data = tuple(tuple(int(x) for x in row) for row in rows)
        if cols is None:
            if not data:
                raise ValueError("cannot infer column count of an empty matrix")
            cols = len(data[0])
        return cls(len(data), cols, data)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        data = tuple(
            tuple(
                sum(self.entries[i][k] * other.entries[k][j] for k in range(self.cols))
                for j in range(other.cols)
            )
            for i in range(self.rows)
        )
        return IntMatrix(self.rows, other.cols, data)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(tuple(-x for x in row) for row in self.entries))

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols, self.rows,
            tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)),
        )

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.entries[k][k] for k in range(min(self.rows, self.cols)))

    def __str__(self) -> str:
        if not self.entries:
            return f"<empty {self.rows}x{self.cols}>"
        return "\n".join("[" + " ".join(str(x) for x in row) + "]" for row in self.entries)


@dataclass(frozen=True)
class SmithDecomposition:
    """U @ M @ V == D with U, V unimodular and D in Smith normal form."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    invariant_factors: tuple[int, ...]


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group: Z^free_rank + Z/t1 + ... (t1 | t2 | ...)."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        prev = None
        for t in self.torsion:
            if t < 2:
                raise ValueError("torsion coefficients must be >= 2")
            if prev is not None and t % prev != 0:
                raise ValueError("torsion coefficients must form a divisibility chain")
            prev = t

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z_{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"


def smith_normal_form(M: IntMatrix) -> SmithDecomposition:
    """Canonical Smith normal form U M V = D.

    Always pivots on a minimal-absolute-value entry of the trailing
    submatrix (re-selected after every reduction sweep), clearing the pivot
    cross with remainder-reducing row and column steps.  That keeps
    intermediate entries from compounding.  Diagonal entries come out
    nonnegative with d1 | d2 | ... and zeros trailing; deterministic.
    """
    m, n = M.rows, M.cols
    A = [list(row) for row in M.entries]
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    V = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    t = 0
    limit = min(m, n)
    while t < limit:
        # Minimal-absolute-value pivot in the trailing submatrix.
        pivot = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                a = A[i][j]
                if a != 0 and (best is None or abs(a) < best):
                    best = abs(a)
                    pivot = (i, j)
            if best == 1:
                break
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            A[t], A[pi] = A[pi], A[t]
            U[t], U[pi] = U[pi], U[t]
        if pj != t:
            for row in A:
                row[t], row[pj] = row[pj], row[t]
            for row in V:
                row[t], row[pj] = row[pj], row[t]
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]

        p = A[t][t]
        dirty = False
        for i in range(t + 1, m):
            a = A[i][t]
            if a:
                q = a // p
                if q:
                    A[i] = [x - q * y for x, y in zip(A[i], A[t])]
                    U[i] = [x - q * y for x, y in zip(U[i], U[t])]
                if A[i][t]:
                    dirty = True
        for j in range(t + 1, n):
            a = A[t][j]
            if a:
                q = a // p
                if q:
                    for row in A:
                        row[j] -= q * row[t]
                    for row in V:
                        row[j] -= q * row[t]
                if A[t][j]:
                    dirty = True
        if dirty:
            # Leftover remainders are smaller than the pivot; re-select.
            continue

        # Cross is clear; enforce that the pivot divides the rest.
        bad = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if A[i][j] % p != 0:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            A[t] = [x + y for x, y in zip(A[t], A[bad])]
            U[t] = [x + y for x, y in zip(U[t], U[bad])]
            continue
        t += 1

    factors = tuple(A[k][k] for k in range(limit) if A[k][k] != 0)
    return SmithDecomposition(
        U=IntMatrix(m, m, tuple(tuple(r) for r in U)),
        D=IntMatrix(m, n, tuple(tuple(r) for r in A)),
        V=IntMatrix(n, n, tuple(tuple(r) for r in V)),
        invariant_factors=factors,
    )


def hermite_normal_form(rows: Iterable[Sequence[int]], cols: int) -> list[list[int]]:
    """Row-style Hermite normal form of the lattice spanned by ``rows``.

    Returns the canonical basis: pivots positive, entries above each pivot
    reduced into [0, pivot), rows ordered by pivot column.  Two generating
    sets span the same lattice iff their HNFs are equal.
    """
    basis: list[list[int]] = []
    pivot_col: list[int] = []
    for row0 in rows:
        row = list(row0)
        if len(row) != cols:
            raise ValueError("row length mismatch")
        while True:
            lead = next((j for j, x in enumerate(row) if x), None)
            if lead is None:
                break
            k = next((i for i, c in enumerate(pivot_col) if c >= lead), len(pivot_col))
            if k == len(pivot_col) or pivot_col[k] != lead:
                if row[lead] < 0:
                    row = [-x for x in row]
                basis.insert(k, row)
                pivot_col.insert(k, lead)
                break
            a = basis[k][lead]
            b = row[lead]
            if b % a == 0:
                q = b // a
                row = [x - q * y for x, y in zip(row, basis[k])]
            else:
                x, y, g = xgcd(a, b)
                ag, bg = a // g, b // g
                basis[k], row = (
                    [x * p + y * q for p, q in zip(basis[k], row)],
                    [-bg * p + ag * q for p, q in zip(basis[k], row)],
                )
    # Reduce entries above each pivot.
    for k in range(len(basis) - 1, -1, -1):
        j = pivot_col[k]
        p = basis[k][j]
        for i in range(k):
            q = basis[i][j] // p
            if q:
                basis[i] = [x - q * y for x, y in zip(basis[i], basis[k])]
    return basis


def kernel(M: IntMatrix) -> tuple[int, list[tuple[int, ...]]]:
    """Saturated integer kernel of M: Z^cols -> Z^rows.

    The basis comes from the columns of V matching zero diagonal entries of
    the Smith form, so the quotient of Z^cols by its span is torsion-free.
    """
    snf = smith_normal_form(M)
    r = len(snf.invariant_factors)
    basis = [
        tuple(snf.V.entries[i][j] for i in range(M.cols))
        for j in range(r, M.cols)
    ]
    return M.cols - r, basis


def cokernel_group(M: IntMatrix) -> AbelianGroup:
    """Z^rows modulo the column span of M, in canonical form."""
    snf = smith_normal_form(M)
    torsion = tuple(f for f in snf.invariant_factors if f > 1)
    return AbelianGroup(free_rank=M.rows - len(snf.invariant_factors), torsion=torsion)
