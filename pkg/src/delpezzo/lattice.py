"""Exact integer and rational linear algebra on small dense matrices.

Everything is computed over Python's arbitrary-precision integers and
``fractions.Fraction``; no floating point appears anywhere in this module.
The matrices that show up downstream (node evaluation matrices, divisor
rewrite maps, Hessians) are tiny, so the elementary algorithms below are
the right tool: correctness is the only requirement.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix, entries in row-major order."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count must equal rows * cols")
        if not all(isinstance(e, int) for e in self.entries):
            raise ValueError("entries must be integers")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        rows = [list(r) for r in rows]
        nr = len(rows)
        nc = len(rows[0]) if rows else 0
        if any(len(r) != nc for r in rows):
            raise ValueError("ragged rows")
        return cls(nr, nc, tuple(int(x) for r in rows for x in r))

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols])
                for i in range(self.rows)]


def from_rational_rows(rows: Sequence[Sequence[Fraction | int]]) -> IntMatrix:
    """Clear denominators row by row; rank and kernel are unchanged."""
    cleared = []
    for row in rows:
        fr = [Fraction(x) for x in row]
        mult = lcm(*(f.denominator for f in fr)) if fr else 1
        cleared.append([int(f * mult) for f in fr])
    return IntMatrix.from_rows(cleared)


@dataclass(frozen=True)
class SmithForm:
    """Diagonal of a Smith normal form; each entry divides the next."""

    diagonal: tuple[int, ...]
    rank: int


def _pivot(a: list[list[int]], s: int) -> tuple[int, int] | None:
    # smallest nonzero absolute value; ties broken by lowest (row, col)
    best = None
    for i in range(s, len(a)):
        for j in range(s, len(a[0])):
            v = abs(a[i][j])
            if v and (best is None or v < best[0]):
                best = (v, i, j)
    return None if best is None else (best[1], best[2])


def _move_pivot(a: list[list[int]], s: int, pos: tuple[int, int]) -> None:
    i, j = pos
    if i != s:
        a[s], a[i] = a[i], a[s]
    if j != s:
        for row in a:
            row[s], row[j] = row[j], row[s]
    if a[s][s] < 0:
        a[s] = [-x for x in a[s]]


def smith_normal_form(m: IntMatrix) -> SmithForm:
    """Smith normal form via elementary row/column reduction.

    The product of the first k diagonal entries equals the gcd of the
    k x k minors, and the divisibility chain d1 | d2 | ... holds.
    """
    a = m.to_rows()
    nr, nc = m.rows, m.cols
    n = min(nr, nc)
    diag = [0] * n
    for s in range(n):
        pos = _pivot(a, s)
        if pos is None:
            break
        _move_pivot(a, s, pos)
        while True:
            dirty = False
            for i in range(s + 1, nr):
                if a[i][s]:
                    q = a[i][s] // a[s][s]
                    a[i] = [x - q * y for x, y in zip(a[i], a[s])]
                    if a[i][s]:
                        dirty = True
            for j in range(s + 1, nc):
                if a[s][j]:
                    q = a[s][j] // a[s][s]
                    for row in a:
                        row[j] -= q * row[s]
                    if a[s][j]:
                        dirty = True
            if dirty:
                _move_pivot(a, s, _pivot(a, s))
                continue
            # edging is zero; force the pivot to divide the rest of the block
            offender = None
            for i in range(s + 1, nr):
                for j in range(s + 1, nc):
                    if a[i][j] % a[s][s]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            a[s] = [x + y for x, y in zip(a[s], a[offender])]
        diag[s] = abs(a[s][s])
    return SmithForm(tuple(diag), sum(1 for d in diag if d))


def _row_reduce(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Gauss-Jordan over the rationals; returns (reduced rows, pivot columns)."""
    a = [list(r) for r in rows]
    nr = len(a)
    nc = len(a[0]) if a else 0
    pivots: list[int] = []
    r = 0
    for c in range(nc):
        row = next((i for i in range(r, nr) if a[i][c] != 0), None)
        if row is None:
            continue
        a[r], a[row] = a[row], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nr):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return a, pivots


def rank(m: IntMatrix) -> int:
    reduced, pivots = _row_reduce([[Fraction(x) for x in row] for row in m.to_rows()])
    return len(pivots)


def rational_nullspace(m: IntMatrix) -> list[tuple[Fraction, ...]]:
    """Basis of the right kernel of m over the rationals.

    Returns cols - rank(m) linearly independent vectors, each annihilated
    by m.  An empty matrix (no rows) has the full standard basis as kernel.
    """
    nc = m.cols
    if m.rows == 0:
        return [tuple(Fraction(int(i == j)) for j in range(nc)) for i in range(nc)]
    reduced, pivots = _row_reduce([[Fraction(x) for x in row] for row in m.to_rows()])
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * nc
        v[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -reduced[r][f]
        basis.append(tuple(v))
    return basis


def invert_rational(rows: Sequence[Sequence[Fraction | int]]) -> list[list[Fraction]]:
    """Inverse of a square rational matrix; raises ValueError if singular."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(rows)]
    reduced, pivots = _row_reduce(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in reduced]
