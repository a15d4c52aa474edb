"""Exact integer linear algebra: ranks over Q and GF(p), Smith normal form.

Matrices are lists of rows of Python ints; every routine works on a copy.
"""
from __future__ import annotations

from dataclasses import dataclass

Matrix = list[list[int]]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class Field:
    """Coefficient field: the rationals (``p == 0``) or ``GF(p)``."""

    p: int = 0

    def __post_init__(self):
        if self.p != 0 and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @classmethod
    def parse(cls, text: str) -> "Field":
        """Parse ``q`` or ``gf:<p>``."""
        t = text.strip().lower()
        if t in ("q", "qq", "rationals"):
            return cls(0)
        if t.startswith("gf:"):
            try:
                return cls(int(t[3:]))
            except ValueError:
                raise ValueError(f"bad field spec {text!r}") from None
        raise ValueError(f"bad field spec {text!r}; expected 'q' or 'gf:<p>'")

    def __str__(self) -> str:
        return "q" if self.p == 0 else f"gf:{self.p}"

    def rank(self, m: Matrix) -> int:
        return rank_q(m) if self.p == 0 else rank_mod_p(m, self.p)


QQ = Field(0)


def rank_q(m: Matrix) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination."""
    a = [list(row) for row in m if any(row)]
    if not a:
        return 0
    rows, cols = len(a), len(a[0])
    rank, prev = 0, 1
    for c in range(cols):
        piv = next((r for r in range(rank, rows) if a[r][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][c]
        prow = a[rank]
        for i in range(rank + 1, rows):
            row = a[i]
            f = row[c]
            for j in range(c + 1, cols):
                row[j] = (row[j] * p - f * prow[j]) // prev
            row[c] = 0
        prev = p
        rank += 1
        if rank == rows:
            break
    return rank


def rank_mod_p(m: Matrix, p: int) -> int:
    """Rank over GF(p) by modular Gaussian elimination."""
    a = [[x % p for x in row] for row in m]
    a = [row for row in a if any(row)]
    if not a:
        return 0
    rows, cols = len(a), len(a[0])
    rank = 0
    for c in range(cols):
        piv = next((r for r in range(rank, rows) if a[r][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][c], -1, p)
        prow = [(x * inv) % p for x in a[rank]]
        a[rank] = prow
        for i in range(rows):
            if i != rank and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], prow)]
        rank += 1
        if rank == rows:
            break
    return rank


def smith_invariants(m: Matrix) -> list[int]:
    """Nonzero diagonal of the Smith normal form, each dividing the next.

    Pivoting always moves the entry of least absolute value into the corner;
    a corner that fails to divide the remaining block absorbs the offending
    row and the corner is reduced again.
    """
    a = [list(row) for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    out: list[int] = []
    t = 0
    while t < min(rows, cols):
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = a[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // p
                    if q:
                        a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // p
                    if q:
                        for row in a:
                            row[j] -= q * row[t]
                    if a[t][j]:
                        dirty = True
            if dirty:
                # a remainder smaller than the pivot survived; bring it to the corner
                cand = [(abs(a[i][t]), i, t) for i in range(t + 1, rows) if a[i][t]]
                cand += [(abs(a[t][j]), t, j) for j in range(t + 1, cols) if a[t][j]]
                _, i, j = min(cand)
                if j == t:
                    a[t], a[i] = a[i], a[t]
                else:
                    for row in a:
                        row[t], row[j] = row[j], row[t]
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
        out.append(abs(a[t][t]))
        t += 1
    return out
