"""Row spaces over Z/d and Z with canonical echelon forms.

For d > 0 the echelon form is the Howell form: besides being reduced it
contains, for every pivot row, enough rows to express the multiples of that
row whose pivot entry vanishes mod d.  This is what makes the greedy
membership test sound for composite d (plain Gaussian elimination is not).
For d = 0 the form is the row Hermite normal form.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Sequence

__all__ = ["ModMatrix", "echelon_form", "xgcd"]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def _unit_normalizer(a: int, d: int) -> int:
    """A unit c mod d with c*a = gcd(a, d) (mod d)."""
    g = gcd(a, d)
    a1, d1 = a // g, d // g
    c = pow(a1, -1, d1) if d1 > 1 else 1
    while gcd(c, d) != 1:
        c += d1
    return c % d


def echelon_form(rows: Iterable[Sequence[int]], ncols: int, d: int) -> list[list[int]]:
    """Howell form over Z/d (d > 0) or Hermite normal form over Z (d = 0).

    Pivots are divisors of d (resp. positive), entries above a pivot are
    reduced into [0, pivot), and zero rows are dropped.
    """
    if d < 0 or d == 1:
        raise ValueError(f"bad modulus {d}")
    A = []
    for r in rows:
        r = list(r)
        if len(r) != ncols:
            raise ValueError(f"row of length {len(r)}, expected {ncols}")
        if d:
            r = [x % d for x in r]
        if any(r):
            A.append(r)
    red = (lambda x: x % d) if d else (lambda x: x)
    top = 0
    for col in range(ncols):
        if top >= len(A):
            break
        # bring a gcd of column entries into row `top` by unimodular 2x2 steps
        for i in range(top + 1, len(A)):
            b = A[i][col]
            if not b:
                continue
            a = A[top][col]
            g, s, t = xgcd(a, b)
            u, v = -b // g, a // g
            rt, ri = A[top], A[i]
            A[top] = [red(s * x + t * y) for x, y in zip(rt, ri)]
            A[i] = [red(u * x + v * y) for x, y in zip(rt, ri)]
        p = A[top][col]
        if not p:
            continue
        if d:
            c = _unit_normalizer(p, d)
            A[top] = [(c * x) % d for x in A[top]]
        elif p < 0:
            A[top] = [-x for x in A[top]]
        p = A[top][col]
        row = A[top]
        for i in range(top):
            q = A[i][col] // p
            if q:
                A[i] = [red(x - q * y) for x, y in zip(A[i], row)]
        if d:
            ann = [(d // p * x) % d for x in row]
            if any(ann):
                A.append(ann)
        top += 1
        A = A[:top] + [r for r in A[top:] if any(r)]
    return [r for r in A[:top] if any(r)]


class ModMatrix:
    """Row space of a matrix over Z/d (d = 0: over Z), kept in canonical echelon form."""

    def __init__(self, rows: Iterable[Sequence[int]], ncols: int, d: int):
        if d < 0 or d == 1:
            raise ValueError(f"bad modulus {d}")
        self.modulus = d
        self.ncols = ncols
        self.rows = echelon_form(rows, ncols, d)
        self._pivots = [next(j for j, x in enumerate(r) if x) for r in self.rows]

    def __eq__(self, other):
        return (isinstance(other, ModMatrix) and self.modulus == other.modulus
                and self.ncols == other.ncols and self.rows == other.rows)

    def __repr__(self):
        return f"ModMatrix(d={self.modulus}, rows={self.rows})"

    def reduce(self, vec: Sequence[int]) -> list[int]:
        """Remainder of vec after greedy reduction by the echelon rows."""
        d = self.modulus
        x = [v % d for v in vec] if d else list(vec)
        if len(x) != self.ncols:
            raise ValueError(f"vector of length {len(x)}, expected {self.ncols}")
        for row, j in zip(self.rows, self._pivots):
            q = x[j] // row[j]
            if q:
                x = [a - q * b for a, b in zip(x, row)]
                if d:
                    x = [a % d for a in x]
        return x

    def contains(self, vec: Sequence[int]) -> bool:
        return not any(self.reduce(vec))

    @property
    def rank(self) -> int:
        return len(self.rows)
