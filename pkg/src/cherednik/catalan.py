"""Rational Dyck paths and the rational q,t-Catalan polynomial.

A path has m east steps and n north steps from (0, 0) to (m, n) and stays
weakly above the diagonal: m*y >= n*x at every lattice point.  The cells
of the m x n rectangle lying strictly north-west of the path form a Young
diagram lam (rows counted from the top).  Then

* area = (number of cells lying entirely above the diagonal) - |lam|,
* dinv = number of cells of lam with arm/(leg + 1) < m/n < (arm + 1)/leg,

where arm counts cells of lam to the right in the same row and leg counts
cells of lam below in the same column (a zero denominator reads as +inf).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd
from typing import List, Tuple

from .qt import QtPolynomial


class NotCoprime(ValueError):
    pass


@dataclass(frozen=True)
class DyckPath:
    m: int
    n: int
    steps: str  # "E" and "N"

    def points(self) -> List[Tuple[int, int]]:
        x = y = 0
        pts = [(0, 0)]
        for s in self.steps:
            if s == "E":
                x += 1
            else:
                y += 1
            pts.append((x, y))
        return pts

    def is_valid(self) -> bool:
        if self.steps.count("E") != self.m or self.steps.count("N") != self.n:
            return False
        return all(self.m * y >= self.n * x for x, y in self.points())

    def row_lengths(self) -> List[int]:
        """Cells of lam in each row, rows listed from the top (row n-1 down to 0)."""
        # the path reaches height j+1 at x-coordinate east_before[j]; row j has that many cells left of it
        east_at_row = []
        x = 0
        for s in self.steps:
            if s == "E":
                x += 1
            else:
                east_at_row.append(x)
        return list(reversed(east_at_row))

    def area(self) -> int:
        above = sum(1 for i in range(self.m) for j in range(self.n) if self.n * (i + 1) <= self.m * j)
        return above - sum(self.row_lengths())

    def dinv(self) -> int:
        rows = self.row_lengths()  # top row first
        slope = Fraction(self.m, self.n)
        count = 0
        for r, length in enumerate(rows):
            for col in range(length):
                arm = length - col - 1
                leg = sum(1 for below in rows[r + 1:] if below > col)
                lower = Fraction(arm, leg + 1)
                upper_ok = leg == 0 or slope < Fraction(arm + 1, leg)
                if lower < slope and upper_ok:
                    count += 1
        return count


def _check(m: int, n: int):
    if m < 1 or n < 1 or gcd(m, n) != 1:
        raise NotCoprime(f"({m}, {n}) is not a coprime pair of positive integers")


@lru_cache(maxsize=None)
def _paths(m: int, n: int) -> Tuple[str, ...]:
    out = []

    def walk(x: int, y: int, acc: List[str]):
        if x == m and y == n:
            out.append("".join(acc))
            return
        if y < n:
            acc.append("N")
            walk(x, y + 1, acc)
            acc.pop()
        if x < m and m * y >= n * (x + 1):
            acc.append("E")
            walk(x + 1, y, acc)
            acc.pop()

    walk(0, 0, [])
    return tuple(out)


def enumerate_paths(m: int, n: int) -> List[DyckPath]:
    _check(m, n)
    return [DyckPath(m, n, s) for s in _paths(m, n)]


def statistics(path: DyckPath) -> Tuple[int, int]:
    return path.area(), path.dinv()


def qt_catalan(m: int, n: int) -> QtPolynomial:
    """sum over paths of q^dinv t^area."""
    terms = {}
    for path in enumerate_paths(m, n):
        a, d = statistics(path)
        terms[(d, a, 0)] = terms.get((d, a, 0), 0) + 1
    return QtPolynomial(terms)


def rational_catalan(m: int, n: int) -> int:
    _check(m, n)
    return comb(m + n, n) // (m + n)
