"""Tiny exact linear algebra over Fractions: 2x2 and 3x3 solves, determinants, rank."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def det2(m: Sequence[Sequence[Fraction]]) -> Fraction:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def det3(m: Sequence[Sequence[Fraction]]) -> Fraction:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def solve2(m: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]):
    """Solve a 2x2 system by Cramer's rule; None when singular."""
    d = det2(m)
    if d == 0:
        return None
    x = (rhs[0] * m[1][1] - m[0][1] * rhs[1]) / d
    y = (m[0][0] * rhs[1] - rhs[0] * m[1][0]) / d
    return (x, y)


def solve3(m: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]):
    """Solve a 3x3 system by Cramer's rule; None when singular."""
    d = det3(m)
    if d == 0:
        return None
    cols = []
    for j in range(3):
        mj = [[rhs[i] if k == j else m[i][k] for k in range(3)] for i in range(3)]
        cols.append(det3(mj) / d)
    return tuple(cols)


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Row rank by fraction-exact Gaussian elimination."""
    work = [list(map(Fraction, row)) for row in rows]
    if not work:
        return 0
    ncols = len(work[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(work)) if work[i][col] != 0), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        lead = work[r][col]
        for i in range(len(work)):
            if i != r and work[i][col] != 0:
                factor = work[i][col] / lead
                work[i] = [a - factor * b for a, b in zip(work[i], work[r])]
        r += 1
        if r == len(work):
            break
    return r
