"""Exact matrix rank over the rationals (fraction-free) or a prime field."""
from __future__ import annotations


def rank_char0(rows: list[list[int]]) -> int:
    """Rank over Q of an integer matrix, by Bareiss elimination."""
    m = [row[:] for row in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, nrows):
            f = m[r][col]
            for c in range(col + 1, ncols):
                m[r][c] = (m[r][c] * p - f * m[rank][c]) // prev
            m[r][col] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def rank_mod_p(rows: list[list[int]], p: int) -> int:
    m = [[x % p for x in row] for row in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], p - 2, p)
        row_r = m[rank]
        for r in range(rank + 1, nrows):
            f = m[r][col]
            if f:
                f = (f * inv) % p
                m[r] = [(x - f * y) % p for x, y in zip(m[r], row_r)]
        rank += 1
        if rank == nrows:
            break
    return rank


def matrix_rank(rows: list[list[int]], char: int) -> int:
    return rank_char0(rows) if char == 0 else rank_mod_p(rows, char)
