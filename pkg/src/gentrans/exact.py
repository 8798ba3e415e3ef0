"""Exact linear algebra over the rationals on integer matrices."""
from __future__ import annotations


def rank(rows, stop_at: int | None = None) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination.

    ``stop_at`` ends the elimination once that rank is reached.
    """
    m = [list(r) for r in rows if any(r)]
    r, prev = 0, 1
    while m and m[0]:
        piv = next((k for k, row in enumerate(m) if row[0]), None)
        if piv is None:
            m = [row[1:] for row in m]
            continue
        p = m.pop(piv)
        a = p[0]
        rest = []
        for row in m:
            b = row[0]
            if b:
                new = [(a * x - b * y) // prev for x, y in zip(row[1:], p[1:])]
            else:
                new = [a * x // prev for x in row[1:]]
            if any(new):
                rest.append(new)
        m, prev = rest, a
        r += 1
        if stop_at is not None and r >= stop_at:
            break
    return r
