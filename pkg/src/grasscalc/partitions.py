"""Partition and integer-weight combinatorics.

Partitions are plain tuples of weakly decreasing positive integers with
trailing zeros stripped, so ``(2, 1, 0)`` and ``(2, 1)`` denote the same
diagram and hash identically.  GL weights are plain integer tuples of a
fixed length; dominance is a queryable property, not an invariant.
"""

from __future__ import annotations

Partition = tuple[int, ...]
GLWeight = tuple[int, ...]
Rectangle = tuple[int, int]


def normalize(parts) -> Partition:
    """Canonical partition: validate, strip trailing zeros."""
    p = tuple(int(x) for x in parts)
    for a, b in zip(p, p[1:]):
        if a < b:
            raise ValueError(f"not weakly decreasing: {p}")
    if p and p[-1] < 0:
        raise ValueError(f"negative part: {p}")
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def area(p) -> int:
    return sum(p)


def pad(p, m: int) -> GLWeight:
    """Extend with zeros to length m."""
    p = tuple(p)
    if len(p) > m:
        raise ValueError(f"{p} longer than {m}")
    return p + (0,) * (m - len(p))


def contains(outer, inner) -> bool:
    """Diagram containment inner <= outer."""
    inner = tuple(inner)
    outer = tuple(outer)
    return all(
        (inner[i] if i < len(inner) else 0) <= (outer[i] if i < len(outer) else 0)
        for i in range(max(len(inner), len(outer), 1))
    )


def transpose(p) -> Partition:
    """Conjugate diagram."""
    p = normalize(p)
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > j) for j in range(p[0]))


def enumerate_box(u: int, v: int) -> list[Partition]:
    """All partitions with at most u rows and v columns.

    The order (area ascending, then lexicographic descending) is a stable
    output contract: it indexes quiver vertices and series matrices.
    """
    if u < 0 or v < 0:
        raise ValueError("box dimensions must be nonnegative")
    out = []

    def grow(prefix, row_bound, remaining_rows):
        out.append(tuple(prefix))
        if remaining_rows == 0:
            return
        for part in range(1, row_bound + 1):
            grow(prefix + [part], part, remaining_rows - 1)

    grow([], v, u)
    out.sort(key=lambda p: (sum(p), tuple(-x for x in p)))
    return out


def complement(p, rect: Rectangle) -> Partition:
    """Complement of p inside a u x v rectangle, rotated back to a partition."""
    u, v = rect
    p = normalize(p)
    if len(p) > u or (p and p[0] > v):
        raise ValueError(f"{p} does not fit in {u}x{v}")
    w = pad(p, u)
    return normalize(tuple(v - w[u - 1 - i] for i in range(u)))


def to_hook(p) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Frobenius coordinates (arms | legs) along the main diagonal."""
    p = normalize(p)
    t = transpose(p)
    d = sum(1 for i in range(len(p)) if p[i] >= i + 1)
    arms = tuple(p[i] - (i + 1) for i in range(d))
    legs = tuple(t[i] - (i + 1) for i in range(d))
    return arms, legs


def from_hook(arms, legs) -> Partition:
    """Partition with the given Frobenius coordinates."""
    arms = tuple(arms)
    legs = tuple(legs)
    if len(arms) != len(legs):
        raise ValueError("arm and leg sequences differ in length")
    for seq in (arms, legs):
        if any(a <= b for a, b in zip(seq, seq[1:])):
            raise ValueError(f"not strictly decreasing: {seq}")
        if seq and seq[-1] < 0:
            raise ValueError(f"negative hook coordinate: {seq}")
    d = len(arms)
    rows = [arms[i] + i + 1 for i in range(d)]
    # column lengths below the diagonal fill in the remaining rows
    height = legs[0] + 1 if d else 0
    parts = []
    for i in range(height):
        if i < d:
            parts.append(rows[i])
        else:
            parts.append(sum(1 for j in range(d) if legs[j] + j + 1 > i))
    return normalize(parts)


def truncate_after(p, l: int) -> Partition:
    """Keep only the first l columns."""
    if l < 0:
        raise ValueError("column count must be nonnegative")
    return normalize(tuple(min(x, l) for x in normalize(p)))


def drop_columns(p, l: int) -> Partition:
    """Delete the first l columns."""
    if l < 0:
        raise ValueError("column count must be nonnegative")
    return normalize(tuple(max(x - l, 0) for x in normalize(p)))


# -- GL weight helpers -------------------------------------------------------

def is_dominant(w) -> bool:
    return all(a >= b for a, b in zip(w, w[1:]))


def dual_weight(w) -> GLWeight:
    """Highest weight of the dual representation: negate and reverse."""
    return tuple(-x for x in reversed(tuple(w)))


def positive_part(w) -> Partition:
    """Partition formed by the positive entries of a dominant weight."""
    if not is_dominant(w):
        raise ValueError(f"weight not dominant: {w}")
    return normalize(tuple(x for x in w if x > 0))


def negative_part(w) -> Partition:
    """Partition formed by the negated negative entries, largest first."""
    if not is_dominant(w):
        raise ValueError(f"weight not dominant: {w}")
    return normalize(tuple(-x for x in reversed(tuple(w)) if x < 0))


def weight_to_json(w) -> dict:
    return {"rank": len(tuple(w)), "entries": list(w)}


def partitions_of(n: int, max_len: int | None = None, max_part: int | None = None):
    """All partitions of n, optionally bounded in length and part size."""
    if n < 0:
        return
    max_part = n if max_part is None else min(max_part, n)
    max_len = n if max_len is None else max_len

    def gen(remaining, bound, slots):
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        top = min(bound, remaining)
        for first in range(top, 0, -1):
            for rest in gen(remaining - first, first, slots - 1):
                yield (first,) + rest

    yield from gen(n, max_part, max_len)


def strict_partitions_of(n: int) -> list[Partition]:
    """Partitions of n into distinct positive parts, in descending lex order."""

    def gen(remaining, bound):
        if remaining == 0:
            yield ()
            return
        for first in range(min(bound, remaining), 0, -1):
            for rest in gen(remaining - first, first - 1):
                yield (first,) + rest

    return list(gen(n, n))
