"""Decomposition arithmetic for rational GL_m representations.

Littlewood-Richardson products are computed by direct enumeration of LR
skew tableaux (horizontal strips with the lattice condition).  Mixed
(rational) weights are handled by the determinant twist: shift both
factors into partitions, multiply, discard summands longer than the rank,
shift back.  All arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import ResourceLimitError
from .partitions import (
    GLWeight,
    Partition,
    area,
    from_hook,
    is_dominant,
    normalize,
    pad,
    partitions_of,
    strict_partitions_of,
    transpose,
)

TENSOR_SQUARE_TAGS = ("sym2", "wedge2", "tensor_pair")


@dataclass(frozen=True)
class IrrepDecomposition:
    """A finite multiset of dominant GL_m weights with positive multiplicity."""

    rank: int
    terms: dict[GLWeight, int] = field(default_factory=dict)

    def __post_init__(self):
        for w, m in self.terms.items():
            if len(w) != self.rank or not is_dominant(w):
                raise ValueError(f"bad weight {w} for rank {self.rank}")
            if m <= 0:
                raise ValueError(f"nonpositive multiplicity for {w}")

    def sorted_terms(self) -> list[tuple[GLWeight, int]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def dimension(self) -> int:
        return sum(m * dim_irrep(w, self.rank) for w, m in self.terms.items())

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "terms": [{"weight": list(w), "mult": m} for w, m in self.sorted_terms()],
        }

    def __eq__(self, other):
        return (
            isinstance(other, IrrepDecomposition)
            and self.rank == other.rank
            and self.terms == other.terms
        )


# -- Littlewood-Richardson ---------------------------------------------------

def _add_strip(shape: Partition, count: int):
    """All ways to add `count` boxes to `shape` as a horizontal strip.

    Yields (new_shape, placement) where placement lists (row, boxes added).
    """
    base = list(shape) + [0]
    n = len(base)

    def rec(row, left, acc):
        if row == n:
            if left == 0:
                yield acc
            return
        hi = base[row] + left
        if row > 0:
            hi = min(hi, base[row - 1])  # at most one new box per column
        for new_len in range(base[row], hi + 1):
            yield from rec(row + 1, left - (new_len - base[row]), acc + [(row, new_len - base[row])])

    for acc in rec(0, count, []):
        new_shape = list(base)
        for row, add in acc:
            new_shape[row] += add
        yield normalize(new_shape), acc


def _lattice_ok(history, placement, j) -> bool:
    """Check the lattice condition when value j+1 is placed.

    Down to every row i, the count of (j+1)'s in rows <= i may not exceed
    the count of j's in rows < i.
    """
    if j == 0:
        return True
    prev = {row: add for row, add in history[j - 1] if add}
    cur = {row: add for row, add in placement if add}
    if not cur:
        return True
    rows = max(list(prev) + list(cur)) + 1
    prev_cum = 0
    cur_cum = 0
    for i in range(rows):
        cur_cum += cur.get(i, 0)
        if cur_cum > prev_cum:
            return False
        prev_cum += prev.get(i, 0)
    return True


def _lr_additions(alpha: Partition, beta: Partition):
    """Outer shapes of all LR fillings of content beta grown onto alpha."""
    states = [(alpha, [])]
    for j in range(len(beta)):
        nxt = []
        for shape, hist in states:
            for new_shape, placement in _add_strip(shape, beta[j]):
                if _lattice_ok(hist, placement, j):
                    nxt.append((new_shape, hist + [placement]))
        states = nxt
    for shape, _ in states:
        yield shape


@lru_cache(maxsize=None)
def lr_expand(alpha, beta, max_len=None) -> tuple[tuple[Partition, int], ...]:
    """Schur product s_alpha * s_beta as ((partition, coefficient), ...)."""
    alpha = normalize(alpha)
    beta = normalize(beta)
    counts: dict[Partition, int] = {}
    for shape in _lr_additions(alpha, beta):
        if max_len is not None and len(shape) > max_len:
            continue
        counts[shape] = counts.get(shape, 0) + 1
    return tuple(sorted(counts.items(), reverse=True))


def lr_coefficient(mu, alpha, beta) -> int:
    """Number of LR tableaux of shape mu/alpha and content beta."""
    mu = normalize(mu)
    alpha = normalize(alpha)
    beta = normalize(beta)
    if area(mu) != area(alpha) + area(beta):
        return 0
    for part, coeff in lr_expand(alpha, beta):
        if part == mu:
            return coeff
    return 0


def tensor_dominant(a, b, m: int) -> IrrepDecomposition:
    """S_a (x) S_b for dominant rational GL_m weights a and b."""
    a = tuple(a)
    b = tuple(b)
    if len(a) != m or len(b) != m:
        raise ValueError("weights must have length equal to the rank")
    if not (is_dominant(a) and is_dominant(b)):
        raise ValueError("weights must be dominant")
    ca = max(0, -a[-1]) if a else 0
    cb = max(0, -b[-1]) if b else 0
    pa = normalize(tuple(x + ca for x in a))
    pb = normalize(tuple(x + cb for x in b))
    shift = ca + cb
    terms: dict[GLWeight, int] = {}
    for mu, coeff in lr_expand(pa, pb, max_len=m):
        w = tuple(x - shift for x in pad(mu, m))
        terms[w] = terms.get(w, 0) + coeff
    return IrrepDecomposition(m, terms)


def dim_irrep(w, m: int) -> int:
    """Dimension of the rational GL_m irrep, by the Weyl product formula."""
    w = tuple(w)
    if len(w) != m:
        raise ValueError("weight length must equal the rank")
    if not is_dominant(w):
        raise ValueError(f"weight not dominant: {w}")
    val = Fraction(1)
    for i in range(m):
        for j in range(i + 1, m):
            val *= Fraction(w[i] - w[j] + j - i, j - i)
    assert val.denominator == 1
    return int(val)


# -- Cauchy layers and exterior-power plethysms ------------------------------

def cauchy_layer(d: int, tag: str) -> list[Partition]:
    """Degree-d layer of Sym applied to Sym2 V, wedge2 V, or V (x) W."""
    if tag not in TENSOR_SQUARE_TAGS:
        raise ValueError(f"unknown tag {tag!r}")
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if tag == "tensor_pair":
        return sorted(partitions_of(d), reverse=True)
    if tag == "sym2":
        return sorted((tuple(2 * x for x in lam) for lam in partitions_of(d)), reverse=True)
    # wedge2: every column height is even
    return sorted(
        (transpose(tuple(2 * x for x in lam)) for lam in partitions_of(d)),
        reverse=True,
    )


def wedge_plethysm_hooks(s: int, tag: str) -> list[Partition]:
    """Hook decomposition of the s-th exterior power of Sym2 V or wedge2 V.

    In Frobenius coordinates the summands have legs = arms - 1 (Sym2 case)
    or legs = arms + 1 (wedge2 case); both families are indexed by strict
    partitions of s.
    """
    if tag not in ("sym2", "wedge2"):
        raise ValueError(f"unknown tag {tag!r}")
    if s < 0:
        raise ValueError("degree must be nonnegative")
    out = []
    for strict in strict_partitions_of(s):
        if tag == "sym2":
            arms, legs = strict, tuple(a - 1 for a in strict)
        else:
            arms, legs = tuple(a - 1 for a in strict), strict
        out.append(from_hook(arms, legs))
    return sorted(out, reverse=True)


def schur_weight_vectors(shape, m: int) -> list[tuple[int, ...]]:
    """Exponent vectors (with multiplicity) of the character of S_shape C^m."""
    shape = normalize(shape)
    if len(shape) > m:
        return []
    if not shape:
        return [(0,) * m]
    rows = len(shape)
    tableau = [[0] * shape[i] for i in range(rows)]
    cells = [(i, j) for i in range(rows) for j in range(shape[i])]
    content = [0] * m
    out: list[tuple[int, ...]] = []

    def rec(idx):
        if idx == len(cells):
            out.append(tuple(content))
            return
        i, j = cells[idx]
        lo = 1
        if j > 0:
            lo = max(lo, tableau[i][j - 1])
        if i > 0:
            lo = max(lo, tableau[i - 1][j] + 1)
        for v in range(lo, m + 1):
            tableau[i][j] = v
            content[v - 1] += 1
            rec(idx + 1)
            content[v - 1] -= 1
        tableau[i][j] = 0

    rec(0)
    return out


def decompose_character(vectors, m: int) -> IrrepDecomposition:
    """Decompose a symmetric character, given as a multiset of exponent vectors."""
    counts: dict[tuple[int, ...], int] = {}
    for v in vectors:
        counts[v] = counts.get(v, 0) + 1
    terms: dict[GLWeight, int] = {}
    while counts:
        lead = max(counts)
        mult = counts[lead]
        if not is_dominant(lead):
            raise ArithmeticError(f"leading term {lead} not dominant")
        if mult < 0:
            raise ArithmeticError("negative multiplicity during decomposition")
        terms[lead] = mult
        for v in schur_weight_vectors(normalize(lead), m):
            c = counts.get(v, 0) - mult
            if c:
                counts[v] = c
            else:
                counts.pop(v, None)
    return IrrepDecomposition(m, terms)


def wedge_plethysm_general(
    delta, s: int, m: int, max_subsets: int = 4_000_000
) -> IrrepDecomposition:
    """Brute-force decomposition of the s-th exterior power of S_delta C^m."""
    delta = normalize(delta)
    if s < 0:
        raise ValueError("degree must be nonnegative")
    base = schur_weight_vectors(delta, m)
    n = len(base)
    if s > n:
        return IrrepDecomposition(m, {})
    if comb(n, s) > max_subsets:
        raise ResourceLimitError(
            f"wedge power needs {comb(n, s)} subsets, bound is {max_subsets}"
        )
    vectors: list[tuple[int, ...]] = []

    def rec(start, left, acc):
        if left == 0:
            vectors.append(tuple(acc))
            return
        for i in range(start, n - left + 1):
            rec(i + 1, left - 1, [a + b for a, b in zip(acc, base[i])])

    rec(0, s, [0] * m)
    return decompose_character(vectors, m)
