"""Bott's algorithm for cohomology of homogeneous bundles on Grassmannians.

A bundle S_a R* (x) S_b Q* on the Grassmannian with tautological sub-bundle
R of rank k inside an n-dimensional space is encoded by the concatenated
weight w = (a, b).  Adding rho = (n-1, ..., 0), a repeated entry kills all
cohomology; otherwise sorting counts the unique nonvanishing degree and the
sorted weight minus rho labels the GL_n irrep of that cohomology group.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import (
    GLWeight,
    Partition,
    area,
    is_dominant,
    negative_part,
    normalize,
    pad,
    positive_part,
    transpose,
    contains,
)


@dataclass(frozen=True)
class GrassContext:
    """Grassmannian data: ambient dimension n, sub-bundle rank k."""

    n: int
    k: int

    def __post_init__(self):
        if not 0 <= self.k <= self.n:
            raise ValueError(f"need 0 <= k <= n, got k={self.k}, n={self.n}")

    @property
    def q_rank(self) -> int:
        return self.n - self.k


@dataclass(frozen=True)
class CohomologyOutcome:
    """Bott dichotomy: everything vanishes, or one degree survives."""

    vanishes: bool
    degree: int | None = None
    weight: GLWeight | None = None

    @staticmethod
    def zero() -> "CohomologyOutcome":
        return CohomologyOutcome(True)

    @staticmethod
    def nonzero(degree: int, weight) -> "CohomologyOutcome":
        return CohomologyOutcome(False, degree, tuple(weight))

    def to_json(self) -> dict:
        if self.vanishes:
            return {"vanishes": True}
        return {"vanishes": False, "degree": self.degree, "weight": list(self.weight)}


def dotted_sort(w) -> CohomologyOutcome:
    """Run the dotted Weyl-group sort on a full GL_n weight."""
    w = tuple(w)
    n = len(w)
    shifted = [w[i] + (n - 1 - i) for i in range(n)]
    if len(set(shifted)) < n:
        return CohomologyOutcome.zero()
    inversions = 0
    for i in range(n):
        for j in range(i + 1, n):
            if shifted[i] < shifted[j]:
                inversions += 1
    shifted.sort(reverse=True)
    weight = tuple(shifted[i] - (n - 1 - i) for i in range(n))
    return CohomologyOutcome.nonzero(inversions, weight)


def cohomology(ctx: GrassContext, r_label, q_label) -> CohomologyOutcome:
    """Cohomology of S_{r_label} R* (x) S_{q_label} Q* on the Grassmannian."""
    r_label = tuple(r_label)
    q_label = tuple(q_label)
    if len(r_label) != ctx.k or len(q_label) != ctx.q_rank:
        raise ValueError("label lengths must match the bundle ranks")
    if not (is_dominant(r_label) and is_dominant(q_label)):
        raise ValueError("labels must be dominant")
    return dotted_sort(r_label + q_label)


def vanishing_filters(lam, gamma, s: int, t: int, delta) -> bool:
    """True when the contribution certainly vanishes, by the a-priori rules.

    The rules: no terms with s > t; the total area of (gamma, lambda) cannot
    be negative; the positive area of gamma is capped by t - s; and the
    column diagram of gamma's negative part must sit inside lambda.
    """
    lam = normalize(lam)
    gamma = tuple(gamma)
    if not is_dominant(gamma):
        raise ValueError(f"gamma not dominant: {gamma}")
    if s > t:
        return True
    if area(gamma) + area(lam) < 0:
        return True
    if area(positive_part(gamma)) > t - s:
        return True
    neg_cols = transpose(negative_part(gamma))
    if not contains(lam, neg_cols):
        return True
    return False


def _q_side_values(lam, ctx: GrassContext) -> list[int]:
    """Shifted entries contributed by the Q*-label (the forbidden set)."""
    q = ctx.q_rank
    lam = pad(normalize(lam), q)
    return [lam[j] + (q - 1 - j) for j in range(q)]


def _gamma_from_values(values, ctx: GrassContext) -> GLWeight:
    """Recover the R*-label from its strictly decreasing shifted entries."""
    n = ctx.n
    return tuple(values[i] - (n - 1 - i) for i in range(ctx.k))


def _values_from_gamma(gamma, ctx: GrassContext) -> list[int]:
    n = ctx.n
    return [gamma[i] + (n - 1 - i) for i in range(ctx.k)]


def _t_value(gamma, lam, ctx: GrassContext, s: int) -> tuple[int, int]:
    """Cohomological degree and Ext degree t = degree + s + |gamma|."""
    out = dotted_sort(tuple(gamma) + tuple(pad(normalize(lam), ctx.q_rank)))
    if out.vanishes:
        raise ValueError(f"gamma {gamma} admits no cohomology for {lam}")
    return out.degree, out.degree + s + sum(gamma)


def _infer_s(lam, s: int | None) -> int:
    # bookkeeping for the degree-2 bundle families: |lambda| = 2s
    if s is not None:
        return s
    a = area(normalize(lam))
    if a % 2:
        raise ValueError("cannot infer the layer degree; pass s explicitly")
    return a // 2


def minimal_gamma(lam, ctx: GrassContext, s: int | None = None) -> tuple[GLWeight, int]:
    """The unique minimal-area dominant R*-label with surviving cohomology.

    Entries are bounded below by -(n-k); returns (gamma, t) where t is the
    Ext-degree bookkeeping value degree + s + |gamma|.
    """
    lam = normalize(lam)
    if len(lam) > ctx.q_rank:
        raise ValueError("lambda must fit the Q-side rank")
    s = _infer_s(lam, s)
    forbidden = set(_q_side_values(lam, ctx))
    values: list[int] = []
    floor = 0
    for _ in range(ctx.k):
        v = floor
        while v in forbidden:
            v += 1
        values.append(v)
        floor = v + 1
    values.reverse()
    gamma = _gamma_from_values(values, ctx)
    _, t = _t_value(gamma, lam, ctx, s)
    return gamma, t


def gamma_successors(
    gamma, lam, ctx: GrassContext, op_index: int, s: int | None = None
) -> GLWeight:
    """Successor operation: raise the op_index-th entry to its next admissible value."""
    lam = normalize(lam)
    gamma = tuple(gamma)
    if not is_dominant(gamma):
        raise ValueError("gamma must be dominant")
    if not 1 <= op_index <= ctx.k:
        raise ValueError(f"operation index must be in 1..{ctx.k}")
    forbidden = set(_q_side_values(lam, ctx))
    values = _values_from_gamma(gamma, ctx)
    i = op_index - 1
    cap = values[i - 1] if i > 0 else None
    v = values[i] + 1
    while v in forbidden:
        v += 1
    if cap is not None and v >= cap:
        raise ValueError(
            f"successor operation {op_index} undefined at {gamma}: collides with entry {op_index - 1}"
        )
    values[i] = v
    return _gamma_from_values(values, ctx)


def enumerate_gammas(
    lam, ctx: GrassContext, gamma1_bound: int | None = None, s: int | None = None
) -> list[tuple[GLWeight, int, int]]:
    """All dominant R*-labels with surviving cohomology, by successor closure.

    Starts from minimal_gamma and applies the successor operations until the
    leading entry exceeds gamma1_bound (default: the Q-side rank).  Returns
    (gamma, t, degree) triples sorted by (t, gamma).
    """
    lam = normalize(lam)
    s = _infer_s(lam, s)
    bound = ctx.q_rank if gamma1_bound is None else gamma1_bound
    start, _ = minimal_gamma(lam, ctx, s)
    seen = set()
    stack = [start]
    found = []
    while stack:
        g = stack.pop()
        if g in seen or (g and g[0] > bound):
            continue
        seen.add(g)
        degree, t = _t_value(g, lam, ctx, s)
        found.append((g, t, degree))
        for idx in range(1, ctx.k + 1):
            try:
                stack.append(gamma_successors(g, lam, ctx, idx, s))
            except ValueError:
                continue
    found.sort(key=lambda item: (item[1], item[0]))
    return found
