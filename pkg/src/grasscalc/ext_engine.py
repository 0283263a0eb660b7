"""Ext groups between equivariant simples over bundle-family desingularizations.

For the total space of S_delta Q* over the Grassmannian, Ext^t(S_alpha,
S_beta) decomposes as a sum over exterior-power layers of the bundle, of
Grassmannian cohomology of S_lambda Q* (x) S_beta' R* (x) S_alpha' R.  Every
layer is pushed through the same pipeline: plethysm layer, mixed tensor
product on the R side, one Bott sort per summand.  Closed forms for the
degree-1 and degree-2 layers of the symmetric and skew families are kept
as an independent fast path.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bott import GrassContext, dotted_sort
from .errors import UnsupportedFamilyError
from .gl_characters import (
    IrrepDecomposition,
    tensor_dominant,
    wedge_plethysm_general,
    wedge_plethysm_hooks,
)
from .partitions import (
    GLWeight,
    Partition,
    area,
    dual_weight,
    enumerate_box,
    normalize,
    pad,
    transpose,
)

FAMILIES = ("sym", "skew", "tensor_antisym", "tensor_sym", "custom")


@dataclass(frozen=True)
class FamilyConfig:
    """A bundle family Z = total space of S_delta Q* over a Grassmannian.

    n is the ambient dimension, r the rank of the tautological quotient Q.
    The symmetric family takes delta = (2), the skew family delta = (1, 1);
    the tensor-rank families live on the Grassmannian of lines (r = n - 1)
    with delta a single column (antisym) or single row (sym) of size d.
    """

    family: str
    n: int
    r: int
    d: int | None = None
    delta: Partition = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise UnsupportedFamilyError(f"unknown family {self.family!r}")
        if not 0 < self.r <= self.n:
            raise ValueError(f"need 0 < r <= n, got r={self.r}, n={self.n}")
        if self.family == "sym":
            object.__setattr__(self, "delta", (2,))
        elif self.family == "skew":
            object.__setattr__(self, "delta", (1, 1))
        elif self.family in ("tensor_antisym", "tensor_sym"):
            if self.d is None or self.d < 1:
                raise ValueError("tensor families need d >= 1")
            if self.r != self.n - 1:
                raise ValueError("tensor families require Q-rank n - 1")
            delta = (1,) * self.d if self.family == "tensor_antisym" else (self.d,)
            object.__setattr__(self, "delta", delta)
        else:
            object.__setattr__(self, "delta", normalize(self.delta or ()))

    @property
    def k(self) -> int:
        """Rank of the tautological sub-bundle R."""
        return self.n - self.r

    @property
    def ctx(self) -> GrassContext:
        return GrassContext(self.n, self.k)

    def vertices(self) -> list[Partition]:
        return enumerate_box(self.r, self.k)


@dataclass
class GradedDecomposition:
    """Map from cohomological degree t >= 0 to a GL_n decomposition."""

    rank: int
    layers: dict[int, IrrepDecomposition] = field(default_factory=dict)

    def add(self, t: int, weight: GLWeight, mult: int):
        layer = dict(self.layers[t].terms) if t in self.layers else {}
        layer[weight] = layer.get(weight, 0) + mult
        self.layers[t] = IrrepDecomposition(self.rank, layer)

    def layer(self, t: int) -> IrrepDecomposition:
        return self.layers.get(t, IrrepDecomposition(self.rank, {}))

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "layers": [
                {"t": t, **self.layers[t].to_json()}
                for t in sorted(self.layers)
            ],
        }


def wedge_layers(cfg: FamilyConfig, s: int) -> list[tuple[Partition, int]]:
    """Summands of the s-th exterior power of S_delta C^r, with multiplicity."""
    if s == 0:
        return [((), 1)]
    if not cfg.delta:
        return []
    if cfg.delta == (2,):
        return [(lam, 1) for lam in wedge_plethysm_hooks(s, "sym2") if len(lam) <= cfg.r]
    if cfg.delta == (1, 1):
        return [(lam, 1) for lam in wedge_plethysm_hooks(s, "wedge2") if len(lam) <= cfg.r]
    dec = wedge_plethysm_general(cfg.delta, s, cfg.r)
    return [(normalize(w), m) for w, m in dec.sorted_terms()]


def r_side_products(cfg: FamilyConfig, alpha, beta) -> dict[GLWeight, int]:
    """Decomposition of S_beta' R* (x) S_alpha' R into S_gamma R* summands."""
    k = cfg.k
    if k == 0:
        if normalize(alpha) or normalize(beta):
            raise ValueError("vertices must be empty when the sub-bundle has rank 0")
        return {(): 1}
    b = pad(transpose(beta), k)
    a_dual = dual_weight(pad(transpose(alpha), k))
    return dict(tensor_dominant(b, a_dual, k).terms)


def ext_simples(cfg: FamilyConfig, alpha, beta, t_max: int = 2) -> GradedDecomposition:
    """Ext^t(S_alpha, S_beta) for t <= t_max, as GL_n decompositions."""
    alpha = normalize(alpha)
    beta = normalize(beta)
    verts = set(cfg.vertices())
    if alpha not in verts or beta not in verts:
        raise ValueError("alpha and beta must be quiver vertices")
    shift = area(beta) - area(alpha)
    gammas = r_side_products(cfg, alpha, beta)
    result = GradedDecomposition(cfg.n)
    s = 0
    while s <= t_max:
        layers = wedge_layers(cfg, s)
        if s > 0 and not layers:
            break
        for lam, lam_mult in layers:
            q_label = pad(lam, cfg.r)
            for gamma, g_mult in gammas.items():
                out = dotted_sort(gamma + q_label)
                if out.vanishes:
                    continue
                t = out.degree + s + shift
                assert t >= s, "degree-window violation"
                if t <= t_max:
                    result.add(t, out.weight, lam_mult * g_mult)
        s += 1
    return result


def _mixed_mult(gammas: dict[GLWeight, int], gamma) -> int:
    return gammas.get(tuple(gamma), 0)


def _e(n: int, *parts) -> GLWeight:
    return pad(normalize(parts), n)


def ext1_closed(cfg: FamilyConfig, alpha, beta) -> IrrepDecomposition:
    """Closed form of Ext^1(S_alpha, S_beta) for the symmetric and skew families."""
    if cfg.family not in ("sym", "skew"):
        raise UnsupportedFamilyError("closed forms cover the sym and skew families")
    alpha = normalize(alpha)
    beta = normalize(beta)
    n, k = cfg.n, cfg.k
    gammas = r_side_products(cfg, alpha, beta)
    terms: dict[GLWeight, int] = {}

    def put(weight, mult):
        if mult:
            terms[weight] = terms.get(weight, 0) + mult

    put(_e(n, 1), _mixed_mult(gammas, pad((1,), k)))
    if cfg.family == "sym":
        if k == 1:
            put(_e(n, 1), _mixed_mult(gammas, (-1,)))
        else:
            put((0,) * n, _mixed_mult(gammas, (0,) * (k - 2) + (-1, -1)))
    else:
        put((0,) * n, _mixed_mult(gammas, (0,) * (k - 1) + (-2,)))
    return IrrepDecomposition(n, terms)


def ext2_closed(cfg: FamilyConfig, alpha, beta) -> IrrepDecomposition:
    """Closed form of Ext^2(S_alpha, S_beta) for the symmetric and skew families."""
    if cfg.family not in ("sym", "skew"):
        raise UnsupportedFamilyError("closed forms cover the sym and skew families")
    alpha = normalize(alpha)
    beta = normalize(beta)
    n, k = cfg.n, cfg.k
    gammas = r_side_products(cfg, alpha, beta)
    terms: dict[GLWeight, int] = {}

    def put(weight, mult):
        if mult:
            terms[weight] = terms.get(weight, 0) + mult

    sym2 = _e(n, 2)
    wedge2 = _e(n, 1, 1)
    wedge3 = _e(n, 1, 1, 1)
    triv = (0,) * n
    e1 = _e(n, 1)

    if cfg.family == "sym":
        if k == 1:
            put(sym2, _mixed_mult(gammas, (2,)))
            put(sym2, _mixed_mult(gammas, (-2,)))
            put(wedge2, _mixed_mult(gammas, (0,)))
        elif k == 2:
            put(sym2, _mixed_mult(gammas, (2, 0)))
            put(wedge2, _mixed_mult(gammas, (1, 1)))
            put(wedge2, _mixed_mult(gammas, (1, -1)))
            put(e1, _mixed_mult(gammas, (-1, -2)))
        else:
            put(sym2, _mixed_mult(gammas, pad((2,), k)))
            put(wedge2, _mixed_mult(gammas, pad((1, 1), k)))
            put(e1, _mixed_mult(gammas, (1,) + (0,) * (k - 3) + (-1, -1)))
            put(triv, _mixed_mult(gammas, (0,) * (k - 3) + (-1, -1, -2)))
    else:
        if k == 1:
            put(sym2, _mixed_mult(gammas, (2,)))
            put(wedge3, _mixed_mult(gammas, (1,)))
            put(e1, _mixed_mult(gammas, (-3,)))
        else:
            put(sym2, _mixed_mult(gammas, pad((2,), k)))
            put(wedge2, _mixed_mult(gammas, pad((1, 1), k)))
            put(e1, (
                _mixed_mult(gammas, (1,) + (0,) * (k - 2) + (-2,))
            ))
            put(triv, _mixed_mult(gammas, (0,) * (k - 2) + (-1, -3)))
    return IrrepDecomposition(n, terms)


def brute_gamma_candidates(ctx: GrassContext) -> list[GLWeight]:
    """All dominant length-k weights with entries in [-(n-k), n-k]."""
    lo, hi = -ctx.q_rank, ctx.q_rank
    out: list[GLWeight] = []

    def rec(prefix, bound):
        if len(prefix) == ctx.k:
            out.append(tuple(prefix))
            return
        for v in range(bound, lo - 1, -1):
            rec(prefix + [v], v)

    rec([], hi)
    return out
