"""Geometric-technique complex terms and maximal Cohen-Macaulay checks.

The presentation complex lives on the Grassmannian of (n-r)-planes in an
n-dimensional space F*, with the exterior powers of G (x) R expanded by
the Cauchy formula; each summand goes through one Bott sort.  MCM checks
run the canonical-twist cohomology test degree by degree and report
honestly bounded verdicts: a search never claims vanishing beyond its
degree bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .bott import dotted_sort
from .errors import ResourceLimitError, UnsupportedFamilyError
from .ext_engine import FamilyConfig
from .gl_characters import (
    IrrepDecomposition,
    cauchy_layer,
    decompose_character,
    schur_weight_vectors,
    tensor_dominant,
)
from .partitions import (
    GLWeight,
    Partition,
    area,
    dual_weight,
    normalize,
    pad,
    partitions_of,
    transpose,
)


# -- presentation complex ------------------------------------------------------

@dataclass(frozen=True)
class BiFreeSummand:
    """One summand S_{g_irrep} G (x) S_{f_weight} F of a free term."""

    g_irrep: Partition
    f_weight: GLWeight
    mult: int
    internal_degree: int

    def to_json(self) -> dict:
        return {
            "g_irrep": list(self.g_irrep),
            "f_weight": list(self.f_weight),
            "mult": self.mult,
            "degree": self.internal_degree,
        }


def complex_terms(
    m: int, n: int, r: int, alpha, i_max: int
) -> dict[int, list[BiFreeSummand]]:
    """Terms F_0 ... F_{i_max} of the geometric-technique complex for S_alpha Q*.

    Expands the exterior powers of G (x) R over partitions mu, sorts each
    S_mu R (x) S_alpha Q* by Bott, and files the degree-j survivors of the
    (i+j)-th exterior power under term i.
    """
    if not 0 <= r < n:
        raise ValueError("need 0 <= r < n")
    alpha = normalize(alpha)
    k = n - r
    if len(alpha) > r or (alpha and alpha[0] > k):
        raise ValueError("alpha must fit the r x (n-r) box")
    terms: dict[int, list[BiFreeSummand]] = {i: [] for i in range(i_max + 1)}
    max_boxes = i_max + k * r  # cohomological degree is at most dim Grass
    for total in range(0, max_boxes + 1):
        for mu in partitions_of(total, max_len=k, max_part=m):
            w = dual_weight(pad(mu, k)) + pad(alpha, r)
            out = dotted_sort(w)
            if out.vanishes:
                continue
            i = total - out.degree
            if 0 <= i <= i_max:
                terms[i].append(
                    BiFreeSummand(transpose(mu), out.weight, 1, total)
                )
    for i in terms:
        terms[i].sort(key=lambda s: (s.internal_degree, s.g_irrep, s.f_weight))
    return terms


def presentation_closed_form(
    m: int, n: int, r: int, alpha
) -> tuple[list[BiFreeSummand], list[BiFreeSummand]]:
    """The displayed closed forms of the terms F_0 and F_1."""
    alpha = normalize(alpha)
    t = len(alpha)
    f0 = [BiFreeSummand(alpha, (0,) * n, 1, area(alpha))]
    u = r + 1 - t
    g_shape = alpha + (1,) * u
    if r + 1 > m:
        f1 = []
    else:
        f_weight = (0,) * (n - u) + (-1,) * u
        f1 = [BiFreeSummand(g_shape, f_weight, 1, area(alpha) + u)]
    return f0, f1


# -- MCM verdicts --------------------------------------------------------------

@dataclass(frozen=True)
class McmVerdict:
    kind: str  # criterion_true | criterion_false | witness | no_witness
    bound: int | None = None
    sym_degree: int | None = None
    weight: GLWeight | None = None
    cohomological_degree: int | None = None

    def is_mcm_claim(self) -> bool | None:
        if self.kind == "criterion_true":
            return True
        if self.kind == "criterion_false":
            return False
        if self.kind == "witness":
            return False
        return None  # no witness up to a bound proves nothing by itself

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        if self.bound is not None:
            out["bound"] = self.bound
        if self.sym_degree is not None:
            out["sym_degree"] = self.sym_degree
            out["weight"] = list(self.weight)
            out["degree"] = self.cohomological_degree
        return out


def mcm_criterion(cfg: FamilyConfig) -> McmVerdict:
    """Closed-form maximal Cohen-Macaulay verdict per bundle family."""
    n, r = cfg.n, cfg.r
    if cfg.family == "sym":
        return McmVerdict("criterion_true" if r >= n - 1 else "criterion_false")
    if cfg.family == "skew":
        # the resolved locus is everything when r = n; the proper cases never are
        return McmVerdict("criterion_true" if r == n else "criterion_false")
    if cfg.family == "tensor_antisym":
        good = n >= 6 and 3 <= cfg.d <= n - 3
        return McmVerdict("criterion_true" if good else "criterion_false")
    if cfg.family == "tensor_sym":
        good = comb(n + cfg.d - 1, n - 1) - n - 1 >= 0
        return McmVerdict("criterion_true" if good else "criterion_false")
    raise UnsupportedFamilyError(f"no MCM criterion for family {cfg.family!r}")


def _degree2_twists(cfg: FamilyConfig) -> tuple[int, int]:
    """(power of det Q*, power of det E) in the canonical twist of Z."""
    n, r = cfg.n, cfg.r
    if cfg.family == "sym":
        return n - r - 1, n + 1 - r
    if cfg.family == "skew":
        return n - r + 1, n - 1 - r
    raise UnsupportedFamilyError(cfg.family)


def _sym_layers(cfg: FamilyConfig, e: int) -> list[tuple[Partition, int]] | None:
    """Summands of Sym_e(S_delta C^r) with multiplicity, or None when unknown.

    Closed forms: the degree-2 families (Cauchy), a single row or column,
    the full column (a determinant power), and the duals of those via
    rank - d reflections.
    """
    r = cfg.r
    delta = cfg.delta
    if e == 0:
        return [((), 1)]
    if delta == (2,):
        return [(lam, 1) for lam in cauchy_layer(e, "sym2") if len(lam) <= r]
    if delta == (1, 1):
        return [(lam, 1) for lam in cauchy_layer(e, "wedge2") if len(lam) <= r]
    if delta == (1,):
        return [((e,), 1)]
    if len(delta) == 1 and r == 1:
        return [((delta[0] * e,), 1)]
    if delta == (1,) * r:
        return [((e,) * r, 1)]
    if delta == (1,) * (r - 1):
        # wedge^{r-1} V = V* (x) det V
        return [((e,) * (r - 1), 1)]
    if delta == (1,) * (r - 2) and r >= 2:
        # wedge^{r-2} V = wedge^2 V* (x) det V
        out = []
        for kap in cauchy_layer(e, "wedge2"):
            if len(kap) > r:
                continue
            lam = tuple(e - x for x in reversed(pad(kap, r)))
            out.append((normalize(lam) if min(lam) >= 0 else lam, 1))
        return out
    return None


def _sym_layers_brute(cfg: FamilyConfig, e: int, max_monomials: int = 2_000_000):
    """Sym_e of S_delta C^r by character brute force, with a resource bound."""
    base = schur_weight_vectors(cfg.delta, cfg.r)
    if comb(len(base) + e - 1, e) > max_monomials:
        raise ResourceLimitError(
            f"Sym_{e} of a {len(base)}-dimensional space exceeds the bound"
        )
    vectors = []

    def rec(start, left, acc):
        if left == 0:
            vectors.append(tuple(acc))
            return
        for i in range(start, len(base)):
            rec(i, left - 1, [a + b for a, b in zip(acc, base[i])])

    rec(0, e, [0] * cfg.r)
    dec = decompose_character(vectors, cfg.r)
    return [(w, m) for w, m in dec.sorted_terms()]


def _tensor_det_powers(cfg: FamilyConfig) -> tuple[int, int]:
    """(power of det Q, power of det E) in the reduced twisted test bundle."""
    n = cfg.n
    if cfg.family == "tensor_antisym":
        return comb(n - 2, cfg.d - 1) - n, (n - 1) - comb(n - 1, cfg.d - 1)
    if cfg.family == "tensor_sym":
        return comb(n + cfg.d - 2, n - 1) - n, (n - 1) - comb(n + cfg.d - 2, n - 1)
    raise UnsupportedFamilyError(cfg.family)


def _tensor_prune(cfg: FamilyConfig) -> bool:
    """True when no canonical-twist witness can exist at any degree.

    On the Grassmannian of lines the sub-bundle has rank one, so a higher
    cohomology survivor needs the bottom entry of the twisted Q-side weight
    below -1.  Layers are partitions and the tilting labels lower a layer's
    bottom entry by at most one, so the bottom entry is at least c_q - 1,
    which rules out every degree at once when c_q >= 0.
    """
    c_q, _ = _tensor_det_powers(cfg)
    return c_q >= 0


def mcm_witness_search(cfg: FamilyConfig, degree_bound: int) -> McmVerdict:
    """Scan Sym layers for a higher-cohomology survivor of the twisted bundle.

    Returns the first witness in the lowest symmetric degree, or an honest
    NoWitnessUpTo(degree_bound).
    """
    if degree_bound < 0:
        raise ValueError("degree bound must be nonnegative")
    if cfg.family in ("sym", "skew"):
        return _witness_degree2(cfg, degree_bound)
    if cfg.family in ("tensor_antisym", "tensor_sym"):
        return _witness_tensor(cfg, degree_bound)
    raise UnsupportedFamilyError(f"no MCM search for family {cfg.family!r}")


def _witness_degree2(cfg: FamilyConfig, degree_bound: int) -> McmVerdict:
    r, k = cfg.r, cfg.k
    w_q, s_e = _degree2_twists(cfg)
    verts = cfg.vertices()
    tag = "sym2" if cfg.family == "sym" else "wedge2"
    for e in range(degree_bound + 1):
        best = None
        for alpha in verts:
            a_dual = dual_weight(pad(alpha, r))
            for beta in verts:
                pair = tensor_dominant(a_dual, pad(beta, r), r)
                for lam in cauchy_layer(e, tag):
                    if len(lam) > r:
                        continue
                    for nu in pair.terms:
                        prods = tensor_dominant(nu, pad(lam, r), r)
                        for mu in prods.terms:
                            shifted = tuple(x - w_q + s_e for x in mu) + (s_e,) * k
                            out = dotted_sort(shifted)
                            if out.vanishes or out.degree == 0:
                                continue
                            cand = (out.degree, out.weight)
                            if best is None or cand < best:
                                best = cand
        if best is not None:
            return McmVerdict(
                "witness",
                bound=degree_bound,
                sym_degree=e,
                weight=best[1],
                cohomological_degree=best[0],
            )
    return McmVerdict("no_witness", bound=degree_bound)


def _witness_tensor(cfg: FamilyConfig, degree_bound: int) -> McmVerdict:
    n, r = cfg.n, cfg.r
    c_q, s_e = _tensor_det_powers(cfg)
    if _tensor_prune(cfg):
        return McmVerdict("no_witness", bound=degree_bound)
    for e in range(degree_bound + 1):
        layers = _sym_layers(cfg, e)
        if layers is None:
            layers = _sym_layers_brute(cfg, e)
        best = None
        for i in range(n):
            for j in range(n):
                pre = tensor_dominant(
                    pad((1,) * i, r), dual_weight(pad((1,) * j, r)), r
                )
                for lam, _ in layers:
                    lam_w = pad(tuple(normalize(lam)), r) if min(lam, default=0) >= 0 else tuple(lam)
                    for nu in pre.terms:
                        for mu in tensor_dominant(nu, lam_w, r).terms:
                            shifted = tuple(x + c_q + s_e for x in mu) + (s_e,)
                            out = dotted_sort(shifted)
                            if out.vanishes or out.degree == 0:
                                continue
                            cand = (out.degree, out.weight)
                            if best is None or cand < best:
                                best = cand
        if best is not None:
            return McmVerdict(
                "witness",
                bound=degree_bound,
                sym_degree=e,
                weight=best[1],
                cohomological_degree=best[0],
            )
    return McmVerdict("no_witness", bound=degree_bound)
