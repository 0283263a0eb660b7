"""Exact Hilbert series, series matrices, inverses, and resolutions of simples.

A Hilbert series is stored as an integer-coefficient numerator over a
factored denominator prod (1 - t^a)^m.  The grading puts an irreducible
summand S_mu E in degree |mu|, so the coordinates of the degree-2 bundle
families sit in degree 2.  Closed forms are reconstructed from exactly
computed series coefficients against a proven numerator degree bound, and
the reconstruction is assert-checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .bott import dotted_sort
from .errors import SingularMatrixError, UnsupportedFamilyError
from .ext_engine import FamilyConfig, ext_simples
from .gl_characters import cauchy_layer, dim_irrep, lr_expand, tensor_dominant
from .partitions import GLWeight, Partition, area, dual_weight, normalize, pad


# -- dense integer polynomials ------------------------------------------------

class Poly:
    """Dense polynomial in t with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @staticmethod
    def monomial(coeff: int, degree: int) -> "Poly":
        return Poly((0,) * degree + (coeff,))

    @staticmethod
    def one() -> "Poly":
        return Poly((1,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return Poly(out)

    def __neg__(self):
        return Poly(tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly(tuple(x * other for x in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "Poly":
        """Multiply by t^k; k may be negative when divisible."""
        if k >= 0:
            return Poly((0,) * k + self.coeffs if self.coeffs else ())
        if any(self.coeffs[i] for i in range(min(-k, len(self.coeffs)))):
            raise ValueError(f"not divisible by t^{-k}")
        return Poly(self.coeffs[-k:])

    def coefficient(self, d: int) -> int:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def divexact(self, other: "Poly") -> "Poly":
        """Exact division; raises ValueError when the remainder is nonzero."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return Poly()
        if len(self.coeffs) < len(other.coeffs):
            raise ValueError("division is not exact")
        rem = [Fraction(x) for x in self.coeffs]
        den = [Fraction(x) for x in other.coeffs]
        q = [Fraction(0)] * (len(rem) - len(den) + 1)
        for i in range(len(q) - 1, -1, -1):
            c = rem[i + len(den) - 1] / den[-1]
            q[i] = c
            if c:
                for j, y in enumerate(den):
                    rem[i + j] -= c * y
        if any(rem):
            raise ValueError("division is not exact")
        if any(x.denominator != 1 for x in q):
            raise ValueError("division is not exact over the integers")
        return Poly([int(x) for x in q])

    def eval_fraction(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for d, c in enumerate(self.coeffs):
            if not c:
                continue
            if d == 0:
                parts.append(str(c))
            else:
                mono = "t" if d == 1 else f"t^{d}"
                if c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append("-" + mono)
                else:
                    parts.append(f"{c}{mono}")
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out

    __repr__ = __str__


def cyclotomic_factor(a: int) -> Poly:
    """The polynomial 1 - t^a."""
    return Poly((1,) + (0,) * (a - 1) + (-1,))


@dataclass(frozen=True)
class HilbertSeries:
    """numerator / prod_a (1 - t^a)^mult, kept with no cancellable factor."""

    numerator: Poly
    denominator: tuple[tuple[int, int], ...] = ()

    @staticmethod
    def make(numerator: Poly, denominator: dict[int, int]) -> "HilbertSeries":
        num = numerator
        den = {a: m for a, m in denominator.items() if m}
        if any(m < 0 for m in den.values()):
            raise ValueError("denominator multiplicities must be positive")
        if num.is_zero():
            return HilbertSeries(Poly(), ())
        changed = True
        while changed:
            changed = False
            for a in sorted(den):
                if den.get(a, 0) <= 0:
                    continue
                try:
                    reduced = num.divexact(cyclotomic_factor(a))
                except ValueError:
                    continue
                num = reduced
                den[a] -= 1
                if den[a] == 0:
                    del den[a]
                changed = True
        return HilbertSeries(num, tuple(sorted(den.items())))

    def den_dict(self) -> dict[int, int]:
        return dict(self.denominator)

    def series_coefficients(self, through: int) -> list[int]:
        """Power-series coefficients up to degree `through`."""
        coeffs = [Fraction(x) for x in self.numerator.coeffs[: through + 1]]
        coeffs += [Fraction(0)] * (through + 1 - len(coeffs))
        for a, m in self.denominator:
            for _ in range(m):
                # divide by (1 - t^a): cumulative sums with lag a
                for d in range(a, through + 1):
                    coeffs[d] += coeffs[d - a]
        out = []
        for x in coeffs:
            assert x.denominator == 1
            out.append(int(x))
        return out

    def __add__(self, other: "HilbertSeries") -> "HilbertSeries":
        den: dict[int, int] = {}
        for a, m in self.denominator:
            den[a] = max(den.get(a, 0), m)
        for a, m in other.denominator:
            den[a] = max(den.get(a, 0), m)
        num = Poly((0,))

        def lift(hs):
            p = hs.numerator
            for a, m in den.items():
                have = hs.den_dict().get(a, 0)
                for _ in range(m - have):
                    p = p * cyclotomic_factor(a)
            return p

        total = lift(self) + lift(other)
        return HilbertSeries.make(total, den)

    def __sub__(self, other: "HilbertSeries") -> "HilbertSeries":
        neg = HilbertSeries(-other.numerator, other.denominator)
        return self + neg

    def __eq__(self, other):
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        left = self.numerator
        for a, m in other.denominator:
            for _ in range(m):
                left = left * cyclotomic_factor(a)
        right = other.numerator
        for a, m in self.denominator:
            for _ in range(m):
                right = right * cyclotomic_factor(a)
        return left == right

    def shift(self, k: int) -> "HilbertSeries":
        return HilbertSeries.make(self.numerator.shift(k), self.den_dict())

    def __str__(self):
        num = str(self.numerator)
        if not self.denominator:
            return num
        dens = []
        for a, m in self.denominator:
            base = f"(1-t^{a})" if a != 1 else "(1-t)"
            dens.append(base + (f"^{m}" if m > 1 else ""))
        return f"({num})/" + "".join(dens)

    def to_json(self) -> dict:
        return {
            "numerator": list(self.numerator.coeffs),
            "denominator": [{"a": a, "mult": m} for a, m in self.denominator],
        }


# -- graded pieces of the section modules -------------------------------------

def _family_layer_tag(cfg: FamilyConfig) -> str:
    if cfg.family == "sym" or cfg.delta == (2,):
        return "sym2"
    if cfg.family == "skew" or cfg.delta == (1, 1):
        return "wedge2"
    raise UnsupportedFamilyError(
        f"Hilbert series need a degree-2 bundle family, not delta={cfg.delta}"
    )


def ambient_dimension(cfg: FamilyConfig) -> int:
    """Dimension of the ambient affine space (degree-2 coordinates)."""
    n = cfg.n
    if _family_layer_tag(cfg) == "sym2":
        return n * (n + 1) // 2
    return n * (n - 1) // 2


def _xi_rank(cfg: FamilyConfig) -> int:
    r = cfg.r
    if _family_layer_tag(cfg) == "sym2":
        return ambient_dimension(cfg) - r * (r + 1) // 2
    return ambient_dimension(cfg) - r * (r - 1) // 2


def hom_degree_coefficient(cfg: FamilyConfig, alpha, beta, degree: int) -> int:
    """Graded dimension of degree-`degree` maps M_alpha -> M_beta.

    Decomposes S_alpha Q (x) S_beta Q* (x) Sym_d(S_delta Q) and sums the
    dimensions of the Kempf (degree-zero) survivors of weight area `degree`.
    """
    alpha = normalize(alpha)
    beta = normalize(beta)
    tag = _family_layer_tag(cfg)
    r = cfg.r
    rest = degree - area(alpha) + area(beta)
    if rest < 0 or rest % 2:
        return 0
    d = rest // 2
    pair = tensor_dominant(pad(alpha, r), dual_weight(pad(beta, r)), r)
    total = 0
    for lam in cauchy_layer(d, tag):
        if len(lam) > r:
            continue
        for nu, m0 in pair.terms.items():
            for mu, m1 in tensor_dominant(nu, pad(lam, r), r).terms.items():
                if mu[-1] >= 0:
                    total += m0 * m1 * dim_irrep(pad(normalize(mu), cfg.n), cfg.n)
    return total


def hom_series(cfg: FamilyConfig, alpha, beta) -> HilbertSeries:
    """Closed-form series of Hom(M_alpha, M_beta) in the natural grading."""
    alpha = normalize(alpha)
    beta = normalize(beta)
    verts = set(cfg.vertices())
    if alpha not in verts or beta not in verts:
        raise ValueError("alpha and beta must be quiver vertices")
    n_amb = ambient_dimension(cfg)
    bound = 2 * _xi_rank(cfg) + area(alpha) + area(beta)
    margin = 4
    through = bound + margin
    series = [
        hom_degree_coefficient(cfg, alpha, beta, g) for g in range(through + 1)
    ]
    num = Poly(series)
    for _ in range(n_amb):
        num = num * cyclotomic_factor(2)
    coeffs = list(num.coeffs[: through + 1])
    for g in range(bound + 1, len(coeffs)):
        assert coeffs[g] == 0, "numerator bound violated; raise the margin"
    return HilbertSeries.make(Poly(coeffs[: bound + 1]), {2: n_amb})


def module_series(cfg: FamilyConfig, alpha) -> HilbertSeries:
    """Series of M_alpha, normalized so its generators sit in degree 0."""
    alpha = normalize(alpha)
    return hom_series(cfg, (), alpha).shift(-area(alpha))


@dataclass
class SeriesMatrix:
    """Square matrix of Hilbert series indexed by the quiver vertex list."""

    vertices: list[Partition]
    entries: list[list[HilbertSeries]]

    def to_json(self) -> dict:
        return {
            "vertices": [list(v) for v in self.vertices],
            "entries": [[e.to_json() for e in row] for row in self.entries],
        }


def series_matrix(cfg: FamilyConfig) -> SeriesMatrix:
    verts = cfg.vertices()
    entries = [[hom_series(cfg, a, b) for b in verts] for a in verts]
    return SeriesMatrix(verts, entries)


# -- exact inversion ----------------------------------------------------------

def _frac_gauss_inverse(rows: list[list[tuple[Poly, Poly]]]):
    """Gauss-Jordan over the rational-function field; entries are (num, den)."""

    def norm(num: Poly, den: Poly):
        if den.is_zero():
            raise ZeroDivisionError
        if num.is_zero():
            return Poly(), Poly.one()
        return num, den

    def add(a, b):
        return norm(a[0] * b[1] + b[0] * a[1], a[1] * b[1])

    def mul(a, b):
        return norm(a[0] * b[0], a[1] * b[1])

    def neg(a):
        return (-a[0], a[1])

    def inv(a):
        if a[0].is_zero():
            raise SingularMatrixError("zero pivot")
        return norm(a[1], a[0])

    def reduce(a):
        num, den = a
        if num.is_zero():
            return a
        # cheap normalization: strip common t-powers and the content sign
        shift = 0
        while num.coefficient(shift) == 0:
            shift += 1
        dshift = 0
        while den.coefficient(dshift) == 0:
            dshift += 1
        k = min(shift, dshift)
        if k:
            num = num.shift(-k)
            den = den.shift(-k)
        return num, den

    size = len(rows)
    aug = [
        [reduce(x) for x in row]
        + [(Poly.one() if i == j else Poly(), Poly.one()) for j in range(size)]
        for i, row in enumerate(rows)
    ]
    for col in range(size):
        pivot = next(
            (i for i in range(col, size) if not aug[i][col][0].is_zero()), None
        )
        if pivot is None:
            raise SingularMatrixError("matrix of series is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        piv_inv = inv(aug[col][col])
        aug[col] = [reduce(mul(x, piv_inv)) for x in aug[col]]
        for i in range(size):
            if i == col or aug[i][col][0].is_zero():
                continue
            factor = neg(aug[i][col])
            aug[i] = [
                reduce(add(x, mul(factor, y))) for x, y in zip(aug[i], aug[col])
            ]
    return [[aug[i][size + j] for j in range(size)] for i in range(size)]


def invert_series_matrix(matrix: SeriesMatrix) -> list[list[Poly]]:
    """Exact inverse; asserts every entry reduces to a (Laurent) polynomial."""
    den_all: dict[int, int] = {}
    for row in matrix.entries:
        for e in row:
            for a, m in e.denominator:
                den_all[a] = max(den_all.get(a, 0), m)
    common = Poly.one()
    for a, m in den_all.items():
        for _ in range(m):
            common = common * cyclotomic_factor(a)
    cleared = []
    for row in matrix.entries:
        new_row = []
        for e in row:
            p = e.numerator
            for a, m in den_all.items():
                have = e.den_dict().get(a, 0)
                for _ in range(m - have):
                    p = p * cyclotomic_factor(a)
            new_row.append((p, Poly.one()))
        cleared.append(new_row)
    inv = _frac_gauss_inverse(cleared)
    out: list[list[Poly]] = []
    for row in inv:
        out_row = []
        for num, den in row:
            scaled = num * common
            try:
                entry = scaled.divexact(den)
            except ValueError as exc:
                raise AssertionError(
                    "inverse entry is not a Laurent polynomial; upstream bug"
                ) from exc
            out_row.append(entry)
        out.append(out_row)
    return out


# -- resolutions of simples ----------------------------------------------------

@dataclass
class ResolutionTable:
    """Step i holds (E-irrep weight, vertex index, multiplicity) triples."""

    vertices: list[Partition]
    steps: list[list[tuple[GLWeight, int, int]]] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "vertices": [list(v) for v in self.vertices],
            "steps": [
                [
                    {"weight": list(w), "vertex": v, "mult": m}
                    for (w, v, m) in step
                ]
                for step in self.steps
            ],
        }


def resolution_of_simple(cfg: FamilyConfig, alpha, steps: int) -> ResolutionTable:
    """Projective resolution shape of the simple at alpha, through `steps` steps."""
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    alpha = normalize(alpha)
    verts = cfg.vertices()
    table = ResolutionTable(verts, [[] for _ in range(steps + 1)])
    for idx, beta in enumerate(verts):
        dec = ext_simples(cfg, alpha, beta, steps)
        for t, layer in sorted(dec.layers.items()):
            for w, m in layer.sorted_terms():
                table.steps[t].append((w, idx, m))
    for step in table.steps:
        step.sort(key=lambda item: (item[1], item[0]))
    return table


def resolution_terminated(table: ResolutionTable) -> bool:
    """True when the last computed step is already empty."""
    return bool(table.steps) and not table.steps[-1]


def resolution_alternating_series(
    cfg: FamilyConfig, table: ResolutionTable
) -> list[Poly]:
    """Per-vertex alternating sums sum_i (-1)^i dim(w) t^{|w|} over the table."""
    out = [Poly() for _ in table.vertices]
    for i, step in enumerate(table.steps):
        sign = -1 if i % 2 else 1
        for w, v, m in step:
            d = dim_irrep(w, cfg.n)
            out[v] = out[v] + Poly.monomial(sign * m * d, sum(w))
    return out
