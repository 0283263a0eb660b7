"""Equivariant quivers with relations, from closed-form rules and from Ext.

Arrows and relations are stored as labeled slots (src, dst, weight, mult):
the weight is the dominant GL_n label of an irreducible sub-representation
of the path space from src to dst.  Path-level coefficients (Pieri
inclusion maps) are out of scope; emitted metadata says so.

Orientation: the slot src -> dst corresponds to Ext(S_dst, S_src), matching
the printed quiver displays this module reproduces as fixtures.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import UnsupportedFamilyError
from .ext_engine import FamilyConfig, ext_simples
from .gl_characters import dim_irrep, lr_coefficient
from .partitions import (
    GLWeight,
    Partition,
    enumerate_box,
    normalize,
    pad,
    transpose,
)

NAMED_FAMILIES = ("beilinson", "kapranov", "sym_maxminor", "rational_curve", "wedge_rank")


@dataclass(frozen=True)
class Slot:
    """One labeled arrow or relation slot."""

    src: int
    dst: int
    weight: GLWeight
    mult: int = 1

    def to_json(self) -> dict:
        return {"src": self.src, "dst": self.dst, "weight": list(self.weight), "mult": self.mult}


@dataclass
class EquivariantQuiver:
    n: int
    family: str
    vertices: list[Partition]
    arrows: list[Slot] = field(default_factory=list)
    relations: list[Slot] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def __post_init__(self):
        self.arrows = sorted(self.arrows, key=lambda s: (s.src, s.dst, s.weight))
        self.relations = sorted(self.relations, key=lambda s: (s.src, s.dst, s.weight))
        for slot in self.arrows + self.relations:
            if not (0 <= slot.src < len(self.vertices) and 0 <= slot.dst < len(self.vertices)):
                raise ValueError(f"slot {slot} references a missing vertex")

    def vertex_index(self, p) -> int:
        return self.vertices.index(normalize(p))

    def reorder(self, order: list[int]) -> "EquivariantQuiver":
        """Apply a vertex permutation: new vertex i is old vertex order[i]."""
        if sorted(order) != list(range(len(self.vertices))):
            raise ValueError("order must be a permutation of the vertex indices")
        inv = {old: new for new, old in enumerate(order)}
        return EquivariantQuiver(
            self.n,
            self.family,
            [self.vertices[i] for i in order],
            [Slot(inv[s.src], inv[s.dst], s.weight, s.mult) for s in self.arrows],
            [Slot(inv[s.src], inv[s.dst], s.weight, s.mult) for s in self.relations],
            self.notes + [f"vertex order overridden: {order}"],
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "family": self.family,
            "vertices": [list(v) for v in self.vertices],
            "arrows": [s.to_json() for s in self.arrows],
            "relations": [s.to_json() for s in self.relations],
            "framing": "E",
            "notes": self.notes,
        }


def weight_name(w, n: int) -> str:
    """Paper-style name of the irrep with highest weight w."""
    w = tuple(w)
    if all(x == 0 for x in w):
        return "C"
    body = normalize(tuple(x for x in w if x > 0)) if min(w) >= 0 else None
    if body is not None:
        if body == (1,):
            return "E"
        if len(body) == 1:
            return f"Sym_{body[0]}E" if body[0] > 1 else "E"
        if all(x == 1 for x in body):
            return f"wedge^{len(body)}E"
        return "S_{" + ",".join(str(x) for x in body) + "}E"
    if max(w) <= 0:
        dual = normalize(tuple(-x for x in reversed(w)))
        inner = weight_name(pad(dual, n), n)
        return inner + "*"
    return "S_{" + ",".join(str(x) for x in w) + "}E"


def quiver_from_ext(cfg: FamilyConfig) -> EquivariantQuiver:
    """Quiver with relations from the Ext engine: degree 1 arrows, degree 2 relations."""
    vertices = cfg.vertices()
    index = {v: i for i, v in enumerate(vertices)}
    arrows = []
    relations = []
    for a in vertices:
        for b in vertices:
            dec = ext_simples(cfg, a, b, 2)
            for w, m in dec.layer(1).sorted_terms():
                arrows.append(Slot(index[b], index[a], w, m))
            for w, m in dec.layer(2).sorted_terms():
                relations.append(Slot(index[b], index[a], w, m))
    notes = [
        "relations are sub-representation slots; path coefficients are not computed",
        f"vertex order: partitions in the {cfg.r}x{cfg.k} box, area then reverse-lex",
    ]
    return EquivariantQuiver(cfg.n, cfg.family, vertices, arrows, relations, notes)


def _line_vertices(count: int) -> list[Partition]:
    return [(1,) * i for i in range(count)]


def build_named(name: str, n: int, r: int | None = None, d: int | None = None) -> EquivariantQuiver:
    """The named quivers, exactly as displayed in their source tables."""
    if name == "beilinson":
        verts = _line_vertices(n)
        e1 = pad((1,), n)
        w2 = pad((1, 1), n)
        arrows = [Slot(i, i + 1, e1) for i in range(n - 1)]
        relations = [Slot(i, i + 2, w2) for i in range(n - 2)]
        return EquivariantQuiver(n, "beilinson", verts, arrows, relations)

    if name == "kapranov":
        if r is None:
            raise ValueError("kapranov needs r")
        verts = enumerate_box(r, n - r)
        index = {v: i for i, v in enumerate(verts)}
        e1 = pad((1,), n)
        sym2 = pad((2,), n)
        w2 = pad((1, 1), n)
        arrows = []
        relations = []
        for big in verts:
            for small in verts:
                if sum(big) == sum(small) + 1 and lr_coefficient(big, small, (1,)):
                    arrows.append(Slot(index[big], index[small], e1))
                if sum(big) == sum(small) + 2:
                    cs = lr_coefficient(transpose(big), transpose(small), (2,))
                    cw = lr_coefficient(transpose(big), transpose(small), (1, 1))
                    if cs:
                        relations.append(Slot(index[big], index[small], sym2, cs))
                    if cw:
                        relations.append(Slot(index[big], index[small], w2, cw))
        return EquivariantQuiver(n, "kapranov", verts, arrows, relations)

    if name == "sym_maxminor":
        # printed display: forward/backward E arrows, wedge^2 E on the
        # distance-two slots, Sym_2 E loops at every vertex
        verts = _line_vertices(n)
        e1 = pad((1,), n)
        sym2 = pad((2,), n)
        w2 = pad((1, 1), n)
        arrows = [Slot(i, i + 1, e1) for i in range(n - 1)]
        arrows += [Slot(i + 1, i, e1) for i in range(n - 1)]
        relations = [Slot(i, i + 2, w2) for i in range(n - 2)]
        relations += [Slot(i + 2, i, w2) for i in range(n - 2)]
        relations += [Slot(i, i, sym2) for i in range(n)]
        return EquivariantQuiver(n, "sym_maxminor", verts, arrows, relations)

    if name == "rational_curve":
        if d is None or d < 2:
            raise ValueError("rational_curve needs d >= 2")
        if n != 2:
            raise ValueError("the rational-normal-curve quiver lives on n = 2")
        verts = _line_vertices(2)
        rel = pad((d - 1, 1), n)
        arrows = [Slot(1, 0, pad((1,), n)), Slot(0, 1, pad((d - 1,), n))]
        relations = [Slot(0, 0, rel), Slot(1, 1, rel)]
        return EquivariantQuiver(n, "rational_curve", verts, arrows, relations)

    if name == "wedge_rank":
        if d is None:
            raise ValueError("wedge_rank needs d")
        if not 2 <= d <= n - 2:
            raise ValueError("wedge_rank needs 2 <= d <= n - 2")
        # displayed with n + 1 vertices, backward E arrows and forward
        # jump-d arrows labeled C
        count = n + 1
        verts = _line_vertices(count)
        e1 = pad((1,), n)
        w2 = pad((1, 1), n)
        triv = (0,) * n
        arrows = [Slot(i, i - 1, e1) for i in range(1, count)]
        arrows += [Slot(i, i + d, triv) for i in range(count - d)]
        relations = [Slot(i + 1, i - 1, w2) for i in range(1, count - 1)]
        relations += [Slot(i, i + 2 * d - 2, w2) for i in range(count - (2 * d - 2))]
        return EquivariantQuiver(n, "wedge_rank", verts, arrows, relations)

    raise UnsupportedFamilyError(f"unknown named quiver {name!r}")


# -- emission -----------------------------------------------------------------

def emit(q: EquivariantQuiver, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(q.to_json(), indent=2, sort_keys=True) + "\n"
    if fmt == "dot":
        return _emit_dot(q)
    if fmt == "text":
        return _emit_text(q)
    raise ValueError(f"unknown format {fmt!r}")


def _vertex_label(p) -> str:
    return "[" + ",".join(str(x) for x in p) + "]"


def _emit_dot(q: EquivariantQuiver) -> str:
    lines = ["digraph quiver {"]
    for i, v in enumerate(q.vertices):
        lines.append(f'  v{i} [label="{_vertex_label(v)}"];')
    for s in q.arrows:
        label = weight_name(s.weight, q.n)
        if s.mult > 1:
            label += f" x {s.mult}"
        lines.append(f'  v{s.src} -> v{s.dst} [label="{label}"];')
    for s in q.relations:
        label = "rel: " + weight_name(s.weight, q.n)
        if s.mult > 1:
            label += f" x {s.mult}"
        lines.append(f'  v{s.src} -> v{s.dst} [style=dashed, label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _emit_text(q: EquivariantQuiver) -> str:
    lines = [f"quiver {q.family} (n={q.n})"]
    lines.append("vertices: " + " ".join(f"{i}:{_vertex_label(v)}" for i, v in enumerate(q.vertices)))
    lines.append("arrows:")
    for idx, s in enumerate(q.arrows, start=1):
        tag = f"α_{idx}({weight_name(s.weight, q.n)})"
        if s.mult > 1:
            tag += f" x {s.mult}"
        lines.append(f"  {tag}: {s.src} -> {s.dst}")
    lines.append("relations:")
    for s in q.relations:
        tag = weight_name(s.weight, q.n)
        if s.mult > 1:
            tag += f" x {s.mult}"
        lines.append(f"  Hom({s.src}, {s.dst}): {tag}")
    for note in q.notes:
        lines.append(f"# {note}")
    return "\n".join(lines) + "\n"
