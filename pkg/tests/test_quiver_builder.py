import json

import pytest

from grasscalc.errors import UnsupportedFamilyError
from grasscalc.ext_engine import FamilyConfig, ext_simples
from grasscalc.gl_characters import dim_irrep
from grasscalc.quiver_builder import (
    EquivariantQuiver,
    Slot,
    build_named,
    emit,
    quiver_from_ext,
    weight_name,
)


def slots(items):
    return sorted((s.src, s.dst, s.weight, s.mult) for s in items)


def test_beilinson():
    q = build_named("beilinson", 3)
    assert q.vertices == [(), (1,), (1, 1)]
    assert slots(q.arrows) == [(0, 1, (1, 0, 0), 1), (1, 2, (1, 0, 0), 1)]
    assert slots(q.relations) == [(0, 2, (1, 1, 0), 1)]
    assert "α_1(E)" in emit(q, "text")


def test_kapranov_grass24():
    q = build_named("kapranov", 4, r=2)
    assert q.vertices == [(), (1,), (2,), (1, 1), (2, 1), (2, 2)]
    ix = {v: i for i, v in enumerate(q.vertices)}
    assert len(q.arrows) == 6
    for big, small in [
        ((1,), ()), ((2,), (1,)), ((1, 1), (1,)),
        ((2, 1), (2,)), ((2, 1), (1, 1)), ((2, 2), (2, 1)),
    ]:
        assert (ix[big], ix[small], (1, 0, 0, 0), 1) in slots(q.arrows)
    expected_relations = [
        (ix[(2,)], ix[()], (1, 1, 0, 0), 1),
        (ix[(1, 1)], ix[()], (2, 0, 0, 0), 1),
        (ix[(2, 2)], ix[(2,)], (1, 1, 0, 0), 1),
        (ix[(2, 2)], ix[(1, 1)], (2, 0, 0, 0), 1),
        (ix[(2, 1)], ix[(1,)], (2, 0, 0, 0), 1),
        (ix[(2, 1)], ix[(1,)], (1, 1, 0, 0), 1),
    ]
    assert slots(q.relations) == sorted(expected_relations)


def test_kapranov_equals_zero_bundle_quiver():
    q = build_named("kapranov", 4, r=2)
    qe = quiver_from_ext(FamilyConfig("custom", 4, 2, delta=()))
    assert q.vertices == qe.vertices
    assert slots(q.arrows) == slots(qe.arrows)
    assert slots(q.relations) == slots(qe.relations)


def test_sym_maxminor_display():
    q = build_named("sym_maxminor", 4)
    n = 4
    e1 = (1, 0, 0, 0)
    w2 = (1, 1, 0, 0)
    s2 = (2, 0, 0, 0)
    expected_arrows = [(i, i + 1, e1, 1) for i in range(3)] + [
        (i + 1, i, e1, 1) for i in range(3)
    ]
    assert slots(q.arrows) == sorted(expected_arrows)
    expected_rel = (
        [(i, i + 2, w2, 1) for i in range(2)]
        + [(i + 2, i, w2, 1) for i in range(2)]
        + [(i, i, s2, 1) for i in range(n)]
    )
    assert slots(q.relations) == sorted(expected_rel)


def test_sym_maxminor_vs_engine_transpose_convention():
    # the printed display swaps Sym_2 and wedge^2 relative to the Ext engine
    # (and to the worked path-level examples); vertices and arrows agree,
    # and relation slots agree after transposing the labels
    n = 4
    q = build_named("sym_maxminor", n)
    qe = quiver_from_ext(FamilyConfig("sym", n, n - 1))
    assert q.vertices == qe.vertices
    assert slots(q.arrows) == slots(qe.arrows)
    swap = {(1, 1, 0, 0): (2, 0, 0, 0), (2, 0, 0, 0): (1, 1, 0, 0)}
    swapped = sorted((s.src, s.dst, swap[s.weight], s.mult) for s in q.relations)
    assert swapped == slots(qe.relations)


def test_rational_curve_and_engine():
    for d in (2, 3, 4, 5):
        q = build_named("rational_curve", 2, d=d)
        assert slots(q.arrows) == sorted(
            [(1, 0, (1, 0), 1), (0, 1, (d - 1, 0), 1)]
        )
        assert slots(q.relations) == sorted(
            [(0, 0, (d - 1, 1), 1), (1, 1, (d - 1, 1), 1)]
        )
        qe = quiver_from_ext(FamilyConfig("tensor_sym", 2, 1, d=d))
        assert slots(q.arrows) == slots(qe.arrows)
        assert slots(q.relations) == slots(qe.relations)
    with pytest.raises(ValueError):
        build_named("rational_curve", 3, d=2)


def test_wedge_rank_display():
    q = build_named("wedge_rank", 6, d=3)
    assert len(q.vertices) == 7
    e1 = (1,) + (0,) * 5
    w2 = (1, 1) + (0,) * 4
    triv = (0,) * 6
    expected_arrows = [(i, i - 1, e1, 1) for i in range(1, 7)] + [
        (i, i + 3, triv, 1) for i in range(4)
    ]
    assert slots(q.arrows) == sorted(expected_arrows)
    expected_rel = [(i + 1, i - 1, w2, 1) for i in range(1, 6)] + [
        (i, i + 4, w2, 1) for i in range(3)
    ]
    assert slots(q.relations) == sorted(expected_rel)


def test_sym42_worked_example():
    cfg = FamilyConfig("sym", 4, 2)
    q = quiver_from_ext(cfg)
    ix = {v: i for i, v in enumerate(q.vertices)}
    e1 = (1, 0, 0, 0)
    triv = (0, 0, 0, 0)
    expected_arrows = sorted(
        [
            (ix[(1,)], ix[()], e1, 1),
            (ix[(1, 1)], ix[(1,)], e1, 1),
            (ix[(2,)], ix[(1,)], e1, 1),
            (ix[(2, 1)], ix[(1, 1)], e1, 1),
            (ix[(2, 1)], ix[(2,)], e1, 1),
            (ix[(2, 2)], ix[(2, 1)], e1, 1),
            (ix[()], ix[(2,)], triv, 1),
            (ix[(1,)], ix[(2, 1)], triv, 1),
            (ix[(2,)], ix[(2, 2)], triv, 1),
        ]
    )
    assert slots(q.arrows) == expected_arrows
    # all nine printed relation bullets appear among the engine slots
    s2 = (2, 0, 0, 0)
    w2 = (1, 1, 0, 0)
    printed = [
        (ix[(2,)], ix[()], w2, 1),
        (ix[(1, 1)], ix[()], s2, 1),
        (ix[(2, 2)], ix[(2,)], w2, 1),
        (ix[(2, 2)], ix[(1, 1)], s2, 1),
        (ix[(2, 1)], ix[(1,)], s2, 1),
        (ix[(2, 1)], ix[(1,)], w2, 1),
        (ix[(1,)], ix[(1,)], w2, 1),
        (ix[(2, 1)], ix[(2, 1)], w2, 1),
        (ix[()], ix[(2, 1)], e1, 1),
        (ix[(1,)], ix[(2, 2)], e1, 1),
    ]
    got = slots(q.relations)
    for item in printed:
        assert item in got


def test_arrow_dimension_identity():
    for fam, n, r in [("sym", 4, 2), ("skew", 5, 3)]:
        cfg = FamilyConfig(fam, n, r)
        q = quiver_from_ext(cfg)
        totals: dict[tuple, int] = {}
        for s in q.arrows:
            totals[(s.src, s.dst)] = totals.get((s.src, s.dst), 0) + s.mult * dim_irrep(
                s.weight, n
            )
        for i, a in enumerate(q.vertices):
            for j, b in enumerate(q.vertices):
                ext_dim = ext_simples(cfg, b, a, 1).layer(1).dimension()
                assert totals.get((i, j), 0) == ext_dim


def test_emit_formats():
    q = build_named("beilinson", 3)
    parsed = json.loads(emit(q, "json"))
    assert parsed["framing"] == "E"
    assert len(parsed["vertices"]) == 3
    rebuilt = EquivariantQuiver(
        parsed["n"],
        parsed["family"],
        [tuple(v) for v in parsed["vertices"]],
        [Slot(a["src"], a["dst"], tuple(a["weight"]), a["mult"]) for a in parsed["arrows"]],
        [Slot(a["src"], a["dst"], tuple(a["weight"]), a["mult"]) for a in parsed["relations"]],
        parsed["notes"],
    )
    assert emit(rebuilt, "json") == emit(q, "json")
    dot = emit(q, "dot")
    assert dot.count("label=\"[") == len(q.vertices)
    assert emit(q, "json") == emit(build_named("beilinson", 3), "json")


def test_reorder():
    q = build_named("beilinson", 3)
    q2 = q.reorder([2, 0, 1])
    assert q2.vertices == [(1, 1), (), (1,)]
    assert (1, 2, (1, 0, 0), 1) in slots(q2.arrows)
    with pytest.raises(ValueError):
        q.reorder([0, 0, 1])


def test_weight_name():
    assert weight_name((0, 0, 0), 3) == "C"
    assert weight_name((1, 0, 0), 3) == "E"
    assert weight_name((2, 0, 0), 3) == "Sym_2E"
    assert weight_name((1, 1, 0), 3) == "wedge^2E"
    assert weight_name((2, 1, 0), 3) == "S_{2,1}E"
    assert weight_name((0, 0, -2), 3) == "Sym_2E*"


def test_unknown_named_quiver():
    with pytest.raises(UnsupportedFamilyError):
        build_named("mystery", 3)
