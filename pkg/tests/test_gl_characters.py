from math import comb

import pytest

from grasscalc.errors import ResourceLimitError
from grasscalc.gl_characters import (
    IrrepDecomposition,
    cauchy_layer,
    dim_irrep,
    lr_coefficient,
    lr_expand,
    schur_weight_vectors,
    tensor_dominant,
    wedge_plethysm_general,
    wedge_plethysm_hooks,
)
from grasscalc.partitions import area, pad, partitions_of, transpose

from .oracles import count_ssyt, lr_coefficient_oracle, schur_product_oracle


def test_lr_examples():
    assert lr_coefficient((3,), (1,), (2,)) == 1
    assert lr_coefficient((2, 1), (1,), (2,)) == 1
    assert lr_coefficient((2, 2), (1,), (1,)) == 0
    for lam in [(3, 1), (2, 2, 1), ()]:
        assert lr_coefficient(lam, lam, ()) == 1


def test_lr_matches_pieri_oracle_small():
    for a in range(0, 5):
        for b in range(0, 5 - a):
            for alpha in partitions_of(a):
                for beta in partitions_of(b):
                    assert dict(lr_expand(alpha, beta)) == schur_product_oracle(
                        alpha, beta
                    ), (alpha, beta)


def test_lr_symmetry():
    for total in range(0, 7):
        for a in range(0, total + 1):
            for alpha in partitions_of(a):
                for beta in partitions_of(total - a):
                    for mu in partitions_of(total):
                        assert lr_coefficient(mu, alpha, beta) == lr_coefficient(
                            mu, beta, alpha
                        )


def test_dimension_conservation():
    m = 3
    for alpha in [(1,), (2,), (1, 1), (2, 1)]:
        for beta in [(1,), (2, 2), (1, 1, 1)]:
            dec = tensor_dominant(pad(alpha, m), pad(beta, m), m)
            assert dec.dimension() == dim_irrep(pad(alpha, m), m) * dim_irrep(
                pad(beta, m), m
            )


def test_tensor_dominant_examples():
    assert tensor_dominant((1, 0), (0, -1), 2).terms == {(1, -1): 1, (0, 0): 1}
    assert tensor_dominant((1,), (1,), 1).terms == {(2,): 1}
    # determinant-twist equivariance
    base = tensor_dominant((2, 0, -1), (1, 1, 0), 3).terms
    shifted = tensor_dominant((3, 1, 0), (1, 1, 0), 3).terms
    assert shifted == {tuple(x + 1 for x in w): m for w, m in base.items()}


def test_tensor_dominant_character_oracle_rank2():
    # multiply characters or rank-2 rational irreps directly
    def char(w):
        # weights of S_w C^2: (w1 - j, w2 + j) for j = 0..w1-w2
        return [(w[0] - j, w[1] + j) for j in range(w[0] - w[1] + 1)]

    a, b = (1, 0), (0, -1)
    product: dict[tuple, int] = {}
    for x in char(a):
        for y in char(b):
            key = (x[0] + y[0], x[1] + y[1])
            product[key] = product.get(key, 0) + 1
    dec = tensor_dominant(a, b, 2)
    rebuilt: dict[tuple, int] = {}
    for w, m in dec.terms.items():
        for v in char(w):
            rebuilt[v] = rebuilt.get(v, 0) + m
    assert rebuilt == product


def test_dim_irrep():
    assert dim_irrep((1, 0, 0), 3) == 3
    assert dim_irrep((2, 1, 0), 3) == 8
    assert dim_irrep((1, 1, 1), 3) == 1
    assert dim_irrep((1, 1, 1, 1), 4) == 1
    for shape in [(2, 1), (3,), (2, 2), (3, 1, 1)]:
        for m in (3, 4):
            assert dim_irrep(pad(shape, m), m) == count_ssyt(shape, m)
    # invariance under determinant twists
    assert dim_irrep((3, 2, 1), 3) == dim_irrep((2, 1, 0), 3)


def test_cauchy_layers():
    assert cauchy_layer(2, "sym2") == [(4,), (2, 2)]
    assert cauchy_layer(1, "wedge2") == [(1, 1)]
    assert cauchy_layer(2, "tensor_pair") == [(2,), (1, 1)]
    # disjoint union over d exhausts the even partitions
    seen = set()
    for d in range(0, 7):
        layer = cauchy_layer(d, "sym2")
        assert len(set(layer)) == len(layer)
        assert seen.isdisjoint(layer)
        seen.update(layer)
        for lam in layer:
            assert all(x % 2 == 0 for x in lam) and area(lam) == 2 * d
    evens = {p for k in range(0, 7) for p in partitions_of(2 * k) if all(x % 2 == 0 for x in p)}
    assert seen == evens
    # wedge2 layers have even column heights
    for d in range(0, 6):
        for lam in cauchy_layer(d, "wedge2"):
            assert all(x % 2 == 0 for x in transpose(lam))


def test_wedge_hooks_examples():
    assert wedge_plethysm_hooks(1, "sym2") == [(2,)]
    assert wedge_plethysm_hooks(2, "sym2") == [(3, 1)]
    assert wedge_plethysm_hooks(1, "wedge2") == [(1, 1)]
    assert wedge_plethysm_hooks(2, "wedge2") == [(2, 1, 1)]


def test_wedge_general_identity_and_dimension():
    for delta in [(2,), (1, 1), (2, 1)]:
        for m in (2, 3):
            base = dim_irrep(pad(delta, m), m) if len(delta) <= m else 0
            dec = wedge_plethysm_general(delta, 1, m)
            if len(delta) <= m:
                assert dec.terms == {pad(delta, m): 1}
            for s in range(0, 4):
                d2 = wedge_plethysm_general(delta, s, m)
                assert d2.dimension() == comb(base, s)


def test_wedge_hooks_match_general():
    for s in range(0, 5):
        for m in range(1, 6):
            for delta, tag in [((2,), "sym2"), ((1, 1), "wedge2")]:
                general = wedge_plethysm_general(delta, s, m)
                hooks = {
                    pad(h, m): 1 for h in wedge_plethysm_hooks(s, tag) if len(h) <= m
                }
                assert general.terms == hooks, (s, m, tag)


def test_wedge_cube_of_wedge3():
    dec = wedge_plethysm_general((1, 1, 1), 2, 6)
    assert dec.terms == {(2, 2, 1, 1, 0, 0): 1, (1, 1, 1, 1, 1, 1): 1}


def test_resource_limit():
    with pytest.raises(ResourceLimitError):
        wedge_plethysm_general((3, 2, 1), 10, 6, max_subsets=10)


def test_schur_weight_vectors_count():
    assert len(schur_weight_vectors((2, 1), 3)) == 8
    assert schur_weight_vectors((), 2) == [(0, 0)]


def test_irrep_decomposition_json():
    dec = IrrepDecomposition(2, {(2, 0): 1, (1, 1): 3})
    assert dec.to_json() == {
        "rank": 2,
        "terms": [{"weight": [2, 0], "mult": 1}, {"weight": [1, 1], "mult": 3}],
    }
    with pytest.raises(ValueError):
        IrrepDecomposition(2, {(0, 1): 1})
