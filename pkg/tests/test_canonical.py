import math
import random

import pytest

from dmcensus import (
    ArcMatrix,
    DimensionError,
    NodeCapError,
    Permutation,
    apply_permutation,
    are_isomorphic,
    automorphism_order,
    canonical_form,
    enumerate_regular_matrices,
)
from dmcensus.canonical import clear_cache

from oracles import brute_aut_order, brute_canonical, brute_orbit_size


def random_permutation(rng, p):
    images = list(range(p))
    rng.shuffle(images)
    return Permutation(tuple(images))


def test_null_graph():
    result = canonical_form(ArcMatrix(()))
    assert result.canonical == ArcMatrix(())
    assert result.aut_order == 1
    assert result.witness == Permutation(())


def test_symmetric_two_node():
    result = canonical_form(ArcMatrix(((1, 1), (1, 1))))
    assert result.canonical == ArcMatrix(((1, 1), (1, 1)))
    assert result.aut_order == 2
    assert result.witness == Permutation.identity(2)


def test_double_three_cycle():
    m = ArcMatrix(((0, 2, 0), (0, 0, 2), (2, 0, 0)))
    result = canonical_form(m)
    assert result.aut_order == 3
    assert result.canonical == ArcMatrix((tuple(r) for r in brute_canonical(m.entries)))


def test_aut_order_examples():
    assert automorphism_order(ArcMatrix(((0, 1, 1), (1, 0, 1), (1, 1, 0)))) == 6
    assert automorphism_order(ArcMatrix(((2,),))) == 1
    # two independent doubled 2-cycles on {1,2} and {3,4}
    m = ArcMatrix(((0, 2, 0, 0), (2, 0, 0, 0), (0, 0, 0, 2), (0, 0, 2, 0)))
    assert automorphism_order(m) == 8


@pytest.mark.parametrize("p,d", [(0, 2), (1, 2), (2, 2), (3, 2), (4, 2), (3, 1), (2, 3), (3, 3)])
def test_exhaustive_agreement_with_brute_force(p, d):
    for m in enumerate_regular_matrices(p, d):
        result = canonical_form(m)
        assert result.canonical.entries == brute_canonical(m.entries)
        assert result.aut_order == brute_aut_order(m.entries)


def test_sampled_agreement_with_brute_force_p5():
    rng = random.Random(7)
    pool = list(enumerate_regular_matrices(5, 2))
    for m in rng.sample(pool, 150):
        result = canonical_form(m)
        assert result.canonical.entries == brute_canonical(m.entries)
        assert result.aut_order == brute_aut_order(m.entries)


def test_idempotence():
    for p in range(0, 5):
        for m in enumerate_regular_matrices(p, 2):
            canon = canonical_form(m).canonical
            assert canonical_form(canon).canonical == canon


def test_invariance_under_random_relabeling():
    rng = random.Random(20)
    for p in range(1, 6):
        pool = list(enumerate_regular_matrices(p, 2))
        for _ in range(50):
            m = rng.choice(pool)
            perm = random_permutation(rng, p)
            relabeled = apply_permutation(m, perm)
            assert canonical_form(relabeled).canonical == canonical_form(m).canonical
            assert canonical_form(relabeled).aut_order == canonical_form(m).aut_order


def test_witness_maps_input_to_canonical():
    rng = random.Random(31)
    for p in range(0, 5):
        pool = list(enumerate_regular_matrices(p, 2))
        for m in rng.sample(pool, min(20, len(pool))):
            result = canonical_form(m)
            assert apply_permutation(m, result.witness) == result.canonical


def test_orbit_stabilizer():
    for p in range(0, 5):
        for m in enumerate_regular_matrices(p, 2):
            result = canonical_form(m)
            assert brute_orbit_size(m.entries) == math.factorial(p) // result.aut_order


def test_are_isomorphic():
    rng = random.Random(47)
    m = ArcMatrix(((0, 1, 1), (1, 0, 1), (1, 1, 0)))
    assert are_isomorphic(m, m)
    assert are_isomorphic(m, apply_permutation(m, random_permutation(rng, 3)))
    assert not are_isomorphic(ArcMatrix(((2, 0), (0, 2))), ArcMatrix(((0, 2), (2, 0))))
    with pytest.raises(DimensionError):
        are_isomorphic(ArcMatrix(((2,),)), ArcMatrix(((2, 0), (0, 2))))


def test_node_cap():
    big = ArcMatrix(tuple(tuple(1 if i == j else 0 for j in range(11)) for i in range(11)))
    with pytest.raises(NodeCapError):
        canonical_form(big)


def test_clear_cache_smoke():
    m = ArcMatrix(((2,),))
    first = canonical_form(m)
    clear_cache()
    assert canonical_form(m) == first
