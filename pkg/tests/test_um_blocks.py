import cmath
from fractions import Fraction as F
from itertools import permutations

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from nilhom.um_blocks import (InvariantFailure, MonomialUnitary, PreconditionError, SetPartition,
                              commutator, coarsest_partition, consecutivizing_permutation,
                              nil2_block_normalize, partition_infimum, permutation_sign)

P = SetPartition.of
M = MonomialUnitary


def dense(x: MonomialUnitary) -> np.ndarray:
    out = np.zeros((x.m, x.m), dtype=complex)
    for j in range(1, x.m + 1):
        out[x.perm[j - 1] - 1, j - 1] = cmath.exp(2j * cmath.pi * x.phases[j - 1])
    return out


def monomials(m):
    return st.builds(M, st.permutations(range(1, m + 1)).map(tuple),
                     st.lists(st.integers(0, 3).map(lambda k: F(k, 4)), min_size=m, max_size=m).map(tuple))


def is_consecutive_by_size(p: SetPartition, pi):
    images = [sorted(pi[i - 1] for i in q) for q in p.parts]
    if not all(im == list(range(im[0], im[0] + len(im))) for im in images):
        return False
    runs = sorted(images, key=lambda im: im[0])
    sizes = [len(r) for r in runs]
    return sizes == sorted(sizes, reverse=True)


def test_coarsest_partition_examples():
    assert coarsest_partition([F(1, 4), F(1, 4), 0]) == P([[1, 2], [3]])
    assert coarsest_partition([0, 0, 0]) == P([[1, 2, 3]])
    assert coarsest_partition([F(1, 2), F(1, 4), 0]) == P([[1], [2], [3]])
    assert coarsest_partition([F(5, 4), F(1, 4)]) == P([[1, 2]])


def test_infimum_examples():
    a, b = P([[1, 2], [3]]), P([[1], [2, 3]])
    assert partition_infimum([a, b]) == P([[1], [2], [3]])
    assert partition_infimum([a]) == a
    assert partition_infimum([P([[1, 2, 3]]), a]) == a
    with pytest.raises(ValueError):
        partition_infimum([a, P([[1, 2]])])
    with pytest.raises(ValueError):
        partition_infimum([])


def test_partition_validation():
    with pytest.raises(ValueError):
        P([[1, 2], [2, 3]])
    with pytest.raises(ValueError):
        P([[1], [3]])
    assert P([[3], [1, 2]]).to_json() == [[1, 2], [3]]


def test_consecutivizing_examples():
    pi = consecutivizing_permutation(P([[2, 3], [1]]))
    assert pi == (3, 1, 2)
    assert consecutivizing_permutation(P([[1], [2], [3], [4]])) == (1, 2, 3, 4)
    pi = consecutivizing_permutation(P([[1, 3], [2]]), require_even=True)
    assert permutation_sign(pi) == 1 and {pi[0], pi[2]} == {1, 2}
    assert consecutivizing_permutation(P([[1], [2], [3]]), require_even=True) == (1, 2, 3)


@st.composite
def partitions(draw, max_m=7):
    m = draw(st.integers(1, max_m))
    labels = draw(st.lists(st.integers(0, 3), min_size=m, max_size=m))
    return coarsest_partition(labels)


@given(partitions(), st.booleans())
def test_consecutivizing_properties(p, even):
    pi = consecutivizing_permutation(p, even)
    assert sorted(pi) == list(range(1, p.m + 1))
    assert is_consecutive_by_size(p, pi)
    if even:
        assert permutation_sign(pi) == 1


@given(st.lists(st.integers(0, 3), min_size=1, max_size=6))
def test_coarsest_partition_is_coarsest(labels):
    d = [F(x, 4) for x in labels]
    p = coarsest_partition(d)
    # diag(d) is central in U(p') iff d is constant on the parts of p'; p must be coarser than any such p'
    assert all(len({d[i - 1] for i in q}) == 1 for q in p.parts)
    for i in range(1, len(d) + 1):
        for j in range(1, len(d) + 1):
            assert (j in p.block_of(i)) == (d[i - 1] == d[j - 1])


def test_permutation_sign():
    for perm in permutations(range(1, 5)):
        m = np.zeros((4, 4))
        for j, i in enumerate(perm):
            m[i - 1, j] = 1
        assert permutation_sign(perm) == round(np.linalg.det(m))


@given(monomials(3), monomials(3))
def test_product_and_inverse_match_dense(x, y):
    assert np.allclose(dense(x @ y), dense(x) @ dense(y))
    assert np.allclose(dense(x.inverse()), np.linalg.inv(dense(x)))
    assert np.allclose(dense(commutator(x, y)),
                       dense(x) @ dense(y) @ np.linalg.inv(dense(x)) @ np.linalg.inv(dense(y)))


def test_block_normalize_examples():
    x = M.permutation((2, 1))
    y = M.diagonal([F(1, 4), F(-1, 4)])
    assert commutator(x, y) == M.diagonal([F(1, 2), F(1, 2)])
    res = nil2_block_normalize([x, y])
    assert res.partition == P([[1, 2]]) and res.permutation == (1, 2)
    assert res.tuple == [x, y]

    a, b = M.diagonal([0, F(1, 3), F(1, 2)]), M.diagonal([F(1, 5), 0, 0])
    res = nil2_block_normalize([a, b])
    assert res.partition == P([[1, 2, 3]]) and res.tuple == [a, b]

    x = M.permutation((2, 1, 3))
    y = M.diagonal([0, F(1, 2), F(1, 4)])
    assert commutator(x, y) == M.diagonal([F(1, 2), F(1, 2), 0])
    res = nil2_block_normalize([x, y])
    assert res.partition == P([[1, 2], [3]])
    assert x.supported_on(res.partition) and y.supported_on(res.partition)
    assert res.to_json()["partition"] == [[1, 2], [3]]


def test_block_normalize_moves_blocks_to_front():
    x = M.permutation((1, 3, 2))
    y = M.diagonal([F(1, 4), 0, F(1, 2)])
    res = nil2_block_normalize([x, y])
    assert res.partition == P([[1], [2, 3]])
    assert res.permutation == (3, 1, 2)
    assert all(z.supported_on(P([[1, 2], [3]])) for z in res.tuple)


def test_block_normalize_preconditions():
    x = M.permutation((2, 3, 1))
    y = M.diagonal([0, F(1, 2), 0])
    with pytest.raises(PreconditionError):
        nil2_block_normalize([x, y])
    with pytest.raises(PreconditionError):
        nil2_block_normalize([])


@settings(max_examples=300, deadline=None)
@given(st.integers(2, 4).flatmap(lambda m: st.lists(monomials(m), min_size=2, max_size=3)), st.booleans())
def test_nil2_tuples_are_block_supported(xs, even):
    try:
        res = nil2_block_normalize(xs, require_even=even)
    except PreconditionError:
        assume(False)
        return
    except InvariantFailure as exc:  # pragma: no cover - would falsify the proposition
        pytest.fail(str(exc))
    target = P([sorted(res.permutation[i - 1] for i in q) for q in res.partition.parts])
    assert all(z.supported_on(target) for z in res.tuple)
    pmat = dense(M.permutation(res.permutation))
    for x, z in zip(xs, res.tuple):
        assert np.allclose(dense(z), pmat @ dense(x) @ pmat.T)
    if even:
        assert permutation_sign(res.permutation) == 1
