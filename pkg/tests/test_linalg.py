import random

import pytest

from multifilt.linalg import (
    AmbientMismatch,
    Mat,
    Subspace,
    kernel,
    rank,
    rref,
    subspace_contains,
    subspace_intersect,
    subspace_sum,
)


def test_rref_identity():
    m = Mat.identity(2)
    r, pivots = rref(m)
    assert r == m
    assert pivots == (0, 1)


def test_rref_rank_one():
    r, pivots = rref(Mat.from_rows([[2, 4], [1, 2]]))
    assert r == Mat.from_rows([[1, 2], [0, 0]])
    assert pivots == (0,)


def test_rref_zero():
    m = Mat.zero(2, 3)
    r, pivots = rref(m)
    assert r == m
    assert pivots == ()


def test_rref_idempotent_random():
    rng = random.Random(7)
    for _ in range(50):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        m = Mat.from_rows([[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)])
        r, _ = rref(m)
        assert rref(r)[0] == r


def test_kernel_identity_and_zero():
    assert kernel(Mat.identity(3)) == Subspace.zero(3)
    assert kernel(Mat.zero(2, 3)) == Subspace.full(3)


def test_kernel_line():
    assert kernel(Mat.from_rows([[1, 1]])) == Subspace.span(2, [[1, -1]])


def test_kernel_dimension_law_random():
    rng = random.Random(11)
    for _ in range(50):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        m = Mat.from_rows([[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)])
        assert kernel(m).dim() + rank(m) == cols
        for v in kernel(m).basis:
            assert all(x == 0 for x in m.matvec(v))


def test_subspace_idempotence():
    a = Subspace.span(3, [[1, 2, 3], [0, 1, 1]])
    assert subspace_sum(a, a) == a
    assert subspace_intersect(a, a) == a


def test_subspace_sum_full():
    e1 = Subspace.span(2, [[1, 0]])
    e2 = Subspace.span(2, [[0, 1]])
    assert subspace_sum(e1, e2) == Subspace.full(2)


def test_subspace_intersect_trivial():
    diag = Subspace.span(2, [[1, 1]])
    e1 = Subspace.span(2, [[1, 0]])
    assert subspace_intersect(diag, e1) == Subspace.zero(2)


def test_subspace_contains():
    s = Subspace.span(3, [[1, 0, 1], [0, 1, 1]])
    assert subspace_contains(s, [1, 1, 2])
    assert not subspace_contains(s, [0, 0, 1])
    with pytest.raises(AmbientMismatch):
        subspace_contains(s, [1, 0])


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatch):
        subspace_sum(Subspace.full(2), Subspace.full(3))
    with pytest.raises(AmbientMismatch):
        subspace_intersect(Subspace.full(2), Subspace.full(3))


def _random_subspace(rng, dim):
    nvecs = rng.randint(0, dim)
    return Subspace.span(dim, [[rng.randint(-3, 3) for _ in range(dim)] for _ in range(nvecs)])


def test_modular_dimension_law_random():
    rng = random.Random(13)
    for _ in range(100):
        dim = rng.randint(1, 5)
        a = _random_subspace(rng, dim)
        b = _random_subspace(rng, dim)
        assert a.dim() + b.dim() == subspace_sum(a, b).dim() + subspace_intersect(a, b).dim()


def test_canonicality_random():
    # different spanning sets of the same space give identical representations
    rng = random.Random(17)
    for _ in range(50):
        dim = rng.randint(1, 5)
        a = _random_subspace(rng, dim)
        mixed = []
        for _ in range(2 * len(a.basis) + 1):
            coeffs = [rng.randint(-2, 2) for _ in a.basis]
            mixed.append([sum(c * row[j] for c, row in zip(coeffs, a.basis)) for j in range(dim)])
        regenerated = Subspace.span(dim, mixed)
        assert regenerated.dim() <= a.dim()
        if regenerated.dim() == a.dim():
            assert regenerated == a
