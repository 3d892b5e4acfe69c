import random

import pytest

from multifilt.filtration import (
    GradedVectorSpace,
    NotDecreasing,
    NotExhaustive,
    adapted_basis,
    associated_graded,
    is_filtration_morphism,
    make_filtered,
)
from multifilt.linalg import AmbientMismatch, Mat, Subspace
from multifilt.verify import random_filtered_space


def line(dim, entries):
    return Subspace.span(dim, [entries])


def test_make_filtered_single_jump():
    fs = make_filtered(1, {0: Subspace.full(1), 1: Subspace.zero(1)})
    assert fs.jumps() == (0,)
    assert fs.at(0) == Subspace.full(1)
    assert fs.at(1) == Subspace.zero(1)
    assert fs.at(-100) == Subspace.full(1)


def test_make_filtered_two_step_flag():
    fs = make_filtered(2, {0: Subspace.full(2), 1: line(2, [1, 0]), 2: Subspace.zero(2)})
    assert fs.jumps() == (0, 1)
    assert fs.at(1) == line(2, [1, 0])


def test_make_filtered_not_decreasing():
    with pytest.raises(NotDecreasing):
        make_filtered(2, {0: line(2, [1, 0]), 1: Subspace.full(2)})


def test_make_filtered_not_exhaustive():
    with pytest.raises(NotExhaustive):
        make_filtered(2, {0: line(2, [1, 0])})
    with pytest.raises(NotExhaustive):
        make_filtered(1, {})


def test_make_filtered_ambient_mismatch():
    with pytest.raises(AmbientMismatch):
        make_filtered(2, {0: Subspace.full(3)})


def test_fill_convention():
    # a value stored at index 2 also answers queries at index 1
    fs = make_filtered(2, {0: Subspace.full(2), 2: line(2, [1, 0])})
    assert fs.at(1) == line(2, [1, 0])
    assert fs.at(2) == line(2, [1, 0])
    assert fs.at(3) == Subspace.zero(2)


def test_morphism_identity_and_zero():
    fs = make_filtered(2, {0: Subspace.full(2), 1: line(2, [1, 0])})
    other = make_filtered(2, {-3: Subspace.full(2), 5: line(2, [0, 1])})
    assert is_filtration_morphism(Mat.identity(2), fs, fs)
    assert is_filtration_morphism(Mat.zero(2, 2), fs, other)


def test_morphism_jump_mismatch():
    src = make_filtered(1, {1: Subspace.full(1)})
    dst = make_filtered(1, {0: Subspace.full(1)})
    one = Mat.identity(1)
    assert not is_filtration_morphism(one, src, dst)
    assert is_filtration_morphism(one, dst, src)


def test_morphism_shape_check():
    fs = make_filtered(2, {0: Subspace.full(2)})
    with pytest.raises(AmbientMismatch):
        is_filtration_morphism(Mat.zero(3, 2), fs, fs)


def test_morphism_composition_random():
    rng = random.Random(23)
    for _ in range(40):
        dim = rng.randint(1, 4)
        fa = random_filtered_space(rng, max_dim=dim)
        fa = fa if fa.dim == dim else make_filtered(dim, {0: Subspace.full(dim)})
        fb = make_filtered(dim, {0: Subspace.full(dim)})
        fc = random_filtered_space(rng, max_dim=dim)
        fc = fc if fc.dim == dim else make_filtered(dim, {0: Subspace.full(dim)})
        f = Mat.from_rows([[rng.randint(-2, 2) for _ in range(dim)] for _ in range(dim)])
        g = Mat.from_rows([[rng.randint(-2, 2) for _ in range(dim)] for _ in range(dim)])
        if is_filtration_morphism(f, fa, fb) and is_filtration_morphism(g, fb, fc):
            assert is_filtration_morphism(g @ f, fa, fc)


def test_associated_graded_examples():
    fs = make_filtered(3, {0: Subspace.full(3)})
    assert associated_graded(fs) == GradedVectorSpace.of({0: 3})
    flag = make_filtered(2, {0: Subspace.full(2), 2: line(2, [1, 0])})
    assert associated_graded(flag) == GradedVectorSpace.of({0: 1, 2: 1})
    assert associated_graded(make_filtered(0, {})) == GradedVectorSpace.of({})


def test_graded_total_random():
    rng = random.Random(29)
    for _ in range(60):
        fs = random_filtered_space(rng, max_dim=5)
        assert associated_graded(fs).total() == fs.dim


def test_adapted_basis_examples():
    fs = make_filtered(1, {0: Subspace.full(1)})
    assert adapted_basis(fs) == (((1,), 0),)

    flag = make_filtered(2, {0: Subspace.full(2), 1: line(2, [1, 1])})
    basis = adapted_basis(flag)
    assert [lvl for _, lvl in basis] == [1, 0]
    assert basis[0][0] == (1, 1)
    assert basis[1][0] == (1, 0)  # earliest pivot completes the basis

    trivial = make_filtered(3, {4: Subspace.full(3)})
    assert all(lvl == 4 for _, lvl in adapted_basis(trivial))


def test_adapted_basis_round_trip_random():
    rng = random.Random(31)
    for _ in range(60):
        fs = random_filtered_space(rng, max_dim=5)
        tagged = adapted_basis(fs)
        for i in fs.jumps():
            rebuilt = Subspace.span(fs.dim, [v for v, lvl in tagged if lvl >= i])
            assert rebuilt == fs.at(i)
