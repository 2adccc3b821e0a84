"""Morphism validation, coefficient data, degree-restricted columns,
kernel functionals, and the genericity/rank predicates."""

import random

import pytest

from mgres import (
    QQ,
    HomogeneityError,
    Matrix,
    Morphism,
    Subspace,
    ZeroColumnError,
    join_closure,
    leq,
)
from helpers import random_morphism, uvw_example, xy_example


def test_validate_example():
    phi = xy_example()
    assert phi.shift(2, 1) == (2, 0)
    assert phi.e == 4 and phi.g == 2


def test_validate_rejects_negative_shift():
    phi = xy_example()
    bad = Morphism(
        2,
        QQ,
        phi.source_degrees,
        [(0, 0), (4, 0)],
        phi.entries,
        var_names=("x", "y"),
    )
    with pytest.raises(HomogeneityError) as err:
        bad.validate()
    assert (err.value.row, err.value.col) == (2, 1)


def test_validate_prime_ring_example():
    uvw_example()


def test_validate_rejects_zero_column():
    phi = xy_example()
    entries = {(i, j): v for (i, j), v in phi.entries.items() if j != 4}
    stripped = Morphism(2, QQ, phi.source_degrees, phi.target_degrees, entries)
    with pytest.raises(ZeroColumnError):
        stripped.validate()
    stripped.validate(allow_zero_columns=True)


def test_coeff_data_example():
    cd = xy_example().coeff_data
    assert cd.matrix == Matrix.from_int_rows(QQ, [[1, 1, 1, 1], [1, 2, 3, 0]])
    assert cd.r == 2
    assert cd.image == Subspace.full(QQ, 2)
    assert cd.uses_target_dual
    assert cd.uv == cd.matrix


def test_coeff_data_zero_morphism():
    phi = Morphism(2, QQ, [(1, 0)], [(0, 0)], {}).validate(allow_zero_columns=True)
    assert phi.coeff_data.r == 0
    assert phi.coeff_data.image.dim == 0


def test_coeff_data_prime_ring_matches():
    assert uvw_example().coeff_data.matrix == xy_example().coeff_data.matrix


def test_columns_leq():
    phi = xy_example()
    assert phi.columns_leq((3, 1)) == {1, 2}
    assert phi.columns_leq((3, 3)) == {1, 2, 3, 4}
    assert phi.columns_leq((0, 0)) == frozenset()


def test_k_space_examples():
    phi = xy_example()
    assert phi.k_space({2}) == Subspace.from_rows(QQ, 2, [[QQ.of(2), QQ.of(-1)]])
    assert phi.k_space({3}) == Subspace.from_rows(QQ, 2, [[QQ.of(3), QQ.of(-1)]])
    assert phi.k_space({2, 3}).dim == 0
    assert phi.k_space(set()) == Subspace.full(QQ, 2)


def test_k_space_antitone():
    rng = random.Random(17)
    import itertools

    for _ in range(20):
        phi = random_morphism(rng)
        idx = list(range(1, phi.e + 1))
        for small in itertools.combinations(idx, min(2, phi.e)):
            for big in itertools.combinations(idx, min(3, phi.e)):
                if set(small) <= set(big):
                    assert phi.k_space(small).contains(phi.k_space(big))


def test_k_space_kills_restricted_images():
    rng = random.Random(23)
    for _ in range(20):
        phi = random_morphism(rng)
        cd = phi.coeff_data
        a = phi.source_degrees[0]
        face = sorted(phi.columns_leq(a))
        k = phi.k_space(face)
        for v in k.basis.data:
            for j in face:
                col = [cd.uv.data[t][j - 1] for t in range(cd.r)]
                assert sum((x * y for x, y in zip(v, col)), QQ.zero) == QQ.zero


def test_uniform_rank_examples():
    assert xy_example().is_uniform_rank()
    assert uvw_example().is_uniform_rank()
    # rank 2, but columns 1 and 2 are parallel: the subset {1, 2} fails
    repeated = Morphism(
        2,
        QQ,
        [(1, 0), (0, 1), (1, 1)],
        [(0, 0), (0, 0)],
        {
            (1, 1): QQ.one,
            (2, 1): QQ.one,
            (1, 2): QQ.one,
            (2, 2): QQ.one,
            (2, 3): QQ.one,
        },
    ).validate()
    assert repeated.coeff_data.r == 2
    assert not repeated.is_uniform_rank()


def test_combinatorially_generic_examples():
    assert xy_example().is_combinatorially_generic()
    assert not uvw_example().is_combinatorially_generic()
    single = Morphism(2, QQ, [(1, 1)], [(0, 0)], {(1, 1): QQ.one}).validate()
    assert single.is_combinatorially_generic()


def test_generic_examples():
    assert xy_example().is_generic()
    assert not uvw_example().is_generic()


def test_generic_zero_morphism_edge():
    # rank 0 makes uniform rank vacuous; the combinatorial test decides
    phi = Morphism(2, QQ, [(1, 0), (0, 1)], [(0, 0)], {}).validate(
        allow_zero_columns=True
    )
    assert phi.is_uniform_rank()
    assert phi.is_generic() == phi.is_combinatorially_generic()


def test_maximal_rank_example():
    assert xy_example().is_maximal_rank_everywhere().ok


def test_maximal_rank_single_rank_one():
    phi = Morphism(
        2,
        QQ,
        [(1, 0), (0, 1)],
        [(0, 0), (0, 0)],
        {(1, 1): QQ.one, (2, 1): QQ.one, (1, 2): QQ.one, (2, 2): QQ.one},
    ).validate()
    assert phi.coeff_data.r == 1
    assert phi.is_maximal_rank_everywhere().ok


def test_maximal_rank_zero_column_witness():
    # the zero column is alone below (1, 1), so rank C_(1,1) = 0 < 1
    phi = Morphism(
        2,
        QQ,
        [(2, 0), (1, 1)],
        [(0, 0), (0, 0)],
        {(1, 1): QQ.one, (2, 1): QQ.one},
    ).validate(allow_zero_columns=True)
    res = phi.is_maximal_rank_everywhere()
    assert not res.ok and res.witness == (1, 1)


def test_restricted_columns_monotone():
    rng = random.Random(31)
    for _ in range(20):
        phi = random_morphism(rng)
        degs = sorted(join_closure(phi.source_degrees))
        for a in degs:
            for b in degs:
                if leq(a, b):
                    assert phi.columns_leq(a) <= phi.columns_leq(b)


def test_image_subspaces_monotone():
    rng = random.Random(37)
    from mgres import column_space_basis

    for _ in range(15):
        phi = random_morphism(rng)
        cd = phi.coeff_data
        degs = sorted(join_closure(phi.source_degrees))
        spaces = {}
        for a in degs:
            cols = [j - 1 for j in sorted(phi.columns_leq(a))]
            spaces[a] = column_space_basis(cd.matrix.submatrix(range(phi.g), cols))
        for a in degs:
            for b in degs:
                if leq(a, b):
                    assert spaces[b].contains(spaces[a])


def test_uniform_rank_implies_maximal_rank_everywhere():
    rng = random.Random(41)
    checked = 0
    while checked < 200:
        phi = random_morphism(rng)
        if phi.is_uniform_rank():
            assert phi.is_maximal_rank_everywhere().ok
            checked += 1
