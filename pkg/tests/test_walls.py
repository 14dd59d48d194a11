import time
from fractions import Fraction

import pytest

from coherent_elliptic.moduli import ModuliQuery, brill_noether, is_nonempty
from coherent_elliptic.walls import (
    WallDecomposition,
    c12,
    c21,
    candidate_decompositions,
    enumerate_walls,
    flip_locus_dim,
    section_degree_filter,
)

F = Fraction
SINGLE_WALL = WallDecomposition(3, 2, 2, 1, 1, 0)


def oracle_walls(n, d, k):
    """Independent wall search.

    Scans a wider degree window, and tests factor non-emptiness by evaluating
    the main criterion at a point just below the wall instead of reading
    off interval endpoints.
    """
    walls = {}
    for n1 in range(1, n):
        n2 = n - n1
        for k1 in range(0, k + 1):
            k2 = k - k1
            for d1 in range(-d - 3, 2 * d + 4):
                d2 = d - d1
                if not (F(k1, n1) > F(k2, n2) and F(d1, n1) < F(d2, n2)):
                    continue
                alpha = F(n1 * d2 - n2 * d1, n2 * k1 - n1 * k2)
                if not (n - k) * alpha < d:
                    continue
                below = alpha - alpha / 10**6
                if is_nonempty(ModuliQuery(n1, d1, k1, below)) and is_nonempty(ModuliQuery(n2, d2, k2, below)):
                    walls.setdefault(alpha, set()).add((n1, d1, k1, n2, d2, k2))
    return walls


def as_dict(walls):
    return {w.alpha: {(x.n1, x.d1, x.k1, x.n2, x.d2, x.k2) for x in w.decompositions} for w in walls}


def test_example_4_3_2():
    walls = enumerate_walls(4, 3, 2)
    assert len(walls) == 1
    (w,) = walls
    assert w.alpha == F(1, 2)
    assert w.decompositions == (SINGLE_WALL,)
    assert (w.min_c12, w.min_c21) == (1, 1)
    assert w.flip_dims() == {"minus": 2, "plus": 2}


@pytest.mark.parametrize("n, d, k", [(5, 3, 2), (6, 2, 1), (3, 2, 2), (5, 3, 3), (7, 4, 4)])
def test_no_walls(n, d, k):
    assert enumerate_walls(n, d, k) == []


def test_example_7_3_2():
    assert [w.alpha for w in enumerate_walls(7, 3, 2)] == [F(1, 4)]


def test_wall_json():
    assert enumerate_walls(4, 3, 2)[0].to_json() == {
        "alpha": "1/2",
        "decompositions": [{"n1": 3, "d1": 2, "k1": 2, "n2": 1, "d2": 1, "k2": 0, "c12": 1, "c21": 1}],
        "min_c12": 1,
        "min_c21": 1,
        "flip_dims": {"minus": 2, "plus": 2},
    }


def test_undefined_types():
    with pytest.raises(ValueError, match="walls undefined"):
        enumerate_walls(1, 3, 1)
    with pytest.raises(ValueError, match="walls undefined"):
        enumerate_walls(3, 3, 0)


def test_matches_independent_oracle():
    for n in range(2, 7):
        for d in range(-2, 7):
            for k in range(1, 7):
                assert as_dict(enumerate_walls(n, d, k)) == oracle_walls(n, d, k), (n, d, k)


def test_c12_c21_example():
    assert c12(SINGLE_WALL) == -1 * 3 + 2 * 1 + 2 * 1 - 0 == 1
    assert c21(SINGLE_WALL) == -2 * 1 + 1 * 3 + 0 - 0 == 1


def test_c21_identity_sweep():
    # C21 = n1 n2 (d2/n2 - d1/n1) + k2 (d1 - k1), as an exact rational identity
    for n1 in range(1, 6):
        for n2 in range(1, 6):
            for d1 in range(-4, 7):
                for d2 in range(-4, 7):
                    for k1 in range(0, 5):
                        for k2 in range(0, 5):
                            dec = WallDecomposition(n1, d1, k1, n2, d2, k2)
                            rhs = n1 * n2 * (F(d2, n2) - F(d1, n1)) + k2 * (d1 - k1)
                            assert c21(dec) == rhs
                            if k2 == 0 and d1 == k1 and F(d1, n1) < F(d2, n2):
                                assert c21(dec) > 0


def test_brill_noether_splits_over_a_wall():
    # beta(d,k) = beta1 + beta2 + C12 + C21 - 1 for every splitting
    for n1 in range(1, 5):
        for n2 in range(1, 5):
            for d1 in range(0, 6):
                for d2 in range(0, 6):
                    for k1 in range(0, 5):
                        for k2 in range(0, 5):
                            dec = WallDecomposition(n1, d1, k1, n2, d2, k2)
                            total = brill_noether(d1, k1) + brill_noether(d2, k2) + c12(dec) + c21(dec) - 1
                            assert total == brill_noether(d1 + d2, k1 + k2)


def test_flip_locus_dims():
    assert flip_locus_dim(SINGLE_WALL, "minus") == 2
    assert flip_locus_dim(SINGLE_WALL, "plus") == 2
    with pytest.raises(ValueError):
        flip_locus_dim(SINGLE_WALL, "sideways")


def test_flip_dim_when_c21_is_one():
    for n in range(2, 9):
        for d in range(1, 9):
            for k in range(1, 9):
                for dec in candidate_decompositions(n, d, k):
                    if dec.c21 == 1:
                        assert flip_locus_dim(dec, "minus") == brill_noether(dec.d1, dec.k1) + brill_noether(dec.d2, dec.k2)


def test_section_degree_filter():
    assert section_degree_filter(SINGLE_WALL)
    assert not section_degree_filter(WallDecomposition(1, 0, 1, 2, 3, 0))
    assert not section_degree_filter(WallDecomposition(2, 1, 2, 1, 2, 0))


def test_point_factor_is_excluded():
    # (1,0,1) as first factor always lands on alpha = d/(n-k) or has no valid denominator
    for n in range(2, 9):
        for d in range(1, 9):
            for k in range(1, 9):
                assert all((x.n1, x.d1, x.k1) != (1, 0, 1) for x in candidate_decompositions(n, d, k))


def test_sweep_invariants():
    for n in range(2, 9):
        for d in range(1, 9):
            for k in range(1, 9):
                walls = enumerate_walls(n, d, k)
                alphas = [w.alpha for w in walls]
                assert alphas == sorted(set(alphas))
                for w in walls:
                    assert w.alpha > 0 and (n - k) * w.alpha < d
                    for dec in w.decompositions:
                        assert dec.alpha == w.alpha
                        assert dec.c12 > 0 and dec.c21 > 0
                        assert section_degree_filter(dec)
                        assert brill_noether(d, k) - flip_locus_dim(dec, "minus") >= w.min_c12
                        assert dec.n1 + dec.n2 == n and dec.d1 + dec.d2 == d and dec.k1 + dec.k2 == k


def test_d3_k2_modular_pattern():
    start = time.perf_counter()
    for n in range(2, 51):
        alphas = [w.alpha for w in enumerate_walls(n, 3, 2)]
        assert alphas == ([F(3, 2 * (n - 1))] if n % 3 == 1 else [])
        assert enumerate_walls(n, 2, 1) == []
    assert time.perf_counter() - start < 5


def test_k_equals_d_coprime_has_no_walls():
    from math import gcd

    for n in range(2, 21):
        for d in range(1, 21):
            if gcd(n, d) == 1:
                assert enumerate_walls(n, d, d) == []
