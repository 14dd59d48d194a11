import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coherent_elliptic.arith import INF
from coherent_elliptic.moduli import (
    EmptyModuliError,
    ExtensionByTrivial,
    KernelPresentation,
    LineBundleSystem,
    ModuliQuery,
    StableBundleNoSections,
    TorsionQuotient,
    alpha_range,
    brill_noether,
    generic_shape,
    is_nonempty,
    moduli_dimension,
)

Q = ModuliQuery
F = Fraction


@pytest.mark.parametrize("d, k, beta", [(3, 2, 3), (5, 0, 1), (7, 3, 13), (0, 0, 1)])
def test_brill_noether(d, k, beta):
    assert brill_noether(d, k) == beta


@pytest.mark.parametrize(
    "query, expected",
    [
        (Q(4, 3, 2, F(1, 2)), True),
        (Q(2, 2, 2, F(1, 3)), False),
        (Q(1, 0, 1, F(5)), True),
        (Q(2, 2, 0), False),
        (Q(3, 2, 0), True),
        (Q(4, 3, 2, F(3, 2)), False),  # boundary of the open interval
        (Q(4, 3, 2, F(0)), False),
        (Q(4, 3, 2, F(-1)), False),
        (Q(2, -1, 1, F(1)), False),
        (Q(1, 2, 3, F(1)), False),
        (Q(1, 3, 3, F(100)), True),
    ],
)
def test_is_nonempty(query, expected):
    assert is_nonempty(query) is expected


def test_alpha_required():
    with pytest.raises(ValueError, match="alpha required"):
        is_nonempty(Q(3, 2, 1))


def test_k0_ignores_alpha():
    for alpha in (None, F(-5), F(0), F(7, 3)):
        assert is_nonempty(Q(3, 2, 0, alpha))
        assert not is_nonempty(Q(4, 2, 0, alpha))


def test_alpha_range_examples():
    iv = alpha_range(4, 3, 2)
    assert not iv.empty and iv.inf == 0 and iv.sup == F(3, 2)
    assert iv.to_json() == {"inf": "0", "sup": "3/2", "open": True}
    iv = alpha_range(3, 7, 5)
    assert iv.sup == INF and iv.to_json() == {"inf": "0", "sup": "inf", "open": True}
    assert alpha_range(2, 2, 2).to_json() == {"empty": True}
    assert alpha_range(3, 2, 0).to_json() == {"all": True}
    assert alpha_range(4, 2, 0).empty
    assert alpha_range(1, 0, 1).sup == INF


def test_interval_consistency_small_grid():
    alphas = sorted({F(p, q) for p in range(1, 9) for q in range(1, 9)})
    for n in range(1, 6):
        for d in range(-5, 6):
            for k in range(0, 6):
                iv = alpha_range(n, d, k)
                for a in alphas:
                    assert is_nonempty(Q(n, d, k, a)) == (a in iv), (n, d, k, a)


def test_monotone_emptiness():
    for n in range(2, 8):
        for d in range(1, 8):
            for k in range(1, n):
                sup = F(d, n - k)
                verdicts = {is_nonempty(Q(n, d, k, sup * F(j, 10))) for j in range(1, 10)}
                assert len(verdicts) == 1


@given(st.integers(1, 10), st.integers(1, 10), st.integers(0, 10), st.integers(1, 10))
def test_dimension_is_rank_independent(n1, d, k, m):
    n2 = n1 + m
    dims = set()
    for n in (n1, n2):
        iv = alpha_range(n, d, k)
        if iv.empty:
            continue
        alpha = F(1) if iv.all_alpha or iv.sup == INF else iv.sup / 2
        dims.add(moduli_dimension(Q(n, d, k, alpha)))
    assert len(dims) <= 1
    if dims:
        assert dims == {k * (d - k) + 1}


def test_moduli_dimension_examples():
    assert moduli_dimension(Q(4, 3, 2, F(1, 2))) == 3
    assert moduli_dimension(Q(5, 3, 0)) == 1
    assert moduli_dimension(Q(1, 5, 2, F(1))) == 7
    with pytest.raises(EmptyModuliError, match="empty moduli space"):
        moduli_dimension(Q(2, 2, 2, F(1)))


@pytest.mark.parametrize(
    "query, shape",
    [
        (Q(3, 5, 2, F(1)), ExtensionByTrivial(k=2, quotient_rank=1, quotient_degree=5)),
        (Q(2, 3, 2, F(1)), TorsionQuotient(length=3)),
        (Q(2, 5, 3, F(1)), KernelPresentation(kernel_rank=1, kernel_degree=-5)),
        (Q(3, 2, 0), StableBundleNoSections()),
        (Q(1, 4, 2, F(1)), LineBundleSystem()),
    ],
)
def test_generic_shape(query, shape):
    assert generic_shape(query) == shape


def test_generic_shape_requires_nonempty():
    with pytest.raises(EmptyModuliError):
        generic_shape(Q(2, 2, 2, F(1)))


def test_shape_bookkeeping():
    # sub + quotient (or total - kernel) reproduces (n, d) in every variant
    for n in range(2, 8):
        for d in range(1, 9):
            for k in range(1, 9):
                iv = alpha_range(n, d, k)
                if iv.empty:
                    continue
                alpha = F(1) if iv.sup == INF else iv.sup / 2
                shape = generic_shape(Q(n, d, k, alpha))
                if isinstance(shape, ExtensionByTrivial):
                    assert (shape.k + shape.quotient_rank, shape.quotient_degree) == (n, d)
                elif isinstance(shape, TorsionQuotient):
                    assert (k, shape.length) == (n, d)
                else:
                    assert (k - shape.kernel_rank, -shape.kernel_degree) == (n, d)


def test_query_validation():
    with pytest.raises(ValueError):
        Q(0, 1, 1)
    with pytest.raises(ValueError):
        Q(2, 1, -1)
    assert Q(2, 1, 1, 1).alpha == F(1)
