import pytest

from steenrod_kit.bar import (
    Permutation,
    bar_boundary,
    bar_boundary_coefficients,
    block_compose,
    block_permutation,
    e,
    eta,
    twist_act,
)
from steenrod_kit.chains import BarElement, Chain, Simplex, TensorPair
from steenrod_kit.rings import ZZ


def test_eta_signs():
    assert [eta(k) for k in range(7)] == [1, 1, -1, -1, 1, 1, -1]


def test_bar_boundary_squares_to_zero():
    for n in range(1, 8):
        for twist in (False, True):
            b = BarElement(twist, n)
            first = bar_boundary(b, ZZ)
            acc = Chain(ZZ, n - 2, {}) if n >= 2 else None
            if n == 1:
                continue
            for elt, coeff in first.terms.items():
                acc = acc + bar_boundary(elt, ZZ).scale(coeff)
            assert acc.is_zero(), f"∂∂ ≠ 0 at level {n}"


def test_bar_boundary_coefficients_shape():
    assert bar_boundary_coefficients(1) == (-1, 1)
    for n in range(2, 6):
        plain, twisted = bar_boundary_coefficients(n)
        assert plain == 1 and twisted == (1 if n % 2 == 0 else -1)


def test_twist_act_koszul_sign():
    pair = TensorPair(Simplex((0, 1)), Simplex((1, 2)))  # degrees 1, 1
    c = Chain(ZZ, 2, {pair: 1})
    swapped = twist_act(c)
    key = TensorPair(Simplex((1, 2)), Simplex((0, 1)))
    assert swapped.terms == {key: -1}
    # involution: T² = 1
    assert twist_act(swapped) == c


def test_permutation_composition():
    s = Permutation((2, 1, 3))
    assert s.compose(s) == Permutation.identity(3)
    assert Permutation.transposition(3, 1, 3) == Permutation((3, 2, 1))
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))


def test_block_permutation():
    swap = Permutation((2, 1))
    # blocks of sizes (2, 1): the first block of two letters moves past one
    blocked = block_permutation(swap, (2, 1))
    assert blocked.images == (2, 3, 1)
    assert block_permutation(swap, (1, 1)) == swap


def test_block_compose():
    outer = Permutation((2, 1))
    inner = [Permutation.identity(1), Permutation((2, 1))]
    composed = block_compose(outer, inner)
    assert composed.size == 3
    assert sorted(composed.images) == [1, 2, 3]
