import random

import pytest
from hypothesis import given, settings, strategies as st

from steenrod_kit.linalg import (
    F2SpanSolver,
    SpanSolver,
    f2_kernel,
    f2_pack,
    f2_rref,
    f2_unpack,
    field_kernel,
    integer_kernel,
    integer_solve,
    rref_field,
    smith_normal_form,
)
from steenrod_kit.rings import F2, F5, QQ


def _mat_mul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


small_matrix = st.lists(
    st.lists(st.integers(-6, 6), min_size=1, max_size=4),
    min_size=1,
    max_size=4,
).filter(lambda rows: len({len(r) for r in rows}) == 1)


@settings(max_examples=60, deadline=None)
@given(small_matrix)
def test_smith_normal_form_properties(a):
    d, u, uinv, v = smith_normal_form(a)
    # U·A·V = D
    assert _mat_mul(_mat_mul(u, a), v) == d
    # U·Uinv = identity
    n = len(a)
    assert _mat_mul(u, uinv) == [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    # diagonal with divisibility
    for i, row in enumerate(d):
        for j, x in enumerate(row):
            if i != j:
                assert x == 0
    diag = [d[i][i] for i in range(min(len(d), len(d[0])))]
    for x, y in zip(diag, diag[1:]):
        if x != 0 and y != 0:
            assert y % x == 0
        assert not (x == 0 and y != 0)
    assert all(x >= 0 for x in diag)


def test_integer_kernel_and_solve():
    a = [[2, 4, 6], [1, 2, 3]]
    kern = integer_kernel(a, 3)
    assert len(kern) == 2
    for vec in kern:
        assert all(sum(row[j] * vec[j] for j in range(3)) == 0 for row in a)
    x = integer_solve(a, 3, [2, 1])
    assert x is not None and sum(a[0][j] * x[j] for j in range(3)) == 2
    assert integer_solve(a, 3, [1, 1]) is None  # incompatible
    assert integer_solve([[2]], 1, [1]) is None  # 2x = 1 has no integer solution


def test_rref_and_kernel_over_fields():
    rows = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    red, pivots = rref_field([[QQ.coerce(x) for x in r] for r in rows], 3, QQ)
    assert pivots == [0, 1]
    kern = field_kernel([[F5.coerce(x) for x in r] for r in rows], 3, F5)
    assert len(kern) == 1
    for row in rows:
        assert F5.is_zero(sum(F5.coerce(x) * k for x, k in zip(row, kern[0])))


def test_span_solver():
    gens = [[QQ.coerce(1), QQ.coerce(0)], [QQ.coerce(1), QQ.coerce(1)]]
    solver = SpanSolver(gens, 2, QQ)
    coeffs = solver.express([QQ.coerce(3), QQ.coerce(2)])
    assert coeffs is not None
    combo = [sum(c * g[i] for c, g in zip(coeffs, gens)) for i in range(2)]
    assert combo == [3, 2]
    # outside a 1-dim span
    solver1 = SpanSolver([gens[0]], 2, QQ)
    assert solver1.express([QQ.coerce(0), QQ.coerce(1)]) is None


def test_f2_bitset_roundtrip_and_rref():
    vec = [1, 0, 1, 1]
    assert f2_unpack(f2_pack(vec), 4) == vec
    rows = [f2_pack([1, 1, 0]), f2_pack([0, 1, 1]), f2_pack([1, 0, 1])]
    red, pivots = f2_rref(rows, 3)
    assert len(pivots) == 2
    kern = f2_kernel(rows, 3)
    assert len(kern) == 1
    assert f2_unpack(kern[0], 3) == [1, 1, 1]


def test_f2_span_solver():
    gens = [f2_pack([1, 1, 0]), f2_pack([0, 1, 1])]
    solver = F2SpanSolver(gens, 3)
    coeffs = solver.express(f2_pack([1, 0, 1]))
    assert coeffs is not None and f2_unpack(coeffs, 2) == [1, 1]
    assert solver.express(f2_pack([1, 0, 0])) is None


@settings(max_examples=40, deadline=None)
@given(small_matrix, st.integers(0, 10**6))
def test_integer_kernel_is_actual_kernel(a, seed):
    ncols = len(a[0])
    kern = integer_kernel(a, ncols)
    rng = random.Random(seed)
    if kern:
        weights = [rng.randint(-3, 3) for _ in kern]
        combo = [sum(w * vec[j] for w, vec in zip(weights, kern)) for j in range(ncols)]
        assert all(sum(row[j] * combo[j] for j in range(ncols)) == 0 for row in a)
