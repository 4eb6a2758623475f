import pytest
from hypothesis import given, settings, strategies as st

from qschur.linalg import (
    Matrix,
    column_kernel,
    intersect,
    left_kernel,
    rank,
    solve_upper,
    span,
)
from qschur.scalars import ScalarContext


@pytest.fixture(scope="module")
def ctx():
    return ScalarContext(2)


def _m(ctx, rows):
    out = Matrix(ctx, len(rows), len(rows[0]) if rows else 0)
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            out.set_entry(i, j, ctx.scalar(v))
    return out


def test_matmul_and_identity(ctx):
    a = _m(ctx, [[1, 2], [3, 4]])
    eye = Matrix.identity(ctx, 2)
    assert a * eye == a
    b = _m(ctx, [[0, 1], [1, 0]])
    assert (a * b) == _m(ctx, [[2, 1], [4, 3]])


def test_kron_indexing(ctx):
    a = _m(ctx, [[0, 1], [0, 0]])
    b = Matrix.identity(ctx, 3)
    k = a.kron(b)
    assert k.nrows == 6
    assert k.entry(0, 3).is_one()  # (0,0) x (0,0) block structure
    assert k.entry(1, 4).is_one()


def test_apply_row_col(ctx):
    a = _m(ctx, [[1, 2], [3, 4]])
    assert a.apply_row({0: ctx.one}) == {0: ctx.one, 1: ctx.scalar(2)}
    assert a.apply_col({0: ctx.one}) == {0: ctx.one, 1: ctx.scalar(3)}


def test_subspace_rref_canonical(ctx):
    b1 = span(ctx, 3, [{0: ctx.one, 1: ctx.one}, {1: ctx.one, 2: ctx.one}])
    b2 = span(
        ctx, 3,
        [{0: ctx.one, 1: ctx.scalar(2), 2: ctx.one},
         {0: ctx.scalar(2), 1: ctx.scalar(3), 2: ctx.one}],
    )
    # same subspace reached from different spanning sets
    assert b1 == b2
    assert b1.dim == 2


def test_reduce_and_contains(ctx):
    b = span(ctx, 3, [{0: ctx.one, 2: ctx.one}])
    assert b.contains({0: ctx.scalar(5), 2: ctx.scalar(5)})
    assert not b.contains({0: ctx.one})
    resid = b.reduce({0: ctx.one, 1: ctx.one, 2: ctx.one})
    assert 1 in resid and 0 not in resid


def test_solve_upper(ctx):
    rows = [{0: ctx.one, 2: ctx.scalar(3)}, {1: ctx.one}]
    b = span(ctx, 3, rows)
    v = {0: ctx.scalar(2), 1: ctx.scalar(-1), 2: ctx.scalar(6)}
    coords = solve_upper(b, v)
    assert coords == {0: ctx.scalar(2), 1: ctx.scalar(-1)}
    assert solve_upper(b, {2: ctx.one}) is None


def test_kernels(ctx):
    m = _m(ctx, [[1, 2, 3], [2, 4, 6]])
    ker = column_kernel(m)
    assert len(ker) == 2
    for v in ker:
        assert not m.apply_col(v)
    lk = left_kernel(m)
    assert len(lk) == 1
    assert rank(m) == 1


def test_intersection(ctx):
    a = span(ctx, 3, [{0: ctx.one}, {1: ctx.one}])
    b = span(ctx, 3, [{1: ctx.one}, {2: ctx.one}])
    c = intersect(a, b)
    assert c.dim == 1
    assert c.contains({1: ctx.one})


def test_triplet_round_trip(ctx):
    m = _m(ctx, [[1, 0], [0, -2]])
    trip = m.to_triplets()
    back = Matrix.from_triplets(ctx, 2, 2, trip)
    assert back == m


_CTX = ScalarContext(2)

vec_strategy = st.dictionaries(
    st.integers(0, 5),
    st.integers(-3, 3).filter(bool).map(_CTX.scalar),
    max_size=4,
)


@settings(max_examples=60, deadline=None)
@given(st.lists(vec_strategy, min_size=1, max_size=6))
def test_rref_invariants(vectors):
    b = span(_CTX, 6, vectors)
    # pivot rows are monic at their pivot and vanish at every other pivot
    for j, row in b.pivots.items():
        assert row[j].is_one()
        assert min(row) == j
        for other in b.pivots:
            if other != j:
                assert other not in row
    # every spanning vector reduces to zero, and reduction is idempotent
    for v in vectors:
        assert not b.reduce(v)
    probe = {0: _CTX.one, 3: _CTX.scalar(2), 5: _CTX.scalar(-1)}
    r1 = b.reduce(probe)
    assert b.reduce(r1) == r1
    # adding a contained vector never grows the basis
    dim = b.dim
    for v in vectors:
        assert not b.add(v)
    assert b.dim == dim
