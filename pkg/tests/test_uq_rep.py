import pytest

from qschur.affine_hecke import hecke_regular_module, one_dimensional_module
from qschur.affinization import verify_finite_relations
from qschur.linalg import Matrix, column_kernel
from qschur.module_tools import spin_module
from qschur.scalars import ScalarContext
from qschur.uq_rep import (
    fundamental_weight,
    highest_weight_vectors,
    jimbo_J,
    natural_rep,
    rcheck,
    rcheck_i,
    tensor_rep,
    weight_decomposition,
    weight_level,
)


@pytest.fixture(scope="module")
def ctx1():
    return ScalarContext(1)


@pytest.fixture(scope="module")
def ctx2():
    return ScalarContext(2)


def test_natural_rep_n1(ctx1):
    V = natural_rep(ctx1, 1)
    assert V.xp[0].entry(0, 1).is_one() and V.xp[0].nnz() == 1
    assert V.xm[0].entry(1, 0).is_one() and V.xm[0].nnz() == 1
    assert V.k[0].entry(0, 0) == ctx1.q
    assert V.k[0].entry(1, 1) == ctx1.q_power(-1)


def test_natural_rep_theta_n2(ctx2):
    V = natural_rep(ctx2, 2)
    assert V.xtheta_p.entry(0, 2).is_one() and V.xtheta_p.nnz() == 1
    assert V.xtheta_m.entry(2, 0).is_one() and V.xtheta_m.nnz() == 1
    # k_theta = k_1 k_2
    assert V.ktheta == V.k[0] * V.k[1]


def test_torus_product_is_identity():
    for n in (1, 2, 3):
        c = ScalarContext(n)
        V = natural_rep(c, n)
        prod = V.t[0]
        for m in V.t[1:]:
            prod = prod * m
        assert prod == Matrix.identity(c, n + 1)


def test_torus_vs_k():
    for n in (1, 2):
        c = ScalarContext(n)
        V = natural_rep(c, n)
        for i in range(1, n + 1):
            tinv = Matrix.diagonal(
                c, [V.t[i].entry(r, r).inverse() for r in range(n + 1)]
            )
            assert V.k[i - 1] == V.t[i - 1] * tinv


def test_natural_rep_satisfies_finite_relations():
    for n in (1, 2, 3):
        c = ScalarContext(n)
        rep = verify_finite_relations(natural_rep(c, n))
        assert rep.passed, rep.failures()


def test_tensor_action_example(ctx1):
    # x_1^+ (v_2 (x) v_1) = q v_1 (x) v_1
    T = tensor_rep(natural_rep(ctx1, 1), 2)
    out = T.xp[0].apply_col({2: ctx1.one})
    assert out == {0: ctx1.q}


def test_tensor_k_eigenvalues(ctx1):
    T = tensor_rep(natural_rep(ctx1, 1), 2)
    assert T.k[0].entry(0, 0) == ctx1.q_power(2)
    assert T.k[0].entry(3, 3) == ctx1.q_power(-2)


def test_tensor_ell_one_is_base(ctx1):
    V = natural_rep(ctx1, 1)
    assert tensor_rep(V, 1) is V


@pytest.mark.parametrize("n,ell", [(1, 2), (1, 3), (2, 2), (2, 3)])
def test_tensor_satisfies_finite_relations(n, ell):
    c = ScalarContext(n)
    rep = verify_finite_relations(tensor_rep(natural_rep(c, n), ell))
    assert rep.passed, rep.failures()


def test_rcheck_matrix_n1(ctx1):
    R = rcheck(ctx1, 1)
    q = ctx1.q
    q2 = ctx1.q_power(2)
    # basis order (v1v1, v1v2, v2v1, v2v2)
    assert R.apply_col({0: ctx1.one}) == {0: q2}
    assert R.apply_col({1: ctx1.one}) == {2: q}
    assert R.apply_col({2: ctx1.one}) == {1: q, 2: q2 - 1}
    assert R.apply_col({3: ctx1.one}) == {3: q2}


def test_rcheck_quadratic(ctx2):
    R = rcheck(ctx2, 2)
    eye = Matrix.identity(ctx2, 9)
    assert ((R + eye) * (R - eye.scale(ctx2.q_power(2)))).is_zero()


def test_rcheck_eigenvalue_multiplicities(ctx1):
    # for n=1 the eigenvalues are q^2 (multiplicity 3) and -1 (multiplicity 1)
    R = rcheck(ctx1, 1)
    eye = Matrix.identity(ctx1, 4)
    assert len(column_kernel(R - eye.scale(ctx1.q_power(2)))) == 3
    assert len(column_kernel(R + eye)) == 1


@pytest.mark.parametrize("n,ell", [(1, 3), (2, 3), (3, 2)])
def test_rcheck_commutes_with_quantum_group(n, ell):
    c = ScalarContext(n)
    T = tensor_rep(natural_rep(c, n), ell)
    for i in range(1, ell):
        Ri = rcheck_i(c, n, ell, i)
        for name, g in T.generators().items():
            assert (Ri * g - g * Ri).is_zero(), (i, name)


def test_rcheck_braid(ctx2):
    R1 = rcheck_i(ctx2, 2, 3, 1)
    R2 = rcheck_i(ctx2, 2, 3, 2)
    assert R1 * R2 * R1 == R2 * R1 * R2


def test_rcheck_index_range(ctx2):
    with pytest.raises(ValueError):
        rcheck_i(ctx2, 2, 3, 3)


# -- Jimbo functor ------------------------------------------------------------


@pytest.mark.parametrize("n,ell", [(1, 2), (2, 2), (2, 3), (3, 2)])
def test_jimbo_regular_dimension(n, ell):
    c = ScalarContext(n)
    img = jimbo_J(hecke_regular_module(c, ell), n)
    assert img.module.dim == (n + 1) ** ell


def test_jimbo_sign_module(ctx2):
    img = jimbo_J(one_dimensional_module(ctx2, 2, -1), 2)
    assert img.module.dim == 3
    hw = highest_weight_vectors(img.module)
    assert list(hw) == [fundamental_weight(2, 2)]
    assert len(hw[fundamental_weight(2, 2)]) == 1


def test_jimbo_trivial_module(ctx2):
    img = jimbo_J(one_dimensional_module(ctx2, 2, ctx2.q_power(2)), 2)
    assert img.module.dim == 6
    hw = highest_weight_vectors(img.module)
    assert list(hw) == [(2, 0)]


def test_jimbo_output_satisfies_relations(ctx2):
    img = jimbo_J(one_dimensional_module(ctx2, 2, -1), 2)
    rep = verify_finite_relations(img.module)
    assert rep.passed, rep.failures()


# -- weight tools ------------------------------------------------------------


def test_highest_weight_vectors_tensor_square(ctx1):
    T = tensor_rep(natural_rep(ctx1, 1), 2)
    hw = highest_weight_vectors(T)
    assert set(hw) == {(2,), (0,)}
    v = hw[(0,)][0]
    c1, c2 = v[1], v[2]
    assert c2 / c1 == -ctx1.q_power(-1)


def test_weight_of_top_vector(ctx1):
    T = tensor_rep(natural_rep(ctx1, 1), 2)
    assert T.weights[0] == (2,)  # v1 (x) v1 has weight 2 eps_1


def test_weight_level():
    assert weight_level(fundamental_weight(3, 2)) == 2
    assert weight_level((2, 0)) == 2
    assert weight_level((0, 1, 0)) == 2


def test_weight_decomposition_covers_basis(ctx2):
    T = tensor_rep(natural_rep(ctx2, 2), 2)
    decomp = weight_decomposition(T)
    assert sum(len(v) for v in decomp.values()) == T.dim


def test_weights_are_symmetric_multisets(ctx2):
    # weights of J(regular) match the full tensor power weight multiset
    img = jimbo_J(hecke_regular_module(ctx2, 2), 2)
    T = tensor_rep(natural_rep(ctx2, 2), 2)
    assert sorted(img.module.weights) == sorted(T.weights)


def test_distinct_tensor_basis_vector_generates_everything(ctx2):
    # a pure tensor with distinct factors is cyclic for the whole power
    T = tensor_rep(natural_rep(ctx2, 2), 2)
    idx = 0 * 3 + 1  # v_1 (x) v_2
    assert spin_module(T, {idx: ctx2.one}).dim == T.dim


def test_weight_tools_bundle(ctx1):
    from qschur.uq_rep import weight_tools

    T = tensor_rep(natural_rep(ctx1, 1), 2)
    report = weight_tools(T)
    assert report.dim == T.dim
    assert set(report.highest) == {(2,), (0,)}
    assert report.levels == {(2,): 2, (0,): 0}
