import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from eigdiag.classes import (
    ClassTag,
    WeightedGraph,
    classify,
    det_m3,
    det_m3_direct,
    normalize_diagonal_order,
    random_class_i,
    random_class_p,
    signless_laplacian,
)
from eigdiag.errors import DuplicateEdge, IndexOutOfRange, InvalidRange, OrderTooSmall, SelfLoop
from eigdiag.linalg import diag, eigenvalues, make_hermitian, negate
from eigdiag.oracle import oracle_eigenvalues

from conftest import hermitian_matrices

ALL_TAGS = {ClassTag.CLASS_P, ClassTag.CLASS_I, ClassTag.DET_M3_NONNEG, ClassTag.GENERAL}
E_MINUS_I = np.ones((4, 4)) - np.eye(4)


class TestClassify:
    def test_diagonal_is_everything(self):
        assert classify(diag([3, -1, 2])) == ALL_TAGS

    def test_e_minus_i(self):
        tags = classify(make_hermitian(E_MINUS_I))
        assert ClassTag.CLASS_P in tags and ClassTag.CLASS_I not in tags

    def test_imaginary_two_by_two(self):
        tags = classify(make_hermitian([[0, 2j], [-2j, 0]]))
        assert ClassTag.CLASS_I in tags and ClassTag.CLASS_P not in tags

    def test_mixed_entry_is_general_only(self):
        A = make_hermitian([[0, 1 + 1j, 0], [1 - 1j, 0, 1], [0, 1, 0]])
        assert classify(A) == {ClassTag.GENERAL, ClassTag.DET_M3_NONNEG}

    def test_negative_entry_not_p(self):
        A = make_hermitian([[0, -1], [-1, 0]])
        assert ClassTag.CLASS_P not in classify(A)

    def test_roundoff_tolerated(self):
        A = make_hermitian([[0, 1e-14 + 2j], [1e-14 - 2j, 0]])
        assert ClassTag.CLASS_I in classify(A)

    def test_class_p_not_closed_under_negation(self):
        A = make_hermitian(E_MINUS_I)
        assert ClassTag.CLASS_P in classify(A)
        assert ClassTag.CLASS_P not in classify(negate(A))

    @given(hermitian_matrices(kind="I"))
    def test_class_i_closed_under_negation(self, A):
        assert ClassTag.CLASS_I in classify(A)
        assert ClassTag.CLASS_I in classify(negate(A))

    @given(hermitian_matrices())
    def test_negation_preserves_class_i_membership(self, A):
        assert (ClassTag.CLASS_I in classify(A)) == (ClassTag.CLASS_I in classify(negate(A)))


class TestNormalize:
    def test_sorted_is_identity(self):
        A = diag([1, 2, 3])
        S, perm = normalize_diagonal_order(A)
        assert S == A and perm == (1, 2, 3)

    def test_example(self):
        S, perm = normalize_diagonal_order(diag([3, 1, 2]))
        assert perm == (2, 3, 1)
        assert S.diagonal.tolist() == [1, 2, 3]

    def test_ties_are_stable(self):
        _, perm = normalize_diagonal_order(diag([2, 1, 2, 1]))
        assert perm == (2, 4, 1, 3)

    @given(hermitian_matrices(max_n=9))
    def test_invariants(self, A):
        S, perm = normalize_diagonal_order(A)
        assert sorted(perm) == list(range(1, A.n + 1))
        assert np.all(np.diff(S.diagonal) >= 0)
        assert classify(S) == classify(A)
        np.testing.assert_allclose(
            eigenvalues(S).values, eigenvalues(A).values, atol=1e-9 * max(1, A.frobenius_norm)
        )


class TestGenerators:
    @pytest.mark.parametrize("gen", [random_class_p, random_class_i])
    def test_deterministic(self, gen):
        assert gen(6, 99) == gen(6, 99)
        assert gen(6, 99) != gen(6, 100)

    @pytest.mark.parametrize("gen", [random_class_p, random_class_i])
    def test_zero_offdiag_is_diagonal(self, gen):
        A = gen(5, 3, offdiag_max=0.0)
        assert np.count_nonzero(A.data - np.diag(A.data.diagonal())) == 0

    def test_class_p_default(self):
        assert ClassTag.CLASS_P in classify(random_class_p(5, 1))

    @given(st.integers(1, 10), st.integers(0, 2**64 - 1))
    def test_class_i_any_seed(self, n, seed):
        A = random_class_i(n, seed, diag_range=(-3, 2), offdiag_max=4)
        assert ClassTag.CLASS_I in classify(A)
        assert np.all((A.diagonal >= -3) & (A.diagonal <= 2))

    @given(st.integers(1, 10), st.integers(0, 2**64 - 1))
    def test_class_p_any_seed(self, n, seed):
        A = random_class_p(n, seed, quantized=True, diag_range=(0, 1))
        assert ClassTag.CLASS_P in classify(A)
        assert set(np.unique(A.data.real)) <= {0.0, 1.0}

    def test_quantized_class_i_values(self):
        A = random_class_i(8, 5, quantized=True, offdiag_max=2.0)
        off = A.data[~np.eye(8, dtype=bool)]
        assert set(np.unique(off.imag)) <= {-2.0, 0.0, 2.0}

    def test_closed_form_two_by_two(self):
        b = 1.75
        A = make_hermitian([[0, 1j * b], [-1j * b, 0]])
        np.testing.assert_allclose(eigenvalues(A).values, [-b, b], atol=1e-14)

    @pytest.mark.parametrize(
        "kwargs", [dict(n=0), dict(diag_range=(1, 0)), dict(offdiag_max=-1), dict(offdiag_max=float("nan"))]
    )
    def test_invalid(self, kwargs):
        args = dict(n=3, seed=0) | kwargs
        with pytest.raises(InvalidRange):
            random_class_p(**args)


class TestDetM3:
    def test_nonnegative_entries(self):
        assert det_m3(random_class_p(6, 11)) >= 0

    def test_imaginary_entries_give_zero(self):
        A = make_hermitian([[0, 1j, 1j], [-1j, 0, 1j], [-1j, -1j, 0]])
        assert det_m3(A) == 0

    def test_mixed_sign_example(self):
        # direct determinant of [[0,1,-1],[1,0,2],[-1,2,0]] is -4
        A = make_hermitian([[0, 1, -1], [1, 0, 2], [-1, 2, 0]])
        assert det_m3(A) == pytest.approx(-4.0, abs=1e-12)
        assert np.linalg.det([[0, 1, -1], [1, 0, 2], [-1, 2, 0]]) == pytest.approx(-4.0)

    def test_too_small(self):
        with pytest.raises(OrderTooSmall):
            det_m3(diag([1, 2]))

    def test_uses_sorted_block(self):
        # diagonal order puts index 4 first, so the block is rows/cols (4, 1, 2)
        raw = np.zeros((4, 4))
        raw[np.diag_indices(4)] = [1, 2, 3, 0]
        raw[0, 1] = raw[1, 0] = -1
        raw[3, 0] = raw[0, 3] = 1
        raw[3, 1] = raw[1, 3] = 1
        assert det_m3(make_hermitian(raw)) == pytest.approx(2 * 1 * -1 * 1)

    @given(hermitian_matrices(min_n=3, max_n=7))
    def test_closed_form_matches_determinant(self, A):
        tol = 1e-12 * max(1.0, A.maxabs) ** 3
        assert abs(det_m3(A) - det_m3_direct(A)) <= tol

    @given(hermitian_matrices(min_n=3, max_n=7, kind="I"))
    def test_class_i_zero(self, A):
        assert abs(det_m3(A)) <= 1e-12 * max(1.0, A.maxabs) ** 3


class TestSignlessLaplacian:
    def test_edgeless(self):
        Q = signless_laplacian(WeightedGraph(3))
        assert np.count_nonzero(Q.data) == 0

    def test_single_edge(self):
        w = 2.5
        Q = signless_laplacian(WeightedGraph(2, ((1, 2, w),)))
        np.testing.assert_array_equal(Q.data, [[w, w], [w, w]])
        np.testing.assert_allclose(eigenvalues(Q).values, [0, 2 * w], atol=1e-14)

    def test_triangle(self):
        Q = signless_laplacian(WeightedGraph(3, ((1, 2, 1), (2, 3, 1), (1, 3, 1))))
        assert Q.diagonal.tolist() == [2, 2, 2]
        np.testing.assert_allclose(oracle_eigenvalues(Q).values, [1, 1, 4], atol=1e-12)
        np.testing.assert_allclose(eigenvalues(Q).values, [1, 1, 4], atol=1e-12)

    def test_isolated_vertex(self):
        Q = signless_laplacian(WeightedGraph(3, ((1, 2, 1.0),)))
        assert np.count_nonzero(Q.data[2]) == 0

    @pytest.mark.parametrize(
        "edges, exc",
        [
            (((1, 1, 1.0),), SelfLoop),
            (((1, 2, 1.0), (2, 1, 3.0)), DuplicateEdge),
            (((1, 5, 1.0),), IndexOutOfRange),
            (((1, 2, 0.0),), InvalidRange),
        ],
    )
    def test_invalid_graphs(self, edges, exc):
        with pytest.raises(exc):
            WeightedGraph(3, edges)

    @given(
        st.integers(1, 9).flatmap(
            lambda n: st.tuples(
                st.just(n),
                st.dictionaries(
                    st.tuples(st.integers(1, n), st.integers(1, n)).filter(lambda e: e[0] < e[1]),
                    st.floats(0.01, 10),
                ),
            )
        )
    )
    def test_psd_and_class_p(self, graph):
        n, weights = graph
        Q = signless_laplacian(WeightedGraph(n, tuple((u, v, w) for (u, v), w in weights.items())))
        assert ClassTag.CLASS_P in classify(Q)
        assert eigenvalues(Q).values.min() >= -1e-9
